#pragma once
// Configurable vocabulary: every property/class IRI the rules and reports
// reference, with defaults that match the bundled fixtures.

#include <map>
#include <string>
#include <vector>

#include "ontolint/term.hpp"

namespace ontolint {

enum class SpaceOrientation { ArtifactToSpace, SpaceToArtifact, Both };

struct Vocabulary {
    // Core RDF/RDFS/OWL roles.
    Iri typeProp{std::string(ns::rdf) + "type"};
    Iri subClassProp{std::string(ns::rdfs) + "subClassOf"};
    Iri commentProp{std::string(ns::rdfs) + "comment"};
    Iri labelProp{std::string(ns::rdfs) + "label"};
    Iri classDecl{std::string(ns::owl) + "Class"};
    Iri namedIndividualDecl{std::string(ns::owl) + "NamedIndividual"};
    Iri objectPropDecl{std::string(ns::owl) + "ObjectProperty"};
    Iri annotationPropDecl{std::string(ns::owl) + "AnnotationProperty"};
    Iri datatypePropDecl{std::string(ns::owl) + "DatatypeProperty"};
    Iri ontologyDecl{std::string(ns::owl) + "Ontology"};
    Iri importsProp{std::string(ns::owl) + "imports"};
    Iri disjointProp{std::string(ns::owl) + "disjointWith"};
    Iri allDisjointClassesDecl{std::string(ns::owl) + "AllDisjointClasses"};
    Iri membersProp{std::string(ns::owl) + "members"};

    // Knowledge-resource linking.
    Iri foafPrimaryTopicOf{std::string(ns::foaf) + "isPrimaryTopicOf"};
    Iri foafPage{std::string(ns::foaf) + "page"};

    // Domain properties.
    Iri hasArea{"http://example.org/onto/tbox#hasArea"};
    Iri hasSpace{"http://example.org/onto/tbox#hasSpace"};
    Iri conformsTo{"http://example.org/onto/tbox#conformsTo"};
    Iri elementOf{"http://example.org/onto/tbox#elementOf"};
    Iri definedBy{"http://example.org/onto/tbox#definedBy"};
    Iri transforms{"http://example.org/onto/tbox#transforms"};
    Iri processedBy{"http://example.org/onto/tbox#processedBy"};
    Iri uses{"http://example.org/onto/tbox#uses"};
    Iri hasPart{"http://example.org/onto/tbox#hasPart"};
    Iri extends{"http://example.org/onto/tbox#extends"};
    Iri isSpecifiedBy{"http://example.org/onto/tbox#isSpecifiedBy"};
    Iri serves{"http://example.org/onto/tbox#serves"};
    Iri hasBibTeX{"http://example.org/onto/tbox#hasBibTeX"};

    // Root classes per top-level entity type.
    Iri languageRoot{"http://example.org/onto/tbox#Language"};
    Iri toolRoot{"http://example.org/onto/tbox#Tool"};
    Iri artifactRoot{"http://example.org/onto/tbox#Artifact"};
    Iri formalEntityRoot{"http://example.org/onto/tbox#FormalEntity"};
    Iri conceptualEntityRoot{"http://example.org/onto/tbox#ConceptualEntity"};
    Iri technologicalSpaceRoot{"http://example.org/onto/tbox#TechnologicalSpace"};
    Iri seActivityRoot{"http://example.org/onto/tbox#EngineeringActivity"};
    Iri methodologicalApproachRoot{"http://example.org/onto/tbox#MethodologicalApproach"};
    Iri languageConceptRoot{"http://example.org/onto/tbox#LanguageConcept"};
    Iri programmingLanguageClass{"http://example.org/onto/tbox#ProgrammingLanguage"};

    // Issue vocabulary.
    Iri issueClass{"http://example.org/onto/issues#Issue"};
    Iri issueTarget{"http://example.org/onto/issues#target"};
    Iri issueCritique{"http://example.org/onto/issues#critique"};
    Iri issueSuggestion{"http://example.org/onto/issues#suggestion"};
    Iri issueResolveAfter{"http://example.org/onto/issues#resolveAfter"};
    Iri issueStatus{"http://example.org/onto/issues#status"};

    // Accepted orientations of the space association.
    SpaceOrientation hasSpaceOrientation = SpaceOrientation::Both;

    // Additional predicates excluded from "usage" (on top of the built-in
    // taxonomic/annotation/constraint set).
    std::vector<Iri> excludedPredicates;

    // True if the IRI is one of the declaration classes; such typings are
    // declarations, not categorization.
    bool is_declaration_class(const Iri& iri) const;

    // Named access for override files; returns false for unknown keys.
    bool set(const std::string& key, const std::string& value, std::string* error);

    // All settable keys in declaration order (for diagnostics and docs).
    static std::vector<std::string> keys();

    // Problems with the current entries (non-absolute IRIs, duplicate roles).
    std::vector<std::string> validate() const;
};

// Parses a key = value override file ('#' comments, blank lines allowed)
// and applies it on top of the given vocabulary. Throws std::runtime_error
// with a line-tagged message on malformed input or unknown keys.
Vocabulary load_vocabulary_overrides(const std::string& path, Vocabulary base,
                                     std::map<std::string, std::string>* extra_settings = nullptr);

}  // namespace ontolint
