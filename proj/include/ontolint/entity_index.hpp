#pragma once
// Punning-aware entity classification and taxonomy queries.

#include <map>
#include <set>

#include "ontolint/graph.hpp"
#include "ontolint/vocabulary.hpp"

namespace ontolint {

struct EntityRoles {
    bool isClass = false;
    bool isIndividual = false;
    bool isObjectProp = false;
    bool isAnnotationProp = false;
    bool isDatatypeProp = false;
    std::set<std::string> declaringDocuments;

    bool is_punned() const { return isClass && isIndividual; }
    bool is_property() const { return isObjectProp || isAnnotationProp || isDatatypeProp; }
};

class EntityIndex {
public:
    const std::map<Iri, EntityRoles>& entries() const { return entries_; }

    const EntityRoles& roles(const Iri& iri) const;
    bool is_class(const Iri& iri) const { return roles(iri).isClass; }
    bool is_individual(const Iri& iri) const { return roles(iri).isIndividual; }
    bool is_punned(const Iri& iri) const { return roles(iri).is_punned(); }

    std::vector<Iri> classes() const;
    std::vector<Iri> individuals() const;
    std::vector<Iri> punned() const;

private:
    friend EntityIndex classify_entities(const Graph&, const Vocabulary&);
    std::map<Iri, EntityRoles> entries_;
};

// Builds the role index from explicit declarations, subclass axioms, and
// type assertions. Blank nodes are never indexed; typing something with a
// declaration class (owl:Class, owl:NamedIndividual, ...) is a declaration,
// not categorization.
EntityIndex classify_entities(const Graph& g, const Vocabulary& v);

struct SubclassClosure {
    std::set<Iri> classes;  // includes the queried class itself
    bool cyclic = false;
};

// All classes reachable from `c` via zero or more inverse subClassOf steps.
// Tolerates cyclic hierarchies; the cycle is surfaced as a flag.
SubclassClosure subclass_closure(const Graph& g, const Vocabulary& v, const Iri& c);

// Individuals typed into `c` (transitive: into any class of its subclass
// closure). Named-individual declaration triples are never counted as types.
std::set<Iri> instances_of(const Graph& g, const Vocabulary& v, const Iri& c, bool transitive);

// Direct subclasses of `c` (subjects of subClassOf assertions onto c).
std::set<Iri> direct_subclasses(const Graph& g, const Vocabulary& v, const Iri& c);

}  // namespace ontolint
