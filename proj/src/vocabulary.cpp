#include "ontolint/vocabulary.hpp"

#include <fstream>
#include <sstream>

namespace ontolint {

namespace {

struct Entry {
    const char* key;
    Iri Vocabulary::* member;
};

const Entry kEntries[] = {
    {"typeProp", &Vocabulary::typeProp},
    {"subClassProp", &Vocabulary::subClassProp},
    {"commentProp", &Vocabulary::commentProp},
    {"labelProp", &Vocabulary::labelProp},
    {"classDecl", &Vocabulary::classDecl},
    {"namedIndividualDecl", &Vocabulary::namedIndividualDecl},
    {"objectPropDecl", &Vocabulary::objectPropDecl},
    {"annotationPropDecl", &Vocabulary::annotationPropDecl},
    {"datatypePropDecl", &Vocabulary::datatypePropDecl},
    {"ontologyDecl", &Vocabulary::ontologyDecl},
    {"importsProp", &Vocabulary::importsProp},
    {"disjointProp", &Vocabulary::disjointProp},
    {"allDisjointClassesDecl", &Vocabulary::allDisjointClassesDecl},
    {"membersProp", &Vocabulary::membersProp},
    {"foafPrimaryTopicOf", &Vocabulary::foafPrimaryTopicOf},
    {"foafPage", &Vocabulary::foafPage},
    {"hasArea", &Vocabulary::hasArea},
    {"hasSpace", &Vocabulary::hasSpace},
    {"conformsTo", &Vocabulary::conformsTo},
    {"elementOf", &Vocabulary::elementOf},
    {"definedBy", &Vocabulary::definedBy},
    {"transforms", &Vocabulary::transforms},
    {"processedBy", &Vocabulary::processedBy},
    {"uses", &Vocabulary::uses},
    {"hasPart", &Vocabulary::hasPart},
    {"extends", &Vocabulary::extends},
    {"isSpecifiedBy", &Vocabulary::isSpecifiedBy},
    {"serves", &Vocabulary::serves},
    {"hasBibTeX", &Vocabulary::hasBibTeX},
    {"languageRoot", &Vocabulary::languageRoot},
    {"toolRoot", &Vocabulary::toolRoot},
    {"artifactRoot", &Vocabulary::artifactRoot},
    {"formalEntityRoot", &Vocabulary::formalEntityRoot},
    {"conceptualEntityRoot", &Vocabulary::conceptualEntityRoot},
    {"technologicalSpaceRoot", &Vocabulary::technologicalSpaceRoot},
    {"seActivityRoot", &Vocabulary::seActivityRoot},
    {"methodologicalApproachRoot", &Vocabulary::methodologicalApproachRoot},
    {"languageConceptRoot", &Vocabulary::languageConceptRoot},
    {"programmingLanguageClass", &Vocabulary::programmingLanguageClass},
    {"issueClass", &Vocabulary::issueClass},
    {"issueTarget", &Vocabulary::issueTarget},
    {"issueCritique", &Vocabulary::issueCritique},
    {"issueSuggestion", &Vocabulary::issueSuggestion},
    {"issueResolveAfter", &Vocabulary::issueResolveAfter},
    {"issueStatus", &Vocabulary::issueStatus},
};

std::string trim(const std::string& s) {
    auto begin = s.find_first_not_of(" \t\r\n");
    if (begin == std::string::npos) return "";
    auto end = s.find_last_not_of(" \t\r\n");
    return s.substr(begin, end - begin + 1);
}

}  // namespace

bool Vocabulary::is_declaration_class(const Iri& iri) const {
    return iri == classDecl || iri == namedIndividualDecl || iri == objectPropDecl ||
           iri == annotationPropDecl || iri == datatypePropDecl || iri == ontologyDecl ||
           iri == allDisjointClassesDecl;
}

bool Vocabulary::set(const std::string& key, const std::string& value, std::string* error) {
    if (key == "excludedPredicates") {
        excludedPredicates.clear();
        std::istringstream in(value);
        std::string item;
        while (std::getline(in, item, ',')) {
            item = trim(item);
            if (item.empty()) continue;
            if (!is_absolute_iri(item)) {
                if (error) *error = "excludedPredicates entry is not an absolute IRI: '" + item + "'";
                return false;
            }
            excludedPredicates.emplace_back(item);
        }
        return true;
    }
    if (key == "hasSpaceOrientation") {
        if (value == "artifactToSpace")
            hasSpaceOrientation = SpaceOrientation::ArtifactToSpace;
        else if (value == "spaceToArtifact")
            hasSpaceOrientation = SpaceOrientation::SpaceToArtifact;
        else if (value == "both")
            hasSpaceOrientation = SpaceOrientation::Both;
        else {
            if (error)
                *error = "invalid hasSpaceOrientation '" + value +
                         "' (expected artifactToSpace, spaceToArtifact, or both)";
            return false;
        }
        return true;
    }
    for (const Entry& e : kEntries) {
        if (key == e.key) {
            if (!is_absolute_iri(value)) {
                if (error) *error = "value for " + key + " is not an absolute IRI: '" + value + "'";
                return false;
            }
            this->*(e.member) = Iri(value);
            return true;
        }
    }
    if (error) *error = "unknown vocabulary key '" + key + "'";
    return false;
}

std::vector<std::string> Vocabulary::keys() {
    std::vector<std::string> out;
    for (const Entry& e : kEntries) out.emplace_back(e.key);
    out.emplace_back("hasSpaceOrientation");
    out.emplace_back("excludedPredicates");
    return out;
}

std::vector<std::string> Vocabulary::validate() const {
    std::vector<std::string> problems;
    std::map<std::string, std::string> seen;
    for (const Entry& e : kEntries) {
        const Iri& iri = this->*(e.member);
        if (!is_absolute_iri(iri.value))
            problems.push_back(std::string(e.key) + " is not an absolute IRI: '" + iri.value + "'");
        auto [it, inserted] = seen.emplace(iri.value, e.key);
        if (!inserted)
            problems.push_back(std::string(e.key) + " and " + it->second +
                               " map to the same IRI <" + iri.value + ">");
    }
    return problems;
}

Vocabulary load_vocabulary_overrides(const std::string& path, Vocabulary base,
                                     std::map<std::string, std::string>* extra_settings) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open vocabulary file: " + path);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        line = trim(line);
        if (line.empty() || line[0] == '#') continue;  // values may contain '#'
        auto eq = line.find('=');
        if (eq == std::string::npos)
            throw std::runtime_error(path + ":" + std::to_string(lineno) +
                                     ": expected 'key = value'");
        std::string key = trim(line.substr(0, eq));
        std::string value = trim(line.substr(eq + 1));
        std::string error;
        if (!base.set(key, value, &error)) {
            // Keys outside the vocabulary (rule configs) go to the caller.
            if (extra_settings && error.rfind("unknown vocabulary key", 0) == 0) {
                (*extra_settings)[key] = value;
                continue;
            }
            throw std::runtime_error(path + ":" + std::to_string(lineno) + ": " + error);
        }
    }
    return base;
}

}  // namespace ontolint
