#include "ontolint/analysis.hpp"

#include <deque>

namespace ontolint {

std::set<Iri> superclass_closure(const Graph& g, const Vocabulary& v, const Iri& c) {
    std::set<Iri> out{c};
    std::deque<Iri> queue{c};
    while (!queue.empty()) {
        Iri cur = queue.front();
        queue.pop_front();
        for (const Iri& super : g.iri_objects(cur, v.subClassProp))
            if (out.insert(super).second) queue.push_back(super);
    }
    return out;
}

bool KindSet::contains(const Graph& g, const Vocabulary& v, const Iri& x) const {
    if (classes.count(x)) return true;
    for (const Iri& t : g.iri_objects(x, v.typeProp))
        if (t != v.namedIndividualDecl && classes.count(t)) return true;
    return false;
}

KindSet make_kind(const Graph& g, const Vocabulary& v, const Iri& root) {
    return KindSet{subclass_closure(g, v, root).classes};
}

std::set<Iri> default_excluded_predicates(const Vocabulary& v) {
    std::set<Iri> out{
        v.typeProp,    v.subClassProp,       v.commentProp,
        v.labelProp,   v.foafPrimaryTopicOf, v.foafPage,
        v.hasBibTeX,   v.importsProp,        v.disjointProp,
        v.membersProp,
    };
    out.insert(Iri(std::string(ns::rdfs) + "domain"));
    out.insert(Iri(std::string(ns::rdfs) + "range"));
    out.insert(Iri(std::string(ns::rdfs) + "seeAlso"));
    out.insert(Iri(std::string(ns::rdfs) + "isDefinedBy"));
    out.insert(Iri(std::string(ns::owl) + "inverseOf"));
    out.insert(Iri(std::string(ns::owl) + "equivalentClass"));
    out.insert(Iri(std::string(ns::owl) + "versionInfo"));
    out.insert(Iri(std::string(ns::rdf) + "first"));
    out.insert(Iri(std::string(ns::rdf) + "rest"));
    for (const Iri& p : v.excludedPredicates) out.insert(p);
    return out;
}

bool is_used(const Graph& g, const Iri& x, const std::set<Iri>& excluded) {
    for (const Triple& t : g.triples()) {
        if (excluded.count(t.predicate)) continue;
        if (t.subject.is_iri() && t.subject.value == x.value) return true;
        if (t.object.is_iri() && t.object.value == x.value) return true;
    }
    return false;
}

std::set<Iri> neighbors(const Graph& g, const Iri& x, const std::set<Iri>& excluded) {
    std::set<Iri> out;
    for (const Triple& t : g.triples()) {
        if (excluded.count(t.predicate)) continue;
        if (t.subject.is_iri() && t.subject.value == x.value && t.object.is_iri())
            out.insert(t.object.as_iri());
        if (t.object.is_iri() && t.object.value == x.value && t.subject.is_iri())
            out.insert(t.subject.as_iri());
    }
    return out;
}

std::set<Iri> space_associates(const Graph& g, const Vocabulary& v, const Iri& space) {
    std::set<Iri> out;
    if (v.hasSpaceOrientation != SpaceOrientation::SpaceToArtifact)
        for (const Iri& x : g.iri_subjects(v.hasSpace, space)) out.insert(x);
    if (v.hasSpaceOrientation != SpaceOrientation::ArtifactToSpace)
        for (const Iri& x : g.iri_objects(space, v.hasSpace)) out.insert(x);
    return out;
}

std::set<std::pair<Iri, Iri>> disjoint_pairs(const Graph& g, const Vocabulary& v) {
    std::set<std::pair<Iri, Iri>> pairs;
    auto add = [&](const Iri& a, const Iri& b) {
        if (a == b) return;
        pairs.insert(a < b ? std::make_pair(a, b) : std::make_pair(b, a));
    };
    for (const Triple* t : g.with_predicate(v.disjointProp))
        if (t->subject.is_iri() && t->object.is_iri())
            add(t->subject.as_iri(), t->object.as_iri());
    for (const Triple* t : g.with_predicate(v.typeProp)) {
        if (!(t->object.is_iri() && t->object.as_iri() == v.allDisjointClassesDecl)) continue;
        for (const Term& members : g.objects(t->subject, v.membersProp)) {
            std::vector<Iri> classes;
            for (const Term& m : g.list_members(members))
                if (m.is_iri()) classes.push_back(m.as_iri());
            for (std::size_t i = 0; i < classes.size(); ++i)
                for (std::size_t j = i + 1; j < classes.size(); ++j) add(classes[i], classes[j]);
        }
    }
    return pairs;
}

}  // namespace ontolint
