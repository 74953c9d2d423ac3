#pragma once
// Independent brute-force oracles. Everything here works by raw single-pass
// scans over g.triples() and never calls the implementation paths it checks
// (no EntityIndex, no subclass_closure, no rule functions).

#include <map>
#include <set>
#include <string>
#include <vector>

#include "ontolint/graph.hpp"
#include "ontolint/vocabulary.hpp"

namespace oracle {

using ontolint::Graph;
using ontolint::Iri;
using ontolint::Term;
using ontolint::Triple;
using ontolint::Vocabulary;

struct Flags {
    bool isClass = false;
    bool isIndividual = false;
    bool isObjectProp = false;
    bool isAnnotationProp = false;
    bool isDatatypeProp = false;
};

// Per-triple flag accumulation, one scan, rule by rule.
inline std::map<Iri, Flags> classify(const Graph& g, const Vocabulary& v) {
    std::map<Iri, Flags> flags;
    for (const Triple& t : g.triples()) {
        if (t.predicate == v.subClassProp && t.object.is_iri())
            flags[t.object.as_iri()].isClass = true;
        if (t.predicate != v.typeProp || !t.object.is_iri()) continue;
        Iri type = t.object.as_iri();
        bool is_decl = type == v.classDecl || type == v.namedIndividualDecl ||
                       type == v.objectPropDecl || type == v.annotationPropDecl ||
                       type == v.datatypePropDecl || type == v.ontologyDecl ||
                       type == v.allDisjointClassesDecl;
        if (is_decl) {
            if (!t.subject.is_iri()) continue;
            Iri s = t.subject.as_iri();
            if (type == v.classDecl) flags[s].isClass = true;
            if (type == v.namedIndividualDecl) flags[s].isIndividual = true;
            if (type == v.objectPropDecl) flags[s].isObjectProp = true;
            if (type == v.annotationPropDecl) flags[s].isAnnotationProp = true;
            if (type == v.datatypePropDecl) flags[s].isDatatypeProp = true;
        } else {
            flags[type].isClass = true;
            if (t.subject.is_iri()) flags[t.subject.as_iri()].isIndividual = true;
        }
    }
    return flags;
}

// Reachability by breadth-first search over reversed subclass edges.
inline std::set<Iri> closure_bfs(const Graph& g, const Vocabulary& v, const Iri& c) {
    std::set<Iri> seen{c};
    std::vector<Iri> frontier{c};
    while (!frontier.empty()) {
        std::vector<Iri> next;
        for (const Iri& cur : frontier)
            for (const Triple& t : g.triples())
                if (t.predicate == v.subClassProp && t.object.is_iri() &&
                    t.object.as_iri() == cur && t.subject.is_iri())
                    if (seen.insert(t.subject.as_iri()).second) next.push_back(t.subject.as_iri());
        frontier = std::move(next);
    }
    return seen;
}

// Nested-loop join of type triples with the closure.
inline std::set<Iri> instances(const Graph& g, const Vocabulary& v, const Iri& c,
                               bool transitive) {
    std::set<Iri> types = transitive ? closure_bfs(g, v, c) : std::set<Iri>{c};
    std::set<Iri> out;
    for (const Triple& t : g.triples()) {
        if (t.predicate != v.typeProp || !t.subject.is_iri() || !t.object.is_iri()) continue;
        if (t.object.as_iri() == v.namedIndividualDecl) continue;
        for (const Iri& type : types)
            if (t.object.as_iri() == type) out.insert(t.subject.as_iri());
    }
    return out;
}

// Direct-type counting per class (for DIE) and direct-subclass counting
// (for DSE), both as plain tallies.
inline std::map<Iri, std::size_t> direct_instance_counts(const Graph& g, const Vocabulary& v) {
    std::map<Iri, std::size_t> counts;
    for (const Triple& t : g.triples())
        if (t.predicate == v.typeProp && t.subject.is_iri() && t.object.is_iri() &&
            t.object.as_iri() != v.namedIndividualDecl)
            counts[t.object.as_iri()]++;
    return counts;
}

inline std::map<Iri, std::size_t> direct_subclass_counts(const Graph& g, const Vocabulary& v) {
    std::map<Iri, std::set<Iri>> subs;
    for (const Triple& t : g.triples())
        if (t.predicate == v.subClassProp && t.subject.is_iri() && t.object.is_iri())
            subs[t.object.as_iri()].insert(t.subject.as_iri());
    std::map<Iri, std::size_t> counts;
    for (const auto& [c, s] : subs) counts[c] = s.size();
    return counts;
}

// Classes that would trip DIE under default config, computed from tallies.
inline std::set<Iri> die_classes(const Graph& g, const Vocabulary& v, int min_instances) {
    auto flags = classify(g, v);
    auto inst = direct_instance_counts(g, v);
    std::set<Iri> out;
    for (const auto& [iri, f] : flags) {
        if (!f.isClass) continue;
        std::size_t n = inst.count(iri) ? inst.at(iri) : 0;
        if (n >= static_cast<std::size_t>(min_instances)) continue;
        if (n == 0) continue;  // exempt (subclasses) or separate empty-class rule
        out.insert(iri);
    }
    return out;
}

inline std::set<Iri> dse_classes(const Graph& g, const Vocabulary& v) {
    auto flags = classify(g, v);
    auto subs = direct_subclass_counts(g, v);
    std::set<Iri> out;
    for (const auto& [iri, f] : flags)
        if (f.isClass && subs.count(iri) && subs.at(iri) == 1) out.insert(iri);
    return out;
}

// Out-degree tally over hasArea.
inline std::map<Iri, std::size_t> area_degrees(const Graph& g, const Vocabulary& v) {
    std::map<Iri, std::size_t> out;
    for (const Triple& t : g.triples())
        if (t.predicate == v.hasArea && t.subject.is_iri() && t.object.is_iri())
            out[t.subject.as_iri()]++;
    return out;
}

// All-pairs disjointness violations over the symmetric closure of the
// declared disjointness relation (pairwise axioms only).
inline std::set<Iri> disjoint_violations(const Graph& g, const Vocabulary& v) {
    std::set<std::pair<Iri, Iri>> pairs;
    for (const Triple& t : g.triples())
        if (t.predicate == v.disjointProp && t.subject.is_iri() && t.object.is_iri()) {
            pairs.insert({t.subject.as_iri(), t.object.as_iri()});
            pairs.insert({t.object.as_iri(), t.subject.as_iri()});
        }
    // supertypes per individual: walk subClassOf upward, scan-based
    std::map<Iri, std::set<Iri>> up;
    for (const Triple& t : g.triples())
        if (t.predicate == v.subClassProp && t.subject.is_iri() && t.object.is_iri())
            up[t.subject.as_iri()].insert(t.object.as_iri());
    auto supers_of = [&](const Iri& c) {
        std::set<Iri> seen{c};
        std::vector<Iri> frontier{c};
        while (!frontier.empty()) {
            std::vector<Iri> next;
            for (const Iri& cur : frontier)
                if (up.count(cur))
                    for (const Iri& s : up.at(cur))
                        if (seen.insert(s).second) next.push_back(s);
            frontier = std::move(next);
        }
        return seen;
    };
    std::map<Iri, std::set<Iri>> effective;
    for (const Triple& t : g.triples()) {
        if (t.predicate != v.typeProp || !t.subject.is_iri() || !t.object.is_iri()) continue;
        Iri type = t.object.as_iri();
        if (type == v.classDecl || type == v.namedIndividualDecl || type == v.objectPropDecl ||
            type == v.annotationPropDecl || type == v.datatypePropDecl ||
            type == v.ontologyDecl || type == v.allDisjointClassesDecl)
            continue;
        auto s = supers_of(type);
        effective[t.subject.as_iri()].insert(s.begin(), s.end());
    }
    std::set<Iri> out;
    for (const auto& [ind, types] : effective)
        for (const Iri& a : types)
            for (const Iri& b : types)
                if (pairs.count({a, b})) out.insert(ind);
    return out;
}

}  // namespace oracle
