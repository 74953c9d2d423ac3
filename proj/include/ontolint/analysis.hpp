#pragma once
// Graph-analysis helpers shared by the rule engine and the reports.

#include <set>

#include "ontolint/entity_index.hpp"
#include "ontolint/graph.hpp"
#include "ontolint/vocabulary.hpp"

namespace ontolint {

// All classes reachable from c via zero or more forward subClassOf steps
// (c and its superclasses). Terminates on cycles.
std::set<Iri> superclass_closure(const Graph& g, const Vocabulary& v, const Iri& c);

// Membership test for one top-level entity kind: x belongs to the kind
// rooted at `root` if x lies in the root's subclass closure or is typed
// into it.
struct KindSet {
    std::set<Iri> classes;  // subclass closure of the root, incl. the root

    bool contains_class(const Iri& x) const { return classes.count(x) > 0; }
    bool contains(const Graph& g, const Vocabulary& v, const Iri& x) const;
};

KindSet make_kind(const Graph& g, const Vocabulary& v, const Iri& root);

// Predicates that do not count as ontological usage: typing, subclassing,
// documentation/link policy, imports, and constraint axioms.
std::set<Iri> default_excluded_predicates(const Vocabulary& v);

// True if x occurs as subject or object of at least one triple whose
// predicate is not excluded.
bool is_used(const Graph& g, const Iri& x, const std::set<Iri>& excluded);

// IRI neighbors of x over non-excluded predicates, both directions.
std::set<Iri> neighbors(const Graph& g, const Iri& x, const std::set<Iri>& excluded);

// Entities associated with a technological space via hasSpace, honoring the
// configured orientation(s).
std::set<Iri> space_associates(const Graph& g, const Vocabulary& v, const Iri& space);

// Unordered disjoint class pairs: pairwise disjointWith plus member pairs of
// every AllDisjointClasses construct. Pairs are stored with first < second.
std::set<std::pair<Iri, Iri>> disjoint_pairs(const Graph& g, const Vocabulary& v);

}  // namespace ontolint
