#pragma once
// Immutable in-memory triple graph with prefix map and read-only queries.

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "ontolint/term.hpp"

namespace ontolint {

using PrefixMap = std::map<std::string, std::string>;  // prefix -> namespace IRI

class Graph {
public:
    Graph() = default;
    // The predicate index points into the triple store, so copies rebuild
    // it; moves keep vector storage and stay valid.
    Graph(const Graph& other);
    Graph& operator=(const Graph& other);
    Graph(Graph&&) = default;
    Graph& operator=(Graph&&) = default;

    // Deduplicates and sorts; the graph is immutable afterwards.
    static Graph from_triples(std::vector<Triple> triples, PrefixMap prefixes = {},
                              std::optional<Iri> base = std::nullopt,
                              std::string source_id = "");

    const std::vector<Triple>& triples() const { return triples_; }
    const PrefixMap& prefixes() const { return prefixes_; }
    const std::optional<Iri>& base() const { return base_; }
    const std::string& source_id() const { return source_id_; }
    std::size_t size() const { return triples_.size(); }

    bool contains(const Term& s, const Iri& p, const Term& o) const;

    // All triples with the given predicate (sorted SPO order).
    const std::vector<const Triple*>& with_predicate(const Iri& p) const;

    // Object terms of (s, p, *).
    std::vector<Term> objects(const Term& s, const Iri& p) const;
    std::vector<Term> objects(const Iri& s, const Iri& p) const {
        return objects(Term::iri(s), p);
    }
    // Subject terms of (*, p, o).
    std::vector<Term> subjects(const Iri& p, const Term& o) const;

    // IRI-only convenience filters.
    std::vector<Iri> iri_objects(const Iri& s, const Iri& p) const;
    std::vector<Iri> iri_subjects(const Iri& p, const Iri& o) const;

    // Members of an RDF collection starting at `head` (follows rdf:first/rdf:rest).
    std::vector<Term> list_members(const Term& head) const;

    // Expand a prefixed name against this graph's prefix map; nullopt if the
    // prefix is unknown.
    std::optional<Iri> expand(const std::string& prefixed) const;

    // Shorten an IRI using the longest matching declared prefix, else the
    // local name after the last '#' or '/'.
    std::string shorten(const Iri& iri) const;

    // Deterministic debug serialization back to Turtle: subjects and
    // predicates in codepoint order, one triple per line.
    std::string serialize() const;

private:
    std::vector<Triple> triples_;
    PrefixMap prefixes_;
    std::optional<Iri> base_;
    std::string source_id_;
    std::map<Iri, std::vector<const Triple*>> by_predicate_;

    void build_index();
};

// Renders one term in Turtle syntax (full IRIs, escaped literals).
std::string term_turtle(const Term& t);

struct MergeResult {
    Graph graph;
    std::vector<std::string> warnings;  // prefix collisions
};

// Set union of the graphs with blank nodes renamed apart per source graph.
// Prefix collisions resolve in favor of the earliest graph and are recorded
// as warnings.
MergeResult merge(const std::vector<Graph>& graphs);

}  // namespace ontolint
