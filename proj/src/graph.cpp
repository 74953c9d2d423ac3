#include "ontolint/graph.hpp"

#include <algorithm>
#include <sstream>

namespace ontolint {

Graph::Graph(const Graph& other)
    : triples_(other.triples_),
      prefixes_(other.prefixes_),
      base_(other.base_),
      source_id_(other.source_id_) {
    build_index();
}

Graph& Graph::operator=(const Graph& other) {
    if (this != &other) {
        triples_ = other.triples_;
        prefixes_ = other.prefixes_;
        base_ = other.base_;
        source_id_ = other.source_id_;
        build_index();
    }
    return *this;
}

Graph Graph::from_triples(std::vector<Triple> triples, PrefixMap prefixes,
                          std::optional<Iri> base, std::string source_id) {
    Graph g;
    std::sort(triples.begin(), triples.end());
    triples.erase(std::unique(triples.begin(), triples.end()), triples.end());
    g.triples_ = std::move(triples);
    g.prefixes_ = std::move(prefixes);
    g.base_ = std::move(base);
    g.source_id_ = std::move(source_id);
    g.build_index();
    return g;
}

void Graph::build_index() {
    by_predicate_.clear();
    for (const Triple& t : triples_) by_predicate_[t.predicate].push_back(&t);
}

bool Graph::contains(const Term& s, const Iri& p, const Term& o) const {
    Triple probe{s, p, o};
    return std::binary_search(triples_.begin(), triples_.end(), probe);
}

const std::vector<const Triple*>& Graph::with_predicate(const Iri& p) const {
    static const std::vector<const Triple*> empty;
    auto it = by_predicate_.find(p);
    return it == by_predicate_.end() ? empty : it->second;
}

std::vector<Term> Graph::objects(const Term& s, const Iri& p) const {
    std::vector<Term> out;
    for (const Triple* t : with_predicate(p))
        if (t->subject == s) out.push_back(t->object);
    return out;
}

std::vector<Term> Graph::subjects(const Iri& p, const Term& o) const {
    std::vector<Term> out;
    for (const Triple* t : with_predicate(p))
        if (t->object == o) out.push_back(t->subject);
    return out;
}

std::vector<Iri> Graph::iri_objects(const Iri& s, const Iri& p) const {
    std::vector<Iri> out;
    for (const Triple* t : with_predicate(p))
        if (t->subject.is_iri() && t->subject.value == s.value && t->object.is_iri())
            out.push_back(t->object.as_iri());
    return out;
}

std::vector<Iri> Graph::iri_subjects(const Iri& p, const Iri& o) const {
    std::vector<Iri> out;
    for (const Triple* t : with_predicate(p))
        if (t->object.is_iri() && t->object.value == o.value && t->subject.is_iri())
            out.push_back(t->subject.as_iri());
    return out;
}

std::vector<Term> Graph::list_members(const Term& head) const {
    const Iri first{std::string(ns::rdf) + "first"};
    const Iri rest{std::string(ns::rdf) + "rest"};
    const std::string nil = std::string(ns::rdf) + "nil";
    std::vector<Term> out;
    Term node = head;
    std::set<Term> seen;  // malformed cyclic lists must not hang
    while (!(node.is_iri() && node.value == nil)) {
        if (!seen.insert(node).second) break;
        auto firsts = objects(node, first);
        if (firsts.empty()) break;
        out.push_back(firsts.front());
        auto rests = objects(node, rest);
        if (rests.empty()) break;
        node = rests.front();
    }
    return out;
}

std::optional<Iri> Graph::expand(const std::string& prefixed) const {
    auto colon = prefixed.find(':');
    if (colon == std::string::npos) return std::nullopt;
    auto it = prefixes_.find(prefixed.substr(0, colon));
    if (it == prefixes_.end()) return std::nullopt;
    return Iri(it->second + prefixed.substr(colon + 1));
}

std::string Graph::shorten(const Iri& iri) const {
    std::size_t best_len = 0;
    const std::string* best_prefix = nullptr;
    for (const auto& [p, n] : prefixes_) {
        if (n.size() > best_len && iri.value.rfind(n, 0) == 0) {
            best_len = n.size();
            best_prefix = &p;
        }
    }
    if (best_prefix) return *best_prefix + ":" + iri.value.substr(best_len);
    return iri.local_name();
}

std::string term_turtle(const Term& t) {
    switch (t.kind) {
        case TermKind::Iri:
            return "<" + t.value + ">";
        case TermKind::Blank:
            return "_:" + t.value;
        case TermKind::Literal: {
            std::string s = "\"";
            for (char c : t.value) {
                switch (c) {
                    case '"': s += "\\\""; break;
                    case '\\': s += "\\\\"; break;
                    case '\n': s += "\\n"; break;
                    case '\r': s += "\\r"; break;
                    case '\t': s += "\\t"; break;
                    default: s += c;
                }
            }
            s += "\"";
            if (!t.lang.empty())
                s += "@" + t.lang;
            else if (t.datatype != std::string(ns::xsd) + "string")
                s += "^^<" + t.datatype + ">";
            return s;
        }
    }
    return "";
}

std::string Graph::serialize() const {
    // Triples are already in SPO codepoint order; blank labels are kept as-is.
    std::ostringstream out;
    for (const Triple& t : triples_) {
        out << term_turtle(t.subject) << " <" << t.predicate.value << "> "
            << term_turtle(t.object) << " .\n";
    }
    return out.str();
}

MergeResult merge(const std::vector<Graph>& graphs) {
    MergeResult result;
    std::vector<Triple> triples;
    PrefixMap prefixes;
    std::vector<std::string> warnings;
    std::size_t index = 0;
    for (const Graph& g : graphs) {
        const std::string tag = "m" + std::to_string(index) + "#";  // '#' cannot occur in parsed labels
        for (Triple t : g.triples()) {
            if (t.subject.is_blank()) t.subject.value = tag + t.subject.value;
            if (t.object.is_blank()) t.object.value = tag + t.object.value;
            triples.push_back(std::move(t));
        }
        for (const auto& [p, n] : g.prefixes()) {
            auto [it, inserted] = prefixes.emplace(p, n);
            if (!inserted && it->second != n)
                warnings.push_back("prefix collision: '" + p + ":' kept as <" + it->second +
                                   ">, ignored <" + n + "> from " +
                                   (g.source_id().empty() ? "later graph" : g.source_id()));
        }
        ++index;
    }
    result.graph = Graph::from_triples(std::move(triples), std::move(prefixes));
    result.warnings = std::move(warnings);
    return result;
}

}  // namespace ontolint
