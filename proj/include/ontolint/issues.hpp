#pragma once
// Ontologically coded change requests: parsing, integrity checks,
// dependency-respecting ordering, and drafting from validation findings.

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "ontolint/graph.hpp"
#include "ontolint/rules.hpp"
#include "ontolint/vocabulary.hpp"

namespace ontolint {

struct Issue {
    Iri id;
    Term target;             // the primary resource requiring transformation
    std::string critique;    // what is wrong
    std::string suggestion;  // the transformation to apply
    std::set<Iri> resolveAfter;
    std::string status = "open";

    auto operator<=>(const Issue&) const = default;
};

struct IssueLedger {
    std::vector<Issue> issues;  // sorted by id, ids unique

    const Issue* find(const Iri& id) const;
};

// One Issue per instance of the issue class. Missing critique/suggestion
// fields yield empty strings (reported by check_issues), never a crash.
IssueLedger parse_issues(const Graph& g, const Vocabulary& v);

// Integrity findings: dangling resolveAfter references, self-dependencies,
// dependency cycles, empty critique/suggestion.
std::vector<Finding> check_issues(const IssueLedger& l);

struct IssueOrder {
    std::vector<Issue> order;  // complete when cycle is empty
    std::vector<Iri> cycle;    // one cycle, in discovery order

    bool ok() const { return cycle.empty(); }
};

// Topological order over resolveAfter edges; ties broken by issue IRI
// codepoint order, which makes the result unique. References to unknown
// issues are ignored here (check_issues reports them).
IssueOrder order_issues(const IssueLedger& l);

struct DraftConfig {
    std::string issuesNamespace = "http://example.org/onto/issues#";
    Severity minSeverity = Severity::Error;
    // rule id -> suggestion template; {focus} and {message} are substituted.
    std::map<std::string, std::string> suggestionTemplates;
};

// One draft issue per unsuppressed finding at or above the configured
// severity: target = focus, critique = message, suggestion from the rule's
// template. Draft ids are deterministic hashes, distinct per finding.
IssueLedger findings_to_issues(const ValidationReport& r, const DraftConfig& cfg);

// Deterministic Turtle/JSON emission using the configured issue vocabulary.
std::string serialize_issues_turtle(const IssueLedger& l, const Vocabulary& v);
std::string serialize_issues_json(const IssueLedger& l);

}  // namespace ontolint
