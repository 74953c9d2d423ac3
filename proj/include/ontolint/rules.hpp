#pragma once
// The rule registry: phase goals and shape checks evaluated as deterministic
// rules over the merged graph, with exception allowlists and a severity-
// thresholded verdict.

#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "ontolint/entity_index.hpp"
#include "ontolint/format.hpp"
#include "ontolint/graph.hpp"
#include "ontolint/resolver.hpp"
#include "ontolint/vocabulary.hpp"

namespace ontolint {

enum class Severity { Info, Warning, Error };

std::string to_string(Severity s);
std::optional<Severity> parse_severity(const std::string& s);

struct Rule {
    std::string id;
    Severity severity = Severity::Warning;
    std::string description;
    std::map<std::string, std::string> config;

    // Typed config accessors with defaults.
    int config_int(const std::string& key, int fallback) const;
    bool config_bool(const std::string& key, bool fallback) const;
    std::string config_str(const std::string& key, const std::string& fallback) const;
    std::vector<std::string> config_list(const std::string& key) const;  // comma-separated
};

struct Finding {
    std::string ruleId;
    Iri focus;
    std::string message;
    Severity severity = Severity::Warning;
    std::optional<Iri> module;
    bool suppressed = false;

    auto operator<=>(const Finding&) const = default;
};

struct ExceptionEntry {
    std::string ruleId;
    Iri focus;
    std::string reason;

    auto operator<=>(const ExceptionEntry&) const = default;
};

struct ExceptionList {
    std::vector<ExceptionEntry> entries;  // unique per (ruleId, focus)

    void add(ExceptionEntry e);
    const ExceptionEntry* match(const std::string& ruleId, const Iri& focus) const;
};

// Parses `ruleId <tab> focus-IRI <tab> reason` lines; '#' starts a comment.
ExceptionList load_exceptions(const std::string& path);

struct ValidationReport {
    std::vector<Finding> findings;  // sorted by (ruleId, focus, message)
    std::map<Severity, std::size_t> counts;  // suppressed excluded
    std::vector<ExceptionEntry> staleExceptions;
    std::vector<std::string> warnings;  // unknown exception rule ids etc.
    Severity threshold = Severity::Error;
    bool pass = true;
};

struct RuleContext {
    const Graph& graph;
    const EntityIndex& index;
    const Vocabulary& vocab;
    const ImportGraph* modules = nullptr;  // needed by the centralization rule
};

// Namespace scoping shared by the scoped rules. An empty namespace list
// means "everything except the well-known external vocabularies".
struct Scope {
    std::vector<std::string> namespaces;

    static Scope from_rule(const Rule& r);
    bool contains(const Iri& iri) const;
};

// Rule evaluation functions. Each returns all findings for its rule id;
// severity stamping and ordering happen in run_rules.
std::vector<Finding> check_icd(const RuleContext& ctx, const Rule& rule);
std::vector<Finding> check_die(const RuleContext& ctx, const Rule& rule);
std::vector<Finding> check_empty_class(const RuleContext& ctx, const Rule& rule);
std::vector<Finding> check_dse(const RuleContext& ctx, const Rule& rule);
std::vector<Finding> check_sar(const RuleContext& ctx, const Rule& rule);
std::vector<Finding> check_krl(const RuleContext& ctx, const Rule& rule);
std::vector<Finding> check_metamodeling(const RuleContext& ctx, const Rule& rule);
std::vector<Finding> check_space_conformance(const RuleContext& ctx, const Rule& rule);
std::vector<Finding> check_space_specified(const RuleContext& ctx, const Rule& rule);
std::vector<Finding> check_activity_specified(const RuleContext& ctx, const Rule& rule);
std::vector<Finding> check_approach_specified(const RuleContext& ctx, const Rule& rule);
std::vector<Finding> check_disjointness(const RuleContext& ctx, const Rule& rule);
std::vector<Finding> check_toplevel(const RuleContext& ctx, const Rule& rule);
std::vector<Finding> check_tbox_centralization(const RuleContext& ctx, const Rule& rule);

// All built-in rules with their default severities and configs.
std::vector<Rule> default_registry();

// True if the id names a built-in rule.
bool is_known_rule(const std::string& id);

// Evaluates the registry, applies the exception list, and aggregates the
// verdict. Findings matching exceptions are marked suppressed but retained;
// exceptions that never match are reported as stale.
ValidationReport run_rules(const RuleContext& ctx, const std::vector<Rule>& registry,
                           const ExceptionList& exceptions, Severity threshold);

// Report rendering: text, a JSON array of findings, or CSV with the same
// columns. Output always ends with a newline.
std::string serialize_report(const ValidationReport& report, OutputFormat format);

}  // namespace ontolint
