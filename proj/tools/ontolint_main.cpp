// ontolint: quality-control CLI for OWL/RDF ontologies.
//
// Commands: validate, report, deps, issues. Exit codes: 0 = pass,
// 1 = findings at/above the threshold (or issue-ledger defects),
// 2 = usage or parse error. Stdout carries the payload, stderr diagnostics.

#include <filesystem>
#include <iostream>
#include <set>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "ontolint/analysis.hpp"
#include "ontolint/issues.hpp"
#include "ontolint/metrics.hpp"
#include "ontolint/resolver.hpp"
#include "ontolint/rules.hpp"
#include "ontolint/turtle.hpp"

#ifdef ONTOLINT_ONLINE_TLS
#define CPPHTTPLIB_OPENSSL_SUPPORT
#endif
#include <httplib.h>

namespace fs = std::filesystem;
using namespace ontolint;

namespace {

struct Options {
    std::vector<std::string> inputs;
    std::string catalog;
    std::string vocab_file;
    std::string exceptions_file;
    std::string format = "text";
    std::string fail_on = "error";
    std::string module_filter;
    bool online = false;
    bool merge_all = false;
    std::vector<std::string> disable;
    std::vector<std::string> only;
    // report
    std::string table;
    // deps
    std::string mode = "imports";
    bool dot = false;
    // issues
    std::string action;
};

struct Loaded {
    ImportGraph ig;
    Graph merged;
};

OutputFormat parse_format(const std::string& f) {
    if (f == "json") return OutputFormat::Json;
    if (f == "csv") return OutputFormat::Csv;
    return OutputFormat::Text;
}

Loaded load_inputs(const Options& opt, const Vocabulary& vocab) {
    if (opt.inputs.empty()) throw std::runtime_error("no input file given");
    if (opt.inputs.size() > 1 && !opt.merge_all)
        throw std::runtime_error("multiple inputs require --merge-all");
    Loaded out;
    for (const std::string& entry : opt.inputs) {
        ModuleLocator locator = opt.catalog.empty()
                                    ? ModuleLocator::from_directory(
                                          fs::path(entry).parent_path().string())
                                    : ModuleLocator::from_catalog_file(opt.catalog);
        ImportGraph ig = resolve_imports(entry, locator, vocab);
        for (ModuleDescriptor& m : ig.nodes) {
            if (!out.ig.find(m.ontologyIri)) out.ig.nodes.push_back(std::move(m));
        }
        out.ig.edges.insert(ig.edges.begin(), ig.edges.end());
        out.ig.unresolved.insert(ig.unresolved.begin(), ig.unresolved.end());
        out.ig.warnings.insert(out.ig.warnings.end(), ig.warnings.begin(), ig.warnings.end());
    }
    std::sort(out.ig.nodes.begin(), out.ig.nodes.end(),
              [](const ModuleDescriptor& a, const ModuleDescriptor& b) {
                  return a.ontologyIri < b.ontologyIri;
              });
    for (const std::string& w : out.ig.warnings) std::cerr << "warning: " << w << "\n";
    for (const Iri& u : out.ig.unresolved)
        std::cerr << "warning: unresolved import <" << u.value << ">\n";

    if (!opt.module_filter.empty()) {
        const ModuleDescriptor* m = out.ig.find(Iri(opt.module_filter));
        if (!m) throw std::runtime_error("module not in import closure: " + opt.module_filter);
        out.merged = m->graph;
    } else {
        MergeResult merged = out.ig.merged();
        for (const std::string& w : merged.warnings) std::cerr << "warning: " << w << "\n";
        out.merged = std::move(merged.graph);
    }
    return out;
}

Vocabulary load_vocab(const Options& opt, std::map<std::string, std::string>& extra) {
    Vocabulary vocab;
    if (!opt.vocab_file.empty()) vocab = load_vocabulary_overrides(opt.vocab_file, vocab, &extra);
    for (const std::string& problem : vocab.validate())
        std::cerr << "warning: vocabulary: " << problem << "\n";
    return vocab;
}

std::vector<Rule> build_registry(const Options& opt,
                                 const std::map<std::string, std::string>& extra) {
    for (const std::string& id : opt.disable)
        if (!is_known_rule(id)) throw std::runtime_error("unknown rule id: " + id);
    for (const std::string& id : opt.only)
        if (!is_known_rule(id)) throw std::runtime_error("unknown rule id: " + id);
    std::vector<Rule> registry = default_registry();
    if (!opt.only.empty()) {
        std::set<std::string> keep(opt.only.begin(), opt.only.end());
        std::erase_if(registry, [&](const Rule& r) { return !keep.count(r.id); });
    }
    std::set<std::string> disabled(opt.disable.begin(), opt.disable.end());
    std::erase_if(registry, [&](const Rule& r) { return disabled.count(r.id) > 0; });
    // Settings from the vocab file: a global scope plus rule.<ID>.<key> entries.
    auto scope_it = extra.find("scopeNamespaces");
    for (Rule& r : registry) {
        if (scope_it != extra.end()) r.config["scope"] = scope_it->second;
        const std::string prefix = "rule." + r.id + ".";
        for (const auto& [key, value] : extra)
            if (key.rfind(prefix, 0) == 0) r.config[key.substr(prefix.size())] = value;
    }
    for (const auto& [key, value] : extra) {
        if (key == "scopeNamespaces" || key.rfind("rule.", 0) == 0) continue;
        std::cerr << "warning: unknown setting '" << key << "' in vocabulary file\n";
    }
    return registry;
}

// Opt-in reachability probe for knowledge-resource links. Network failures
// are warnings, never errors.
std::vector<Finding> online_link_check(const Graph& g, const Vocabulary& v) {
    std::map<std::string, Iri> urls;  // url -> one focus entity
    for (const Iri& p : {v.foafPrimaryTopicOf, v.foafPage}) {
        for (const Triple* t : g.with_predicate(p)) {
            if (!t->subject.is_iri()) continue;
            if (!(t->object.is_iri() || t->object.is_literal())) continue;
            if (is_http_url(t->object.value)) urls.emplace(t->object.value, t->subject.as_iri());
        }
    }
    std::vector<Finding> out;
    for (const auto& [url, focus] : urls) {
        auto path_start = url.find('/', url.find("//") + 2);
        std::string origin = path_start == std::string::npos ? url : url.substr(0, path_start);
        std::string path = path_start == std::string::npos ? "/" : url.substr(path_start);
#ifndef ONTOLINT_ONLINE_TLS
        if (url.rfind("https://", 0) == 0) {
            Finding f;
            f.ruleId = "KRL-ONLINE";
            f.focus = focus;
            f.message = "cannot check " + url + " (built without TLS support)";
            f.severity = Severity::Warning;
            out.push_back(std::move(f));
            continue;
        }
#endif
        httplib::Client client(origin);
        client.set_connection_timeout(5, 0);
        client.set_read_timeout(5, 0);
        client.set_follow_location(true);
        auto res = client.Head(path);
        if (!res || res->status >= 400) {
            Finding f;
            f.ruleId = "KRL-ONLINE";
            f.focus = focus;
            f.message = "link not reachable: " + url +
                        (res ? " (HTTP " + std::to_string(res->status) + ")" : " (no response)");
            f.severity = Severity::Warning;
            out.push_back(std::move(f));
        }
    }
    return out;
}

int cmd_validate(const Options& opt) {
    std::map<std::string, std::string> extra;
    Vocabulary vocab = load_vocab(opt, extra);
    std::vector<Rule> registry = build_registry(opt, extra);
    Loaded loaded = load_inputs(opt, vocab);
    EntityIndex idx = classify_entities(loaded.merged, vocab);
    ExceptionList exceptions;
    if (!opt.exceptions_file.empty()) exceptions = load_exceptions(opt.exceptions_file);
    auto threshold = parse_severity(opt.fail_on);
    if (!threshold) throw std::runtime_error("invalid --fail-on value: " + opt.fail_on);

    RuleContext ctx{loaded.merged, idx, vocab, &loaded.ig};
    ValidationReport report = run_rules(ctx, registry, exceptions, *threshold);
    if (opt.online) {
        std::vector<Finding> extra_findings = online_link_check(loaded.merged, vocab);
        for (Finding& f : extra_findings) report.findings.push_back(std::move(f));
        std::sort(report.findings.begin(), report.findings.end(),
                  [](const Finding& a, const Finding& b) {
                      return std::tie(a.ruleId, a.focus.value, a.message) <
                             std::tie(b.ruleId, b.focus.value, b.message);
                  });
        report.counts.clear();
        report.pass = true;
        for (const Finding& f : report.findings) {
            if (f.suppressed) continue;
            report.counts[f.severity]++;
            if (f.severity >= *threshold) report.pass = false;
        }
    }
    for (const std::string& w : report.warnings) std::cerr << "warning: " << w << "\n";
    std::cout << serialize_report(report, parse_format(opt.format));
    return report.pass ? 0 : 1;
}

int cmd_report(const Options& opt) {
    std::map<std::string, std::string> extra;
    Vocabulary vocab = load_vocab(opt, extra);
    Loaded loaded = load_inputs(opt, vocab);
    EntityIndex idx = classify_entities(loaded.merged, vocab);
    MetricsTable table;
    if (opt.table == "entities")
        table = report_entity_types(loaded.merged, idx, vocab);
    else if (opt.table == "properties")
        table = report_properties(loaded.merged, idx, vocab);
    else if (opt.table == "spaces")
        table = report_spaces(loaded.merged, idx, vocab);
    else if (opt.table == "concepts")
        table = report_concepts(loaded.merged, idx, vocab);
    else if (opt.table == "activities")
        table = report_activities(loaded.merged, idx, vocab);
    else if (opt.table == "constraints")
        table = report_constraints(loaded.merged, vocab);
    else
        throw std::runtime_error("unknown table: " + opt.table);
    std::cout << serialize_table(table, parse_format(opt.format));
    return 0;
}

int cmd_deps(const Options& opt) {
    std::map<std::string, std::string> extra;
    Vocabulary vocab = load_vocab(opt, extra);
    Loaded loaded = load_inputs(opt, vocab);
    if (opt.dot) {
        std::cout << export_dot(loaded.ig,
                                opt.mode == "namespaces" ? DotMode::Namespaces : DotMode::Imports);
        return 0;
    }
    MetricsTable table;
    if (opt.mode == "imports") {
        table.name = "imports";
        table.columns = {"importer", "imported"};
        for (const auto& [from, to] : loaded.ig.edges)
            table.rows.push_back({Cell{from.value}, Cell{to.value}});
    } else if (opt.mode == "namespaces") {
        table.name = "namespaces";
        table.columns = {"module", "namespace", "subjects", "objects"};
        NamespaceUsage usage = namespace_usage(loaded.ig);
        for (const auto& [key, counts] : usage.rows)
            table.rows.push_back({Cell{key.first.value}, Cell{key.second.value},
                                  Cell{static_cast<std::uint64_t>(counts.subjectCount)},
                                  Cell{static_cast<std::uint64_t>(counts.objectCount)}});
    } else {
        throw std::runtime_error("unknown deps mode: " + opt.mode);
    }
    std::cout << serialize_table(table, parse_format(opt.format));
    return 0;
}

int cmd_issues(const Options& opt) {
    std::map<std::string, std::string> extra;
    Vocabulary vocab = load_vocab(opt, extra);
    OutputFormat format = parse_format(opt.format);
    if (opt.action == "from-findings") {
        std::vector<Rule> registry = build_registry(opt, extra);
        Loaded loaded = load_inputs(opt, vocab);
        EntityIndex idx = classify_entities(loaded.merged, vocab);
        ExceptionList exceptions;
        if (!opt.exceptions_file.empty()) exceptions = load_exceptions(opt.exceptions_file);
        RuleContext ctx{loaded.merged, idx, vocab, &loaded.ig};
        ValidationReport report = run_rules(ctx, registry, exceptions, Severity::Error);
        DraftConfig cfg;
        cfg.issuesNamespace = vocab.issueClass.namespace_part();
        IssueLedger drafts = findings_to_issues(report, cfg);
        if (format == OutputFormat::Csv)
            throw std::runtime_error("issues support text (Turtle) and json output only");
        std::cout << (format == OutputFormat::Json ? serialize_issues_json(drafts)
                                                   : serialize_issues_turtle(drafts, vocab));
        return 0;
    }
    Loaded loaded = load_inputs(opt, vocab);
    IssueLedger ledger = parse_issues(loaded.merged, vocab);
    if (opt.action == "check") {
        std::vector<Finding> findings = check_issues(ledger);
        ValidationReport report;
        report.findings = findings;
        for (const Finding& f : findings) report.counts[f.severity]++;
        report.pass = findings.empty();
        std::cout << serialize_report(report, format);
        return findings.empty() ? 0 : 1;
    }
    if (opt.action == "order") {
        IssueOrder order = order_issues(ledger);
        if (!order.ok()) {
            std::cerr << "error: dependency cycle:";
            for (const Iri& id : order.cycle) std::cerr << " <" << id.value << ">";
            std::cerr << "\n";
            return 1;
        }
        if (format == OutputFormat::Json) {
            nlohmann::ordered_json arr = nlohmann::ordered_json::array();
            for (const Issue& i : order.order) arr.push_back(i.id.value);
            std::cout << arr.dump(2) << "\n";
        } else {
            for (const Issue& i : order.order) std::cout << i.id.value << "\n";
        }
        return 0;
    }
    throw std::runtime_error("unknown issues action: " + opt.action +
                             " (expected check, order, or from-findings)");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"quality-control toolkit for OWL/RDF ontologies"};
    app.require_subcommand(1);
    Options opt;

    auto add_common = [&](CLI::App* cmd, bool with_rule_flags) {
        cmd->add_option("inputs", opt.inputs, "Turtle entry document(s)")->required();
        cmd->add_option("--catalog", opt.catalog, "ontology IRI -> file catalog");
        cmd->add_option("--vocab", opt.vocab_file, "vocabulary/setting overrides file");
        cmd->add_option("--format", opt.format, "output format")
            ->check(CLI::IsMember({"text", "json", "csv"}));
        cmd->add_option("--module", opt.module_filter, "restrict to one module IRI");
        cmd->add_flag("--merge-all", opt.merge_all, "accept multiple entry documents");
        if (with_rule_flags) {
            cmd->add_option("--exceptions", opt.exceptions_file, "exception allowlist file");
            cmd->add_option("--fail-on", opt.fail_on, "verdict threshold severity")
                ->check(CLI::IsMember({"warning", "error"}));
            cmd->add_option("--disable", opt.disable, "disable a rule id")->allow_extra_args(false);
            cmd->add_option("--only", opt.only, "run only the listed rule ids")
                ->allow_extra_args(false);
            cmd->add_flag("--online", opt.online, "HEAD-check knowledge-resource links");
        }
    };

    CLI::App* validate = app.add_subcommand("validate", "run the rule registry");
    add_common(validate, true);

    CLI::App* report = app.add_subcommand("report", "print a metrics table");
    add_common(report, false);
    report->add_option("--table", opt.table, "table name")
        ->required()
        ->check(CLI::IsMember(table_names()));

    CLI::App* deps = app.add_subcommand("deps", "module dependency analysis");
    add_common(deps, false);
    deps->add_option("--mode", opt.mode, "imports or namespaces")
        ->check(CLI::IsMember({"imports", "namespaces"}));
    deps->add_flag("--dot", opt.dot, "emit Graphviz dot");

    CLI::App* issues = app.add_subcommand("issues", "issue-ledger operations");
    issues->add_option("action", opt.action, "check, order, or from-findings")
        ->required()
        ->check(CLI::IsMember({"check", "order", "from-findings"}));
    add_common(issues, true);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);  // exits 0 after printing help
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (validate->parsed()) return cmd_validate(opt);
        if (report->parsed()) return cmd_report(opt);
        if (deps->parsed()) return cmd_deps(opt);
        if (issues->parsed()) return cmd_issues(opt);
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
