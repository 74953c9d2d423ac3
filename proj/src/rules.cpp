#include "ontolint/rules.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "ontolint/analysis.hpp"

namespace ontolint {

std::string to_string(Severity s) {
    switch (s) {
        case Severity::Info: return "info";
        case Severity::Warning: return "warning";
        case Severity::Error: return "error";
    }
    return "warning";
}

std::optional<Severity> parse_severity(const std::string& s) {
    if (s == "info") return Severity::Info;
    if (s == "warning") return Severity::Warning;
    if (s == "error") return Severity::Error;
    return std::nullopt;
}

int Rule::config_int(const std::string& key, int fallback) const {
    auto it = config.find(key);
    if (it == config.end()) return fallback;
    try {
        return std::stoi(it->second);
    } catch (...) {
        return fallback;
    }
}

bool Rule::config_bool(const std::string& key, bool fallback) const {
    auto it = config.find(key);
    if (it == config.end()) return fallback;
    return it->second == "true" || it->second == "1" || it->second == "yes";
}

std::string Rule::config_str(const std::string& key, const std::string& fallback) const {
    auto it = config.find(key);
    return it == config.end() ? fallback : it->second;
}

std::vector<std::string> Rule::config_list(const std::string& key) const {
    std::vector<std::string> out;
    auto it = config.find(key);
    if (it == config.end()) return out;
    std::istringstream in(it->second);
    std::string item;
    while (std::getline(in, item, ',')) {
        auto b = item.find_first_not_of(" \t");
        auto e = item.find_last_not_of(" \t");
        if (b != std::string::npos) out.push_back(item.substr(b, e - b + 1));
    }
    return out;
}

void ExceptionList::add(ExceptionEntry e) {
    for (const ExceptionEntry& have : entries)
        if (have.ruleId == e.ruleId && have.focus == e.focus) return;
    entries.push_back(std::move(e));
}

const ExceptionEntry* ExceptionList::match(const std::string& ruleId, const Iri& focus) const {
    for (const ExceptionEntry& e : entries)
        if (e.ruleId == ruleId && e.focus == focus) return &e;
    return nullptr;
}

ExceptionList load_exceptions(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open exceptions file: " + path);
    ExceptionList list;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line[0] == '#') continue;
        auto tab1 = line.find('\t');
        auto tab2 = tab1 == std::string::npos ? std::string::npos : line.find('\t', tab1 + 1);
        if (tab1 == std::string::npos || tab2 == std::string::npos)
            throw std::runtime_error(path + ":" + std::to_string(lineno) +
                                     ": expected 'ruleId <tab> focus-IRI <tab> reason'");
        list.add({line.substr(0, tab1), Iri(line.substr(tab1 + 1, tab2 - tab1 - 1)),
                  line.substr(tab2 + 1)});
    }
    return list;
}

// --- Scoping -----------------------------------------------------------------

namespace {

const char* kExternalNamespaces[] = {
    "http://www.w3.org/1999/02/22-rdf-syntax-ns#",
    "http://www.w3.org/2000/01/rdf-schema#",
    "http://www.w3.org/2002/07/owl#",
    "http://www.w3.org/2001/XMLSchema#",
    "http://xmlns.com/foaf/0.1/",
    "http://www.w3.org/2004/02/skos/core#",
    "http://purl.org/dc/terms/",
    "http://purl.org/dc/elements/1.1/",
};

}  // namespace

Scope Scope::from_rule(const Rule& r) {
    Scope s;
    s.namespaces = r.config_list("scope");
    return s;
}

bool Scope::contains(const Iri& iri) const {
    if (!namespaces.empty()) {
        for (const std::string& n : namespaces)
            if (iri.value.rfind(n, 0) == 0) return true;
        return false;
    }
    for (const char* n : kExternalNamespaces)
        if (iri.value.rfind(n, 0) == 0) return false;
    return true;
}

// --- Rule implementations ------------------------------------------------------

namespace {

Finding make_finding(const std::string& id, const Iri& focus, std::string message) {
    Finding f;
    f.ruleId = id;
    f.focus = focus;
    f.message = std::move(message);
    return f;
}

// Issue instances are workflow metadata, not ontology entities.
bool is_issue_instance(const RuleContext& ctx, const Iri& x) {
    for (const Iri& t : ctx.graph.iri_objects(x, ctx.vocab.typeProp))
        if (t == ctx.vocab.issueClass) return true;
    return false;
}

bool has_nonempty_comment(const RuleContext& ctx, const Iri& x) {
    for (const Term& o : ctx.graph.objects(Term::iri(x), ctx.vocab.commentProp))
        if (o.is_literal() && o.value.find_first_not_of(" \t\r\n") != std::string::npos)
            return true;
    return false;
}

std::vector<std::string> link_values(const RuleContext& ctx, const Iri& x) {
    std::vector<std::string> out;
    for (const Iri& p : {ctx.vocab.foafPrimaryTopicOf, ctx.vocab.foafPage})
        for (const Term& o : ctx.graph.objects(Term::iri(x), p))
            if (o.is_iri() || o.is_literal()) out.push_back(o.value);
    return out;
}

bool has_valid_link(const RuleContext& ctx, const Rule& rule, const Iri& x) {
    bool wikipedia_only = rule.config_bool("wikipediaHost", false);
    for (const std::string& url : link_values(ctx, x)) {
        if (!is_http_url(url)) continue;
        if (wikipedia_only) {
            std::string host = url_host(url);
            bool ok = host == "wikipedia.org" ||
                      (host.size() > 14 && host.compare(host.size() - 14, 14, ".wikipedia.org") == 0);
            if (!ok) continue;
        }
        return true;
    }
    return false;
}

}  // namespace

std::vector<Finding> check_icd(const RuleContext& ctx, const Rule& rule) {
    Scope scope = Scope::from_rule(rule);
    bool any_class_counts = rule.config_bool("anyClassCounts", false);
    std::vector<Finding> out;
    for (const auto& [iri, roles] : ctx.index.entries()) {
        if (!roles.isIndividual || roles.isClass) continue;  // punned entities serve as categories
        if (!scope.contains(iri)) continue;
        if (is_issue_instance(ctx, iri)) continue;
        bool categorized = false;
        for (const Iri& t : ctx.graph.iri_objects(iri, ctx.vocab.typeProp)) {
            if (ctx.vocab.is_declaration_class(t)) continue;
            if (!ctx.index.is_class(t)) continue;
            if (any_class_counts || scope.contains(t)) {
                categorized = true;
                break;
            }
        }
        if (!categorized)
            out.push_back(make_finding(rule.id, iri,
                                       "individual is not categorized by any in-scope class"));
    }
    return out;
}

std::vector<Finding> check_die(const RuleContext& ctx, const Rule& rule) {
    Scope scope = Scope::from_rule(rule);
    int min_instances = rule.config_int("minInstances", 2);
    bool exempt_with_subclasses = rule.config_bool("exemptWithSubclasses", true);
    std::vector<Finding> out;
    for (const auto& [iri, roles] : ctx.index.entries()) {
        if (!roles.isClass || !scope.contains(iri)) continue;
        if (iri == ctx.vocab.issueClass) continue;
        std::size_t instances = instances_of(ctx.graph, ctx.vocab, iri, false).size();
        std::size_t subclasses = direct_subclasses(ctx.graph, ctx.vocab, iri).size();
        if (instances >= static_cast<std::size_t>(min_instances)) continue;
        if (instances == 0) {
            if (subclasses > 0 && exempt_with_subclasses) continue;  // abstract category
            if (subclasses == 0) continue;  // reported separately as an empty class
        }
        out.push_back(make_finding(rule.id, iri,
                                   "class has " + std::to_string(instances) +
                                       " direct instance(s); at least " +
                                       std::to_string(min_instances) + " expected"));
    }
    return out;
}

std::vector<Finding> check_empty_class(const RuleContext& ctx, const Rule& rule) {
    Scope scope = Scope::from_rule(rule);
    std::vector<Finding> out;
    for (const auto& [iri, roles] : ctx.index.entries()) {
        if (!roles.isClass || !scope.contains(iri)) continue;
        if (iri == ctx.vocab.issueClass) continue;
        if (!instances_of(ctx.graph, ctx.vocab, iri, false).empty()) continue;
        if (!direct_subclasses(ctx.graph, ctx.vocab, iri).empty()) continue;
        out.push_back(make_finding(rule.id, iri, "class has no instances and no subclasses"));
    }
    return out;
}

std::vector<Finding> check_dse(const RuleContext& ctx, const Rule& rule) {
    Scope scope = Scope::from_rule(rule);
    std::vector<Finding> out;
    for (const auto& [iri, roles] : ctx.index.entries()) {
        if (!roles.isClass || !scope.contains(iri)) continue;
        if (iri == ctx.vocab.issueClass) continue;
        std::size_t subclasses = direct_subclasses(ctx.graph, ctx.vocab, iri).size();
        if (subclasses == 1)
            out.push_back(make_finding(rule.id, iri, "class has exactly one direct subclass"));
    }
    return out;
}

std::vector<Finding> check_sar(const RuleContext& ctx, const Rule& rule) {
    Scope scope = Scope::from_rule(rule);
    int min = rule.config_int("min", 1);
    int max = rule.config_int("max", 3);
    std::vector<std::string> kind_roots = rule.config_list("roots");
    if (kind_roots.empty()) kind_roots.push_back(ctx.vocab.formalEntityRoot.value);
    std::set<Iri> subjects;
    for (const std::string& root : kind_roots)
        for (const Iri& x : instances_of(ctx.graph, ctx.vocab, Iri(root), true))
            subjects.insert(x);
    std::vector<Finding> out;
    for (const Iri& x : subjects) {
        if (!scope.contains(x)) continue;
        std::size_t areas = ctx.graph.iri_objects(x, ctx.vocab.hasArea).size();
        if (areas < static_cast<std::size_t>(min))
            out.push_back(make_finding(rule.id, x,
                                       "entity has " + std::to_string(areas) +
                                           " subject area(s); at least " + std::to_string(min) +
                                           " expected"));
        else if (areas > static_cast<std::size_t>(max))
            out.push_back(make_finding(rule.id, x,
                                       "entity has " + std::to_string(areas) +
                                           " subject area(s); at most " + std::to_string(max) +
                                           " allowed"));
    }
    return out;
}

std::vector<Finding> check_krl(const RuleContext& ctx, const Rule& rule) {
    Scope scope = Scope::from_rule(rule);
    std::vector<Finding> out;
    const bool want_comment = rule.id == "SHAPE-CLASS-COMMENT" || rule.id == "SHAPE-PROP-COMMENT" ||
                              rule.id == "KRL-COMMENT";
    const bool class_rule = rule.id == "SHAPE-CLASS-COMMENT" || rule.id == "SHAPE-CLASS-LINK";
    const bool prop_rule = rule.id == "SHAPE-PROP-COMMENT" || rule.id == "SHAPE-PROP-LINK";
    if (want_comment && !rule.config_bool("requireComment", true)) return out;
    if (!want_comment && !rule.config_bool("requireLink", true)) return out;
    for (const auto& [iri, roles] : ctx.index.entries()) {
        bool eligible;
        if (class_rule)
            eligible = roles.isClass;
        else if (prop_rule)
            eligible = roles.is_property();
        else
            // Entity-level check: individuals that are neither classes nor
            // properties (punned entities are covered by the class shapes).
            eligible = roles.isIndividual && !roles.isClass && !roles.is_property();
        if (!eligible || !scope.contains(iri)) continue;
        if (iri == ctx.vocab.issueClass) continue;
        if (!class_rule && !prop_rule && is_issue_instance(ctx, iri)) continue;
        if (want_comment) {
            if (!has_nonempty_comment(ctx, iri))
                out.push_back(make_finding(rule.id, iri, "no non-empty comment"));
        } else {
            if (!has_valid_link(ctx, rule, iri))
                out.push_back(
                    make_finding(rule.id, iri, "no knowledge-resource link (http(s) URL via "
                                               "isPrimaryTopicOf or page)"));
        }
    }
    return out;
}

std::vector<Finding> check_metamodeling(const RuleContext& ctx, const Rule& rule) {
    Scope scope = Scope::from_rule(rule);
    std::vector<Finding> out;
    for (const auto& [iri, roles] : ctx.index.entries()) {
        if (!roles.is_punned() || !scope.contains(iri)) continue;
        if (iri == ctx.vocab.issueClass) continue;
        bool typed_to_class = false;
        for (const Iri& t : ctx.graph.iri_objects(iri, ctx.vocab.typeProp))
            if (!ctx.vocab.is_declaration_class(t) && ctx.index.is_class(t)) {
                typed_to_class = true;
                break;
            }
        bool exercised = !instances_of(ctx.graph, ctx.vocab, iri, false).empty() ||
                         !direct_subclasses(ctx.graph, ctx.vocab, iri).empty();
        if (typed_to_class && exercised) continue;
        std::string why = !typed_to_class ? "punned entity lacks a type assertion to a class"
                                          : "punned entity has no direct instances or subclasses";
        out.push_back(make_finding(rule.id, iri, why));
    }
    return out;
}

std::vector<Finding> check_space_conformance(const RuleContext& ctx, const Rule& rule) {
    KindSet artifacts = make_kind(ctx.graph, ctx.vocab, ctx.vocab.artifactRoot);
    std::vector<Finding> out;
    for (const Iri& space : instances_of(ctx.graph, ctx.vocab, ctx.vocab.technologicalSpaceRoot, true)) {
        std::set<Iri> assoc = space_associates(ctx.graph, ctx.vocab, space);
        bool satisfied = false;
        for (const Iri& a : assoc) {
            if (!artifacts.contains(ctx.graph, ctx.vocab, a)) continue;
            for (const Iri& b : ctx.graph.iri_objects(a, ctx.vocab.conformsTo)) {
                if (a == b) continue;
                if (assoc.count(b) && artifacts.contains(ctx.graph, ctx.vocab, b)) {
                    satisfied = true;
                    break;
                }
            }
            if (satisfied) break;
        }
        if (!satisfied)
            out.push_back(make_finding(
                rule.id, space,
                "no conformance relationship between two space-associated artifact types"));
    }
    return out;
}

std::vector<Finding> check_space_specified(const RuleContext& ctx, const Rule& rule) {
    struct Need {
        const char* label;
        Iri root;
        std::size_t required;
    };
    std::vector<Need> needs{
        {"language", ctx.vocab.languageRoot,
         static_cast<std::size_t>(rule.config_int("needLanguages", 1))},
        {"tool", ctx.vocab.toolRoot, static_cast<std::size_t>(rule.config_int("needTools", 1))},
        {"artifact", ctx.vocab.artifactRoot,
         static_cast<std::size_t>(rule.config_int("needArtifacts", 1))},
    };
    std::vector<std::pair<const Need*, KindSet>> kinds;
    for (const Need& n : needs) kinds.emplace_back(&n, make_kind(ctx.graph, ctx.vocab, n.root));
    std::vector<Finding> out;
    for (const Iri& space : instances_of(ctx.graph, ctx.vocab, ctx.vocab.technologicalSpaceRoot, true)) {
        std::set<Iri> assoc = space_associates(ctx.graph, ctx.vocab, space);
        std::vector<std::string> missing;
        for (const auto& [need, kind] : kinds) {
            std::size_t have = 0;
            for (const Iri& a : assoc)
                if (kind.contains(ctx.graph, ctx.vocab, a)) ++have;
            if (have < need->required)
                missing.push_back(std::string(need->label) + " (" + std::to_string(have) + "/" +
                                  std::to_string(need->required) + ")");
        }
        if (!missing.empty()) {
            std::string msg = "space is underspecified; missing kinds: ";
            for (std::size_t i = 0; i < missing.size(); ++i) msg += (i ? ", " : "") + missing[i];
            out.push_back(make_finding(rule.id, space, msg));
        }
    }
    return out;
}

std::vector<Finding> check_activity_specified(const RuleContext& ctx, const Rule& rule) {
    bool only_leaves = rule.config_bool("onlyLeaves", false);
    std::set<Iri> activities =
        subclass_closure(ctx.graph, ctx.vocab, ctx.vocab.seActivityRoot).classes;
    activities.erase(ctx.vocab.seActivityRoot);
    KindSet artifacts = make_kind(ctx.graph, ctx.vocab, ctx.vocab.artifactRoot);
    KindSet languages = make_kind(ctx.graph, ctx.vocab, ctx.vocab.languageRoot);
    KindSet tools = make_kind(ctx.graph, ctx.vocab, ctx.vocab.toolRoot);
    std::set<Iri> excluded = default_excluded_predicates(ctx.vocab);
    std::vector<Finding> out;
    for (const Iri& activity : activities) {
        if (only_leaves && !direct_subclasses(ctx.graph, ctx.vocab, activity).empty()) continue;
        bool has_artifact = false, has_language_or_tool = false;
        for (const Iri& n : neighbors(ctx.graph, activity, excluded)) {
            if (artifacts.contains(ctx.graph, ctx.vocab, n)) has_artifact = true;
            if (languages.contains(ctx.graph, ctx.vocab, n) ||
                tools.contains(ctx.graph, ctx.vocab, n))
                has_language_or_tool = true;
        }
        if (has_artifact && has_language_or_tool) continue;
        std::string msg = "activity lacks ";
        if (!has_artifact && !has_language_or_tool)
            msg += "links to artifact types and to language or tool types";
        else if (!has_artifact)
            msg += "a link to an artifact type";
        else
            msg += "a link to a language or tool type";
        out.push_back(make_finding(rule.id, activity, msg));
    }
    return out;
}

std::vector<Finding> check_approach_specified(const RuleContext& ctx, const Rule& rule) {
    std::vector<std::string> props = rule.config_list("props");
    std::set<Iri> connecting;
    if (props.empty()) {
        connecting = {ctx.vocab.serves, ctx.vocab.uses, ctx.vocab.isSpecifiedBy};
    } else {
        for (const std::string& p : props) connecting.insert(Iri(p));
    }
    KindSet formal = make_kind(ctx.graph, ctx.vocab, ctx.vocab.formalEntityRoot);
    KindSet languages = make_kind(ctx.graph, ctx.vocab, ctx.vocab.languageRoot);
    std::vector<Finding> out;
    for (const Iri& approach :
         instances_of(ctx.graph, ctx.vocab, ctx.vocab.methodologicalApproachRoot, true)) {
        bool connected = false;
        for (const Iri& p : connecting) {
            for (const Iri& o : ctx.graph.iri_objects(approach, p))
                if (o != approach && (formal.contains(ctx.graph, ctx.vocab, o) ||
                                      languages.contains(ctx.graph, ctx.vocab, o)))
                    connected = true;
            for (const Iri& s : ctx.graph.iri_subjects(p, approach))
                if (s != approach && (formal.contains(ctx.graph, ctx.vocab, s) ||
                                      languages.contains(ctx.graph, ctx.vocab, s)))
                    connected = true;
            if (connected) break;
        }
        if (!connected)
            out.push_back(make_finding(rule.id, approach,
                                       "approach is not connected to any formal entity or "
                                       "language via serves/uses/isSpecifiedBy"));
    }
    return out;
}

std::vector<Finding> check_disjointness(const RuleContext& ctx, const Rule& rule) {
    auto pairs = disjoint_pairs(ctx.graph, ctx.vocab);
    if (pairs.empty()) return {};
    std::vector<Finding> out;
    // Individuals typed (directly or upward through the hierarchy) into two
    // disjoint classes.
    std::map<Iri, std::set<Iri>> effective;  // individual -> all (super)types
    for (const Triple* t : ctx.graph.with_predicate(ctx.vocab.typeProp)) {
        if (!t->subject.is_iri() || !t->object.is_iri()) continue;
        Iri type = t->object.as_iri();
        if (ctx.vocab.is_declaration_class(type)) continue;
        auto supers = superclass_closure(ctx.graph, ctx.vocab, type);
        effective[t->subject.as_iri()].insert(supers.begin(), supers.end());
    }
    for (const auto& [individual, types] : effective) {
        for (const auto& [a, b] : pairs) {
            if (types.count(a) && types.count(b)) {
                out.push_back(make_finding(rule.id, individual,
                                           "typed into disjoint classes <" + a.value + "> and <" +
                                               b.value + ">"));
                break;  // one finding per individual
            }
        }
    }
    // Classes below two disjoint classes that still have instances.
    for (const auto& [iri, roles] : ctx.index.entries()) {
        if (!roles.isClass) continue;
        auto supers = superclass_closure(ctx.graph, ctx.vocab, iri);
        for (const auto& [a, b] : pairs) {
            if (supers.count(a) && supers.count(b)) {
                if (!instances_of(ctx.graph, ctx.vocab, iri, false).empty())
                    out.push_back(make_finding(rule.id, iri,
                                               "instantiated class is a subclass of disjoint "
                                               "classes <" +
                                                   a.value + "> and <" + b.value + ">"));
                break;
            }
        }
    }
    return out;
}

std::vector<Finding> check_toplevel(const RuleContext& ctx, const Rule& rule) {
    Scope scope = Scope::from_rule(rule);
    int max_roots = rule.config_int("maxRoots", 10);
    std::vector<Iri> roots;
    for (const auto& [iri, roles] : ctx.index.entries()) {
        if (!roles.isClass || !scope.contains(iri)) continue;
        if (ctx.graph.iri_objects(iri, ctx.vocab.subClassProp).empty()) roots.push_back(iri);
    }
    std::sort(roots.begin(), roots.end());
    if (roots.size() <= static_cast<std::size_t>(max_roots)) return {};
    std::string msg = std::to_string(roots.size()) + " top-level classes exceed the limit of " +
                      std::to_string(max_roots) + ":";
    for (const Iri& r : roots) msg += " <" + r.value + ">";
    return {make_finding(rule.id, roots.front(), msg)};
}

std::vector<Finding> check_tbox_centralization(const RuleContext& ctx, const Rule& rule) {
    if (!ctx.modules) return {};
    std::string configured = rule.config_str("tboxModule", "");
    const ModuleDescriptor* tbox = nullptr;
    for (const ModuleDescriptor& m : ctx.modules->nodes) {
        if (!configured.empty() ? m.ontologyIri.value == configured
                                : m.ontologyIri.local_name() == "tbox") {
            tbox = &m;
            break;
        }
    }
    if (!tbox) return {};  // no identifiable tbox module; nothing to check
    std::vector<Finding> out;
    for (const ModuleDescriptor& m : ctx.modules->nodes) {
        if (&m == tbox) continue;
        for (const Triple* t : m.graph.with_predicate(ctx.vocab.typeProp)) {
            if (!t->subject.is_iri() || !t->object.is_iri()) continue;
            if (t->object.as_iri() != ctx.vocab.classDecl) continue;
            Finding f = make_finding(rule.id, t->subject.as_iri(),
                                     "class declared outside the tbox module");
            f.module = m.ontologyIri;
            out.push_back(std::move(f));
        }
    }
    return out;
}

// --- Registry and evaluation ---------------------------------------------------

namespace {

using RuleFn = std::vector<Finding> (*)(const RuleContext&, const Rule&);

const std::map<std::string, RuleFn>& rule_functions() {
    static const std::map<std::string, RuleFn> fns = {
        {"ICD", check_icd},
        {"DIE", check_die},
        {"EMPTY-CLASS", check_empty_class},
        {"DSE", check_dse},
        {"SAR", check_sar},
        {"SHAPE-CLASS-COMMENT", check_krl},
        {"SHAPE-PROP-COMMENT", check_krl},
        {"SHAPE-CLASS-LINK", check_krl},
        {"SHAPE-PROP-LINK", check_krl},
        {"KRL-COMMENT", check_krl},
        {"KRL-LINK", check_krl},
        {"SHAPE-METAMODELING", check_metamodeling},
        {"SHAPE-SPACE-CONFORMSTO", check_space_conformance},
        {"SHAPE-SPACE-SPECIFIED", check_space_specified},
        {"SHAPE-ACTIVITY-SPECIFIED", check_activity_specified},
        {"SHAPE-APPROACH-SPECIFIED", check_approach_specified},
        {"DISJOINTNESS", check_disjointness},
        {"TOPLEVEL", check_toplevel},
        {"TBOX-CENTRALIZATION", check_tbox_centralization},
    };
    return fns;
}

}  // namespace

std::vector<Rule> default_registry() {
    std::vector<Rule> rules;
    auto add = [&](const char* id, Severity sev, const char* description) -> Rule& {
        rules.push_back({id, sev, description, {}});
        return rules.back();
    };
    add("ICD", Severity::Error, "individuals must be categorized or serve as a category");
    add("DIE", Severity::Warning, "classes must have at least two direct instances");
    add("EMPTY-CLASS", Severity::Info, "classes without instances or subclasses");
    add("DSE", Severity::Warning, "classes must not have exactly one subclass");
    add("SAR", Severity::Warning, "entities must have between one and three subject areas");
    add("SHAPE-CLASS-COMMENT", Severity::Error, "class declarations must have a comment");
    add("SHAPE-PROP-COMMENT", Severity::Error, "property declarations must have a comment");
    add("SHAPE-CLASS-LINK", Severity::Error,
        "class declarations must link to a knowledge resource");
    add("SHAPE-PROP-LINK", Severity::Error,
        "property declarations must link to a knowledge resource");
    add("KRL-COMMENT", Severity::Error, "entities must have a comment");
    add("KRL-LINK", Severity::Error, "entities must link to a knowledge resource");
    add("SHAPE-METAMODELING", Severity::Error,
        "punned entities must be typed and exercised as a class");
    add("SHAPE-SPACE-CONFORMSTO", Severity::Warning,
        "spaces must have a conformance relationship between associated artifacts");
    add("SHAPE-SPACE-SPECIFIED", Severity::Warning,
        "spaces must be specified by languages, tools, and artifacts");
    add("SHAPE-ACTIVITY-SPECIFIED", Severity::Warning,
        "activities must link to artifact and language/tool types");
    add("SHAPE-APPROACH-SPECIFIED", Severity::Warning,
        "approaches must connect to a formal entity or language");
    add("DISJOINTNESS", Severity::Error, "no entity may fall into disjoint classes");
    add("TOPLEVEL", Severity::Warning, "the class hierarchy must have few demarcated roots");
    add("TBOX-CENTRALIZATION", Severity::Error, "class declarations belong in the tbox module");
    return rules;
}

bool is_known_rule(const std::string& id) { return rule_functions().count(id) > 0; }

ValidationReport run_rules(const RuleContext& ctx, const std::vector<Rule>& registry,
                           const ExceptionList& exceptions, Severity threshold) {
    ValidationReport report;
    report.threshold = threshold;
    std::set<std::string> ids;
    for (const Rule& rule : registry) {
        if (!ids.insert(rule.id).second) {
            report.warnings.push_back("duplicate rule id in registry: " + rule.id);
            continue;
        }
        auto it = rule_functions().find(rule.id);
        if (it == rule_functions().end()) {
            report.warnings.push_back("unknown rule id in registry: " + rule.id);
            continue;
        }
        std::vector<Finding> findings = it->second(ctx, rule);
        for (Finding& f : findings) {
            f.ruleId = rule.id;
            f.severity = rule.severity;
            report.findings.push_back(std::move(f));
        }
    }
    std::sort(report.findings.begin(), report.findings.end(),
              [](const Finding& a, const Finding& b) {
                  return std::tie(a.ruleId, a.focus.value, a.message) <
                         std::tie(b.ruleId, b.focus.value, b.message);
              });

    std::set<const ExceptionEntry*> used;
    for (Finding& f : report.findings) {
        if (const ExceptionEntry* e = exceptions.match(f.ruleId, f.focus)) {
            f.suppressed = true;
            used.insert(e);
        }
    }
    for (const ExceptionEntry& e : exceptions.entries) {
        if (!is_known_rule(e.ruleId))
            report.warnings.push_back("exception references unknown rule id: " + e.ruleId);
        if (!used.count(&e)) report.staleExceptions.push_back(e);
    }

    for (const Finding& f : report.findings)
        if (!f.suppressed) report.counts[f.severity]++;
    report.pass = true;
    for (const Finding& f : report.findings)
        if (!f.suppressed && f.severity >= threshold) report.pass = false;
    return report;
}

std::string serialize_report(const ValidationReport& report, OutputFormat format) {
    if (format == OutputFormat::Json) {
        nlohmann::ordered_json arr = nlohmann::ordered_json::array();
        for (const Finding& f : report.findings) {
            nlohmann::ordered_json o;
            o["ruleId"] = f.ruleId;
            o["focus"] = f.focus.value;
            o["message"] = f.message;
            o["severity"] = to_string(f.severity);
            o["module"] = f.module ? nlohmann::ordered_json(f.module->value)
                                   : nlohmann::ordered_json(nullptr);
            o["suppressed"] = f.suppressed;
            arr.push_back(std::move(o));
        }
        return arr.dump(2) + "\n";
    }
    if (format == OutputFormat::Csv) {
        std::ostringstream out;
        out << "ruleId,focus,severity,module,suppressed,message\n";
        for (const Finding& f : report.findings) {
            out << csv_field(f.ruleId) << ',' << csv_field(f.focus.value) << ','
                << to_string(f.severity) << ',' << csv_field(f.module ? f.module->value : "")
                << ',' << (f.suppressed ? "true" : "false") << ',' << csv_field(f.message)
                << '\n';
        }
        return out.str();
    }
    std::ostringstream out;
    for (const Finding& f : report.findings) {
        out << to_string(f.severity) << "  " << f.ruleId << "  <" << f.focus.value << ">  "
            << f.message;
        if (f.module) out << "  [module <" << f.module->value << ">]";
        if (f.suppressed) out << "  (suppressed)";
        out << '\n';
    }
    std::size_t errors = report.counts.count(Severity::Error) ? report.counts.at(Severity::Error) : 0;
    std::size_t warnings =
        report.counts.count(Severity::Warning) ? report.counts.at(Severity::Warning) : 0;
    std::size_t infos = report.counts.count(Severity::Info) ? report.counts.at(Severity::Info) : 0;
    std::size_t suppressed = 0;
    for (const Finding& f : report.findings)
        if (f.suppressed) ++suppressed;
    out << "summary: " << errors << " error(s), " << warnings << " warning(s), " << infos
        << " info(s), " << suppressed << " suppressed\n";
    for (const ExceptionEntry& e : report.staleExceptions)
        out << "stale exception: " << e.ruleId << " <" << e.focus.value << "> (" << e.reason
            << ")\n";
    out << "verdict: " << (report.pass ? "pass" : "fail") << "\n";
    return out.str();
}

}  // namespace ontolint
