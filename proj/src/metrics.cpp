#include "ontolint/metrics.hpp"

#include <algorithm>
#include <sstream>

#include <json.hpp>

#include "ontolint/analysis.hpp"

namespace ontolint {

std::string cell_text(const Cell& c) {
    if (std::holds_alternative<std::uint64_t>(c))
        return std::to_string(std::get<std::uint64_t>(c));
    return std::get<std::string>(c);
}

namespace {

Cell num(std::size_t n) { return Cell{static_cast<std::uint64_t>(n)}; }

// Strips the longest declared prefix namespace; falls back to the local name.
std::string local_label(const Graph& g, const Iri& iri) {
    std::size_t best = 0;
    for (const auto& [prefix, nsiri] : g.prefixes())
        if (nsiri.size() > best && iri.value.rfind(nsiri, 0) == 0) best = nsiri.size();
    if (best > 0) return iri.value.substr(best);
    return iri.local_name();
}

void sort_by_first_column(MetricsTable& t) {
    std::sort(t.rows.begin(), t.rows.end(), [](const auto& a, const auto& b) {
        return cell_text(a.front()) < cell_text(b.front());
    });
}

// True if x participates in a non-excluded assertion together with a member
// of `targets` (either direction).
bool linked_to_any(const Graph& g, const Iri& x, const std::set<Iri>& targets,
                   const std::set<Iri>& excluded) {
    for (const Iri& n : neighbors(g, x, excluded))
        if (targets.count(n)) return true;
    return false;
}

}  // namespace

MetricsTable report_entity_types(const Graph& g, const EntityIndex& idx, const Vocabulary& v) {
    (void)idx;
    MetricsTable t;
    t.name = "entities";
    t.columns = {"entity_type", "entities", "instances", "subclasses"};
    const std::vector<Iri> roots = {
        v.languageRoot,     v.toolRoot,       v.artifactRoot,
        v.formalEntityRoot, v.conceptualEntityRoot, v.technologicalSpaceRoot,
        v.seActivityRoot,   v.methodologicalApproachRoot, v.languageConceptRoot,
    };
    for (const Iri& root : roots) {
        std::size_t instances = instances_of(g, v, root, true).size();
        std::size_t subclasses = subclass_closure(g, v, root).classes.size() - 1;
        t.rows.push_back({Cell{root.local_name()}, num(instances + subclasses), num(instances),
                          num(subclasses)});
    }
    sort_by_first_column(t);
    return t;
}

MetricsTable report_properties(const Graph& g, const EntityIndex& idx, const Vocabulary& v) {
    (void)v;
    MetricsTable t;
    t.name = "properties";
    t.columns = {"property", "assertions", "type", "domain", "range", "inverse"};
    const Iri domainProp{std::string(ns::rdfs) + "domain"};
    const Iri rangeProp{std::string(ns::rdfs) + "range"};
    const Iri inverseProp{std::string(ns::owl) + "inverseOf"};

    struct Row {
        std::string name;
        std::size_t assertions;
        std::string type, domain, range, inverse;
    };
    std::vector<Row> rows;
    auto join_labels = [&](std::vector<Iri> iris) {
        std::sort(iris.begin(), iris.end());
        iris.erase(std::unique(iris.begin(), iris.end()), iris.end());
        std::string out;
        for (std::size_t i = 0; i < iris.size(); ++i)
            out += (i ? "," : "") + local_label(g, iris[i]);
        return out;
    };
    for (const auto& [iri, roles] : idx.entries()) {
        if (!roles.is_property()) continue;
        Row r;
        r.name = local_label(g, iri);
        r.assertions = g.with_predicate(iri).size();
        r.type = roles.isObjectProp ? "O" : (roles.isAnnotationProp ? "A" : "D");
        r.domain = join_labels(g.iri_objects(iri, domainProp));
        r.range = join_labels(g.iri_objects(iri, rangeProp));
        std::vector<Iri> inverses = g.iri_objects(iri, inverseProp);
        for (const Iri& s : g.iri_subjects(inverseProp, iri)) inverses.push_back(s);
        r.inverse = join_labels(std::move(inverses));
        rows.push_back(std::move(r));
    }
    std::sort(rows.begin(), rows.end(), [](const Row& a, const Row& b) {
        if (a.assertions != b.assertions) return a.assertions > b.assertions;
        return a.name < b.name;
    });
    for (Row& r : rows)
        t.rows.push_back({Cell{r.name}, num(r.assertions), Cell{r.type}, Cell{r.domain},
                          Cell{r.range}, Cell{r.inverse}});
    return t;
}

MetricsTable report_spaces(const Graph& g, const EntityIndex& idx, const Vocabulary& v) {
    (void)idx;
    MetricsTable t;
    t.name = "spaces";
    t.columns = {"metric", "count"};
    std::set<Iri> spaces = instances_of(g, v, v.technologicalSpaceRoot, true);
    std::size_t subclasses = subclass_closure(g, v, v.technologicalSpaceRoot).classes.size() - 1;
    KindSet languages = make_kind(g, v, v.languageRoot);
    KindSet tools = make_kind(g, v, v.toolRoot);
    KindSet artifacts = make_kind(g, v, v.artifactRoot);

    std::size_t spaces_with_languages = 0, spaces_with_tools = 0, spaces_with_artifacts = 0;
    std::set<Iri> languages_with, tools_with, artifacts_with;
    for (const Iri& space : spaces) {
        bool l = false, o = false, a = false;
        for (const Iri& x : space_associates(g, v, space)) {
            if (languages.contains(g, v, x)) {
                l = true;
                languages_with.insert(x);
            }
            if (tools.contains(g, v, x)) {
                o = true;
                tools_with.insert(x);
            }
            if (artifacts.contains(g, v, x)) {
                a = true;
                artifacts_with.insert(x);
            }
        }
        spaces_with_languages += l;
        spaces_with_tools += o;
        spaces_with_artifacts += a;
    }
    t.rows = {
        {Cell{std::string("instances")}, num(spaces.size())},
        {Cell{std::string("subclasses")}, num(subclasses)},
        {Cell{std::string("spaces_with_languages")}, num(spaces_with_languages)},
        {Cell{std::string("spaces_with_tools")}, num(spaces_with_tools)},
        {Cell{std::string("spaces_with_artifacts")}, num(spaces_with_artifacts)},
        {Cell{std::string("languages_with_spaces")}, num(languages_with.size())},
        {Cell{std::string("tools_with_spaces")}, num(tools_with.size())},
        {Cell{std::string("artifacts_with_spaces")}, num(artifacts_with.size())},
    };
    return t;
}

MetricsTable report_concepts(const Graph& g, const EntityIndex& idx, const Vocabulary& v) {
    (void)idx;
    MetricsTable t;
    t.name = "concepts";
    t.columns = {"metric", "count"};
    std::set<Iri> excluded = default_excluded_predicates(v);
    std::set<Iri> instances = instances_of(g, v, v.languageConceptRoot, true);
    std::set<Iri> subclasses = subclass_closure(g, v, v.languageConceptRoot).classes;
    subclasses.erase(v.languageConceptRoot);

    std::size_t used_instances = 0, used_subclasses = 0;
    for (const Iri& c : instances) used_instances += is_used(g, c, excluded);
    for (const Iri& c : subclasses) used_subclasses += is_used(g, c, excluded);

    std::set<Iri> concepts = instances;
    concepts.insert(subclasses.begin(), subclasses.end());
    std::set<Iri> properties;
    for (const Triple& triple : g.triples()) {
        if (excluded.count(triple.predicate)) continue;
        bool involves = (triple.subject.is_iri() && concepts.count(triple.subject.as_iri())) ||
                        (triple.object.is_iri() && concepts.count(triple.object.as_iri()));
        if (involves) properties.insert(triple.predicate);
    }

    std::set<Iri> language_kinds = subclass_closure(g, v, v.languageRoot).classes;
    std::set<Iri> pl_kinds = subclass_closure(g, v, v.programmingLanguageClass).classes;
    std::size_t software_languages = 0, programming_languages = 0;
    std::set<Iri> seen_languages;
    for (const Triple* triple : g.with_predicate(v.typeProp)) {
        if (!triple->subject.is_iri() || !triple->object.is_iri()) continue;
        if (!language_kinds.count(triple->object.as_iri())) continue;
        seen_languages.insert(triple->subject.as_iri());
    }
    for (const Iri& lang : seen_languages) {
        if (!linked_to_any(g, lang, concepts, excluded)) continue;
        ++software_languages;
        for (const Iri& type : g.iri_objects(lang, v.typeProp))
            if (pl_kinds.count(type)) {
                ++programming_languages;
                break;
            }
    }

    t.rows = {
        {Cell{std::string("concepts")}, num(instances.size() + subclasses.size())},
        {Cell{std::string("instances")}, num(instances.size())},
        {Cell{std::string("subclasses")}, num(subclasses.size())},
        {Cell{std::string("used_instances")}, num(used_instances)},
        {Cell{std::string("used_subclasses")}, num(used_subclasses)},
        {Cell{std::string("properties")}, num(properties.size())},
        {Cell{std::string("software_languages")}, num(software_languages)},
        {Cell{std::string("programming_languages")}, num(programming_languages)},
    };
    return t;
}

MetricsTable report_activities(const Graph& g, const EntityIndex& idx, const Vocabulary& v) {
    (void)idx;
    MetricsTable t;
    t.name = "activities";
    t.columns = {"metric", "count"};
    std::set<Iri> excluded = default_excluded_predicates(v);
    std::set<Iri> instances = instances_of(g, v, v.seActivityRoot, true);
    std::set<Iri> all_subclasses = subclass_closure(g, v, v.seActivityRoot).classes;
    all_subclasses.erase(v.seActivityRoot);
    std::set<Iri> immediate = direct_subclasses(g, v, v.seActivityRoot);
    std::set<Iri> nonimmediate;
    for (const Iri& c : all_subclasses)
        if (!immediate.count(c)) nonimmediate.insert(c);

    std::size_t used_nonimmediate = 0;
    for (const Iri& c : nonimmediate) used_nonimmediate += is_used(g, c, excluded);

    const std::set<Iri>& activities = all_subclasses;
    std::set<Iri> properties;
    for (const Triple& triple : g.triples()) {
        if (excluded.count(triple.predicate)) continue;
        bool involves = (triple.subject.is_iri() && activities.count(triple.subject.as_iri())) ||
                        (triple.object.is_iri() && activities.count(triple.object.as_iri()));
        if (involves) properties.insert(triple.predicate);
    }

    auto count_linked_instances = [&](const Iri& root) {
        std::size_t n = 0;
        for (const Iri& x : instances_of(g, v, root, true))
            n += linked_to_any(g, x, activities, excluded);
        return n;
    };
    auto count_linked_subclasses = [&](const Iri& root) {
        std::set<Iri> classes = subclass_closure(g, v, root).classes;
        classes.erase(root);
        std::size_t n = 0;
        for (const Iri& c : classes) n += linked_to_any(g, c, activities, excluded);
        return n;
    };

    t.rows = {
        {Cell{std::string("instances")}, num(instances.size())},
        {Cell{std::string("immediate_subclasses")}, num(immediate.size())},
        {Cell{std::string("nonimmediate_subclasses")}, num(nonimmediate.size())},
        {Cell{std::string("used_nonimmediate_subclasses")}, num(used_nonimmediate)},
        {Cell{std::string("properties")}, num(properties.size())},
        {Cell{std::string("language_instances")}, num(count_linked_instances(v.languageRoot))},
        {Cell{std::string("language_subclasses")}, num(count_linked_subclasses(v.languageRoot))},
        {Cell{std::string("tool_instances")}, num(count_linked_instances(v.toolRoot))},
        {Cell{std::string("tool_subclasses")}, num(count_linked_subclasses(v.toolRoot))},
        {Cell{std::string("artifacts")}, num(count_linked_subclasses(v.artifactRoot))},
    };
    return t;
}

MetricsTable report_constraints(const Graph& g, const Vocabulary& v) {
    MetricsTable t;
    t.name = "constraints";
    t.columns = {"constraint", "uses"};
    auto owl = [](const char* n) { return Iri(std::string(ns::owl) + n); };
    auto rdfs_iri = [](const char* n) { return Iri(std::string(ns::rdfs) + n); };

    std::vector<std::pair<std::string, Iri>> predicates = {
        {"disjointWith", v.disjointProp},
        {"domain", rdfs_iri("domain")},
        {"range", rdfs_iri("range")},
        {"inverseOf", owl("inverseOf")},
        {"equivalentClass", owl("equivalentClass")},
        {"cardinality", owl("cardinality")},
        {"minCardinality", owl("minCardinality")},
        {"maxCardinality", owl("maxCardinality")},
        {"qualifiedCardinality", owl("qualifiedCardinality")},
        {"minQualifiedCardinality", owl("minQualifiedCardinality")},
        {"maxQualifiedCardinality", owl("maxQualifiedCardinality")},
    };
    std::vector<std::pair<std::string, Iri>> characteristic_types = {
        {"AllDisjointClasses", v.allDisjointClassesDecl},
        {"FunctionalProperty", owl("FunctionalProperty")},
        {"InverseFunctionalProperty", owl("InverseFunctionalProperty")},
        {"TransitiveProperty", owl("TransitiveProperty")},
        {"SymmetricProperty", owl("SymmetricProperty")},
        {"AsymmetricProperty", owl("AsymmetricProperty")},
        {"ReflexiveProperty", owl("ReflexiveProperty")},
        {"IrreflexiveProperty", owl("IrreflexiveProperty")},
    };
    for (const auto& [label, p] : predicates)
        t.rows.push_back({Cell{label}, num(g.with_predicate(p).size())});
    std::map<Iri, std::size_t> type_counts;
    for (const Triple* triple : g.with_predicate(v.typeProp))
        if (triple->object.is_iri()) type_counts[triple->object.as_iri()]++;
    for (const auto& [label, type] : characteristic_types) {
        auto it = type_counts.find(type);
        t.rows.push_back({Cell{label}, num(it == type_counts.end() ? 0 : it->second)});
    }
    sort_by_first_column(t);
    return t;
}

std::vector<std::string> table_names() {
    return {"entities", "properties", "spaces", "concepts", "activities", "constraints"};
}

std::string serialize_table(const MetricsTable& t, OutputFormat format) {
    if (format == OutputFormat::Json) {
        nlohmann::ordered_json o;
        o["name"] = t.name;
        o["columns"] = t.columns;
        nlohmann::ordered_json rows = nlohmann::ordered_json::array();
        for (const auto& row : t.rows) {
            nlohmann::ordered_json r = nlohmann::ordered_json::array();
            for (const Cell& c : row) {
                if (std::holds_alternative<std::uint64_t>(c))
                    r.push_back(std::get<std::uint64_t>(c));
                else
                    r.push_back(std::get<std::string>(c));
            }
            rows.push_back(std::move(r));
        }
        o["rows"] = std::move(rows);
        return o.dump(2) + "\n";
    }
    if (format == OutputFormat::Csv) {
        std::ostringstream out;
        for (std::size_t i = 0; i < t.columns.size(); ++i)
            out << (i ? "," : "") << csv_field(t.columns[i]);
        out << '\n';
        for (const auto& row : t.rows) {
            for (std::size_t i = 0; i < row.size(); ++i)
                out << (i ? "," : "") << csv_field(cell_text(row[i]));
            out << '\n';
        }
        return out.str();
    }
    // Text: aligned columns.
    std::vector<std::size_t> widths(t.columns.size());
    for (std::size_t i = 0; i < t.columns.size(); ++i) widths[i] = t.columns[i].size();
    for (const auto& row : t.rows)
        for (std::size_t i = 0; i < row.size(); ++i)
            widths[i] = std::max(widths[i], cell_text(row[i]).size());
    std::ostringstream out;
    out << "table: " << t.name << '\n';
    auto emit_row = [&](const std::vector<std::string>& cells) {
        for (std::size_t i = 0; i < cells.size(); ++i) {
            out << cells[i];
            if (i + 1 < cells.size())
                out << std::string(widths[i] - cells[i].size() + 2, ' ');
        }
        out << '\n';
    };
    emit_row(t.columns);
    for (const auto& row : t.rows) {
        std::vector<std::string> cells;
        for (const Cell& c : row) cells.push_back(cell_text(c));
        emit_row(cells);
    }
    return out.str();
}

}  // namespace ontolint
