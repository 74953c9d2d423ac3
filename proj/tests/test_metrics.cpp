#include <doctest.h>

#include <fstream>
#include <sstream>

#include "ontolint/metrics.hpp"
#include "ontolint/resolver.hpp"
#include "ontolint/turtle.hpp"
#include "oracles.hpp"
#include "test_util.hpp"

using namespace ontolint;
using testutil::fixture;

namespace {

const Vocabulary V;

struct Loaded {
    Graph graph;
    EntityIndex index;
    explicit Loaded(const std::string& turtle)
        : graph(parse_turtle(turtle)), index(classify_entities(graph, V)) {}
};

std::uint64_t row_value(const MetricsTable& t, const std::string& key, std::size_t col = 1) {
    for (const auto& row : t.rows)
        if (cell_text(row[0]) == key) return std::get<std::uint64_t>(row[col]);
    FAIL("row not found: " << key);
    return 0;
}

std::string row_text(const MetricsTable& t, const std::string& key, std::size_t col) {
    for (const auto& row : t.rows)
        if (cell_text(row[0]) == key) return cell_text(row[col]);
    FAIL("row not found: " << key);
    return "";
}

}  // namespace

TEST_CASE("entity table sums instances and subclasses") {
    Loaded l(
        "@prefix tbox: <http://example.org/onto/tbox#> .\n"
        "@prefix rdfs: <http://www.w3.org/2000/01/rdf-schema#> .\n"
        "@prefix ex: <http://e/> .\n"
        "ex:Dsl rdfs:subClassOf tbox:Language .\n"
        "ex:java a tbox:Language .\n"
        "ex:sql a ex:Dsl .\n");
    MetricsTable t = report_entity_types(l.graph, l.index, V);
    CHECK(row_value(t, "Language", 1) == 3);  // entities
    CHECK(row_value(t, "Language", 2) == 2);  // instances
    CHECK(row_value(t, "Language", 3) == 1);  // subclasses
    CHECK(row_value(t, "Tool", 1) == 0);
    CHECK(row_value(t, "Tool", 2) == 0);
    CHECK(row_value(t, "Tool", 3) == 0);
}

TEST_CASE("entity table on the module fixture equals closure+type counting") {
    ModuleLocator locator = ModuleLocator::from_catalog_file(fixture("modules/catalog.tsv"));
    ImportGraph ig = resolve_imports(fixture("modules/umbrella.ttl"), locator, V);
    Graph g = ig.merged().graph;
    EntityIndex idx = classify_entities(g, V);
    MetricsTable t = report_entity_types(g, idx, V);
    struct Root {
        const char* label;
        Iri iri;
    };
    for (const Root& r : {Root{"Language", V.languageRoot}, Root{"Tool", V.toolRoot},
                          Root{"FormalEntity", V.formalEntityRoot},
                          Root{"LanguageConcept", V.languageConceptRoot}}) {
        std::size_t instances = oracle::instances(g, V, r.iri, true).size();
        std::size_t subclasses = oracle::closure_bfs(g, V, r.iri).size() - 1;
        CHECK(row_value(t, r.label, 2) == instances);
        CHECK(row_value(t, r.label, 3) == subclasses);
        CHECK(row_value(t, r.label, 1) == instances + subclasses);
    }
}

TEST_CASE("property table counts assertions and reads metadata") {
    Loaded l(
        "@prefix ex: <http://e/> .\n"
        "@prefix owl: <http://www.w3.org/2002/07/owl#> .\n"
        "@prefix rdfs: <http://www.w3.org/2000/01/rdf-schema#> .\n"
        "ex:uses a owl:ObjectProperty ; rdfs:domain ex:Entity ; rdfs:range ex:Entity .\n"
        "ex:usedBy a owl:ObjectProperty ; owl:inverseOf ex:uses .\n"
        "ex:note a owl:AnnotationProperty .\n"
        "ex:size a owl:DatatypeProperty .\n"
        "ex:a ex:uses ex:b . ex:b ex:uses ex:c . ex:c ex:uses ex:a .\n");
    MetricsTable t = report_properties(l.graph, l.index, V);
    CHECK(row_value(t, "uses", 1) == 3);
    CHECK(row_text(t, "uses", 2) == "O");
    CHECK(row_text(t, "uses", 3) == "Entity");
    CHECK(row_text(t, "uses", 4) == "Entity");
    CHECK(row_text(t, "uses", 5) == "usedBy");  // inverse via the reverse declaration
    CHECK(row_value(t, "note", 1) == 0);
    CHECK(row_text(t, "note", 2) == "A");
    CHECK(row_text(t, "size", 2) == "D");
    // sorted by assertion count descending, then name
    CHECK(cell_text(t.rows[0][0]) == "uses");
}

TEST_CASE("spaces table: empty graph is all zeros; fixture matches set-building") {
    Loaded empty("");
    MetricsTable zero = report_spaces(empty.graph, empty.index, V);
    for (const char* metric : {"instances", "subclasses", "spaces_with_languages",
                               "spaces_with_tools", "spaces_with_artifacts",
                               "languages_with_spaces", "tools_with_spaces",
                               "artifacts_with_spaces"})
        CHECK(row_value(zero, metric) == 0);

    std::ifstream in(fixture("modelware.ttl"));
    std::stringstream buf;
    buf << in.rdbuf();
    Loaded l(buf.str());
    MetricsTable t = report_spaces(l.graph, l.index, V);
    CHECK(row_value(t, "instances") == 1);
    CHECK(row_value(t, "subclasses") == 0);  // no subclassing on spaces
    CHECK(row_value(t, "spaces_with_languages") == 1);
    CHECK(row_value(t, "spaces_with_tools") == 1);
    CHECK(row_value(t, "spaces_with_artifacts") == 1);
    CHECK(row_value(t, "languages_with_spaces") == 2);  // ATL and QVT
    CHECK(row_value(t, "tools_with_spaces") == 1);
    CHECK(row_value(t, "artifacts_with_spaces") == 2);  // Model and Metamodel
}

TEST_CASE("spaces metrics equal independent set-building on random worlds") {
    std::mt19937 rng(71);
    Vocabulary v;
    for (int round = 0; round < 20; ++round) {
        std::vector<Triple> triples;
        std::uniform_int_distribution<int> coin(0, 1);
        std::uniform_int_distribution<int> nspaces(1, 4);
        std::uniform_int_distribution<int> nents(0, 10);
        int spaces = nspaces(rng);
        for (int s = 0; s < spaces; ++s)
            triples.push_back({testutil::node("sp" + std::to_string(s)), v.typeProp,
                               Term::iri(v.technologicalSpaceRoot)});
        int ents = nents(rng);
        const std::vector<Iri> roots{v.languageRoot, v.toolRoot, v.artifactRoot};
        std::uniform_int_distribution<int> pick_root(0, 2);
        std::uniform_int_distribution<int> pick_space(0, spaces - 1);
        for (int e = 0; e < ents; ++e) {
            Iri x = testutil::iri("e" + std::to_string(e));
            triples.push_back({Term::iri(x), v.typeProp,
                               Term::iri(roots[static_cast<std::size_t>(pick_root(rng))])});
            if (coin(rng))
                triples.push_back({Term::iri(x), v.hasSpace,
                                   testutil::node("sp" + std::to_string(pick_space(rng)))});
        }
        Graph g = Graph::from_triples(triples);
        EntityIndex idx = classify_entities(g, v);
        MetricsTable t = report_spaces(g, idx, v);

        // independent set-building per metric
        std::set<Iri> space_set = oracle::instances(g, v, v.technologicalSpaceRoot, true);
        auto kind_of = [&](const Iri& x, const Iri& root) {
            for (const Triple& tr : g.triples())
                if (tr.predicate == v.typeProp && tr.subject.is_iri() &&
                    tr.subject.as_iri() == x && tr.object.is_iri() &&
                    oracle::closure_bfs(g, v, root).count(tr.object.as_iri()))
                    return true;
            return oracle::closure_bfs(g, v, root).count(x) > 0;
        };
        std::map<std::string, std::set<Iri>> with_spaces;
        std::map<std::string, std::set<Iri>> spaces_with;
        for (const Triple& tr : g.triples()) {
            if (tr.predicate != v.hasSpace || !tr.subject.is_iri() || !tr.object.is_iri())
                continue;
            Iri ent = tr.subject.as_iri();
            Iri space = tr.object.as_iri();
            if (!space_set.count(space)) continue;
            if (kind_of(ent, v.languageRoot)) {
                with_spaces["lang"].insert(ent);
                spaces_with["lang"].insert(space);
            }
            if (kind_of(ent, v.toolRoot)) {
                with_spaces["tool"].insert(ent);
                spaces_with["tool"].insert(space);
            }
            if (kind_of(ent, v.artifactRoot)) {
                with_spaces["art"].insert(ent);
                spaces_with["art"].insert(space);
            }
        }
        CHECK(row_value(t, "instances") == space_set.size());
        CHECK(row_value(t, "spaces_with_languages") == spaces_with["lang"].size());
        CHECK(row_value(t, "spaces_with_tools") == spaces_with["tool"].size());
        CHECK(row_value(t, "spaces_with_artifacts") == spaces_with["art"].size());
        CHECK(row_value(t, "languages_with_spaces") == with_spaces["lang"].size());
        CHECK(row_value(t, "tools_with_spaces") == with_spaces["tool"].size());
        CHECK(row_value(t, "artifacts_with_spaces") == with_spaces["art"].size());
    }
}

TEST_CASE("concepts table distinguishes used from declared") {
    ModuleLocator locator = ModuleLocator::from_catalog_file(fixture("modules/catalog.tsv"));
    ImportGraph ig = resolve_imports(fixture("modules/umbrella.ttl"), locator, V);
    Graph g = ig.merged().graph;
    EntityIndex idx = classify_entities(g, V);
    MetricsTable t = report_concepts(g, idx, V);
    // 7 concept individuals in the concepts module, one never exercised
    CHECK(row_value(t, "instances") == 7);
    CHECK(row_value(t, "used_instances") == 6);
    CHECK(row_value(t, "subclasses") == 0);
    CHECK(row_value(t, "concepts") == 7);
    CHECK(row_value(t, "properties") == 1);  // hasConcept only
    // Java, Haskell, OCL carry concept assertions; Java and Haskell are PLs
    CHECK(row_value(t, "software_languages") == 3);
    CHECK(row_value(t, "programming_languages") == 2);
}

TEST_CASE("concepts: a subclass-only concept counts as subclass, not used") {
    Loaded l(
        "@prefix tbox: <http://example.org/onto/tbox#> .\n"
        "@prefix rdfs: <http://www.w3.org/2000/01/rdf-schema#> .\n"
        "@prefix ex: <http://e/> .\n"
        "ex:TypingConcept rdfs:subClassOf tbox:LanguageConcept .\n");
    MetricsTable t = report_concepts(l.graph, l.index, V);
    CHECK(row_value(t, "subclasses") == 1);
    CHECK(row_value(t, "used_subclasses") == 0);
    CHECK(row_value(t, "instances") == 0);
}

TEST_CASE("activities table: two-level hierarchy arithmetic") {
    std::ifstream in(fixture("activities.ttl"));
    std::stringstream buf;
    buf << in.rdbuf();
    Loaded l(buf.str());
    MetricsTable t = report_activities(l.graph, l.index, V);
    CHECK(row_value(t, "instances") == 0);
    CHECK(row_value(t, "immediate_subclasses") == 10);
    CHECK(row_value(t, "nonimmediate_subclasses") == 2);
    std::size_t total = oracle::closure_bfs(l.graph, V, V.seActivityRoot).size() - 1;
    CHECK(row_value(t, "nonimmediate_subclasses") == total - row_value(t, "immediate_subclasses"));
    CHECK(row_value(t, "used_nonimmediate_subclasses") == 1);  // CodeGeneration
    // type-level links only: zeroes at the instance level evidence punning
    CHECK(row_value(t, "language_instances") == 0);
    CHECK(row_value(t, "language_subclasses") == 1);
    CHECK(row_value(t, "tool_instances") == 0);
    CHECK(row_value(t, "tool_subclasses") == 1);
    CHECK(row_value(t, "artifacts") == 1);
}

TEST_CASE("constraints table tallies per construct") {
    Loaded empty("");
    for (const auto& row : report_constraints(empty.graph, V).rows)
        CHECK(std::get<std::uint64_t>(row[1]) == 0);

    Loaded l(
        "@prefix ex: <http://e/> .\n"
        "@prefix owl: <http://www.w3.org/2002/07/owl#> .\n"
        "@prefix rdfs: <http://www.w3.org/2000/01/rdf-schema#> .\n"
        "ex:p owl:inverseOf ex:q .\n"
        "ex:r owl:inverseOf ex:s .\n"
        "ex:A owl:disjointWith ex:B .\n"
        "ex:p rdfs:domain ex:A .\n"
        "ex:p rdfs:range ex:B .\n"
        "ex:p a owl:IrreflexiveProperty .\n"
        "ex:A owl:equivalentClass ex:C .\n"
        "[] a owl:AllDisjointClasses ; owl:members ( ex:A ex:B ex:C ) .\n");
    MetricsTable t = report_constraints(l.graph, V);
    CHECK(row_value(t, "inverseOf") == 2);
    CHECK(row_value(t, "disjointWith") == 1);
    CHECK(row_value(t, "domain") == 1);
    CHECK(row_value(t, "range") == 1);
    CHECK(row_value(t, "IrreflexiveProperty") == 1);
    CHECK(row_value(t, "equivalentClass") == 1);
    CHECK(row_value(t, "AllDisjointClasses") == 1);
    CHECK(row_value(t, "cardinality") == 0);
}

TEST_CASE("adding an unrelated triple changes no table") {
    std::ifstream in(fixture("modelware.ttl"));
    std::stringstream buf;
    buf << in.rdbuf();
    std::string doc = buf.str();
    Loaded before(doc);
    Loaded after(doc + "\n<http://elsewhere/a> <http://elsewhere/p> <http://elsewhere/b> .\n");
    for (int table = 0; table < 4; ++table) {
        MetricsTable a, b;
        switch (table) {
            case 0:
                a = report_spaces(before.graph, before.index, V);
                b = report_spaces(after.graph, after.index, V);
                break;
            case 1:
                a = report_entity_types(before.graph, before.index, V);
                b = report_entity_types(after.graph, after.index, V);
                break;
            case 2:
                a = report_activities(before.graph, before.index, V);
                b = report_activities(after.graph, after.index, V);
                break;
            default:
                a = report_constraints(before.graph, V);
                b = report_constraints(after.graph, V);
        }
        CHECK(serialize_table(a, OutputFormat::Csv) == serialize_table(b, OutputFormat::Csv));
    }
}

TEST_CASE("serialize_table: empty table, single row, round-trip") {
    MetricsTable empty{"demo", {"a", "b"}, {}};
    CHECK(serialize_table(empty, OutputFormat::Csv) == "a,b\n");

    MetricsTable one{"demo", {"a", "b"}, {{Cell{std::string("x")}, Cell{std::uint64_t{7}}}}};
    std::string csv = serialize_table(one, OutputFormat::Csv);
    CHECK(std::count(csv.begin(), csv.end(), '\n') == 2);

    MetricsTable tricky{"demo",
                        {"name", "value"},
                        {{Cell{std::string("has,comma")}, Cell{std::uint64_t{1}}},
                         {Cell{std::string("has\"quote\"")}, Cell{std::uint64_t{2}}},
                         {Cell{std::string("multi\nline")}, Cell{std::uint64_t{3}}}}};
    auto rows = testutil::read_csv(serialize_table(tricky, OutputFormat::Csv));
    REQUIRE(rows.size() == 4);
    CHECK(rows[0] == std::vector<std::string>{"name", "value"});
    CHECK(rows[1][0] == "has,comma");
    CHECK(rows[2][0] == "has\"quote\"");
    CHECK(rows[3][0] == "multi\nline");
    CHECK(rows[3][1] == "3");
}

TEST_CASE("json table output keeps integers as numbers") {
    MetricsTable t{"demo", {"m", "count"}, {{Cell{std::string("x")}, Cell{std::uint64_t{5}}}}};
    std::string json = serialize_table(t, OutputFormat::Json);
    CHECK(json.find("5") != std::string::npos);
    CHECK(json.find("\"5\"") == std::string::npos);
    CHECK(json.back() == '\n');
}
