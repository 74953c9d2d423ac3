#include <doctest.h>

#include <algorithm>
#include <fstream>
#include <sstream>

#include "ontolint/resolver.hpp"
#include "test_util.hpp"

using namespace ontolint;
using testutil::fixture;

static Vocabulary V;

TEST_CASE("single module without imports") {
    ModuleLocator locator = ModuleLocator::from_directory(fixture(""));
    ImportGraph ig = resolve_imports(fixture("seed.ttl"), locator, V);
    CHECK(ig.nodes.size() == 1);
    CHECK(ig.edges.empty());
    CHECK(ig.unresolved.empty());
}

TEST_CASE("umbrella catalog resolves the tbox-centralized topology") {
    ModuleLocator locator = ModuleLocator::from_catalog_file(fixture("modules/catalog.tsv"));
    ImportGraph ig = resolve_imports(fixture("modules/umbrella.ttl"), locator, V);
    REQUIRE(ig.nodes.size() == 7);
    CHECK(ig.unresolved.empty());
    const Iri tbox("http://example.org/onto/tbox");
    const Iri umbrella("http://example.org/onto/all");
    // every abox imports the tbox; the umbrella imports everything
    for (const char* abox : {"languages", "tools", "formal", "conceptual", "concepts"}) {
        Iri m("http://example.org/onto/" + std::string(abox));
        CHECK(ig.edges.count({m, tbox}) == 1);
        CHECK(ig.edges.count({umbrella, m}) == 1);
    }
    CHECK(ig.edges.count({umbrella, tbox}) == 1);
    CHECK(ig.edges.size() == 11);
    // modules are parsed once each (memoized): node IRIs unique
    std::set<Iri> iris;
    for (const ModuleDescriptor& m : ig.nodes) CHECK(iris.insert(m.ontologyIri).second);
}

TEST_CASE("two-module import cycle terminates with a warning") {
    ModuleLocator locator = ModuleLocator::from_catalog_file(fixture("cyclic2/catalog.tsv"));
    ImportGraph ig = resolve_imports(fixture("cyclic2/a.ttl"), locator, V);
    CHECK(ig.nodes.size() == 2);
    CHECK(ig.edges.size() == 2);
    bool cycle_warned = false;
    for (const std::string& w : ig.warnings)
        if (w.find("cycle") != std::string::npos && w.find("cyc2/a") != std::string::npos &&
            w.find("cyc2/b") != std::string::npos)
            cycle_warned = true;
    CHECK(cycle_warned);
}

TEST_CASE("three-module import cycle terminates with all nodes loaded") {
    ModuleLocator locator = ModuleLocator::from_catalog_file(fixture("cyclic3/catalog.tsv"));
    ImportGraph ig = resolve_imports(fixture("cyclic3/a.ttl"), locator, V);
    CHECK(ig.nodes.size() == 3);
    CHECK(ig.edges.size() == 3);
    bool cycle_warned = false;
    for (const std::string& w : ig.warnings)
        if (w.find("cycle") != std::string::npos) cycle_warned = true;
    CHECK(cycle_warned);
}

TEST_CASE("unresolved imports are collected, not fatal") {
    ModuleLocator locator;  // empty catalog, no scan dirs
    ImportGraph ig = resolve_imports(fixture("modules/umbrella.ttl"), locator, V);
    CHECK(ig.nodes.size() == 1);
    CHECK(ig.unresolved.size() == 6);
}

TEST_CASE("locator falls back to base-name matching in scan directories") {
    ModuleLocator locator = ModuleLocator::from_directory(fixture("modules"));
    auto found = locator.lookup(Iri("http://example.org/onto/tbox"));
    REQUIRE(found.has_value());
    CHECK(found->find("tbox.ttl") != std::string::npos);
    CHECK_FALSE(locator.lookup(Iri("http://example.org/onto/nonexistent")).has_value());
}

TEST_CASE("unparseable entry document is a hard error") {
    ModuleLocator locator;
    CHECK_THROWS(resolve_imports(fixture("modules/catalog.tsv"), locator, V));
}

TEST_CASE("namespace usage counts subjects and objects per module") {
    // hand-checked 5-triple module
    std::string doc =
        "@prefix owl: <http://www.w3.org/2002/07/owl#> .\n"
        "@prefix lang: <http://e/lang#> .\n"
        "@prefix tbox: <http://e/tbox#> .\n"
        "@prefix pe: <http://e/pe#> .\n"
        "<http://e/mod> a owl:Ontology .\n"
        "lang:Java tbox:hasConcept pe:Inheritance .\n"
        "lang:Java tbox:hasConcept pe:StaticTyping .\n"
        "lang:Java a tbox:ProgrammingLanguage .\n"
        "pe:Inheritance tbox:note \"x\" .\n";
    std::string path = fixture("tmp_nsusage.ttl");
    {
        std::ofstream out(path);
        out << doc;
    }
    ModuleLocator locator;
    ImportGraph ig = resolve_imports(path, locator, V);
    NamespaceUsage usage = namespace_usage(ig);
    const Iri mod("http://e/mod");
    auto count = [&](const char* nsiri) {
        auto it = usage.rows.find({mod, Iri(nsiri)});
        return it == usage.rows.end() ? NamespaceCounts{} : it->second;
    };
    CHECK(count("http://e/lang#").subjectCount == 3);
    CHECK(count("http://e/lang#").objectCount == 0);
    CHECK(count("http://e/pe#").subjectCount == 1);
    CHECK(count("http://e/pe#").objectCount == 2);
    CHECK(count("http://e/tbox#").objectCount == 1);  // ProgrammingLanguage as object
    CHECK(count("http://e/").subjectCount == 1);      // the ontology declaration subject

    // totals invariant: sum of subjectCounts equals IRI-subject triples
    std::size_t total = 0;
    for (const auto& [key, counts] : usage.rows)
        if (key.first == mod) total += counts.subjectCount;
    std::size_t iri_subjects = 0;
    for (const Triple& t : ig.nodes[0].graph.triples()) iri_subjects += t.subject.is_iri();
    CHECK(total == iri_subjects);
    std::remove(path.c_str());
}

TEST_CASE("empty module yields no namespace rows") {
    std::string path = fixture("tmp_empty.ttl");
    {
        std::ofstream out(path);
        out << "";
    }
    ModuleLocator locator;
    ImportGraph ig = resolve_imports(path, locator, V);
    CHECK(namespace_usage(ig).rows.empty());
    std::remove(path.c_str());
}

TEST_CASE("dot export: empty graph") {
    ImportGraph ig;
    CHECK(export_dot(ig, DotMode::Imports) == "digraph imports {\n}\n");
}

TEST_CASE("dot export: two-node chain has exactly one edge line") {
    ImportGraph ig;
    ModuleDescriptor a, b;
    a.ontologyIri = Iri("http://e/A");
    b.ontologyIri = Iri("http://e/B");
    ig.nodes = {a, b};
    ig.edges = {{Iri("http://e/A"), Iri("http://e/B")}};
    std::string dot = export_dot(ig, DotMode::Imports);
    CHECK(dot.find("\"http://e/A\" -> \"http://e/B\";") != std::string::npos);
    std::size_t arrows = 0, pos = 0;
    while ((pos = dot.find("->", pos)) != std::string::npos) {
        ++arrows;
        pos += 2;
    }
    CHECK(arrows == 1);
}

TEST_CASE("dot export line count equals nodes + edges + preamble") {
    ModuleLocator locator = ModuleLocator::from_catalog_file(fixture("modules/catalog.tsv"));
    ImportGraph ig = resolve_imports(fixture("modules/umbrella.ttl"), locator, V);
    std::string dot = export_dot(ig, DotMode::Imports);
    std::size_t lines = std::count(dot.begin(), dot.end(), '\n');
    CHECK(lines == ig.nodes.size() + ig.edges.size() + 2);
    // byte-stable across runs
    CHECK(dot == export_dot(resolve_imports(fixture("modules/umbrella.ttl"), locator, V),
                            DotMode::Imports));
}

namespace {

// Independent dot-syntax check: every line must be a digraph header, a
// quoted node, a quoted edge, or the closing brace.
bool valid_dot(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    bool saw_header = false, saw_close = false;
    auto quoted = [](const std::string& s, std::size_t& pos) {
        if (pos >= s.size() || s[pos] != '"') return false;
        ++pos;
        while (pos < s.size() && s[pos] != '"') {
            if (s[pos] == '\\') ++pos;
            ++pos;
        }
        if (pos >= s.size()) return false;
        ++pos;
        return true;
    };
    while (std::getline(in, line)) {
        if (saw_close) return false;  // nothing after '}'
        if (!saw_header) {
            if (line.rfind("digraph ", 0) != 0 || line.back() != '{') return false;
            saw_header = true;
            continue;
        }
        if (line == "}") {
            saw_close = true;
            continue;
        }
        std::size_t pos = 0;
        while (pos < line.size() && line[pos] == ' ') ++pos;
        if (!quoted(line, pos)) return false;
        if (line.compare(pos, 4, " -> ") == 0) {
            pos += 4;
            if (!quoted(line, pos)) return false;
        }
        if (line.substr(pos) != ";") return false;
    }
    return saw_header && saw_close;
}

}  // namespace

TEST_CASE("dot output passes an independent grammar check in both modes") {
    ModuleLocator locator = ModuleLocator::from_catalog_file(fixture("modules/catalog.tsv"));
    ImportGraph ig = resolve_imports(fixture("modules/umbrella.ttl"), locator, V);
    CHECK(valid_dot(export_dot(ig, DotMode::Imports)));
    CHECK(valid_dot(export_dot(ig, DotMode::Namespaces)));
    CHECK(valid_dot(export_dot(ImportGraph{}, DotMode::Imports)));
}

TEST_CASE("duplicate ontology declarations: first wins with a warning") {
    std::string path = fixture("tmp_dupdecl.ttl");
    {
        std::ofstream out(path);
        out << "@prefix owl: <http://www.w3.org/2002/07/owl#> .\n"
               "<http://e/one> a owl:Ontology .\n"
               "<http://e/two> a owl:Ontology .\n";
    }
    ModuleLocator locator;
    ImportGraph ig = resolve_imports(path, locator, V);
    REQUIRE(ig.nodes.size() == 1);
    CHECK(ig.nodes[0].ontologyIri == Iri("http://e/one"));
    bool warned = false;
    for (const std::string& w : ig.warnings)
        if (w.find("duplicate ontology declarations") != std::string::npos) warned = true;
    CHECK(warned);
    std::remove(path.c_str());
}

TEST_CASE("catalog parse errors are reported with line numbers") {
    std::string path = fixture("tmp_badcatalog.tsv");
    {
        std::ofstream out(path);
        out << "no-tab-here\n";
    }
    CHECK_THROWS_WITH_AS(ModuleLocator::from_catalog_file(path), doctest::Contains(":1"),
                         std::runtime_error);
    std::remove(path.c_str());
}
