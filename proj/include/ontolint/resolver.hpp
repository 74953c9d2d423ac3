#pragma once
// owl:imports closure resolution, module dependency graph, namespace usage.

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "ontolint/graph.hpp"
#include "ontolint/vocabulary.hpp"

namespace ontolint {

struct ModuleDescriptor {
    Iri ontologyIri;
    std::string sourceId;        // file path or URL the module was read from
    std::vector<Iri> imports;    // declared owl:imports, duplicates removed
    Graph graph;
};

struct ImportGraph {
    std::vector<ModuleDescriptor> nodes;      // sorted by ontologyIri
    std::set<std::pair<Iri, Iri>> edges;      // (importer, imported)
    std::set<Iri> unresolved;                 // imports the locator could not map
    std::vector<std::string> warnings;        // cycles, duplicate declarations

    const ModuleDescriptor* find(const Iri& ontology) const;
    // Union of all module graphs, blank nodes renamed apart.
    MergeResult merged() const;
};

// Maps ontology IRIs to source documents. Lookups are resolved against the
// catalog first, then against a directory scan matching file base names.
class ModuleLocator {
public:
    static ModuleLocator from_catalog_file(const std::string& path);
    static ModuleLocator from_directory(const std::string& dir);

    void add_mapping(const Iri& ontology, const std::string& path);
    void add_scan_directory(const std::string& dir);

    std::optional<std::string> lookup(const Iri& ontology) const;
    const std::map<Iri, std::string>& catalog() const { return catalog_; }

private:
    std::map<Iri, std::string> catalog_;
    std::vector<std::string> scan_dirs_;
};

// Breadth-first owl:imports closure from the entry document, memoized per
// module. Cyclic imports terminate and yield a warning naming the cycle;
// unresolved imports are collected, not fatal. An unparseable entry document
// throws.
ImportGraph resolve_imports(const std::string& entry_source, const ModuleLocator& locator,
                            const Vocabulary& v);

struct NamespaceCounts {
    std::size_t subjectCount = 0;
    std::size_t objectCount = 0;
};

struct NamespaceUsage {
    // (module IRI, namespace IRI) -> counts
    std::map<std::pair<Iri, Iri>, NamespaceCounts> rows;
};

// Per-module triple counts grouped by the namespace of subject/object IRIs.
// The namespace of an IRI is its longest declared prefix namespace, else the
// substring up to the last '#' or '/'.
NamespaceUsage namespace_usage(const ImportGraph& ig);

enum class DotMode { Imports, Namespaces };

// Deterministic Graphviz text: nodes sorted lexicographically, one line per
// node and per edge.
std::string export_dot(const ImportGraph& ig, DotMode mode);

}  // namespace ontolint
