#include "ontolint/resolver.hpp"

#include <algorithm>
#include <deque>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "ontolint/turtle.hpp"

namespace fs = std::filesystem;

namespace ontolint {

const ModuleDescriptor* ImportGraph::find(const Iri& ontology) const {
    for (const ModuleDescriptor& m : nodes)
        if (m.ontologyIri == ontology) return &m;
    return nullptr;
}

MergeResult ImportGraph::merged() const {
    std::vector<Graph> graphs;
    graphs.reserve(nodes.size());
    for (const ModuleDescriptor& m : nodes) graphs.push_back(m.graph);
    return merge(graphs);
}

ModuleLocator ModuleLocator::from_catalog_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open catalog file: " + path);
    ModuleLocator locator;
    const fs::path dir = fs::path(path).parent_path();
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line[0] == '#') continue;
        auto tab = line.find('\t');
        if (tab == std::string::npos)
            throw std::runtime_error(path + ":" + std::to_string(lineno) +
                                     ": expected '<iri> <tab> <path>'");
        std::string iri = line.substr(0, tab);
        std::string rel = line.substr(tab + 1);
        if (!is_absolute_iri(iri))
            throw std::runtime_error(path + ":" + std::to_string(lineno) +
                                     ": not an absolute IRI: '" + iri + "'");
        locator.add_mapping(Iri(iri), (dir / rel).string());
    }
    locator.add_scan_directory(dir.string());
    return locator;
}

ModuleLocator ModuleLocator::from_directory(const std::string& dir) {
    ModuleLocator locator;
    locator.add_scan_directory(dir);
    return locator;
}

void ModuleLocator::add_mapping(const Iri& ontology, const std::string& path) {
    catalog_[ontology] = path;
}

void ModuleLocator::add_scan_directory(const std::string& dir) { scan_dirs_.push_back(dir); }

std::optional<std::string> ModuleLocator::lookup(const Iri& ontology) const {
    auto it = catalog_.find(ontology);
    if (it != catalog_.end()) return it->second;
    // Fallback: match the IRI's base name against files in the scan dirs.
    std::string name = ontology.local_name();
    if (name.empty()) return std::nullopt;
    for (const std::string& dir : scan_dirs_) {
        std::error_code ec;
        if (!fs::is_directory(dir, ec)) continue;
        std::vector<std::string> candidates;
        for (const auto& entry : fs::directory_iterator(dir, ec)) {
            if (!entry.is_regular_file()) continue;
            if (entry.path().stem().string() == name) candidates.push_back(entry.path().string());
        }
        std::sort(candidates.begin(), candidates.end());
        if (!candidates.empty()) return candidates.front();
    }
    return std::nullopt;
}

namespace {

ModuleDescriptor describe(Graph graph, const Vocabulary& v, std::vector<std::string>& warnings) {
    ModuleDescriptor m;
    m.sourceId = graph.source_id();
    std::vector<Iri> declared;
    for (const Triple* t : graph.with_predicate(v.typeProp))
        if (t->object.is_iri() && t->object.as_iri() == v.ontologyDecl && t->subject.is_iri())
            declared.push_back(t->subject.as_iri());
    if (declared.empty()) {
        m.ontologyIri = Iri("file://" + m.sourceId);  // undeclared module: synthetic identity
    } else {
        m.ontologyIri = declared.front();
        if (declared.size() > 1)
            warnings.push_back("duplicate ontology declarations in " + m.sourceId +
                               "; keeping <" + declared.front().value + ">");
    }
    std::set<Iri> seen;
    for (const Triple* t : graph.with_predicate(v.importsProp))
        if (t->object.is_iri() && seen.insert(t->object.as_iri()).second)
            m.imports.push_back(t->object.as_iri());
    m.graph = std::move(graph);
    return m;
}

// Nodes on import cycles: strongly connected components of size > 1 plus
// self-loops, found by iterative Tarjan.
std::vector<std::vector<Iri>> import_cycles(const ImportGraph& ig) {
    std::map<Iri, std::vector<Iri>> adj;
    std::set<Iri> nodes;
    for (const auto& [from, to] : ig.edges) {
        nodes.insert(from);
        nodes.insert(to);
        adj[from].push_back(to);
    }
    std::map<Iri, int> index, low;
    std::map<Iri, bool> on_stack;
    std::vector<Iri> stack;
    int counter = 0;
    std::vector<std::vector<Iri>> cycles;

    struct Frame {
        Iri node;
        std::size_t child = 0;
    };
    for (const Iri& start : nodes) {
        if (index.count(start)) continue;
        std::vector<Frame> frames{{start}};
        index[start] = low[start] = counter++;
        stack.push_back(start);
        on_stack[start] = true;
        while (!frames.empty()) {
            Frame& f = frames.back();
            auto& children = adj[f.node];
            if (f.child < children.size()) {
                Iri next = children[f.child++];
                if (!index.count(next)) {
                    index[next] = low[next] = counter++;
                    stack.push_back(next);
                    on_stack[next] = true;
                    frames.push_back({next});
                } else if (on_stack[next]) {
                    low[f.node] = std::min(low[f.node], index[next]);
                }
            } else {
                if (low[f.node] == index[f.node]) {
                    std::vector<Iri> scc;
                    while (true) {
                        Iri w = stack.back();
                        stack.pop_back();
                        on_stack[w] = false;
                        scc.push_back(w);
                        if (w == f.node) break;
                    }
                    bool self_loop = scc.size() == 1 &&
                                     std::count(adj[scc[0]].begin(), adj[scc[0]].end(), scc[0]) > 0;
                    if (scc.size() > 1 || self_loop) {
                        std::sort(scc.begin(), scc.end());
                        cycles.push_back(std::move(scc));
                    }
                }
                Iri done = f.node;
                frames.pop_back();
                if (!frames.empty())
                    low[frames.back().node] = std::min(low[frames.back().node], low[done]);
            }
        }
    }
    std::sort(cycles.begin(), cycles.end());
    return cycles;
}

}  // namespace

ImportGraph resolve_imports(const std::string& entry_source, const ModuleLocator& locator,
                            const Vocabulary& v) {
    ImportGraph ig;
    Graph entry_graph = parse_turtle_file(entry_source);  // unparseable entry throws
    ModuleDescriptor entry = describe(std::move(entry_graph), v, ig.warnings);

    std::map<Iri, ModuleDescriptor> loaded;
    std::set<std::string> loaded_sources{entry.sourceId};
    std::deque<Iri> queue;
    auto enqueue_imports = [&](const ModuleDescriptor& m) {
        for (const Iri& imp : m.imports) {
            ig.edges.insert({m.ontologyIri, imp});
            queue.push_back(imp);
        }
    };
    Iri entry_iri = entry.ontologyIri;
    loaded.emplace(entry_iri, std::move(entry));
    enqueue_imports(loaded.at(entry_iri));

    while (!queue.empty()) {
        Iri target = queue.front();
        queue.pop_front();
        if (loaded.count(target) || ig.unresolved.count(target)) continue;
        auto source = locator.lookup(target);
        if (!source) {
            ig.unresolved.insert(target);
            continue;
        }
        if (loaded_sources.count(*source)) {
            // Same file reached under a second IRI: keep the first identity.
            ig.unresolved.insert(target);
            ig.warnings.push_back("import <" + target.value + "> maps to already-loaded " +
                                  *source);
            continue;
        }
        Graph g;
        try {
            g = parse_turtle_file(*source);
        } catch (const std::exception& e) {
            ig.unresolved.insert(target);
            ig.warnings.push_back("failed to load <" + target.value + "> from " + *source + ": " +
                                  e.what());
            continue;
        }
        loaded_sources.insert(*source);
        ModuleDescriptor m = describe(std::move(g), v, ig.warnings);
        if (m.ontologyIri != target && !loaded.count(m.ontologyIri))
            ig.warnings.push_back("module at " + *source + " declares <" + m.ontologyIri.value +
                                  "> but was imported as <" + target.value + ">");
        Iri key = m.ontologyIri;
        auto [it, inserted] = loaded.emplace(key, std::move(m));
        if (inserted) enqueue_imports(it->second);
    }

    for (auto& [iri, m] : loaded) ig.nodes.push_back(std::move(m));
    std::sort(ig.nodes.begin(), ig.nodes.end(),
              [](const ModuleDescriptor& a, const ModuleDescriptor& b) {
                  return a.ontologyIri < b.ontologyIri;
              });
    // Resolved edge endpoints must be nodes; edges to unresolved IRIs remain.
    for (const auto& cycle : import_cycles(ig)) {
        std::string msg = "import cycle: {";
        for (std::size_t i = 0; i < cycle.size(); ++i)
            msg += (i ? ", " : "") + std::string("<") + cycle[i].value + ">";
        msg += "}";
        ig.warnings.push_back(std::move(msg));
    }
    return ig;
}

namespace {

std::string namespace_of(const Iri& iri, const std::vector<std::string>& namespaces) {
    std::size_t best = 0;
    const std::string* found = nullptr;
    for (const std::string& n : namespaces) {
        if (n.size() > best && iri.value.rfind(n, 0) == 0) {
            best = n.size();
            found = &n;
        }
    }
    if (found) return *found;
    return iri.namespace_part();
}

}  // namespace

NamespaceUsage namespace_usage(const ImportGraph& ig) {
    std::vector<std::string> declared;
    for (const ModuleDescriptor& m : ig.nodes)
        for (const auto& [prefix, nsiri] : m.graph.prefixes()) declared.push_back(nsiri);
    std::sort(declared.begin(), declared.end());
    declared.erase(std::unique(declared.begin(), declared.end()), declared.end());

    NamespaceUsage usage;
    for (const ModuleDescriptor& m : ig.nodes) {
        for (const Triple& t : m.graph.triples()) {
            if (t.subject.is_iri()) {
                std::string n = namespace_of(t.subject.as_iri(), declared);
                if (!n.empty()) usage.rows[{m.ontologyIri, Iri(n)}].subjectCount++;
            }
            if (t.object.is_iri()) {
                std::string n = namespace_of(t.object.as_iri(), declared);
                if (!n.empty()) usage.rows[{m.ontologyIri, Iri(n)}].objectCount++;
            }
        }
    }
    return usage;
}

std::string export_dot(const ImportGraph& ig, DotMode mode) {
    std::ostringstream out;
    auto quote = [](const std::string& s) {
        std::string q = "\"";
        for (char c : s) {
            if (c == '"' || c == '\\') q += '\\';
            q += c;
        }
        return q + "\"";
    };
    if (mode == DotMode::Imports) {
        out << "digraph imports {\n";
        std::set<std::string> node_names;
        for (const ModuleDescriptor& m : ig.nodes) node_names.insert(m.ontologyIri.value);
        for (const Iri& u : ig.unresolved) node_names.insert(u.value);
        for (const std::string& n : node_names) out << "  " << quote(n) << ";\n";
        for (const auto& [from, to] : ig.edges)
            out << "  " << quote(from.value) << " -> " << quote(to.value) << ";\n";
        out << "}\n";
        return out.str();
    }
    // Namespace panel: edges from subject namespaces to object namespaces.
    NamespaceUsage usage = namespace_usage(ig);
    std::set<std::string> nodes;
    std::set<std::pair<std::string, std::string>> edges;
    std::vector<std::string> declared;
    for (const ModuleDescriptor& m : ig.nodes)
        for (const auto& [prefix, nsiri] : m.graph.prefixes()) declared.push_back(nsiri);
    std::sort(declared.begin(), declared.end());
    declared.erase(std::unique(declared.begin(), declared.end()), declared.end());
    for (const ModuleDescriptor& m : ig.nodes) {
        for (const Triple& t : m.graph.triples()) {
            if (!t.subject.is_iri() || !t.object.is_iri()) continue;
            std::string sn = namespace_of(t.subject.as_iri(), declared);
            std::string on = namespace_of(t.object.as_iri(), declared);
            if (sn.empty() || on.empty()) continue;
            nodes.insert(sn);
            nodes.insert(on);
            if (sn != on) edges.insert({sn, on});
        }
    }
    out << "digraph namespaces {\n";
    for (const std::string& n : nodes) out << "  " << quote(n) << ";\n";
    for (const auto& [from, to] : edges)
        out << "  " << quote(from) << " -> " << quote(to) << ";\n";
    out << "}\n";
    return out.str();
}

}  // namespace ontolint
