#include "ontolint/entity_index.hpp"

#include <deque>

namespace ontolint {

const EntityRoles& EntityIndex::roles(const Iri& iri) const {
    static const EntityRoles none;
    auto it = entries_.find(iri);
    return it == entries_.end() ? none : it->second;
}

std::vector<Iri> EntityIndex::classes() const {
    std::vector<Iri> out;
    for (const auto& [iri, r] : entries_)
        if (r.isClass) out.push_back(iri);
    return out;
}

std::vector<Iri> EntityIndex::individuals() const {
    std::vector<Iri> out;
    for (const auto& [iri, r] : entries_)
        if (r.isIndividual) out.push_back(iri);
    return out;
}

std::vector<Iri> EntityIndex::punned() const {
    std::vector<Iri> out;
    for (const auto& [iri, r] : entries_)
        if (r.is_punned()) out.push_back(iri);
    return out;
}

EntityIndex classify_entities(const Graph& g, const Vocabulary& v) {
    EntityIndex index;
    auto& entries = index.entries_;
    const std::string& doc = g.source_id();
    auto mark_declared = [&](const Iri& iri) {
        if (!doc.empty()) entries[iri].declaringDocuments.insert(doc);
    };
    for (const Triple& t : g.triples()) {
        if (t.predicate == v.subClassProp) {
            if (t.object.is_iri()) entries[t.object.as_iri()].isClass = true;
            continue;
        }
        if (t.predicate != v.typeProp) continue;
        if (!t.object.is_iri()) continue;
        const Iri type = t.object.as_iri();
        const bool named_subject = t.subject.is_iri();
        if (v.is_declaration_class(type)) {
            if (!named_subject) continue;
            const Iri s = t.subject.as_iri();
            EntityRoles& r = entries[s];
            if (type == v.classDecl) r.isClass = true;
            else if (type == v.namedIndividualDecl) r.isIndividual = true;
            else if (type == v.objectPropDecl) r.isObjectProp = true;
            else if (type == v.annotationPropDecl) r.isAnnotationProp = true;
            else if (type == v.datatypePropDecl) r.isDatatypeProp = true;
            mark_declared(s);
        } else {
            entries[type].isClass = true;
            if (named_subject) entries[t.subject.as_iri()].isIndividual = true;
        }
    }
    return index;
}

SubclassClosure subclass_closure(const Graph& g, const Vocabulary& v, const Iri& c) {
    SubclassClosure result;
    result.classes.insert(c);
    std::deque<Iri> queue{c};
    while (!queue.empty()) {
        Iri cur = queue.front();
        queue.pop_front();
        for (const Iri& sub : g.iri_subjects(v.subClassProp, cur))
            if (result.classes.insert(sub).second) queue.push_back(sub);
    }
    // Cycle check on the member subgraph: Kahn's algorithm leaves cycle
    // nodes unprocessed.
    std::map<Iri, std::set<Iri>> children;  // super -> subs, members only
    std::map<Iri, std::size_t> indegree;
    for (const Iri& m : result.classes) indegree[m];
    for (const Iri& m : result.classes)
        for (const Iri& sub : g.iri_subjects(v.subClassProp, m))
            if (result.classes.count(sub) && children[m].insert(sub).second) ++indegree[sub];
    std::deque<Iri> ready;
    for (const auto& [node, deg] : indegree)
        if (deg == 0) ready.push_back(node);
    std::size_t processed = 0;
    while (!ready.empty()) {
        Iri node = ready.front();
        ready.pop_front();
        ++processed;
        for (const Iri& sub : children[node])
            if (--indegree[sub] == 0) ready.push_back(sub);
    }
    result.cyclic = processed < result.classes.size();
    return result;
}

std::set<Iri> instances_of(const Graph& g, const Vocabulary& v, const Iri& c, bool transitive) {
    std::set<Iri> types;
    if (transitive)
        types = subclass_closure(g, v, c).classes;
    else
        types.insert(c);
    std::set<Iri> out;
    for (const Triple* t : g.with_predicate(v.typeProp)) {
        if (!t->subject.is_iri() || !t->object.is_iri()) continue;
        const Iri type = t->object.as_iri();
        if (type == v.namedIndividualDecl) continue;  // declaration, not a type
        if (types.count(type)) out.insert(t->subject.as_iri());
    }
    return out;
}

std::set<Iri> direct_subclasses(const Graph& g, const Vocabulary& v, const Iri& c) {
    std::set<Iri> out;
    for (const Iri& s : g.iri_subjects(v.subClassProp, c)) out.insert(s);
    return out;
}

}  // namespace ontolint
