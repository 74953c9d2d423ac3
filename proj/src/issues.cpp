#include "ontolint/issues.hpp"

#include <algorithm>
#include <sstream>

#include <json.hpp>

namespace ontolint {

const Issue* IssueLedger::find(const Iri& id) const {
    for (const Issue& i : issues)
        if (i.id == id) return &i;
    return nullptr;
}

IssueLedger parse_issues(const Graph& g, const Vocabulary& v) {
    IssueLedger ledger;
    std::set<Iri> ids;
    for (const Triple* t : g.with_predicate(v.typeProp)) {
        if (!t->subject.is_iri() || !t->object.is_iri()) continue;
        if (t->object.as_iri() != v.issueClass) continue;
        ids.insert(t->subject.as_iri());
    }
    for (const Iri& id : ids) {
        Issue issue;
        issue.id = id;
        auto targets = g.objects(Term::iri(id), v.issueTarget);
        if (!targets.empty()) issue.target = targets.front();
        for (const Term& o : g.objects(Term::iri(id), v.issueCritique))
            if (o.is_literal() && issue.critique.empty()) issue.critique = o.value;
        for (const Term& o : g.objects(Term::iri(id), v.issueSuggestion))
            if (o.is_literal() && issue.suggestion.empty()) issue.suggestion = o.value;
        for (const Term& o : g.objects(Term::iri(id), v.issueResolveAfter))
            if (o.is_iri()) issue.resolveAfter.insert(o.as_iri());
        for (const Term& o : g.objects(Term::iri(id), v.issueStatus)) {
            if (o.is_literal())
                issue.status = o.value;
            else if (o.is_iri())
                issue.status = o.as_iri().local_name();
            break;
        }
        ledger.issues.push_back(std::move(issue));
    }
    return ledger;  // ids set keeps issues sorted and unique
}

namespace {

Finding issue_finding(const char* id, const Iri& focus, std::string message) {
    Finding f;
    f.ruleId = id;
    f.focus = focus;
    f.message = std::move(message);
    f.severity = Severity::Error;
    return f;
}

}  // namespace

std::vector<Finding> check_issues(const IssueLedger& l) {
    std::vector<Finding> out;
    std::set<Iri> known;
    for (const Issue& i : l.issues) known.insert(i.id);
    for (const Issue& i : l.issues) {
        if (i.critique.find_first_not_of(" \t\r\n") == std::string::npos)
            out.push_back(issue_finding("ISSUE-EMPTY-CRITIQUE", i.id, "issue has no critique"));
        if (i.suggestion.find_first_not_of(" \t\r\n") == std::string::npos)
            out.push_back(issue_finding("ISSUE-EMPTY-SUGGESTION", i.id, "issue has no suggestion"));
        for (const Iri& dep : i.resolveAfter) {
            if (dep == i.id)
                out.push_back(issue_finding("ISSUE-SELF-DEP", i.id, "issue depends on itself"));
            else if (!known.count(dep))
                out.push_back(issue_finding("ISSUE-DANGLING", i.id,
                                            "resolveAfter references unknown issue <" + dep.value +
                                                ">"));
        }
    }
    IssueOrder order = order_issues(l);
    if (!order.ok()) {
        std::string msg = "dependency cycle: {";
        for (std::size_t i = 0; i < order.cycle.size(); ++i)
            msg += (i ? ", " : "") + std::string("<") + order.cycle[i].value + ">";
        msg += "}";
        out.push_back(issue_finding("ISSUE-CYCLE", order.cycle.front(), std::move(msg)));
    }
    std::sort(out.begin(), out.end(), [](const Finding& a, const Finding& b) {
        return std::tie(a.ruleId, a.focus.value, a.message) <
               std::tie(b.ruleId, b.focus.value, b.message);
    });
    return out;
}

IssueOrder order_issues(const IssueLedger& l) {
    IssueOrder result;
    std::set<Iri> known;
    for (const Issue& i : l.issues) known.insert(i.id);
    std::map<Iri, std::set<Iri>> deps;      // issue -> unresolved prerequisites
    std::map<Iri, std::set<Iri>> enables;   // prerequisite -> dependents
    for (const Issue& i : l.issues) {
        auto& d = deps[i.id];
        for (const Iri& dep : i.resolveAfter)
            if (known.count(dep) && dep != i.id) {
                d.insert(dep);
                enables[dep].insert(i.id);
            }
        if (i.resolveAfter.count(i.id)) d.insert(i.id);  // self-dependency blocks forever
    }
    std::set<Iri> ready;
    for (const auto& [id, d] : deps)
        if (d.empty()) ready.insert(id);
    std::set<Iri> placed;
    while (!ready.empty()) {
        Iri next = *ready.begin();  // codepoint-order tie-break
        ready.erase(ready.begin());
        placed.insert(next);
        result.order.push_back(*l.find(next));
        for (const Iri& dependent : enables[next]) {
            deps[dependent].erase(next);
            if (deps[dependent].empty() && !placed.count(dependent)) ready.insert(dependent);
        }
    }
    if (placed.size() < known.size()) {
        // Extract one cycle: walk unplaced prerequisites from the smallest
        // blocked issue until a repeat.
        Iri start;
        for (const Iri& id : known)
            if (!placed.count(id)) {
                start = id;
                break;
            }
        std::vector<Iri> path{start};
        std::set<Iri> on_path{start};
        Iri cur = start;
        while (true) {
            const std::set<Iri>& blocked_on = deps[cur];
            Iri next;
            bool found = false;
            for (const Iri& d : blocked_on)
                if (!placed.count(d)) {
                    next = d;
                    found = true;
                    break;
                }
            if (!found) break;  // defensive: should not happen
            if (on_path.count(next)) {
                auto it = std::find(path.begin(), path.end(), next);
                result.cycle.assign(it, path.end());
                break;
            }
            path.push_back(next);
            on_path.insert(next);
            cur = next;
        }
        if (result.cycle.empty()) result.cycle.push_back(start);
        result.order.clear();
    }
    return result;
}

namespace {

std::string fnv1a_hex(const std::string& data) {
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : data) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    static const char* digits = "0123456789abcdef";
    std::string out(16, '0');
    for (int i = 15; i >= 0; --i) {
        out[i] = digits[h & 0xf];
        h >>= 4;
    }
    return out;
}

std::string substitute(std::string text, const Finding& f) {
    auto replace_all = [&](const std::string& key, const std::string& value) {
        std::size_t pos = 0;
        while ((pos = text.find(key, pos)) != std::string::npos) {
            text.replace(pos, key.size(), value);
            pos += value.size();
        }
    };
    replace_all("{focus}", f.focus.value);
    replace_all("{message}", f.message);
    return text;
}

}  // namespace

IssueLedger findings_to_issues(const ValidationReport& r, const DraftConfig& cfg) {
    IssueLedger ledger;
    std::set<std::string> used_ids;
    for (const Finding& f : r.findings) {
        if (f.suppressed || f.severity < cfg.minSeverity) continue;
        std::string id = cfg.issuesNamespace + "issue-" + fnv1a_hex(f.ruleId + "\n" + f.focus.value);
        int n = 1;
        std::string candidate = id;
        while (!used_ids.insert(candidate).second) candidate = id + "-" + std::to_string(++n);
        Issue issue;
        issue.id = Iri(candidate);
        issue.target = Term::iri(f.focus);
        issue.critique = f.message;
        auto it = cfg.suggestionTemplates.find(f.ruleId);
        issue.suggestion = it != cfg.suggestionTemplates.end()
                               ? substitute(it->second, f)
                               : "resolve the " + f.ruleId + " finding on <" + f.focus.value + ">";
        ledger.issues.push_back(std::move(issue));
    }
    std::sort(ledger.issues.begin(), ledger.issues.end(),
              [](const Issue& a, const Issue& b) { return a.id < b.id; });
    return ledger;
}

std::string serialize_issues_turtle(const IssueLedger& l, const Vocabulary& v) {
    std::ostringstream out;
    for (const Issue& i : l.issues) {
        out << "<" << i.id.value << "> <" << v.typeProp.value << "> <" << v.issueClass.value
            << "> .\n";
        if (!(i.target.is_iri() && i.target.value.empty()))
            out << "<" << i.id.value << "> <" << v.issueTarget.value << "> "
                << term_turtle(i.target) << " .\n";
        out << "<" << i.id.value << "> <" << v.issueCritique.value << "> "
            << term_turtle(Term::string_literal(i.critique)) << " .\n";
        out << "<" << i.id.value << "> <" << v.issueSuggestion.value << "> "
            << term_turtle(Term::string_literal(i.suggestion)) << " .\n";
        for (const Iri& dep : i.resolveAfter)
            out << "<" << i.id.value << "> <" << v.issueResolveAfter.value << "> <" << dep.value
                << "> .\n";
        if (i.status != "open")
            out << "<" << i.id.value << "> <" << v.issueStatus.value << "> "
                << term_turtle(Term::string_literal(i.status)) << " .\n";
    }
    return out.str();
}

std::string serialize_issues_json(const IssueLedger& l) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const Issue& i : l.issues) {
        nlohmann::ordered_json o;
        o["id"] = i.id.value;
        o["target"] = i.target.value;
        o["critique"] = i.critique;
        o["suggestion"] = i.suggestion;
        nlohmann::ordered_json deps = nlohmann::ordered_json::array();
        for (const Iri& d : i.resolveAfter) deps.push_back(d.value);
        o["resolveAfter"] = std::move(deps);
        o["status"] = i.status;
        arr.push_back(std::move(o));
    }
    return arr.dump(2) + "\n";
}

}  // namespace ontolint
