#include "ontolint/term.hpp"

namespace ontolint {

std::string Iri::local_name() const {
    auto pos = value.find_last_of("#/");
    if (pos == std::string::npos || pos + 1 >= value.size()) {
        if (pos != std::string::npos && pos + 1 == value.size()) return "";
        return value;
    }
    return value.substr(pos + 1);
}

std::string Iri::namespace_part() const {
    auto pos = value.find_last_of("#/");
    if (pos == std::string::npos) return "";
    return value.substr(0, pos + 1);
}

bool is_absolute_iri(std::string_view s) {
    if (s.empty()) return false;
    char c = s[0];
    bool alpha = (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z');
    if (!alpha) return false;
    for (std::size_t i = 1; i < s.size(); ++i) {
        c = s[i];
        if (c == ':') return true;  // scheme found
        bool ok = (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') ||
                  (c >= '0' && c <= '9') || c == '+' || c == '-' || c == '.';
        if (!ok) return false;
    }
    return false;
}

bool is_http_url(std::string_view s) {
    std::string_view rest;
    if (s.substr(0, 8) == "https://")
        rest = s.substr(8);
    else if (s.substr(0, 7) == "http://")
        rest = s.substr(7);
    else
        return false;
    if (rest.empty()) return false;
    auto slash = rest.find_first_of("/?#");
    std::string_view host = slash == std::string_view::npos ? rest : rest.substr(0, slash);
    if (host.empty()) return false;
    for (char c : host) {
        if (c == ' ' || c == '<' || c == '>' || c == '"') return false;
    }
    for (char c : s) {
        if (c == ' ' || c == '<' || c == '>' || c == '"' || c == '\n' || c == '\t') return false;
    }
    return true;
}

std::string url_host(std::string_view s) {
    if (!is_http_url(s)) return "";
    std::string_view rest = s[4] == 's' ? s.substr(8) : s.substr(7);
    auto slash = rest.find_first_of("/?#");
    std::string_view host = slash == std::string_view::npos ? rest : rest.substr(0, slash);
    auto at = host.rfind('@');
    if (at != std::string_view::npos) host = host.substr(at + 1);
    auto colon = host.rfind(':');
    if (colon != std::string_view::npos) host = host.substr(0, colon);
    return std::string(host);
}

Term Term::iri(std::string v) {
    Term t;
    t.kind = TermKind::Iri;
    t.value = std::move(v);
    return t;
}

Term Term::blank(std::string label) {
    Term t;
    t.kind = TermKind::Blank;
    t.value = std::move(label);
    return t;
}

Term Term::literal(std::string lexical, std::string datatype_iri) {
    Term t;
    t.kind = TermKind::Literal;
    t.value = std::move(lexical);
    t.datatype = std::move(datatype_iri);
    return t;
}

Term Term::lang_literal(std::string lexical, std::string tag) {
    Term t;
    t.kind = TermKind::Literal;
    t.value = std::move(lexical);
    t.datatype = std::string(ns::rdf) + "langString";
    t.lang = std::move(tag);
    return t;
}

Term Term::string_literal(std::string lexical) {
    return literal(std::move(lexical), std::string(ns::xsd) + "string");
}

}  // namespace ontolint
