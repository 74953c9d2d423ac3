#pragma once
// RDF terms: IRIs, blank nodes, literals, triples.

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace ontolint {

// Well-known namespaces.
namespace ns {
inline constexpr std::string_view rdf = "http://www.w3.org/1999/02/22-rdf-syntax-ns#";
inline constexpr std::string_view rdfs = "http://www.w3.org/2000/01/rdf-schema#";
inline constexpr std::string_view owl = "http://www.w3.org/2002/07/owl#";
inline constexpr std::string_view xsd = "http://www.w3.org/2001/XMLSchema#";
inline constexpr std::string_view foaf = "http://xmlns.com/foaf/0.1/";
inline constexpr std::string_view skos = "http://www.w3.org/2004/02/skos/core#";
}  // namespace ns

// An absolute IRI. Equality is codepoint equality of the underlying string;
// no normalization is applied beyond prefix expansion at parse time.
struct Iri {
    std::string value;

    Iri() = default;
    explicit Iri(std::string v) : value(std::move(v)) {}

    auto operator<=>(const Iri&) const = default;

    // Local name: the part after the last '#' or '/', else the whole IRI.
    std::string local_name() const;
    // Namespace part: everything up to and including the last '#' or '/'.
    std::string namespace_part() const;
};

// True if the string has an RFC 3986 scheme, i.e. is an absolute IRI.
bool is_absolute_iri(std::string_view s);

// True if the string is a syntactically plausible http(s) URL
// (scheme, non-empty host; fragments and query strings allowed).
bool is_http_url(std::string_view s);

// Host component of an http(s) URL, empty if not extractable.
std::string url_host(std::string_view s);

enum class TermKind : std::uint8_t { Iri, Blank, Literal };

// One RDF term. Literals carry a datatype IRI and, for language-tagged
// strings only, a BCP-47 tag.
struct Term {
    TermKind kind = TermKind::Iri;
    std::string value;     // IRI string, blank-node label, or lexical form
    std::string datatype;  // literals only
    std::string lang;      // literals only; non-empty implies rdf:langString

    static Term iri(std::string v);
    static Term iri(const Iri& v) { return iri(v.value); }
    static Term blank(std::string label);
    static Term literal(std::string lexical, std::string datatype_iri);
    static Term lang_literal(std::string lexical, std::string tag);
    static Term string_literal(std::string lexical);

    bool is_iri() const { return kind == TermKind::Iri; }
    bool is_blank() const { return kind == TermKind::Blank; }
    bool is_literal() const { return kind == TermKind::Literal; }

    Iri as_iri() const { return Iri(value); }

    auto operator<=>(const Term&) const = default;
};

// One assertion. The subject is an IRI or blank node; the predicate is
// always an IRI; the object may be any term.
struct Triple {
    Term subject;
    Iri predicate;
    Term object;

    auto operator<=>(const Triple&) const = default;
};

}  // namespace ontolint
