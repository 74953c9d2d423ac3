#pragma once
// RDF 1.1 Turtle parsing. Supported: prefix/base directives (both @ and
// SPARQL forms), IRIs, prefixed names, blank nodes, literals, predicate
// and object lists, collections. RDF-star and named graphs are rejected.

#include <stdexcept>
#include <string>
#include <string_view>

#include "ontolint/graph.hpp"

namespace ontolint {

class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& message, int line, int column, std::string token);

    int line() const { return line_; }
    int column() const { return column_; }
    const std::string& token() const { return token_; }

private:
    int line_;
    int column_;
    std::string token_;
};

// Parses a UTF-8 Turtle document into a Graph. `base` seeds relative IRI
// resolution; a relative IRI with no base in effect is an error.
Graph parse_turtle(std::string_view document, std::optional<Iri> base = std::nullopt,
                   std::string source_id = "");

// Reads and parses a Turtle file.
Graph parse_turtle_file(const std::string& path, std::optional<Iri> base = std::nullopt);

// RFC 3986 reference resolution (scheme check, path merge, dot-segment removal).
std::string resolve_iri(const std::string& base, const std::string& reference);

}  // namespace ontolint
