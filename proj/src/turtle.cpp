#include "ontolint/turtle.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

namespace ontolint {

ParseError::ParseError(const std::string& message, int line, int column, std::string token)
    : std::runtime_error(message + " at line " + std::to_string(line) + ", column " +
                         std::to_string(column) +
                         (token.empty() ? "" : " (near '" + token + "')")),
      line_(line),
      column_(column),
      token_(std::move(token)) {}

namespace {

bool is_ws(char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\n'; }

bool is_pn_chars_base(char c) {
    return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') ||
           static_cast<unsigned char>(c) >= 0x80;  // non-ASCII allowed wholesale
}

bool is_pn_chars(char c) {
    return is_pn_chars_base(c) || c == '_' || c == '-' || (c >= '0' && c <= '9');
}

std::string encode_utf8(unsigned code) {
    std::string out;
    if (code < 0x80) {
        out += static_cast<char>(code);
    } else if (code < 0x800) {
        out += static_cast<char>(0xc0 | (code >> 6));
        out += static_cast<char>(0x80 | (code & 0x3f));
    } else if (code < 0x10000) {
        out += static_cast<char>(0xe0 | (code >> 12));
        out += static_cast<char>(0x80 | ((code >> 6) & 0x3f));
        out += static_cast<char>(0x80 | (code & 0x3f));
    } else {
        out += static_cast<char>(0xf0 | (code >> 18));
        out += static_cast<char>(0x80 | ((code >> 12) & 0x3f));
        out += static_cast<char>(0x80 | ((code >> 6) & 0x3f));
        out += static_cast<char>(0x80 | (code & 0x3f));
    }
    return out;
}

// --- RFC 3986 helpers ------------------------------------------------------

struct UriParts {
    std::string scheme, authority, path, query, fragment;
    bool has_authority = false, has_query = false, has_fragment = false;
};

UriParts split_uri(const std::string& uri) {
    UriParts p;
    std::string rest = uri;
    auto frag = rest.find('#');
    if (frag != std::string::npos) {
        p.has_fragment = true;
        p.fragment = rest.substr(frag + 1);
        rest = rest.substr(0, frag);
    }
    auto query = rest.find('?');
    if (query != std::string::npos) {
        p.has_query = true;
        p.query = rest.substr(query + 1);
        rest = rest.substr(0, query);
    }
    // scheme
    for (std::size_t i = 0; i < rest.size(); ++i) {
        char c = rest[i];
        if (c == ':' && i > 0) {
            p.scheme = rest.substr(0, i);
            rest = rest.substr(i + 1);
            break;
        }
        bool ok = (std::isalnum(static_cast<unsigned char>(c)) && (i > 0 || std::isalpha(static_cast<unsigned char>(c)))) ||
                  (i > 0 && (c == '+' || c == '-' || c == '.'));
        if (!ok) break;
    }
    if (rest.rfind("//", 0) == 0) {
        p.has_authority = true;
        auto end = rest.find('/', 2);
        if (end == std::string::npos) {
            p.authority = rest.substr(2);
            rest.clear();
        } else {
            p.authority = rest.substr(2, end - 2);
            rest = rest.substr(end);
        }
    }
    p.path = rest;
    return p;
}

std::string remove_dot_segments(std::string input) {
    std::string output;
    while (!input.empty()) {
        if (input.rfind("../", 0) == 0) {
            input.erase(0, 3);
        } else if (input.rfind("./", 0) == 0) {
            input.erase(0, 2);
        } else if (input.rfind("/./", 0) == 0) {
            input.erase(0, 2);
        } else if (input == "/.") {
            input = "/";
        } else if (input.rfind("/../", 0) == 0 || input == "/..") {
            input = (input == "/..") ? "/" : input.substr(3);
            auto slash = output.find_last_of('/');
            output.erase(slash == std::string::npos ? 0 : slash);
        } else if (input == "." || input == "..") {
            input.clear();
        } else {
            std::size_t start = input[0] == '/' ? 1 : 0;
            auto slash = input.find('/', start);
            output += input.substr(0, slash == std::string::npos ? input.size() : slash);
            input.erase(0, slash == std::string::npos ? input.size() : slash);
        }
    }
    return output;
}

std::string recompose(const UriParts& p) {
    std::string out;
    if (!p.scheme.empty()) out += p.scheme + ":";
    if (p.has_authority) out += "//" + p.authority;
    out += p.path;
    if (p.has_query) out += "?" + p.query;
    if (p.has_fragment) out += "#" + p.fragment;
    return out;
}

}  // namespace

std::string resolve_iri(const std::string& base, const std::string& reference) {
    UriParts r = split_uri(reference);
    if (!r.scheme.empty()) {
        r.path = remove_dot_segments(r.path);
        return recompose(r);
    }
    UriParts b = split_uri(base);
    UriParts t;
    t.scheme = b.scheme;
    if (r.has_authority) {
        t.has_authority = true;
        t.authority = r.authority;
        t.path = remove_dot_segments(r.path);
        t.has_query = r.has_query;
        t.query = r.query;
    } else {
        t.has_authority = b.has_authority;
        t.authority = b.authority;
        if (r.path.empty()) {
            t.path = b.path;
            t.has_query = r.has_query ? true : b.has_query;
            t.query = r.has_query ? r.query : b.query;
        } else {
            if (r.path[0] == '/') {
                t.path = remove_dot_segments(r.path);
            } else {
                std::string merged;
                if (b.has_authority && b.path.empty()) {
                    merged = "/" + r.path;
                } else {
                    auto slash = b.path.find_last_of('/');
                    merged = (slash == std::string::npos ? "" : b.path.substr(0, slash + 1)) + r.path;
                }
                t.path = remove_dot_segments(merged);
            }
            t.has_query = r.has_query;
            t.query = r.query;
        }
    }
    t.has_fragment = r.has_fragment;
    t.fragment = r.fragment;
    return recompose(t);
}

namespace {

// --- Lexer ------------------------------------------------------------------

enum class Tok {
    Eof,
    IriRef,      // value = raw IRI (escapes decoded, not yet resolved)
    PName,       // value = prefix:local (escapes decoded)
    BlankLabel,  // value = label
    Anon,        // []
    String,      // value = lexical form
    LangTag,     // value = tag without '@'
    Integer,
    Decimal,
    Double,
    True,
    False,
    A,
    Dot,
    Semicolon,
    Comma,
    LParen,
    RParen,
    LBracket,
    RBracket,
    HatHat,
    PrefixDirective,  // @prefix or PREFIX; value = "@" for the @ form
    BaseDirective,    // @base or BASE; value = "@" for the @ form
};

struct Token {
    Tok kind = Tok::Eof;
    std::string value;
    int line = 1;
    int column = 1;
};

class Lexer {
public:
    explicit Lexer(std::string_view text) : text_(text) {}

    Token next() {
        skip_ws_and_comments();
        Token t;
        t.line = line_;
        t.column = column_;
        if (eof()) {
            t.kind = Tok::Eof;
            return t;
        }
        char c = peek();
        switch (c) {
            case '<':
                if (peek(1) == '<') fail("RDF-star quoted triples are not supported", "<<");
                return lex_iriref(t);
            case '"':
            case '\'':
                return lex_string(t, c);
            case '_':
                return lex_blank(t);
            case '@':
                return lex_at(t);
            case '.':
                if (std::isdigit(static_cast<unsigned char>(peek(1)))) return lex_number(t);
                advance();
                t.kind = Tok::Dot;
                return t;
            case ';': advance(); t.kind = Tok::Semicolon; return t;
            case ',': advance(); t.kind = Tok::Comma; return t;
            case '(': advance(); t.kind = Tok::LParen; return t;
            case ')': advance(); t.kind = Tok::RParen; return t;
            case '[': {
                std::size_t save_pos = pos_;
                int save_line = line_, save_col = column_;
                advance();
                skip_ws_and_comments();
                if (!eof() && peek() == ']') {
                    advance();
                    t.kind = Tok::Anon;
                    return t;
                }
                pos_ = save_pos;
                line_ = save_line;
                column_ = save_col;
                advance();
                t.kind = Tok::LBracket;
                return t;
            }
            case ']': advance(); t.kind = Tok::RBracket; return t;
            case '^':
                advance();
                if (eof() || peek() != '^') fail("expected '^^'", "^");
                advance();
                t.kind = Tok::HatHat;
                return t;
            case '{':
                fail("named graphs (TriG/quads) are not supported", "{");
                break;
            default:
                break;
        }
        if (c == '+' || c == '-' || std::isdigit(static_cast<unsigned char>(c))) return lex_number(t);
        return lex_keyword_or_pname(t);
    }

    [[noreturn]] void fail(const std::string& message, const std::string& token) const {
        throw ParseError(message, line_, column_, token);
    }

private:
    std::string_view text_;
    std::size_t pos_ = 0;
    int line_ = 1;
    int column_ = 1;

    bool eof() const { return pos_ >= text_.size(); }
    char peek(std::size_t ahead = 0) const {
        return pos_ + ahead < text_.size() ? text_[pos_ + ahead] : '\0';
    }
    char advance() {
        char c = text_[pos_++];
        if (c == '\n') {
            ++line_;
            column_ = 1;
        } else {
            ++column_;
        }
        return c;
    }

    void skip_ws_and_comments() {
        while (!eof()) {
            char c = peek();
            if (is_ws(c)) {
                advance();
            } else if (c == '#') {
                while (!eof() && peek() != '\n') advance();
            } else {
                break;
            }
        }
    }

    unsigned lex_hex(int len) {
        unsigned code = 0;
        for (int i = 0; i < len; ++i) {
            if (eof()) fail("truncated unicode escape", "");
            char c = advance();
            code <<= 4;
            if (c >= '0' && c <= '9') code |= static_cast<unsigned>(c - '0');
            else if (c >= 'a' && c <= 'f') code |= static_cast<unsigned>(c - 'a' + 10);
            else if (c >= 'A' && c <= 'F') code |= static_cast<unsigned>(c - 'A' + 10);
            else fail("invalid unicode escape", std::string(1, c));
        }
        return code;
    }

    Token lex_iriref(Token t) {
        advance();  // '<'
        std::string out;
        while (true) {
            if (eof()) fail("unterminated IRI", out);
            char c = advance();
            if (c == '>') break;
            if (c == '\\') {
                if (eof()) fail("truncated escape in IRI", out);
                char e = advance();
                if (e == 'u') out += encode_utf8(lex_hex(4));
                else if (e == 'U') out += encode_utf8(lex_hex(8));
                else fail("invalid escape in IRI", std::string(1, e));
            } else if (c == ' ' || c == '<' || c == '"' || c == '{' || c == '}' || c == '|' ||
                       c == '^' || c == '`' || c == '\n') {
                fail("invalid character in IRI", std::string(1, c));
            } else {
                out += c;
            }
        }
        t.kind = Tok::IriRef;
        t.value = std::move(out);
        return t;
    }

    Token lex_string(Token t, char quote) {
        advance();  // opening quote
        bool long_form = false;
        if (peek() == quote && peek(1) == quote) {
            advance();
            advance();
            long_form = true;
        } else if (peek() == quote) {
            advance();
            t.kind = Tok::String;
            return t;  // empty string
        }
        std::string out;
        while (true) {
            if (eof()) fail("unterminated string", out.substr(0, 20));
            char c = advance();
            if (c == quote) {
                if (!long_form) break;
                if (peek() == quote && peek(1) == quote) {
                    advance();
                    advance();
                    break;
                }
                out += c;
                continue;
            }
            if (c == '\n' && !long_form) fail("newline in single-line string", out.substr(0, 20));
            if (c == '\\') {
                if (eof()) fail("truncated escape in string", out.substr(0, 20));
                char e = advance();
                switch (e) {
                    case 't': out += '\t'; break;
                    case 'b': out += '\b'; break;
                    case 'n': out += '\n'; break;
                    case 'r': out += '\r'; break;
                    case 'f': out += '\f'; break;
                    case '"': out += '"'; break;
                    case '\'': out += '\''; break;
                    case '\\': out += '\\'; break;
                    case 'u': out += encode_utf8(lex_hex(4)); break;
                    case 'U': out += encode_utf8(lex_hex(8)); break;
                    default: fail("invalid string escape", std::string(1, e));
                }
            } else {
                out += c;
            }
        }
        t.kind = Tok::String;
        t.value = std::move(out);
        return t;
    }

    Token lex_blank(Token t) {
        if (peek(1) != ':') fail("expected '_:' blank node label", "_");
        advance();
        advance();
        std::string label;
        if (eof() || !(is_pn_chars(peek()))) fail("empty blank node label", "_:");
        while (!eof() && (is_pn_chars(peek()) || peek() == '.')) {
            if (peek() == '.' && !(pos_ + 1 < text_.size() && is_pn_chars(text_[pos_ + 1])))
                break;  // trailing dot is the statement terminator
            label += advance();
        }
        t.kind = Tok::BlankLabel;
        t.value = std::move(label);
        return t;
    }

    Token lex_at(Token t) {
        advance();  // '@'
        std::string word;
        while (!eof() && (std::isalpha(static_cast<unsigned char>(peek())) || peek() == '-'))
            word += advance();
        if (word == "prefix") {
            t.kind = Tok::PrefixDirective;
            t.value = "@";
            return t;
        }
        if (word == "base") {
            t.kind = Tok::BaseDirective;
            t.value = "@";
            return t;
        }
        t.kind = Tok::LangTag;
        if (word.empty()) fail("empty language tag", "@");
        t.value = std::move(word);
        return t;
    }

    Token lex_number(Token t) {
        std::string out;
        bool has_dot = false, has_exp = false;
        if (peek() == '+' || peek() == '-') out += advance();
        while (!eof()) {
            char c = peek();
            if (std::isdigit(static_cast<unsigned char>(c))) {
                out += advance();
            } else if (c == '.' && !has_dot && !has_exp &&
                       std::isdigit(static_cast<unsigned char>(peek(1)))) {
                has_dot = true;
                out += advance();
            } else if ((c == 'e' || c == 'E') && !has_exp) {
                has_exp = true;
                out += advance();
                if (peek() == '+' || peek() == '-') out += advance();
            } else {
                break;
            }
        }
        if (out.empty() || out == "+" || out == "-") fail("invalid number", out);
        t.kind = has_exp ? Tok::Double : (has_dot ? Tok::Decimal : Tok::Integer);
        t.value = std::move(out);
        return t;
    }

    Token lex_keyword_or_pname(Token t) {
        // Prefixed name, bare keyword (a, true, false, PREFIX, BASE), or error.
        std::string prefix;
        bool has_prefix = false;
        std::string word;
        while (!eof()) {
            char c = peek();
            if (is_pn_chars(c) || c == '.' || c == '%' || c == '\\') {
                if (c == '.') {
                    // A dot ends the name unless followed by a name character.
                    char n = peek(1);
                    if (!(is_pn_chars(n) || n == ':' || n == '%' || n == '\\')) break;
                }
                if (c == '\\') {
                    advance();
                    if (eof()) fail("truncated local name escape", word);
                    word += advance();
                    continue;
                }
                word += advance();
            } else if (c == ':') {
                advance();
                if (has_prefix) {
                    word += ':';  // colons are legal inside PN_LOCAL
                } else {
                    has_prefix = true;
                    prefix = word + ":";
                    word.clear();
                }
            } else {
                break;
            }
        }
        if (!has_prefix) {
            if (word == "a") {
                t.kind = Tok::A;
                return t;
            }
            if (word == "true") {
                t.kind = Tok::True;
                return t;
            }
            if (word == "false") {
                t.kind = Tok::False;
                return t;
            }
            std::string upper;
            for (char c : word) upper += static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
            if (upper == "PREFIX") {
                t.kind = Tok::PrefixDirective;
                return t;
            }
            if (upper == "BASE") {
                t.kind = Tok::BaseDirective;
                return t;
            }
            if (upper == "GRAPH") fail("named graphs (TriG/quads) are not supported", word);
            fail(word.empty() ? "unexpected character" : "unexpected token",
                 word.empty() ? std::string(1, peek()) : word);
        }
        t.kind = Tok::PName;
        t.value = prefix + word;
        return t;
    }
};

// --- Parser -----------------------------------------------------------------

class Parser {
public:
    Parser(std::string_view text, std::optional<Iri> base, std::string source_id)
        : lexer_(text), source_id_(std::move(source_id)) {
        if (base) base_ = base->value;
        shift();
    }

    Graph run() {
        while (cur_.kind != Tok::Eof) statement();
        std::optional<Iri> base;
        if (!base_.empty()) base = Iri(base_);
        return Graph::from_triples(std::move(triples_), std::move(prefixes_), base, source_id_);
    }

private:
    Lexer lexer_;
    Token cur_;
    std::string source_id_;
    std::string base_;
    PrefixMap prefixes_;
    std::vector<Triple> triples_;
    unsigned anon_counter_ = 0;

    void shift() { cur_ = lexer_.next(); }

    [[noreturn]] void fail(const std::string& message) {
        throw ParseError(message, cur_.line, cur_.column, cur_.value);
    }

    void expect(Tok kind, const char* what) {
        if (cur_.kind != kind) fail(std::string("expected ") + what);
        shift();
    }

    std::string fresh_blank() { return "gen#" + std::to_string(anon_counter_++); }

    Iri resolve(const std::string& raw) {
        if (is_absolute_iri(raw)) return Iri(raw);
        if (base_.empty())
            fail("relative IRI '" + raw + "' without a base IRI");
        return Iri(resolve_iri(base_, raw));
    }

    Iri expand_pname(const std::string& pname) {
        auto colon = pname.find(':');
        std::string prefix = pname.substr(0, colon + 1);
        auto it = prefixes_.find(prefix.substr(0, prefix.size() - 1));
        if (it == prefixes_.end()) fail("undeclared prefix '" + prefix + "'");
        return Iri(it->second + pname.substr(colon + 1));
    }

    void statement() {
        if (cur_.kind == Tok::PrefixDirective) {
            bool at_form = cur_.value == "@";
            shift();
            if (cur_.kind != Tok::PName || cur_.value.back() != ':')
                fail("expected prefix name ending in ':'");
            std::string prefix = cur_.value.substr(0, cur_.value.size() - 1);
            shift();
            if (cur_.kind != Tok::IriRef) fail("expected namespace IRI");
            std::string nsiri = resolve(cur_.value).value;
            shift();
            if (at_form) expect(Tok::Dot, "'.' after @prefix directive");
            prefixes_[prefix] = nsiri;
            return;
        }
        if (cur_.kind == Tok::BaseDirective) {
            bool at_form = cur_.value == "@";
            shift();
            if (cur_.kind != Tok::IriRef) fail("expected base IRI");
            base_ = base_.empty() ? cur_.value : resolve_iri(base_, cur_.value);
            if (!is_absolute_iri(base_)) fail("base IRI must be absolute");
            shift();
            if (at_form) expect(Tok::Dot, "'.' after @base directive");
            return;
        }
        // triples
        bool bracketed = cur_.kind == Tok::LBracket;
        Term subject = parse_subject();
        if (bracketed && cur_.kind == Tok::Dot) {
            // "[ ... ] ." — a bare property list is a complete statement
            shift();
            return;
        }
        predicate_object_list(subject);
        expect(Tok::Dot, "'.' at end of statement (named graphs/quads are not supported)");
    }

    Term parse_subject() {
        switch (cur_.kind) {
            case Tok::IriRef: {
                Term t = Term::iri(resolve(cur_.value));
                shift();
                return t;
            }
            case Tok::PName: {
                Term t = Term::iri(expand_pname(cur_.value));
                shift();
                return t;
            }
            case Tok::BlankLabel: {
                Term t = Term::blank(cur_.value);
                shift();
                return t;
            }
            case Tok::Anon:
                shift();
                return Term::blank(fresh_blank());
            case Tok::LBracket: {
                Term node = Term::blank(fresh_blank());
                shift();
                predicate_object_list(node);
                expect(Tok::RBracket, "']'");
                return node;
            }
            case Tok::LParen:
                return parse_collection();
            default:
                fail("expected subject");
        }
    }

    Iri parse_predicate() {
        if (cur_.kind == Tok::A) {
            shift();
            return Iri(std::string(ns::rdf) + "type");
        }
        if (cur_.kind == Tok::IriRef) {
            Iri p = resolve(cur_.value);
            shift();
            return p;
        }
        if (cur_.kind == Tok::PName) {
            Iri p = expand_pname(cur_.value);
            shift();
            return p;
        }
        fail("expected predicate");
    }

    void predicate_object_list(const Term& subject) {
        while (true) {
            Iri predicate = parse_predicate();
            object_list(subject, predicate);
            if (cur_.kind == Tok::Semicolon) {
                while (cur_.kind == Tok::Semicolon) shift();
                if (cur_.kind == Tok::Dot || cur_.kind == Tok::RBracket || cur_.kind == Tok::Eof)
                    return;  // trailing ';'
                continue;
            }
            return;
        }
    }

    void object_list(const Term& subject, const Iri& predicate) {
        while (true) {
            Term object = parse_object();
            triples_.push_back({subject, predicate, object});
            if (cur_.kind == Tok::Comma) {
                shift();
                continue;
            }
            return;
        }
    }

    Term parse_object() {
        switch (cur_.kind) {
            case Tok::IriRef:
            case Tok::PName:
            case Tok::BlankLabel:
            case Tok::Anon:
            case Tok::LBracket:
            case Tok::LParen:
                return parse_object_node();
            case Tok::String:
                return parse_rdf_literal();
            case Tok::Integer: {
                Term t = Term::literal(cur_.value, std::string(ns::xsd) + "integer");
                shift();
                return t;
            }
            case Tok::Decimal: {
                Term t = Term::literal(cur_.value, std::string(ns::xsd) + "decimal");
                shift();
                return t;
            }
            case Tok::Double: {
                Term t = Term::literal(cur_.value, std::string(ns::xsd) + "double");
                shift();
                return t;
            }
            case Tok::True:
            case Tok::False: {
                Term t = Term::literal(cur_.kind == Tok::True ? "true" : "false",
                                       std::string(ns::xsd) + "boolean");
                shift();
                return t;
            }
            default:
                fail("expected object");
        }
    }

    Term parse_object_node() {
        if (cur_.kind == Tok::LBracket) {
            Term node = Term::blank(fresh_blank());
            shift();
            if (cur_.kind != Tok::RBracket) predicate_object_list(node);
            expect(Tok::RBracket, "']'");
            return node;
        }
        if (cur_.kind == Tok::LParen) return parse_collection();
        return parse_subject();  // IRI, PName, blank label, anon
    }

    Term parse_collection() {
        shift();  // '('
        const Iri first{std::string(ns::rdf) + "first"};
        const Iri rest{std::string(ns::rdf) + "rest"};
        Term nil = Term::iri(std::string(ns::rdf) + "nil");
        std::vector<Term> items;
        while (cur_.kind != Tok::RParen) {
            if (cur_.kind == Tok::Eof) fail("unterminated collection");
            items.push_back(parse_object());
        }
        shift();  // ')'
        if (items.empty()) return nil;
        std::vector<Term> nodes;
        nodes.reserve(items.size());
        for (std::size_t i = 0; i < items.size(); ++i) nodes.push_back(Term::blank(fresh_blank()));
        for (std::size_t i = 0; i < items.size(); ++i) {
            triples_.push_back({nodes[i], first, items[i]});
            triples_.push_back({nodes[i], rest, i + 1 < items.size() ? nodes[i + 1] : nil});
        }
        return nodes.front();
    }

    Term parse_rdf_literal() {
        std::string lexical = cur_.value;
        shift();
        if (cur_.kind == Tok::LangTag) {
            Term t = Term::lang_literal(lexical, cur_.value);
            shift();
            return t;
        }
        if (cur_.kind == Tok::HatHat) {
            shift();
            if (cur_.kind == Tok::IriRef) {
                Term t = Term::literal(lexical, resolve(cur_.value).value);
                shift();
                return t;
            }
            if (cur_.kind == Tok::PName) {
                Term t = Term::literal(lexical, expand_pname(cur_.value).value);
                shift();
                return t;
            }
            fail("expected datatype IRI after '^^'");
        }
        return Term::string_literal(lexical);
    }
};

}  // namespace

Graph parse_turtle(std::string_view document, std::optional<Iri> base, std::string source_id) {
    Parser parser(document, std::move(base), std::move(source_id));
    return parser.run();
}

Graph parse_turtle_file(const std::string& path, std::optional<Iri> base) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_turtle(buf.str(), std::move(base), path);
}

}  // namespace ontolint
