#pragma once

#include <cctype>
#include <optional>
#include <string_view>

#include "complrover/completeness.hpp"
#include "complrover/errors.hpp"
#include "complrover/query.hpp"

// Parsers for the three input languages:
//
//   data        one triple per statement: <s> <p> <o> .   or   <s> <p> "lit" .
//   query       SELECT ?v... WHERE { tp (. tp)* (FILTER NOT EXISTS { tp (. tp)* })* }
//   statements  (COMPLETE { tp (. tp)* } [WHERE { tp (. tp)* }])*
//
// '#' starts a comment that runs to the end of the line. Keywords are
// case-insensitive. Blank nodes and the reserved urn:frozen: / urn:fresh:
// namespaces are rejected everywhere.

namespace complrover {

namespace detail {

enum class TokenType { Iri, Literal, Variable, Word, LBrace, RBrace, Dot, End };

struct Token {
    TokenType type = TokenType::End;
    std::string text;  // IRI string, literal value, variable name, or uppercased word
    int line = 1;
};

class Lexer {
public:
    explicit Lexer(std::string_view input) : input_(input) {}

    const Token& peek() {
        if (!lookahead_) lookahead_ = scan();
        return *lookahead_;
    }

    Token next() {
        peek();
        Token t = std::move(*lookahead_);
        lookahead_.reset();
        return t;
    }

private:
    [[noreturn]] void fail(ParseErrorKind kind, const std::string& reason) const {
        throw ParseError(kind, line_, reason);
    }

    bool at_end() const { return pos_ >= input_.size(); }
    char current() const { return input_[pos_]; }

    void skip_blanks() {
        while (!at_end()) {
            const char c = current();
            if (c == '\n') {
                ++line_;
                ++pos_;
            } else if (std::isspace(static_cast<unsigned char>(c))) {
                ++pos_;
            } else if (c == '#') {
                while (!at_end() && current() != '\n') ++pos_;
            } else {
                break;
            }
        }
    }

    Token scan_iri() {
        ++pos_;  // '<'
        std::string value;
        while (true) {
            if (at_end() || current() == '\n') fail(ParseErrorKind::Syntax, "unterminated IRI");
            const char c = current();
            if (c == '>') {
                ++pos_;
                break;
            }
            if (std::isspace(static_cast<unsigned char>(c)) || c == '<' || c == '"')
                fail(ParseErrorKind::Syntax, std::string("invalid character '") + c + "' in IRI");
            value += c;
            ++pos_;
        }
        if (value.empty()) fail(ParseErrorKind::Syntax, "empty IRI");
        if (value.find(':') == std::string::npos)
            fail(ParseErrorKind::Syntax, "IRI must be absolute: <" + value + ">");
        if (value.starts_with(kFrozenIriPrefix) || value.starts_with(kFreshIriPrefix))
            fail(ParseErrorKind::ReservedNamespace,
                 "IRI <" + value + "> uses a reserved namespace");
        return Token{TokenType::Iri, std::move(value), line_};
    }

    Token scan_literal() {
        ++pos_;  // '"'
        std::string value;
        while (true) {
            if (at_end() || current() == '\n') fail(ParseErrorKind::Syntax, "unterminated literal");
            char c = current();
            ++pos_;
            if (c == '"') break;
            if (c == '\\') {
                if (at_end()) fail(ParseErrorKind::Syntax, "unterminated literal");
                const char esc = current();
                ++pos_;
                switch (esc) {
                    case '\\': c = '\\'; break;
                    case '"': c = '"'; break;
                    case 'n': c = '\n'; break;
                    case 'r': c = '\r'; break;
                    case 't': c = '\t'; break;
                    default:
                        fail(ParseErrorKind::Syntax,
                             std::string("unsupported escape '\\") + esc + "' in literal");
                }
            }
            value += c;
        }
        if (value.empty()) fail(ParseErrorKind::Syntax, "empty literals are not representable");
        return Token{TokenType::Literal, std::move(value), line_};
    }

    Token scan() {
        skip_blanks();
        if (at_end()) return Token{TokenType::End, "", line_};
        const char c = current();
        if (c == '<') return scan_iri();
        if (c == '"') return scan_literal();
        if (c == '?') {
            ++pos_;
            std::string name;
            while (!at_end() && (std::isalnum(static_cast<unsigned char>(current())) || current() == '_')) {
                name += current();
                ++pos_;
            }
            if (name.empty()) fail(ParseErrorKind::Syntax, "empty variable name after '?'");
            return Token{TokenType::Variable, std::move(name), line_};
        }
        if (c == '_') fail(ParseErrorKind::BlankNodeRejected, "blank nodes are not supported");
        if (c == '{') {
            ++pos_;
            return Token{TokenType::LBrace, "{", line_};
        }
        if (c == '}') {
            ++pos_;
            return Token{TokenType::RBrace, "}", line_};
        }
        if (c == '.') {
            ++pos_;
            return Token{TokenType::Dot, ".", line_};
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            std::string word;
            while (!at_end() && std::isalpha(static_cast<unsigned char>(current()))) {
                word += static_cast<char>(std::toupper(static_cast<unsigned char>(current())));
                ++pos_;
            }
            return Token{TokenType::Word, std::move(word), line_};
        }
        fail(ParseErrorKind::Syntax, std::string("unexpected character '") + c + "'");
    }

    std::string_view input_;
    std::size_t pos_ = 0;
    int line_ = 1;
    std::optional<Token> lookahead_;
};

[[noreturn]] inline void fail_at(const Token& t, ParseErrorKind kind, const std::string& reason) {
    throw ParseError(kind, t.line, reason);
}

inline bool is_word(const Token& t, std::string_view word) {
    return t.type == TokenType::Word && t.text == word;
}

inline Token expect_word(Lexer& lx, std::string_view word) {
    Token t = lx.next();
    if (!is_word(t, word))
        fail_at(t, ParseErrorKind::Syntax, "expected keyword " + std::string(word));
    return t;
}

inline Token expect(Lexer& lx, TokenType type, const std::string& what) {
    Token t = lx.next();
    if (t.type != type) fail_at(t, ParseErrorKind::Syntax, "expected " + what);
    return t;
}

inline Term pattern_term(Lexer& lx, int position) {
    static constexpr const char* kPosition[] = {"subject", "predicate", "object"};
    Token t = lx.next();
    switch (t.type) {
        case TokenType::Iri: return Term::iri(std::move(t.text));
        case TokenType::Variable: return Term::variable(std::move(t.text));
        case TokenType::Literal:
            if (position != 2)
                fail_at(t, ParseErrorKind::Syntax,
                        std::string(kPosition[position]) + " must not be a literal");
            return Term::literal(std::move(t.text));
        default:
            fail_at(t, ParseErrorKind::Syntax,
                    std::string("expected a term in ") + kPosition[position] + " position");
    }
}

inline TriplePattern triple_pattern(Lexer& lx) {
    Term s = pattern_term(lx, 0);
    Term p = pattern_term(lx, 1);
    Term o = pattern_term(lx, 2);
    return TriplePattern(std::move(s), std::move(p), std::move(o));
}

// Triple patterns separated by '.', optional trailing '.'; stops before '}'
// or the FILTER keyword.
inline Bgp triple_pattern_list(Lexer& lx) {
    Bgp out;
    while (true) {
        const Token& ahead = lx.peek();
        if (ahead.type == TokenType::RBrace || is_word(ahead, "FILTER")) return out;
        out.insert(triple_pattern(lx));
        const Token& sep = lx.peek();
        if (sep.type == TokenType::Dot) {
            lx.next();
            continue;
        }
        if (sep.type != TokenType::RBrace && !is_word(sep, "FILTER"))
            fail_at(sep, ParseErrorKind::Syntax, "expected '.', '}' or FILTER after triple pattern");
    }
}

}  // namespace detail

// Parses the N-Triples subset. Data must be ground: variables are rejected.
inline Graph parse_ntriples(std::string_view text) {
    detail::Lexer lx(text);
    Graph out;
    while (true) {
        detail::Token first = lx.next();
        if (first.type == detail::TokenType::End) return out;
        if (first.type == detail::TokenType::Variable)
            detail::fail_at(first, ParseErrorKind::Syntax, "variables are not allowed in data");
        if (first.type != detail::TokenType::Iri)
            detail::fail_at(first, ParseErrorKind::Syntax, "expected an IRI subject");
        detail::Token pred = lx.next();
        if (pred.type != detail::TokenType::Iri)
            detail::fail_at(pred, ParseErrorKind::Syntax, "expected an IRI predicate");
        detail::Token obj = lx.next();
        if (obj.type != detail::TokenType::Iri && obj.type != detail::TokenType::Literal)
            detail::fail_at(obj, ParseErrorKind::Syntax, "expected an IRI or literal object");
        detail::expect(lx, detail::TokenType::Dot, "'.' after triple");
        out.insert(Triple(Term::iri(std::move(first.text)), Term::iri(std::move(pred.text)),
                          obj.type == detail::TokenType::Iri ? Term::iri(std::move(obj.text))
                                                             : Term::literal(std::move(obj.text))));
    }
}

inline Query parse_query(std::string_view text) {
    detail::Lexer lx(text);
    detail::expect_word(lx, "SELECT");
    Query q;
    while (lx.peek().type == detail::TokenType::Variable) q.distinguished.insert(lx.next().text);
    detail::expect_word(lx, "WHERE");
    detail::Token open = detail::expect(lx, detail::TokenType::LBrace, "'{' after WHERE");
    q.pattern.positive = detail::triple_pattern_list(lx);
    if (q.pattern.positive.empty())
        detail::fail_at(open, ParseErrorKind::Syntax,
                        "positive part must contain at least one triple pattern");
    while (detail::is_word(lx.peek(), "FILTER")) {
        lx.next();
        detail::expect_word(lx, "NOT");
        detail::expect_word(lx, "EXISTS");
        detail::expect(lx, detail::TokenType::LBrace, "'{' after NOT EXISTS");
        q.pattern.negatives.push_back(detail::triple_pattern_list(lx));
        detail::expect(lx, detail::TokenType::RBrace, "'}' closing NOT EXISTS");
    }
    detail::expect(lx, detail::TokenType::RBrace, "'}' closing WHERE");
    detail::Token tail = lx.next();
    if (tail.type != detail::TokenType::End)
        detail::fail_at(tail, ParseErrorKind::Syntax, "trailing input after query");
    if (!validate_safety(q)) {
        std::string offenders;
        const std::set<std::string> positive_vars = q.pattern.positive.vars();
        for (const std::string& v : q.distinguished)
            if (!positive_vars.count(v)) offenders += (offenders.empty() ? "?" : ", ?") + v;
        throw UnsafeQueryError("unsafe query: selected variable(s) " + offenders +
                               " do not occur in the positive part");
    }
    return q;
}

inline StatementSet parse_statements(std::string_view text) {
    detail::Lexer lx(text);
    StatementSet out;
    while (true) {
        if (lx.peek().type == detail::TokenType::End) return out;
        detail::expect_word(lx, "COMPLETE");
        detail::Token open = detail::expect(lx, detail::TokenType::LBrace, "'{' after COMPLETE");
        Bgp pattern = detail::triple_pattern_list(lx);
        detail::expect(lx, detail::TokenType::RBrace, "'}' closing COMPLETE pattern");
        if (pattern.empty())
            detail::fail_at(open, ParseErrorKind::EmptyPattern,
                            "COMPLETE block must contain at least one triple pattern");
        Bgp condition;
        if (detail::is_word(lx.peek(), "WHERE")) {
            lx.next();
            detail::expect(lx, detail::TokenType::LBrace, "'{' after WHERE");
            condition = detail::triple_pattern_list(lx);
            detail::expect(lx, detail::TokenType::RBrace, "'}' closing WHERE condition");
        }
        out.insert(CompletenessStatement(std::move(pattern), std::move(condition)));
    }
}

}  // namespace complrover
