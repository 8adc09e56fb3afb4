// Surface syntax for domain descriptions and queries, the canonical printer,
// and the Prolog-style translation dump.
#pragma once

#include <cctype>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "eres/core.hpp"

namespace eres {

struct SourceSpan {
    std::size_t line = 1;
    std::size_t column = 1;
    std::size_t begin = 0;  // byte offsets, half-open
    std::size_t end = 0;
};

class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& message, SourceSpan span)
        : std::runtime_error(std::to_string(span.line) + ":" + std::to_string(span.column) + ": " +
                             message),
          span_(span),
          message_(message) {}

    const SourceSpan& span() const { return span_; }
    const std::string& message() const { return message_; }

private:
    SourceSpan span_;
    std::string message_;
};

enum class QueryMode { Sceptical, Credulous, CredulousExplain };

inline const char* to_string(QueryMode m) {
    switch (m) {
        case QueryMode::Sceptical: return "sceptical";
        case QueryMode::Credulous: return "credulous";
        case QueryMode::CredulousExplain: return "credulous-explain";
    }
    return "?";
}

/// A ground conjunctive goal. Fluent names are kept as written in query
/// syntax (`protected`); resolve_query maps them onto domain fluents.
struct Query {
    std::vector<TemporalLiteral> literals;
    QueryMode mode = QueryMode::Sceptical;

    friend bool operator==(const Query&, const Query&) = default;
};

namespace detail {

enum class Tok { Ident, Number, LParen, RParen, LBrace, RBrace, LBracket, RBracket, Comma, Dot, Tilde, End };

struct Token {
    Tok kind = Tok::End;
    std::string text;
    SourceSpan span;
};

inline const char* describe(Tok k) {
    switch (k) {
        case Tok::Ident: return "identifier";
        case Tok::Number: return "number";
        case Tok::LParen: return "'('";
        case Tok::RParen: return "')'";
        case Tok::LBrace: return "'{'";
        case Tok::RBrace: return "'}'";
        case Tok::LBracket: return "'['";
        case Tok::RBracket: return "']'";
        case Tok::Comma: return "','";
        case Tok::Dot: return "'.'";
        case Tok::Tilde: return "'~'";
        case Tok::End: return "end of input";
    }
    return "token";
}

class Lexer {
public:
    explicit Lexer(std::string_view src) : src_(src) {}

    std::vector<Token> run() {
        std::vector<Token> out;
        for (;;) {
            skip_space();
            Token t;
            t.span = here();
            if (pos_ >= src_.size()) {
                t.kind = Tok::End;
                t.span.end = pos_;
                out.push_back(t);
                return out;
            }
            char c = src_[pos_];
            if (std::isalpha(static_cast<unsigned char>(c))) {
                std::size_t start = pos_;
                while (pos_ < src_.size() &&
                       (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_'))
                    advance();
                // `happens-at` and `holds-at` are single keywords.
                std::string_view word = src_.substr(start, pos_ - start);
                if ((word == "happens" || word == "holds") && src_.substr(pos_, 3) == "-at" &&
                    (pos_ + 3 >= src_.size() || !std::isalnum(static_cast<unsigned char>(src_[pos_ + 3])))) {
                    advance(3);
                }
                t.kind = Tok::Ident;
                t.text = std::string(src_.substr(start, pos_ - start));
            } else if (std::isdigit(static_cast<unsigned char>(c))) {
                std::size_t start = pos_;
                while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) advance();
                t.kind = Tok::Number;
                t.text = std::string(src_.substr(start, pos_ - start));
            } else {
                switch (c) {
                    case '(': t.kind = Tok::LParen; break;
                    case ')': t.kind = Tok::RParen; break;
                    case '{': t.kind = Tok::LBrace; break;
                    case '}': t.kind = Tok::RBrace; break;
                    case '[': t.kind = Tok::LBracket; break;
                    case ']': t.kind = Tok::RBracket; break;
                    case ',': t.kind = Tok::Comma; break;
                    case '.': t.kind = Tok::Dot; break;
                    case '~': t.kind = Tok::Tilde; break;
                    default: {
                        SourceSpan s = t.span;
                        s.end = s.begin + 1;
                        throw ParseError(std::string("unexpected character '") + c + "'", s);
                    }
                }
                t.text = std::string(1, c);
                advance();
            }
            t.span.end = pos_;
            out.push_back(std::move(t));
        }
    }

private:
    SourceSpan here() const { return {line_, col_, pos_, pos_}; }

    void advance(std::size_t n = 1) {
        for (std::size_t i = 0; i < n && pos_ < src_.size(); ++i) {
            if (src_[pos_] == '\n') {
                ++line_;
                col_ = 1;
            } else {
                ++col_;
            }
            ++pos_;
        }
    }

    void skip_space() {
        while (pos_ < src_.size()) {
            char c = src_[pos_];
            if (c == '%') {
                while (pos_ < src_.size() && src_[pos_] != '\n') advance();
            } else if (std::isspace(static_cast<unsigned char>(c))) {
                advance();
            } else {
                break;
            }
        }
    }

    std::string_view src_;
    std::size_t pos_ = 0;
    std::size_t line_ = 1;
    std::size_t col_ = 1;
};

class TokenStream {
public:
    explicit TokenStream(std::vector<Token> toks) : toks_(std::move(toks)) {}

    const Token& peek(std::size_t ahead = 0) const {
        return toks_[std::min(pos_ + ahead, toks_.size() - 1)];
    }
    bool at(Tok k) const { return peek().kind == k; }
    bool at_word(std::string_view w) const { return at(Tok::Ident) && peek().text == w; }

    const Token& next() {
        const Token& t = peek();
        if (pos_ < toks_.size() - 1) ++pos_;
        return t;
    }

    [[noreturn]] void fail(const std::string& what) const {
        const Token& t = peek();
        throw ParseError(what + ", found " + (t.kind == Tok::End ? std::string("end of input")
                                                                   : "'" + t.text + "'"),
                         t.span);
    }

    const Token& expect(Tok k) {
        if (!at(k)) fail(std::string("expected ") + describe(k));
        return next();
    }

    void expect_word(std::string_view w) {
        if (!at_word(w)) fail("expected '" + std::string(w) + "'");
        next();
    }

private:
    std::vector<Token> toks_;
    std::size_t pos_ = 0;
};

inline bool is_keyword(const std::string& s) {
    static const char* const words[] = {"fluent",     "action", "const",      "initiates", "terminates",
                                        "when",       "whenever", "happens-at", "holds-at"};
    for (const char* w : words)
        if (s == w) return true;
    return false;
}

inline TimePoint parse_time(TokenStream& ts) {
    const Token& t = ts.expect(Tok::Number);
    if (t.text.size() > 9) throw ParseError("time point out of range", t.span);
    return TimePoint{static_cast<std::uint32_t>(std::stoul(t.text))};
}

inline std::string parse_name(TokenStream& ts) {
    if (!ts.at(Tok::Ident) || is_keyword(ts.peek().text)) ts.fail("expected identifier");
    return ts.next().text;
}

template <class Atom>
Atom parse_atom(TokenStream& ts) {
    Atom a;
    a.name = parse_name(ts);
    if (ts.at(Tok::LParen)) {
        ts.next();
        a.args.push_back(parse_name(ts));
        while (ts.at(Tok::Comma)) {
            ts.next();
            a.args.push_back(parse_name(ts));
        }
        ts.expect(Tok::RParen);
    }
    return a;
}

inline FluentLiteral parse_literal(TokenStream& ts) {
    bool positive = true;
    if (ts.at(Tok::Tilde)) {
        ts.next();
        positive = false;
    }
    return {parse_atom<Fluent>(ts), positive};
}

inline std::vector<FluentLiteral> parse_condition_set(TokenStream& ts) {
    std::vector<FluentLiteral> out;
    ts.expect(Tok::LBrace);
    if (!ts.at(Tok::RBrace)) {
        out.push_back(parse_literal(ts));
        while (ts.at(Tok::Comma)) {
            ts.next();
            out.push_back(parse_literal(ts));
        }
    }
    ts.expect(Tok::RBrace);
    return out;
}

inline void parse_statement(TokenStream& ts, DomainDescription& d) {
    for (const char* decl : {"fluent", "action", "const"}) {
        if (ts.at_word(decl) && ts.peek(1).kind == Tok::Ident) {
            ts.next();
            std::string name = parse_name(ts);
            ts.expect(Tok::Dot);
            auto& list = decl[0] == 'f' ? d.vocabulary.fluents
                         : decl[0] == 'a' ? d.vocabulary.actions
                                          : d.vocabulary.constants;
            if (!Vocabulary::contains(list, name)) list.push_back(std::move(name));
            return;
        }
    }

    if (ts.at(Tok::Tilde)) {
        FluentLiteral lit = parse_literal(ts);
        if (ts.at_word("holds-at")) {
            ts.next();
            TimePoint t = parse_time(ts);
            ts.expect(Tok::Dot);
            d.add(TProp{lit, t});
        } else if (ts.at_word("whenever")) {
            ts.next();
            auto conds = parse_condition_set(ts);
            ts.expect(Tok::Dot);
            d.add(RProp{lit, std::move(conds)});
        } else {
            ts.fail("expected 'holds-at' or 'whenever'");
        }
        return;
    }

    // Parse the leading atom generically; the keyword decides whether it
    // names an action or a fluent.
    Fluent head = parse_atom<Fluent>(ts);
    if (ts.at_word("initiates") || ts.at_word("terminates")) {
        bool positive = ts.next().text == "initiates";
        if (ts.at(Tok::Tilde)) ts.fail("expected fluent (effects are not negated)");
        Fluent f = parse_atom<Fluent>(ts);
        std::vector<FluentLiteral> conds;
        if (ts.at_word("when")) {
            ts.next();
            conds = parse_condition_set(ts);
        }
        ts.expect(Tok::Dot);
        d.add(CProp{Action(head.name, head.args), {std::move(f), positive}, std::move(conds)});
    } else if (ts.at_word("happens-at")) {
        ts.next();
        TimePoint t = parse_time(ts);
        ts.expect(Tok::Dot);
        d.add(HProp{Action(head.name, head.args), t});
    } else if (ts.at_word("holds-at")) {
        ts.next();
        TimePoint t = parse_time(ts);
        ts.expect(Tok::Dot);
        d.add(TProp{{std::move(head), true}, t});
    } else if (ts.at_word("whenever")) {
        ts.next();
        auto conds = parse_condition_set(ts);
        ts.expect(Tok::Dot);
        d.add(RProp{{std::move(head), true}, std::move(conds)});
    } else {
        ts.fail("expected 'initiates', 'terminates', 'happens-at', 'holds-at' or 'whenever'");
    }
}

}  // namespace detail

/// Parses a domain file. Throws ParseError on the first syntax error;
/// undeclared symbols are left for validate_domain.
inline DomainDescription parse_domain(std::string_view text) {
    detail::TokenStream ts(detail::Lexer(text).run());
    DomainDescription d;
    while (!ts.at(detail::Tok::End)) detail::parse_statement(ts, d);
    return d;
}

/// Canonical text: declarations first, then the propositions in statement
/// order, one per line.
inline std::string print_domain(const DomainDescription& d) {
    std::string out;
    for (const auto& f : d.vocabulary.fluents) out += "fluent " + f + ".\n";
    for (const auto& a : d.vocabulary.actions) out += "action " + a + ".\n";
    for (const auto& c : d.vocabulary.constants) out += "const " + c + ".\n";
    for (const auto& s : d.statements) out += to_string(s) + ".\n";
    return out;
}

namespace detail {

inline std::string holds_term(const FluentLiteral& l, const std::string& time) {
    std::string h = "holds(" + external_name(l.fluent) + "," + time + ")";
    return l.positive ? h : "neg(" + h + ")";
}

}  // namespace detail

/// Emits the logic-program form of a ground domain: c-propositions as
/// initiation/termination clauses, then r-propositions, t-propositions and
/// happens facts. Throws std::invalid_argument on non-ground input.
inline std::string dump_translation(const DomainDescription& d) {
    if (!is_ground(d)) throw std::invalid_argument("translation requires a ground domain");
    std::string out;
    for (const auto& c : d.cprops()) {
        out += std::string(c.effect.positive ? "initiation(" : "termination(") +
               external_name(c.effect.fluent) + ",T):-\n";
        out += "  happens(" + external_name(c.action) + ",T), ";
        for (const auto& l : c.conditions) out += detail::holds_term(l, "T") + ", ";
        out += "true.\n";
    }
    for (const auto& r : d.rprops()) {
        out += "ram(" + detail::holds_term(r.head, "T") + "):-\n  ";
        for (std::size_t i = 0; i < r.conditions.size(); ++i) {
            if (i) out += ", ";
            out += detail::holds_term(r.conditions[i], "T");
        }
        out += ".\n";
    }
    for (const auto& t : d.tprops()) out += "tprop(" + detail::holds_term(t.literal, to_string(t.time)) + ").\n";
    for (const auto& h : d.hprops())
        out += "happens(" + external_name(h.action) + "," + to_string(h.time) + ").\n";
    return out;
}

namespace detail {

inline TemporalLiteral parse_query_literal(TokenStream& ts) {
    bool positive = true;
    if (ts.at_word("neg")) {
        ts.next();
        ts.expect(Tok::LParen);
        positive = false;
    }
    ts.expect_word("holds");
    ts.expect(Tok::LParen);
    if (ts.at(Tok::Ident) && is_variable(ts.peek().text)) ts.fail("query literal must be ground");
    Fluent f = parse_atom<Fluent>(ts);
    for (const auto& a : f.args)
        if (is_variable(a)) throw ParseError("query literal must be ground", ts.peek().span);
    ts.expect(Tok::Comma);
    if (ts.at(Tok::Ident)) ts.fail("query time must be a natural number");
    TimePoint t = parse_time(ts);
    ts.expect(Tok::RParen);
    if (!positive) ts.expect(Tok::RParen);
    return {{std::move(f), positive}, t};
}

}  // namespace detail

/// Parses `sceptical([...])`, `credulous([...])` or `credulous([...],X)`.
inline Query parse_query(std::string_view text) {
    detail::TokenStream ts(detail::Lexer(text).run());
    Query q;
    if (ts.at_word("sceptical")) {
        q.mode = QueryMode::Sceptical;
    } else if (ts.at_word("credulous")) {
        q.mode = QueryMode::Credulous;
    } else {
        ts.fail("expected 'sceptical' or 'credulous'");
    }
    ts.next();
    ts.expect(detail::Tok::LParen);
    ts.expect(detail::Tok::LBracket);
    if (ts.at(detail::Tok::RBracket)) ts.fail("expected at least one literal");
    q.literals.push_back(detail::parse_query_literal(ts));
    while (ts.at(detail::Tok::Comma)) {
        ts.next();
        q.literals.push_back(detail::parse_query_literal(ts));
    }
    ts.expect(detail::Tok::RBracket);
    if (ts.at(detail::Tok::Comma)) {
        if (q.mode != QueryMode::Credulous) ts.fail("explanation variable is only allowed for credulous/2");
        ts.next();
        if (!ts.at(detail::Tok::Ident) || !is_variable(ts.peek().text)) ts.fail("expected explanation variable");
        ts.next();
        q.mode = QueryMode::CredulousExplain;
    }
    ts.expect(detail::Tok::RParen);
    if (ts.at(detail::Tok::Dot)) ts.next();
    if (!ts.at(detail::Tok::End)) ts.fail("unexpected trailing input");
    return q;
}

/// Renders a query back in query syntax.
inline std::string print_query(const Query& q) {
    std::string out = q.mode == QueryMode::Sceptical ? "sceptical([" : "credulous([";
    for (std::size_t i = 0; i < q.literals.size(); ++i) {
        if (i) out += ",";
        const auto& l = q.literals[i];
        std::string h = "holds(" + to_string(l.literal.fluent) + "," + to_string(l.time) + ")";
        out += l.literal.positive ? h : "neg(" + h + ")";
    }
    out += "]";
    if (q.mode == QueryMode::CredulousExplain) out += ",X";
    return out + ")";
}

/// Maps query-syntax fluent names onto the domain's fluents (`protected`
/// resolves to `Protected`). Throws std::invalid_argument for unknown names.
inline Query resolve_query(const DomainDescription& d, Query q) {
    for (auto& l : q.literals) {
        const std::string& n = l.literal.fluent.name;
        if (d.vocabulary.has_fluent(n)) continue;
        std::string match;
        for (const auto& f : d.vocabulary.fluents)
            if (external_name(f) == n) match = f;
        if (match.empty()) throw std::invalid_argument("unknown fluent in query: " + n);
        l.literal.fluent.name = match;
    }
    return q;
}

}  // namespace eres
