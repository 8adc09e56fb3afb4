// Vocabulary, propositions and domain descriptions of the Language E, plus
// structural validation, grounding and the salient-time frontier.
#pragma once

#include <algorithm>
#include <cctype>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <utility>
#include <variant>
#include <vector>

namespace eres {

/// A point on the natural-number time line.
struct TimePoint {
    std::uint32_t value = 0;

    constexpr TimePoint() = default;
    constexpr explicit TimePoint(std::uint32_t v) : value(v) {}

    friend constexpr auto operator<=>(TimePoint, TimePoint) = default;
};

inline std::string to_string(TimePoint t) { return std::to_string(t.value); }

/// Arguments starting with an upper-case letter are variables; everything
/// else is an object constant.
inline bool is_variable(const std::string& term) {
    return !term.empty() && std::isupper(static_cast<unsigned char>(term.front()));
}

/// Name plus argument list. The tag keeps fluents and actions apart.
template <class Tag>
struct BasicAtom {
    std::string name;
    std::vector<std::string> args;

    BasicAtom() = default;
    explicit BasicAtom(std::string n, std::vector<std::string> a = {})
        : name(std::move(n)), args(std::move(a)) {}

    bool ground() const {
        return std::none_of(args.begin(), args.end(), is_variable);
    }

    friend auto operator<=>(const BasicAtom&, const BasicAtom&) = default;
    friend bool operator==(const BasicAtom&, const BasicAtom&) = default;
};

using Fluent = BasicAtom<struct FluentTag>;
using Action = BasicAtom<struct ActionTag>;

template <class Tag>
std::string to_string(const BasicAtom<Tag>& atom) {
    std::string out = atom.name;
    if (!atom.args.empty()) {
        out += '(';
        for (std::size_t i = 0; i < atom.args.size(); ++i) {
            if (i) out += ',';
            out += atom.args[i];
        }
        out += ')';
    }
    return out;
}

struct FluentLiteral {
    Fluent fluent;
    bool positive = true;

    FluentLiteral complement() const { return {fluent, !positive}; }

    friend auto operator<=>(const FluentLiteral&, const FluentLiteral&) = default;
    friend bool operator==(const FluentLiteral&, const FluentLiteral&) = default;
};

inline std::string to_string(const FluentLiteral& lit) {
    return (lit.positive ? "" : "~") + to_string(lit.fluent);
}

inline std::string to_string(const std::vector<FluentLiteral>& lits) {
    std::string out = "{";
    for (std::size_t i = 0; i < lits.size(); ++i) {
        if (i) out += ", ";
        out += to_string(lits[i]);
    }
    return out + "}";
}

/// `A initiates F when C` (effect positive) or `A terminates F when C`.
struct CProp {
    Action action;
    FluentLiteral effect;
    std::vector<FluentLiteral> conditions;

    friend bool operator==(const CProp&, const CProp&) = default;
};

/// `A happens-at T`.
struct HProp {
    Action action;
    TimePoint time;

    friend auto operator<=>(const HProp&, const HProp&) = default;
    friend bool operator==(const HProp&, const HProp&) = default;
};

/// `L holds-at T`.
struct TProp {
    FluentLiteral literal;
    TimePoint time;

    friend auto operator<=>(const TProp&, const TProp&) = default;
    friend bool operator==(const TProp&, const TProp&) = default;
};

/// `L whenever C`.
struct RProp {
    FluentLiteral head;
    std::vector<FluentLiteral> conditions;

    friend bool operator==(const RProp&, const RProp&) = default;
};

inline std::string to_string(const CProp& c) {
    std::string out = to_string(c.action) + (c.effect.positive ? " initiates " : " terminates ") +
                      to_string(c.effect.fluent);
    if (!c.conditions.empty()) out += " when " + to_string(c.conditions);
    return out;
}
inline std::string to_string(const HProp& h) {
    return to_string(h.action) + " happens-at " + to_string(h.time);
}
inline std::string to_string(const TProp& t) {
    return to_string(t.literal) + " holds-at " + to_string(t.time);
}
inline std::string to_string(const RProp& r) {
    return to_string(r.head) + " whenever " + to_string(r.conditions);
}

/// A ground fluent literal at a time point (query goals, observations).
struct TemporalLiteral {
    FluentLiteral literal;
    TimePoint time;

    TemporalLiteral complement() const { return {literal.complement(), time}; }

    friend auto operator<=>(const TemporalLiteral&, const TemporalLiteral&) = default;
    friend bool operator==(const TemporalLiteral&, const TemporalLiteral&) = default;
};

using Statement = std::variant<CProp, HProp, TProp, RProp>;

inline std::string to_string(const Statement& s) {
    return std::visit([](const auto& p) { return to_string(p); }, s);
}

/// Declared symbols, in declaration order.
struct Vocabulary {
    std::vector<std::string> fluents;
    std::vector<std::string> actions;
    std::vector<std::string> constants;

    static bool contains(const std::vector<std::string>& names, const std::string& n) {
        return std::find(names.begin(), names.end(), n) != names.end();
    }

    bool has_fluent(const std::string& n) const { return contains(fluents, n); }
    bool has_action(const std::string& n) const { return contains(actions, n); }
    bool has_constant(const std::string& n) const { return contains(constants, n); }

    friend bool operator==(const Vocabulary&, const Vocabulary&) = default;
};

/// A domain description. Propositions are kept in statement order so that
/// printing reproduces the author's layout; the per-kind accessors filter it.
struct DomainDescription {
    Vocabulary vocabulary;
    std::vector<Statement> statements;

    /// Appends a statement. Identical h- and t-propositions collapse.
    void add(Statement s) {
        if (std::holds_alternative<HProp>(s) || std::holds_alternative<TProp>(s)) {
            if (std::find(statements.begin(), statements.end(), s) != statements.end()) return;
        }
        statements.push_back(std::move(s));
    }

    template <class T>
    std::vector<T> collect() const {
        std::vector<T> out;
        for (const auto& s : statements)
            if (const auto* p = std::get_if<T>(&s)) out.push_back(*p);
        return out;
    }

    std::vector<CProp> cprops() const { return collect<CProp>(); }
    std::vector<HProp> hprops() const { return collect<HProp>(); }
    std::vector<TProp> tprops() const { return collect<TProp>(); }
    std::vector<RProp> rprops() const { return collect<RProp>(); }

    bool empty() const { return statements.empty(); }

    friend bool operator==(const DomainDescription&, const DomainDescription&) = default;
};

// ---------------------------------------------------------------------------
// Validation

enum class ViolationKind {
    UndeclaredFluent,
    UndeclaredAction,
    UndeclaredConstant,
    UnboundVariable,
    NonGround,
    DuplicateCondition,
    ContradictoryConditions,
    EmptyConditions,
    SelfReferentialRamification,
    ArityMismatch,
};

inline const char* to_string(ViolationKind k) {
    switch (k) {
        case ViolationKind::UndeclaredFluent: return "undeclared fluent";
        case ViolationKind::UndeclaredAction: return "undeclared action";
        case ViolationKind::UndeclaredConstant: return "undeclared constant";
        case ViolationKind::UnboundVariable: return "unbound variable";
        case ViolationKind::NonGround: return "non-ground proposition";
        case ViolationKind::DuplicateCondition: return "duplicate condition";
        case ViolationKind::ContradictoryConditions: return "contradictory conditions";
        case ViolationKind::EmptyConditions: return "empty condition set";
        case ViolationKind::SelfReferentialRamification: return "head occurs in its own conditions";
        case ViolationKind::ArityMismatch: return "arity mismatch";
    }
    return "violation";
}

struct Violation {
    ViolationKind kind;
    std::string proposition;  // rendered offending statement
    std::string symbol;       // offending variable or symbol

    std::string message() const {
        return std::string(to_string(kind)) + " '" + symbol + "' in: " + proposition;
    }
};

struct ValidationReport {
    std::vector<Violation> violations;

    bool ok() const { return violations.empty(); }

    std::string message() const {
        std::string out;
        for (const auto& v : violations) out += v.message() + "\n";
        return out;
    }
};

/// Thrown by components that require a valid domain.
class InvalidDomain : public std::runtime_error {
public:
    explicit InvalidDomain(ValidationReport report)
        : std::runtime_error("invalid domain:\n" + report.message()), report_(std::move(report)) {}
    const ValidationReport& report() const { return report_; }

private:
    ValidationReport report_;
};

namespace detail {

class Validator {
public:
    explicit Validator(const DomainDescription& d) : d_(d) {}

    ValidationReport run() {
        for (const auto& s : d_.statements) {
            current_ = to_string(s);
            std::visit([this](const auto& p) { check(p); }, s);
        }
        return std::move(report_);
    }

private:
    void add(ViolationKind k, const std::string& symbol) {
        report_.violations.push_back({k, current_, symbol});
    }

    template <class Tag>
    void check_arity(const BasicAtom<Tag>& atom) {
        auto [it, inserted] = arity_.emplace(atom.name, atom.args.size());
        if (!inserted && it->second != atom.args.size()) add(ViolationKind::ArityMismatch, atom.name);
    }

    void check_args(const std::vector<std::string>& args, bool allow_variables) {
        for (const auto& a : args) {
            if (is_variable(a)) {
                if (!allow_variables) add(ViolationKind::NonGround, a);
            } else if (!d_.vocabulary.has_constant(a)) {
                add(ViolationKind::UndeclaredConstant, a);
            }
        }
    }

    void check_fluent(const Fluent& f, bool allow_variables) {
        if (!d_.vocabulary.has_fluent(f.name)) add(ViolationKind::UndeclaredFluent, f.name);
        check_arity(f);
        check_args(f.args, allow_variables);
    }

    void check_action(const Action& a, bool allow_variables) {
        if (!d_.vocabulary.has_action(a.name)) add(ViolationKind::UndeclaredAction, a.name);
        check_arity(a);
        check_args(a.args, allow_variables);
    }

    void check_condition_set(const std::vector<FluentLiteral>& conds) {
        for (std::size_t i = 0; i < conds.size(); ++i) {
            check_fluent(conds[i].fluent, true);
            for (std::size_t j = 0; j < i; ++j) {
                if (conds[j] == conds[i]) add(ViolationKind::DuplicateCondition, to_string(conds[i]));
                if (conds[j] == conds[i].complement())
                    add(ViolationKind::ContradictoryConditions, to_string(conds[i].fluent));
            }
        }
    }

    static void collect_vars(const std::vector<std::string>& args, std::set<std::string>& out) {
        for (const auto& a : args)
            if (is_variable(a)) out.insert(a);
    }

    void check(const CProp& c) {
        check_action(c.action, true);
        check_fluent(c.effect.fluent, true);
        check_condition_set(c.conditions);
        std::set<std::string> bound;
        collect_vars(c.action.args, bound);
        collect_vars(c.effect.fluent.args, bound);
        for (const auto& l : c.conditions)
            for (const auto& a : l.fluent.args)
                if (is_variable(a) && !bound.count(a)) add(ViolationKind::UnboundVariable, a);
    }

    void check(const HProp& h) { check_action(h.action, false); }

    void check(const TProp& t) { check_fluent(t.literal.fluent, false); }

    void check(const RProp& r) {
        check_fluent(r.head.fluent, true);
        if (r.conditions.empty()) add(ViolationKind::EmptyConditions, to_string(r.head));
        check_condition_set(r.conditions);
        for (const auto& l : r.conditions)
            if (l == r.head) add(ViolationKind::SelfReferentialRamification, to_string(l));
        std::set<std::string> bound;
        collect_vars(r.head.fluent.args, bound);
        for (const auto& l : r.conditions)
            for (const auto& a : l.fluent.args)
                if (is_variable(a) && !bound.count(a)) add(ViolationKind::UnboundVariable, a);
    }

    const DomainDescription& d_;
    ValidationReport report_;
    std::string current_;
    std::map<std::string, std::size_t> arity_;
};

}  // namespace detail

/// Structural checks: declared symbols, strong range restriction of
/// c-propositions, groundness of h/t-propositions, groundability of
/// r-propositions and per-proposition sanity of condition sets.
inline ValidationReport validate_domain(const DomainDescription& d) {
    return detail::Validator(d).run();
}

// ---------------------------------------------------------------------------
// Grounding

class GroundingError : public std::runtime_error {
public:
    GroundingError(const std::string& what, std::size_t count)
        : std::runtime_error(what), count_(count) {}
    std::size_t instance_count() const { return count_; }

private:
    std::size_t count_;
};

inline constexpr std::size_t kDefaultInstanceCap = 100000;

namespace detail {

using Substitution = std::map<std::string, std::string>;

inline std::vector<std::string> apply(const std::vector<std::string>& args, const Substitution& s) {
    std::vector<std::string> out;
    out.reserve(args.size());
    for (const auto& a : args) {
        auto it = s.find(a);
        out.push_back(it == s.end() ? a : it->second);
    }
    return out;
}

inline FluentLiteral apply(const FluentLiteral& l, const Substitution& s) {
    return {Fluent(l.fluent.name, apply(l.fluent.args, s)), l.positive};
}

inline std::vector<FluentLiteral> apply(const std::vector<FluentLiteral>& ls, const Substitution& s) {
    std::vector<FluentLiteral> out;
    for (const auto& l : ls) out.push_back(apply(l, s));
    return out;
}

inline Statement apply(const Statement& st, const Substitution& s) {
    if (const auto* c = std::get_if<CProp>(&st))
        return CProp{Action(c->action.name, apply(c->action.args, s)), apply(c->effect, s),
                     apply(c->conditions, s)};
    if (const auto* r = std::get_if<RProp>(&st)) return RProp{apply(r->head, s), apply(r->conditions, s)};
    return st;
}

inline std::vector<std::string> variables_of(const Statement& st) {
    std::set<std::string> vars;
    auto add = [&](const std::vector<std::string>& args) {
        for (const auto& a : args)
            if (is_variable(a)) vars.insert(a);
    };
    if (const auto* c = std::get_if<CProp>(&st)) {
        add(c->action.args);
        add(c->effect.fluent.args);
        for (const auto& l : c->conditions) add(l.fluent.args);
    } else if (const auto* r = std::get_if<RProp>(&st)) {
        add(r->head.fluent.args);
        for (const auto& l : r->conditions) add(l.fluent.args);
    }
    return {vars.begin(), vars.end()};
}

inline std::size_t saturating_pow(std::size_t base, std::size_t exp, std::size_t limit) {
    std::size_t r = 1;
    for (std::size_t i = 0; i < exp; ++i) {
        if (base != 0 && r > limit / base) return limit + 1;
        r *= base;
    }
    return r;
}

}  // namespace detail

/// Replaces every c- and r-proposition schema by all of its instances over
/// the declared object constants. Ground input comes back unchanged.
/// Throws GroundingError if more than `cap` instances would be produced.
inline DomainDescription ground_domain(const DomainDescription& d,
                                       std::size_t cap = kDefaultInstanceCap) {
    const auto& consts = d.vocabulary.constants;
    std::size_t total = 0;
    for (const auto& st : d.statements) {
        auto vars = detail::variables_of(st);
        constexpr std::size_t kMax = std::numeric_limits<std::size_t>::max() / 2;
        total += vars.empty() ? 1 : detail::saturating_pow(consts.size(), vars.size(), kMax);
        total = std::min(total, kMax);
    }
    if (total > cap)
        throw GroundingError("grounding would produce " + std::to_string(total) + " instances, above the cap of " +
                                 std::to_string(cap),
                             total);

    DomainDescription out;
    out.vocabulary = d.vocabulary;
    for (const auto& st : d.statements) {
        auto vars = detail::variables_of(st);
        if (vars.empty()) {
            out.add(st);
            continue;
        }
        std::vector<std::size_t> idx(vars.size(), 0);
        if (consts.empty()) continue;
        for (;;) {
            detail::Substitution sub;
            for (std::size_t i = 0; i < vars.size(); ++i) sub[vars[i]] = consts[idx[i]];
            out.add(detail::apply(st, sub));
            std::size_t k = vars.size();
            while (k > 0) {
                --k;
                if (++idx[k] < consts.size()) break;
                idx[k] = 0;
                if (k == 0) goto done;
            }
        }
    done:;
    }
    return out;
}

inline bool is_ground(const DomainDescription& d) {
    return std::all_of(d.statements.begin(), d.statements.end(),
                       [](const Statement& s) { return detail::variables_of(s).empty(); });
}

/// Every ground fluent of the domain: instances of each declared fluent name
/// over the object constants (arity taken from its uses; unused names are
/// nullary), in declaration order.
inline std::vector<Fluent> ground_fluents(const DomainDescription& d) {
    std::map<std::string, std::size_t> arity;
    auto note = [&](const Fluent& f) { arity.emplace(f.name, f.args.size()); };
    for (const auto& st : d.statements) {
        if (const auto* c = std::get_if<CProp>(&st)) {
            note(c->effect.fluent);
            for (const auto& l : c->conditions) note(l.fluent);
        } else if (const auto* t = std::get_if<TProp>(&st)) {
            note(t->literal.fluent);
        } else if (const auto* r = std::get_if<RProp>(&st)) {
            note(r->head.fluent);
            for (const auto& l : r->conditions) note(l.fluent);
        }
    }
    const auto& consts = d.vocabulary.constants;
    std::vector<Fluent> out;
    for (const auto& name : d.vocabulary.fluents) {
        std::size_t n = arity.count(name) ? arity[name] : 0;
        if (n > 0 && consts.empty()) continue;
        std::vector<std::size_t> idx(n, 0);
        for (;;) {
            std::vector<std::string> args;
            for (auto i : idx) args.push_back(consts[i]);
            out.emplace_back(name, std::move(args));
            std::size_t k = n;
            bool carry = true;
            while (k > 0 && carry) {
                --k;
                if (++idx[k] < consts.size()) carry = false;
                else idx[k] = 0;
            }
            if (carry) break;
        }
    }
    return out;
}

/// The name used for a symbol in query and translation syntax: first letter
/// lower-cased (`TurnOff` becomes `turnOff`).
inline std::string external_name(const std::string& name) {
    std::string out = name;
    if (!out.empty()) out[0] = static_cast<char>(std::tolower(static_cast<unsigned char>(out[0])));
    return out;
}

template <class Tag>
std::string external_name(const BasicAtom<Tag>& atom) {
    BasicAtom<Tag> copy = atom;
    copy.name = external_name(atom.name);
    return to_string(copy);
}

/// {0} plus every h-, t- and query time, ascending and duplicate-free.
inline std::vector<TimePoint> salient_times(const DomainDescription& d,
                                            const std::vector<TimePoint>& query_times = {}) {
    std::set<TimePoint> times{TimePoint{0}};
    for (const auto& s : d.statements) {
        if (const auto* h = std::get_if<HProp>(&s)) times.insert(h->time);
        if (const auto* t = std::get_if<TProp>(&s)) times.insert(t->time);
    }
    times.insert(query_times.begin(), query_times.end());
    return {times.begin(), times.end()};
}

inline TimePoint max_time(const DomainDescription& d) {
    TimePoint m{0};
    for (const auto& s : d.statements) {
        if (const auto* h = std::get_if<HProp>(&s)) m = std::max(m, h->time);
        if (const auto* t = std::get_if<TProp>(&s)) m = std::max(m, t->time);
    }
    return m;
}

}  // namespace eres
