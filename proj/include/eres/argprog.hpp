// Argumentation-program translation of a ground domain: the Horn background
// theory, generation/persistence/assumption rules over a finite set of time
// points, derivability, minimal supports, rule priorities and attacks.
#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <iterator>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "eres/core.hpp"

namespace eres {

/// Raised when a search or enumeration exceeds its configured budget.
class ResourceLimit : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

enum class RuleKind : std::uint8_t { Generation, Persistence, Assumption };

/// Signed HoldsAt(f, t) over the program's fluent table.
struct HoldsLiteral {
    std::uint32_t fluent = 0;
    bool positive = true;
    TimePoint time;

    HoldsLiteral complement() const { return {fluent, !positive, time}; }

    friend auto operator<=>(const HoldsLiteral&, const HoldsLiteral&) = default;
    friend bool operator==(const HoldsLiteral&, const HoldsLiteral&) = default;
};

/// Initiation(f, t) when `initiation`, otherwise Termination(f, t).
struct EffectAtom {
    bool initiation = true;
    std::uint32_t fluent = 0;
    TimePoint time;

    friend auto operator<=>(const EffectAtom&, const EffectAtom&) = default;
    friend bool operator==(const EffectAtom&, const EffectAtom&) = default;
};

struct ArgumentRule {
    RuleKind kind = RuleKind::Assumption;
    bool positive = true;
    std::uint32_t fluent = 0;
    TimePoint result_time;
    std::optional<TimePoint> source_time;  // empty for assumptions

    HoldsLiteral conclusion() const { return {fluent, positive, result_time}; }

    friend auto operator<=>(const ArgumentRule&, const ArgumentRule&) = default;
    friend bool operator==(const ArgumentRule&, const ArgumentRule&) = default;
};

/// `Effect(f,t) <- HappensAt(a,t), body`. Body literals live at `t` or, for
/// residual ramification conditions, at the next time point after `t`.
struct EffectClause {
    EffectAtom head;
    Action action;
    std::vector<HoldsLiteral> body;
};

struct BackgroundTheory {
    std::vector<HProp> happens;
    std::vector<EffectClause> clauses;
};

/// An action law after ramification compilation. `post_conditions` are
/// evaluated immediately after the occurrence.
struct ActionLaw {
    Action action;
    FluentLiteral effect;
    std::vector<FluentLiteral> conditions;
    std::vector<FluentLiteral> post_conditions;
    bool derived = false;

    friend bool operator==(const ActionLaw&, const ActionLaw&) = default;
};

struct RamificationCompilation {
    std::vector<ActionLaw> laws;
    std::vector<RProp> constraints;
};

using RuleId = std::uint32_t;
using LitId = std::uint32_t;
using EffId = std::uint32_t;

/// Sorted, duplicate-free set of rule ids.
using RuleSet = std::vector<RuleId>;

inline RuleSet unite(const RuleSet& a, const RuleSet& b) {
    RuleSet out;
    out.reserve(a.size() + b.size());
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

inline bool is_subset(const RuleSet& small, const RuleSet& big) {
    return std::includes(big.begin(), big.end(), small.begin(), small.end());
}

inline RuleSet make_rule_set(std::vector<RuleId> ids) {
    std::sort(ids.begin(), ids.end());
    ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
    return ids;
}

/// Keeps only the subset-minimal members; the survivors stay in first-seen
/// order among sets of equal size, smaller sets first.
inline void keep_minimal(std::vector<RuleSet>& sets) {
    if (sets.size() < 2) return;
    std::stable_sort(sets.begin(), sets.end(),
                     [](const RuleSet& a, const RuleSet& b) { return a.size() < b.size(); });
    std::vector<RuleSet> kept;
    for (auto& s : sets) {
        bool dominated = std::any_of(kept.begin(), kept.end(),
                                     [&](const RuleSet& k) { return is_subset(k, s); });
        if (!dominated) kept.push_back(std::move(s));
    }
    sets = std::move(kept);
}

class ArgumentationProgram;

/// Everything a rule set derives together with the background theory.
struct Closure {
    std::vector<char> literals;  // by LitId
    std::vector<char> effects;   // by EffId

    bool has(LitId l) const { return literals[l] != 0; }
    bool has_effect(EffId e) const { return effects[e] != 0; }

    /// Some literal is derived together with its complement.
    bool contradictory() const {
        for (std::size_t i = 0; i + 1 < literals.size(); i += 2)
            if (literals[i] && literals[i + 1]) return true;
        return false;
    }
};

class ArgumentationProgram {
public:
    const std::vector<Fluent>& fluents() const { return fluents_; }
    const std::vector<TimePoint>& times() const { return times_; }
    const BackgroundTheory& background() const { return background_; }
    const std::vector<ArgumentRule>& theory() const { return rules_; }
    const std::vector<RProp>& constraints() const { return constraints_; }

    /// Observed literals (t-propositions) that every extension must derive.
    const std::vector<HoldsLiteral>& observations() const { return observations_; }

    const ArgumentRule& rule(RuleId id) const { return rules_[id]; }
    bool in_base(RuleId id) const { return rules_[id].kind != RuleKind::Persistence; }

    RuleSet base() const {
        RuleSet out;
        for (RuleId i = 0; i < rules_.size(); ++i)
            if (in_base(i)) out.push_back(i);
        return out;
    }

    std::size_t time_count() const { return times_.size(); }
    std::size_t literal_count() const { return fluents_.size() * times_.size() * 2; }

    std::optional<std::size_t> time_index(TimePoint t) const {
        auto it = std::lower_bound(times_.begin(), times_.end(), t);
        if (it == times_.end() || *it != t) return std::nullopt;
        return static_cast<std::size_t>(it - times_.begin());
    }

    std::optional<std::uint32_t> fluent_index(const Fluent& f) const {
        auto it = std::find(fluents_.begin(), fluents_.end(), f);
        if (it == fluents_.end()) return std::nullopt;
        return static_cast<std::uint32_t>(it - fluents_.begin());
    }

    LitId lit_id(std::uint32_t fluent, std::size_t ti, bool positive) const {
        return static_cast<LitId>(((fluent * times_.size()) + ti) * 2 + (positive ? 0 : 1));
    }

    LitId lit_id(const HoldsLiteral& l) const {
        auto ti = time_index(l.time);
        if (!ti) throw std::out_of_range("time " + to_string(l.time) + " is not in the program");
        return lit_id(l.fluent, *ti, l.positive);
    }

    HoldsLiteral literal(LitId id) const {
        std::size_t fl = id / 2 / times_.size();
        std::size_t ti = id / 2 % times_.size();
        return {static_cast<std::uint32_t>(fl), (id & 1) == 0, times_[ti]};
    }

    std::size_t lit_time_index(LitId id) const { return id / 2 % times_.size(); }

    EffId eff_id(std::uint32_t fluent, std::size_t ti, bool initiation) const {
        return lit_id(fluent, ti, initiation);
    }

    EffId eff_id(const EffectAtom& e) const {
        auto ti = time_index(e.time);
        if (!ti) throw std::out_of_range("time " + to_string(e.time) + " is not in the program");
        return eff_id(e.fluent, *ti, e.initiation);
    }

    LitId conclusion_id(RuleId r) const { return conclusion_[r]; }

    /// Rule lookups by literal and source time index; nullopt when the rule
    /// is not instantiated.
    std::optional<RuleId> assumption(LitId l) const { return assumption_[l]; }
    std::optional<RuleId> generation(LitId l, std::size_t source_ti) const {
        return at(generation_, l, source_ti);
    }
    std::optional<RuleId> persistence(LitId l, std::size_t source_ti) const {
        return at(persistence_, l, source_ti);
    }

    std::optional<RuleId> find(const ArgumentRule& r) const {
        auto it = std::lower_bound(sorted_.begin(), sorted_.end(), r,
                                   [this](RuleId a, const ArgumentRule& b) { return rules_[a] < b; });
        if (it == sorted_.end() || rules_[*it] != r) return std::nullopt;
        return *it;
    }

    RuleSet to_ids(std::span<const ArgumentRule> rules) const {
        std::vector<RuleId> ids;
        for (const auto& r : rules) {
            auto id = find(r);
            if (!id) throw std::invalid_argument("rule is not part of the program");
            ids.push_back(*id);
        }
        return make_rule_set(std::move(ids));
    }

    std::vector<ArgumentRule> to_rules(const RuleSet& ids) const {
        std::vector<ArgumentRule> out;
        for (auto id : ids) out.push_back(rules_[id]);
        return out;
    }

    /// Clause indices whose head is the given effect atom.
    const std::vector<std::size_t>& clauses_for(EffId e) const { return clauses_by_head_[e]; }
    EffId clause_head(std::size_t c) const { return clause_head_[c]; }
    const std::vector<LitId>& clause_body(std::size_t c) const { return clause_body_[c]; }

    /// Constraint instances at every time point, as (conditions, head) ids.
    struct ConstraintInstance {
        std::vector<LitId> conditions;
        LitId head;
    };
    const std::vector<ConstraintInstance>& constraint_instances() const { return constraint_instances_; }

    /// True when an extension can only be judged once every fluent has a
    /// value at every time point: ramification constraints are present, or
    /// some time carries both an initiation and a termination clause for one
    /// fluent.
    bool needs_total_extensions() const { return needs_total_; }

    /// Forward chaining from the background theory plus `rules`. With
    /// `from`, chaining resumes from that closure, which must be the closure
    /// of a subset of `rules`.
    Closure close(std::span<const RuleId> rules, const Closure* from = nullptr) const {
        Closure c;
        if (from) {
            c = *from;
        } else {
            c.literals.assign(literal_count(), 0);
            c.effects.assign(literal_count(), 0);
        }
        bool changed = true;
        while (changed) {
            changed = false;
            for (RuleId r : rules) {
                LitId out = conclusion_[r];
                if (c.literals[out]) continue;
                const auto& rule = rules_[r];
                bool fires = rule.kind == RuleKind::Assumption ||
                             (rule.kind == RuleKind::Generation && c.effects[source_[r]]) ||
                             (rule.kind == RuleKind::Persistence && c.literals[source_[r]]);
                if (fires) {
                    c.literals[out] = 1;
                    changed = true;
                }
            }
            for (std::size_t k = 0; k < clause_head_.size(); ++k) {
                if (c.effects[clause_head_[k]]) continue;
                const auto& body = clause_body_[k];
                if (std::all_of(body.begin(), body.end(), [&](LitId l) { return c.literals[l] != 0; })) {
                    c.effects[clause_head_[k]] = 1;
                    changed = true;
                }
            }
        }
        return c;
    }

    friend ArgumentationProgram translate(const DomainDescription&, const std::vector<TimePoint>&,
                                          const RamificationCompilation*);

private:
    std::optional<RuleId> at(const std::vector<std::optional<RuleId>>& table, LitId l,
                             std::size_t ti) const {
        return table[static_cast<std::size_t>(l) * times_.size() + ti];
    }

    std::vector<Fluent> fluents_;
    std::vector<TimePoint> times_;
    BackgroundTheory background_;
    std::vector<RProp> constraints_;
    std::vector<HoldsLiteral> observations_;

    std::vector<ArgumentRule> rules_;
    std::vector<RuleId> sorted_;
    std::vector<LitId> conclusion_;
    std::vector<std::uint32_t> source_;  // EffId for generation, LitId for persistence

    std::vector<std::optional<RuleId>> assumption_;
    std::vector<std::optional<RuleId>> generation_;
    std::vector<std::optional<RuleId>> persistence_;

    std::vector<EffId> clause_head_;
    std::vector<std::vector<LitId>> clause_body_;
    std::vector<std::vector<std::size_t>> clauses_by_head_;
    std::vector<ConstraintInstance> constraint_instances_;
    bool needs_total_ = false;
};

namespace detail {

inline HoldsLiteral holds_literal(const ArgumentationProgram& p, const FluentLiteral& l, TimePoint t) {
    auto f = p.fluent_index(l.fluent);
    if (!f) throw std::invalid_argument("unknown fluent " + to_string(l.fluent));
    return {*f, l.positive, t};
}

}  // namespace detail

/// Builds the argumentation program of a ground domain over the given time
/// points. Happens facts mirror the h-propositions; every action law yields
/// one initiation/termination clause per occurrence time of its action; the
/// rule theory holds generation and persistence rules for every fluent, sign
/// and pair of time points (source before result) and assumptions at every
/// time point. With `ramifications`, the compiled action laws replace the
/// c-propositions and the r-propositions become constraints.
inline ArgumentationProgram translate(const DomainDescription& d, const std::vector<TimePoint>& times,
                                      const RamificationCompilation* ramifications = nullptr) {
    ArgumentationProgram p;
    p.fluents_ = ground_fluents(d);
    p.times_ = times;
    std::sort(p.times_.begin(), p.times_.end());
    p.times_.erase(std::unique(p.times_.begin(), p.times_.end()), p.times_.end());
    const std::size_t nt = p.times_.size();
    const std::size_t nl = p.literal_count();

    std::vector<ActionLaw> laws;
    if (ramifications) {
        laws = ramifications->laws;
        p.constraints_ = ramifications->constraints;
    } else {
        for (const auto& c : d.cprops()) laws.push_back({c.action, c.effect, c.conditions, {}, false});
    }

    p.background_.happens = d.hprops();
    for (const auto& law : laws) {
        for (const auto& h : p.background_.happens) {
            if (h.action != law.action) continue;
            auto ti = p.time_index(h.time);
            if (!ti) continue;
            EffectClause clause;
            clause.head = {law.effect.positive, detail::holds_literal(p, law.effect, h.time).fluent, h.time};
            clause.action = law.action;
            for (const auto& c : law.conditions) clause.body.push_back(detail::holds_literal(p, c, h.time));
            if (!law.post_conditions.empty()) {
                if (*ti + 1 >= nt) continue;  // no later time point to observe the post-state
                for (const auto& c : law.post_conditions)
                    clause.body.push_back(detail::holds_literal(p, c, p.times_[*ti + 1]));
            }
            p.background_.clauses.push_back(std::move(clause));
        }
    }
    std::stable_sort(p.background_.clauses.begin(), p.background_.clauses.end(),
                     [](const EffectClause& a, const EffectClause& b) { return a.head.time < b.head.time; });

    p.clauses_by_head_.assign(nl, {});
    for (std::size_t k = 0; k < p.background_.clauses.size(); ++k) {
        const auto& cl = p.background_.clauses[k];
        EffId head = p.eff_id(cl.head);
        p.clause_head_.push_back(head);
        std::vector<LitId> body;
        for (const auto& b : cl.body) body.push_back(p.lit_id(b));
        p.clause_body_.push_back(std::move(body));
        p.clauses_by_head_[head].push_back(k);
    }

    // Rule ids ascend with result time, so iterating a sorted rule set
    // visits conclusions in time order.
    p.assumption_.assign(nl, std::nullopt);
    p.generation_.assign(nl * nt, std::nullopt);
    p.persistence_.assign(nl * nt, std::nullopt);
    const auto nf = static_cast<std::uint32_t>(p.fluents_.size());
    auto add_rule = [&](ArgumentRule r, std::uint32_t source) {
        auto id = static_cast<RuleId>(p.rules_.size());
        p.rules_.push_back(r);
        p.conclusion_.push_back(p.lit_id(r.conclusion()));
        p.source_.push_back(source);
        return id;
    };
    for (std::size_t t2 = 0; t2 < nt; ++t2) {
        for (std::uint32_t f = 0; f < nf; ++f)
            for (bool pos : {true, false})
                for (std::size_t t1 = 0; t1 < t2; ++t1) {
                    auto id = add_rule({RuleKind::Generation, pos, f, p.times_[t2], p.times_[t1]},
                                       p.eff_id(f, t1, pos));
                    p.generation_[p.lit_id(f, t2, pos) * nt + t1] = id;
                }
        for (std::uint32_t f = 0; f < nf; ++f)
            for (bool pos : {true, false})
                for (std::size_t t1 = 0; t1 < t2; ++t1) {
                    auto id = add_rule({RuleKind::Persistence, pos, f, p.times_[t2], p.times_[t1]},
                                       p.lit_id(f, t1, pos));
                    p.persistence_[p.lit_id(f, t2, pos) * nt + t1] = id;
                }
        for (std::uint32_t f = 0; f < nf; ++f)
            for (bool pos : {true, false}) {
                auto id = add_rule({RuleKind::Assumption, pos, f, p.times_[t2], std::nullopt}, 0);
                p.assumption_[p.lit_id(f, t2, pos)] = id;
            }
    }
    p.sorted_.resize(p.rules_.size());
    for (RuleId i = 0; i < p.rules_.size(); ++i) p.sorted_[i] = i;
    std::sort(p.sorted_.begin(), p.sorted_.end(),
              [&](RuleId a, RuleId b) { return p.rules_[a] < p.rules_[b]; });

    for (const auto& tp : d.tprops()) {
        if (!p.time_index(tp.time)) continue;
        p.observations_.push_back(detail::holds_literal(p, tp.literal, tp.time));
    }

    for (const auto& r : p.constraints_) {
        for (std::size_t ti = 0; ti < nt; ++ti) {
            ArgumentationProgram::ConstraintInstance inst;
            for (const auto& c : r.conditions) inst.conditions.push_back(p.lit_id(detail::holds_literal(p, c, p.times_[ti])));
            inst.head = p.lit_id(detail::holds_literal(p, r.head, p.times_[ti]));
            p.constraint_instances_.push_back(std::move(inst));
        }
    }

    p.needs_total_ = !p.constraints_.empty();
    for (EffId e = 0; e < nl && !p.needs_total_; e += 2)
        if (!p.clauses_by_head_[e].empty() && !p.clauses_by_head_[e + 1].empty()) p.needs_total_ = true;
    return p;
}

using DerivationGoal = std::variant<HoldsLiteral, EffectAtom>;

/// Whether the background theory plus `rules` derives `goal` by forward
/// chaining. Rules outside the program's theory are rejected.
inline bool derives(const ArgumentationProgram& p, std::span<const ArgumentRule> rules,
                    const DerivationGoal& goal) {
    RuleSet ids = p.to_ids(rules);
    Closure c = p.close(ids);
    if (const auto* l = std::get_if<HoldsLiteral>(&goal)) {
        if (!p.time_index(l->time)) return false;
        return c.has(p.lit_id(*l));
    }
    const auto& e = std::get<EffectAtom>(goal);
    if (!p.time_index(e.time)) return false;
    return c.has_effect(p.eff_id(e));
}

/// True iff `a` has lower priority than `b`: complementary conclusions on one
/// fluent at one time, and a loses by kind and recency (later effects win;
/// assumptions lose to every non-assumption).
inline bool lower_priority(const ArgumentRule& a, const ArgumentRule& b) {
    if (a.fluent != b.fluent || a.result_time != b.result_time || a.positive == b.positive) return false;
    using K = RuleKind;
    if (a.kind == K::Assumption) return b.kind != K::Assumption;
    if (b.kind == K::Assumption) return false;
    if (a.kind == K::Persistence && b.kind == K::Generation) return *b.source_time >= *a.source_time;
    if (a.kind == K::Generation && b.kind == K::Generation) return *a.source_time < *b.source_time;
    if (a.kind == K::Persistence && b.kind == K::Persistence) return *a.source_time < *b.source_time;
    return false;
}

/// `a` is overall lower than `b`: some rule of a is lower than some rule of b
/// and no rule of a is higher than any rule of b.
inline bool overall_lower(const ArgumentationProgram& p, const RuleSet& a, const RuleSet& b) {
    bool some_lower = false;
    for (RuleId x : a) {
        for (RuleId y : b) {
            const auto& rx = p.rule(x);
            const auto& ry = p.rule(y);
            if (lower_priority(ry, rx)) return false;
            if (!some_lower && lower_priority(rx, ry)) some_lower = true;
        }
    }
    return some_lower;
}

/// Minimal derivation sets for literals, drawn either from the argument base
/// (memoised) or from an arbitrary set of theory rules.
class SupportIndex {
public:
    explicit SupportIndex(const ArgumentationProgram& p, std::size_t max_sets = 200000)
        : p_(p), max_sets_(max_sets), memo_(p.literal_count()) {}

    const ArgumentationProgram& program() const { return p_; }

    /// Minimal non-self-attacking subsets of the base deriving `l`.
    const std::vector<RuleSet>& base_supports(LitId l) {
        if (memo_[l]) return *memo_[l];
        std::vector<char> visiting(p_.literal_count(), 0);
        bool cut = false;
        auto sets = derive(l, nullptr, memo_, visiting, cut, true);
        memo_[l] = std::move(sets);
        return *memo_[l];
    }

    /// Minimal subsets of `rules` (any theory rules) deriving `l`.
    std::vector<RuleSet> within(const RuleSet& rules, LitId l) {
        Memo memo(p_.literal_count());
        return within(rules, l, memo);
    }

    /// Per-rule-set cache for repeated `within` calls over the same rules.
    using Memo = std::vector<std::optional<std::vector<RuleSet>>>;

    std::vector<RuleSet> within(const RuleSet& rules, LitId l, Memo& memo) {
        if (memo[l]) return *memo[l];
        std::vector<char> visiting(p_.literal_count(), 0);
        bool cut = false;
        auto sets = derive(l, &rules, memo, visiting, cut, true);
        memo[l] = sets;
        return sets;
    }

private:
    bool member(const RuleSet* rules, RuleId id) const {
        if (!rules) return p_.in_base(id);
        return std::binary_search(rules->begin(), rules->end(), id);
    }

    void check_budget(std::size_t n) const {
        if (n > max_sets_) throw ResourceLimit("support enumeration exceeded " + std::to_string(max_sets_) + " sets");
    }

    // Results computed while a cycle was cut short are incomplete and only
    // cached for the literal the enumeration started from.
    std::vector<RuleSet> derive(LitId l, const RuleSet* rules, Memo& memo, std::vector<char>& visiting, bool& cut,
                                bool top) {
        if (memo[l]) return *memo[l];
        if (visiting[l]) {
            cut = true;
            return {};
        }
        visiting[l] = 1;
        bool local_cut = false;
        std::vector<RuleSet> out;

        if (auto a = p_.assumption(l); a && member(rules, *a)) out.push_back({*a});

        const std::size_t ti = p_.lit_time_index(l);
        const HoldsLiteral lit = p_.literal(l);
        for (std::size_t t1 = 0; t1 < ti; ++t1) {
            if (auto g = p_.generation(l, t1); g && member(rules, *g)) {
                for (std::size_t k : p_.clauses_for(p_.eff_id(lit.fluent, t1, lit.positive))) {
                    std::vector<RuleSet> partial{RuleSet{*g}};
                    for (LitId b : p_.clause_body(k)) {
                        auto subs = derive(b, rules, memo, visiting, local_cut, false);
                        std::vector<RuleSet> next;
                        for (const auto& x : partial)
                            for (const auto& y : subs) next.push_back(unite(x, y));
                        check_budget(next.size());
                        partial = std::move(next);
                        if (partial.empty()) break;
                    }
                    for (auto& s : partial) out.push_back(std::move(s));
                }
            }
            if (auto q = p_.persistence(l, t1); q && member(rules, *q)) {
                auto subs = derive(p_.lit_id(lit.fluent, t1, lit.positive), rules, memo, visiting, local_cut, false);
                for (const auto& s : subs) out.push_back(unite(s, RuleSet{*q}));
            }
            check_budget(out.size());
        }

        keep_minimal(out);
        if (!rules) {
            std::erase_if(out, [&](const RuleSet& s) { return p_.close(s).contradictory(); });
        }
        visiting[l] = 0;
        if (local_cut) cut = true;
        if (!local_cut || top) memo[l] = out;
        return out;
    }

    const ArgumentationProgram& p_;
    std::size_t max_sets_;
    Memo memo_;
};

/// Minimal sets of base rules that, with the background theory, derive
/// `goal`; none of them attacks itself. Supports built on persistence are
/// not listed: persistence rules only enter through the defence.
inline std::vector<std::vector<ArgumentRule>> minimal_supports(const ArgumentationProgram& p,
                                                               const HoldsLiteral& goal) {
    SupportIndex index(p);
    std::vector<std::vector<ArgumentRule>> out;
    for (const auto& s : index.base_supports(p.lit_id(goal))) out.push_back(p.to_rules(s));
    return out;
}

/// Set-level attack: some literal λ is derived by a minimal a' ⊆ a while its
/// complement is derived by a minimal b' ⊆ b, and a' is not overall lower
/// than b'.
inline bool attacks(const ArgumentationProgram& p, SupportIndex& index, const RuleSet& a, const RuleSet& b) {
    if (a.empty() || b.empty()) return false;
    Closure ca = p.close(a);
    Closure cb = p.close(b);
    for (LitId l = 0; l < ca.literals.size(); ++l) {
        if (!ca.has(l) || !cb.has(l ^ 1)) continue;
        auto as = index.within(a, l);
        auto bs = index.within(b, l ^ 1);
        for (const auto& x : as)
            for (const auto& y : bs)
                if (!overall_lower(p, x, y)) return true;
    }
    return false;
}

inline bool attacks(const ArgumentationProgram& p, std::span<const ArgumentRule> a,
                    std::span<const ArgumentRule> b) {
    SupportIndex index(p);
    return attacks(p, index, p.to_ids(a), p.to_ids(b));
}

}  // namespace eres
