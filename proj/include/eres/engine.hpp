// Query answering over the argumentation program: ramification compilation,
// the dispute search for admissible extensions, and the sceptical/credulous
// predicates with explanations.
#pragma once

#include <algorithm>
#include <cstddef>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <span>
#include <set>
#include <string>
#include <tuple>
#include <unordered_set>
#include <utility>
#include <vector>

#include "eres/argprog.hpp"
#include "eres/core.hpp"
#include "eres/parser.hpp"

namespace eres {

class RamificationCycle : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Turns r-propositions into extra action laws and constraints. For every
/// r-proposition `L whenever C` and every (possibly derived) law whose effect
/// e is in C, a derived law gives the same action the effect L, keeps the
/// law's conditions, and adds C \ {e} as conditions on the post-state.
/// Iterates to a fixpoint, dropping laws subsumed by existing ones.
inline RamificationCompilation compile_ramifications(const DomainDescription& d,
                                                     std::size_t max_laws = 10000) {
    RamificationCompilation out;
    for (const auto& c : d.cprops()) out.laws.push_back({c.action, c.effect, c.conditions, {}, false});
    out.constraints = d.rprops();

    auto subset = [](const std::vector<FluentLiteral>& a, const std::vector<FluentLiteral>& b) {
        return std::all_of(a.begin(), a.end(),
                           [&](const FluentLiteral& x) { return std::find(b.begin(), b.end(), x) != b.end(); });
    };
    auto subsumed = [&](const ActionLaw& cand) {
        return std::any_of(out.laws.begin(), out.laws.end(), [&](const ActionLaw& q) {
            return q.action == cand.action && q.effect == cand.effect && subset(q.conditions, cand.conditions) &&
                   subset(q.post_conditions, cand.post_conditions);
        });
    };

    bool changed = true;
    while (changed) {
        changed = false;
        for (const auto& r : out.constraints) {
            for (std::size_t i = 0; i < out.laws.size(); ++i) {
                const ActionLaw law = out.laws[i];
                if (std::find(r.conditions.begin(), r.conditions.end(), law.effect) == r.conditions.end()) continue;
                ActionLaw cand{law.action, r.head, law.conditions, law.post_conditions, true};
                for (const auto& c : r.conditions)
                    if (c != law.effect && std::find(cand.post_conditions.begin(), cand.post_conditions.end(), c) ==
                                               cand.post_conditions.end())
                        cand.post_conditions.push_back(c);
                if (subsumed(cand)) continue;
                out.laws.push_back(std::move(cand));
                changed = true;
                if (out.laws.size() > max_laws)
                    throw RamificationCycle("ramification compilation did not converge; last chain through: " +
                                            to_string(r));
            }
        }
    }
    return out;
}

struct EngineOptions {
    std::size_t node_budget = 5'000'000;
    std::size_t support_budget = 200'000;
};

namespace detail {

struct RuleSetHash {
    std::size_t operator()(const RuleSet& s) const noexcept {
        std::size_t h = s.size();
        for (RuleId r : s) h ^= r + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
        return h;
    }
};

}  // namespace detail

/// Frontier-based search for admissible extensions. The defence grows by
/// base rules; every attacking set is answered by a counterattack drawn from
/// the base. Observations become obligations the defence must derive, and
/// when the program needs total extensions every fluent gets a value at every
/// time point before ramification constraints and simultaneous-effect
/// conflicts are checked.
///
/// Instances carry per-search caches and are not thread-safe; use one per
/// query.
class DisputeSearch {
public:
    DisputeSearch(const ArgumentationProgram& p, SupportIndex& index, EngineOptions opts = {},
                  std::vector<RuleSet> forbidden = {})
        : p_(p), index_(index), opts_(opts), forbidden_(std::move(forbidden)), attackers_of_(p.literal_count()) {
        for (const auto& o : p_.observations()) obligations_.push_back(p_.lit_id(o));
    }

    /// An admissible superset of `s0` meeting every obligation, if any.
    /// Throws ResourceLimit when the node budget runs out.
    std::optional<RuleSet> extend(const RuleSet& s0) {
        std::vector<char> countered;
        auto r = solve(s0, countered);
        return r;
    }

    std::size_t nodes() const { return nodes_; }

    /// The defence requirement alone: every attacking set against `s` is
    /// counterattacked by `s`.
    bool defends_itself(const RuleSet& s) {
        Closure c = p_.close(s);
        std::vector<char> countered;
        return !first_unanswered(s, c, countered).has_value();
    }

private:
    struct Attacker {
        RuleSet rules;
        LitId target;  // the literal it derives against the defence
        bool parts_ready = false;
        std::vector<std::pair<LitId, std::vector<RuleSet>>> parts;  // literal, minimal subsets deriving it
    };

    const std::vector<std::size_t>& attackers_of(LitId l) {
        auto& slot = attackers_of_[l];
        if (slot) return *slot;
        std::vector<std::size_t> ids;
        const LitId against = l ^ 1;
        auto add = [&](RuleSet rules) {
            ids.push_back(attackers_.size());
            attackers_.push_back({std::move(rules), against, false, {}});
        };
        for (const auto& s : index_.base_supports(against)) add(s);
        const HoldsLiteral lit = p_.literal(against);
        const std::size_t ti = p_.lit_time_index(against);
        for (std::size_t t1 = 0; t1 < ti; ++t1) {
            auto q = p_.persistence(against, t1);
            if (!q) continue;
            for (const auto& s : index_.base_supports(p_.lit_id(lit.fluent, t1, lit.positive)))
                add(unite(s, RuleSet{*q}));
        }
        slot = std::move(ids);
        return *slot;
    }

    Attacker& prepared(std::size_t id) {
        Attacker& a = attackers_[id];
        if (!a.parts_ready) {
            Closure c = p_.close(a.rules);
            SupportIndex::Memo memo(p_.literal_count());
            for (LitId l = 0; l < c.literals.size(); ++l)
                if (c.has(l)) a.parts.emplace_back(l, index_.within(a.rules, l, memo));
            a.parts_ready = true;
        }
        return a;
    }

    /// Minimal subsets of `s` deriving `l`: the base supports of `l` that `s` contains.
    template <class F>
    bool any_support_within(const RuleSet& s, LitId l, F&& pred) {
        for (const auto& sup : index_.base_supports(l))
            if (is_subset(sup, s) && pred(sup)) return true;
        return false;
    }

    bool attacks_defence(const Attacker& a, const RuleSet& s) {
        return any_support_within(s, a.target ^ 1,
                                  [&](const RuleSet& sup) { return !overall_lower(p_, a.rules, sup); });
    }

    bool counterattacked(std::size_t id, const RuleSet& s, const Closure& c) {
        Attacker& a = prepared(id);
        for (const auto& [mu, mins] : a.parts) {
            if (!c.has(mu ^ 1)) continue;
            bool hit = any_support_within(s, mu ^ 1, [&](const RuleSet& sup) {
                return std::any_of(mins.begin(), mins.end(),
                                   [&](const RuleSet& m) { return !overall_lower(p_, sup, m); });
            });
            if (hit) return true;
        }
        return false;
    }

    /// Calls `visit(id)` for every attacker of `s` that `s` does not
    /// counterattack; stops early when `visit` returns false.
    template <class F>
    void unanswered(const RuleSet& s, const Closure& c, std::vector<char>& countered, F&& visit) {
        for (LitId l = 0; l < c.literals.size(); ++l) {
            if (!c.has(l)) continue;
            for (std::size_t id : attackers_of(l)) {
                if (id < countered.size() && countered[id]) continue;
                if (!attacks_defence(attackers_[id], s)) continue;
                if (counterattacked(id, s, c)) {
                    if (countered.size() <= id) countered.resize(attackers_.size(), 0);
                    countered[id] = 1;
                    continue;
                }
                if (!visit(id)) return;
            }
        }
    }

    std::optional<std::size_t> first_unanswered(const RuleSet& s, const Closure& c, std::vector<char>& countered) {
        std::optional<std::size_t> found;
        unanswered(s, c, countered, [&](std::size_t id) {
            found = id;
            return false;
        });
        return found;
    }

    std::vector<RuleSet> counter_candidates(std::size_t id, const RuleSet& s) {
        Attacker& a = prepared(id);
        std::vector<RuleSet> out;
        std::set<RuleSet> seen;
        for (const auto& [mu, mins] : a.parts) {
            for (const auto& sup : index_.base_supports(mu ^ 1)) {
                bool strong = std::any_of(mins.begin(), mins.end(),
                                          [&](const RuleSet& m) { return !overall_lower(p_, sup, m); });
                if (!strong || is_subset(sup, s)) continue;
                RuleSet next = unite(s, sup);
                if (seen.insert(next).second) out.push_back(std::move(next));
            }
        }
        order_by_growth(out, s);
        return out;
    }

    std::vector<RuleSet> support_candidates(LitId l, const RuleSet& s) {
        std::vector<RuleSet> out;
        for (const auto& sup : index_.base_supports(l)) out.push_back(unite(s, sup));
        order_by_growth(out, s);
        return out;
    }

    static void order_by_growth(std::vector<RuleSet>& sets, const RuleSet& s) {
        std::stable_sort(sets.begin(), sets.end(),
                         [&](const RuleSet& a, const RuleSet& b) { return a.size() < b.size(); });
        (void)s;
    }

    bool violates_filters(const Closure& c) const {
        if (c.contradictory()) return true;
        // The defence only grows, so a refuted observation stays refuted.
        for (LitId o : obligations_)
            if (c.has(o ^ 1)) return true;
        for (const auto& inst : p_.constraint_instances()) {
            if (!c.has(inst.head ^ 1)) continue;
            if (std::all_of(inst.conditions.begin(), inst.conditions.end(), [&](LitId x) { return c.has(x); }))
                return true;
        }
        for (std::size_t e = 0; e + 1 < c.effects.size(); e += 2)
            if (c.effects[e] && c.effects[e + 1]) return true;
        return false;
    }

    bool forbidden(const RuleSet& s) const {
        return std::any_of(forbidden_.begin(), forbidden_.end(), [&](const RuleSet& f) { return is_subset(f, s); });
    }

    std::optional<RuleSet> solve(const RuleSet& s, std::vector<char> countered) {
        if (++nodes_ > opts_.node_budget)
            throw ResourceLimit("dispute search exceeded " + std::to_string(opts_.node_budget) + " nodes");
        if (failed_.count(s) || forbidden(s)) return std::nullopt;
        Closure c = p_.close(s);
        if (violates_filters(c)) {
            failed_.insert(s);
            return std::nullopt;
        }

        // Every unanswered attack and every unmet observation has to be dealt
        // with eventually. Attacks come first; within each group branch on
        // whichever leaves the fewest viable choices, and give up as soon as
        // one has none.
        std::vector<RuleSet> branches;
        bool constrained = false;
        auto consider = [&](std::vector<RuleSet> cands) {
            keep_viable(cands, c);
            if (!constrained || cands.size() < branches.size()) branches = std::move(cands);
            constrained = true;
            return branches.size() > 1;
        };
        unanswered(s, c, countered, [&](std::size_t id) { return consider(counter_candidates(id, s)); });
        if (constrained && branches.empty()) {
            failed_.insert(s);
            return std::nullopt;
        }
        const bool attacked = constrained;
        for (LitId o : obligations_) {
            if (attacked) break;
            if (c.has(o)) continue;
            if (!consider(support_candidates(o, s))) break;
        }
        if (!constrained && p_.needs_total_extensions()) {
            if (auto undecided = first_undecided(c)) {
                auto both = support_candidates(*undecided, s);
                auto more = support_candidates(*undecided ^ 1, s);
                both.insert(both.end(), more.begin(), more.end());
                consider(std::move(both));
            }
        }
        if (!constrained) return s;

        for (const auto& b : branches) {
            if (auto r = solve(b, countered)) return r;
        }
        failed_.insert(s);
        return std::nullopt;
    }

    /// Drops candidates that are known failures or break a filter outright;
    /// `parent` is the closure of the set they all extend.
    void keep_viable(std::vector<RuleSet>& cands, const Closure& parent) {
        std::erase_if(cands, [&](const RuleSet& x) {
            return failed_.count(x) || forbidden(x) || violates_filters(p_.close(x, &parent));
        });
    }

    /// Positive literal id of the earliest fluent/time pair with no value.
    std::optional<LitId> first_undecided(const Closure& c) const {
        const std::size_t nt = p_.time_count();
        for (std::size_t ti = 0; ti < nt; ++ti)
            for (std::uint32_t f = 0; f < p_.fluents().size(); ++f) {
                LitId pos = p_.lit_id(f, ti, true);
                if (!c.has(pos) && !c.has(pos ^ 1)) return pos;
            }
        return std::nullopt;
    }

    const ArgumentationProgram& p_;
    SupportIndex& index_;
    EngineOptions opts_;
    std::vector<RuleSet> forbidden_;
    std::vector<LitId> obligations_;
    std::vector<std::optional<std::vector<std::size_t>>> attackers_of_;
    std::vector<Attacker> attackers_;
    std::unordered_set<RuleSet, detail::RuleSetHash> failed_;
    std::size_t nodes_ = 0;
};

enum class ExtensionStatus { Found, None, Resource };

struct ExtensionResult {
    ExtensionStatus status = ExtensionStatus::None;
    std::vector<ArgumentRule> rules;  // the extension when found
};

/// Searches for an admissible extension of `s0` that also derives every
/// observation of the program (and, where required, is total and respects
/// the ramification constraints). A self-attacking `s0` has none.
inline ExtensionResult admissible_extension(const ArgumentationProgram& p, std::span<const ArgumentRule> s0,
                                            EngineOptions opts = {}) {
    SupportIndex index(p, opts.support_budget);
    RuleSet start = p.to_ids(s0);
    try {
        DisputeSearch search(p, index, opts);
        if (auto r = search.extend(start)) return {ExtensionStatus::Found, p.to_rules(*r)};
        return {ExtensionStatus::None, {}};
    } catch (const ResourceLimit&) {
        return {ExtensionStatus::Resource, {}};
    }
}

// ---------------------------------------------------------------------------
// Queries

enum class Outcome { Succeeds, Fails, Resource };

inline const char* to_string(Outcome o) {
    switch (o) {
        case Outcome::Succeeds: return "succeeds";
        case Outcome::Fails: return "fails";
        case Outcome::Resource: return "resource limit";
    }
    return "?";
}

/// A set of base rules supporting the goal inside an admissible extension.
struct Explanation {
    std::vector<ArgumentRule> rules;
};

struct QueryVerdict {
    QueryMode mode = QueryMode::Sceptical;
    std::vector<TemporalLiteral> goal;
    Outcome outcome = Outcome::Fails;
    std::vector<Explanation> explanations;
    std::vector<std::string> rendered;  // explanations in `rule(...)` notation
    std::size_t nodes = 0;              // search effort, for diagnostics

    bool succeeds() const { return outcome == Outcome::Succeeds; }
};

/// `rule(gen,f,t2,t1)`, `rule(ass,f,t)`, with `neg(f)` for negative rules.
inline std::string render_rule(const ArgumentationProgram& p, const ArgumentRule& r) {
    std::string f = external_name(p.fluents()[r.fluent]);
    if (!r.positive) f = "neg(" + f + ")";
    switch (r.kind) {
        case RuleKind::Generation:
            return "rule(gen," + f + "," + to_string(r.result_time) + "," + to_string(*r.source_time) + ")";
        case RuleKind::Persistence:
            return "rule(per," + f + "," + to_string(r.result_time) + "," + to_string(*r.source_time) + ")";
        case RuleKind::Assumption:
            return "rule(ass," + f + "," + to_string(r.result_time) + ")";
    }
    return "rule(?)";
}

/// `[rule(...),rule(...)]`: generation rules before persistence before
/// assumptions, each group by time then fluent.
inline std::string render_explanation(const ArgumentationProgram& p, std::vector<ArgumentRule> rules) {
    std::sort(rules.begin(), rules.end(), [](const ArgumentRule& a, const ArgumentRule& b) {
        return std::tie(a.kind, a.result_time, a.fluent, b.positive, a.source_time) <
               std::tie(b.kind, b.result_time, b.fluent, a.positive, b.source_time);
    });
    std::string out = "[";
    for (std::size_t i = 0; i < rules.size(); ++i) {
        if (i) out += ",";
        out += render_rule(p, rules[i]);
    }
    return out + "]";
}

/// Answers queries against one domain. The domain is validated, grounded
/// and its ramifications compiled once; each query runs on a program
/// instantiated at the salient time points of the domain and the query,
/// plus the time point right after the last occurrence.
class Reasoner {
public:
    explicit Reasoner(const DomainDescription& d, EngineOptions opts = {},
                      std::size_t instance_cap = kDefaultInstanceCap)
        : opts_(opts) {
        auto report = validate_domain(d);
        if (!report.ok()) throw InvalidDomain(std::move(report));
        domain_ = ground_domain(d, instance_cap);
        ramifications_ = compile_ramifications(domain_);
    }

    const DomainDescription& domain() const { return domain_; }
    const RamificationCompilation& ramifications() const { return ramifications_; }

    std::vector<TimePoint> program_times(const std::vector<TimePoint>& query_times) const {
        auto times = salient_times(domain_, query_times);
        auto hs = domain_.hprops();
        if (!hs.empty()) {
            TimePoint last{0};
            for (const auto& h : hs) last = std::max(last, h.time);
            times.push_back(TimePoint{last.value + 1});
            std::sort(times.begin(), times.end());
            times.erase(std::unique(times.begin(), times.end()), times.end());
        }
        return times;
    }

    ArgumentationProgram program(const std::vector<TimePoint>& query_times = {}) const {
        return translate(domain_, program_times(query_times), &ramifications_);
    }

    /// Pre-builds the program for a set of query times so that later queries
    /// at those times skip the translation. Not safe against concurrent
    /// queries; call before sharing the reasoner.
    void prepare(const std::vector<TimePoint>& query_times) {
        cached_ = std::make_shared<const ArgumentationProgram>(program(query_times));
    }

    QueryVerdict answer(const Query& q) const {
        Query resolved = resolve_query(domain_, q);
        switch (resolved.mode) {
            case QueryMode::Sceptical: return sceptical(resolved.literals);
            case QueryMode::Credulous: return credulous(resolved.literals, false);
            case QueryMode::CredulousExplain: return credulous(resolved.literals, true);
        }
        return {};
    }

    QueryVerdict credulous(const std::vector<TemporalLiteral>& goal, bool explain = false) const {
        QueryVerdict v;
        v.mode = explain ? QueryMode::CredulousExplain : QueryMode::Credulous;
        v.goal = goal;
        auto p = program_for(goal);
        try {
            run_credulous(*p, goal, explain, v);
        } catch (const ResourceLimit&) {
            v.outcome = Outcome::Resource;
            v.explanations.clear();
            v.rendered.clear();
        }
        return v;
    }

    /// Each literal must be credulously supported while no support of its
    /// complement extends admissibly.
    QueryVerdict sceptical(const std::vector<TemporalLiteral>& goal) const {
        QueryVerdict v;
        v.mode = QueryMode::Sceptical;
        v.goal = goal;
        auto p = program_for(goal);
        try {
            v.outcome = Outcome::Succeeds;
            for (const auto& l : goal) {
                QueryVerdict pos, neg;
                run_credulous(*p, {l}, false, pos);
                v.nodes += pos.nodes;
                if (!pos.succeeds()) {
                    v.outcome = Outcome::Fails;
                    break;
                }
                run_credulous(*p, {l.complement()}, false, neg);
                v.nodes += neg.nodes;
                if (neg.succeeds()) {
                    v.outcome = Outcome::Fails;
                    break;
                }
            }
        } catch (const ResourceLimit&) {
            v.outcome = Outcome::Resource;
        }
        return v;
    }

    /// Credulous success of the empty goal: the observations and constraints
    /// are jointly supportable. nullopt when the search budget runs out.
    std::optional<bool> consistent() const {
        auto v = credulous({}, false);
        if (v.outcome == Outcome::Resource) return std::nullopt;
        return v.succeeds();
    }

private:
    std::shared_ptr<const ArgumentationProgram> program_for(const std::vector<TemporalLiteral>& goal) const {
        std::vector<TimePoint> qt;
        for (const auto& l : goal) qt.push_back(l.time);
        if (cached_ && std::all_of(qt.begin(), qt.end(), [&](TimePoint t) { return cached_->time_index(t); }))
            return cached_;
        return std::make_shared<const ArgumentationProgram>(program(qt));
    }

    /// Minimal non-self-attacking unions of one base support per goal literal.
    static std::vector<RuleSet> conjunction_supports(const ArgumentationProgram& p, SupportIndex& index,
                                                     const std::vector<LitId>& goal) {
        std::vector<RuleSet> partial{RuleSet{}};
        for (LitId l : goal) {
            std::vector<RuleSet> next;
            for (const auto& x : partial)
                for (const auto& y : index.base_supports(l)) {
                    RuleSet u = unite(x, y);
                    if (!p.close(u).contradictory()) next.push_back(std::move(u));
                }
            partial = std::move(next);
        }
        keep_minimal(partial);
        return partial;
    }

    void run_credulous(const ArgumentationProgram& p, const std::vector<TemporalLiteral>& goal, bool explain,
                       QueryVerdict& v) const {
        SupportIndex index(p, opts_.support_budget);
        std::vector<LitId> ids;
        for (const auto& l : goal) {
            auto f = p.fluent_index(l.literal.fluent);
            if (!f) throw std::invalid_argument("unknown fluent " + to_string(l.literal.fluent));
            ids.push_back(p.lit_id({*f, l.literal.positive, l.time}));
        }
        DisputeSearch search(p, index, opts_);
        // Any extension meeting the observations witnesses consistency, so an
        // inconsistent program answers every goal negatively.
        if (!ids.empty() && !consistent_program(p, search)) {
            v.nodes += search.nodes();
            v.outcome = Outcome::Fails;
            return;
        }
        auto supports = conjunction_supports(p, index, ids);

        std::vector<std::size_t> succeeding;
        for (std::size_t i = 0; i < supports.size(); ++i) {
            if (search.extend(supports[i])) {
                succeeding.push_back(i);
                if (!explain) break;
            }
        }
        v.nodes += search.nodes();
        v.outcome = succeeding.empty() ? Outcome::Fails : Outcome::Succeeds;
        if (!explain || succeeding.empty()) return;

        // Report the supports that carry the goal on their own: some
        // extension contains no other support of the goal.
        std::vector<std::size_t> essential;
        for (std::size_t i : succeeding) {
            std::vector<RuleSet> others;
            for (std::size_t j = 0; j < supports.size(); ++j)
                if (j != i) others.push_back(supports[j]);
            DisputeSearch restricted(p, index, opts_, std::move(others));
            if (restricted.extend(supports[i])) essential.push_back(i);
            v.nodes += restricted.nodes();
        }
        if (essential.empty()) essential = succeeding;
        for (std::size_t i : essential) {
            Explanation e{p.to_rules(supports[i])};
            v.rendered.push_back(render_explanation(p, e.rules));
            v.explanations.push_back(std::move(e));
        }
    }

    bool consistent_program(const ArgumentationProgram& p, DisputeSearch& search) const {
        {
            std::lock_guard<std::mutex> lock(cache_mutex_);
            auto it = consistency_.find(p.times());
            if (it != consistency_.end()) return it->second;
        }
        bool ok = search.extend(RuleSet{}).has_value();
        std::lock_guard<std::mutex> lock(cache_mutex_);
        consistency_.emplace(p.times(), ok);
        return ok;
    }

    EngineOptions opts_;
    mutable std::mutex cache_mutex_;
    mutable std::map<std::vector<TimePoint>, bool> consistency_;
    DomainDescription domain_;
    RamificationCompilation ramifications_;
    std::shared_ptr<const ArgumentationProgram> cached_;
};

inline QueryVerdict credulous(const DomainDescription& d, const Query& q, EngineOptions opts = {}) {
    Query c = q;
    if (c.mode == QueryMode::Sceptical) c.mode = QueryMode::Credulous;
    return Reasoner(d, opts).answer(c);
}

inline QueryVerdict sceptical(const DomainDescription& d, const Query& q, EngineOptions opts = {}) {
    Query s = q;
    s.mode = QueryMode::Sceptical;
    return Reasoner(d, opts).answer(s);
}

inline std::optional<bool> consistent(const DomainDescription& d, EngineOptions opts = {}) {
    return Reasoner(d, opts).consistent();
}

}  // namespace eres
