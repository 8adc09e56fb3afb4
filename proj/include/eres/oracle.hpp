// Model-theoretic reference semantics over a finite horizon: simulate every
// initial valuation forward and keep the trajectories that satisfy the
// ramification constraints and the observations.
#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "eres/core.hpp"

namespace eres {

struct Horizon {
    TimePoint max_time;
};

using FluentState = std::map<Fluent, bool>;

struct StepResult {
    FluentState next_state;
    std::vector<Fluent> changed;
    bool conflict = false;
};

/// A trajectory: valuation[t][i] is the value of fluents[i] at time t.
struct Model {
    std::vector<Fluent> fluents;
    std::vector<std::vector<bool>> valuation;

    bool holds(const FluentLiteral& l, TimePoint t) const {
        for (std::size_t i = 0; i < fluents.size(); ++i)
            if (fluents[i] == l.fluent) return valuation.at(t.value)[i] == l.positive;
        throw std::invalid_argument("unknown fluent " + to_string(l.fluent));
    }

    FluentState state_at(TimePoint t) const {
        FluentState s;
        for (std::size_t i = 0; i < fluents.size(); ++i) s[fluents[i]] = valuation.at(t.value)[i];
        return s;
    }
};

class OracleLimit : public std::runtime_error {
public:
    OracleLimit(const std::string& what, std::size_t count) : std::runtime_error(what), count_(count) {}
    std::size_t fluent_count() const { return count_; }

private:
    std::size_t count_;
};

inline constexpr std::size_t kDefaultFluentCap = 20;

namespace detail {

/// Domain with fluents replaced by indices, h-propositions grouped by time.
class IndexedDomain {
public:
    struct Lit {
        std::size_t fluent;
        bool positive;
    };
    struct Law {
        Action action;
        Lit effect;
        std::vector<Lit> conditions;
    };
    struct Ram {
        Lit head;
        std::vector<Lit> conditions;
    };

    explicit IndexedDomain(const DomainDescription& d) : fluents_(ground_fluents(d)) {
        for (const auto& c : d.cprops()) laws_.push_back({c.action, lit(c.effect), lits(c.conditions)});
        ram_head_.assign(fluents_.size(), false);
        for (const auto& r : d.rprops()) {
            rams_.push_back({lit(r.head), lits(r.conditions)});
            ram_head_[rams_.back().head.fluent] = true;
        }
        for (const auto& h : d.hprops()) happens_[h.time.value].push_back(h.action);
        for (const auto& t : d.tprops()) observations_.push_back({t.time.value, lit(t.literal)});
    }

    const std::vector<Fluent>& fluents() const { return fluents_; }

    std::size_t index(const Fluent& f) const {
        for (std::size_t i = 0; i < fluents_.size(); ++i)
            if (fluents_[i] == f) return i;
        throw std::invalid_argument("fluent " + to_string(f) + " is not in the domain");
    }

    static bool satisfied(const std::vector<bool>& state, const std::vector<Lit>& ls) {
        for (const auto& l : ls)
            if (state[l.fluent] != l.positive) return false;
        return true;
    }

    bool satisfies_ramifications(const std::vector<bool>& state) const {
        for (const auto& r : rams_)
            if (satisfied(state, r.conditions) && state[r.head.fluent] != r.head.positive) return false;
        return true;
    }

    /// The observations at time `t` hold in `state`.
    bool observed_ok(const std::vector<bool>& state, std::uint32_t t) const {
        for (const auto& [ot, l] : observations_)
            if (ot == t && state[l.fluent] != l.positive) return false;
        return true;
    }

    bool satisfies_observations(const std::vector<std::vector<bool>>& traj) const {
        for (const auto& [t, l] : observations_)
            if (t < traj.size() && traj[t][l.fluent] != l.positive) return false;
        return true;
    }

    /// Every state that can follow `state` across time `t`. A candidate
    /// successor is accepted when it is exactly `state` overridden by the
    /// literals caused at `t`: the direct effects whose conditions hold in
    /// `state`, closed under the r-propositions whose conditions hold in the
    /// candidate and include a caused literal (the least fixed point). It must
    /// also satisfy every r-proposition and cause no fluent both ways. Only
    /// fluents heading an r-proposition are guessed; the rest follow from the
    /// direct effects. Nothing happens at a time without occurrences.
    std::vector<std::vector<bool>> successors(const std::vector<bool>& state, std::uint32_t t) const {
        const std::size_t n = state.size();
        std::vector<int> direct(n, -1);
        auto occ = happens_.find(t);
        if (occ == happens_.end()) return {state};
        {
            for (const auto& law : laws_) {
                bool occurs = false;
                for (const auto& a : occ->second) occurs = occurs || a == law.action;
                if (!occurs || !satisfied(state, law.conditions)) continue;
                int v = law.effect.positive ? 1 : 0;
                if (direct[law.effect.fluent] == 1 - v) return {};
                direct[law.effect.fluent] = v;
            }
        }
        std::vector<bool> base = state;
        for (std::size_t i = 0; i < n; ++i)
            if (direct[i] >= 0) base[i] = direct[i] == 1;
        if (rams_.empty()) return {base};

        std::vector<std::size_t> free;
        for (std::size_t i = 0; i < n; ++i)
            if (ram_head_[i]) free.push_back(i);
        std::vector<std::vector<bool>> out;
        for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << free.size()); ++bits) {
            std::vector<bool> next = base;
            for (std::size_t k = 0; k < free.size(); ++k) next[free[k]] = (bits >> (free.size() - 1 - k)) & 1;
            if (accepts(state, direct, next)) out.push_back(std::move(next));
        }
        return out;
    }

    /// First successor in guessing order; false when there is none.
    bool step(const std::vector<bool>& state, std::uint32_t t, std::vector<bool>& next) const {
        auto all = successors(state, t);
        if (all.empty()) return false;
        next = std::move(all.front());
        return true;
    }

private:
    bool accepts(const std::vector<bool>& state, const std::vector<int>& direct, const std::vector<bool>& next) const {
        if (!satisfies_ramifications(next)) return false;
        std::vector<int> caused = direct;
        bool changed = true;
        while (changed) {
            changed = false;
            for (const auto& r : rams_) {
                int v = r.head.positive ? 1 : 0;
                if (caused[r.head.fluent] == v || !satisfied(next, r.conditions)) continue;
                bool triggered = false;
                for (const auto& c : r.conditions) triggered = triggered || caused[c.fluent] == (c.positive ? 1 : 0);
                if (!triggered) continue;
                if (caused[r.head.fluent] == 1 - v) return false;
                caused[r.head.fluent] = v;
                changed = true;
            }
        }
        for (std::size_t i = 0; i < next.size(); ++i)
            if (next[i] != (caused[i] >= 0 ? caused[i] == 1 : bool(state[i]))) return false;
        return true;
    }

    Lit lit(const FluentLiteral& l) const { return {index(l.fluent), l.positive}; }
    std::vector<Lit> lits(const std::vector<FluentLiteral>& ls) const {
        std::vector<Lit> out;
        for (const auto& l : ls) out.push_back(lit(l));
        return out;
    }

    std::vector<Fluent> fluents_;
    std::vector<Law> laws_;
    std::vector<Ram> rams_;
    std::vector<bool> ram_head_;
    std::map<std::uint32_t, std::vector<Action>> happens_;
    std::vector<std::pair<std::uint32_t, Lit>> observations_;
};

}  // namespace detail

/// One time step from `state` across time point `t`. Fluents absent from
/// `state` are read as false.
inline StepResult progress_state(const DomainDescription& d, const FluentState& state, TimePoint t) {
    detail::IndexedDomain dom(d);
    const auto& fl = dom.fluents();
    std::vector<bool> cur(fl.size(), false);
    for (std::size_t i = 0; i < fl.size(); ++i) {
        auto it = state.find(fl[i]);
        if (it != state.end()) cur[i] = it->second;
    }
    std::vector<bool> next;
    StepResult r;
    r.conflict = !dom.step(cur, t.value, next);
    if (r.conflict) return r;
    for (std::size_t i = 0; i < fl.size(); ++i) {
        r.next_state[fl[i]] = next[i];
        if (next[i] != cur[i]) r.changed.push_back(fl[i]);
    }
    return r;
}

/// All models over times 0..h.max_time, ordered by initial valuation (the
/// first fluent is the most significant bit, false before true).
inline std::vector<Model> enumerate_models(const DomainDescription& d, Horizon h,
                                           std::size_t fluent_cap = kDefaultFluentCap) {
    detail::IndexedDomain dom(d);
    const std::size_t n = dom.fluents().size();
    if (n > fluent_cap)
        throw OracleLimit("model enumeration over " + std::to_string(n) + " fluents exceeds the cap of " +
                              std::to_string(fluent_cap),
                          n);
    std::vector<Model> out;
    const std::uint32_t last = h.max_time.value;
    std::vector<std::vector<bool>> traj(last + 1);
    // Depth-first over successor choices keeps the output ordered by initial
    // valuation, then by successor order.
    auto extend = [&](auto&& self, std::uint32_t t) -> void {
        if (t == last) {
            if (dom.satisfies_observations(traj)) out.push_back({dom.fluents(), traj});
            return;
        }
        for (auto& next : dom.successors(traj[t], t)) {
            if (!dom.observed_ok(next, t + 1)) continue;
            traj[t + 1] = std::move(next);
            self(self, t + 1);
        }
    };
    const std::uint64_t count = std::uint64_t{1} << n;
    for (std::uint64_t bits = 0; bits < count; ++bits) {
        traj[0].assign(n, false);
        for (std::size_t i = 0; i < n; ++i) traj[0][i] = (bits >> (n - 1 - i)) & 1;
        if (!dom.satisfies_ramifications(traj[0]) || !dom.observed_ok(traj[0], 0)) continue;
        extend(extend, 0);
    }
    return out;
}

/// Default horizon: one step past the latest time in the domain or query.
inline Horizon default_horizon(const DomainDescription& d, const std::vector<TimePoint>& query_times = {}) {
    TimePoint m = max_time(d);
    for (auto t : query_times) m = std::max(m, t);
    return {TimePoint{m.value + 1}};
}

inline bool consistent(const DomainDescription& d, Horizon h) { return !enumerate_models(d, h).empty(); }

/// Holds in every model, and there is at least one model.
inline bool entails_sceptical(const DomainDescription& d, Horizon h, const TemporalLiteral& lit) {
    auto models = enumerate_models(d, h);
    if (models.empty()) return false;
    for (const auto& m : models)
        if (!m.holds(lit.literal, lit.time)) return false;
    return true;
}

inline bool holds_credulous(const DomainDescription& d, Horizon h, const TemporalLiteral& lit) {
    for (const auto& m : enumerate_models(d, h))
        if (m.holds(lit.literal, lit.time)) return true;
    return false;
}

/// Verdicts for many literals from a single enumeration.
class ModelSet {
public:
    ModelSet(const DomainDescription& d, Horizon h) : models_(enumerate_models(d, h)) {}

    const std::vector<Model>& models() const { return models_; }
    bool consistent() const { return !models_.empty(); }

    bool sceptical(const TemporalLiteral& l) const {
        if (models_.empty()) return false;
        for (const auto& m : models_)
            if (!m.holds(l.literal, l.time)) return false;
        return true;
    }

    bool credulous(const TemporalLiteral& l) const {
        for (const auto& m : models_)
            if (m.holds(l.literal, l.time)) return true;
        return false;
    }

private:
    std::vector<Model> models_;
};

/// One line per model: `t=0: {F, ~G} t=1: {...} ...`.
inline std::string dump_models(const std::vector<Model>& models) {
    std::string out;
    for (const auto& m : models) {
        for (std::size_t t = 0; t < m.valuation.size(); ++t) {
            if (t) out += ' ';
            out += "t=" + std::to_string(t) + ": {";
            for (std::size_t i = 0; i < m.fluents.size(); ++i) {
                if (i) out += ", ";
                out += (m.valuation[t][i] ? "" : "~") + to_string(m.fluents[i]);
            }
            out += '}';
        }
        out += '\n';
    }
    return out;
}

}  // namespace eres
