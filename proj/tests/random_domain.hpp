// Seeded generator of small ground domains for differential testing.
#pragma once

#include <algorithm>
#include <random>
#include <string>
#include <vector>

#include "eres/core.hpp"

namespace eres::testing {

struct GeneratorLimits {
    int max_fluents = 3;
    int max_actions = 2;
    int max_cprops = 4;
    int max_conditions = 2;
    int max_hprops = 4;
    int max_tprops = 2;
    int max_rprops = 0;  // single-condition r-propositions
    std::uint32_t max_time = 8;
};

class DomainGenerator {
public:
    explicit DomainGenerator(std::uint32_t seed, GeneratorLimits limits = {}) : rng_(seed), lim_(limits) {}

    DomainDescription next() {
        DomainDescription d;
        const int nf = pick(1, lim_.max_fluents);
        const int na = pick(1, lim_.max_actions);
        for (int i = 0; i < nf; ++i) d.vocabulary.fluents.push_back(std::string("F") + char('a' + i));
        for (int i = 0; i < na; ++i) d.vocabulary.actions.push_back(std::string("A") + char('a' + i));

        const int nc = pick(0, lim_.max_cprops);
        for (int i = 0; i < nc; ++i) {
            CProp c;
            c.action = Action(d.vocabulary.actions[pick(0, na - 1)]);
            c.effect = literal(d, pick(0, nf - 1));
            std::vector<int> idx(nf);
            for (int k = 0; k < nf; ++k) idx[k] = k;
            std::shuffle(idx.begin(), idx.end(), rng_);
            const int ncond = pick(0, std::min(lim_.max_conditions, nf));
            for (int k = 0; k < ncond; ++k) c.conditions.push_back(literal(d, idx[k]));
            d.add(c);
        }
        const int nh = pick(0, lim_.max_hprops);
        for (int i = 0; i < nh; ++i)
            d.add(HProp{Action(d.vocabulary.actions[pick(0, na - 1)]), TimePoint{time()}});
        const int nt = pick(0, lim_.max_tprops);
        for (int i = 0; i < nt; ++i) d.add(TProp{literal(d, pick(0, nf - 1)), TimePoint{time()}});
        if (nf >= 2 && lim_.max_rprops > 0) {
            const int nr = pick(0, lim_.max_rprops);
            for (int i = 0; i < nr; ++i) {
                int h = pick(0, nf - 1);
                int c = pick(0, nf - 2);
                if (c >= h) ++c;
                d.add(RProp{literal(d, h), {literal(d, c)}});
            }
        }
        return d;
    }

private:
    int pick(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }
    std::uint32_t time() { return std::uniform_int_distribution<std::uint32_t>(0, lim_.max_time)(rng_); }
    FluentLiteral literal(const DomainDescription& d, int f) {
        return {Fluent(d.vocabulary.fluents[f]), pick(0, 1) == 1};
    }

    std::mt19937 rng_;
    GeneratorLimits lim_;
};

}  // namespace eres::testing
