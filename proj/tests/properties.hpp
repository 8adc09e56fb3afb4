// Property checks shared by the unit suite and the acceptance binary. Each
// check returns a report instead of asserting so both drivers can use it.
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "eres/eres.hpp"
#include "random_domain.hpp"

namespace eres::testing {

struct Report {
    std::size_t domains = 0;
    std::size_t checks = 0;
    std::size_t failures = 0;
    std::string first_failure;

    bool ok() const { return failures == 0; }

    void fail(const std::string& why) {
        if (failures++ == 0) first_failure = why;
    }

    void merge(const Report& o) {
        domains += o.domains;
        checks += o.checks;
        if (!o.ok() && ok()) first_failure = o.first_failure;
        failures += o.failures;
    }
};

inline std::vector<DomainDescription> generated_domains(std::size_t n, int max_rprops, std::uint32_t seed) {
    GeneratorLimits lim;
    lim.max_rprops = max_rprops;
    DomainGenerator gen(seed, lim);
    std::vector<DomainDescription> out;
    for (std::size_t i = 0; i < n; ++i) out.push_back(gen.next());
    return out;
}

inline std::vector<TemporalLiteral> tested_literals(const DomainDescription& d) {
    std::vector<TemporalLiteral> out;
    for (auto t : salient_times(d, {}))
        for (const auto& f : ground_fluents(d))
            for (bool pos : {true, false}) out.push_back({{f, pos}, t});
    return out;
}

inline std::string describe(const DomainDescription& d, const TemporalLiteral& l, const std::string& what) {
    return what + " for " + (l.literal.positive ? "" : "~") + to_string(l.literal.fluent) + "@" +
           std::to_string(l.time.value) + " in\n" + print_domain(d);
}

/// Engine verdicts equal oracle verdicts for every tested literal.
inline Report oracle_equivalence(const std::vector<DomainDescription>& domains) {
    Report r;
    for (const auto& d : domains) {
        ++r.domains;
        Reasoner engine(d);
        ModelSet models(d, default_horizon(d));
        for (const auto& l : tested_literals(d)) {
            r.checks += 2;
            auto s = engine.sceptical({l});
            auto c = engine.credulous({l});
            if (s.outcome == Outcome::Resource || c.outcome == Outcome::Resource)
                r.fail(describe(d, l, "resource limit"));
            else if (s.succeeds() != models.sceptical(l))
                r.fail(describe(d, l, "sceptical verdict differs from the oracle"));
            else if (c.succeeds() != models.credulous(l))
                r.fail(describe(d, l, "credulous verdict differs from the oracle"));
        }
    }
    return r;
}

/// On consistent domains, sceptical(l) is the negation of credulous(~l).
inline Report duality(const std::vector<DomainDescription>& domains) {
    Report r;
    for (const auto& d : domains) {
        Reasoner engine(d);
        if (engine.consistent() != std::optional<bool>(true)) continue;
        ++r.domains;
        for (const auto& l : tested_literals(d)) {
            ++r.checks;
            TemporalLiteral neg{{l.literal.fluent, !l.literal.positive}, l.time};
            if (engine.sceptical({l}).succeeds() == engine.credulous({neg}).succeeds())
                r.fail(describe(d, l, "sceptical is not the dual of credulous"));
        }
    }
    return r;
}

/// A fluent only changes value across a time at which something happens.
inline Report persistence(const std::vector<DomainDescription>& domains) {
    Report r;
    for (const auto& d : domains) {
        ++r.domains;
        std::vector<bool> busy(max_time(d).value + 2, false);
        for (const auto& h : d.hprops()) busy[h.time.value] = true;
        for (const auto& m : enumerate_models(d, default_horizon(d))) {
            for (std::size_t t = 0; t + 1 < m.valuation.size(); ++t) {
                ++r.checks;
                if (m.valuation[t] != m.valuation[t + 1] && !(t < busy.size() && busy[t]))
                    r.fail("a fluent changes across quiet time " + std::to_string(t) + " in\n" + print_domain(d));
            }
        }
    }
    return r;
}

inline Report round_trip(const std::vector<DomainDescription>& domains) {
    Report r;
    for (const auto& d : domains) {
        ++r.domains;
        ++r.checks;
        const std::string text = print_domain(d);
        try {
            if (print_domain(parse_domain(text)) != text || !(parse_domain(text) == d))
                r.fail("round trip changes\n" + text);
        } catch (const std::exception& e) {
            r.fail(std::string("printed domain does not parse: ") + e.what() + "\n" + text);
        }
    }
    return r;
}

/// Adding an observation only removes models.
inline Report observation_monotonicity(const std::vector<DomainDescription>& domains) {
    Report r;
    for (const auto& d : domains) {
        auto fluents = ground_fluents(d);
        if (fluents.empty()) continue;
        ++r.domains;
        auto before = enumerate_models(d, default_horizon(d));
        DomainDescription more = d;
        more.add(TProp{{fluents.front(), true}, TimePoint{0}});
        auto after = enumerate_models(more, default_horizon(d));
        ++r.checks;
        for (const auto& m : after) {
            bool found = false;
            for (const auto& b : before) found = found || b.valuation == m.valuation;
            if (!found) {
                r.fail("an observation added a model to\n" + print_domain(d));
                break;
            }
        }
    }
    return r;
}

}  // namespace eres::testing
