#include <gtest/gtest.h>

#include <random>

#include "test_support.hpp"

using namespace eres;
using eres::testing::corpus_domain;
using eres::testing::times;

namespace {

using K = RuleKind;

ArgumentRule gen(const ArgumentationProgram& p, const char* f, bool pos, std::uint32_t t2, std::uint32_t t1) {
    return {K::Generation, pos, *p.fluent_index(Fluent(f)), TimePoint{t2}, TimePoint{t1}};
}
ArgumentRule per(const ArgumentationProgram& p, const char* f, bool pos, std::uint32_t t2, std::uint32_t t1) {
    return {K::Persistence, pos, *p.fluent_index(Fluent(f)), TimePoint{t2}, TimePoint{t1}};
}
ArgumentRule ass(const ArgumentationProgram& p, const char* f, bool pos, std::uint32_t t) {
    return {K::Assumption, pos, *p.fluent_index(Fluent(f)), TimePoint{t}, std::nullopt};
}
HoldsLiteral holds(const ArgumentationProgram& p, const char* f, bool pos, std::uint32_t t) {
    return {*p.fluent_index(Fluent(f)), pos, TimePoint{t}};
}

std::set<std::vector<ArgumentRule>> as_set(std::vector<std::vector<ArgumentRule>> v) {
    for (auto& s : v) std::sort(s.begin(), s.end());
    return {v.begin(), v.end()};
}

}  // namespace

TEST(Translate, Vaccinations) {
    auto p = translate(corpus_domain("dv.e"), times({0, 2, 3, 6}));
    const auto& b = p.background();
    ASSERT_EQ(b.happens.size(), 2u);
    EXPECT_EQ(b.happens[0], (HProp{Action("InjectA"), TimePoint{2}}));
    ASSERT_EQ(b.clauses.size(), 2u);
    EXPECT_EQ(b.clauses[0].head, (EffectAtom{true, *p.fluent_index(Fluent("Protected")), TimePoint{2}}));
    EXPECT_EQ(b.clauses[0].body, (std::vector<HoldsLiteral>{holds(p, "TypeO", true, 2)}));
    EXPECT_EQ(b.clauses[1].head.time, TimePoint{3});
    EXPECT_EQ(b.clauses[1].body, (std::vector<HoldsLiteral>{holds(p, "TypeO", false, 3)}));
}

TEST(Translate, EmptyDomainHasOnlyAssumptions) {
    auto d = parse_domain("fluent F.\n");
    auto p = translate(d, times({0}));
    EXPECT_TRUE(p.background().clauses.empty());
    ASSERT_EQ(p.theory().size(), 2u);
    for (const auto& r : p.theory()) EXPECT_EQ(r.kind, K::Assumption);
}

TEST(Translate, CarsTerminationHasEmptyBody) {
    auto p = translate(corpus_domain("dc.e"), times({0, 1, 2, 5, 8, 10}));
    bool found = false;
    for (const auto& c : p.background().clauses)
        if (!c.head.initiation && c.head.fluent == *p.fluent_index(Fluent("Running")) && c.head.time == TimePoint{2})
            found = c.body.empty();
    EXPECT_TRUE(found);
}

TEST(Translate, RuleShapes) {
    auto p = translate(corpus_domain("dc.e"), times({0, 1, 2, 5, 8, 10}));
    for (const auto& r : p.theory()) {
        if (r.kind == K::Assumption) {
            EXPECT_FALSE(r.source_time);
        } else {
            ASSERT_TRUE(r.source_time);
            EXPECT_LT(*r.source_time, r.result_time);
        }
    }
    for (RuleId id : p.base()) EXPECT_NE(p.rule(id).kind, K::Persistence);
}

TEST(Derives, Examples) {
    auto pv = translate(corpus_domain("dv.e"), times({0, 2, 3, 6}));
    std::vector<ArgumentRule> s{ass(pv, "TypeO", true, 2), gen(pv, "Protected", true, 6, 2)};
    EXPECT_TRUE(derives(pv, s, holds(pv, "Protected", true, 6)));
    EXPECT_FALSE(derives(pv, {}, holds(pv, "Protected", true, 6)));

    auto pc = translate(corpus_domain("dc.e"), times({0, 1, 2, 5, 8, 10}));
    EXPECT_TRUE(derives(pc, {}, EffectAtom{false, *pc.fluent_index(Fluent("Running")), TimePoint{2}}));
    EXPECT_FALSE(derives(pc, {}, EffectAtom{true, *pc.fluent_index(Fluent("Running")), TimePoint{5}}));
}

TEST(Derives, PersistenceNeedsItsSource) {
    auto p = translate(corpus_domain("dc.e"), times({0, 1, 2, 5, 8, 10}));
    std::vector<ArgumentRule> s{per(p, "Petrol", true, 5, 1)};
    EXPECT_FALSE(derives(p, s, holds(p, "Petrol", true, 5)));
    s.push_back(ass(p, "Petrol", true, 1));
    EXPECT_TRUE(derives(p, s, holds(p, "Petrol", true, 5)));
}

TEST(Derives, IsMonotone) {
    auto p = translate(corpus_domain("dc.e"), times({0, 1, 2, 5, 8, 10}));
    std::mt19937 rng(11);
    const auto& theory = p.theory();
    for (int round = 0; round < 200; ++round) {
        std::vector<ArgumentRule> small, big;
        for (const auto& r : theory) {
            int pick = rng() % 8;
            if (pick == 0) small.push_back(r);
            if (pick <= 2) big.push_back(r);
        }
        Closure cs = p.close(p.to_ids(small)), cb = p.close(p.to_ids(big));
        for (LitId l = 0; l < cs.literals.size(); ++l)
            if (cs.has(l)) ASSERT_TRUE(cb.has(l));
    }
}

TEST(MinimalSupports, PhotographsWithDigital) {
    auto p = translate(corpus_domain("dp5.e"), times({0, 1, 2, 3}));
    auto got = as_set(minimal_supports(p, holds(p, "Picture", true, 3)));
    auto want = as_set({{gen(p, "Picture", true, 3, 2), ass(p, "Loaded", true, 2)},
                        {gen(p, "Picture", true, 3, 2), ass(p, "Digital", true, 2)},
                        {ass(p, "Picture", true, 3)}});
    EXPECT_EQ(got, want);
}

TEST(MinimalSupports, NoLawsMeansAssumption) {
    auto p = translate(parse_domain("fluent F.\naction A.\nA happens-at 2.\n"), times({0, 2, 4}));
    auto got = minimal_supports(p, holds(p, "F", true, 4));
    ASSERT_EQ(got.size(), 1u);
    EXPECT_EQ(got[0], (std::vector<ArgumentRule>{ass(p, "F", true, 4)}));
}

TEST(MinimalSupports, CarsPetrolLate) {
    auto p = translate(corpus_domain("dc.e"), times({0, 1, 2, 5, 8, 10}));
    auto got = as_set(minimal_supports(p, holds(p, "Petrol", false, 10)));
    EXPECT_TRUE(got.count({gen(p, "Petrol", false, 10, 8)}));
    EXPECT_TRUE(got.count({ass(p, "Petrol", false, 10)}));
}

TEST(MinimalSupports, AreMinimalAndCoherent) {
    for (const char* f : eres::testing::kCorpus) {
        Reasoner r(corpus_domain(f));
        auto p = r.program();
        SupportIndex index(p);
        for (LitId l = 0; l < p.literal_count(); ++l) {
            const auto& sups = index.base_supports(l);
            for (std::size_t i = 0; i < sups.size(); ++i) {
                const auto& s = sups[i];
                EXPECT_TRUE(p.close(s).has(l));
                EXPECT_FALSE(attacks(p, index, s, s)) << f;
                for (RuleId id : s) EXPECT_TRUE(p.in_base(id));
                for (std::size_t j = 0; j < sups.size(); ++j)
                    if (i != j) EXPECT_FALSE(is_subset(sups[j], s));
            }
        }
    }
}

TEST(Priority, Examples) {
    auto p = translate(corpus_domain("dc.e"), times({0, 1, 2, 5, 6, 8, 10}));
    EXPECT_TRUE(lower_priority(per(p, "Running", true, 6, 1), gen(p, "Running", false, 6, 2)));
    EXPECT_FALSE(lower_priority(gen(p, "Running", true, 6, 5), gen(p, "Running", false, 6, 2)));
    EXPECT_TRUE(lower_priority(gen(p, "Running", false, 6, 2), gen(p, "Running", true, 6, 5)));
    EXPECT_FALSE(lower_priority(ass(p, "Running", true, 6), ass(p, "Running", false, 6)));
    EXPECT_TRUE(lower_priority(ass(p, "Running", true, 6), per(p, "Running", false, 6, 2)));
    // Same polarity or different times never compare.
    EXPECT_FALSE(lower_priority(ass(p, "Running", true, 6), gen(p, "Running", true, 6, 5)));
    EXPECT_FALSE(lower_priority(ass(p, "Running", true, 5), gen(p, "Running", false, 6, 5)));
}

TEST(Priority, IrreflexiveAndAsymmetric) {
    for (const char* f : eres::testing::kCorpus) {
        auto p = Reasoner(corpus_domain(f)).program();
        const auto& th = p.theory();
        for (const auto& a : th) {
            EXPECT_FALSE(lower_priority(a, a));
            for (const auto& b : th)
                if (lower_priority(a, b)) ASSERT_FALSE(lower_priority(b, a));
        }
    }
}

TEST(Attacks, Examples) {
    auto pc = translate(corpus_domain("dc.e"), times({0, 1, 2, 5, 6, 8, 10}));
    std::vector<ArgumentRule> on{gen(pc, "Running", true, 6, 5), ass(pc, "Petrol", true, 5)};
    std::vector<ArgumentRule> off{gen(pc, "Running", false, 6, 2)};
    EXPECT_TRUE(attacks(pc, on, off));
    EXPECT_FALSE(attacks(pc, off, on));
    EXPECT_FALSE(attacks(pc, {}, off));
    EXPECT_FALSE(attacks(pc, off, {}));

    auto pv = translate(corpus_domain("dv.e"), times({0, 2, 3, 6}));
    std::vector<ArgumentRule> o{ass(pv, "TypeO", true, 2)}, no{ass(pv, "TypeO", false, 2)};
    EXPECT_TRUE(attacks(pv, o, no));
    EXPECT_TRUE(attacks(pv, no, o));
}

TEST(Attacks, MonotoneInTheAttacker) {
    auto pc = translate(corpus_domain("dc.e"), times({0, 1, 2, 5, 6, 8, 10}));
    std::vector<ArgumentRule> on{gen(pc, "Running", true, 6, 5), ass(pc, "Petrol", true, 5)};
    std::vector<ArgumentRule> off{gen(pc, "Running", false, 6, 2)};
    auto bigger = on;
    bigger.push_back(ass(pc, "Running", true, 1));
    bigger.push_back(ass(pc, "Petrol", true, 10));
    EXPECT_TRUE(attacks(pc, bigger, off));
}
