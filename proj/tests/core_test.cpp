#include <gtest/gtest.h>

#include "test_support.hpp"

using namespace eres;
using eres::testing::corpus_domain;
using eres::testing::times;

namespace {

DomainDescription with_vocabulary(std::vector<std::string> fluents, std::vector<std::string> actions,
                                  std::vector<std::string> constants = {}) {
    DomainDescription d;
    d.vocabulary = {std::move(fluents), std::move(actions), std::move(constants)};
    return d;
}

}  // namespace

TEST(Core, ComplementIsAnInvolution) {
    FluentLiteral l{Fluent("Running"), true};
    EXPECT_EQ(l.complement().complement(), l);
    EXPECT_NE(l.complement(), l);
    TemporalLiteral t{l, TimePoint{4}};
    EXPECT_EQ(t.complement().complement(), t);
}

TEST(Core, VariablesStartUppercase) {
    EXPECT_TRUE(is_variable("X"));
    EXPECT_FALSE(is_variable("x"));
    EXPECT_FALSE(is_variable(""));
}

TEST(Core, CorpusDomainsValidate) {
    for (const char* f : eres::testing::kCorpus) EXPECT_TRUE(validate_domain(corpus_domain(f)).ok()) << f;
    EXPECT_TRUE(validate_domain(DomainDescription{}).ok());
}

TEST(Core, RangeRestrictionNamesTheVariable) {
    auto d = with_vocabulary({"At", "Near"}, {"Move"}, {"a"});
    d.add(CProp{Action("Move", {"Y"}), {Fluent("At", {"X"}), true}, {{Fluent("Near", {"Z"}), true}}});
    auto report = validate_domain(d);
    ASSERT_FALSE(report.ok());
    bool named = false;
    for (const auto& v : report.violations) named = named || (v.kind == ViolationKind::UnboundVariable && v.symbol == "Z");
    EXPECT_TRUE(named) << report.message();
}

TEST(Core, ValidationRejectsMalformedPropositions) {
    auto d = with_vocabulary({"F", "G"}, {"A"});
    d.add(CProp{Action("A"), {Fluent("F"), true}, {{Fluent("G"), true}, {Fluent("G"), false}}});
    d.add(CProp{Action("B"), {Fluent("F"), true}, {}});
    d.add(RProp{{Fluent("F"), true}, {{Fluent("F"), true}}});
    d.add(HProp{Action("A", {"X"}), TimePoint{1}});
    auto report = validate_domain(d);
    std::set<ViolationKind> kinds;
    for (const auto& v : report.violations) kinds.insert(v.kind);
    EXPECT_TRUE(kinds.count(ViolationKind::ContradictoryConditions));
    EXPECT_TRUE(kinds.count(ViolationKind::UndeclaredAction));
    EXPECT_TRUE(kinds.count(ViolationKind::SelfReferentialRamification));
    EXPECT_TRUE(kinds.count(ViolationKind::NonGround));
}

TEST(Core, ContradictoryObservationsPassValidation) {
    auto d = with_vocabulary({"F"}, {});
    d.add(TProp{{Fluent("F"), true}, TimePoint{1}});
    d.add(TProp{{Fluent("F"), false}, TimePoint{1}});
    EXPECT_TRUE(validate_domain(d).ok());
}

TEST(Core, DuplicateOccurrencesCollapse) {
    auto d = with_vocabulary({"F"}, {"A"});
    d.add(HProp{Action("A"), TimePoint{2}});
    d.add(HProp{Action("A"), TimePoint{2}});
    d.add(TProp{{Fluent("F"), true}, TimePoint{2}});
    d.add(TProp{{Fluent("F"), true}, TimePoint{2}});
    EXPECT_EQ(d.hprops().size(), 1u);
    EXPECT_EQ(d.tprops().size(), 1u);
}

TEST(Core, GroundingLeavesGroundDomainsAlone) {
    for (const char* f : {"dc.e", "dp.e"}) {
        auto d = corpus_domain(f);
        EXPECT_EQ(ground_domain(d), d) << f;
    }
}

TEST(Core, GroundingInstantiatesOverConstants) {
    auto d = with_vocabulary({"Lit"}, {"Light"}, {"a", "b"});
    d.add(CProp{Action("Light", {"X"}), {Fluent("Lit", {"X"}), true}, {}});
    auto g = ground_domain(d);
    ASSERT_EQ(g.cprops().size(), 2u);
    EXPECT_EQ(g.cprops()[0].effect.fluent, Fluent("Lit", {"a"}));
    EXPECT_EQ(g.cprops()[1].effect.fluent, Fluent("Lit", {"b"}));
    EXPECT_TRUE(is_ground(g));
    EXPECT_EQ(ground_domain(g), g);
    EXPECT_TRUE(validate_domain(g).ok());
    EXPECT_EQ(ground_fluents(g).size(), 2u);
}

TEST(Core, GroundingCapReportsCount) {
    auto d = with_vocabulary({"On"}, {"Put"}, {"a", "b", "c"});
    d.add(CProp{Action("Put", {"X", "Y"}), {Fluent("On", {"X", "Y"}), true}, {}});
    try {
        ground_domain(d, 4);
        FAIL() << "expected the cap to trigger";
    } catch (const GroundingError& e) {
        EXPECT_EQ(e.instance_count(), 9u);
    }
}

TEST(Core, SalientTimes) {
    EXPECT_EQ(salient_times(corpus_domain("dc.e"), times({10})), times({0, 1, 2, 5, 8, 10}));
    EXPECT_EQ(salient_times(DomainDescription{}, {}), times({0}));
    EXPECT_EQ(salient_times(corpus_domain("dv.e"), times({6})), times({0, 2, 3, 6}));
}

TEST(Core, SalientTimesAreSortedAndContainQueries) {
    auto d = corpus_domain("di.e");
    auto ts = salient_times(d, times({9, 2, 9}));
    EXPECT_TRUE(std::is_sorted(ts.begin(), ts.end()));
    EXPECT_EQ(std::adjacent_find(ts.begin(), ts.end()), ts.end());
    EXPECT_EQ(ts.front(), TimePoint{0});
    EXPECT_NE(std::find(ts.begin(), ts.end(), TimePoint{9}), ts.end());
    EXPECT_NE(std::find(ts.begin(), ts.end(), TimePoint{2}), ts.end());
}

TEST(Core, ExternalNames) {
    EXPECT_EQ(external_name("TurnOff"), "turnOff");
    EXPECT_EQ(external_name("typeO"), "typeO");
}
