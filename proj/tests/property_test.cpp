#include <gtest/gtest.h>

#include "properties.hpp"
#include "test_support.hpp"

using namespace eres;
using namespace eres::testing;

namespace {

std::vector<DomainDescription> corpus() {
    std::vector<DomainDescription> out;
    for (const char* f : kCorpus) out.push_back(corpus_domain(f));
    return out;
}

void expect_ok(const Report& r) {
    EXPECT_TRUE(r.ok()) << r.failures << " of " << r.checks << " checks failed, first:\n" << r.first_failure;
    EXPECT_GT(r.checks, 0u);
}

}  // namespace

// Seeds differ from the acceptance run so the two cover different domains.
TEST(Properties, EngineAgreesWithOracleWithoutRamifications) { expect_ok(oracle_equivalence(generated_domains(200, 0, 7))); }

TEST(Properties, EngineAgreesWithOracleWithRamifications) { expect_ok(oracle_equivalence(generated_domains(150, 2, 8))); }

TEST(Properties, EngineAgreesWithOracleOnCorpus) {
    auto domains = corpus();
    // The infection domain has too many salient literals for a quick oracle pass.
    std::erase_if(domains, [](const DomainDescription& d) { return ground_fluents(d).size() > 3; });
    expect_ok(oracle_equivalence(domains));
}

TEST(Properties, Duality) { expect_ok(duality(generated_domains(150, 2, 9))); }

TEST(Properties, FluentsPersistAcrossQuietTimes) {
    expect_ok(persistence(corpus()));
    expect_ok(persistence(generated_domains(200, 2, 10)));
}

TEST(Properties, PrintThenParseIsIdentity) {
    expect_ok(round_trip(corpus()));
    expect_ok(round_trip(generated_domains(100, 2, 11)));
}

TEST(Properties, ObservationsOnlyRemoveModels) { expect_ok(observation_monotonicity(generated_domains(200, 2, 12))); }

TEST(Properties, GeneratorIsDeterministic) {
    auto a = generated_domains(20, 2, 5);
    auto b = generated_domains(20, 2, 5);
    EXPECT_EQ(a, b);
}
