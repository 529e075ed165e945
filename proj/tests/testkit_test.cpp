#include <gtest/gtest.h>

#include "properties.hpp"

using namespace dfd;
using namespace dfd::testing;

namespace {

void expect_counts(const Diagram& d, std::size_t p, std::size_t e, std::size_t s, std::size_t f) {
    EXPECT_EQ(d.processes().size(), p) << d.title().str();
    EXPECT_EQ(d.entities().size(), e) << d.title().str();
    EXPECT_EQ(d.stores().size(), s) << d.title().str();
    EXPECT_EQ(d.flows().size(), f) << d.title().str();
}

}  // namespace

TEST(Generate, AisShapeForSeedOne) {
    GenParams params;
    params.seed = 1;
    const Project p = generate(params);
    ASSERT_EQ(p.size(), 2u);
    expect_counts(p.diagrams()[0], 1, 1, 0, 2);
    expect_counts(p.diagrams()[1], 2, 1, 1, 5);
    EXPECT_TRUE(check_project(p).empty());
}

TEST(Generate, Deterministic) {
    for (std::uint64_t seed = 1; seed <= 30; ++seed)
        EXPECT_EQ(dsl::to_canonical_json(generate(params_for(seed))), dsl::to_canonical_json(generate(params_for(seed))));
    EXPECT_NE(dsl::to_canonical_json(generate(params_for(1))), dsl::to_canonical_json(generate(params_for(2))));
}

TEST(Generate, Depth) {
    GenParams params;
    params.depth = 3;
    params.n_level0_processes = 3;
    const Project p = generate(params);
    std::size_t deepest = 0;
    for (const auto& d : p.diagrams())
        if (auto f = d.focus()) deepest = std::max(deepest, f->is_root() ? std::size_t{1} : f->depth() + 1);
    EXPECT_EQ(deepest, 3u);
    EXPECT_EQ(count_errors(check_project(p)), 0u);
}

TEST(Generate, RejectsInfeasibleParams) {
    auto rejects = [](GenParams params) {
        try {
            generate(params);
        } catch (const Error& e) {
            return e.kind() == ErrorKind::InfeasibleParams;
        }
        return false;
    };
    GenParams p;
    p.n_entities = 0;
    EXPECT_TRUE(rejects(p));
    p = {};
    p.n_level0_processes = 0;
    EXPECT_TRUE(rejects(p));
    p = {};
    p.n_level0_processes = 1;
    p.n_internal_flows = 1;
    EXPECT_TRUE(rejects(p));
    p = {};
    p.depth = 0;
    EXPECT_TRUE(rejects(p));
    p = {};
    p.n_stores = -1;
    EXPECT_TRUE(rejects(p));
}

TEST(Generate, Soundness) {
    const PropertyResult r = generator_soundness(500);
    EXPECT_EQ(r.cases, 500u);
    EXPECT_TRUE(r.passed()) << r.failures.front();
}

TEST(Generate, JsonRoundTrip) {
    const PropertyResult r = json_round_trip(300);
    EXPECT_TRUE(r.passed()) << r.failures.front();
}

TEST(Mutate, AisShapedExamples) {
    const Project ais = generate(GenParams{});
    EXPECT_EQ(error_codes(check_project(mutate(ais, mutation_for(MutationKind::DropBoundaryFlowInChild), 1))),
              std::set<Code>{Code::C103});
    EXPECT_EQ(error_codes(check_project(mutate(ais, mutation_for(MutationKind::RenameChildEntity), 1))),
              (std::set<Code>{Code::C101, Code::C102, Code::C103, Code::C104}));
    GenParams two_entities;
    two_entities.n_entities = 2;
    EXPECT_EQ(error_codes(check_project(mutate(generate(two_entities), mutation_for(MutationKind::EntityToEntityFlow), 1))),
              std::set<Code>{Code::S201});
}

TEST(Mutate, LeavesInputUntouched) {
    const Project p = generate(params_for(5));
    const std::string before = dsl::to_canonical_json(p);
    for (MutationKind k : kAllMutations) {
        try {
            const Project m = mutate(p, mutation_for(k), 5);
            EXPECT_NE(dsl::to_canonical_json(m), before) << to_string(k);
        } catch (const Error& e) {
            EXPECT_EQ(e.kind(), ErrorKind::NotApplicable);
        }
    }
    EXPECT_EQ(dsl::to_canonical_json(p), before);
}

TEST(Mutate, NotApplicableWithoutSite) {
    const Project ais = generate(GenParams{});  // one store only
    try {
        mutate(ais, mutation_for(MutationKind::StoreToStoreFlow), 1);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::NotApplicable);
    }
}

TEST(Mutate, ExpectedCodesAreCatalogued) {
    for (MutationKind k : kAllMutations) {
        const Mutation m = mutation_for(k);
        EXPECT_EQ(m.kind, k);
        EXPECT_FALSE(m.expected_codes.empty());
        for (Code c : m.expected_codes) EXPECT_EQ(severity_of(c), Severity::Error);
    }
}

class SingleFault : public ::testing::TestWithParam<MutationKind> {};

TEST_P(SingleFault, ExactCodes) {
    const PropertyResult r = single_fault_exactness(GetParam(), 100);
    EXPECT_EQ(r.cases, 100u);
    EXPECT_TRUE(r.passed()) << r.failures.front();
}

INSTANTIATE_TEST_SUITE_P(AllKinds, SingleFault, ::testing::ValuesIn(kAllMutations),
                         [](const auto& info) { return std::string(to_string(info.param)); });

TEST(OracleBalance, AgreesWithCheckBalancing) {
    const PropertyResult r = balancing_matches_oracle(1000);
    EXPECT_GE(r.cases, 1000u);
    EXPECT_TRUE(r.passed()) << r.failures.front();
}

TEST(OracleBalance, FixtureExamples) {
    const Project ais = load_fixture("ais_ok.dfd");
    EXPECT_TRUE(oracle_balance(ais.diagrams()[0], ais.diagrams()[1]).empty());
    const Project ls = load_fixture("ls_broken.dfd");
    const BalancingReport r = oracle_balance(ls.diagrams()[0], ls.diagrams()[1]);
    const SignatureSet expected{
        {normalize_name("check list"), Direction::OutOfFocus, EntityRef{normalize_name("Admin Staff")}}};
    EXPECT_EQ(r.missing_in_child, expected);
    EXPECT_TRUE(r.extra_in_child.empty());
    EXPECT_TRUE(r.missing_entities.empty());
    EXPECT_THROW(oracle_balance(ls.diagrams()[1], ls.diagrams()[0]), Error);
}
