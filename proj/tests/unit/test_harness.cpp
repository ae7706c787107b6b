#include <gtest/gtest.h>

#include <cmath>
#include <set>

#include "berezin/verification_harness.hpp"

using namespace berezin;

TEST(Rng, MixMatchesSplitMix64ReferenceOutput) {
    // First outputs of the reference SplitMix64 generator seeded with 0.
    EXPECT_EQ(mix64(0x9E3779B97F4A7C15ULL), 0xE220A8397B1DCDAFULL);
    EXPECT_EQ(mix64(2 * 0x9E3779B97F4A7C15ULL), 0x6E789E6AA1B965F4ULL);
    EXPECT_EQ(mix64(3 * 0x9E3779B97F4A7C15ULL), 0x06C45D188009454FULL);
}

TEST(Rng, CounterModeIsReproducible) {
    CounterRng a(7, 3), b(7, 3), c(7, 4), d(8, 3);
    const std::uint64_t key = mix64(7 ^ mix64(3 + 0x9E3779B97F4A7C15ULL));
    for (std::uint64_t k = 1; k <= 50; ++k) {
        const auto x = a.next();
        EXPECT_EQ(x, mix64(key + k * 0x9E3779B97F4A7C15ULL));
        EXPECT_EQ(x, b.next());
        EXPECT_NE(x, c.next());
        EXPECT_NE(x, d.next());
    }
    EXPECT_EQ(a.counter(), 50u);
    EXPECT_EQ(case_seed(5, 0), mix64(mix64(5) + 0x9E3779B97F4A7C15ULL));
}

TEST(Rng, UniformAndNormalMoments) {
    CounterRng rng(11);
    double su = 0, sn = 0, sn2 = 0;
    const int n = 200000;
    for (int i = 0; i < n; ++i) {
        const double u = rng.uniform();
        ASSERT_GE(u, 0.0);
        ASSERT_LT(u, 1.0);
        su += u;
        const double z = rng.normal();
        sn += z;
        sn2 += z * z;
    }
    EXPECT_NEAR(su / n, 0.5, 5e-3);
    EXPECT_NEAR(sn / n, 0.0, 1e-2);
    EXPECT_NEAR(sn2 / n, 1.0, 2e-2);
}

TEST(Generators, ClassesHaveTheirStructure) {
    CounterRng rng(12);
    for (Eigen::Index n : {1, 2, 4, 6}) {
        const Matrix h = random_operator(n, OperatorClass::hermitian, rng).matrix();
        EXPECT_LT((h - h.adjoint()).norm(), 1e-12);
        const Matrix p = random_operator(n, OperatorClass::psd, rng).matrix();
        EXPECT_GE(Eigen::SelfAdjointEigenSolver<Matrix>(p).eigenvalues().minCoeff(), -1e-12);
        const Matrix u = random_operator(n, OperatorClass::unitary, rng).matrix();
        EXPECT_LT((u.adjoint() * u - Matrix::Identity(n, n)).norm(), 1e-12);
        const Matrix z = random_operator(n, OperatorClass::nilpotent, rng).matrix();
        Matrix power = Matrix::Identity(n, n);
        for (Eigen::Index k = 0; k < n; ++k) power = power * z;
        EXPECT_LT(power.norm(), 1e-9 * (1 + std::pow(z.norm(), static_cast<double>(n))));
        const auto pair = random_sample(n, OperatorClass::commuting_pair, rng);
        EXPECT_LE(commutation_residual(pair.a, pair.b), default_commutation_tolerance(pair.a, pair.b));
        const auto psd = random_sample(n, OperatorClass::psd_pair, rng);
        EXPECT_GE(Eigen::SelfAdjointEigenSolver<Matrix>(psd.b.matrix()).eigenvalues().minCoeff(), -1e-12);
    }
}

TEST(Generators, SpecialFamilies) {
    CounterRng rng(13);
    for (int i = 0; i < 20; ++i) {
        const Matrix t = random_upper_triangular_nonnormal(4, rng).matrix();
        EXPECT_TRUE(t.triangularView<Eigen::StrictlyLower>().toDenseMatrix().isZero());
        EXPECT_GE((t.adjoint() * t - t * t.adjoint()).norm(), 1e-3);
        const Matrix g = random_invertible_nonunitary(3, rng).matrix();
        const RealVector sv = singular_values(g);
        EXPECT_GE(sv.maxCoeff() / sv.minCoeff(), 1.1);
    }
    EXPECT_THROW(random_upper_triangular_nonnormal(1, rng), Error);
}

TEST(Generators, ClassNamesRoundTrip) {
    for (auto c : all_operator_classes()) EXPECT_EQ(parse_operator_class(to_string(c)), c);
    EXPECT_EQ(to_string(OperatorClass::psd_pair), "psd-pair");
    EXPECT_THROW(parse_operator_class("diagonal"), Error);
}

TEST(Campaign, LayoutAndDeterminism) {
    CampaignConfig config;
    config.cases_per_class = 3;
    const auto cases = build_campaign(config);
    EXPECT_EQ(cases.size(), 21u);
    std::set<std::uint64_t> seeds;
    for (std::size_t i = 0; i < cases.size(); ++i) {
        EXPECT_EQ(cases[i].index, i);
        EXPECT_EQ(cases[i].seed, case_seed(config.seed, i));
        seeds.insert(cases[i].seed);
    }
    EXPECT_EQ(seeds.size(), cases.size());
    config.cases_per_class = 0;
    EXPECT_TRUE(build_campaign(config).empty());
}

TEST(Campaign, SmallRunIsCleanAndThreadIndependent) {
    CampaignConfig config;
    config.cases_per_class = 2;
    config.threads = 1;
    const SuiteReport serial = run_campaign(config);
    config.threads = 3;
    const SuiteReport parallel = run_campaign(config);
    EXPECT_TRUE(serial.ok());
    EXPECT_EQ(serial.cases, 14u);
    EXPECT_EQ(serial.evaluations, parallel.evaluations);
    ASSERT_EQ(serial.tightness.size(), parallel.tightness.size());
    for (const auto& [key, t] : serial.tightness) {
        const auto& p = parallel.tightness.at(key);
        EXPECT_EQ(t.count, p.count) << key;
        EXPECT_EQ(t.min_slack, p.min_slack) << key;
        EXPECT_EQ(t.improve_count, p.improve_count) << key;
    }
    EXPECT_TRUE(serial.tightness.count("block_diag"));
}

TEST(Campaign, MutationIsDetected) {
    CampaignConfig config;
    config.cases_per_class = 1;
    config.bound_ids = {"product", "basaran"};
    config.mutate = "basaran";
    const SuiteReport report = run_campaign(config);
    EXPECT_FALSE(report.ok());
    for (const auto& f : report.failures) EXPECT_EQ(f.bound_id, "basaran");
}

TEST(Campaign, EmptySuite) {
    const SuiteReport r = run_suite({});
    EXPECT_EQ(r.cases, 0u);
    EXPECT_TRUE(r.ok());
}

TEST(Campaign, RecordTracksSlackAndImprovement) {
    SuiteReport s;
    BoundContext ctx;
    record(s, make_report(ctx, "mixed", "", BoundRole::proved, 1.0, 2.0), 0, 1);
    record(s, make_report(ctx, "mixed", "", BoundRole::proved, 1.0, 1.0), 1, 2);
    record(s, make_report(ctx, "mixed", "", BoundRole::proved, 3.0, 1.0), 2, 3);
    finalize(s);
    ASSERT_EQ(s.failures.size(), 1u);
    EXPECT_EQ(s.failures[0].case_index, 2u);
    EXPECT_EQ(s.failures[0].seed, 3u);
    const auto& t = s.tightness.at("mixed");
    EXPECT_EQ(t.count, 3u);
    EXPECT_DOUBLE_EQ(t.min_slack, -2.0);
    EXPECT_DOUBLE_EQ(t.mean_slack, -1.0 / 3.0);
    EXPECT_EQ(t.improve_count, 1u);
}

TEST(Lemmas, SmallSuitesHold) {
    CounterRng rng(14);
    EXPECT_TRUE(lemma_buzano(rng, 4, 2000).ok());
    EXPECT_TRUE(lemma_gen_cauchy(rng, 4, 2000, {0.0, 0.5, 1.0, 10.0}).ok());
    EXPECT_TRUE(lemma_mixed_schwarz(rng, 3, 500, {0.25, 0.5, 0.75}).ok());
}
