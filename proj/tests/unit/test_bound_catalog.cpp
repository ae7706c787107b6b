#include <gtest/gtest.h>

#include <cmath>
#include <set>

#include "berezin/bound_catalog.hpp"
#include "berezin/verification_harness.hpp"
#include "oracle.hpp"

using namespace berezin;

namespace {

void expect_all_hold(const std::vector<BoundReport>& reports) {
    for (const auto& r : reports) {
        EXPECT_FALSE(r.failed()) << r.bound_id << '/' << r.variant << " lhs " << r.lhs << " rhs " << r.rhs;
    }
}

Matrix pw(const Matrix& h, double p) { return oracle::hermitian_power(h, p); }

}  // namespace

TEST(Catalog, IdsAreUnique) {
    const auto& ids = bound_ids();
    EXPECT_EQ(ids.size(), 23u);
    EXPECT_EQ(std::set<std::string>(ids.begin(), ids.end()).size(), ids.size());
    EXPECT_TRUE(is_bound_id("th8_first"));
    EXPECT_FALSE(is_bound_id("th9"));
}

TEST(Catalog, ToleranceAndMutation) {
    BoundContext ctx;
    EXPECT_DOUBLE_EQ(tol_ineq(ctx, 1.0, 2.0), 4e-9);
    const BoundReport ok = make_report(ctx, "mixed", "", BoundRole::proved, 1.0, 1.0);
    EXPECT_TRUE(ok.holds);
    ctx.mutate = "mixed";
    const BoundReport mutated = make_report(ctx, "mixed", "", BoundRole::proved, 1.0, 1.0);
    EXPECT_TRUE(mutated.failed());
    EXPECT_DOUBLE_EQ(mutated.rhs, 0.9);
    const BoundReport other = make_report(ctx, "product", "", BoundRole::proved, 1.0, 1.0);
    EXPECT_FALSE(other.failed());
    const BoundReport logged = make_report(ctx, "mixed", "", BoundRole::logged, 2.0, 1.0);
    EXPECT_FALSE(logged.failed());
}

TEST(Catalog, OrliczProductAtIdentityIsOne) {
    const KernelModel m = standard_model(2);
    const Operator id = Operator::identity(2);
    const auto r = bound_orlicz_product(m, id, id, OrliczFn::power(1), WeightFn(1.0));
    EXPECT_NEAR(r.lhs, 1.0, 1e-15);
    EXPECT_NEAR(r.rhs, 1.0, 1e-15);
}

TEST(Catalog, BasaranAtIdentityIsEquality) {
    const Operator id = Operator::identity(3);
    for (double r : {1.0, 2.0, 3.5}) {
        const auto rep = bound_basaran(standard_model(3), id, id, r);
        EXPECT_NEAR(rep.lhs, rep.rhs, 1e-14);
    }
}

TEST(Catalog, TwoVariantOrliczBoundAtIdentityIsEquality) {
    const Operator id = Operator::identity(2);
    for (bool first : {true, false}) {
        for (auto v : {Th8Variant::as_stated, Th8Variant::as_proved}) {
            const auto r = bound_th8(standard_model(2), id, OrliczFn::power(2), PowerPair(0.3), 0.5, first, v);
            EXPECT_NEAR(r.lhs, r.rhs, 1e-14);
        }
    }
}

TEST(Catalog, TwoVariantOrliczBoundCoincidesAtAlphaOne) {
    CounterRng rng(2);
    const Operator a = random_operator(3, OperatorClass::general, rng);
    const auto reps = bound_th8(standard_model(3), a, OrliczFn::power(1.5), PowerPair(0.4), {1.0});
    ASSERT_EQ(reps.size(), 4u);
    EXPECT_DOUBLE_EQ(reps[0].rhs, reps[1].rhs);
    EXPECT_DOUBLE_EQ(reps[2].rhs, reps[3].rhs);
    EXPECT_EQ(reps[0].role, BoundRole::logged);
    EXPECT_EQ(reps[1].role, BoundRole::proved);
}

TEST(Catalog, ZeroPartnerGivesZeroLeftSide) {
    CounterRng rng(3);
    const KernelModel m = standard_model(3);
    const Operator a = random_operator(3, OperatorClass::general, rng);
    const Operator z = Operator::zero(3);
    EXPECT_EQ(bound_basaran(m, a, z, 2.0).lhs, 0.0);
    EXPECT_EQ(bound_orlicz_product(m, a, z, OrliczFn::power(2), WeightFn(0.5)).lhs, 0.0);
    EXPECT_EQ(bound_th7_cor1(m, a, z, 2.0, 0.5).front().lhs, 0.0);
    for (const auto& r : bound_product(m, a, z, 0.4)) EXPECT_EQ(r.lhs, 0.0);
}

TEST(Catalog, OrliczMainMatchesIndependentEvaluation) {
    std::mt19937_64 gen(10);
    const KernelModel m = standard_model(3);
    for (int k = 0; k < 5; ++k) {
        const Matrix a = oracle::random_matrix(gen, 3);
        const Matrix abs = oracle::abs_via_eigen(a);
        const Matrix abs_adj = oracle::abs_via_eigen(a.adjoint());
        const double r = 1.5, s = 0.3, alpha = 2.0;
        const double b = oracle::ber_standard(a);
        const double term1 = 0.5 * oracle::ber_standard(pw(abs, 4 * s * r) + pw(abs_adj, 4 * (1 - s) * r));
        const double term2 = std::pow(oracle::ber_standard(pw(abs_adj, 2 * (1 - s)) * pw(abs, 2 * s)), r);
        const double term3 = std::pow(b, r) * oracle::ber_standard(pw(abs, 2 * s * r) + pw(abs_adj, 2 * (1 - s) * r));
        const double f = alpha / (1 + alpha);
        const double rhs = 0.5 * f * (term1 + term2) + 0.5 * (1 - f) * term3;
        const auto rep = bound_orlicz_main(m, Operator(a), OrliczFn::power(r), PowerPair(s), WeightFn(alpha));
        EXPECT_NEAR(rep.lhs, std::pow(b, 2 * r), 1e-12);
        EXPECT_NEAR(rep.rhs, rhs, 1e-10 * (1 + rhs));
        EXPECT_LE(rep.lhs, rep.rhs + 1e-12);
    }
}

TEST(Catalog, OrliczProductMatchesIndependentEvaluation) {
    std::mt19937_64 gen(11);
    const KernelModel m = standard_model(3);
    for (int k = 0; k < 5; ++k) {
        const Matrix a = oracle::random_matrix(gen, 3);
        const Matrix b = oracle::random_matrix(gen, 3);
        const Matrix abs_a = oracle::abs_via_eigen(a);
        const Matrix abs_b = oracle::abs_via_eigen(b);
        const double r = 2.0, alpha = 0.7;
        const double ab = oracle::ber_standard(a.adjoint() * b);
        const double first = std::pow(ab, r) * oracle::ber_standard(pw(abs_a, 2 * r) + pw(abs_b, 2 * r));
        const double second = std::pow(oracle::ber_standard(pw(abs_b, 2) * pw(abs_a, 2)), r) +
                              0.5 * oracle::ber_standard(pw(abs_a, 4 * r) + pw(abs_b, 4 * r));
        const double rhs = first / (2 * (1 + alpha)) + alpha * second / (2 * (1 + alpha));
        const auto rep = bound_orlicz_product(m, Operator(a), Operator(b), OrliczFn::power(r), WeightFn(alpha));
        EXPECT_NEAR(rep.lhs, std::pow(ab, 2 * r), 1e-12);
        EXPECT_NEAR(rep.rhs, rhs, 1e-10 * (1 + rhs));
    }
}

TEST(Catalog, SandwichMatchesEntrywiseOracle) {
    std::mt19937_64 gen(12);
    const Matrix a = oracle::random_matrix(gen, 4);
    const auto reps = bound_sandwich(standard_model(4), Operator(a), 0.2);
    ASSERT_EQ(reps.size(), 4u);
    EXPECT_NEAR(reps[2].lhs, oracle::tber_standard(a, 0.2), 1e-13);
    EXPECT_NEAR(reps[2].rhs, oracle::ber_norm_standard(a), 1e-13);
    EXPECT_NEAR(reps[3].lhs, oracle::ber_standard(a), 1e-13);
    expect_all_hold(reps);
}

TEST(Catalog, BlockDiagonalIsEquality) {
    CounterRng rng(5);
    const auto ds = direct_sum_model(standard_model(2), 2, 5, 8);
    const Operator a = random_operator(2, OperatorClass::general, rng);
    const Operator b = random_operator(2, OperatorClass::general, rng);
    const auto r = bound_block_diag(ds, a, b, 0.3);
    EXPECT_NEAR(r.lhs, r.rhs, 1e-12);
}

TEST(Catalog, SingleOperatorBoundsHoldOnRandomOperators) {
    CounterRng rng(6);
    const KernelModel m = hardy_model(6, {0.0, 0.5, 0.9}, 8);
    const BoundContext ctx;
    for (auto c : {OperatorClass::general, OperatorClass::hermitian, OperatorClass::nilpotent}) {
        const Operator a = random_operator(m.dim(), c, rng);
        expect_all_hold(bound_sandwich(m, a, TGrid{0.0, 0.3, 1.0}, ctx));
        expect_all_hold(bound_mixed(m, a, TGrid{0.0, 0.5, 1.0}, ctx));
        for (double r : {1.0, 2.0, 3.0}) {
            expect_all_hold(bound_taghavi_chain(m, a, r, ctx));
            expect_all_hold(bound_th6_cor1(m, a, r, ctx));
        }
        expect_all_hold(bound_th6_cor2(m, a, ctx));
        expect_all_hold({bound_axioms_th3(m, a, ctx)});
        expect_all_hold(bound_orlicz_main(m, a, OrliczFn::power(2), PowerPair(0.5), {WeightFn(0), WeightFn(2)}, ctx));
        expect_all_hold(bound_th8(m, a, OrliczFn::power(1.5), PowerPair(0.25), {0.0, 0.5, 1.0}, ctx));
    }
}

TEST(Catalog, PairBoundsHoldOnRandomOperators) {
    CounterRng rng(7);
    const KernelModel m = standard_model(3);
    const BoundContext ctx;
    for (int k = 0; k < 10; ++k) {
        const Operator a = random_operator(3, OperatorClass::general, rng);
        const Operator b = random_operator(3, OperatorClass::general, rng);
        expect_all_hold(bound_product(m, a, commuting_partner(a, rng), TGrid{0.0, 0.5, 1.0}, ctx));
        EXPECT_THROW(bound_product(m, a, b, 0.5, ctx), Error);
        expect_all_hold(bound_orlicz_product(m, a, b, OrliczFn::power(1.5), {WeightFn(0), WeightFn(5)}, ctx));
        expect_all_hold(bound_th7_cor1(m, a, b, 2.0, std::vector<double>{0.0, 1.0, 5.0}, ctx));
        expect_all_hold(bound_th7_cor2(m, a, b, ctx));
        expect_all_hold({bound_axioms_th4(m, a, b, ctx), bound_basaran(m, a, b, 1.5, ctx)});
        expect_all_hold(bound_dcds(m, a, b, 2.0, std::vector<double>{0.0, 1.0}, ctx));
        expect_all_hold(bound_mjm(m, a, b, 2.0, std::vector<double>{0.0, 0.5, 1.0}, ctx));
        const Operator pa(absolute_value(a).matrix()), pb(absolute_value(b).matrix());
        expect_all_hold(bound_convexity_axioms(m, pa, pb, TGrid{0.3}, {1.0, 2.0}, ctx));
    }
}

TEST(Catalog, HingeNeedsOverride) {
    const KernelModel m = standard_model(2);
    const Operator a = Operator::identity(2);
    EXPECT_THROW(bound_orlicz_main(m, a, hinge_orlicz(), PowerPair(0.5), WeightFn(1)), Error);
    BoundContext ctx;
    ctx.allow_precondition_override = true;
    const auto r = bound_orlicz_main(m, a, hinge_orlicz(), PowerPair(0.5), WeightFn(1), ctx);
    EXPECT_EQ(r.role, BoundRole::logged);
    EXPECT_NE(std::find(r.flags.begin(), r.flags.end(), "precondition-violated"), r.flags.end());
}

TEST(Catalog, RejectsBadParameters) {
    const KernelModel m = standard_model(2);
    const Operator a = Operator::identity(2);
    EXPECT_THROW(bound_dcds(m, a, a, 1.5, 0.0), Error);
    EXPECT_THROW(bound_basaran(m, a, a, 0.5), Error);
    EXPECT_THROW(bound_sandwich(m, a, 1.2), Error);
    EXPECT_THROW(bound_product(m, a, Operator::identity(3), 0.5), Error);
}
