#include <gtest/gtest.h>

#include "berezin/linalg.hpp"
#include "oracle.hpp"

using namespace berezin;

namespace {

double max_abs(const Matrix& m) { return m.cwiseAbs().maxCoeff(); }

}  // namespace

TEST(Operator, ArithmeticAndAdjoint) {
    Matrix m(2, 2);
    m << Complex(1, 2), Complex(3, 0), Complex(0, -1), Complex(4, 4);
    const Operator a(m);
    EXPECT_EQ(a.adjoint()(0, 1), std::conj(m(1, 0)));
    EXPECT_LT(max_abs((a + a - Complex(2.0) * a).matrix()), 1e-15);
    EXPECT_LT(max_abs((Operator::identity(2) * a).matrix() - m), 1e-15);
    EXPECT_THROW(require_same_size(a, Operator::zero(3), "test"), Error);
}

TEST(HermitianMatrix, CheckedConstructorRejectsNonHermitian) {
    Matrix m(2, 2);
    m << 1, 2, 0, 1;
    EXPECT_THROW(HermitianMatrix{m}, Error);
    m(1, 0) = 2.0 + 1e-13;
    EXPECT_NO_THROW(HermitianMatrix{m});
}

TEST(AbsoluteValue, MatchesEigenSquareRoot) {
    std::mt19937_64 gen(7);
    for (int n : {1, 2, 3, 5}) {
        const Matrix m = oracle::random_matrix(gen, n);
        const auto abs = absolute_values(Operator(m));
        const Matrix expected = oracle::abs_via_eigen(m);
        EXPECT_LT(max_abs(abs.abs.reconstruct().matrix() - expected), 1e-10) << n;
        EXPECT_LT(max_abs(abs.abs_adjoint.reconstruct().matrix() - oracle::abs_via_eigen(m.adjoint())), 1e-10);
        const Matrix sq = absolute_value(Operator(m)).matrix();
        EXPECT_LT(max_abs(sq * sq - m.adjoint() * m), 1e-9 * (1 + max_abs(m.adjoint() * m)));
    }
}

TEST(ApplySpectral, PowersAgreeWithOracle) {
    std::mt19937_64 gen(11);
    const Matrix g = oracle::random_matrix(gen, 4);
    const Matrix p = g.adjoint() * g;
    const HermitianMatrix h(p);
    for (double e : {0.5, 1.0, 2.0, 3.0}) {
        const Matrix got = apply_spectral(h, [e](double x) { return std::pow(x, e); }).matrix();
        EXPECT_LT(max_abs(got - oracle::hermitian_power(p, e)), 1e-9 * (1 + max_abs(got)));
    }
}

TEST(ApplySpectral, RejectsIndefiniteAndClampsRoundoff) {
    Matrix m = Matrix::Zero(2, 2);
    m(0, 0) = 1.0;
    m(1, 1) = -0.5;
    EXPECT_THROW(apply_spectral(HermitianMatrix(m), [](double x) { return x; }), Error);
    m(1, 1) = -1e-12;
    const auto ev = clamped_psd_eigenvalues(decompose(HermitianMatrix(m)));
    EXPECT_EQ(ev.minCoeff(), 0.0);
}

TEST(SpectralRadius, KnownValues) {
    Matrix nil = Matrix::Zero(3, 3);
    nil(0, 1) = 5.0;
    nil(1, 2) = 2.0;
    EXPECT_LT(spectral_radius(Operator(nil)), 1e-6);
    Matrix rot(2, 2);
    rot << 0, -2, 2, 0;
    EXPECT_NEAR(spectral_radius(Operator(rot)), 2.0, 1e-12);
    EXPECT_NEAR(operator_norm(nil), 5.0, 1e-12);
}

TEST(SingularValues, DescendingAndMatchGram) {
    std::mt19937_64 gen(3);
    const Matrix m = oracle::random_matrix(gen, 4);
    const RealVector sv = singular_values(m);
    Eigen::SelfAdjointEigenSolver<Matrix> es(m.adjoint() * m);
    for (Eigen::Index i = 0; i < 4; ++i) {
        EXPECT_NEAR(sv(i) * sv(i), es.eigenvalues()(3 - i), 1e-9 * (1 + sv(0) * sv(0)));
        if (i > 0) { EXPECT_LE(sv(i), sv(i - 1)); }
    }
}

TEST(Commutation, PolynomialOfAbsCommutes) {
    std::mt19937_64 gen(5);
    const Operator a(oracle::random_matrix(gen, 3));
    const Matrix abs = oracle::abs_via_eigen(a.matrix());
    const Operator b(abs * abs + Complex(2.0) * abs);
    EXPECT_LT(commutation_residual(a, b), default_commutation_tolerance(a, b));
    const Operator c(oracle::random_matrix(gen, 3));
    EXPECT_GT(commutation_residual(a, c), default_commutation_tolerance(a, c));
}
