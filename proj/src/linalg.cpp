#include "berezin/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace berezin {

namespace {

constexpr double kHermitianTolerance = 1e-10;
constexpr double kPsdClamp = 1e-10;

Eigen::JacobiSVD<Matrix> full_svd(const Matrix& a) {
    Eigen::JacobiSVD<Matrix> svd(a, Eigen::ComputeFullU | Eigen::ComputeFullV);
    return svd;
}

// Eigen returns singular values in decreasing order; reverse into ascending
// eigen-order for a decomposition V diag(s) V*.
SpectralDecomposition ascending(const RealVector& values, const Matrix& vectors) {
    const Eigen::Index n = values.size();
    SpectralDecomposition d;
    d.eigenvalues.resize(n);
    d.eigenvectors.resize(vectors.rows(), n);
    for (Eigen::Index i = 0; i < n; ++i) {
        d.eigenvalues(i) = values(n - 1 - i);
        d.eigenvectors.col(i) = vectors.col(n - 1 - i);
    }
    return d;
}

}  // namespace

void require_same_size(const Operator& a, const Operator& b, const char* context) {
    if (a.size() != b.size()) {
        fail(ErrorCode::shape_mismatch, std::string(context) + ": operator sizes " +
                                            std::to_string(a.size()) + " and " +
                                            std::to_string(b.size()) + " differ");
    }
}

Operator::Operator(Matrix entries) : entries_(std::move(entries)) {
    if (entries_.rows() != entries_.cols()) {
        fail(ErrorCode::shape_mismatch, "operator must be square, got " +
                                            std::to_string(entries_.rows()) + "x" +
                                            std::to_string(entries_.cols()));
    }
}

Operator Operator::zero(Eigen::Index n) { return Operator(Matrix::Zero(n, n)); }
Operator Operator::identity(Eigen::Index n) { return Operator(Matrix::Identity(n, n)); }

Operator operator+(const Operator& a, const Operator& b) {
    require_same_size(a, b, "operator+");
    return Operator(a.matrix() + b.matrix());
}

Operator operator-(const Operator& a, const Operator& b) {
    require_same_size(a, b, "operator-");
    return Operator(a.matrix() - b.matrix());
}

Operator operator*(const Operator& a, const Operator& b) {
    require_same_size(a, b, "operator*");
    return Operator(a.matrix() * b.matrix());
}

Operator operator*(Complex c, const Operator& a) { return Operator(c * a.matrix()); }

HermitianMatrix::HermitianMatrix(const Matrix& entries) {
    if (entries.rows() != entries.cols()) {
        fail(ErrorCode::shape_mismatch, "hermitian matrix must be square");
    }
    const double skew = operator_norm(entries - entries.adjoint());
    const double scale = operator_norm(entries);
    if (skew > kHermitianTolerance * (1.0 + scale)) {
        fail(ErrorCode::invalid_parameter,
             "matrix is not hermitian (||H - H*|| = " + std::to_string(skew) + ")");
    }
    entries_ = 0.5 * (entries + entries.adjoint());
}

HermitianMatrix HermitianMatrix::symmetrized(const Matrix& entries) {
    if (entries.rows() != entries.cols()) {
        fail(ErrorCode::shape_mismatch, "hermitian matrix must be square");
    }
    return HermitianMatrix(Trusted{}, 0.5 * (entries + entries.adjoint()));
}

HermitianMatrix HermitianMatrix::identity(Eigen::Index n) {
    return HermitianMatrix(Trusted{}, Matrix::Identity(n, n));
}

HermitianMatrix operator+(const HermitianMatrix& a, const HermitianMatrix& b) {
    if (a.size() != b.size()) fail(ErrorCode::shape_mismatch, "hermitian sum size mismatch");
    return HermitianMatrix::symmetrized(a.matrix() + b.matrix());
}

HermitianMatrix operator*(double c, const HermitianMatrix& a) {
    return HermitianMatrix::symmetrized(c * a.matrix());
}

HermitianMatrix SpectralDecomposition::reconstruct() const {
    return HermitianMatrix::symmetrized(eigenvectors * eigenvalues.cast<Complex>().asDiagonal() *
                                        eigenvectors.adjoint());
}

SpectralDecomposition decompose(const HermitianMatrix& h) {
    Eigen::SelfAdjointEigenSolver<Matrix> solver(h.matrix());
    if (solver.info() != Eigen::Success) {
        fail(ErrorCode::numeric, "hermitian eigensolver did not converge");
    }
    return SpectralDecomposition{solver.eigenvalues(), solver.eigenvectors()};
}

AbsoluteValues absolute_values(const Operator& a) {
    const auto svd = full_svd(a.matrix());
    return AbsoluteValues{ascending(svd.singularValues(), svd.matrixV()),
                          ascending(svd.singularValues(), svd.matrixU())};
}

HermitianMatrix absolute_value(const Operator& a) { return absolute_values(a).abs.reconstruct(); }

RealVector clamped_psd_eigenvalues(const SpectralDecomposition& d) {
    RealVector values = d.eigenvalues;
    if (values.size() == 0) return values;
    const double scale = values.cwiseAbs().maxCoeff();
    for (Eigen::Index i = 0; i < values.size(); ++i) {
        if (values(i) < 0.0) {
            if (values(i) < -kPsdClamp * scale) {
                fail(ErrorCode::not_psd,
                     "eigenvalue " + std::to_string(values(i)) + " is materially negative");
            }
            values(i) = 0.0;
        }
    }
    return values;
}

HermitianMatrix apply_spectral(const SpectralDecomposition& d, const ScalarFn& f) {
    const RealVector values = clamped_psd_eigenvalues(d);
    Eigen::VectorXcd mapped(values.size());
    for (Eigen::Index i = 0; i < values.size(); ++i) mapped(i) = f(values(i));
    return HermitianMatrix::symmetrized(d.eigenvectors * mapped.asDiagonal() *
                                        d.eigenvectors.adjoint());
}

HermitianMatrix apply_spectral(const HermitianMatrix& h, const ScalarFn& f) {
    return apply_spectral(decompose(h), f);
}

RealVector singular_values(const Matrix& a) {
    if (a.size() == 0) return RealVector();
    Eigen::JacobiSVD<Matrix> svd(a);
    return svd.singularValues();
}

double operator_norm(const Matrix& a) {
    if (a.size() == 0) return 0.0;
    return singular_values(a)(0);
}

double spectral_radius(const Operator& b) {
    if (b.size() == 0) return 0.0;
    Eigen::ComplexEigenSolver<Matrix> solver(b.matrix(), /*computeEigenvectors=*/false);
    if (solver.info() != Eigen::Success) {
        fail(ErrorCode::numeric, "nonsymmetric eigensolver did not converge");
    }
    return solver.eigenvalues().cwiseAbs().maxCoeff();
}

double commutation_residual(const Operator& a, const Operator& b) {
    require_same_size(a, b, "commutation_residual");
    const Matrix abs_a = absolute_value(a).matrix();
    return operator_norm(abs_a * b.matrix() - b.matrix().adjoint() * abs_a);
}

double default_commutation_tolerance(const Operator& a, const Operator& b) {
    return 1e-8 * (1.0 + operator_norm(a)) * (1.0 + operator_norm(b));
}

}  // namespace berezin
