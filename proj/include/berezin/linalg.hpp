#pragma once

// Dense matrix calculus on small complex matrices: absolute values, spectral
// functions of Hermitian matrices, spectral radius and operator norm.

#include <complex>
#include <functional>

#include <Eigen/Dense>

#include "berezin/error.hpp"

namespace berezin {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;

/// A dense complex square matrix acting on a model's coordinate space.
class Operator {
  public:
    Operator() = default;
    explicit Operator(Matrix entries);

    static Operator zero(Eigen::Index n);
    static Operator identity(Eigen::Index n);

    const Matrix& matrix() const noexcept { return entries_; }
    Eigen::Index size() const noexcept { return entries_.rows(); }
    Complex operator()(Eigen::Index row, Eigen::Index col) const { return entries_(row, col); }

    Operator adjoint() const { return Operator(entries_.adjoint()); }

  private:
    Matrix entries_;
};

Operator operator+(const Operator& a, const Operator& b);
Operator operator-(const Operator& a, const Operator& b);
Operator operator*(const Operator& a, const Operator& b);
Operator operator*(Complex c, const Operator& a);

/// Hermitian matrix. The checked constructor rejects inputs with
/// ||H - H*|| > 1e-10 (1 + ||H||) and stores the symmetrized part.
class HermitianMatrix {
  public:
    HermitianMatrix() = default;
    explicit HermitianMatrix(const Matrix& entries);

    /// Symmetrizes without the tolerance check; for results of spectral calculus.
    static HermitianMatrix symmetrized(const Matrix& entries);
    static HermitianMatrix identity(Eigen::Index n);

    const Matrix& matrix() const noexcept { return entries_; }
    Eigen::Index size() const noexcept { return entries_.rows(); }
    Operator as_operator() const { return Operator(entries_); }

  private:
    struct Trusted {};
    HermitianMatrix(Trusted, Matrix entries) : entries_(std::move(entries)) {}

    Matrix entries_;
};

HermitianMatrix operator+(const HermitianMatrix& a, const HermitianMatrix& b);
HermitianMatrix operator*(double c, const HermitianMatrix& a);

/// H = V diag(eigenvalues) V*, eigenvalues ascending.
struct SpectralDecomposition {
    RealVector eigenvalues;
    Matrix eigenvectors;

    HermitianMatrix reconstruct() const;
};

SpectralDecomposition decompose(const HermitianMatrix& h);

/// |A| = (A*A)^{1/2} and |A*| = (AA*)^{1/2}, both read off one SVD A = U S V*:
/// |A| = V S V*, |A*| = U S U*.
struct AbsoluteValues {
    SpectralDecomposition abs;
    SpectralDecomposition abs_adjoint;
};

AbsoluteValues absolute_values(const Operator& a);
HermitianMatrix absolute_value(const Operator& a);

using ScalarFn = std::function<double(double)>;

/// f(H) = V f(Lambda) V* for PSD H. Eigenvalues in [-1e-10 ||H||, 0) are
/// clamped to zero; anything more negative raises not_psd.
HermitianMatrix apply_spectral(const HermitianMatrix& h, const ScalarFn& f);
HermitianMatrix apply_spectral(const SpectralDecomposition& d, const ScalarFn& f);

/// Eigenvalues after the PSD clamp; throws not_psd like apply_spectral.
RealVector clamped_psd_eigenvalues(const SpectralDecomposition& d);

RealVector singular_values(const Matrix& a);
double spectral_radius(const Operator& b);
double operator_norm(const Matrix& a);
inline double operator_norm(const Operator& a) { return operator_norm(a.matrix()); }

/// || |A| B - B* |A| ||, the residual of the commutation condition.
double commutation_residual(const Operator& a, const Operator& b);
double default_commutation_tolerance(const Operator& a, const Operator& b);

void require_same_size(const Operator& a, const Operator& b, const char* context);

}  // namespace berezin
