#pragma once

// Reference computations written directly from the definitions, used as test
// oracles. They share nothing with the library beyond the Matrix type.

#include <algorithm>
#include <cmath>
#include <complex>
#include <random>
#include <vector>

#include <Eigen/Dense>

namespace oracle {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;

// Standard model: <A e_l, e_m> = A(m, l).
inline double ber_standard(const Matrix& a) {
    double best = 0.0;
    for (Eigen::Index i = 0; i < a.rows(); ++i) best = std::max(best, std::abs(a(i, i)));
    return best;
}

inline double tber_standard(const Matrix& a, double t) {
    double best = 0.0;
    for (Eigen::Index l = 0; l < a.rows(); ++l) {
        for (Eigen::Index m = 0; m < a.rows(); ++m) {
            best = std::max(best, t * std::abs(a(m, l)) + (1 - t) * std::abs(std::conj(a(l, m))));
        }
    }
    return best;
}

inline double ber_norm_standard(const Matrix& a) { return tber_standard(a, 1.0); }

// Columns are normalized kernels.
inline double tber_kernels(const Matrix& k, const Matrix& a, double t) {
    double best = 0.0;
    for (Eigen::Index l = 0; l < k.cols(); ++l) {
        for (Eigen::Index m = 0; m < k.cols(); ++m) {
            Complex f = 0.0;
            Complex b = 0.0;
            for (Eigen::Index i = 0; i < k.rows(); ++i) {
                for (Eigen::Index j = 0; j < k.rows(); ++j) {
                    f += std::conj(k(i, m)) * a(i, j) * k(j, l);
                    b += std::conj(k(i, m)) * std::conj(a(j, i)) * k(j, l);
                }
            }
            best = std::max(best, t * std::abs(f) + (1 - t) * std::abs(b));
        }
    }
    return best;
}

inline double ber_kernels(const Matrix& k, const Matrix& a) {
    double best = 0.0;
    for (Eigen::Index l = 0; l < k.cols(); ++l) {
        Complex s = 0.0;
        for (Eigen::Index i = 0; i < k.rows(); ++i) {
            for (Eigen::Index j = 0; j < k.rows(); ++j) s += std::conj(k(i, l)) * a(i, j) * k(j, l);
        }
        best = std::max(best, std::abs(s));
    }
    return best;
}

// Normalized truncated Hardy kernels at the given points, from the power series.
inline Matrix hardy_kernels(int truncation, const std::vector<Complex>& points) {
    Matrix k(truncation + 1, static_cast<Eigen::Index>(points.size()));
    for (std::size_t p = 0; p < points.size(); ++p) {
        double norm2 = 0.0;
        for (int n = 0; n <= truncation; ++n) {
            const Complex v = std::pow(std::conj(points[p]), n);
            k(n, static_cast<Eigen::Index>(p)) = v;
            norm2 += std::norm(v);
        }
        k.col(static_cast<Eigen::Index>(p)) /= std::sqrt(norm2);
    }
    return k;
}

inline Matrix random_matrix(std::mt19937_64& gen, Eigen::Index n) {
    std::normal_distribution<double> d;
    Matrix m(n, n);
    for (Eigen::Index i = 0; i < n; ++i) {
        for (Eigen::Index j = 0; j < n; ++j) m(i, j) = Complex(d(gen), d(gen));
    }
    return m;
}

// Square root of A*A from the Hermitian eigensolver.
inline Matrix abs_via_eigen(const Matrix& a) {
    Eigen::SelfAdjointEigenSolver<Matrix> es(a.adjoint() * a);
    Eigen::VectorXd ev = es.eigenvalues().cwiseMax(0.0).cwiseSqrt();
    return es.eigenvectors() * ev.asDiagonal() * es.eigenvectors().adjoint();
}

inline Matrix hermitian_power(const Matrix& h, double p) {
    Eigen::SelfAdjointEigenSolver<Matrix> es(h);
    Eigen::VectorXd ev = es.eigenvalues();
    for (Eigen::Index i = 0; i < ev.size(); ++i) ev(i) = std::pow(std::max(ev(i), 0.0), p);
    return es.eigenvectors() * ev.asDiagonal() * es.eigenvectors().adjoint();
}

}  // namespace oracle
