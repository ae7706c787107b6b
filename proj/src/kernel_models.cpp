#include "berezin/kernel_models.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

namespace berezin {

KernelModel::KernelModel(ModelKind kind, std::vector<DomainPoint> points, Matrix kernels,
                         RealVector norms, std::optional<HardyParams> hardy)
    : kind_(kind),
      points_(std::move(points)),
      kernels_(std::move(kernels)),
      norms_(std::move(norms)),
      hardy_(hardy) {
    if (points_.empty()) fail(ErrorCode::empty_model, "model has no points");
    if (kernels_.rows() == 0) fail(ErrorCode::invalid_dimension, "model dimension must be >= 1");
    if (static_cast<std::size_t>(kernels_.cols()) != points_.size() ||
        static_cast<std::size_t>(norms_.size()) != points_.size()) {
        fail(ErrorCode::shape_mismatch, "kernel columns, norms and points disagree in count");
    }
    normalized_.resize(kernels_.rows(), kernels_.cols());
    for (Eigen::Index j = 0; j < kernels_.cols(); ++j) {
        if (!(norms_(j) > 0.0)) {
            fail(ErrorCode::zero_kernel, "kernel at point " + std::to_string(j) + " is zero");
        }
        normalized_.col(j) = kernels_.col(j) / norms_(j);
    }
}

const DomainPoint& KernelModel::point(std::size_t index) const {
    if (index >= points_.size()) {
        fail(ErrorCode::index_out_of_range, "point index " + std::to_string(index) +
                                                " out of range (size " +
                                                std::to_string(points_.size()) + ")");
    }
    return points_[index];
}

Complex KernelModel::disk_point(std::size_t index) const {
    const auto& p = point(index);
    if (const auto* z = std::get_if<Complex>(&p.payload)) return *z;
    fail(ErrorCode::invalid_parameter, "point " + std::to_string(index) + " is not a disk point");
}

KernelModel standard_model(std::size_t n) {
    if (n == 0) fail(ErrorCode::invalid_dimension, "standard model needs n >= 1");
    std::vector<DomainPoint> points(n);
    for (std::size_t i = 0; i < n; ++i) points[i] = DomainPoint{i, static_cast<std::int64_t>(i)};
    const auto size = static_cast<Eigen::Index>(n);
    return KernelModel(ModelKind::standard, std::move(points), Matrix::Identity(size, size),
                       RealVector::Ones(size));
}

Vector hardy_kernel(int truncation, Complex lambda) {
    Vector k(truncation + 1);
    const Complex conj_lambda = std::conj(lambda);
    Complex power = 1.0;
    for (int n = 0; n <= truncation; ++n) {
        k(n) = power;
        power *= conj_lambda;
    }
    return k;
}

Operator hardy_shift(int truncation) {
    if (truncation < 1) fail(ErrorCode::invalid_dimension, "hardy truncation N must be >= 1");
    Matrix m = Matrix::Zero(truncation + 1, truncation + 1);
    for (int n = 0; n < truncation; ++n) m(n + 1, n) = 1.0;
    return Operator(std::move(m));
}

double hardy_kernel_norm_squared(int truncation, Complex lambda) {
    const double r2 = std::norm(lambda);
    if (r2 == 0.0) return 1.0;
    // (1 - r^{2(N+1)}) / (1 - r^2), with the numerator via expm1 so that it
    // keeps full relative accuracy when r^2 is close to 1.
    const double numerator = -std::expm1(static_cast<double>(truncation + 1) * std::log(r2));
    return numerator / (1.0 - r2);
}

std::vector<double> default_hardy_radii() {
    return {0.0, 0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9, 0.95, 0.99};
}

KernelModel hardy_model(int truncation, const std::vector<double>& radii, int angles_per_ring) {
    if (truncation < 1) fail(ErrorCode::invalid_dimension, "hardy truncation N must be >= 1");
    if (angles_per_ring < 1) fail(ErrorCode::invalid_parameter, "angles_per_ring must be >= 1");
    std::vector<double> rings;
    for (double r : radii) {
        if (!(r >= 0.0) || r >= 1.0) {
            fail(ErrorCode::invalid_point, "radius " + std::to_string(r) + " is outside [0, 1)");
        }
        if (r > kMaxDiskRadius) {
            fail(ErrorCode::invalid_point, "radius " + std::to_string(r) + " exceeds the cap " +
                                               std::to_string(kMaxDiskRadius));
        }
        if (r > 0.0) rings.push_back(r);
    }
    std::sort(rings.begin(), rings.end());
    rings.erase(std::unique(rings.begin(), rings.end()), rings.end());

    std::vector<Complex> coords;
    coords.reserve(1 + rings.size() * static_cast<std::size_t>(angles_per_ring));
    coords.emplace_back(0.0, 0.0);
    for (double r : rings) {
        for (int j = 0; j < angles_per_ring; ++j) {
            const double theta = 2.0 * std::numbers::pi * j / angles_per_ring;
            coords.push_back(std::polar(r, theta));
        }
    }

    const auto count = static_cast<Eigen::Index>(coords.size());
    Matrix kernels(truncation + 1, count);
    RealVector norms(count);
    std::vector<DomainPoint> points(coords.size());
    for (Eigen::Index j = 0; j < count; ++j) {
        const Complex z = coords[static_cast<std::size_t>(j)];
        kernels.col(j) = hardy_kernel(truncation, z);
        norms(j) = std::sqrt(hardy_kernel_norm_squared(truncation, z));
        points[static_cast<std::size_t>(j)] = DomainPoint{static_cast<std::size_t>(j), z};
    }
    return KernelModel(ModelKind::hardy, std::move(points), std::move(kernels), std::move(norms),
                       HardyParams{truncation, rings, angles_per_ring});
}

KernelModel default_hardy_model() {
    return hardy_model(kDefaultHardyTruncation, default_hardy_radii(), kDefaultHardyAngles);
}

KernelModel model_from_onb(const Matrix& basis_evaluations) {
    if (basis_evaluations.size() == 0) {
        fail(ErrorCode::invalid_dimension, "basis evaluation matrix is empty");
    }
    const Eigen::Index count = basis_evaluations.cols();
    Matrix kernels = basis_evaluations.conjugate();
    RealVector norms(count);
    std::vector<DomainPoint> points(static_cast<std::size_t>(count));
    for (Eigen::Index j = 0; j < count; ++j) {
        norms(j) = kernels.col(j).norm();
        if (norms(j) == 0.0) {
            fail(ErrorCode::zero_kernel, "basis evaluations vanish at point " + std::to_string(j));
        }
        points[static_cast<std::size_t>(j)] =
            DomainPoint{static_cast<std::size_t>(j), static_cast<std::int64_t>(j)};
    }
    return KernelModel(ModelKind::onb, std::move(points), std::move(kernels), std::move(norms));
}

Vector normalized_kernel(const KernelModel& model, std::size_t index) {
    model.point(index);
    return model.normalized_kernels().col(static_cast<Eigen::Index>(index));
}

Matrix gram_matrix(const KernelModel& model) {
    // <k_j, k_i> = k_i^* k_j
    return model.kernels().adjoint() * model.kernels();
}

void require_matching_dim(const KernelModel& model, const Operator& a, const char* context) {
    if (a.size() != model.dim()) {
        fail(ErrorCode::shape_mismatch, std::string(context) + ": operator size " +
                                            std::to_string(a.size()) + " does not match model dim " +
                                            std::to_string(model.dim()));
    }
}

}  // namespace berezin
