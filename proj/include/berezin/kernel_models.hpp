#pragma once

// Finite reproducing-kernel models: a sampled point set, the kernel vector
// k_lambda of each point in the ambient coordinate space, and its norm.
//
// Every supremum computed on a model is a maximum over its sampled points and
// therefore a lower estimate of the supremum over the full domain.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <variant>
#include <vector>

#include "berezin/linalg.hpp"

namespace berezin {

/// Largest admissible disk radius. ||k_lambda|| grows like (1 - |lambda|^2)^{-1/2}.
inline constexpr double kMaxDiskRadius = 0.999;

/// Label of a direct-sum kernel (c_1 e^{i psi_1} k_{lambda_1}, ..., c_n e^{i psi_n} k_{lambda_n}).
/// Components with zero weight carry base index 0 and phase 0.
struct CompositeLabel {
    std::vector<std::size_t> base_points;
    std::vector<double> weights;
    std::vector<double> phases;
};

struct DomainPoint {
    std::size_t id = 0;
    std::variant<std::int64_t, Complex, CompositeLabel> payload;
};

enum class ModelKind { standard, hardy, onb, direct_sum };

struct HardyParams {
    int truncation = 0;
    std::vector<double> radii;  // distinct positive ring radii, ascending
    int angles_per_ring = 1;
};

class KernelModel {
  public:
    KernelModel(ModelKind kind, std::vector<DomainPoint> points, Matrix kernels,
                RealVector norms, std::optional<HardyParams> hardy = std::nullopt);

    ModelKind kind() const noexcept { return kind_; }
    Eigen::Index dim() const noexcept { return kernels_.rows(); }
    std::size_t size() const noexcept { return points_.size(); }
    const std::vector<DomainPoint>& points() const noexcept { return points_; }
    const DomainPoint& point(std::size_t index) const;

    /// Unnormalized kernels as columns (dim x size).
    const Matrix& kernels() const noexcept { return kernels_; }
    /// Normalized kernels as columns (dim x size).
    const Matrix& normalized_kernels() const noexcept { return normalized_; }
    const RealVector& norms() const noexcept { return norms_; }
    const std::optional<HardyParams>& hardy() const noexcept { return hardy_; }

    /// Disk coordinate of a point of a hardy model.
    Complex disk_point(std::size_t index) const;

  private:
    ModelKind kind_;
    std::vector<DomainPoint> points_;
    Matrix kernels_;
    Matrix normalized_;
    RealVector norms_;
    std::optional<HardyParams> hardy_;
};

/// C^n over {0, ..., n-1}; kernels are the standard basis.
KernelModel standard_model(std::size_t n);

/// Hardy space truncated to degree N. Points are the origin plus every
/// (radius, angle) combination with radius > 0; angles are 2 pi j / angles_per_ring.
KernelModel hardy_model(int truncation, const std::vector<double>& radii, int angles_per_ring);

/// Radii {0, 0.1, ..., 0.9, 0.95, 0.99}, 32 angles, N = 64.
KernelModel default_hardy_model();
std::vector<double> default_hardy_radii();
inline constexpr int kDefaultHardyTruncation = 64;
inline constexpr int kDefaultHardyAngles = 32;

/// Kernel of one disk point: (1, conj(lambda), ..., conj(lambda)^N).
Vector hardy_kernel(int truncation, Complex lambda);
/// Multiplication by z on the truncated Hardy space: e_n -> e_{n+1}, e_N -> 0.
Operator hardy_shift(int truncation);
/// sum_{n=0}^{N} |lambda|^{2n} in closed form.
double hardy_kernel_norm_squared(int truncation, Complex lambda);

/// Kernel at column j is the conjugate of column j of the basis evaluations
/// (rows indexed by orthonormal basis functions, columns by points).
KernelModel model_from_onb(const Matrix& basis_evaluations);

/// k_lambda / ||k_lambda||.
Vector normalized_kernel(const KernelModel& model, std::size_t index);

/// G_ij = <k_{lambda_j}, k_{lambda_i}>.
Matrix gram_matrix(const KernelModel& model);

void require_matching_dim(const KernelModel& model, const Operator& a, const char* context);

}  // namespace berezin
