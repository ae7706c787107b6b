#pragma once

// Direct sums H^n of a base model and n x n operator matrices acting on them.
//
// A composite kernel is (c_1 e^{i psi_1} k^_{lambda_1}, ..., c_n e^{i psi_n} k^_{lambda_n})
// with sum c_i^2 = 1. Weights come from a hyperspherical angle grid, phases
// from a uniform grid on [0, 2 pi). The first nonzero component always has
// phase 0, since a global phase leaves every |<T k, k'>| unchanged.

#include <cstddef>
#include <vector>

#include "berezin/kernel_models.hpp"
#include "berezin/linalg.hpp"

namespace berezin {

inline constexpr std::size_t kMaxDirectSumKernels = 200000;
inline constexpr int kMaxDirectSumCopies = 4;

struct DirectSumModel {
    KernelModel base;
    int copies = 2;
    std::vector<std::vector<double>> weight_grid;  // each of length copies, unit Euclidean norm
    std::vector<double> phase_grid;                // 2 pi k / phase_steps
    KernelModel model;                             // kind direct_sum, dim = copies * base.dim()
};

/// Number of composite kernels direct_sum_model would build.
std::size_t direct_sum_size(const KernelModel& base, int copies, int weight_steps, int phase_steps);

DirectSumModel direct_sum_model(const KernelModel& base, int copies, int weight_steps = 5,
                                int phase_steps = 8);

/// Weight vectors on the unit sphere: theta_j in {k (pi/2) / (steps - 1)},
/// c = (cos theta_1, sin theta_1 cos theta_2, ..., sin theta_1 ... sin theta_{n-1}).
/// Exact zeros and ones are snapped, duplicates removed.
std::vector<std::vector<double>> sphere_weight_grid(int copies, int weight_steps);

class BlockOperator {
  public:
    /// Row-major n x n grid of equally sized blocks.
    explicit BlockOperator(std::vector<std::vector<Operator>> blocks);

    std::size_t order() const noexcept { return blocks_.size(); }
    Eigen::Index block_size() const noexcept { return blocks_[0][0].size(); }
    const Operator& block(std::size_t i, std::size_t j) const;

    /// The dense (n dim) x (n dim) matrix.
    Operator assemble() const;

  private:
    std::vector<std::vector<Operator>> blocks_;
};

BlockOperator block2(const Operator& a, const Operator& b, const Operator& c, const Operator& d);
BlockOperator block_n(std::vector<std::vector<Operator>> blocks);

/// P = (0 I; I 0) on C^dim + C^dim.
Operator swap_permutation(Eigen::Index dim);

}  // namespace berezin
