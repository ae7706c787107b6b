#include "berezin/block_operators.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

namespace berezin {

namespace {

// cos(k pi / (2 K)) for k = 0..K, with sin(k pi / (2 K)) read back as entry K - k
// so that exchanging two components maps the grid onto itself bit for bit.
std::vector<double> quarter_cosines(int steps) {
    const int last = steps - 1;
    std::vector<double> c(static_cast<std::size_t>(steps));
    for (int k = 0; k <= last; ++k) {
        if (k == 0) {
            c[0] = 1.0;
        } else if (k == last) {
            c[static_cast<std::size_t>(k)] = 0.0;
        } else {
            c[static_cast<std::size_t>(k)] = std::cos(k * (std::numbers::pi / 2.0) / last);
        }
    }
    return c;
}

void validate(int copies, int weight_steps, int phase_steps) {
    if (copies < 2 || copies > kMaxDirectSumCopies) {
        fail(ErrorCode::invalid_parameter,
             "direct sum copies must be in [2, " + std::to_string(kMaxDirectSumCopies) + "]");
    }
    if (weight_steps < 2) fail(ErrorCode::invalid_parameter, "weight_steps must be >= 2");
    if (phase_steps < 1) fail(ErrorCode::invalid_parameter, "phase_steps must be >= 1");
}

std::size_t support_size(const std::vector<double>& w) {
    return static_cast<std::size_t>(std::count_if(w.begin(), w.end(), [](double c) { return c != 0.0; }));
}

std::size_t saturating_power(std::size_t base, std::size_t exponent) {
    std::size_t out = 1;
    for (std::size_t i = 0; i < exponent; ++i) {
        if (base != 0 && out > kMaxDirectSumKernels * 16 / base) return kMaxDirectSumKernels * 16;
        out *= base;
    }
    return out;
}

}  // namespace

std::vector<std::vector<double>> sphere_weight_grid(int copies, int weight_steps) {
    validate(copies, weight_steps, 1);
    const auto cosines = quarter_cosines(weight_steps);
    const int last = weight_steps - 1;
    std::vector<std::vector<double>> grid;

    std::vector<int> index(static_cast<std::size_t>(copies - 1), 0);
    while (true) {
        std::vector<double> w(static_cast<std::size_t>(copies));
        double running = 1.0;
        for (int j = 0; j + 1 < copies; ++j) {
            const int k = index[static_cast<std::size_t>(j)];
            w[static_cast<std::size_t>(j)] = running * cosines[static_cast<std::size_t>(k)];
            running *= cosines[static_cast<std::size_t>(last - k)];
        }
        w[static_cast<std::size_t>(copies - 1)] = running;
        for (double& c : w) {
            if (std::abs(c) < 1e-15) c = 0.0;
            if (std::abs(c - 1.0) < 1e-15) c = 1.0;
        }
        if (std::find(grid.begin(), grid.end(), w) == grid.end()) grid.push_back(std::move(w));

        int j = copies - 2;
        while (j >= 0 && index[static_cast<std::size_t>(j)] == last) {
            index[static_cast<std::size_t>(j)] = 0;
            --j;
        }
        if (j < 0) break;
        ++index[static_cast<std::size_t>(j)];
    }
    return grid;
}

std::size_t direct_sum_size(const KernelModel& base, int copies, int weight_steps, int phase_steps) {
    validate(copies, weight_steps, phase_steps);
    std::size_t total = 0;
    for (const auto& w : sphere_weight_grid(copies, weight_steps)) {
        const std::size_t support = support_size(w);
        total += saturating_power(base.size(), support) *
                 saturating_power(static_cast<std::size_t>(phase_steps), support - 1);
        if (total > kMaxDirectSumKernels * 16) break;
    }
    return total;
}

DirectSumModel direct_sum_model(const KernelModel& base, int copies, int weight_steps,
                                int phase_steps) {
    const std::size_t size = direct_sum_size(base, copies, weight_steps, phase_steps);
    if (size > kMaxDirectSumKernels) {
        fail(ErrorCode::configuration, "direct sum family would have " + std::to_string(size) +
                                           " kernels (cap " +
                                           std::to_string(kMaxDirectSumKernels) + ")");
    }

    std::vector<double> phases(static_cast<std::size_t>(phase_steps));
    for (int k = 0; k < phase_steps; ++k) {
        phases[static_cast<std::size_t>(k)] = 2.0 * std::numbers::pi * k / phase_steps;
    }
    const auto weights = sphere_weight_grid(copies, weight_steps);
    const Eigen::Index d = base.dim();
    const std::size_t m = base.size();
    const Matrix& khat = base.normalized_kernels();

    Matrix kernels(d * copies, static_cast<Eigen::Index>(size));
    std::vector<DomainPoint> points;
    points.reserve(size);

    for (const auto& w : weights) {
        std::vector<std::size_t> support;
        for (std::size_t c = 0; c < w.size(); ++c) {
            if (w[c] != 0.0) support.push_back(c);
        }
        const std::size_t s = support.size();
        std::vector<std::size_t> base_index(s, 0);
        std::vector<std::size_t> phase_index(s, 0);  // entry 0 stays 0
        while (true) {
            CompositeLabel label{std::vector<std::size_t>(w.size(), 0), w,
                                 std::vector<double>(w.size(), 0.0)};
            const auto col = static_cast<Eigen::Index>(points.size());
            kernels.col(col).setZero();
            for (std::size_t j = 0; j < s; ++j) {
                const std::size_t c = support[j];
                const double psi = phases[phase_index[j]];
                label.base_points[c] = base_index[j];
                label.phases[c] = psi;
                const Complex factor = std::polar(w[c], psi);
                kernels.col(col).segment(static_cast<Eigen::Index>(c) * d, d) =
                    factor * khat.col(static_cast<Eigen::Index>(base_index[j]));
            }
            points.push_back(DomainPoint{points.size(), std::move(label)});

            // Odometer over base points, then over phases of components 2..s.
            std::size_t j = s;
            bool advanced = false;
            while (j-- > 0) {
                if (++base_index[j] < m) {
                    advanced = true;
                    break;
                }
                base_index[j] = 0;
            }
            if (advanced) continue;
            j = s;
            while (j-- > 1) {
                if (++phase_index[j] < phases.size()) {
                    advanced = true;
                    break;
                }
                phase_index[j] = 0;
            }
            if (!advanced) break;
        }
    }

    RealVector norms(static_cast<Eigen::Index>(size));
    for (Eigen::Index j = 0; j < norms.size(); ++j) norms(j) = kernels.col(j).norm();
    KernelModel model(ModelKind::direct_sum, std::move(points), std::move(kernels), std::move(norms));
    return DirectSumModel{base, copies, weights, phases, std::move(model)};
}

BlockOperator::BlockOperator(std::vector<std::vector<Operator>> blocks) : blocks_(std::move(blocks)) {
    if (blocks_.empty()) fail(ErrorCode::invalid_dimension, "block operator needs at least one block");
    const Eigen::Index d = blocks_[0].empty() ? 0 : blocks_[0][0].size();
    if (d == 0) fail(ErrorCode::invalid_dimension, "blocks must be nonempty");
    for (const auto& row : blocks_) {
        if (row.size() != blocks_.size()) {
            fail(ErrorCode::shape_mismatch, "block grid must be square");
        }
        for (const auto& b : row) {
            if (b.size() != d) fail(ErrorCode::shape_mismatch, "all blocks must share one size");
        }
    }
}

const Operator& BlockOperator::block(std::size_t i, std::size_t j) const {
    if (i >= order() || j >= order()) fail(ErrorCode::index_out_of_range, "block index out of range");
    return blocks_[i][j];
}

Operator BlockOperator::assemble() const {
    const Eigen::Index d = block_size();
    const auto n = static_cast<Eigen::Index>(order());
    Matrix out(n * d, n * d);
    for (Eigen::Index i = 0; i < n; ++i) {
        for (Eigen::Index j = 0; j < n; ++j) {
            out.block(i * d, j * d, d, d) =
                blocks_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)].matrix();
        }
    }
    return Operator(std::move(out));
}

BlockOperator block2(const Operator& a, const Operator& b, const Operator& c, const Operator& d) {
    return BlockOperator({{a, b}, {c, d}});
}

BlockOperator block_n(std::vector<std::vector<Operator>> blocks) {
    return BlockOperator(std::move(blocks));
}

Operator swap_permutation(Eigen::Index dim) {
    Matrix p = Matrix::Zero(2 * dim, 2 * dim);
    p.block(0, dim, dim, dim).setIdentity();
    p.block(dim, 0, dim, dim).setIdentity();
    return Operator(std::move(p));
}

}  // namespace berezin
