#include "berezin/berezin_core.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>
#include <thread>

#include "berezin/simd.hpp"

namespace berezin {

namespace {

// Max-reduction over disjoint row blocks of the table. Blocks are combined in
// index order with a strict comparison, so the result (value and first
// attaining index) is identical for every worker count.
template <class BlockScan>
simd::ArgMax parallel_scan(std::size_t rows, std::size_t row_length, unsigned workers,
                           BlockScan scan_block) {
    const std::size_t total = rows * row_length;
    const unsigned usable =
        static_cast<unsigned>(std::clamp<std::size_t>(workers, 1, std::max<std::size_t>(rows, 1)));
    if (usable <= 1 || total < 4096) return scan_block(0, total);

    std::vector<simd::ArgMax> partial(usable);
    std::vector<std::thread> threads;
    threads.reserve(usable);
    const std::size_t rows_per = (rows + usable - 1) / usable;
    for (unsigned w = 0; w < usable; ++w) {
        const std::size_t begin = std::min(rows, w * rows_per) * row_length;
        const std::size_t end = std::min(rows, (w + 1) * rows_per) * row_length;
        threads.emplace_back([&, w, begin, end] {
            if (begin < end) {
                partial[w] = scan_block(begin, end);
                if (partial[w].index != simd::kNoIndex) partial[w].index += begin;
            }
        });
    }
    for (auto& th : threads) th.join();

    simd::ArgMax best;
    for (const auto& p : partial) {
        if (p.index != simd::kNoIndex && p.value > best.value) best = p;
    }
    return best;
}

PointPair unflatten(std::size_t flat, std::size_t m) { return PointPair{flat / m, flat % m}; }

Matrix adjoint_times(const Matrix& left, const Matrix& right) { return left.adjoint() * right; }

}  // namespace

void require_unit_interval(double t, const char* context) {
    if (!(t >= 0.0 && t <= 1.0)) {
        fail(ErrorCode::invalid_parameter,
             std::string(context) + ": t = " + std::to_string(t) + " is outside [0, 1]");
    }
}

PairTable::PairTable(const KernelModel& model, const Operator& a, ScanOptions options)
    : points_(model.size()), options_(options) {
    require_matching_dim(model, a, "PairTable");
    const Matrix& k = model.normalized_kernels();
    products_ = adjoint_times(k, a.matrix() * k);

    const std::size_t m = points_;
    forward_.resize(m * m);
    // Column-major storage: products_.data()[l * m + u] = products_(u, l).
    simd::active().magnitudes(products_.data(), forward_.data(), m * m);
    backward_.resize(m * m);
    for (std::size_t l = 0; l < m; ++l) {
        for (std::size_t u = 0; u < m; ++u) backward_[l * m + u] = forward_[u * m + l];
    }
}

Complex PairTable::inner(std::size_t lambda, std::size_t mu) const {
    if (lambda >= points_ || mu >= points_) {
        fail(ErrorCode::index_out_of_range, "pair index out of range");
    }
    return products_(static_cast<Eigen::Index>(mu), static_cast<Eigen::Index>(lambda));
}

double PairTable::objective(double t, PointPair p) const {
    const std::size_t flat = p.lambda * points_ + p.mu;
    return t * forward_[flat] + (1.0 - t) * backward_[flat];
}

Complex berezin_symbol(const KernelModel& model, const Operator& a, std::size_t point_index) {
    require_matching_dim(model, a, "berezin_symbol");
    const Vector k = normalized_kernel(model, point_index);
    return k.dot(a.matrix() * k);  // Eigen's dot conjugates the left operand: k* A k
}

std::vector<Complex> berezin_symbols(const KernelModel& model, const Operator& a) {
    require_matching_dim(model, a, "berezin_symbols");
    const Matrix& k = model.normalized_kernels();
    const Matrix ak = a.matrix() * k;
    std::vector<Complex> out(model.size());
    for (Eigen::Index j = 0; j < k.cols(); ++j) out[static_cast<std::size_t>(j)] = k.col(j).dot(ak.col(j));
    return out;
}

BerezinNumberResult berezin_number(const KernelModel& model, const Operator& a) {
    const auto symbols = berezin_symbols(model, a);
    std::vector<double> magnitudes(symbols.size());
    simd::active().magnitudes(symbols.data(), magnitudes.data(), symbols.size());
    const auto best = simd::active().argmax(magnitudes.data(), magnitudes.size());
    return BerezinNumberResult{best.value, best.index};
}

BerezinNumberResult berezin_number(const PairTable& table) {
    const std::size_t m = table.points();
    std::vector<double> diagonal(m);
    for (std::size_t l = 0; l < m; ++l) diagonal[l] = table.forward()[l * m + l];
    const auto best = simd::active().argmax(diagonal.data(), m);
    return BerezinNumberResult{best.value, best.index};
}

TBerezinResult berezin_norm(const PairTable& table) {
    const std::size_t m = table.points();
    const auto& fwd = table.forward();
    const auto best = parallel_scan(m, m, table.options().workers, [&](std::size_t b, std::size_t e) {
        return simd::active().argmax(fwd.data() + b, e - b);
    });
    return TBerezinResult{best.value, unflatten(best.index, m), 1.0};
}

TBerezinResult berezin_norm(const KernelModel& model, const Operator& a, ScanOptions options) {
    return berezin_norm(PairTable(model, a, options));
}

TBerezinResult t_berezin_norm(const PairTable& table, double t) {
    require_unit_interval(t, "t_berezin_norm");
    const std::size_t m = table.points();
    const auto& fwd = table.forward();
    const auto& bwd = table.backward();
    const auto best = parallel_scan(m, m, table.options().workers, [&](std::size_t b, std::size_t e) {
        return simd::active().weighted_argmax(fwd.data() + b, bwd.data() + b, t, e - b);
    });
    return TBerezinResult{best.value, unflatten(best.index, m), t};
}

TBerezinResult t_berezin_norm(const KernelModel& model, const Operator& a, double t,
                              ScanOptions options) {
    require_unit_interval(t, "t_berezin_norm");
    return t_berezin_norm(PairTable(model, a, options), t);
}

MinTResult golden_section_min(const std::function<double(double)>& f, double lo, double hi,
                              double tol) {
    if (!(tol > 0.0)) fail(ErrorCode::invalid_parameter, "tol_t must be positive");
    MinTResult result;
    auto eval = [&](double t) {
        const double v = f(t);
        result.trace.emplace_back(t, v);
        return v;
    };
    eval(lo);
    eval(hi);

    const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
    double a = lo;
    double b = hi;
    double c = b - inv_phi * (b - a);
    double d = a + inv_phi * (b - a);
    double fc = eval(c);
    double fd = eval(d);
    while (b - a > tol) {
        if (fc <= fd) {
            b = d;
            d = c;
            fd = fc;
            c = b - inv_phi * (b - a);
            fc = eval(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + inv_phi * (b - a);
            fd = eval(d);
        }
    }

    result.value = result.trace.front().second;
    result.t_star = result.trace.front().first;
    for (const auto& [t, v] : result.trace) {
        if (v < result.value || (v == result.value && t < result.t_star)) {
            result.value = v;
            result.t_star = t;
        }
    }
    return result;
}

MinTResult min_t_berezin(const PairTable& table, double tol_t) {
    return golden_section_min([&](double t) { return t_berezin_norm(table, t).value; }, 0.0, 0.5,
                              tol_t);
}

MinTResult min_t_berezin(const KernelModel& model, const Operator& a, double tol_t) {
    return min_t_berezin(PairTable(model, a), tol_t);
}

EqualityResult equality_witness(const KernelModel& model, const Operator& a, double t, double tol) {
    if (!(t > 0.0 && t < 1.0)) {
        fail(ErrorCode::invalid_parameter, "equality_witness needs t strictly inside (0, 1)");
    }
    const PairTable table(model, a);
    EqualityResult result;
    result.t_berezin = t_berezin_norm(table, t).value;
    result.berezin_norm = berezin_norm(table).value;
    result.equal = std::abs(result.berezin_norm - result.t_berezin) <= tol;
    if (!result.equal) return result;

    const double slack = tol / std::min(t, 1.0 - t);
    const double floor = result.berezin_norm - slack;
    const std::size_t m = table.points();
    for (std::size_t flat = 0; flat < m * m; ++flat) {
        if (table.forward()[flat] >= floor && table.backward()[flat] >= floor) {
            result.witness = unflatten(flat, m);
            break;
        }
    }
    return result;
}

UnitaryResult unitary_check(const KernelModel& model, const Operator& a, double t, double tol,
                            std::optional<double> tol_inv) {
    require_matching_dim(model, a, "unitary_check");
    require_unit_interval(t, "unitary_check");
    const auto svd = Eigen::JacobiSVD<Matrix>(a.matrix(), Eigen::ComputeFullV);
    const RealVector s = svd.singularValues();
    const double smallest = s(s.size() - 1);
    const double threshold = tol_inv.value_or(1e-10 * s(0));
    if (!(smallest > threshold)) {
        fail(ErrorCode::not_invertible, "smallest singular value " + std::to_string(smallest) +
                                            " <= " + std::to_string(threshold));
    }
    const Matrix& v = svd.matrixV();
    const Eigen::VectorXcd s2 = s.array().square().cast<Complex>();
    const Eigen::VectorXcd s2_inv = s.array().square().inverse().cast<Complex>();
    const Operator gram(v * s2.asDiagonal() * v.adjoint());
    const Operator gram_inverse(v * s2_inv.asDiagonal() * v.adjoint());

    UnitaryResult result;
    result.t_berezin_gram = t_berezin_norm(model, gram, t).value;
    result.t_berezin_inverse = t_berezin_norm(model, gram_inverse, t).value;
    result.unitary = result.t_berezin_gram <= 1.0 + tol && result.t_berezin_inverse <= 1.0 + tol;
    return result;
}

namespace {

struct Polar {
    double radius;
    double angle;
};

Polar to_polar(Complex z) { return Polar{std::abs(z), z == Complex(0.0) ? 0.0 : std::arg(z)}; }

double ring_spacing(const HardyParams& hardy, double r) {
    std::vector<double> levels{0.0};
    levels.insert(levels.end(), hardy.radii.begin(), hardy.radii.end());
    double spacing = 0.0;
    for (std::size_t i = 0; i + 1 < levels.size(); ++i) {
        const double gap = levels[i + 1] - levels[i];
        if (std::abs(levels[i] - r) < 1e-12 || std::abs(levels[i + 1] - r) < 1e-12) {
            spacing = spacing == 0.0 ? gap : std::min(spacing, gap);
        }
    }
    return spacing > 0.0 ? spacing : 0.01;
}

std::vector<Complex> neighbourhood(Polar centre, double dr, double dtheta) {
    std::vector<Complex> out;
    out.reserve(9);
    for (int i = -1; i <= 1; ++i) {
        for (int j = -1; j <= 1; ++j) {
            const double r = std::clamp(centre.radius + i * dr, 0.0, kMaxDiskRadius);
            out.push_back(std::polar(r, centre.angle + j * dtheta));
        }
    }
    return out;
}

Matrix normalized_hardy_columns(int truncation, const std::vector<Complex>& points) {
    Matrix k(truncation + 1, static_cast<Eigen::Index>(points.size()));
    for (std::size_t j = 0; j < points.size(); ++j) {
        const auto col = static_cast<Eigen::Index>(j);
        k.col(col) = hardy_kernel(truncation, points[j]) /
                     std::sqrt(hardy_kernel_norm_squared(truncation, points[j]));
    }
    return k;
}

}  // namespace

RefinedResult refine_t_berezin(const KernelModel& model, const Operator& a, double t,
                               const TBerezinResult& coarse, RefineOptions options) {
    require_matching_dim(model, a, "refine_t_berezin");
    require_unit_interval(t, "refine_t_berezin");
    if (!model.hardy()) {
        fail(ErrorCode::invalid_parameter, "local refinement needs a disk (hardy) model");
    }
    if (options.rounds < 0 || options.subdivision < 2) {
        fail(ErrorCode::invalid_parameter, "refinement needs rounds >= 0 and subdivision >= 2");
    }
    const HardyParams& hardy = *model.hardy();

    RefinedResult result;
    result.t = t;
    result.coarse_value = coarse.value;
    result.value = coarse.value;
    result.lambda = model.disk_point(coarse.witness.lambda);
    result.mu = options.diagonal ? result.lambda : model.disk_point(coarse.witness.mu);

    double dtheta = 2.0 * std::numbers::pi / hardy.angles_per_ring;
    double dr_lambda = ring_spacing(hardy, std::abs(result.lambda));
    double dr_mu = ring_spacing(hardy, std::abs(result.mu));

    for (int round = 0; round < options.rounds; ++round) {
        dtheta /= options.subdivision;
        dr_lambda /= options.subdivision;
        dr_mu /= options.subdivision;
        const auto lambdas = neighbourhood(to_polar(result.lambda), dr_lambda, dtheta);
        const auto mus =
            options.diagonal ? lambdas : neighbourhood(to_polar(result.mu), dr_mu, dtheta);
        const Matrix kl = normalized_hardy_columns(hardy.truncation, lambdas);
        const Matrix km = normalized_hardy_columns(hardy.truncation, mus);
        // fwd(u, l) = <A k_l, k_u>, adj(u, l) = <A* k_l, k_u>
        const Matrix fwd = km.adjoint() * (a.matrix() * kl);
        const Matrix adj = km.adjoint() * (a.matrix().adjoint() * kl);
        for (Eigen::Index l = 0; l < kl.cols(); ++l) {
            for (Eigen::Index u = 0; u < km.cols(); ++u) {
                if (options.diagonal && u != l) continue;
                const double v = t * std::abs(fwd(u, l)) + (1.0 - t) * std::abs(adj(u, l));
                if (v > result.value) {
                    result.value = v;
                    result.lambda = lambdas[static_cast<std::size_t>(l)];
                    result.mu = mus[static_cast<std::size_t>(u)];
                }
            }
        }
    }
    return result;
}

}  // namespace berezin
