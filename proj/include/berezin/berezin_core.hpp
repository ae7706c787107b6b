#pragma once

// Berezin symbol, Berezin number, Berezin norm and the t-Berezin norm
//
//   ||A||_{t-ber} = sup_{lambda, mu} t |<A k_lambda, k_mu>| + (1 - t) |<A* k_lambda, k_mu>|
//
// evaluated as exact maxima over the sampled points of a KernelModel.

#include <cstddef>
#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "berezin/kernel_models.hpp"
#include "berezin/linalg.hpp"

namespace berezin {

struct ScanOptions {
    /// Worker threads for the pair scan. The result does not depend on it.
    unsigned workers = 1;
};

/// (lambda, mu) point indices.
struct PointPair {
    std::size_t lambda = 0;
    std::size_t mu = 0;

    friend bool operator==(const PointPair&, const PointPair&) = default;
};

struct TBerezinResult {
    double value = 0.0;
    PointPair witness;
    double t = 1.0;
};

struct BerezinNumberResult {
    double value = 0.0;
    std::size_t witness = 0;
};

struct MinTResult {
    double t_star = 0.5;
    double value = 0.0;
    std::vector<std::pair<double, double>> trace;
};

struct EqualityResult {
    bool equal = false;
    std::optional<PointPair> witness;
    double t_berezin = 0.0;
    double berezin_norm = 0.0;
};

struct UnitaryResult {
    bool unitary = false;
    double t_berezin_gram = 0.0;     // ||A*A||_{t-ber}
    double t_berezin_inverse = 0.0;  // ||(A*A)^{-1}||_{t-ber}
};

/// All pair inner products of one operator on one model, laid out for the
/// scan kernels: forward[l * m + u] = |<A k_l, k_u>| and
/// backward[l * m + u] = |<A* k_l, k_u>| = forward[u * m + l].
/// Flat index order is lexicographic in (lambda, mu), which gives the
/// deterministic tie rule.
class PairTable {
  public:
    PairTable(const KernelModel& model, const Operator& a, ScanOptions options = {});

    std::size_t points() const noexcept { return points_; }
    const std::vector<double>& forward() const noexcept { return forward_; }
    const std::vector<double>& backward() const noexcept { return backward_; }
    /// <A k_lambda, k_mu>
    Complex inner(std::size_t lambda, std::size_t mu) const;
    double objective(double t, PointPair p) const;
    const ScanOptions& options() const noexcept { return options_; }

  private:
    std::size_t points_;
    Matrix products_;  // products_(mu, lambda) = <A k_lambda, k_mu>
    std::vector<double> forward_;
    std::vector<double> backward_;
    ScanOptions options_;
};

Complex berezin_symbol(const KernelModel& model, const Operator& a, std::size_t point_index);
/// The Berezin set: symbols at every sampled point.
std::vector<Complex> berezin_symbols(const KernelModel& model, const Operator& a);

BerezinNumberResult berezin_number(const KernelModel& model, const Operator& a);
BerezinNumberResult berezin_number(const PairTable& table);

TBerezinResult berezin_norm(const KernelModel& model, const Operator& a, ScanOptions options = {});
TBerezinResult berezin_norm(const PairTable& table);

TBerezinResult t_berezin_norm(const KernelModel& model, const Operator& a, double t,
                              ScanOptions options = {});
TBerezinResult t_berezin_norm(const PairTable& table, double t);

inline constexpr double kDefaultTolT = 1e-6;

/// Minimizes t -> ||A||_{t-ber} on [0, 1/2] by golden-section search; the
/// endpoints are always evaluated. Convex and symmetric about 1/2.
MinTResult min_t_berezin(const KernelModel& model, const Operator& a, double tol_t = kDefaultTolT);
MinTResult min_t_berezin(const PairTable& table, double tol_t = kDefaultTolT);

/// Golden-section minimum of a convex function on [lo, hi], endpoints included.
MinTResult golden_section_min(const std::function<double(double)>& f, double lo, double hi,
                              double tol);

/// Attained-maximum form of the equality characterization: equal iff
/// |‖A‖_{t-ber} - ‖A‖_ber| <= tol. When equal, the witness is the lowest pair
/// whose two magnitudes are both within tol / min(t, 1-t) of ‖A‖_ber.
EqualityResult equality_witness(const KernelModel& model, const Operator& a, double t, double tol);

/// Invertible A is unitary iff ||A*A||_{t-ber} <= 1 and ||(A*A)^{-1}||_{t-ber} <= 1.
/// The reverse implication needs kernels spanning the space, so the full
/// equivalence is only meaningful on the standard model.
UnitaryResult unitary_check(const KernelModel& model, const Operator& a, double t, double tol,
                            std::optional<double> tol_inv = std::nullopt);

struct RefineOptions {
    int rounds = 2;
    int subdivision = 4;
    bool diagonal = false;  // refine the Berezin number (lambda = mu)
};

struct RefinedResult {
    double value = 0.0;
    double coarse_value = 0.0;
    Complex lambda;
    Complex mu;
    double t = 1.0;
};

/// Local refinement of a disk-model maximum: each round re-grids a 3x3
/// (radius, angle) neighbourhood of the current witnesses at 1/subdivision
/// of the previous spacing. The value never decreases.
RefinedResult refine_t_berezin(const KernelModel& model, const Operator& a, double t,
                               const TBerezinResult& coarse, RefineOptions options = {});

void require_unit_interval(double t, const char* context);

}  // namespace berezin
