#pragma once

// Left and right sides of every inequality under test, one BoundReport per
// instance. ber(X) is always the Berezin number and ||X||_ber the Berezin
// norm, evaluated exactly as each inequality writes them.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "berezin/berezin_core.hpp"
#include "berezin/block_operators.hpp"
#include "berezin/orlicz.hpp"

namespace berezin {

/// proved and chain reports are asserted; comparison and logged ones are
/// recorded for statistics only.
enum class BoundRole { proved, chain, comparison, logged };

std::string to_string(BoundRole role);

struct BoundContext {
    /// tol_ineq = tol_rel (1 + |lhs| + |rhs|).
    double tol_rel = 1e-9;
    /// Bound id whose asserted right sides are scaled by mutate_factor; "*" for all.
    std::optional<std::string> mutate;
    double mutate_factor = 0.9;
    /// Evaluate despite a violated precondition; such reports are logged, never asserted.
    bool allow_precondition_override = false;
    ScanOptions scan;
};

struct BoundReport {
    std::string bound_id;
    std::string variant;
    BoundRole role = BoundRole::proved;
    double lhs = 0.0;
    double rhs = 0.0;
    double slack = 0.0;
    double tol = 0.0;
    bool holds = true;
    std::map<std::string, double> params;
    std::vector<std::size_t> witnesses;
    std::vector<std::string> flags;

    bool asserted() const noexcept { return role == BoundRole::proved || role == BoundRole::chain; }
    bool failed() const noexcept { return asserted() && !holds; }
};

double tol_ineq(const BoundContext& ctx, double lhs, double rhs);

BoundReport make_report(const BoundContext& ctx, std::string id, std::string variant, BoundRole role,
                        double lhs, double rhs, std::map<std::string, double> params = {},
                        std::vector<std::size_t> witnesses = {});

/// Stable identifiers of every bound in the catalog.
const std::vector<std::string>& bound_ids();
bool is_bound_id(const std::string& id);

using TGrid = std::vector<double>;

// Norm relations and single-operator t-Berezin bounds. The TGrid overloads
// evaluate every t from one pair table per operator.
std::vector<BoundReport> bound_sandwich(const KernelModel& model, const Operator& a, double t,
                                        const BoundContext& ctx = {});
std::vector<BoundReport> bound_product(const KernelModel& model, const Operator& a, const Operator& b,
                                       double t, const BoundContext& ctx = {});
BoundReport bound_mixed(const KernelModel& model, const Operator& a, double t,
                        const BoundContext& ctx = {});
std::vector<BoundReport> bound_sandwich(const KernelModel& model, const Operator& a, const TGrid& ts,
                                        const BoundContext& ctx = {});
std::vector<BoundReport> bound_product(const KernelModel& model, const Operator& a, const Operator& b,
                                       const TGrid& ts, const BoundContext& ctx = {});
std::vector<BoundReport> bound_mixed(const KernelModel& model, const Operator& a, const TGrid& ts,
                                     const BoundContext& ctx = {});
std::vector<BoundReport> bound_taghavi_chain(const KernelModel& model, const Operator& a, double r,
                                             const BoundContext& ctx = {});
BoundReport bound_convexity_axioms(const KernelModel& model, const Operator& a, const Operator& b,
                                   double t, double r, const BoundContext& ctx = {});
/// Every (t, r) pair, t outer.
std::vector<BoundReport> bound_convexity_axioms(const KernelModel& model, const Operator& a,
                                                const Operator& b, const TGrid& ts,
                                                const std::vector<double>& rs,
                                                const BoundContext& ctx = {});

// Operator matrices on a direct-sum model.
BoundReport bound_block_diag(const DirectSumModel& ds, const Operator& a, const Operator& b, double t,
                             const BoundContext& ctx = {});
BoundReport bound_block_offdiag_single(const DirectSumModel& ds, const Operator& a, double t,
                                       const BoundContext& ctx = {});
std::vector<BoundReport> bound_block_offdiag(const DirectSumModel& ds, const Operator& a,
                                             const Operator& b, double t, const BoundContext& ctx = {});
BoundReport bound_block_2x2(const DirectSumModel& ds, const Operator& a, const Operator& b,
                            const Operator& c, const Operator& d, double t,
                            const BoundContext& ctx = {});
BoundReport bound_block_nxn(const DirectSumModel& ds, const BlockOperator& blocks, double t,
                            const BoundContext& ctx = {});
std::vector<BoundReport> bound_block_diag(const DirectSumModel& ds, const Operator& a,
                                          const Operator& b, const TGrid& ts,
                                          const BoundContext& ctx = {});
std::vector<BoundReport> bound_block_offdiag_single(const DirectSumModel& ds, const Operator& a,
                                                    const TGrid& ts, const BoundContext& ctx = {});
std::vector<BoundReport> bound_block_offdiag(const DirectSumModel& ds, const Operator& a,
                                             const Operator& b, const TGrid& ts,
                                             const BoundContext& ctx = {});
std::vector<BoundReport> bound_block_2x2(const DirectSumModel& ds, const Operator& a,
                                         const Operator& b, const Operator& c, const Operator& d,
                                         const TGrid& ts, const BoundContext& ctx = {});
std::vector<BoundReport> bound_block_nxn(const DirectSumModel& ds, const BlockOperator& blocks,
                                         const TGrid& ts, const BoundContext& ctx = {});
/// The n x n real matrix whose operator norm bounds ||T||_{t-ber}.
Eigen::MatrixXd block_bound_matrix(const KernelModel& base, const BlockOperator& blocks, double t);

// Orlicz-type bounds on one operator.
BoundReport bound_orlicz_main(const KernelModel& model, const Operator& a, const OrliczFn& phi,
                              const PowerPair& pair, const WeightFn& f, const BoundContext& ctx = {});
std::vector<BoundReport> bound_orlicz_main(const KernelModel& model, const Operator& a,
                                           const OrliczFn& phi, const PowerPair& pair,
                                           const std::vector<WeightFn>& fs, const BoundContext& ctx = {});
std::vector<BoundReport> bound_th6_cor1(const KernelModel& model, const Operator& a, double r,
                                        const BoundContext& ctx = {});
std::vector<BoundReport> bound_th6_cor2(const KernelModel& model, const Operator& a,
                                        const BoundContext& ctx = {});
BoundReport bound_axioms_th3(const KernelModel& model, const Operator& a, const BoundContext& ctx = {});

// Orlicz-type bounds on A*B.
BoundReport bound_orlicz_product(const KernelModel& model, const Operator& a, const Operator& b,
                                 const OrliczFn& phi, const WeightFn& f, const BoundContext& ctx = {});
std::vector<BoundReport> bound_orlicz_product(const KernelModel& model, const Operator& a,
                                              const Operator& b, const OrliczFn& phi,
                                              const std::vector<WeightFn>& fs,
                                              const BoundContext& ctx = {});
std::vector<BoundReport> bound_th7_cor1(const KernelModel& model, const Operator& a, const Operator& b,
                                        double r, double alpha, const BoundContext& ctx = {});
std::vector<BoundReport> bound_th7_cor1(const KernelModel& model, const Operator& a, const Operator& b,
                                        double r, const std::vector<double>& alphas,
                                        const BoundContext& ctx = {});
std::vector<BoundReport> bound_th7_cor2(const KernelModel& model, const Operator& a, const Operator& b,
                                        const BoundContext& ctx = {});
BoundReport bound_axioms_th4(const KernelModel& model, const Operator& a, const Operator& b,
                             const BoundContext& ctx = {});
BoundReport bound_basaran(const KernelModel& model, const Operator& a, const Operator& b, double r,
                          const BoundContext& ctx = {});
/// The literature bound (r >= 2) and, as a comparison, the first line of the
/// th7_cor1 bound at exponent r/2 with alpha = lambda against it.
std::vector<BoundReport> bound_dcds(const KernelModel& model, const Operator& a, const Operator& b,
                                    double r, double lambda, const BoundContext& ctx = {});
std::vector<BoundReport> bound_dcds(const KernelModel& model, const Operator& a, const Operator& b,
                                    double r, const std::vector<double>& lambdas,
                                    const BoundContext& ctx = {});
BoundReport bound_mjm(const KernelModel& model, const Operator& a, const Operator& b, double r,
                      double alpha, const BoundContext& ctx = {});
std::vector<BoundReport> bound_mjm(const KernelModel& model, const Operator& a, const Operator& b,
                                   double r, const std::vector<double>& alphas,
                                   const BoundContext& ctx = {});

enum class Th8Variant { as_stated, as_proved };
std::string to_string(Th8Variant v);

/// first = false selects the inequality with the roles of A and A* exchanged.
/// as_proved is asserted, as_stated is logged.
BoundReport bound_th8(const KernelModel& model, const Operator& a, const OrliczFn& phi,
                      const PowerPair& pair, double alpha, bool first, Th8Variant variant,
                      const BoundContext& ctx = {});
/// For each alpha: first as-stated, first as-proved, second as-stated, second as-proved.
std::vector<BoundReport> bound_th8(const KernelModel& model, const Operator& a, const OrliczFn& phi,
                                   const PowerPair& pair, const std::vector<double>& alphas,
                                   const BoundContext& ctx = {});

}  // namespace berezin
