#include "berezin/bound_catalog.hpp"

#include <algorithm>
#include <cmath>

namespace berezin {

std::string to_string(BoundRole role) {
    switch (role) {
        case BoundRole::proved: return "proved";
        case BoundRole::chain: return "chain";
        case BoundRole::comparison: return "comparison";
        case BoundRole::logged: return "logged";
    }
    return "logged";
}

std::string to_string(Th8Variant v) { return v == Th8Variant::as_stated ? "as-stated" : "as-proved"; }

double tol_ineq(const BoundContext& ctx, double lhs, double rhs) {
    return ctx.tol_rel * (1.0 + std::abs(lhs) + std::abs(rhs));
}

BoundReport make_report(const BoundContext& ctx, std::string id, std::string variant, BoundRole role,
                        double lhs, double rhs, std::map<std::string, double> params,
                        std::vector<std::size_t> witnesses) {
    BoundReport r;
    r.bound_id = std::move(id);
    r.variant = std::move(variant);
    r.role = role;
    r.lhs = lhs;
    r.rhs = rhs;
    if (r.asserted() && ctx.mutate && (*ctx.mutate == "*" || *ctx.mutate == r.bound_id)) {
        r.rhs *= ctx.mutate_factor;
        r.flags.emplace_back("mutated");
    }
    r.slack = r.rhs - r.lhs;
    r.tol = tol_ineq(ctx, r.lhs, r.rhs);
    r.holds = std::isfinite(r.slack) && r.slack >= -r.tol;
    r.params = std::move(params);
    r.witnesses = std::move(witnesses);
    return r;
}

const std::vector<std::string>& bound_ids() {
    static const std::vector<std::string> ids{
        "sandwich",     "product",        "mixed",          "taghavi_chain", "convexity_axioms",
        "block_diag",   "block_offdiag_single", "block_offdiag", "block_2x2",  "block_nxn",
        "orlicz_main",  "th6_cor1",       "th6_cor2",       "orlicz_product", "th7_cor1",
        "th7_cor2",     "basaran",        "dcds",           "mjm",           "axioms_th3",
        "axioms_th4",   "th8_first",      "th8_second"};
    return ids;
}

bool is_bound_id(const std::string& id) {
    const auto& ids = bound_ids();
    return std::find(ids.begin(), ids.end(), id) != ids.end();
}

namespace {

double ber(const KernelModel& m, const Operator& x) { return berezin_number(m, x).value; }
double ber(const KernelModel& m, const HermitianMatrix& x) { return ber(m, x.as_operator()); }
double ber_norm(const KernelModel& m, const Operator& x, const BoundContext& ctx) {
    return berezin_norm(m, x, ctx.scan).value;
}
double ber_norm(const KernelModel& m, const HermitianMatrix& x, const BoundContext& ctx) {
    return ber_norm(m, x.as_operator(), ctx);
}
// |X|^p and |X*|^p for one operator, sharing one SVD.
struct Powers {
    explicit Powers(const Operator& x) : abs(absolute_values(x)) {}

    HermitianMatrix of_abs(double p) const { return psd_power(abs.abs, p); }
    HermitianMatrix of_abs_adjoint(double p) const { return psd_power(abs.abs_adjoint, p); }

    AbsoluteValues abs;
};

BoundRole guarded(const BoundContext& ctx, bool precondition_ok, const std::string& what) {
    if (precondition_ok) return BoundRole::proved;
    if (!ctx.allow_precondition_override) fail(ErrorCode::precondition_violated, what);
    return BoundRole::logged;
}

void flag_if(BoundReport& r, bool condition, const char* flag) {
    if (condition) r.flags.emplace_back(flag);
}

void require_exponent(double r, double minimum, const char* context) {
    if (!(r >= minimum) || !std::isfinite(r)) {
        fail(ErrorCode::invalid_parameter,
             std::string(context) + " needs r >= " + std::to_string(minimum));
    }
}

void require_alpha_unit(double alpha, const char* context) {
    if (!(alpha >= 0.0 && alpha <= 1.0)) {
        fail(ErrorCode::invalid_parameter, std::string(context) + " needs alpha in [0, 1]");
    }
}

bool submultiplicative_known(const OrliczFn& phi) {
    return phi.submultiplicative() != Submultiplicativity::unknown;
}

std::map<std::string, double> phi_params(const OrliczFn& phi) {
    if (phi.kind() == OrliczFn::Kind::power) return {{"phi_r", phi.exponent()}};
    return {{"phi_custom", 1.0}};
}

}  // namespace

std::vector<BoundReport> bound_sandwich(const KernelModel& model, const Operator& a, const TGrid& ts,
                                        const BoundContext& ctx) {
    for (double t : ts) require_unit_interval(t, "bound_sandwich");
    const PairTable table(model, a, ctx.scan);
    const auto b = berezin_number(table);
    const auto norm = berezin_norm(table);
    std::vector<BoundReport> out;
    for (double t : ts) {
        const auto tb = t_berezin_norm(table, t);
        const double weight = std::max(t, 1.0 - t);
        const std::map<std::string, double> p{{"t", t}};
        out.push_back(make_report(ctx, "sandwich", "half_le_max", BoundRole::proved, 0.5 * norm.value,
                                  weight * norm.value, p));
        out.push_back(make_report(ctx, "sandwich", "max_le_tber", BoundRole::proved,
                                  weight * norm.value, tb.value, p, {tb.witness.lambda, tb.witness.mu}));
        out.push_back(make_report(ctx, "sandwich", "tber_le_ber", BoundRole::proved, tb.value,
                                  norm.value, p, {norm.witness.lambda, norm.witness.mu}));
        out.push_back(make_report(ctx, "sandwich", "ber_le_tber", BoundRole::proved, b.value, tb.value,
                                  p, {b.witness}));
    }
    return out;
}

std::vector<BoundReport> bound_sandwich(const KernelModel& model, const Operator& a, double t,
                                        const BoundContext& ctx) {
    return bound_sandwich(model, a, TGrid{t}, ctx);
}

std::vector<BoundReport> bound_product(const KernelModel& model, const Operator& a, const Operator& b,
                                       const TGrid& ts, const BoundContext& ctx) {
    for (double t : ts) require_unit_interval(t, "bound_product");
    require_same_size(a, b, "bound_product");
    const double residual = commutation_residual(a, b);
    const BoundRole role = guarded(ctx, residual <= default_commutation_tolerance(a, b),
                                   "product bound needs |A|B = B*|A| (residual " +
                                       std::to_string(residual) + ")");

    const Powers pa(a);
    const HermitianMatrix abs = pa.of_abs(1.0);
    const HermitianMatrix abs_adj = pa.of_abs_adjoint(1.0);
    const double rb = spectral_radius(b);
    const PairTable table(model, a * b, ctx.scan);

    std::vector<BoundReport> out;
    for (double t : ts) {
        const auto lhs = t_berezin_norm(table, t);
        const double n1 = ber_norm(model, t * abs + (1.0 - t) * abs_adj, ctx);
        const double n2 = ber_norm(model, t * abs_adj + (1.0 - t) * abs, ctx);
        const std::map<std::string, double> p{{"t", t}, {"residual", residual}};
        out.push_back(make_report(ctx, "product", "", role, lhs.value, rb * std::sqrt(n1 * n2), p,
                                  {lhs.witness.lambda, lhs.witness.mu}));
        if (t == 0.5) {
            out.push_back(make_report(ctx, "product", "half", role, lhs.value,
                                      0.5 * rb * ber_norm(model, abs + abs_adj, ctx), p));
        }
    }
    for (auto& r : out) flag_if(r, role == BoundRole::logged, "precondition-violated");
    return out;
}

std::vector<BoundReport> bound_product(const KernelModel& model, const Operator& a, const Operator& b,
                                       double t, const BoundContext& ctx) {
    return bound_product(model, a, b, TGrid{t}, ctx);
}

std::vector<BoundReport> bound_mixed(const KernelModel& model, const Operator& a, const TGrid& ts,
                                     const BoundContext& ctx) {
    for (double t : ts) require_unit_interval(t, "bound_mixed");
    const PairTable table(model, a, ctx.scan);
    const Operator as = a.adjoint();
    const Operator gram = as * a;
    const Operator cogram = a * as;
    std::vector<BoundReport> out;
    for (double t : ts) {
        const auto lhs = t_berezin_norm(table, t);
        const Operator mix = Complex(t) * gram + Complex(1.0 - t) * cogram;
        out.push_back(make_report(ctx, "mixed", "", BoundRole::proved, lhs.value,
                                  std::sqrt(ber_norm(model, mix, ctx)), {{"t", t}},
                                  {lhs.witness.lambda, lhs.witness.mu}));
    }
    return out;
}

BoundReport bound_mixed(const KernelModel& model, const Operator& a, double t, const BoundContext& ctx) {
    return bound_mixed(model, a, TGrid{t}, ctx).front();
}

std::vector<BoundReport> bound_taghavi_chain(const KernelModel& model, const Operator& a, double r,
                                             const BoundContext& ctx) {
    require_exponent(r, 1.0, "bound_taghavi_chain");
    const PairTable table(model, a, ctx.scan);
    const double b = berezin_number(table).value;
    const auto min_t = min_t_berezin(table);
    const Powers pa(a);
    const double rhs = 0.5 * ber_norm(model, pa.of_abs(r) + pa.of_abs_adjoint(r), ctx);
    const double min_pow = std::pow(min_t.value, r);
    const std::map<std::string, double> p{{"r", r}, {"t_star", min_t.t_star}};

    std::vector<BoundReport> out{
        make_report(ctx, "taghavi_chain", "ber_le_min", BoundRole::chain, std::pow(b, r), min_pow, p),
        make_report(ctx, "taghavi_chain", "min_le_taghavi", BoundRole::proved, min_pow, rhs, p),
    };
    if (r == 2.0) {
        out.push_back(make_report(ctx, "taghavi_chain", "vs_taghavi_r2", BoundRole::comparison,
                                  min_pow, rhs, p));
    }
    return out;
}

std::vector<BoundReport> bound_convexity_axioms(const KernelModel& model, const Operator& a,
                                                const Operator& b, const TGrid& ts,
                                                const std::vector<double>& rs, const BoundContext& ctx) {
    for (double t : ts) require_unit_interval(t, "bound_convexity_axioms");
    for (double r : rs) require_exponent(r, 1.0, "bound_convexity_axioms");
    require_same_size(a, b, "bound_convexity_axioms");
    const HermitianMatrix ha(a.matrix());
    const HermitianMatrix hb(b.matrix());
    const auto da = decompose(ha);
    const auto db = decompose(hb);
    clamped_psd_eigenvalues(da);
    clamped_psd_eigenvalues(db);
    std::vector<HermitianMatrix> pa;
    std::vector<HermitianMatrix> pb;
    for (double r : rs) {
        pa.push_back(psd_power(da, r));
        pb.push_back(psd_power(db, r));
    }
    std::vector<BoundReport> out;
    for (double t : ts) {
        const double base = ber_norm(model, t * ha + (1.0 - t) * hb, ctx);
        for (std::size_t k = 0; k < rs.size(); ++k) {
            const double rhs = ber_norm(model, t * pa[k] + (1.0 - t) * pb[k], ctx);
            out.push_back(make_report(ctx, "convexity_axioms", "", BoundRole::proved, std::pow(base, rs[k]),
                                      rhs, {{"t", t}, {"r", rs[k]}}));
        }
    }
    return out;
}

BoundReport bound_convexity_axioms(const KernelModel& model, const Operator& a, const Operator& b,
                                   double t, double r, const BoundContext& ctx) {
    return bound_convexity_axioms(model, a, b, TGrid{t}, std::vector<double>{r}, ctx).front();
}

std::vector<BoundReport> bound_block_diag(const DirectSumModel& ds, const Operator& a,
                                          const Operator& b, const TGrid& ts,
                                          const BoundContext& ctx) {
    for (double t : ts) require_unit_interval(t, "bound_block_diag");
    const Operator z = Operator::zero(a.size());
    const PairTable table(ds.model, block2(a, z, z, b).assemble(), ctx.scan);
    const PairTable ta(ds.base, a, ctx.scan);
    const PairTable tb(ds.base, b, ctx.scan);
    std::vector<BoundReport> out;
    for (double t : ts) {
        const auto lhs = t_berezin_norm(table, t);
        const double rhs = std::max(t_berezin_norm(ta, t).value, t_berezin_norm(tb, t).value);
        out.push_back(make_report(ctx, "block_diag", "", BoundRole::proved, lhs.value, rhs, {{"t", t}},
                                  {lhs.witness.lambda, lhs.witness.mu}));
    }
    return out;
}

BoundReport bound_block_diag(const DirectSumModel& ds, const Operator& a, const Operator& b, double t,
                             const BoundContext& ctx) {
    return bound_block_diag(ds, a, b, TGrid{t}, ctx).front();
}

std::vector<BoundReport> bound_block_offdiag_single(const DirectSumModel& ds, const Operator& a,
                                                    const TGrid& ts, const BoundContext& ctx) {
    for (double t : ts) require_unit_interval(t, "bound_block_offdiag_single");
    const Operator z = Operator::zero(a.size());
    const PairTable table(ds.model, block2(z, a, z, z).assemble(), ctx.scan);
    const double norm = ber_norm(ds.base, a, ctx);
    std::vector<BoundReport> out;
    for (double t : ts) {
        const auto lhs = t_berezin_norm(table, t);
        out.push_back(make_report(ctx, "block_offdiag_single", "", BoundRole::proved, lhs.value,
                                  std::max(t, 1.0 - t) * norm, {{"t", t}},
                                  {lhs.witness.lambda, lhs.witness.mu}));
    }
    return out;
}

BoundReport bound_block_offdiag_single(const DirectSumModel& ds, const Operator& a, double t,
                                       const BoundContext& ctx) {
    return bound_block_offdiag_single(ds, a, TGrid{t}, ctx).front();
}

std::vector<BoundReport> bound_block_offdiag(const DirectSumModel& ds, const Operator& a,
                                             const Operator& b, const TGrid& ts,
                                             const BoundContext& ctx) {
    for (double t : ts) require_unit_interval(t, "bound_block_offdiag");
    const Operator z = Operator::zero(a.size());
    const PairTable tab(ds.model, block2(z, a, b, z).assemble(), ctx.scan);
    const PairTable tba(ds.model, block2(z, b, a, z).assemble(), ctx.scan);
    const double norms = ber_norm(ds.base, a, ctx) + ber_norm(ds.base, b, ctx);
    std::vector<BoundReport> out;
    for (double t : ts) {
        const auto ab = t_berezin_norm(tab, t);
        const auto ba = t_berezin_norm(tba, t);
        const std::map<std::string, double> p{{"t", t}};
        out.push_back(make_report(ctx, "block_offdiag", "", BoundRole::proved, ab.value,
                                  std::max(t, 1.0 - t) * norms, p, {ab.witness.lambda, ab.witness.mu}));
        out.push_back(
            make_report(ctx, "block_offdiag", "swap_forward", BoundRole::chain, ab.value, ba.value, p));
        out.push_back(
            make_report(ctx, "block_offdiag", "swap_backward", BoundRole::chain, ba.value, ab.value, p));
    }
    return out;
}

std::vector<BoundReport> bound_block_offdiag(const DirectSumModel& ds, const Operator& a,
                                             const Operator& b, double t, const BoundContext& ctx) {
    return bound_block_offdiag(ds, a, b, TGrid{t}, ctx);
}

namespace {

struct BlockNorms {
    BlockNorms(const KernelModel& base, const BlockOperator& blocks, const ScanOptions& scan) {
        const std::size_t n = blocks.order();
        norms = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
                if (i == j) {
                    diagonal.emplace_back(base, blocks.block(i, i), scan);
                } else {
                    norms(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) =
                        berezin_norm(base, blocks.block(i, j), scan).value;
                }
            }
        }
    }

    Eigen::MatrixXd matrix(double t) const {
        Eigen::MatrixXd m(norms.rows(), norms.cols());
        for (Eigen::Index i = 0; i < m.rows(); ++i) {
            for (Eigen::Index j = 0; j < m.cols(); ++j) {
                m(i, j) = i == j ? t_berezin_norm(diagonal[static_cast<std::size_t>(i)], t).value
                                 : t * norms(i, j) + (1.0 - t) * norms(j, i);
            }
        }
        return m;
    }

    Eigen::MatrixXd norms;
    std::vector<PairTable> diagonal;
};

std::vector<BoundReport> block_matrix_reports(const DirectSumModel& ds, const BlockOperator& blocks,
                                              const TGrid& ts, const char* id,
                                              const BoundContext& ctx) {
    for (double t : ts) require_unit_interval(t, id);
    if (static_cast<std::size_t>(ds.copies) != blocks.order() || blocks.block_size() != ds.base.dim()) {
        fail(ErrorCode::shape_mismatch, std::string(id) + ": block layout does not match the direct sum");
    }
    const PairTable table(ds.model, blocks.assemble(), ctx.scan);
    const BlockNorms bn(ds.base, blocks, ctx.scan);
    std::vector<BoundReport> out;
    for (double t : ts) {
        const auto lhs = t_berezin_norm(table, t);
        const double rhs = bn.matrix(t).jacobiSvd().singularValues()(0);
        out.push_back(make_report(ctx, id, "", BoundRole::proved, lhs.value, rhs,
                                  {{"t", t}, {"n", static_cast<double>(blocks.order())}},
                                  {lhs.witness.lambda, lhs.witness.mu}));
    }
    return out;
}

}  // namespace

Eigen::MatrixXd block_bound_matrix(const KernelModel& base, const BlockOperator& blocks, double t) {
    require_unit_interval(t, "block_bound_matrix");
    return BlockNorms(base, blocks, ScanOptions{}).matrix(t);
}

std::vector<BoundReport> bound_block_2x2(const DirectSumModel& ds, const Operator& a,
                                         const Operator& b, const Operator& c, const Operator& d,
                                         const TGrid& ts, const BoundContext& ctx) {
    return block_matrix_reports(ds, block2(a, b, c, d), ts, "block_2x2", ctx);
}

BoundReport bound_block_2x2(const DirectSumModel& ds, const Operator& a, const Operator& b,
                            const Operator& c, const Operator& d, double t, const BoundContext& ctx) {
    return bound_block_2x2(ds, a, b, c, d, TGrid{t}, ctx).front();
}

std::vector<BoundReport> bound_block_nxn(const DirectSumModel& ds, const BlockOperator& blocks,
                                         const TGrid& ts, const BoundContext& ctx) {
    return block_matrix_reports(ds, blocks, ts, "block_nxn", ctx);
}

BoundReport bound_block_nxn(const DirectSumModel& ds, const BlockOperator& blocks, double t,
                            const BoundContext& ctx) {
    return bound_block_nxn(ds, blocks, TGrid{t}, ctx).front();
}

std::vector<BoundReport> bound_orlicz_main(const KernelModel& model, const Operator& a,
                                           const OrliczFn& phi, const PowerPair& pair,
                                           const std::vector<WeightFn>& fs, const BoundContext& ctx) {
    const BoundRole role = guarded(ctx, submultiplicative_known(phi),
                                   "orlicz_main needs a submultiplicative Orlicz function");
    const Powers pa(a);
    const auto& abs = pa.abs.abs;
    const auto& abs_adj = pa.abs.abs_adjoint;
    const double b = ber(model, a);
    const double s = pair.s();

    const double lhs = phi(b * b);
    const double term1 =
        0.5 * ber(model, phi_of_power(phi, abs, 4 * s) + phi_of_power(phi, abs_adj, 4 * (1 - s)));
    const Operator cross = pair.h_power(abs_adj, 2).as_operator() * pair.g_power(abs, 2).as_operator();
    const double term2 = phi(ber(model, cross));
    const double term3 =
        phi(b) * ber(model, phi_of_power(phi, abs, 2 * s) + phi_of_power(phi, abs_adj, 2 * (1 - s)));
    const bool zero_power = pair.zero_power_used(abs, abs_adj);

    std::vector<BoundReport> out;
    for (const auto& f : fs) {
        const double rhs = 0.5 * f.coefficient_f() * (term1 + term2) + 0.5 * f.coefficient_one() * term3;
        auto params = phi_params(phi);
        params["s"] = s;
        params["alpha"] = f.alpha;
        BoundReport r = make_report(ctx, "orlicz_main", "", role, lhs, rhs, std::move(params));
        flag_if(r, role == BoundRole::logged, "precondition-violated");
        flag_if(r, zero_power, "zero-power-convention");
        out.push_back(std::move(r));
    }
    return out;
}

BoundReport bound_orlicz_main(const KernelModel& model, const Operator& a, const OrliczFn& phi,
                              const PowerPair& pair, const WeightFn& f, const BoundContext& ctx) {
    return bound_orlicz_main(model, a, phi, pair, std::vector<WeightFn>{f}, ctx).front();
}

std::vector<BoundReport> bound_th6_cor1(const KernelModel& model, const Operator& a, double r,
                                        const BoundContext& ctx) {
    require_exponent(r, 1.0, "bound_th6_cor1");
    const Powers pa(a);
    const double b = ber(model, a);
    const double x2r = ber_norm(model, pa.of_abs(2 * r) + pa.of_abs_adjoint(2 * r), ctx);
    const double xr = ber_norm(model, pa.of_abs(r) + pa.of_abs_adjoint(r), ctx);
    const double cross = ber(model, pa.of_abs_adjoint(1.0).as_operator() * pa.of_abs(1.0).as_operator());
    const double rhs = x2r / 8.0 + std::pow(cross, r) / 4.0 + std::pow(b, r) * xr / 4.0;
    const std::map<std::string, double> p{{"r", r}};
    return {
        make_report(ctx, "th6_cor1", "", BoundRole::proved, std::pow(b, 2 * r), rhs, p),
        make_report(ctx, "th6_cor1", "vs_taghavi_2r", r >= 2.0 ? BoundRole::chain : BoundRole::comparison,
                    rhs, 0.5 * x2r, p),
    };
}

std::vector<BoundReport> bound_th6_cor2(const KernelModel& model, const Operator& a,
                                        const BoundContext& ctx) {
    const Powers pa(a);
    const double b = ber(model, a);
    const double x2 = ber_norm(model, pa.of_abs(2.0) + pa.of_abs_adjoint(2.0), ctx);
    const double x1 = ber_norm(model, pa.of_abs(1.0) + pa.of_abs_adjoint(1.0), ctx);
    const double cross = ber(model, pa.of_abs_adjoint(1.0).as_operator() * pa.of_abs(1.0).as_operator());
    const double rhs = x2 / 12.0 + cross / 6.0 + b * x1 / 3.0;
    const double axioms = x2 / 6.0 + b * x1 / 3.0;
    return {
        make_report(ctx, "th6_cor2", "", BoundRole::proved, b * b, rhs),
        make_report(ctx, "th6_cor2", "vs_axioms", BoundRole::chain, rhs, axioms),
    };
}

BoundReport bound_axioms_th3(const KernelModel& model, const Operator& a, const BoundContext& ctx) {
    const Powers pa(a);
    const double b = ber(model, a);
    const double x2 = ber_norm(model, pa.of_abs(2.0) + pa.of_abs_adjoint(2.0), ctx);
    const double x1 = ber_norm(model, pa.of_abs(1.0) + pa.of_abs_adjoint(1.0), ctx);
    return make_report(ctx, "axioms_th3", "", BoundRole::proved, b * b, x2 / 6.0 + b * x1 / 3.0);
}

namespace {

// Shared operands of the A*B bounds.
struct ProductTerms {
    ProductTerms(const KernelModel& model, const Operator& a, const Operator& b)
        : pa(a), pb(b), ber_ab(ber(model, a.adjoint() * b)) {
        require_same_size(a, b, "A*B bound");
        ber_cross = ber(model, pb.of_abs(2.0).as_operator() * pa.of_abs(2.0).as_operator());
    }

    // ||A|^p + |B|^p||_ber
    double sum_norm(const KernelModel& model, double p, const BoundContext& ctx) const {
        return ber_norm(model, pa.of_abs(p) + pb.of_abs(p), ctx);
    }

    Powers pa;
    Powers pb;
    double ber_ab;     // ber(A*B)
    double ber_cross;  // ber(|B|^2 |A|^2)
};

}  // namespace

std::vector<BoundReport> bound_orlicz_product(const KernelModel& model, const Operator& a,
                                              const Operator& b, const OrliczFn& phi,
                                              const std::vector<WeightFn>& fs, const BoundContext& ctx) {
    const BoundRole role = guarded(ctx, submultiplicative_known(phi),
                                   "orlicz_product needs a submultiplicative Orlicz function");
    const ProductTerms pt(model, a, b);
    const double lhs = phi(pt.ber_ab * pt.ber_ab);
    const auto& da = pt.pa.abs.abs;
    const auto& db = pt.pb.abs.abs;
    const double first = phi(pt.ber_ab) * ber(model, phi_of_power(phi, da, 2.0) + phi_of_power(phi, db, 2.0));
    const double second =
        phi(pt.ber_cross) + 0.5 * ber(model, phi_of_power(phi, da, 4.0) + phi_of_power(phi, db, 4.0));
    std::vector<BoundReport> out;
    for (const auto& f : fs) {
        const double rhs = 0.5 * f.coefficient_one() * first + 0.5 * f.coefficient_f() * second;
        auto params = phi_params(phi);
        params["alpha"] = f.alpha;
        BoundReport r = make_report(ctx, "orlicz_product", "", role, lhs, rhs, std::move(params));
        flag_if(r, role == BoundRole::logged, "precondition-violated");
        out.push_back(std::move(r));
    }
    return out;
}

BoundReport bound_orlicz_product(const KernelModel& model, const Operator& a, const Operator& b,
                                 const OrliczFn& phi, const WeightFn& f, const BoundContext& ctx) {
    return bound_orlicz_product(model, a, b, phi, std::vector<WeightFn>{f}, ctx).front();
}

namespace {

// First line of the th7_cor1 bound at exponent r, given ||A|^{2r} + |B|^{2r}||_ber
// and ||A|^{4r} + |B|^{4r}||_ber.
double th7_cor1_line1(const ProductTerms& pt, double r, double alpha, double x2, double x4) {
    return std::pow(pt.ber_ab, r) * x2 / (2 * (1 + alpha)) + alpha * x4 / (4 * (1 + alpha)) +
           alpha * std::pow(pt.ber_cross, r) / (2 * (1 + alpha));
}

void require_alpha_nonnegative(double alpha, const char* context) {
    if (!(alpha >= 0.0) || !std::isfinite(alpha)) {
        fail(ErrorCode::invalid_parameter, std::string(context) + " needs alpha >= 0");
    }
}

}  // namespace

std::vector<BoundReport> bound_th7_cor1(const KernelModel& model, const Operator& a, const Operator& b,
                                        double r, const std::vector<double>& alphas,
                                        const BoundContext& ctx) {
    require_exponent(r, 1.0, "bound_th7_cor1");
    for (double alpha : alphas) require_alpha_nonnegative(alpha, "bound_th7_cor1");
    const ProductTerms pt(model, a, b);
    const double x2 = pt.sum_norm(model, 2 * r, ctx);
    const double x4 = pt.sum_norm(model, 4 * r, ctx);
    const double br = std::pow(pt.ber_ab, r);
    std::vector<BoundReport> out;
    for (double alpha : alphas) {
        const double line1 = th7_cor1_line1(pt, r, alpha, x2, x4);
        const double line2 = br * x2 / (2 * (1 + alpha)) + alpha * x4 / (2 * (1 + alpha));
        const std::map<std::string, double> p{{"r", r}, {"alpha", alpha}};
        out.push_back(make_report(ctx, "th7_cor1", "", BoundRole::proved, br * br, line1, p));
        out.push_back(make_report(ctx, "th7_cor1", "line1_le_line2", BoundRole::chain, line1, line2, p));
    }
    return out;
}

std::vector<BoundReport> bound_th7_cor1(const KernelModel& model, const Operator& a, const Operator& b,
                                        double r, double alpha, const BoundContext& ctx) {
    return bound_th7_cor1(model, a, b, r, std::vector<double>{alpha}, ctx);
}

std::vector<BoundReport> bound_th7_cor2(const KernelModel& model, const Operator& a, const Operator& b,
                                        const BoundContext& ctx) {
    const ProductTerms pt(model, a, b);
    const double y2 = pt.sum_norm(model, 2.0, ctx);
    const double y4 = pt.sum_norm(model, 4.0, ctx);
    const double line1 = y2 * pt.ber_ab / 3.0 + y4 / 12.0 + pt.ber_cross / 6.0;
    const double line2 = y4 / 6.0 + pt.ber_ab * y2 / 3.0;
    return {
        make_report(ctx, "th7_cor2", "", BoundRole::proved, pt.ber_ab * pt.ber_ab, line1),
        make_report(ctx, "th7_cor2", "line1_le_line2", BoundRole::chain, line1, line2),
    };
}

BoundReport bound_axioms_th4(const KernelModel& model, const Operator& a, const Operator& b,
                             const BoundContext& ctx) {
    const ProductTerms pt(model, a, b);
    const double rhs = pt.sum_norm(model, 4.0, ctx) / 6.0 + pt.ber_ab * pt.sum_norm(model, 2.0, ctx) / 3.0;
    return make_report(ctx, "axioms_th4", "", BoundRole::proved, pt.ber_ab * pt.ber_ab, rhs);
}

BoundReport bound_basaran(const KernelModel& model, const Operator& a, const Operator& b, double r,
                          const BoundContext& ctx) {
    require_exponent(r, 1.0, "bound_basaran");
    require_same_size(a, b, "bound_basaran");
    const Powers pa(a);
    const Powers pb(b);
    const double lhs = std::pow(ber(model, b.adjoint() * a), r);
    const double rhs = 0.5 * ber_norm(model, pa.of_abs(2 * r) + pb.of_abs(2 * r), ctx);
    return make_report(ctx, "basaran", "", BoundRole::proved, lhs, rhs, {{"r", r}});
}

std::vector<BoundReport> bound_dcds(const KernelModel& model, const Operator& a, const Operator& b,
                                    double r, const std::vector<double>& lambdas,
                                    const BoundContext& ctx) {
    require_exponent(r, 2.0, "bound_dcds");
    for (double lambda : lambdas) require_alpha_nonnegative(lambda, "bound_dcds");
    const ProductTerms pt(model, a, b);
    const double xr = pt.sum_norm(model, r, ctx);
    const double x2r = pt.sum_norm(model, 2 * r, ctx);
    std::vector<BoundReport> out;
    for (double lambda : lambdas) {
        const double rhs = xr * std::pow(pt.ber_ab, r / 2) / (2 * lambda + 2) + lambda * x2r / (2 * lambda + 2);
        const std::map<std::string, double> p{{"r", r}, {"lambda", lambda}};
        out.push_back(make_report(ctx, "dcds", "", BoundRole::proved, std::pow(pt.ber_ab, r), rhs, p));
        out.push_back(make_report(ctx, "th7_cor1", "vs_dcds", BoundRole::comparison,
                                  th7_cor1_line1(pt, r / 2, lambda, xr, x2r), rhs, p));
    }
    return out;
}

std::vector<BoundReport> bound_dcds(const KernelModel& model, const Operator& a, const Operator& b,
                                    double r, double lambda, const BoundContext& ctx) {
    return bound_dcds(model, a, b, r, std::vector<double>{lambda}, ctx);
}

std::vector<BoundReport> bound_mjm(const KernelModel& model, const Operator& a, const Operator& b,
                                   double r, const std::vector<double>& alphas, const BoundContext& ctx) {
    require_exponent(r, 1.0, "bound_mjm");
    for (double alpha : alphas) require_alpha_unit(alpha, "bound_mjm");
    const ProductTerms pt(model, a, b);
    const double x2 = pt.sum_norm(model, 2 * r, ctx);
    const double x4 = pt.sum_norm(model, 4 * r, ctx);
    std::vector<BoundReport> out;
    for (double alpha : alphas) {
        const double rhs = (1 - alpha) / 2 * std::pow(pt.ber_ab, r) * x2 + alpha / 2 * x4;
        out.push_back(make_report(ctx, "mjm", "", BoundRole::proved, std::pow(pt.ber_ab, 2 * r), rhs,
                                  {{"r", r}, {"alpha", alpha}}));
    }
    return out;
}

BoundReport bound_mjm(const KernelModel& model, const Operator& a, const Operator& b, double r,
                      double alpha, const BoundContext& ctx) {
    return bound_mjm(model, a, b, r, std::vector<double>{alpha}, ctx).front();
}

std::vector<BoundReport> bound_th8(const KernelModel& model, const Operator& a, const OrliczFn& phi,
                                   const PowerPair& pair, const std::vector<double>& alphas,
                                   const BoundContext& ctx) {
    for (double alpha : alphas) require_alpha_unit(alpha, "bound_th8");
    const Powers pa(a);
    const double b = ber(model, a);
    const double s = pair.s();
    std::vector<BoundReport> out;
    for (bool first : {true, false}) {
        // The second inequality is the first one applied to A*.
        const auto& x = first ? pa.abs.abs : pa.abs.abs_adjoint;
        const auto& y = first ? pa.abs.abs_adjoint : pa.abs.abs;
        const HermitianMatrix quartic = phi_of_power(phi, x, 4 * s) + phi_of_power(phi, y, 4 * (1 - s));
        const HermitianMatrix last_stated = phi_of_power(phi, x, 2.0);
        const HermitianMatrix last_proved = phi_of_power(phi, y, 2.0);
        const bool zero_power = pair.zero_power_used(x, y);
        for (double alpha : alphas) {
            for (auto variant : {Th8Variant::as_stated, Th8Variant::as_proved}) {
                const auto& last = variant == Th8Variant::as_proved ? last_proved : last_stated;
                const HermitianMatrix mix = (alpha / 2) * quartic + (1 - alpha) * last;
                auto params = phi_params(phi);
                params["s"] = s;
                params["alpha"] = alpha;
                BoundReport r = make_report(
                    ctx, first ? "th8_first" : "th8_second", to_string(variant),
                    variant == Th8Variant::as_proved ? BoundRole::proved : BoundRole::logged, phi(b * b),
                    ber(model, mix), std::move(params));
                flag_if(r, zero_power, "zero-power-convention");
                out.push_back(std::move(r));
            }
        }
    }
    return out;
}

BoundReport bound_th8(const KernelModel& model, const Operator& a, const OrliczFn& phi,
                      const PowerPair& pair, double alpha, bool first, Th8Variant variant,
                      const BoundContext& ctx) {
    const auto all = bound_th8(model, a, phi, pair, std::vector<double>{alpha}, ctx);
    return all[(first ? 0 : 2) + (variant == Th8Variant::as_proved ? 1 : 0)];
}

}  // namespace berezin
