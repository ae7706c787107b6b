#include "berezin/verification_harness.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <memory>
#include <mutex>
#include <numbers>
#include <thread>

namespace berezin {

namespace {

constexpr std::uint64_t kGamma = 0x9E3779B97F4A7C15ULL;

}  // namespace

std::uint64_t mix64(std::uint64_t x) noexcept {
    x ^= x >> 30;
    x *= 0xBF58476D1CE4E5B9ULL;
    x ^= x >> 27;
    x *= 0x94D049BB133111EBULL;
    x ^= x >> 31;
    return x;
}

CounterRng::CounterRng(std::uint64_t seed, std::uint64_t stream) noexcept
    : key_(mix64(seed ^ mix64(stream + kGamma))) {}

std::uint64_t CounterRng::next() noexcept {
    ++counter_;
    return mix64(key_ + counter_ * kGamma);
}

double CounterRng::uniform() noexcept { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

double CounterRng::normal() noexcept {
    if (cached_) {
        const double v = *cached_;
        cached_.reset();
        return v;
    }
    const double u1 = 1.0 - uniform();
    const double u2 = uniform();
    const double radius = std::sqrt(-2.0 * std::log(u1));
    const double angle = 2.0 * std::numbers::pi * u2;
    cached_ = radius * std::sin(angle);
    return radius * std::cos(angle);
}

Complex CounterRng::complex_normal() noexcept {
    const double re = normal();
    const double im = normal();
    return {re, im};
}

std::uint64_t case_seed(std::uint64_t master, std::uint64_t index) noexcept {
    return mix64(mix64(master) + (index + 1) * kGamma);
}

std::string to_string(OperatorClass c) {
    switch (c) {
        case OperatorClass::general: return "general";
        case OperatorClass::hermitian: return "hermitian";
        case OperatorClass::psd: return "psd";
        case OperatorClass::unitary: return "unitary";
        case OperatorClass::nilpotent: return "nilpotent";
        case OperatorClass::commuting_pair: return "commuting-pair";
        case OperatorClass::psd_pair: return "psd-pair";
    }
    return "general";
}

const std::vector<OperatorClass>& all_operator_classes() {
    static const std::vector<OperatorClass> classes{
        OperatorClass::general,   OperatorClass::hermitian,      OperatorClass::psd,
        OperatorClass::unitary,   OperatorClass::nilpotent,      OperatorClass::commuting_pair,
        OperatorClass::psd_pair};
    return classes;
}

OperatorClass parse_operator_class(const std::string& name) {
    for (auto c : all_operator_classes()) {
        if (to_string(c) == name) return c;
    }
    fail(ErrorCode::parse_error, "unknown operator class '" + name + "'");
}

Matrix random_matrix(Eigen::Index n, CounterRng& rng) {
    Matrix m(n, n);
    for (Eigen::Index j = 0; j < n; ++j) {
        for (Eigen::Index i = 0; i < n; ++i) m(i, j) = rng.complex_normal();
    }
    return m;
}

Vector random_vector(Eigen::Index n, CounterRng& rng) {
    Vector v(n);
    for (Eigen::Index i = 0; i < n; ++i) v(i) = rng.complex_normal();
    return v;
}

Vector random_unit_vector(Eigen::Index n, CounterRng& rng) {
    while (true) {
        Vector v = random_vector(n, rng);
        const double norm = v.norm();
        if (norm > 1e-8) return v / norm;
    }
}

Operator random_unitary(Eigen::Index n, CounterRng& rng) {
    const Matrix g = random_matrix(n, rng);
    Eigen::HouseholderQR<Matrix> qr(g);
    Matrix q = qr.householderQ();
    const Matrix r = qr.matrixQR().triangularView<Eigen::Upper>();
    for (Eigen::Index j = 0; j < n; ++j) {
        const double mag = std::abs(r(j, j));
        if (mag > 0.0) q.col(j) *= r(j, j) / mag;
    }
    return Operator(std::move(q));
}

namespace {

Operator random_psd(Eigen::Index n, CounterRng& rng) {
    const Matrix g = random_matrix(n, rng);
    const Matrix p = g.adjoint() * g;
    return HermitianMatrix::symmetrized(p).as_operator();
}

Operator random_nilpotent(Eigen::Index n, CounterRng& rng) {
    Matrix m = Matrix::Zero(n, n);
    for (Eigen::Index j = 0; j < n; ++j) {
        for (Eigen::Index i = 0; i < j; ++i) m(i, j) = rng.complex_normal();
    }
    return Operator(std::move(m));
}

}  // namespace

Operator commuting_partner(const Operator& a, CounterRng& rng) {
    double c[4];
    for (double& ci : c) ci = rng.normal();
    const auto abs = absolute_values(a);
    auto p = [&c](double x) { return c[0] + x * (c[1] + x * (c[2] + x * c[3])); };
    double shift = 0.0;
    for (double x : clamped_psd_eigenvalues(abs.abs)) shift = std::min(shift, p(x));
    return apply_spectral(abs.abs, [&](double x) { return p(x) - shift; }).as_operator();
}

Operator random_operator(Eigen::Index n, OperatorClass c, CounterRng& rng) {
    if (n < 1) fail(ErrorCode::invalid_dimension, "random_operator needs n >= 1");
    switch (c) {
        case OperatorClass::general:
        case OperatorClass::commuting_pair: return Operator(random_matrix(n, rng));
        case OperatorClass::hermitian: {
            const Matrix g = random_matrix(n, rng);
            return HermitianMatrix::symmetrized(g).as_operator();
        }
        case OperatorClass::psd:
        case OperatorClass::psd_pair: return random_psd(n, rng);
        case OperatorClass::unitary: return random_unitary(n, rng);
        case OperatorClass::nilpotent: return random_nilpotent(n, rng);
    }
    return Operator(random_matrix(n, rng));
}

OperatorSample random_sample(Eigen::Index n, OperatorClass c, CounterRng& rng) {
    Operator a = random_operator(n, c, rng);
    if (c == OperatorClass::commuting_pair) {
        Operator b = commuting_partner(a, rng);
        return {std::move(a), std::move(b)};
    }
    Operator b = random_operator(n, c, rng);
    return {std::move(a), std::move(b)};
}

Operator random_upper_triangular_nonnormal(Eigen::Index n, CounterRng& rng) {
    if (n < 2) fail(ErrorCode::invalid_dimension, "a non-normal triangular matrix needs n >= 2");
    while (true) {
        Matrix m = Matrix::Zero(n, n);
        for (Eigen::Index j = 0; j < n; ++j) {
            for (Eigen::Index i = 0; i <= j; ++i) m(i, j) = rng.complex_normal();
        }
        if ((m.adjoint() * m - m * m.adjoint()).norm() >= 1e-3) return Operator(std::move(m));
    }
}

Operator random_invertible_nonunitary(Eigen::Index n, CounterRng& rng) {
    while (true) {
        Matrix g = random_matrix(n, rng);
        const RealVector sv = singular_values(g);
        const double smin = sv(sv.size() - 1);
        if (smin > 1e-6 && sv(0) / smin >= 1.1) return Operator(std::move(g));
    }
}

KernelModel build_model(const ModelSpec& spec) {
    switch (spec.kind) {
        case ModelKind::standard: return standard_model(spec.n);
        case ModelKind::hardy: return hardy_model(spec.truncation, spec.radii, spec.angles_per_ring);
        case ModelKind::onb:
            if (!spec.basis) fail(ErrorCode::configuration, "onb model needs basis evaluations");
            return model_from_onb(*spec.basis);
        case ModelKind::direct_sum: return build_direct_sum(spec).model;
    }
    fail(ErrorCode::configuration, "unknown model kind");
}

DirectSumModel build_direct_sum(const ModelSpec& spec) {
    if (spec.kind != ModelKind::direct_sum) {
        fail(ErrorCode::configuration, "build_direct_sum needs a direct_sum spec");
    }
    return direct_sum_model(standard_model(spec.n), spec.copies, spec.weight_steps, spec.phase_steps);
}

std::vector<CaseSpec> build_campaign(const CampaignConfig& config) {
    for (const auto& id : config.bound_ids) {
        if (!is_bound_id(id)) fail(ErrorCode::configuration, "unknown bound id '" + id + "'");
    }
    std::vector<ModelSpec> models;
    for (std::size_t n : config.dims) {
        ModelSpec m;
        m.kind = ModelKind::standard;
        m.n = n;
        models.push_back(m);
    }
    for (int truncation : config.hardy_truncations) {
        ModelSpec m;
        m.kind = ModelKind::hardy;
        m.truncation = truncation;
        m.radii = config.hardy_radii;
        m.radii.insert(m.radii.begin(), 0.0);
        m.angles_per_ring = config.hardy_angles;
        models.push_back(m);
    }
    if (models.empty()) fail(ErrorCode::configuration, "campaign has no models");
    if (config.block_dims.empty()) fail(ErrorCode::configuration, "campaign has no block dimensions");

    std::vector<CaseSpec> cases;
    for (auto c : config.classes) {
        for (std::size_t k = 0; k < config.cases_per_class; ++k) {
            CaseSpec spec;
            spec.index = cases.size();
            spec.seed = case_seed(config.seed, spec.index);
            spec.model = models[k % models.size()];
            spec.operator_class = c;
            spec.block_dim = static_cast<Eigen::Index>(config.block_dims[k % config.block_dims.size()]);
            spec.bound_ids = config.bound_ids;
            spec.grids = config.grids;
            cases.push_back(std::move(spec));
        }
    }
    return cases;
}

namespace {

std::string tightness_key(const BoundReport& r) {
    std::string key = r.variant.empty() ? r.bound_id : r.bound_id + "/" + r.variant;
    if (std::find(r.flags.begin(), r.flags.end(), "precondition-violated") != r.flags.end()) {
        key += "/precondition-violated";
    }
    return key;
}

// Direct sums used by the block bounds, shared across cases.
const DirectSumModel& block_model(int copies, Eigen::Index base_dim) {
    static std::mutex mutex;
    static std::map<std::pair<int, Eigen::Index>, std::unique_ptr<DirectSumModel>> cache;
    const std::lock_guard lock(mutex);
    auto& slot = cache[{copies, base_dim}];
    if (!slot) {
        ModelSpec spec;
        spec.kind = ModelKind::direct_sum;
        spec.n = static_cast<std::size_t>(base_dim);
        spec.copies = copies;
        spec.weight_steps = copies == 2 ? 5 : 3;
        spec.phase_steps = copies == 2 ? 8 : 4;
        slot = std::make_unique<DirectSumModel>(build_direct_sum(spec));
    }
    return *slot;
}

// Zeroes the block with probability 1/2.
Operator masked(Operator x, CounterRng& rng) {
    if (rng.uniform() < 0.5) return Operator::zero(x.size());
    return x;
}

bool psd_class(OperatorClass c) { return c == OperatorClass::psd || c == OperatorClass::psd_pair; }

std::vector<OrliczFn> campaign_orlicz(const ParamGrids& grids) {
    std::vector<OrliczFn> out;
    for (double r : grids.r) out.push_back(OrliczFn::power(r));
    out.push_back(hinge_orlicz());
    return out;
}

std::map<std::string, double> phi_params(const OrliczFn& phi) {
    if (phi.kind() == OrliczFn::Kind::power) return {{"phi_r", phi.exponent()}};
    return {{"phi_custom", 1.0}};
}

std::vector<double> unit_alphas(const std::vector<double>& alphas) {
    std::vector<double> out;
    for (double a : alphas) {
        if (a >= 0.0 && a <= 1.0) out.push_back(a);
    }
    return out;
}

class CaseEvaluator {
  public:
    CaseEvaluator(const CaseSpec& spec, const BoundContext& ctx, std::vector<Failure>* errors)
        : spec_(spec), ctx_(ctx), errors_(errors) {}

    bool wants(const char* id) const {
        return std::find(spec_.bound_ids.begin(), spec_.bound_ids.end(), id) != spec_.bound_ids.end();
    }

    template <class F>
    void run(const char* id, std::map<std::string, double> params, F&& body) {
        if (!wants(id)) return;
        try {
            body();
        } catch (const std::exception& e) {
            if (errors_ == nullptr) throw;
            Failure f;
            f.case_index = spec_.index;
            f.bound_id = id;
            f.lhs = f.rhs = f.slack = std::nan("");
            f.seed = spec_.seed;
            f.params = std::move(params);
            f.message = e.what();
            errors_->push_back(std::move(f));
        }
    }

    void add(BoundReport r) { reports_.push_back(std::move(r)); }
    void add(std::vector<BoundReport> rs) {
        for (auto& r : rs) reports_.push_back(std::move(r));
    }

    BoundContext context_for(const OrliczFn& phi) const {
        BoundContext c = ctx_;
        if (phi.submultiplicative() == Submultiplicativity::unknown) c.allow_precondition_override = true;
        return c;
    }

    std::vector<BoundReport> evaluate();

  private:
    void single_operator(const KernelModel& model, const Operator& a, const Operator& partner);
    void two_operator(const KernelModel& model, const Operator& a, const Operator& b);
    void blocks(CounterRng& rng);

    const CaseSpec& spec_;
    const BoundContext& ctx_;
    std::vector<Failure>* errors_;
    std::vector<BoundReport> reports_;
};

std::vector<BoundReport> CaseEvaluator::evaluate() {
    const KernelModel model = build_model(spec_.model);
    const auto n = model.dim();
    CounterRng rng(spec_.seed, 0);
    const OperatorSample sample = random_sample(n, spec_.operator_class, rng);
    const Operator partner = spec_.operator_class == OperatorClass::commuting_pair
                                 ? sample.b
                                 : commuting_partner(sample.a, rng);

    single_operator(model, sample.a, partner);

    const Operator pa = psd_class(spec_.operator_class) ? sample.a : absolute_value(sample.a).as_operator();
    const Operator pb = psd_class(spec_.operator_class) ? sample.b : absolute_value(sample.b).as_operator();
    run("convexity_axioms", {},
        [&] { add(bound_convexity_axioms(model, pa, pb, spec_.grids.t, spec_.grids.r, ctx_)); });

    two_operator(model, sample.a, sample.b);

    CounterRng block_rng(spec_.seed, 1);
    blocks(block_rng);
    return std::move(reports_);
}

void CaseEvaluator::single_operator(const KernelModel& model, const Operator& a,
                                    const Operator& partner) {
    const auto& g = spec_.grids;
    run("sandwich", {}, [&] { add(bound_sandwich(model, a, g.t, ctx_)); });
    run("product", {}, [&] { add(bound_product(model, a, partner, g.t, ctx_)); });
    run("mixed", {}, [&] { add(bound_mixed(model, a, g.t, ctx_)); });
    for (double r : g.r) {
        run("taghavi_chain", {{"r", r}}, [&] { add(bound_taghavi_chain(model, a, r, ctx_)); });
        run("th6_cor1", {{"r", r}}, [&] { add(bound_th6_cor1(model, a, r, ctx_)); });
    }
    run("th6_cor2", {}, [&] { add(bound_th6_cor2(model, a, ctx_)); });
    run("axioms_th3", {}, [&] { add(bound_axioms_th3(model, a, ctx_)); });

    std::vector<WeightFn> fs;
    for (double alpha : g.alpha) fs.emplace_back(alpha);
    const auto unit = unit_alphas(g.alpha);
    for (const auto& phi : campaign_orlicz(g)) {
        const BoundContext c = context_for(phi);
        const auto pp = phi_params(phi);
        for (double s : g.s) {
            const PowerPair pair(s);
            auto params = pp;
            params["s"] = s;
            run("orlicz_main", params, [&] { add(bound_orlicz_main(model, a, phi, pair, fs, c)); });
            if (wants("th8_first") || wants("th8_second")) {
                const char* id = wants("th8_first") ? "th8_first" : "th8_second";
                run(id, params, [&] {
                    for (auto& r : bound_th8(model, a, phi, pair, unit, ctx_)) {
                        if (wants(r.bound_id.c_str())) add(std::move(r));
                    }
                });
            }
        }
    }
}

void CaseEvaluator::two_operator(const KernelModel& model, const Operator& a, const Operator& b) {
    const auto& g = spec_.grids;
    std::vector<WeightFn> fs;
    for (double alpha : g.alpha) fs.emplace_back(alpha);
    for (const auto& phi : campaign_orlicz(g)) {
        const BoundContext c = context_for(phi);
        run("orlicz_product", phi_params(phi),
            [&] { add(bound_orlicz_product(model, a, b, phi, fs, c)); });
    }
    const auto unit = unit_alphas(g.alpha);
    for (double r : g.r) {
        run("th7_cor1", {{"r", r}}, [&] { add(bound_th7_cor1(model, a, b, r, g.alpha, ctx_)); });
        run("mjm", {{"r", r}}, [&] { add(bound_mjm(model, a, b, r, unit, ctx_)); });
        run("basaran", {{"r", r}}, [&] { add(bound_basaran(model, a, b, r, ctx_)); });
        if (r >= 2.0) run("dcds", {{"r", r}}, [&] { add(bound_dcds(model, a, b, r, g.lambda, ctx_)); });
    }
    run("th7_cor2", {}, [&] { add(bound_th7_cor2(model, a, b, ctx_)); });
    run("axioms_th4", {}, [&] { add(bound_axioms_th4(model, a, b, ctx_)); });
}

void CaseEvaluator::blocks(CounterRng& rng) {
    static const char* ids[] = {"block_diag", "block_offdiag_single", "block_offdiag", "block_2x2",
                                "block_nxn"};
    if (std::none_of(std::begin(ids), std::end(ids), [this](const char* id) { return wants(id); })) return;

    const Eigen::Index n = spec_.block_dim;
    const auto c = spec_.operator_class;
    const OperatorSample s1 = random_sample(n, c, rng);
    const OperatorSample s2 = random_sample(n, c, rng);
    const auto& ts = spec_.grids.t;

    run("block_diag", {}, [&] {
        const auto& ds = block_model(2, n);
        add(bound_block_diag(ds, s1.a, s1.b, ts, ctx_));
    });
    run("block_offdiag_single", {}, [&] {
        const auto& ds = block_model(2, n);
        add(bound_block_offdiag_single(ds, s1.a, ts, ctx_));
    });
    run("block_offdiag", {}, [&] {
        const auto& ds = block_model(2, n);
        add(bound_block_offdiag(ds, s1.a, s1.b, ts, ctx_));
    });

    // Masks are drawn unconditionally so the operands do not depend on the bound filter.
    const Operator m11 = masked(s1.a, rng);
    const Operator m12 = masked(s1.b, rng);
    const Operator m21 = masked(s2.a, rng);
    const Operator m22 = masked(s2.b, rng);
    run("block_2x2", {}, [&] {
        const auto& ds = block_model(2, n);
        add(bound_block_2x2(ds, m11, m12, m21, m22, ts, ctx_));
    });

    std::vector<std::vector<Operator>> grid(3);
    for (auto& row : grid) {
        for (int j = 0; j < 3; ++j) row.push_back(masked(random_operator(n, c, rng), rng));
    }
    run("block_nxn", {}, [&] {
        const auto& ds = block_model(3, n);
        add(bound_block_nxn(ds, block_n(grid), ts, ctx_));
    });
}

}  // namespace

std::vector<BoundReport> evaluate_case(const CaseSpec& spec, const BoundContext& ctx,
                                       std::vector<Failure>* errors) {
    return CaseEvaluator(spec, ctx, errors).evaluate();
}

void record(SuiteReport& suite, const BoundReport& report, std::size_t case_index, std::uint64_t seed) {
    ++suite.evaluations;
    if (report.failed()) {
        suite.failures.push_back(Failure{case_index, report.bound_id, report.variant, report.lhs,
                                         report.rhs, report.slack, seed, report.params, ""});
    }
    auto [it, inserted] = suite.tightness.try_emplace(tightness_key(report));
    Tightness& t = it->second;
    if (inserted) {
        t.min_slack = report.slack;
        t.role = to_string(report.role);
    }
    t.min_slack = std::min(t.min_slack, report.slack);
    t.mean_slack += report.slack;  // sum until finalize
    ++t.count;
    if (report.slack > report.tol) ++t.improve_count;
}

void finalize(SuiteReport& suite) {
    for (auto& [key, t] : suite.tightness) {
        if (t.count == 0) continue;
        t.mean_slack /= static_cast<double>(t.count);
        t.improve_frac = static_cast<double>(t.improve_count) / static_cast<double>(t.count);
    }
}

SuiteReport run_suite(const std::vector<CaseSpec>& cases, const SuiteOptions& options) {
    BoundContext ctx;
    ctx.tol_rel = options.tol_rel;
    ctx.mutate = options.mutate;
    ctx.mutate_factor = options.mutate_factor;

    struct CaseResult {
        std::vector<BoundReport> reports;
        std::vector<Failure> errors;
    };
    std::vector<CaseResult> results(cases.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < cases.size(); i = next++) {
            try {
                results[i].reports = evaluate_case(cases[i], ctx, &results[i].errors);
            } catch (const std::exception& e) {
                Failure f;
                f.case_index = cases[i].index;
                f.bound_id = "case";
                f.lhs = f.rhs = f.slack = std::nan("");
                f.seed = cases[i].seed;
                f.message = e.what();
                results[i].errors.push_back(std::move(f));
            }
        }
    };
    unsigned threads = options.threads == 0 ? std::max(1u, std::thread::hardware_concurrency())
                                            : options.threads;
    threads = static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(1, cases.size())));
    if (threads <= 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        for (unsigned k = 0; k < threads; ++k) pool.emplace_back(worker);
    }

    SuiteReport suite;
    suite.cases = cases.size();
    for (std::size_t i = 0; i < cases.size(); ++i) {
        for (const auto& r : results[i].reports) record(suite, r, cases[i].index, cases[i].seed);
        for (auto& f : results[i].errors) suite.failures.push_back(std::move(f));
    }
    finalize(suite);
    return suite;
}

SuiteReport run_campaign(const CampaignConfig& config) {
    SuiteOptions options;
    options.tol_rel = config.tol_rel;
    options.threads = config.threads;
    options.mutate = config.mutate;
    options.mutate_factor = config.mutate_factor;
    return run_suite(build_campaign(config), options);
}

std::vector<MutationOutcome> mutation_self_test(const CampaignConfig& config) {
    std::vector<MutationOutcome> out;
    for (const auto& id : config.bound_ids) {
        CampaignConfig c = config;
        c.bound_ids = {id};
        c.mutate = id;
        out.push_back({id, run_campaign(c).failures.size()});
    }
    return out;
}

namespace {

void record_lemma(SuiteReport& suite, const BoundContext& ctx, const char* id, double lhs, double rhs,
                  std::size_t index, std::uint64_t position, std::map<std::string, double> params = {}) {
    record(suite, make_report(ctx, id, "", BoundRole::proved, lhs, rhs, std::move(params)), index,
           position);
}

}  // namespace

SuiteReport lemma_buzano(CounterRng& rng, Eigen::Index n, std::size_t count, double tol_rel) {
    if (n < 1) fail(ErrorCode::invalid_dimension, "lemma_buzano needs n >= 1");
    BoundContext ctx;
    ctx.tol_rel = tol_rel;
    SuiteReport suite;
    suite.cases = count;
    for (std::size_t i = 0; i < count; ++i) {
        const std::uint64_t position = rng.counter();
        const Vector x = random_vector(n, rng);
        const Vector y = random_vector(n, rng);
        const Vector e = random_unit_vector(n, rng);
        const double lhs = std::abs(e.dot(x) * y.dot(e));
        const double rhs = 0.5 * (x.norm() * y.norm() + std::abs(y.dot(x)));
        record_lemma(suite, ctx, "buzano", lhs, rhs, i, position);
    }
    finalize(suite);
    return suite;
}

SuiteReport lemma_gen_cauchy(CounterRng& rng, Eigen::Index n, std::size_t count,
                             const std::vector<double>& alpha_grid, double tol_rel) {
    if (n < 1) fail(ErrorCode::invalid_dimension, "lemma_gen_cauchy needs n >= 1");
    BoundContext ctx;
    ctx.tol_rel = tol_rel;
    SuiteReport suite;
    suite.cases = count;
    for (std::size_t i = 0; i < count; ++i) {
        const std::uint64_t position = rng.counter();
        const Vector x = random_vector(n, rng);
        const Vector y = random_vector(n, rng);
        const double ip = std::abs(y.dot(x));
        const double nx = x.norm();
        const double ny = y.norm();
        for (double alpha : alpha_grid) {
            const WeightFn f(alpha);
            const double rhs = f.coefficient_f() * nx * nx * ny * ny + f.coefficient_one() * ip * nx * ny;
            record_lemma(suite, ctx, "gen_cauchy", ip * ip, rhs, i, position, {{"alpha", alpha}});
        }
    }
    finalize(suite);
    return suite;
}

SuiteReport lemma_mixed_schwarz(CounterRng& rng, Eigen::Index n, std::size_t count,
                                const std::vector<double>& s_grid, double tol_rel) {
    if (n < 1) fail(ErrorCode::invalid_dimension, "lemma_mixed_schwarz needs n >= 1");
    for (double s : s_grid) static_cast<void>(PowerPair(s));
    BoundContext ctx;
    ctx.tol_rel = tol_rel;
    SuiteReport suite;
    suite.cases = count;
    for (std::size_t i = 0; i < count; ++i) {
        const std::uint64_t position = rng.counter();
        const OperatorSample pair = random_sample(n, OperatorClass::commuting_pair, rng);
        const Vector x = random_vector(n, rng);
        const Vector y = random_vector(n, rng);
        const auto abs = absolute_values(pair.a);
        const double rb = spectral_radius(pair.b);
        const double lhs = std::abs(y.dot(pair.a.matrix() * (pair.b.matrix() * x)));
        for (double s : s_grid) {
            const double rhs = rb * (psd_power(abs.abs, s).matrix() * x).norm() *
                               (psd_power(abs.abs_adjoint, 1.0 - s).matrix() * y).norm();
            record_lemma(suite, ctx, "mixed_schwarz", lhs, rhs, i, position, {{"s", s}});
        }
    }
    finalize(suite);
    return suite;
}

}  // namespace berezin
