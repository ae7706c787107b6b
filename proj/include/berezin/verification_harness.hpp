#pragma once

// Seeded operator generators, lemma oracles and the inequality campaign.
//
// Random numbers come from SplitMix64 in counter mode. Word k of stream
// (seed, s) is mix64(key + (k + 1) * 0x9E3779B97F4A7C15) with
// key = mix64(seed ^ mix64(s + 0x9E3779B97F4A7C15)), where mix64 is the
// SplitMix64 finalizer. Uniforms take the top 53 bits; normals use
// Box-Muller on (1 - u1, u2) and return the sine branch on the next call.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "berezin/berezin_core.hpp"
#include "berezin/block_operators.hpp"
#include "berezin/bound_catalog.hpp"

namespace berezin {

std::uint64_t mix64(std::uint64_t x) noexcept;

class CounterRng {
  public:
    CounterRng(std::uint64_t seed, std::uint64_t stream = 0) noexcept;

    std::uint64_t next() noexcept;
    /// Uniform on [0, 1).
    double uniform() noexcept;
    double normal() noexcept;
    /// Real and imaginary parts independent standard normals.
    Complex complex_normal() noexcept;
    std::uint64_t counter() const noexcept { return counter_; }

  private:
    std::uint64_t key_;
    std::uint64_t counter_ = 0;
    std::optional<double> cached_;
};

/// Seed of case `index` in a campaign with the given master seed.
std::uint64_t case_seed(std::uint64_t master, std::uint64_t index) noexcept;

enum class OperatorClass { general, hermitian, psd, unitary, nilpotent, commuting_pair, psd_pair };

std::string to_string(OperatorClass c);
OperatorClass parse_operator_class(const std::string& name);
const std::vector<OperatorClass>& all_operator_classes();

Matrix random_matrix(Eigen::Index n, CounterRng& rng);
Vector random_vector(Eigen::Index n, CounterRng& rng);
Vector random_unit_vector(Eigen::Index n, CounterRng& rng);

Operator random_operator(Eigen::Index n, OperatorClass c, CounterRng& rng);

struct OperatorSample {
    Operator a;
    Operator b;
};

/// Pair classes return their pair; other classes an independent second draw.
OperatorSample random_sample(Eigen::Index n, OperatorClass c, CounterRng& rng);

/// p(|A|) for a random real cubic p, shifted to be nonnegative on the spectrum of |A|.
Operator commuting_partner(const Operator& a, CounterRng& rng);

Operator random_unitary(Eigen::Index n, CounterRng& rng);
/// Upper triangular with ||A*A - AA*|| >= 1e-3.
Operator random_upper_triangular_nonnormal(Eigen::Index n, CounterRng& rng);
/// Gaussian matrix with condition number >= 1.1.
Operator random_invertible_nonunitary(Eigen::Index n, CounterRng& rng);

struct ParamGrids {
    std::vector<double> t{0.0, 0.1, 0.25, 0.5, 0.75, 0.9, 1.0};
    std::vector<double> r{1.0, 1.5, 2.0, 3.0};
    std::vector<double> s{0.0, 0.25, 0.5, 0.75, 1.0};
    std::vector<double> alpha{0.0, 0.5, 1.0, 2.0};
    std::vector<double> lambda{0.0, 1.0, 5.0};
};

struct ModelSpec {
    ModelKind kind = ModelKind::standard;
    std::size_t n = 2;  // standard dimension, or base dimension of a direct sum
    int truncation = 8;
    std::vector<double> radii;
    int angles_per_ring = 16;
    std::optional<Matrix> basis;  // onb: rows basis functions, columns points
    int copies = 2;
    int weight_steps = 5;
    int phase_steps = 8;
};

KernelModel build_model(const ModelSpec& spec);
/// Requires kind == direct_sum; the base is standard_model(spec.n).
DirectSumModel build_direct_sum(const ModelSpec& spec);

struct CaseSpec {
    std::size_t index = 0;
    std::uint64_t seed = 0;
    ModelSpec model;
    OperatorClass operator_class = OperatorClass::general;
    Eigen::Index block_dim = 2;
    std::vector<std::string> bound_ids;
    ParamGrids grids;
};

struct CampaignConfig {
    std::uint64_t seed = 20240601;
    std::size_t cases_per_class = 200;
    std::vector<OperatorClass> classes = all_operator_classes();
    std::vector<std::size_t> dims{1, 2, 3, 4, 6};
    std::vector<int> hardy_truncations{8, 16};
    std::vector<double> hardy_radii{0.25, 0.5, 0.75, 0.9, 0.99};
    int hardy_angles = 16;
    std::vector<std::size_t> block_dims{2, 3};
    std::vector<std::string> bound_ids = berezin::bound_ids();
    ParamGrids grids;
    double tol_rel = 1e-9;
    unsigned threads = 0;  // 0: hardware concurrency
    std::optional<std::string> mutate;
    double mutate_factor = 0.9;
};

std::vector<CaseSpec> build_campaign(const CampaignConfig& config);

struct Failure {
    std::size_t case_index = 0;
    std::string bound_id;
    std::string variant;
    double lhs = 0.0;
    double rhs = 0.0;
    double slack = 0.0;
    std::uint64_t seed = 0;
    std::map<std::string, double> params;
    std::string message;
};

struct Tightness {
    double min_slack = 0.0;
    double mean_slack = 0.0;
    std::size_t count = 0;
    std::size_t improve_count = 0;
    double improve_frac = 0.0;
    std::string role;
};

struct SuiteReport {
    std::size_t cases = 0;
    std::size_t evaluations = 0;
    std::vector<Failure> failures;
    /// Keyed by bound_id, or bound_id/variant.
    std::map<std::string, Tightness> tightness;

    bool ok() const noexcept { return failures.empty(); }
};

/// Adds one report to the failure list and tightness statistics.
void record(SuiteReport& suite, const BoundReport& report, std::size_t case_index, std::uint64_t seed);
/// Turns the running slack sums into means and fractions.
void finalize(SuiteReport& suite);

struct SuiteOptions {
    double tol_rel = 1e-9;
    unsigned threads = 0;
    std::optional<std::string> mutate;
    double mutate_factor = 0.9;
};

/// Every report of one case, in a fixed order.
std::vector<BoundReport> evaluate_case(const CaseSpec& spec, const BoundContext& ctx,
                                       std::vector<Failure>* errors = nullptr);

SuiteReport run_suite(const std::vector<CaseSpec>& cases, const SuiteOptions& options = {});
SuiteReport run_campaign(const CampaignConfig& config);

struct MutationOutcome {
    std::string bound_id;
    std::size_t failures = 0;
};

/// One campaign per bound id with that id's asserted right sides scaled.
std::vector<MutationOutcome> mutation_self_test(const CampaignConfig& config);

// Vector-level lemma suites.
SuiteReport lemma_buzano(CounterRng& rng, Eigen::Index n, std::size_t count, double tol_rel = 1e-9);
SuiteReport lemma_gen_cauchy(CounterRng& rng, Eigen::Index n, std::size_t count,
                             const std::vector<double>& alpha_grid, double tol_rel = 1e-9);
/// |<ABx, y>| <= r(B) || |A|^s x || || |A*|^{1-s} y || on commuting pairs (A, B).
SuiteReport lemma_mixed_schwarz(CounterRng& rng, Eigen::Index n, std::size_t count,
                                const std::vector<double>& s_grid, double tol_rel = 1e-9);

}  // namespace berezin
