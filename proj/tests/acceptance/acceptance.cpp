// One PASS/FAIL line per acceptance criterion. Exit status 1 if any fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <string>

#include "berezin/berezin_core.hpp"
#include "berezin/cli.hpp"
#include "berezin/io.hpp"
#include "berezin/simd.hpp"
#include "berezin/verification_harness.hpp"

using namespace berezin;

namespace {

int failures = 0;

void report(const char* id, bool pass, const std::string& detail) {
    std::printf("%s %-3s %s\n", pass ? "PASS" : "FAIL", id, detail.c_str());
    std::fflush(stdout);
    if (!pass) ++failures;
}

double seconds_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

std::string fmt(const char* f, auto... args) {
    char buffer[512];
    std::snprintf(buffer, sizeof buffer, f, args...);
    return buffer;
}

bool rows_pass(const std::vector<ReproduceRow>& rows, const std::string& prefix, int& count, double& worst) {
    bool ok = true;
    count = 0;
    worst = 0.0;
    for (const auto& r : rows) {
        if (r.name.rfind(prefix, 0) != 0) continue;
        ++count;
        ok = ok && r.pass;
        worst = std::max(worst, r.difference);
    }
    return ok && count > 0;
}

const ReproduceRow* find_row(const std::vector<ReproduceRow>& rows, const std::string& name) {
    for (const auto& r : rows) {
        if (r.name == name) return &r;
    }
    return nullptr;
}

void criterion_1() {
    const auto rows = reproduce_rows();
    int n1 = 0, n2 = 0;
    double w1 = 0, w2 = 0;
    const bool a = find_row(rows, "ber_norm_nilpotent")->pass && rows_pass(rows, "tber_nilpotent", n1, w1);
    report("1a", a && n1 == 11, fmt("nilpotent: ||A||_ber and 11 t-values, max |diff| %.3g", w1));

    const bool b = rows_pass(rows, "tber_norm_product", n1, w1) && rows_pass(rows, "product_AB", n2, w2);
    report("1b", b && n1 == 3 && n2 == 3, fmt("product witness at 3 t-values, max |diff| %.3g", std::max(w1, w2)));

    const auto* m1 = find_row(rows, "min_t_ones");
    const auto* m2 = find_row(rows, "mixed_min_ones");
    report("1c", m1->pass && m2->pass,
           fmt("min_t = %.12g (|diff| %.3g), mixed min = %.12g (|diff| %.3g)", m1->computed, m1->difference,
               m2->computed, m2->difference));

    const auto start = std::chrono::steady_clock::now();
    const KernelModel hardy = default_hardy_model();
    const Operator shift = hardy_shift(hardy.hardy()->truncation);
    const double ber = berezin_number(hardy, shift).value;
    const auto symbols = berezin_symbols(hardy, shift);
    const double elapsed = seconds_since(start);
    const auto* hz = find_row(rows, "hardy_Mz");
    const auto* hf = find_row(rows, "hardy_Mz_symbol_formula");
    report("1d", hz->pass && hf->pass && ber >= 0.98 && elapsed < 5.0 && symbols.size() == hardy.size(),
           fmt("ber(M_z) = %.12g, closed-form deviation %.3g, %.2f s", ber, hf->computed, elapsed));
}

SuiteReport criterion_2() {
    CampaignConfig config;
    config.threads = 1;
    const auto start = std::chrono::steady_clock::now();
    const SuiteReport r = run_campaign(config);
    const double elapsed = seconds_since(start);
    std::size_t asserted = 0;
    for (const auto& [key, t] : r.tightness) {
        if (t.role == "proved" || t.role == "chain") asserted += t.count;
    }
    report("2", r.ok() && r.cases == config.cases_per_class * config.classes.size() && elapsed < 300.0,
           fmt("%zu cases, %zu evaluations, %zu asserted, %zu failures, %.1f s single-threaded", r.cases,
               r.evaluations, asserted, r.failures.size(), elapsed));
    if (!r.ok()) {
        for (std::size_t i = 0; i < std::min<std::size_t>(r.failures.size(), 10); ++i) {
            const auto& f = r.failures[i];
            std::printf("     case %zu %s/%s lhs %.12g rhs %.12g %s\n", f.case_index, f.bound_id.c_str(),
                        f.variant.c_str(), f.lhs, f.rhs, f.message.c_str());
        }
    }
    return r;
}

void criterion_3() {
    CounterRng rng(301);
    std::size_t bad = 0;
    double worst = 0;
    const int count = 10000;
    for (int i = 0; i < count; ++i) {
        const Eigen::Index n = 1 + i % 5;
        const KernelModel m = standard_model(static_cast<std::size_t>(n));
        const Operator a = random_operator(n, OperatorClass::general, rng);
        const Operator b = random_operator(n, OperatorClass::general, rng);
        const Complex c = rng.complex_normal();
        const double t = rng.uniform();
        const PairTable ta(m, a), tb(m, b), tsum(m, a + b), tc(m, c * a), tadj(m, a.adjoint());
        const double na = t_berezin_norm(ta, t).value;
        const double errs[] = {
            std::max(0.0, t_berezin_norm(tsum, t).value - na - t_berezin_norm(tb, t).value),
            std::abs(t_berezin_norm(tc, t).value - std::abs(c) * na),
            std::abs(berezin_norm(tadj).value - berezin_norm(ta).value),
            std::abs(berezin_number(tadj).value - berezin_number(ta).value),
            std::abs(t_berezin_norm(tadj, 1 - t).value - na),
        };
        bool ok = true;
        for (double e : errs) {
            worst = std::max(worst, e);
            ok = ok && e <= 1e-10;
        }
        if (!ok) ++bad;
    }
    report("3", bad == 0, fmt("%d tuples, %zu violations, worst deviation %.3g", count, bad, worst));
}

void criterion_4() {
    CounterRng rng(401);
    double worst = 0;
    const int count = 1000;
    for (int i = 0; i < count; ++i) {
        const Eigen::Index n = 1 + i % 6;
        const KernelModel m = standard_model(static_cast<std::size_t>(n));
        const PairTable table(m, random_operator(n, OperatorClass::psd, rng));
        worst = std::max(worst, std::abs(berezin_number(table).value - berezin_norm(table).value));
    }
    report("4", worst <= 1e-12, fmt("%d PSD matrices, max |ber - ||.||_ber| = %.3g", count, worst));
}

void criterion_5() {
    CounterRng rng(501);
    const SuiteReport bz = lemma_buzano(rng, 8, 100000);
    const SuiteReport gc = lemma_gen_cauchy(rng, 8, 100000, {0.0, 0.5, 1.0, 10.0});
    const SuiteReport ms = lemma_mixed_schwarz(rng, 4, 10000, {0.25, 0.5, 0.75});
    report("5", bz.ok() && gc.ok() && ms.ok() && bz.cases == 100000 && gc.cases == 100000 && ms.cases == 10000,
           fmt("buzano %zu/%zu, gen_cauchy %zu/%zu, mixed_schwarz %zu/%zu failures/cases", bz.failures.size(),
               bz.cases, gc.failures.size(), gc.cases, ms.failures.size(), ms.cases));
}

bool attains_both(const PairTable& table, PointPair p, double target, double tol) {
    const std::size_t k = p.lambda * table.points() + p.mu;
    return std::abs(table.forward()[k] - target) <= tol && std::abs(table.backward()[k] - target) <= tol;
}

void criterion_6() {
    const double t = 0.3, tol = 1e-9;
    const double witness_tol = tol / std::min(t, 1 - t);
    CounterRng rng(601);
    std::size_t herm_ok = 0;
    for (int i = 0; i < 1000; ++i) {
        const Eigen::Index n = 1 + i % 6;
        const KernelModel m = standard_model(static_cast<std::size_t>(n));
        const Operator h = random_operator(n, OperatorClass::hermitian, rng);
        const auto r = equality_witness(m, h, t, tol);
        if (r.equal && r.witness && attains_both(PairTable(m, h), *r.witness, r.berezin_norm, witness_tol)) {
            ++herm_ok;
        }
    }
    std::size_t consistent = 0, unequal = 0;
    for (int i = 0; i < 1000; ++i) {
        const Eigen::Index n = 2 + i % 5;
        const KernelModel m = standard_model(static_cast<std::size_t>(n));
        const Operator a = random_upper_triangular_nonnormal(n, rng);
        const auto r = equality_witness(m, a, t, tol);
        const PairTable table(m, a);
        const double norm = berezin_norm(table).value;
        bool ok;
        if (r.equal) {
            ok = r.witness && attains_both(table, *r.witness, norm, witness_tol);
        } else {
            ++unequal;
            ok = !r.witness;
            for (std::size_t l = 0; ok && l < table.points(); ++l) {
                for (std::size_t u = 0; ok && u < table.points(); ++u) ok = !attains_both(table, {l, u}, norm, tol);
            }
        }
        if (ok) ++consistent;
    }
    report("6", herm_ok == 1000 && consistent == 1000,
           fmt("hermitian %zu/1000 equal with valid witness; non-normal %zu/1000 consistent (%zu unequal)", herm_ok,
               consistent, unequal));
}

void criterion_7() {
    CounterRng rng(701);
    std::size_t yes = 0, no = 0;
    for (int i = 0; i < 500; ++i) {
        const Eigen::Index n = 1 + i % 6;
        const KernelModel m = standard_model(static_cast<std::size_t>(n));
        if (unitary_check(m, random_unitary(n, rng), rng.uniform(), 1e-9).unitary) ++yes;
    }
    for (int i = 0; i < 500; ++i) {
        const Eigen::Index n = 2 + i % 5;
        const KernelModel m = standard_model(static_cast<std::size_t>(n));
        if (!unitary_check(m, random_invertible_nonunitary(n, rng), rng.uniform(), 1e-9).unitary) ++no;
    }
    report("7", yes == 500 && no == 500,
           fmt("unitaries accepted %zu/500, invertible non-unitaries rejected %zu/500", yes, no));
}

void criterion_8() {
    CampaignConfig config;
    config.threads = 1;
    const auto start = std::chrono::steady_clock::now();
    const auto outcomes = mutation_self_test(config);
    std::string missed;
    std::size_t least = static_cast<std::size_t>(-1);
    for (const auto& o : outcomes) {
        least = std::min(least, o.failures);
        if (o.failures == 0) missed += " " + o.bound_id;
    }
    report("8", missed.empty() && outcomes.size() == bound_ids().size(),
           fmt("%zu bound ids mutated, fewest failures %zu, %.1f s%s%s", outcomes.size(), least,
               seconds_since(start), missed.empty() ? "" : ", undetected:", missed.c_str()));
}

std::size_t count_of(const SuiteReport& r, const std::string& key) {
    const auto it = r.tightness.find(key);
    return it == r.tightness.end() ? 0 : it->second.count;
}

void criterion_9(const SuiteReport& r, const ParamGrids& grids) {
    const std::size_t taghavi_cases = count_of(r, "taghavi_chain/ber_le_min") / grids.r.size();
    const std::size_t vs_taghavi = count_of(r, "taghavi_chain/vs_taghavi_r2");
    const std::size_t dcds = count_of(r, "dcds");
    const std::size_t vs_dcds = count_of(r, "th7_cor1/vs_dcds");
    const auto j = io::to_json(r);
    bool schema = j.contains("cases") && j.contains("failures") && j.contains("tightness");
    for (const char* key : {"taghavi_chain/vs_taghavi_r2", "th7_cor1/vs_dcds"}) {
        schema = schema && j["tightness"].contains(key) && j["tightness"][key].contains("improve_frac") &&
                 j["tightness"][key].contains("min_slack") && j["tightness"][key].contains("mean_slack") &&
                 j["tightness"][key]["role"] == "comparison";
    }
    const auto frac = [&](const std::string& key) {
        const auto it = r.tightness.find(key);
        return it == r.tightness.end() ? std::nan("") : it->second.improve_frac;
    };
    report("9", schema && vs_taghavi > 0 && vs_taghavi == taghavi_cases && vs_dcds > 0 && vs_dcds == dcds,
           fmt("min_t vs (1/2)|| |A|^2+|A*|^2 ||_ber: %zu/%zu cases, improve_frac %.4f; th7_cor1 vs dcds: "
               "%zu/%zu, improve_frac %.4f",
               vs_taghavi, taghavi_cases, frac("taghavi_chain/vs_taghavi_r2"), vs_dcds, dcds,
               frac("th7_cor1/vs_dcds")));
}

}  // namespace

int main() {
    std::printf("simd: %s\n", std::string(simd::name(simd::active().isa)).c_str());
    const std::pair<const char*, std::function<void()>> steps[] = {
        {"1", criterion_1}, {"3", criterion_3}, {"4", criterion_4},
        {"5", criterion_5}, {"6", criterion_6}, {"7", criterion_7},
    };
    for (const auto& [id, fn] : steps) {
        try {
            fn();
        } catch (const std::exception& e) {
            report(id, false, std::string("exception: ") + e.what());
        }
    }
    try {
        const SuiteReport campaign = criterion_2();
        criterion_9(campaign, ParamGrids{});
    } catch (const std::exception& e) {
        report("2", false, std::string("exception: ") + e.what());
    }
    try {
        criterion_8();
    } catch (const std::exception& e) {
        report("8", false, std::string("exception: ") + e.what());
    }
    std::printf("%s: %d criteria failed\n", failures == 0 ? "ALL PASS" : "FAILURES", failures);
    return failures == 0 ? 0 : 1;
}
