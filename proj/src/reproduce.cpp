#include <cmath>
#include <cstdio>

#include "berezin/berezin_core.hpp"
#include "berezin/cli.hpp"

namespace berezin {

namespace {

Operator from_rows(std::initializer_list<std::initializer_list<double>> rows) {
    Matrix m(static_cast<Eigen::Index>(rows.size()), static_cast<Eigen::Index>(rows.begin()->size()));
    Eigen::Index i = 0;
    for (const auto& row : rows) {
        Eigen::Index j = 0;
        for (double v : row) m(i, j++) = v;
        ++i;
    }
    return Operator(std::move(m));
}

std::string with_t(const char* name, double t) {
    char buffer[64];
    std::snprintf(buffer, sizeof buffer, "%s[t=%.2f]", name, t);
    return buffer;
}

void push(std::vector<ReproduceRow>& rows, std::string name, double expected, double computed,
          double threshold = 1e-10, std::string note = {}) {
    const double diff = std::abs(computed - expected);
    rows.push_back({std::move(name), expected, computed, diff, threshold, diff <= threshold, std::move(note)});
}

// ((1 - r^{2N}) / (1 - r^{2N+2})) lambda, the truncated shift symbol.
Complex shift_symbol(int truncation, Complex lambda) {
    const double r2 = std::norm(lambda);
    if (r2 == 0.0) return 0.0;
    return lambda * (1.0 - std::pow(r2, truncation)) / (1.0 - std::pow(r2, truncation + 1));
}

}  // namespace

std::vector<ReproduceRow> reproduce_rows() {
    std::vector<ReproduceRow> rows;
    const KernelModel c2 = standard_model(2);

    const Operator a = from_rows({{0, 1}, {0, 0}});
    const Operator b = from_rows({{0, 0}, {1, 0}});
    const PairTable ta(c2, a);
    push(rows, "ber_norm_nilpotent", 1.0, berezin_norm(ta).value);
    for (int k = 0; k <= 10; ++k) {
        const double t = k / 10.0;
        push(rows, with_t("tber_nilpotent", t), std::max(t, 1.0 - t), t_berezin_norm(ta, t).value);
    }

    const PairTable tb(c2, b);
    const PairTable tab(c2, a * b);
    for (double t : {0.25, 0.5, 0.75}) {
        const double w = std::max(t, 1.0 - t);
        push(rows, with_t("tber_norm_product", t), w * w,
             t_berezin_norm(ta, t).value * t_berezin_norm(tb, t).value);
        push(rows, with_t("product_AB", t), 1.0, t_berezin_norm(tab, t).value);
    }

    const Operator ones = from_rows({{1, 1}, {1, 1}});
    push(rows, "min_t_ones", 1.0, min_t_berezin(c2, ones).value);
    const Operator gram = ones.adjoint() * ones;
    const Operator cogram = ones * ones.adjoint();
    const auto mixed = golden_section_min(
        [&](double t) {
            return std::sqrt(berezin_norm(c2, Complex(t) * gram + Complex(1.0 - t) * cogram).value);
        },
        0.0, 1.0, kDefaultTolT);
    push(rows, "mixed_min_ones", std::sqrt(2.0), mixed.value);

    const KernelModel hardy = default_hardy_model();
    const int n = hardy.hardy()->truncation;
    const Operator shift = hardy_shift(n);
    const auto symbols = berezin_symbols(hardy, shift);
    double worst = 0.0;
    for (std::size_t i = 0; i < symbols.size(); ++i) {
        worst = std::max(worst, std::abs(symbols[i] - shift_symbol(n, hardy.disk_point(i))));
    }
    const double ber = berezin_number(hardy, shift).value;
    rows.push_back({"hardy_Mz", 1.0, ber, std::abs(1.0 - ber), 0.02, ber >= 0.98,
                    "grid-limited: radius cap 0.99 and N = 64 keep ber near 0.9827"});
    push(rows, "hardy_Mz_symbol_formula", 0.0, worst, 1e-10, "max deviation from the closed form");
    return rows;
}

}  // namespace berezin
