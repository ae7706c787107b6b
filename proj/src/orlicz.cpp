#include "berezin/orlicz.hpp"

#include <algorithm>
#include <cmath>

namespace berezin {

std::string to_string(Submultiplicativity flag) {
    switch (flag) {
        case Submultiplicativity::proved: return "proved";
        case Submultiplicativity::checked: return "numerically-checked";
        case Submultiplicativity::unknown: return "unknown";
    }
    return "unknown";
}

OrliczFn::OrliczFn(Kind kind, double r, std::string name, ScalarFn fn, Submultiplicativity flag)
    : kind_(kind), r_(r), name_(std::move(name)), fn_(std::move(fn)), flag_(flag) {}

OrliczFn OrliczFn::power(double r) {
    if (!(r >= 1.0) || !std::isfinite(r)) {
        fail(ErrorCode::not_convex_orlicz, "t^r is an Orlicz function only for r >= 1");
    }
    return OrliczFn(Kind::power, r, "power", nullptr, Submultiplicativity::proved);
}

std::vector<double> orlicz_check_grid() {
    std::vector<double> grid{0.0};
    const double lo = std::log(1e-6);
    const double hi = std::log(1e3);
    for (int i = 0; i < 1023; ++i) grid.push_back(std::exp(lo + (hi - lo) * i / 1022.0));
    return grid;
}

OrliczFn OrliczFn::custom(std::string name, ScalarFn phi, bool acknowledge_sampled_checks) {
    if (!acknowledge_sampled_checks) {
        fail(ErrorCode::not_convex_orlicz,
             "custom Orlicz function '" + name + "' needs acknowledgment that its checks are sampled");
    }
    if (!phi) fail(ErrorCode::invalid_parameter, "custom Orlicz function is empty");
    if (!(std::abs(phi(0.0)) <= 1e-12)) {
        fail(ErrorCode::not_convex_orlicz, "custom Orlicz function '" + name + "' has phi(0) != 0");
    }
    const auto grid = orlicz_check_grid();
    std::vector<double> values(grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i) values[i] = phi(grid[i]);
    constexpr double tol = 1e-10;
    for (std::size_t i = 0; i + 1 < grid.size(); ++i) {
        const double scale = tol * (1.0 + std::abs(values[i]) + std::abs(values[i + 1]));
        if (values[i + 1] < values[i] - scale) {
            fail(ErrorCode::not_convex_orlicz,
                 "custom Orlicz function '" + name + "' decreases near t = " + std::to_string(grid[i]));
        }
        for (std::size_t step = 1; step <= 2 && i + step < grid.size(); ++step) {
            const double a = grid[i];
            const double b = grid[i + step];
            const double mid = phi(0.5 * (a + b));
            const double chord = 0.5 * (values[i] + values[i + step]);
            if (mid > chord + tol * (1.0 + std::abs(chord))) {
                fail(ErrorCode::not_convex_orlicz, "custom Orlicz function '" + name +
                                                       "' is not midpoint convex on [" +
                                                       std::to_string(a) + ", " + std::to_string(b) + "]");
            }
        }
    }
    return OrliczFn(Kind::custom, 0.0, std::move(name), std::move(phi), Submultiplicativity::unknown);
}

double OrliczFn::operator()(double x) const {
    if (kind_ == Kind::power) return std::pow(std::max(x, 0.0), r_);
    return fn_(x);
}

OrliczFn OrliczFn::with_submultiplicative_check() const {
    if (flag_ == Submultiplicativity::proved) return *this;
    OrliczFn out = *this;
    out.flag_ = check_submultiplicative(*this, default_submultiplicative_grid()).ok
                    ? Submultiplicativity::checked
                    : Submultiplicativity::unknown;
    return out;
}

HermitianMatrix OrliczFn::apply(const HermitianMatrix& h) const {
    return apply_spectral(h, [this](double x) { return (*this)(x); });
}

std::vector<double> default_submultiplicative_grid() {
    std::vector<double> grid{0.0, 0.5, 1.0, 1.5, 2.0};
    for (int i = 0; i < 60; ++i) grid.push_back(std::pow(10.0, -3.0 + 5.0 * i / 59.0));
    std::sort(grid.begin(), grid.end());
    return grid;
}

SubmultiplicativeCheck check_submultiplicative(const OrliczFn& phi, const std::vector<double>& grid) {
    SubmultiplicativeCheck out;
    for (double x : grid) {
        for (double y : grid) {
            const double lhs = phi(x * y);
            const double rhs = phi(x) * phi(y);
            if (lhs > rhs * (1.0 + 1e-10)) {
                const double ratio = rhs > 0.0 ? lhs / rhs : HUGE_VAL;
                if (out.ok || ratio > out.worst_ratio) {
                    out.worst_x = x;
                    out.worst_y = y;
                    out.worst_ratio = ratio;
                }
                out.ok = false;
            }
        }
    }
    return out;
}

OrliczFn hinge_orlicz() {
    return OrliczFn::custom("hinge", [](double x) { return std::max(0.0, x - 1.0); }, true);
}

PowerPair::PowerPair(double s) : s_(s) {
    if (!(s >= 0.0 && s <= 1.0)) fail(ErrorCode::invalid_parameter, "factor pair needs s in [0, 1]");
}

double PowerPair::g(double x) const { return std::pow(x, s_); }
double PowerPair::h(double x) const { return std::pow(x, 1.0 - s_); }

HermitianMatrix psd_power(const SpectralDecomposition& d, double p) {
    // std::pow(0, 0) is 1, which is the 0^0 convention used throughout.
    return apply_spectral(d, [p](double x) { return std::pow(x, p); });
}

HermitianMatrix phi_of_power(const OrliczFn& phi, const SpectralDecomposition& d, double p) {
    return apply_spectral(d, [&phi, p](double x) { return phi(std::pow(x, p)); });
}

HermitianMatrix PowerPair::g_power(const SpectralDecomposition& abs, int k) const {
    return psd_power(abs, k * s_);
}

HermitianMatrix PowerPair::h_power(const SpectralDecomposition& abs_adjoint, int k) const {
    return psd_power(abs_adjoint, k * (1.0 - s_));
}

bool PowerPair::zero_power_used(const SpectralDecomposition& abs,
                                const SpectralDecomposition& abs_adjoint) const {
    auto has_zero = [](const SpectralDecomposition& d) {
        const RealVector ev = clamped_psd_eigenvalues(d);
        return (ev.array() == 0.0).any();
    };
    return (s_ == 0.0 && has_zero(abs)) || (s_ == 1.0 && has_zero(abs_adjoint));
}

WeightFn::WeightFn(double value) : alpha(value) {
    if (!(value >= 0.0) || !std::isfinite(value)) {
        fail(ErrorCode::invalid_parameter, "weight value must be finite and >= 0");
    }
}

WeightFn WeightFn::ratio_shape(double t) {
    if (!(t > 0.0 && t < 1.0)) fail(ErrorCode::invalid_parameter, "t / (1 - t) needs t in (0, 1)");
    return WeightFn(t / (1.0 - t));
}

}  // namespace berezin
