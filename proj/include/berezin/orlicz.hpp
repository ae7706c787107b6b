#pragma once

// Orlicz functions, power factor pairs (g, h) = (t^s, t^{1-s}) and the scalar
// weight f used by the Orlicz-type bounds.

#include <string>
#include <vector>

#include "berezin/linalg.hpp"

namespace berezin {

enum class Submultiplicativity { proved, checked, unknown };

std::string to_string(Submultiplicativity flag);

class OrliczFn {
  public:
    enum class Kind { power, custom };

    /// phi(t) = t^r, r >= 1. Submultiplicative by (xy)^r = x^r y^r.
    static OrliczFn power(double r);

    /// A user function. Construction checks phi(0) ~ 0, monotonicity and
    /// midpoint convexity on the check grid. Those checks are sampled, not
    /// proofs, so the caller has to pass acknowledge_sampled_checks = true.
    static OrliczFn custom(std::string name, ScalarFn phi, bool acknowledge_sampled_checks);

    double operator()(double x) const;

    Kind kind() const noexcept { return kind_; }
    double exponent() const noexcept { return r_; }
    const std::string& name() const noexcept { return name_; }
    Submultiplicativity submultiplicative() const noexcept { return flag_; }

    /// Returns a copy flagged as checked when check_submultiplicative passes on the default grid.
    OrliczFn with_submultiplicative_check() const;

    /// phi(H) for PSD H by spectral calculus.
    HermitianMatrix apply(const HermitianMatrix& h) const;

  private:
    OrliczFn(Kind kind, double r, std::string name, ScalarFn fn, Submultiplicativity flag);

    Kind kind_;
    double r_;
    std::string name_;
    ScalarFn fn_;
    Submultiplicativity flag_;
};

/// 0 followed by 1023 log-spaced points on [1e-6, 1e3].
std::vector<double> orlicz_check_grid();

struct SubmultiplicativeCheck {
    bool ok = true;
    double worst_x = 0.0;
    double worst_y = 0.0;
    double worst_ratio = 0.0;  // max phi(xy) / (phi(x) phi(y)) over violating pairs, 0 if none
};

/// ok iff phi(xy) <= phi(x) phi(y) (1 + 1e-10) on every pair of grid values.
SubmultiplicativeCheck check_submultiplicative(const OrliczFn& phi, const std::vector<double>& grid);
std::vector<double> default_submultiplicative_grid();

/// max(0, t - 1): an Orlicz function that is not submultiplicative.
OrliczFn hinge_orlicz();

/// g(t) = t^s, h(t) = t^{1-s}, with 0^0 = 1.
class PowerPair {
  public:
    explicit PowerPair(double s);

    double s() const noexcept { return s_; }
    double g(double x) const;
    double h(double x) const;

    /// g^k(|A|) = |A|^{k s} from the decomposition of |A|.
    HermitianMatrix g_power(const SpectralDecomposition& abs, int k) const;
    /// h^k(|A*|) = |A*|^{k (1 - s)} from the decomposition of |A*|.
    HermitianMatrix h_power(const SpectralDecomposition& abs_adjoint, int k) const;

    /// True when the decomposition has a zero eigenvalue raised to the power 0.
    bool zero_power_used(const SpectralDecomposition& abs, const SpectralDecomposition& abs_adjoint) const;

  private:
    double s_;
};

/// |X|^p for X given by its (PSD) decomposition, with 0^0 = 1.
HermitianMatrix psd_power(const SpectralDecomposition& d, double p);
/// phi(X^p) in one spectral pass.
HermitianMatrix phi_of_power(const OrliczFn& phi, const SpectralDecomposition& d, double p);

/// The value alpha = f(t) of the weight function f : (0, 1) -> [0, inf).
struct WeightFn {
    double alpha = 0.0;

    explicit WeightFn(double value);
    /// f(t) = t / (1 - t), t in (0, 1).
    static WeightFn ratio_shape(double t);

    double coefficient_f() const noexcept { return alpha / (1.0 + alpha); }
    double coefficient_one() const noexcept { return 1.0 / (1.0 + alpha); }
};

}  // namespace berezin
