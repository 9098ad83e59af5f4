#pragma once

#include "edl/domain_grid.hpp"

#include <iosfwd>
#include <limits>
#include <string>
#include <vector>

namespace edl {

/// |{x : u(x) > t}| within the truncated annulus (exact for the piecewise-linear interpolant).
double distribution_function(const ScalarField& u, double t);

struct TailSample {
    double t;
    double measure;  // |{u > t}|
    double tail;     // t |{u > t}|^{1/p}
};

struct LorentzNorm {
    double p = 0.0;
    double q = 0.0;  // +inf for the weak space
    double value = 0.0;
    std::vector<TailSample> tail_profile;

    bool weak() const noexcept { return q == std::numeric_limits<double>::infinity(); }
};

struct LorentzOptions {
    std::size_t n_levels = 64;
    double dynamic_range = 1e-4;  // t runs from max u down to dynamic_range * max u
};

/// q < inf: (p int t^q |{u > t}|^{q/p} dt/t)^{1/q}, trapezoid in log t on a geometric grid plus
/// the exact contribution of t below the grid with |{u > t}| frozen at its last value.
/// q = inf: sup of the tail profile, refined around the best grid level. A field that is <= 0
/// everywhere has all norms 0.
LorentzNorm lorentz_norm(const ScalarField& u, double p, double q, const LorentzOptions& opt = {});

enum class DecayVerdict { little_o, big_o, none };
std::string to_string(DecayVerdict v);

struct FitWindow {
    double inner_fraction = 1.0 / 8.0;  // of R_out
    double outer_fraction = 3.0 / 4.0;
};

struct DecayReport {
    double p = 0.0;
    double fitted_exponent = 0.0;      // slope of log max_theta u against log r
    double theoretical_exponent = 0.0; // 2 / p
    double max_prefactor = 0.0;        // sup over window nodes of u |x|^{2/p}
    std::vector<double> radii;
    std::vector<double> max_values;    // max_theta u per radius
    std::vector<double> prefactors;    // max_values * r^{2/p}
    double decades_spanned = 0.0;
    double prefactor_ratio = 0.0;      // last / first prefactor
    DecayVerdict verdict = DecayVerdict::none;
};

/// Least-squares decay fit over the radial layers in the window. Throws ConfigError with fewer
/// than 8 radii in the window and NumericalError on a non-positive value inside it.
///
/// Verdict little_o: prefactor profile non-increasing (within 1e-9) and last <= 0.8 first.
/// Verdict big_o: otherwise, with the profile bounded by 1.2 times its first value.
DecayReport decay_fit(const ScalarField& u, double p, const FitWindow& window = {});

/// CSV columns r,max_u,prefactor.
void write_decay_profile_csv(std::ostream& os, const DecayReport& rep);

/// Largest relative change of max_theta u between two solutions on shared radii in [r_lo, r_hi]
/// (values linearly interpolated in r on each grid).
double truncation_change(const ScalarField& a, const ScalarField& b, double r_lo, double r_hi);

}  // namespace edl
