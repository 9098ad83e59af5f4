#pragma once

#include "edl/coefficients.hpp"
#include "edl/domain_grid.hpp"
#include "edl/level_geometry.hpp"

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace edl {

/// eta_rho(x) = phi(|x| / rho) with phi = 1 on [0, 1], 0 on [2, inf) and
/// 1 - S(s - 1) between, S the quintic smoothstep (C^2 at both junctions).
class CutoffFunction {
public:
    explicit CutoffFunction(double rho);

    double rho() const noexcept { return rho_; }
    double value(const Vec2& x) const noexcept;
    Vec2 grad(const Vec2& x) const noexcept;
    Mat2 hessian(const Vec2& x) const noexcept;

    /// sup |phi'| and sup of the spectral norm of rho^2 hess eta (analytic).
    static double first_derivative_bound() noexcept;
    static double second_derivative_bound() noexcept;

    struct MeasuredBounds {
        double first;   // max over nodes of rho |grad eta|
        double second;  // max over nodes of rho^2 |hess eta|_2
    };
    MeasuredBounds measured_bounds(const Grid& grid) const;

private:
    double rho_;
};

struct VerificationRecord {
    std::string check;
    double t = 0.0;
    std::optional<double> tau;
    std::optional<double> rho;
    double lhs = 0.0;
    double rhs = 0.0;
    double constant = 0.0;
    double tolerance = 0.0;
    Verdict verdict = Verdict::inconclusive;
    std::map<std::string, double> details;
};

/// Midpoint rule over the polyline segments.
double line_integral(const LevelCurve& curve, const PointFunction& f);
/// f interpolated bilinearly from the grid at the segment midpoints.
double line_integral(const LevelCurve& curve, const ScalarField& f);

/// Six terms of the integrated cutoff identity over Ext gamma(t). rho <= 0 selects
/// min(1.5 g(t), R_out / 2). Throws GeometryError unless gamma(t) lies in B_rho and 2 rho <= R_out.
VerificationRecord cutoff_identity_check(const ScalarField& u, const CoefficientSet& coeffs, const LevelRecord& level,
                                         double rho = 0.0, double tol = 5e-2);

struct FluxBoundResult {
    double c_star = 0.0;
    std::vector<double> levels;
    std::vector<double> ratios;  // (1/t) int_gamma(t) |grad u| dS
    Verdict verdict = Verdict::inconclusive;
};

/// Sup over tilde-regular family levels. Fails if, over the smallest decade of t, the ratio
/// grows monotonically as t decreases by more than growth_tol; inconclusive below 10 levels.
FluxBoundResult gradient_flux_bound(const ScalarField& u, const LevelSetFamily& family, double growth_tol = 5e-2);

/// Level curves gamma(tau) for tau sampled uniformly in [t/2, t].
struct TauSweep {
    double t = 0.0;
    std::vector<double> taus;
    std::vector<bool> regular;
    std::vector<std::optional<LevelCurve>> gammas;

    std::size_t regular_count() const noexcept;
};

TauSweep sweep_tau(const ScalarField& u, double t, double R, double grad_floor, std::size_t n_tau = 33);

enum class CoareaIntegrand { one, grad };
std::string to_string(CoareaIntegrand f);

/// Compares int_{E_t} f |grad u| dx with the trapezoid over regular tau of int_gamma(tau) f dS.
VerificationRecord coarea_check(const ScalarField& u, const RegionEt& region, const TauSweep& sweep, CoareaIntegrand f,
                                double tol = 2e-2);

/// Index of the regular sample with the shortest gamma(tau); empty when no sample is regular.
std::optional<std::size_t> select_tau(const TauSweep& sweep);

/// lhs = (t/2) H^1(gamma(tau)), rhs = (2^p C_* t^{2-p} int_{E_t} u^p)^{1/2}.
VerificationRecord mean_value_tau(const ScalarField& u, const RegionEt& region, const TauSweep& sweep, double c_star,
                                  double p);

/// 2 g(t) <= H^1(gamma(tau)) + slack. Throws GeometryError if a vertex of gamma(t) lies
/// outside gamma(tau) by more than slack.
VerificationRecord geometric_bound_check(const LevelCurve& gamma_t, const LevelCurve& gamma_tau, double slack);

struct KeyLemmaResult {
    std::vector<double> levels;
    std::vector<double> constants;  // per level: sup over gamma(t) of u |x|^{2/p} / (int_{E_t} u^p)^{1/p}
    double empirical_c = 0.0;
    double smallest_decade_variation = 0.0;  // (max - min) / mean over t <= 10 t_min
    double decades_spanned = 0.0;
    Verdict verdict = Verdict::inconclusive;
};

/// regions[k] belongs to family.entries[k]; entries without a region (std::nullopt) are skipped.
KeyLemmaResult key_lemma_check(const ScalarField& u, const LevelSetFamily& family,
                               const std::vector<std::optional<RegionEt>>& regions, double p, double stability_tol = 2e-2);

/// |E_t| against the coarea prediction int_{t/2}^{t} int_gamma(tau) 1/|grad u| dS dtau.
VerificationRecord measure_discrepancy(const ScalarField& u, const RegionEt& region, const TauSweep& sweep);

}  // namespace edl
