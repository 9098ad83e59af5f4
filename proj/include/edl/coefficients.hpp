#pragma once

#include "edl/domain_grid.hpp"
#include "edl/vec2.hpp"

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace edl {

enum class Verdict { pass, fail, inconclusive };
std::string to_string(Verdict v);

/// Coefficients (a, b, c) of L u = -div(a grad u) + b . grad u + c u, with the analytic
/// derivatives grad a and div b supplied by the family. `a` is required to be symmetric.
class CoefficientSet {
public:
    using MatrixFn = std::function<Mat2(const Vec2&)>;
    using MatGradFn = std::function<MatGrad(const Vec2&)>;
    using VectorFn = std::function<Vec2(const Vec2&)>;
    using ScalarFn = std::function<double(const Vec2&)>;

    CoefficientSet(std::string name, MatrixFn a, MatGradFn grad_a, VectorFn b, ScalarFn div_b, ScalarFn c,
                   double lambda_claimed);

    const std::string& name() const noexcept { return name_; }
    double lambda_claimed() const noexcept { return lambda_; }

    /// Throws ConfigError if the family returns a non-symmetric matrix at x.
    Mat2 a(const Vec2& x) const;
    MatGrad grad_a(const Vec2& x) const { return grad_a_(x); }
    Vec2 b(const Vec2& x) const { return b_(x); }
    double div_b(const Vec2& x) const { return div_b_(x); }
    double c(const Vec2& x) const { return c_(x); }

    /// (d_j a_ij)_i, the divergence of the rows of a.
    Vec2 div_a(const Vec2& x) const;

    /// Family parameters, echoed into reports.
    std::map<std::string, double> params;
    /// Known exact solution behaviour: u = |x|^{-exponent} solves L u = 0.
    std::optional<double> power_law_exponent;

private:
    std::string name_;
    MatrixFn a_;
    MatGradFn grad_a_;
    VectorFn b_;
    ScalarFn div_b_;
    ScalarFn c_;
    double lambda_;
};

/// Names accepted by builtin_family.
std::vector<std::string> builtin_family_names();

/// Builtin coefficient families.
///
///   remark_optimal       a = I, b = -(2/p) x/|x|^2, c = 0; u = |x|^{-2/p} solves Lu = 0.   param p >= 1
///   laplace              a = I, b = 0, c = 0
///   rotational           a = I, b = kappa (-x2, x1)/|x|^2, c = 0                           param kappa
///   reaction             a = I, b = 0, c = gamma |x|^{-3}                                  param gamma >= 0
///   anisotropic          constant symmetric a = [[a11, a12], [a12, a22]]                   params a11, a12, a22
///   radial_anisotropic   a = I + s x x^T/|x|^2                                             param s > -1
///   constant_drift       b = (beta, 0)          (violates the b = O(|x|^-1) decay)         param beta
///   negative_reaction    c = -gamma             (violates c >= 0)                          param gamma
///   compressive_drift    b = -x, div b = -2     (violates integrability of (div b - c)_-)
///   slow_reaction        c = |x|^{-2}           (c >= 0 but not integrable)
///
/// Throws ConfigError for unknown names or invalid parameters.
CoefficientSet builtin_family(const std::string& name, const std::map<std::string, double>& params = {});

struct AssumptionTolerances {
    double c1 = 1e-9;        // absolute slack on the ellipticity constant
    double c2_growth = 1e-2; // relative growth allowed across the outer decade
    double c3 = 1e-12;       // absolute slack on c >= 0
    double c4_ratio = 0.5;   // last increment must be < c4_ratio * first increment
};

struct C1Result {
    double min_eigenvalue;
    Verdict verdict;
};

struct C2Result {
    double grad_a_constant;  // sup |x| * max_ijk |d_k a_ij|
    double b_constant;       // sup |x| * |b|
    std::vector<double> radii;
    std::vector<double> grad_a_profile;  // per-radius max over angles
    std::vector<double> b_profile;
    Verdict verdict;
};

struct C3Result {
    double min_c;
    Verdict verdict;
};

struct C4Result {
    std::vector<double> radii;
    std::vector<double> partial_integrals;  // integral of (div b - c)_- over r0 <= |x| <= radii[k]
    double integral;                        // value at the last radius
    Verdict verdict;
};

/// Deterministic low-discrepancy points, uniform in area over the annulus r0 <= |x| <= r1.
std::vector<Vec2> annulus_samples(double r0, double r1, std::size_t n, std::uint64_t seed);

C1Result check_c1(const CoefficientSet& coeffs, const DomainSpec& spec, std::size_t n_samples,
                  std::uint64_t seed = 0, double tol = AssumptionTolerances{}.c1);
C2Result check_c2(const CoefficientSet& coeffs, const DomainSpec& spec, double growth_tol = AssumptionTolerances{}.c2_growth);
C3Result check_c3(const CoefficientSet& coeffs, const DomainSpec& spec, std::size_t n_samples,
                  std::uint64_t seed = 0, double tol = AssumptionTolerances{}.c3);
/// An empty radii_sequence selects R*2^k (k >= 1) below R_out, followed by R_out.
C4Result check_c4(const CoefficientSet& coeffs, const DomainSpec& spec, std::vector<double> radii_sequence = {},
                  double ratio_tol = AssumptionTolerances{}.c4_ratio);

struct AssumptionReport {
    C1Result c1;
    C2Result c2;
    C3Result c3;
    C4Result c4;

    bool all_pass() const noexcept;
    /// Names of the failing checks, e.g. {"C2", "C4"}.
    std::vector<std::string> failed() const;
};

AssumptionReport assess_assumptions(const CoefficientSet& coeffs, const DomainSpec& spec, std::size_t n_samples = 256,
                                    std::uint64_t seed = 0, const AssumptionTolerances& tol = {});

}  // namespace edl
