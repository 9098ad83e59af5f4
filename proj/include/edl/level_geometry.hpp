#pragma once

#include "edl/domain_grid.hpp"

#include <cstddef>
#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace edl {

/// One connected component of u^{-1}(t) as a polyline.
///
/// Closed curves repeat their first vertex at the end. Open curves end on an edge of the
/// sampled region (the obstacle circle or the truncation circle on polar grids).
struct LevelCurve {
    double level = 0.0;
    std::vector<Vec2> vertices;
    bool closed = false;
    bool touches_inner = false;
    bool touches_outer = false;
    double min_grad = 0.0;  // min |grad u| over the vertices
    bool encloses_ball = false;
    double signed_area = 0.0;

    bool touches_boundary() const noexcept { return touches_inner || touches_outer; }
    double length() const noexcept;
    /// Largest distance of a vertex from the origin.
    double max_radius() const noexcept;
    double min_radius() const noexcept;
};

/// Even-odd ray cast of p against the polyline (treated as closed).
bool point_in_curve(const Vec2& p, const LevelCurve& curve);

/// Logically rectangular sample patch for marching squares. Node (a, b) holds values[a * n1 + b];
/// point(xa, xb) maps fractional node coordinates to the plane. With periodic1 the last column
/// connects back to column 0.
struct StructuredPatch {
    std::size_t n0 = 0;
    std::size_t n1 = 0;
    bool periodic1 = false;
    std::vector<double> values;
    std::function<Vec2(double, double)> point;
    /// Optional per-node |grad u|, interpolated onto vertices for min_grad.
    std::vector<double> grad_magnitude;
};

/// Marching squares with linear edge interpolation and cell-average saddle resolution.
/// Throws GeometryError if a chain neither closes nor ends on the patch boundary.
/// For open chains, touches_inner / touches_outer refer to rows a = 0 and a = n0 - 1.
std::vector<LevelCurve> extract_contours(const StructuredPatch& patch, double t);

/// Level curves of u on its polar grid; an empty list when t is outside the range of u.
std::vector<LevelCurve> extract_level_set(const ScalarField& u, double t, const ScalarField* grad_magnitude = nullptr);

/// Minimum of u on the circle |x| = R (linear in r between layers). Throws NumericalError
/// if the minimum is not positive.
double t_star(const ScalarField& u, double R);

/// Encloses B_R: not touching the truncated boundary, closed, origin inside, and every
/// vertex at distance >= R.
bool encloses_ball(const LevelCurve& c, double R);

struct Classification {
    std::optional<std::size_t> gamma;
    std::size_t enclosing_count = 0;
    std::size_t exterior_components = 0;  // other curves with a vertex in Ext gamma
    bool pass = false;
    std::string message;
};

/// Sets encloses_ball on each curve and designates gamma(t). Never throws on an
/// unexpected topology; the verdict records it.
Classification classify(std::vector<LevelCurve>& curves, double R);

inline double g_of_t(const LevelCurve& gamma) { return gamma.max_radius(); }

struct LevelRecord {
    double t = 0.0;
    std::vector<LevelCurve> curves;
    Classification classification;
    double min_grad = 0.0;  // over every component
    bool regular = false;

    const LevelCurve* gamma() const noexcept {
        return classification.gamma ? &curves[*classification.gamma] : nullptr;
    }
};

struct FamilyEntry {
    LevelRecord level;  // t
    LevelRecord half;   // t / 2
    bool tilde_regular = false;
};

struct LevelSetFamily {
    double t_star = 0.0;
    double enclosing_radius = 0.0;
    double grad_floor = 0.0;
    std::vector<FamilyEntry> entries;  // sorted by t

    std::vector<double> levels() const;
};

/// Geometric levels in [t_lo, t_hi] with t_hi = (1 - margin) t_star and t_lo chosen so that
/// t / 2 stays above the largest value of u on the circle 0.75 R_out.
std::vector<double> sample_levels(const ScalarField& u, double R, std::size_t n_levels, double margin = 0.02);

/// Builds records for every t and t / 2. A non-positive grad_floor selects 1e-3 max |grad u|.
LevelSetFamily build_family(const ScalarField& u, double R, const std::vector<double>& levels, double grad_floor = 0.0);

struct RegularFlags {
    std::vector<bool> regular;
    std::vector<bool> tilde_regular;
};

RegularFlags regular_flags(const ScalarField& u, const std::vector<double>& levels, double grad_floor);

struct RegionEt {
    double t = 0.0;
    NodeMask mask;
    NodeMask omega_mask;
    NodeMask excluded;  // band nodes (t/2 < u < t) outside E_t; pass to integrate_band
    double measure = 0.0;
    std::size_t pocket_count = 0;  // connected clusters in omega_mask
};

/// E_t for a family entry. Pockets are band nodes that cannot reach the truncation circle
/// without climbing above their own value, or cannot reach the obstacle without descending
/// below it. Throws GeometryError if gamma(t) or gamma(t/2) is missing.
RegionEt region_Et(const ScalarField& u, const FamilyEntry& entry);

/// CSV columns level,curve,vertex,x1,x2.
void write_curves_csv(std::ostream& os, const std::vector<LevelCurve>& curves, std::size_t first_curve_id = 0);

}  // namespace edl
