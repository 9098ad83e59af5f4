#pragma once

#include "edl/vec2.hpp"

#include <cstddef>
#include <functional>
#include <iosfwd>
#include <limits>
#include <map>
#include <memory>
#include <span>
#include <string>
#include <vector>

namespace edl {

enum class RadialSpacing { log, uniform };

/// Truncated exterior domain: the annulus obstacle_radius <= |x| <= truncation_radius,
/// with the obstacle (a disk) contained in B_R, R = enclosing_radius.
struct DomainSpec {
    double obstacle_radius = 1.0;
    double enclosing_radius = 2.0;
    double truncation_radius = 32.0;
    std::size_t n_radial = 128;
    std::size_t n_angular = 256;
    RadialSpacing radial_spacing = RadialSpacing::log;

    /// Throws ConfigError naming the violated invariant.
    void validate() const;
};

std::string to_string(RadialSpacing s);
RadialSpacing parse_radial_spacing(const std::string& s);

struct NodeCoord {
    double r;
    double theta;
    double x1;
    double x2;
};

/// Polar node table. Nodes are stored radial-major, angle-minor: k = i * n_angular + j.
///
/// Radii follow a smooth mapping r(xi) of the radial index xi in [0, n_radial - 1]
/// (affine for uniform spacing, exponential for log spacing); the discrete operators
/// use the analytic mapping derivative dr/dxi.
class Grid {
public:
    explicit Grid(const DomainSpec& spec);

    const DomainSpec& spec() const noexcept { return spec_; }
    std::size_t n_radial() const noexcept { return spec_.n_radial; }
    std::size_t n_angular() const noexcept { return spec_.n_angular; }
    std::size_t node_count() const noexcept { return spec_.n_radial * spec_.n_angular; }

    std::size_t index(std::size_t i, std::size_t j) const noexcept { return i * spec_.n_angular + j; }
    std::size_t radial_index(std::size_t k) const noexcept { return k / spec_.n_angular; }
    std::size_t angular_index(std::size_t k) const noexcept { return k % spec_.n_angular; }
    std::size_t wrap(std::ptrdiff_t j) const noexcept;

    double radius(std::size_t i) const noexcept { return radii_[i]; }
    double angle(std::size_t j) const noexcept { return static_cast<double>(j) * dtheta_; }
    double dtheta() const noexcept { return dtheta_; }
    std::span<const double> radii() const noexcept { return radii_; }

    /// r(xi) and dr/dxi for fractional radial index xi.
    double radius_at(double xi) const noexcept;
    double dr_dxi(double xi) const noexcept;
    /// Inverse mapping: fractional radial index of radius r (not clamped).
    double radial_coordinate(double r) const noexcept;

    NodeCoord node(std::size_t k) const noexcept;
    Vec2 position(std::size_t i, std::size_t j) const noexcept;
    Vec2 position(std::size_t k) const noexcept { return position(radial_index(k), angular_index(k)); }

    /// Polar trapezoid weight r_i * dr_i * dtheta of a node on radial layer i.
    double quadrature_weight(std::size_t i) const noexcept { return weights_[i]; }

    /// Largest physical node spacing; used as the geometric slack h.
    double max_spacing() const noexcept { return max_spacing_; }
    bool is_boundary_layer(std::size_t i) const noexcept { return i == 0 || i + 1 == spec_.n_radial; }

private:
    DomainSpec spec_;
    double dtheta_;
    double log_ratio_ = 0.0;  // ln q for log spacing
    double step_ = 0.0;       // h for uniform spacing
    double max_spacing_ = 0.0;
    std::vector<double> radii_;
    std::vector<double> weights_;
};

using GridPtr = std::shared_ptr<const Grid>;

/// Validates the DomainSpec and builds the node table.
GridPtr build_grid(const DomainSpec& spec);

/// Per-node boolean mask, indexed like the grid nodes.
using NodeMask = std::vector<bool>;

/// Nodal scalar values on a grid. Immutable after construction.
class ScalarField {
public:
    ScalarField(GridPtr grid, std::vector<double> values, std::map<std::string, std::string> metadata = {});

    const Grid& grid() const noexcept { return *grid_; }
    const GridPtr& grid_ptr() const noexcept { return grid_; }
    std::span<const double> values() const noexcept { return values_; }
    double operator[](std::size_t k) const noexcept { return values_[k]; }
    double at(std::size_t i, std::size_t j) const noexcept { return values_[grid_->index(i, j)]; }
    const std::map<std::string, std::string>& metadata() const noexcept { return metadata_; }

    double max() const noexcept;
    double min() const noexcept;

private:
    GridPtr grid_;
    std::vector<double> values_;
    std::map<std::string, std::string> metadata_;
};

/// Nodal Cartesian vectors on a grid.
class VectorField {
public:
    VectorField(GridPtr grid, std::vector<Vec2> components);

    const Grid& grid() const noexcept { return *grid_; }
    const GridPtr& grid_ptr() const noexcept { return grid_; }
    std::span<const Vec2> components() const noexcept { return components_; }
    const Vec2& operator[](std::size_t k) const noexcept { return components_[k]; }

    ScalarField magnitude() const;

private:
    GridPtr grid_;
    std::vector<Vec2> components_;
};

using PointFunction = std::function<double(const Vec2&)>;

/// Samples f at every node. Throws NumericalError with the node location on a non-finite sample.
ScalarField sample_function(const GridPtr& grid, const PointFunction& f);
ScalarField sample_function(const DomainSpec& spec, const PointFunction& f);

/// Second-order gradient: central differences in (xi, theta), one-sided three-point
/// stencils on the two radial boundary layers, periodic in theta.
VectorField gradient(const ScalarField& u);

/// Sum of f times the polar trapezoid weights over the masked nodes.
double integrate(const ScalarField& f, const NodeMask& mask);
/// Integral over the whole truncated annulus.
double integrate(const ScalarField& f);

NodeMask full_mask(const Grid& grid);

/// Bilinear interpolation in (r, theta). Points outside the radial range are clamped.
double interpolate(const ScalarField& f, const Vec2& p);
Vec2 interpolate(const VectorField& f, const Vec2& p);

struct LevelBand {
    double lower = -std::numeric_limits<double>::infinity();
    double upper = std::numeric_limits<double>::infinity();
};

/// Integral of `integrand` over {x : lower < u(x) < upper}.
///
/// Each polar cell is split into two triangles in (r, theta); u and the integrand are
/// linear on each triangle, the triangle is clipped exactly against the band, and the
/// polar Jacobian r is integrated exactly. Triangles touching a node in `excluded`
/// are skipped.
double integrate_band(const ScalarField& u, const ScalarField& integrand, LevelBand band,
                      const NodeMask* excluded = nullptr);
/// Area of the band (integrand = 1).
double band_measure(const ScalarField& u, LevelBand band, const NodeMask* excluded = nullptr);

/// Exact area of the truncated annulus.
double domain_area(const Grid& grid) noexcept;

/// CSV with header `r,theta,x1,x2,value`, floats at 17 significant digits.
void write_field_csv(std::ostream& os, const ScalarField& f);
/// Reads a field written by write_field_csv back onto `grid`; throws ConfigError on mismatch.
ScalarField read_field_csv(std::istream& is, const GridPtr& grid);

}  // namespace edl
