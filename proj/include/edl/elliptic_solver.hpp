#pragma once

#include "edl/coefficients.hpp"
#include "edl/domain_grid.hpp"

#include <cstddef>
#include <vector>

namespace edl {

/// Compressed sparse row matrix.
struct CsrMatrix {
    std::size_t n_rows = 0;
    std::size_t n_cols = 0;
    std::vector<std::size_t> row_offsets{0};
    std::vector<std::size_t> columns;
    std::vector<double> values;

    std::size_t nonzeros() const noexcept { return values.size(); }
    std::size_t max_row_nonzeros() const noexcept;
    void multiply(const std::vector<double>& x, std::vector<double>& y) const;
    double at(std::size_t row, std::size_t col) const noexcept;
    std::vector<double> diagonal() const;
    /// max |A_ij - A_ji| / max |A_ij|
    double asymmetry() const;
};

enum class OuterCondition { dirichlet_zero, dirichlet_matched };

/// Dirichlet data on the two circles of the truncated annulus.
///
/// dirichlet_matched sets the outer value at angle j to inner_values[j] * (r0 / R_out)^exponent,
/// which is exact for solutions of the form g(theta) |x|^{-exponent}.
struct BoundaryData {
    std::vector<double> inner_values;
    OuterCondition outer = OuterCondition::dirichlet_zero;
    double outer_exponent = 0.0;

    /// inner value + amplitude * cos(mode * theta) at every inner node.
    static BoundaryData from_inner(const Grid& grid, double value, double amplitude = 0.0, int mode = 0);
    /// Throws ConfigError unless the inner data match the grid and are >= 0.
    void validate(const Grid& grid) const;
    std::vector<double> outer_values(const Grid& grid) const;
};

/// Discrete L on interior nodes (radial layers 1 .. n_r - 2). Row k of the matrix is the
/// control-volume integral of L u around interior node k; Dirichlet columns are moved into
/// `boundary_rhs` so that matrix * u_interior = boundary_rhs solves L u = 0.
struct DiscreteOperator {
    GridPtr grid;
    CsrMatrix matrix;
    std::vector<double> boundary_rhs;
    std::vector<double> inner_values;
    std::vector<double> outer_values;
    std::vector<double> control_volumes;  // per interior row

    std::size_t interior_rows() const noexcept { return matrix.n_rows; }
    /// Interior unknown index of grid node (i, j), i in [1, n_r - 2].
    std::size_t row_of(std::size_t i, std::size_t j) const noexcept { return (i - 1) * grid->n_angular() + j; }
};

DiscreteOperator assemble(const CoefficientSet& coeffs, const GridPtr& grid, const BoundaryData& bdata);
DiscreteOperator assemble(const CoefficientSet& coeffs, const DomainSpec& spec, const BoundaryData& bdata);

struct ConvergenceLog {
    std::size_t iterations = 0;
    std::vector<double> residual_history;  // relative residual, entry 0 = initial
    double relative_residual = 0.0;
};

struct LinearSolveResult {
    std::vector<double> x;
    ConvergenceLog log;
};

/// Jacobi-preconditioned BiCGSTAB. Throws NonConvergenceError (with history) when the
/// relative residual does not fall below tol within max_iter iterations.
LinearSolveResult solve_linear(const CsrMatrix& a, const std::vector<double>& rhs, double tol, std::size_t max_iter);

struct SolveResult {
    ScalarField field;
    ConvergenceLog log;
};

SolveResult solve(const DiscreteOperator& op, double tol = 1e-10, std::size_t max_iter = 20000);

struct ResidualResult {
    ScalarField pointwise;   // (L u) at interior nodes, 0 on the boundary layers
    double max_interior;     // max |L u| over interior nodes
};

/// Applies the assembled stencil to an arbitrary field and divides by the control volume.
ResidualResult residual(const CoefficientSet& coeffs, const ScalarField& u);

/// Net conservative flux of a grad u through the circle between layers i and i + 1,
/// using the same face and cross-term fluxes as the stencil (outward positive).
double ring_flux(const CoefficientSet& coeffs, const ScalarField& u, std::size_t i);

struct MaximumPrincipleReport {
    double interior_max = 0.0;
    NodeCoord interior_max_location{};
    double interior_min = 0.0;
    NodeCoord interior_min_location{};
    double boundary_max = 0.0;
    bool pass = false;
};

/// pass iff max over interior <= max over boundary + tol and min over interior >= -tol,
/// with tol = rel_tol * max |u|.
MaximumPrincipleReport maximum_principle_check(const ScalarField& u, double rel_tol = 1e-8);

}  // namespace edl
