#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "wquad/funcspace.hpp"
#include "wquad/interval.hpp"
#include "wquad/kernel.hpp"

namespace wquad {

/// Strictly increasing partition nodes a = t_0 < t_1 < ... < t_n = b.
struct Partition {
    std::vector<double> nodes;

    /// n equal cells over iv (n >= 1, positive length).
    static Partition uniform(Interval iv, int n);
    /// Validates and adopts explicit nodes (>= 2, finite, strictly increasing).
    static Partition from_nodes(std::vector<double> nodes);

    int size() const { return static_cast<int>(nodes.size()) - 1; }
    double a() const { return nodes.front(); }
    double b() const { return nodes.back(); }
    Interval cell(int i) const { return {nodes[i], nodes[i + 1]}; }
};

/// Evaluation points, one per cell, with xi_i in [t_i, t_{i+1}].
struct Xi {
    std::vector<double> points;

    static Xi midpoints(const Partition& part);
    static Xi left(const Partition& part);
    static Xi right(const Partition& part);
    /// Uniform draw inside each cell; deterministic in the seed.
    static Xi random(const Partition& part, std::uint64_t seed);
};

/// One cell of a composite run: the local rule value m_i f(xi_i) - C_i f'(xi_i)
/// and the local a-priori remainder bound.
struct CellContribution {
    Interval cell;
    double xi;
    double estimate;
    double bound;
};

/// Result of a composite or adaptive run.  estimate approximates the
/// weighted integral of f; bound is the summed a-priori remainder bound, so
/// |estimate - integral| <= bound whenever the per-cell bound is valid.
/// reference/actual_error are filled when the run also consulted the
/// reference oracle.  tolerance_met is false only when adaptive refinement
/// stopped at the depth or cell-count cap with bound still above tol.
struct QuadratureResult {
    double estimate = 0.0;
    double bound = 0.0;
    std::optional<double> reference;
    std::optional<double> actual_error;
    bool tolerance_met = true;
    std::vector<CellContribution> cells;
};

/// Single-cell weighted rule m(a,b) f(x) - C(x) f'(x); x must lie in [a, b].
double one_point_estimate(const TestFunction& f, const Weight& w, Interval iv,
                          double x, CorrectionMode mode = CorrectionMode::Paper);

/// Sum of the one-point rule over the cells of part at the points xi.
double composite_estimate(const TestFunction& f, const Weight& w,
                          const Partition& part, const Xi& xi,
                          CorrectionMode mode = CorrectionMode::Paper);

/// Summed a-priori remainder bound for the same composite rule (independent
/// of mode; the bound is stated for the closed-form "paper" correction).
double composite_bound(const TestFunction& f, const Weight& w,
                       const Partition& part, const Xi& xi);

/// Composite run with per-cell detail; consults the reference oracle for
/// reference/actual_error when with_reference is set.
QuadratureResult composite_run(const TestFunction& f, const Weight& w,
                               const Partition& part, const Xi& xi,
                               CorrectionMode mode = CorrectionMode::Paper,
                               bool with_reference = true);

/// Greedy a-priori-bound-driven refinement: starting from the single cell
/// [a, b] (midpoint evaluation points), repeatedly bisects the cell with the
/// largest local bound until the summed bound is <= tol.  Deterministic.
/// Stops early -- with tolerance_met = false and the achieved bound -- when
/// the worst cell has reached depth 60 or the subdivision exceeds an internal
/// cell cap.  A degenerate interval (a == b) yields estimate 0, bound 0.
QuadratureResult adaptive_integrate(const TestFunction& f, const Weight& w,
                                    Interval iv, double tol,
                                    CorrectionMode mode = CorrectionMode::Paper);

/// One composite_run per n (uniform partition, midpoint xi), sharing a single
/// oracle reference value, for error-vs-bound convergence studies.
std::vector<QuadratureResult> convergence_table(
    const TestFunction& f, const Weight& w, Interval iv,
    const std::vector<int>& ns, CorrectionMode mode = CorrectionMode::Paper);

}  // namespace wquad
