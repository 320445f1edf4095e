#pragma once

#include "wquad/funcspace.hpp"
#include "wquad/interval.hpp"

namespace wquad {

/// Outcome of an adaptive reference integration.
struct OracleResult {
    double value = 0.0;
    /// Sum of |K15 - G7| over the accepted panels; a conservative estimate
    /// of the quadrature error actually committed.
    double error_estimate = 0.0;
    /// Number of integrand evaluations spent.
    long evaluations = 0;
};

/// Default tolerance used when callers do not pass one.
inline constexpr double kOracleTol = 1e-12;

/// Adaptive Gauss-Kronrod 7-15 integration of g over [a, b].
///
/// Bisects until every panel's |K15 - G7| fits its share (proportional to
/// panel length) of tol * max(1, |first whole-interval estimate|).  The
/// recursion is deterministic: panels are processed left to right and the
/// result is a fixed-order sum, so equal inputs give bit-equal outputs.
///
/// Throws std::invalid_argument when [a, b] is not a finite ordered pair or
/// when g is non-finite at an endpoint (endpoint singularities are not
/// handled -- split the interval so each piece is smooth), and
/// std::runtime_error when g evaluates non-finite inside a panel or the
/// tolerance cannot be met at the maximum bisection depth.
OracleResult reference_integral(const RealFn& g, double a, double b,
                                double tol = kOracleTol);

enum class SeminormP { One, Infinity };

/// Weighted seminorm of the order-th derivative of f over iv:
///
///   p = One        integral of |f^(order)(t)| w(t) dt over [a, b]
///   p = Infinity   sup over [a, b] of |f^(order)(t)|   (w is ignored)
///
/// The L1 form locates the sign changes of f^(order) (dense scan plus
/// bisection) and integrates |f^(order)| w piecewise so the integrand given
/// to the reference rule is smooth.  The sup form scans a dense grid,
/// sharpens each local maximum by golden-section search, and for order <= 1
/// also checks the zeros of the next registered derivative.  order must be
/// 0, 1 or 2, and [a, b] must have positive length inside both domains.
double weighted_seminorm(const TestFunction& f, const Weight& w, Interval iv,
                         int order, SeminormP p);

}  // namespace wquad
