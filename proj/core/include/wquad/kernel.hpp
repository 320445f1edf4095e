#pragma once

#include "wquad/funcspace.hpp"
#include "wquad/interval.hpp"

namespace wquad {

/// How the first-derivative correction coefficient is computed.
///
///   Paper  w(x) (b - a) (x - (a+b)/2), the surrogate used in the displayed
///          rules; exact when w is constant.
///   Exact  the true kernel integral, integral of P(x, t) dt over [a, b].
enum class CorrectionMode { Paper, Exact };

CorrectionMode parse_mode(const std::string& name);  // "paper" | "exact"
std::string mode_name(CorrectionMode mode);

/// m(a, b) = integral of w over [a, b].  Zero when a == b; uses the closed
/// antiderivative when the weight has one and the reference rule otherwise.
double moment(const Weight& w, double a, double b);

/// The weighted Peano kernel
///
///   P(x, t) = m(a, t)   for t in [a, x]
///           = -m(t, b)  for t in (x, b]
///
/// t and x must lie in [a, b] and [a, b] inside the weight's domain.
double peano_kernel(const Weight& w, Interval iv, double x, double t);

/// integral of P(x, t) dt over [a, b].  With antiderivatives M (of w) and M2
/// (of M) this is M2(b) - M2(a) - M(a)(x - a) - M(b)(b - x); otherwise the
/// two smooth branches are integrated by the reference rule.
double kernel_integral(const Weight& w, Interval iv, double x);

/// integral of |P(x, t)| dt over [a, b].  P is >= 0 left of x and <= 0 right
/// of x (w is non-negative), so the closed form is the signed branch sums
/// [M2(x) - M2(a) - M(a)(x - a)] + [M(b)(b - x) - M2(b) + M2(x)].
double kernel_abs_integral(const Weight& w, Interval iv, double x);

/// The correction coefficient C(x) used by the one-point rules; see
/// CorrectionMode.
double correction_coefficient(const Weight& w, Interval iv, double x,
                              CorrectionMode mode);

}  // namespace wquad
