#pragma once

namespace wquad {

/// Closed working interval [a, b] with a <= b.
///
/// Construct through make_interval(), which rejects non-finite or reversed
/// endpoints.  A degenerate interval (a == b) is representable because the
/// adaptive integrator accepts it; operations that need positive length say
/// so in their own contracts.
struct Interval {
    double a;
    double b;

    double length() const { return b - a; }
    double midpoint() const { return 0.5 * (a + b); }
    bool contains(double t) const { return a <= t && t <= b; }
};

/// Validating factory: throws std::domain_error unless a and b are finite
/// and a <= b.
Interval make_interval(double a, double b);

}  // namespace wquad
