#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace wquad {

using RealFn = std::function<double(double)>;

/// Open interval of validity for a function or weight.  Endpoints may be
/// infinite; membership is strict, so Domain{0, inf} rejects t = 0.
struct Domain {
    double lo;
    double hi;

    bool contains(double t) const { return lo < t && t < hi; }
    bool contains_interval(double a, double b) const { return lo < a && b < hi; }

    static Domain real_line();
    static Domain positive();
};

/// A named test function with evaluators for f, f' and f''.  Registered
/// functions carry closed-form derivatives; with_finite_differences() builds
/// one whose derivatives fall back to central differences.
struct TestFunction {
    std::string id;
    Domain domain;
    RealFn eval0;
    RealFn eval1;
    RealFn eval2;

    /// Shorthand for eval(*this, order, t).
    double operator()(int order, double t) const;
};

/// A named non-negative integrable density w.  moment_antiderivative is M
/// with M' = w; moment_antiderivative2 is an antiderivative of M.  Both are
/// optional: when absent, moment computations fall back to the reference
/// integrator.  The second one enables closed-form kernel integrals.
struct Weight {
    std::string id;
    Domain domain;
    RealFn eval;
    RealFn moment_antiderivative;
    RealFn moment_antiderivative2;

    /// Guarded evaluation of w(t); throws std::domain_error outside domain.
    double operator()(double t) const;
    bool has_closed_moment() const { return static_cast<bool>(moment_antiderivative); }
    bool has_closed_moment2() const { return static_cast<bool>(moment_antiderivative2); }
};

/// Evaluates f, f' or f'' (order 0, 1 or 2) at t.  Throws
/// std::invalid_argument for any other order and std::domain_error when t
/// lies outside fn.domain.
double eval(const TestFunction& fn, int order, double t);

/// Looks up a registered function by id.  The parameterized family
/// pow_p_half (t^{p+1/2}) requires p with p not in {-1, 0}; every other id
/// rejects a supplied p.  Unknown ids throw std::invalid_argument.
TestFunction function(const std::string& id, std::optional<double> p = std::nullopt);

/// Looks up a registered weight by id ("unit" or "inv_sqrt").
const Weight& weight(const std::string& id);

/// Registered ids, in registry order.
std::vector<std::string> function_ids();
std::vector<std::string> weight_ids();

/// Step used by the central-difference fallback: cbrt(eps) * max(1, |t|).
double central_diff_step(double t);

/// Symmetric difference quotient (g(t+h) - g(t-h)) / (2h) with the step
/// above.  Both lookups must stay inside the caller's domain.
double central_diff(const RealFn& g, double t);

/// Builds a TestFunction from a value evaluator alone; first and second
/// derivatives are central differences of g and of the first difference.
TestFunction with_finite_differences(std::string id, Domain domain, RealFn g);

}  // namespace wquad
