#pragma once

#include <optional>
#include <string>
#include <vector>

#include "wquad/funcspace.hpp"
#include "wquad/interval.hpp"
#include "wquad/kernel.hpp"

namespace wquad {

/// The closed set of checkable inequalities.  Unknown names are rejected by
/// parse_inequality; there is no user-extensible registration.
enum class InequalityId {
    Ostrowski_1_1,   // classical Ostrowski, sup|f'|
    L1_1_2,          // Ostrowski-type, L1 norm of f'
    Twice_1_3,       // perturbed, L1 norm of f''
    Weighted_2_1,    // weighted perturbed, weighted L1 norm of f''
    Unweighted_2_6,  // w = 1 reduction of Weighted_2_1
    Midpoint_2_7,    // perturbed midpoint consequence
    Trapezoid_2_8,   // perturbed trapezoid consequence
};

/// All ids, in enumeration order.
const std::vector<InequalityId>& all_inequalities();

/// Accepts either the enumerator name ("UNWEIGHTED_2_6") or the equation
/// label ("2.6"); throws std::invalid_argument otherwise.
InequalityId parse_inequality(const std::string& name);
std::string inequality_name(InequalityId id);

/// One-line human-readable statement, including the equation number and the
/// weight requirement.
std::string describe(InequalityId id);

/// Whether evaluate_bound needs an evaluation point x for this id.  The
/// midpoint and trapezoid rules fix their own points and ignore any x.
bool requires_x(InequalityId id);

/// Whether the id is stated for the unit weight only (the 1.x family and
/// the 2.6 reduction).
bool requires_unit_weight(InequalityId id);

/// Outcome of checking one inequality instance.  margin = rhs - lhs; holds
/// tolerates floating-point slack: lhs <= rhs + 1e-9 * max(1, rhs).  ratio
/// is lhs / rhs, absent when rhs == 0.  x records the evaluation point
/// actually used: the midpoint for Midpoint_2_7, absent for Trapezoid_2_8.
struct BoundReport {
    InequalityId inequality;
    double lhs;
    double rhs;
    double margin;
    bool holds;
    std::optional<double> ratio;
    std::string function;
    std::string weight;
    double a;
    double b;
    std::optional<double> x;
    CorrectionMode mode;
};

/// Floating-point slack granted to the comparison: 1e-9 * max(1, rhs).
double holds_tolerance(double rhs);

/// Builds a BoundReport from computed sides, applying the margin/holds/ratio
/// conventions above.  Shared with the special-means evaluators.
BoundReport assemble_report(InequalityId id, double lhs, double rhs,
                            const std::string& function_id,
                            const std::string& weight_id, Interval iv,
                            std::optional<double> x, CorrectionMode mode);

/// Evaluates both sides of the chosen inequality for (f, w) on iv.
///
/// x is required for the 1.x family, Weighted_2_1 and Unweighted_2_6 and
/// must lie in [a, b]; it is ignored by the midpoint and trapezoid rules.
/// Ids marked unit-only reject any other weight (std::invalid_argument).
/// Integrals and seminorms on the two sides come from the reference oracle;
/// mode selects the correction coefficient (see CorrectionMode) and has no
/// mathematical effect when w is the unit weight.
BoundReport evaluate_bound(InequalityId id, const TestFunction& f,
                           const Weight& w, Interval iv,
                           std::optional<double> x,
                           CorrectionMode mode = CorrectionMode::Paper);

}  // namespace wquad
