#pragma once

#include <optional>
#include <string>
#include <vector>

#include "wquad/bounds.hpp"

namespace wquad {

/// The classical means the closed-form cases are phrased in.  GenLog is the
/// generalized log-mean L_p and needs the exponent p (p not in {-1, 0}).
enum class MeanKind { Arithmetic, Identric, Log, GenLog };

double arithmetic_mean(double a, double b);
double identric_mean(double a, double b);
double log_mean(double a, double b);
double gen_log_mean(double p, double a, double b);

/// Dispatcher over MeanKind; p is consumed only by GenLog (required there,
/// rejected elsewhere).  Requires 0 < a <= b; a == b returns the common
/// value.
double special_mean(MeanKind kind, double a, double b,
                    std::optional<double> p = std::nullopt);

/// The six closed-form bound instances exposed by the CLI.  Odd cases check
/// the weighted bound at a caller-chosen x; the even cases are their
/// midpoint specializations:
///
///   C3_1 / C3_2   f(t) = sqrt(t) ln t    (identric mean)
///   C3_3 / C3_4   f(t) = 1 / sqrt(t)     (log mean)
///   C3_5 / C3_6   f(t) = t^{p + 1/2}     (generalized log-mean; p needed)
///
/// All use the weight w(t) = 1/sqrt(t) and require 0 < a < b.
enum class MeansCaseId { C3_1, C3_2, C3_3, C3_4, C3_5, C3_6 };

const std::vector<MeansCaseId>& all_cases();
MeansCaseId parse_case(const std::string& name);
std::string case_name(MeansCaseId id);

/// Whether the case needs an evaluation point x (odd cases) or an exponent
/// p (C3_5, C3_6).
bool case_requires_x(MeansCaseId id);
bool case_requires_p(MeansCaseId id);

/// Evaluates both sides of the chosen case from its closed forms -- means,
/// antiderivatives and the explicit seminorm value; no quadrature oracle is
/// involved.  The report is shaped exactly like the generic evaluate_bound
/// result for the matching inequality (Weighted_2_1 for odd cases,
/// Midpoint_2_7 for even ones), so the two routes can be compared.
///
/// Requires 0 < a < b; x in [a, b] for odd cases (ignored by even ones); p
/// outside {-1, 0, 1} for C3_5/C3_6 (p = 1 would put a zero denominator in
/// the closed-form seminorm).
BoundReport means_case(MeansCaseId id, double a, double b,
                       std::optional<double> x = std::nullopt,
                       std::optional<double> p = std::nullopt);

}  // namespace wquad
