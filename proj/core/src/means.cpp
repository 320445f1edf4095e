#include "wquad/means.hpp"

#include <cmath>
#include <stdexcept>

namespace wquad {

namespace {

void require_positive_pair(double a, double b, bool strict) {
    if (!std::isfinite(a) || !std::isfinite(b) || a <= 0.0 || b < a ||
        (strict && b == a)) {
        throw std::domain_error("means: endpoints must satisfy 0 < a " +
                                std::string(strict ? "<" : "<=") + " b, got a = " +
                                std::to_string(a) + ", b = " + std::to_string(b));
    }
}

void require_gen_log_p(double p) {
    if (!std::isfinite(p) || p == -1.0 || p == 0.0) {
        throw std::invalid_argument(
            "means: the generalized log-mean needs finite p outside {-1, 0}");
    }
}

/// ln I(a, b) = (b ln b - a ln a) / (b - a) - 1; assumes 0 < a < b.
double log_identric(double a, double b) {
    return (b * std::log(b) - a * std::log(a)) / (b - a) - 1.0;
}

/// integral of t^-2 |ln t| dt over [a, b], via the antiderivative
/// F(t) = -(ln t + 1)/t of t^-2 ln t, split at the sign change t = 1.
double abs_log_over_t2(double a, double b) {
    const auto F = [](double t) { return -(std::log(t) + 1.0) / t; };
    if (b <= 1.0) return F(a) - F(b);
    if (a >= 1.0) return F(b) - F(a);
    return (F(a) - F(1.0)) + (F(b) - F(1.0));
}

/// rhs of the pointwise bound in the shape shared by all odd cases:
/// w(x)/(2 m^2) * (L^2/2 + 2 d^2) * (L/2 + |d|) * snorm with w = 1/sqrt(t)
/// and m = 2 (sqrt(b) - sqrt(a)).
double rhs_at_x(double a, double b, double x, double snorm) {
    const double s = std::sqrt(b) - std::sqrt(a);
    const double L = b - a;
    const double d = x - 0.5 * (a + b);
    return (0.5 * L * L + 2.0 * d * d) * (0.5 * L + std::fabs(d)) * snorm /
           (8.0 * s * s * std::sqrt(x));
}

/// Midpoint specialization of rhs_at_x: w(A) L^3 snorm / (8 m^2).
double rhs_at_mid(double a, double b, double snorm) {
    const double s = std::sqrt(b) - std::sqrt(a);
    const double L = b - a;
    return L * L * L * snorm / (32.0 * s * s * std::sqrt(0.5 * (a + b)));
}

struct CaseRow {
    MeansCaseId id;
    const char* name;
};

constexpr CaseRow kCases[] = {
    {MeansCaseId::C3_1, "C3_1"}, {MeansCaseId::C3_2, "C3_2"},
    {MeansCaseId::C3_3, "C3_3"}, {MeansCaseId::C3_4, "C3_4"},
    {MeansCaseId::C3_5, "C3_5"}, {MeansCaseId::C3_6, "C3_6"},
};

}  // namespace

double arithmetic_mean(double a, double b) {
    require_positive_pair(a, b, /*strict=*/false);
    return 0.5 * (a + b);
}

double identric_mean(double a, double b) {
    require_positive_pair(a, b, /*strict=*/false);
    if (a == b) return a;
    return std::exp(log_identric(a, b));
}

double log_mean(double a, double b) {
    require_positive_pair(a, b, /*strict=*/false);
    if (a == b) return a;
    return (b - a) / (std::log(b) - std::log(a));
}

double gen_log_mean(double p, double a, double b) {
    require_gen_log_p(p);
    require_positive_pair(a, b, /*strict=*/false);
    if (a == b) return a;
    const double num = std::pow(b, p + 1.0) - std::pow(a, p + 1.0);
    return std::pow(num / ((p + 1.0) * (b - a)), 1.0 / p);
}

double special_mean(MeanKind kind, double a, double b, std::optional<double> p) {
    if (kind == MeanKind::GenLog) {
        if (!p) {
            throw std::invalid_argument(
                "means: the generalized log-mean needs a parameter p");
        }
        return gen_log_mean(*p, a, b);
    }
    if (p) {
        throw std::invalid_argument("means: only the generalized log-mean takes p");
    }
    switch (kind) {
        case MeanKind::Arithmetic: return arithmetic_mean(a, b);
        case MeanKind::Identric: return identric_mean(a, b);
        case MeanKind::Log: return log_mean(a, b);
        default: break;
    }
    throw std::invalid_argument("means: unknown mean kind");
}

const std::vector<MeansCaseId>& all_cases() {
    static const std::vector<MeansCaseId> ids = [] {
        std::vector<MeansCaseId> v;
        for (const CaseRow& row : kCases) v.push_back(row.id);
        return v;
    }();
    return ids;
}

MeansCaseId parse_case(const std::string& name) {
    for (const CaseRow& row : kCases) {
        if (name == row.name) return row.id;
    }
    throw std::invalid_argument("means: unknown case id '" + name + "'");
}

std::string case_name(MeansCaseId id) {
    for (const CaseRow& row : kCases) {
        if (row.id == id) return row.name;
    }
    throw std::invalid_argument("means: unknown case id");
}

bool case_requires_x(MeansCaseId id) {
    return id == MeansCaseId::C3_1 || id == MeansCaseId::C3_3 ||
           id == MeansCaseId::C3_5;
}

bool case_requires_p(MeansCaseId id) {
    return id == MeansCaseId::C3_5 || id == MeansCaseId::C3_6;
}

BoundReport means_case(MeansCaseId id, double a, double b,
                       std::optional<double> x, std::optional<double> p) {
    require_positive_pair(a, b, /*strict=*/true);
    const Interval iv{a, b};
    const double A = iv.midpoint();
    const double L = iv.length();
    const double s = std::sqrt(b) - std::sqrt(a);
    const double m_w = 2.0 * s;  // m(a, b) for w = 1/sqrt(t)

    double xp = A;
    if (case_requires_x(id)) {
        if (!x) {
            throw std::invalid_argument("means: case " + case_name(id) +
                                        " requires an evaluation point x");
        }
        if (!iv.contains(*x)) {
            throw std::domain_error("means: x = " + std::to_string(*x) +
                                    " outside [" + std::to_string(a) + ", " +
                                    std::to_string(b) + "]");
        }
        xp = *x;
    }
    double pv = 0.0;
    if (case_requires_p(id)) {
        if (!p) {
            throw std::invalid_argument("means: case " + case_name(id) +
                                        " requires a parameter p");
        }
        require_gen_log_p(*p);
        if (*p == 1.0) {
            throw std::invalid_argument(
                "means: p = 1 puts a zero denominator in the closed-form "
                "seminorm of " + case_name(id));
        }
        pv = *p;
    } else if (p) {
        throw std::invalid_argument("means: case " + case_name(id) +
                                    " does not take a parameter p");
    }

    const double d = xp - A;
    double lhs = 0.0;
    double rhs = 0.0;
    std::string function_id;
    switch (id) {
        case MeansCaseId::C3_1:
        case MeansCaseId::C3_2: {
            function_id = "sqrt_ln";
            const double snorm = 0.25 * abs_log_over_t2(a, b);
            const double mean_term = (L / m_w) * log_identric(a, b);
            if (id == MeansCaseId::C3_1) {
                const double corr =
                    L * d * (std::log(xp) + 2.0) / (2.0 * m_w * xp);
                lhs = std::fabs(std::sqrt(xp) * std::log(xp) - corr - mean_term);
                rhs = rhs_at_x(a, b, xp, snorm);
            } else {
                lhs = std::fabs(std::sqrt(A) * std::log(A) - mean_term);
                rhs = rhs_at_mid(a, b, snorm);
            }
            break;
        }
        case MeansCaseId::C3_3:
        case MeansCaseId::C3_4: {
            function_id = "inv_sqrt_f";
            const double snorm = 0.375 * (b * b - a * a) / (a * a * b * b);
            const double mean_term = std::log(b / a) / m_w;
            if (id == MeansCaseId::C3_3) {
                const double corr = -L * d / (2.0 * m_w * xp * xp);
                lhs = std::fabs(1.0 / std::sqrt(xp) - corr - mean_term);
                rhs = rhs_at_x(a, b, xp, snorm);
            } else {
                lhs = std::fabs(1.0 / std::sqrt(A) - mean_term);
                rhs = rhs_at_mid(a, b, snorm);
            }
            break;
        }
        case MeansCaseId::C3_5:
        case MeansCaseId::C3_6: {
            function_id = "pow_p_half";
            // |p^2 - 1/4| keeps the closed form equal to the weighted L1
            // seminorm of f'' on both sides of |p| = 1/2.
            const double snorm = std::fabs(pv * pv - 0.25) *
                                 (std::pow(b, pv - 1.0) - std::pow(a, pv - 1.0)) /
                                 (pv - 1.0);
            const double lp_p =
                (std::pow(b, pv + 1.0) - std::pow(a, pv + 1.0)) / (pv + 1.0);
            const double mean_term = lp_p / m_w;  // = L * L_p^p / m
            if (id == MeansCaseId::C3_5) {
                const double corr = L * d * (pv + 0.5) *
                                    std::pow(xp, pv - 1.0) / m_w;
                lhs = std::fabs(std::pow(xp, pv + 0.5) - corr - mean_term);
                rhs = rhs_at_x(a, b, xp, snorm);
            } else {
                lhs = std::fabs(std::pow(A, pv + 0.5) - mean_term);
                rhs = rhs_at_mid(a, b, snorm);
            }
            break;
        }
    }

    const InequalityId ineq = case_requires_x(id) ? InequalityId::Weighted_2_1
                                                  : InequalityId::Midpoint_2_7;
    return assemble_report(ineq, lhs, rhs, function_id, "inv_sqrt", iv, xp,
                           CorrectionMode::Paper);
}

}  // namespace wquad
