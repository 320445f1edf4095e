#include "wquad/bounds.hpp"

#include <cmath>
#include <stdexcept>

#include "wquad/oracle.hpp"

namespace wquad {

namespace {

struct IdRow {
    InequalityId id;
    const char* name;
    const char* label;  // equation label accepted as an alias
};

constexpr IdRow kIdTable[] = {
    {InequalityId::Ostrowski_1_1, "OSTROWSKI_1_1", "1.1"},
    {InequalityId::L1_1_2, "L1_1_2", "1.2"},
    {InequalityId::Twice_1_3, "TWICE_1_3", "1.3"},
    {InequalityId::Weighted_2_1, "WEIGHTED_2_1", "2.1"},
    {InequalityId::Unweighted_2_6, "UNWEIGHTED_2_6", "2.6"},
    {InequalityId::Midpoint_2_7, "MIDPOINT_2_7", "2.7"},
    {InequalityId::Trapezoid_2_8, "TRAPEZOID_2_8", "2.8"},
};

void require_positive_length(Interval iv) {
    if (!(iv.a < iv.b)) {
        throw std::domain_error("bounds: interval must have positive length");
    }
}

double integral_fw(const TestFunction& f, const Weight& w, Interval iv) {
    const RealFn integrand = [&](double t) { return f.eval0(t) * w.eval(t); };
    return reference_integral(integrand, iv.a, iv.b).value;
}

}  // namespace

const std::vector<InequalityId>& all_inequalities() {
    static const std::vector<InequalityId> ids = [] {
        std::vector<InequalityId> v;
        for (const IdRow& row : kIdTable) v.push_back(row.id);
        return v;
    }();
    return ids;
}

InequalityId parse_inequality(const std::string& name) {
    for (const IdRow& row : kIdTable) {
        if (name == row.name || name == row.label) return row.id;
    }
    throw std::invalid_argument("bounds: unknown inequality id '" + name + "'");
}

std::string inequality_name(InequalityId id) {
    for (const IdRow& row : kIdTable) {
        if (row.id == id) return row.name;
    }
    throw std::invalid_argument("bounds: unknown inequality id");
}

std::string describe(InequalityId id) {
    switch (id) {
        case InequalityId::Ostrowski_1_1:
            return "Eq. (1.1): classical Ostrowski bound "
                   "|f(x) - (1/(b-a)) I[f]| <= [1/4 + (x-A)^2/(b-a)^2] (b-a) sup|f'|; "
                   "unit weight only, x required";
        case InequalityId::L1_1_2:
            return "Eq. (1.2): Ostrowski-type bound via the L1 norm of f'; "
                   "unit weight only, x required";
        case InequalityId::Twice_1_3:
            return "Eq. (1.3): perturbed Ostrowski bound with first-derivative "
                   "correction via the L1 norm of f''; unit weight only, x required";
        case InequalityId::Weighted_2_1:
            return "Eq. (2.1): weighted perturbed Ostrowski bound via the weighted "
                   "L1 norm of f''; any registered weight, x required";
        case InequalityId::Unweighted_2_6:
            return "Eq. (2.6): unit-weight reduction of Eq. (2.1); unit weight only, "
                   "x required";
        case InequalityId::Midpoint_2_7:
            return "Eq. (2.7): perturbed midpoint bound at x = (a+b)/2; any "
                   "registered weight, x ignored";
        case InequalityId::Trapezoid_2_8:
            return "Eq. (2.8): perturbed trapezoid bound from the endpoint "
                   "brackets; any registered weight, x ignored";
    }
    throw std::invalid_argument("bounds: unknown inequality id");
}

bool requires_x(InequalityId id) {
    switch (id) {
        case InequalityId::Midpoint_2_7:
        case InequalityId::Trapezoid_2_8:
            return false;
        default:
            return true;
    }
}

bool requires_unit_weight(InequalityId id) {
    switch (id) {
        case InequalityId::Ostrowski_1_1:
        case InequalityId::L1_1_2:
        case InequalityId::Twice_1_3:
        case InequalityId::Unweighted_2_6:
            return true;
        default:
            return false;
    }
}

double holds_tolerance(double rhs) { return 1e-9 * std::max(1.0, rhs); }

BoundReport assemble_report(InequalityId id, double lhs, double rhs,
                            const std::string& function_id,
                            const std::string& weight_id, Interval iv,
                            std::optional<double> x, CorrectionMode mode) {
    BoundReport r;
    r.inequality = id;
    r.lhs = lhs;
    r.rhs = rhs;
    r.margin = rhs - lhs;
    r.holds = lhs <= rhs + holds_tolerance(rhs);
    r.ratio = (rhs == 0.0) ? std::optional<double>{} : std::optional<double>{lhs / rhs};
    r.function = function_id;
    r.weight = weight_id;
    r.a = iv.a;
    r.b = iv.b;
    r.x = x;
    r.mode = mode;
    return r;
}

BoundReport evaluate_bound(InequalityId id, const TestFunction& f,
                           const Weight& w, Interval iv,
                           std::optional<double> x, CorrectionMode mode) {
    require_positive_length(iv);
    if (!f.domain.contains_interval(iv.a, iv.b) ||
        !w.domain.contains_interval(iv.a, iv.b)) {
        throw std::domain_error("bounds: [" + std::to_string(iv.a) + ", " +
                                std::to_string(iv.b) + "] leaves the domain of '" +
                                f.id + "' or '" + w.id + "'");
    }
    if (requires_unit_weight(id) && w.id != "unit") {
        throw std::invalid_argument("bounds: inequality " + inequality_name(id) +
                                    " is stated for the unit weight, got '" + w.id +
                                    "'");
    }
    if (requires_x(id)) {
        if (!x) {
            throw std::invalid_argument("bounds: inequality " + inequality_name(id) +
                                        " requires an evaluation point x");
        }
        if (!iv.contains(*x)) {
            throw std::domain_error("bounds: x = " + std::to_string(*x) +
                                    " outside [" + std::to_string(iv.a) + ", " +
                                    std::to_string(iv.b) + "]");
        }
    }

    const double L = iv.length();
    const double mid = iv.midpoint();
    double lhs = 0.0;
    double rhs = 0.0;
    std::optional<double> x_used = x;

    switch (id) {
        case InequalityId::Ostrowski_1_1: {
            const double d = *x - mid;
            const double mean = integral_fw(f, w, iv) / L;
            lhs = std::fabs(f.eval0(*x) - mean);
            const double sup = weighted_seminorm(f, w, iv, 1, SeminormP::Infinity);
            rhs = (0.25 + d * d / (L * L)) * L * sup;
            break;
        }
        case InequalityId::L1_1_2: {
            const double d = *x - mid;
            const double mean = integral_fw(f, w, iv) / L;
            lhs = std::fabs(f.eval0(*x) - mean);
            const double l1 = weighted_seminorm(f, w, iv, 1, SeminormP::One);
            rhs = (0.5 + std::fabs(d) / L) * l1;
            break;
        }
        case InequalityId::Twice_1_3: {
            const double d = *x - mid;
            const double mean = integral_fw(f, w, iv) / L;
            lhs = std::fabs(f.eval0(*x) - d * f.eval1(*x) - mean);
            const double l1 = weighted_seminorm(f, w, iv, 2, SeminormP::One);
            const double half = std::fabs(d) + 0.5 * L;
            rhs = half * half * l1 / (2.0 * L);
            break;
        }
        case InequalityId::Unweighted_2_6: {
            const double d = *x - mid;
            const double mean = integral_fw(f, w, iv) / L;
            lhs = std::fabs(f.eval0(*x) - d * f.eval1(*x) - mean);
            const double l1 = weighted_seminorm(f, w, iv, 2, SeminormP::One);
            rhs = (0.5 * L * L + 2.0 * d * d) * (0.5 * L + std::fabs(d)) * l1 /
                  (2.0 * L * L);
            break;
        }
        case InequalityId::Weighted_2_1:
        case InequalityId::Midpoint_2_7: {
            const double xp = (id == InequalityId::Midpoint_2_7) ? mid : *x;
            x_used = xp;
            const double d = xp - mid;
            const double m = moment(w, iv.a, iv.b);
            const double c = correction_coefficient(w, iv, xp, mode);
            const double mean = integral_fw(f, w, iv) / m;
            lhs = std::fabs(f.eval0(xp) - (c / m) * f.eval1(xp) - mean);
            const double snorm = weighted_seminorm(f, w, iv, 2, SeminormP::One);
            rhs = w(xp) / (2.0 * m * m) * (0.5 * L * L + 2.0 * d * d) *
                  (0.5 * L + std::fabs(d)) * snorm;
            break;
        }
        case InequalityId::Trapezoid_2_8: {
            const double m = moment(w, iv.a, iv.b);
            const double mean = integral_fw(f, w, iv) / m;
            double corr;
            if (mode == CorrectionMode::Paper) {
                corr = (L * L / 4.0) * (w(iv.a) * f.eval1(iv.a) - w(iv.b) * f.eval1(iv.b)) / m;
            } else {
                const double ca = correction_coefficient(w, iv, iv.a, mode);
                const double cb = correction_coefficient(w, iv, iv.b, mode);
                corr = -(ca * f.eval1(iv.a) + cb * f.eval1(iv.b)) / (2.0 * m);
            }
            lhs = std::fabs(0.5 * (f.eval0(iv.a) + f.eval0(iv.b)) - mean + corr);
            const double snorm = weighted_seminorm(f, w, iv, 2, SeminormP::One);
            rhs = L * L * L * (w(iv.a) + w(iv.b)) * snorm / (4.0 * m * m);
            x_used = std::nullopt;
            break;
        }
    }
    return assemble_report(id, lhs, rhs, f.id, w.id, iv, x_used, mode);
}

}  // namespace wquad
