#include "wquad/funcspace.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <utility>

namespace wquad {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

[[noreturn]] void throw_outside_domain(const std::string& id, double t) {
    throw std::domain_error("funcspace: argument " + std::to_string(t) +
                            " outside the domain of '" + id + "'");
}

// Registry order is the presentation order used by list_registry and by the
// verification suites.  pow_p_half is listed last because it needs a
// parameter before it can be evaluated.
const std::vector<std::string> kFunctionIds = {
    "constant", "identity", "square",     "cubic",      "poly6",
    "exp",      "sin",      "sqrt_ln",    "inv_sqrt_f", "pow_p_half",
};

const std::vector<std::string> kWeightIds = {"unit", "inv_sqrt"};

TestFunction make_fixed(const std::string& id) {
    const Domain all = Domain::real_line();
    const Domain pos = Domain::positive();
    if (id == "constant") {
        return {id, all, [](double) { return 1.0; }, [](double) { return 0.0; },
                [](double) { return 0.0; }};
    }
    if (id == "identity") {
        return {id, all, [](double t) { return t; }, [](double) { return 1.0; },
                [](double) { return 0.0; }};
    }
    if (id == "square") {
        return {id, all, [](double t) { return t * t; },
                [](double t) { return 2.0 * t; }, [](double) { return 2.0; }};
    }
    if (id == "cubic") {
        return {id, all, [](double t) { return t * t * t; },
                [](double t) { return 3.0 * t * t; },
                [](double t) { return 6.0 * t; }};
    }
    if (id == "poly6") {
        // Degree-6 polynomial whose second derivative changes sign four
        // times in [-2, 2]; exercises the sign-splitting seminorm path.
        return {id, all,
                [](double t) {
                    return ((((t * t - 3.0) * t * t + 2.0) * t - 1.0) * t + 1.0);
                },
                [](double t) {
                    return ((6.0 * t * t - 12.0) * t * t + 4.0) * t - 1.0;
                },
                [](double t) { return (30.0 * t * t - 36.0) * t * t + 4.0; }};
    }
    if (id == "exp") {
        return {id, all, [](double t) { return std::exp(t); },
                [](double t) { return std::exp(t); },
                [](double t) { return std::exp(t); }};
    }
    if (id == "sin") {
        return {id, all, [](double t) { return std::sin(t); },
                [](double t) { return std::cos(t); },
                [](double t) { return -std::sin(t); }};
    }
    if (id == "sqrt_ln") {
        return {id, pos, [](double t) { return std::sqrt(t) * std::log(t); },
                [](double t) { return (std::log(t) + 2.0) / (2.0 * std::sqrt(t)); },
                [](double t) { return -std::log(t) / (4.0 * t * std::sqrt(t)); }};
    }
    if (id == "inv_sqrt_f") {
        return {id, pos, [](double t) { return 1.0 / std::sqrt(t); },
                [](double t) { return -0.5 / (t * std::sqrt(t)); },
                [](double t) { return 0.75 / (t * t * std::sqrt(t)); }};
    }
    throw std::invalid_argument("funcspace: unknown function id '" + id + "'");
}

TestFunction make_pow_p_half(double p) {
    if (!std::isfinite(p) || p == -1.0 || p == 0.0) {
        throw std::invalid_argument(
            "funcspace: pow_p_half requires finite p outside {-1, 0}, got p = " +
            std::to_string(p));
    }
    return {"pow_p_half", Domain::positive(),
            [p](double t) { return std::pow(t, p + 0.5); },
            [p](double t) { return (p + 0.5) * std::pow(t, p - 0.5); },
            [p](double t) { return (p * p - 0.25) * std::pow(t, p - 1.5); }};
}

}  // namespace

Domain Domain::real_line() { return {-kInf, kInf}; }
Domain Domain::positive() { return {0.0, kInf}; }

double TestFunction::operator()(int order, double t) const {
    return wquad::eval(*this, order, t);
}

double Weight::operator()(double t) const {
    if (!domain.contains(t)) throw_outside_domain(id, t);
    return eval(t);
}

double eval(const TestFunction& fn, int order, double t) {
    if (order < 0 || order > 2) {
        throw std::invalid_argument("funcspace: derivative order must be 0, 1 or 2, got " +
                                    std::to_string(order));
    }
    if (!fn.domain.contains(t)) throw_outside_domain(fn.id, t);
    switch (order) {
        case 0: return fn.eval0(t);
        case 1: return fn.eval1(t);
        default: return fn.eval2(t);
    }
}

TestFunction function(const std::string& id, std::optional<double> p) {
    if (id == "pow_p_half") {
        if (!p) {
            throw std::invalid_argument("funcspace: pow_p_half requires a parameter p");
        }
        return make_pow_p_half(*p);
    }
    if (p) {
        throw std::invalid_argument("funcspace: function '" + id +
                                    "' does not take a parameter");
    }
    return make_fixed(id);
}

const Weight& weight(const std::string& id) {
    static const Weight unit = {"unit", Domain::real_line(),
                                [](double) { return 1.0; },
                                [](double t) { return t; },
                                [](double t) { return 0.5 * t * t; }};
    static const Weight inv_sqrt = {"inv_sqrt", Domain::positive(),
                                    [](double t) { return 1.0 / std::sqrt(t); },
                                    [](double t) { return 2.0 * std::sqrt(t); },
                                    [](double t) { return 4.0 / 3.0 * t * std::sqrt(t); }};
    if (id == "unit") return unit;
    if (id == "inv_sqrt") return inv_sqrt;
    throw std::invalid_argument("funcspace: unknown weight id '" + id + "'");
}

std::vector<std::string> function_ids() { return kFunctionIds; }
std::vector<std::string> weight_ids() { return kWeightIds; }

double central_diff_step(double t) {
    static const double h0 = std::cbrt(std::numeric_limits<double>::epsilon());
    return h0 * std::max(1.0, std::fabs(t));
}

double central_diff(const RealFn& g, double t) {
    const double h = central_diff_step(t);
    return (g(t + h) - g(t - h)) / (2.0 * h);
}

TestFunction with_finite_differences(std::string id, Domain domain, RealFn g) {
    RealFn d1 = [g](double t) { return central_diff(g, t); };
    RealFn d2 = [d1](double t) { return central_diff(d1, t); };
    return {std::move(id), domain, std::move(g), std::move(d1), std::move(d2)};
}

}  // namespace wquad
