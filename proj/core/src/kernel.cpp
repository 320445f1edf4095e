#include "wquad/kernel.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "wquad/oracle.hpp"

namespace wquad {

namespace {

void require_inside(const Weight& w, Interval iv) {
    if (!w.domain.contains_interval(iv.a, iv.b)) {
        throw std::domain_error("kernel: interval [" + std::to_string(iv.a) + ", " +
                                std::to_string(iv.b) + "] leaves the domain of weight '" +
                                w.id + "'");
    }
}

void require_point(Interval iv, double t, const char* what) {
    if (!iv.contains(t)) {
        throw std::domain_error("kernel: " + std::string(what) + " = " +
                                std::to_string(t) + " outside [" +
                                std::to_string(iv.a) + ", " + std::to_string(iv.b) + "]");
    }
}

void require_positive_length(Interval iv) {
    if (!(iv.a < iv.b)) {
        throw std::domain_error("kernel: interval must have positive length");
    }
}

}  // namespace

CorrectionMode parse_mode(const std::string& name) {
    if (name == "paper") return CorrectionMode::Paper;
    if (name == "exact") return CorrectionMode::Exact;
    throw std::invalid_argument("kernel: unknown correction mode '" + name +
                                "' (expected 'paper' or 'exact')");
}

std::string mode_name(CorrectionMode mode) {
    return mode == CorrectionMode::Paper ? "paper" : "exact";
}

double moment(const Weight& w, double a, double b) {
    if (a == b) return 0.0;
    if (a > b) {
        throw std::domain_error("kernel: moment requires a <= b");
    }
    require_inside(w, Interval{a, b});
    if (w.has_closed_moment()) {
        return w.moment_antiderivative(b) - w.moment_antiderivative(a);
    }
    return reference_integral(w.eval, a, b).value;
}

double peano_kernel(const Weight& w, Interval iv, double x, double t) {
    require_positive_length(iv);
    require_inside(w, iv);
    require_point(iv, x, "x");
    require_point(iv, t, "t");
    if (t <= x) return moment(w, iv.a, t);
    return -moment(w, t, iv.b);
}

double kernel_integral(const Weight& w, Interval iv, double x) {
    require_positive_length(iv);
    require_inside(w, iv);
    require_point(iv, x, "x");
    if (w.has_closed_moment() && w.has_closed_moment2()) {
        const double m2a = w.moment_antiderivative2(iv.a);
        const double m2b = w.moment_antiderivative2(iv.b);
        const double ma = w.moment_antiderivative(iv.a);
        const double mb = w.moment_antiderivative(iv.b);
        return m2b - m2a - ma * (x - iv.a) - mb * (iv.b - x);
    }
    const RealFn left = [&](double t) { return moment(w, iv.a, t); };
    const RealFn right = [&](double t) { return -moment(w, t, iv.b); };
    return reference_integral(left, iv.a, x).value +
           reference_integral(right, x, iv.b).value;
}

double kernel_abs_integral(const Weight& w, Interval iv, double x) {
    require_positive_length(iv);
    require_inside(w, iv);
    require_point(iv, x, "x");
    if (w.has_closed_moment() && w.has_closed_moment2()) {
        const double m2a = w.moment_antiderivative2(iv.a);
        const double m2b = w.moment_antiderivative2(iv.b);
        const double m2x = w.moment_antiderivative2(x);
        const double ma = w.moment_antiderivative(iv.a);
        const double mb = w.moment_antiderivative(iv.b);
        return (m2x - m2a - ma * (x - iv.a)) + (mb * (iv.b - x) - m2b + m2x);
    }
    const RealFn left = [&](double t) { return moment(w, iv.a, t); };
    const RealFn right = [&](double t) { return moment(w, t, iv.b); };
    return reference_integral(left, iv.a, x).value +
           reference_integral(right, x, iv.b).value;
}

double correction_coefficient(const Weight& w, Interval iv, double x,
                              CorrectionMode mode) {
    require_positive_length(iv);
    require_inside(w, iv);
    require_point(iv, x, "x");
    if (mode == CorrectionMode::Paper) {
        return w(x) * iv.length() * (x - iv.midpoint());
    }
    return kernel_integral(w, iv, x);
}

}  // namespace wquad
