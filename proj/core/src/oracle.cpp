#include "wquad/oracle.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

namespace wquad {

namespace {

// 15-point Kronrod extension of 7-point Gauss on [-1, 1].  Nonnegative
// abscissae only; the rule is symmetric.  The odd-indexed abscissae are the
// Gauss-7 points (weights kWg, center last).  Values are the classical
// QUADPACK constants.
constexpr std::array<double, 8> kXgk = {
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144838258730,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000,
};

constexpr std::array<double, 8> kWgk = {
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714,
};

constexpr std::array<double, 4> kWg = {
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327,
};

struct Panel {
    double k15;
    double g7;
};

Panel gk15_panel(const RealFn& g, double a, double b, long& evals) {
    const double c = 0.5 * (a + b);
    const double h = 0.5 * (b - a);
    const double fc = g(c);
    double k15 = kWgk[7] * fc;
    double g7 = kWg[3] * fc;
    for (int j = 0; j < 7; ++j) {
        const double dx = h * kXgk[j];
        const double lo = g(c - dx);
        const double hi = g(c + dx);
        k15 += kWgk[j] * (lo + hi);
        if (j % 2 == 1) g7 += kWg[j / 2] * (lo + hi);
    }
    evals += 15;
    if (!std::isfinite(k15)) {
        throw std::runtime_error(
            "oracle: integrand evaluated non-finite inside [" +
            std::to_string(a) + ", " + std::to_string(b) + "]");
    }
    return {k15 * h, g7 * h};
}

RealFn derivative_of(const TestFunction& f, int order) {
    switch (order) {
        case 0: return f.eval0;
        case 1: return f.eval1;
        case 2: return f.eval2;
        default:
            throw std::invalid_argument(
                "oracle: derivative order must be 0, 1 or 2, got " +
                std::to_string(order));
    }
}

// Refines a bracketed sign change of g to roughly machine precision.
double bisect_root(const RealFn& g, double lo, double hi, double glo) {
    for (int i = 0; i < 128; ++i) {
        const double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi) break;
        const double gm = g(mid);
        if (gm == 0.0) return mid;
        if ((glo < 0.0) != (gm < 0.0)) {
            hi = mid;
        } else {
            lo = mid;
            glo = gm;
        }
    }
    return 0.5 * (lo + hi);
}

// Interior points of [a, b] where g touches or crosses zero, found on a
// uniform grid of `cells` cells and sharpened by bisection.  Sorted,
// deduplicated, strictly inside (a, b).
std::vector<double> sign_change_points(const RealFn& g, double a, double b,
                                       int cells) {
    std::vector<double> cuts;
    auto push = [&](double t) {
        if (t <= a || t >= b) return;
        if (!cuts.empty() &&
            t - cuts.back() <= 1e-13 * std::max(1.0, std::fabs(t))) {
            return;
        }
        cuts.push_back(t);
    };
    double prev_t = a;
    double prev = g(a);
    for (int i = 1; i <= cells; ++i) {
        const double t = (i == cells) ? b : a + (b - a) * i / cells;
        const double cur = g(t);
        if (prev == 0.0) {
            push(prev_t);
        } else if (cur != 0.0 && (prev < 0.0) != (cur < 0.0)) {
            push(bisect_root(g, prev_t, t, prev));
        }
        prev_t = t;
        prev = cur;
    }
    return cuts;
}

// Golden-section maximization of ag (assumed unimodal on [lo, hi] up to the
// bracketing granularity; used only to sharpen grid maxima).
double golden_max(const RealFn& ag, double lo, double hi) {
    const double gr = (std::sqrt(5.0) - 1.0) / 2.0;
    double c = hi - gr * (hi - lo);
    double d = lo + gr * (hi - lo);
    double fc = ag(c);
    double fd = ag(d);
    for (int i = 0; i < 80; ++i) {
        if (hi - lo <= 1e-14 * std::max(1.0, std::fabs(lo) + std::fabs(hi))) break;
        if (fc > fd) {
            hi = d;
            d = c;
            fd = fc;
            c = hi - gr * (hi - lo);
            fc = ag(c);
        } else {
            lo = c;
            c = d;
            fc = fd;
            d = lo + gr * (hi - lo);
            fd = ag(d);
        }
    }
    return std::max(fc, fd);
}

}  // namespace

OracleResult reference_integral(const RealFn& g, double a, double b, double tol) {
    if (!std::isfinite(a) || !std::isfinite(b) || a > b) {
        throw std::invalid_argument(
            "oracle: integration bounds must be finite with a <= b");
    }
    if (!(tol > 0.0) || !std::isfinite(tol)) {
        throw std::invalid_argument("oracle: tolerance must be positive and finite");
    }
    OracleResult res;
    if (a == b) return res;

    const double ga = g(a);
    const double gb = g(b);
    res.evaluations += 2;
    if (!std::isfinite(ga) || !std::isfinite(gb)) {
        throw std::invalid_argument(
            "oracle: integrand is singular or non-finite at an interval endpoint; "
            "split the interval so each piece is smooth");
    }

    const Panel whole = gk15_panel(g, a, b, res.evaluations);
    const double scale = std::max(1.0, std::fabs(whole.k15));
    const double budget_per_length = tol * scale / (b - a);
    constexpr int kMaxDepth = 48;

    struct Seg {
        double a;
        double b;
        int depth;
        Panel p;
    };
    // LIFO with the left child pushed last keeps processing (and therefore
    // summation) strictly left to right, which makes the result a fixed-order
    // sum and the whole routine deterministic.
    std::vector<Seg> stack;
    stack.push_back({a, b, 0, whole});
    double sum = 0.0;
    double err = 0.0;
    while (!stack.empty()) {
        const Seg s = stack.back();
        stack.pop_back();
        const double panel_err = std::fabs(s.p.k15 - s.p.g7);
        if (panel_err <= budget_per_length * (s.b - s.a)) {
            sum += s.p.k15;
            err += panel_err;
            continue;
        }
        if (s.depth >= kMaxDepth) {
            throw std::runtime_error(
                "oracle: tolerance " + std::to_string(tol) +
                " not met at maximum bisection depth " + std::to_string(kMaxDepth));
        }
        const double mid = 0.5 * (s.a + s.b);
        const Panel left = gk15_panel(g, s.a, mid, res.evaluations);
        const Panel right = gk15_panel(g, mid, s.b, res.evaluations);
        stack.push_back({mid, s.b, s.depth + 1, right});
        stack.push_back({s.a, mid, s.depth + 1, left});
    }
    res.value = sum;
    res.error_estimate = err;
    return res;
}

double weighted_seminorm(const TestFunction& f, const Weight& w, Interval iv,
                         int order, SeminormP p) {
    const RealFn g = derivative_of(f, order);
    if (!(iv.a < iv.b)) {
        throw std::domain_error("oracle: seminorm interval must have positive length");
    }
    if (!f.domain.contains_interval(iv.a, iv.b) ||
        !w.domain.contains_interval(iv.a, iv.b)) {
        throw std::domain_error("oracle: seminorm interval [" +
                                std::to_string(iv.a) + ", " + std::to_string(iv.b) +
                                "] leaves the domain of '" + f.id + "' or '" +
                                w.id + "'");
    }

    if (p == SeminormP::One) {
        std::vector<double> cuts = sign_change_points(g, iv.a, iv.b, 256);
        cuts.insert(cuts.begin(), iv.a);
        cuts.push_back(iv.b);
        const RealFn integrand = [&](double t) {
            return std::fabs(g(t)) * w.eval(t);
        };
        double total = 0.0;
        for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
            total += reference_integral(integrand, cuts[i], cuts[i + 1]).value;
        }
        return total;
    }

    // SeminormP::Infinity: dense scan, then sharpen.
    const RealFn ag = [&](double t) { return std::fabs(g(t)); };
    const int n = 1024;
    std::vector<double> ts(n + 1);
    std::vector<double> vs(n + 1);
    double best = 0.0;
    for (int i = 0; i <= n; ++i) {
        ts[i] = (i == n) ? iv.b : iv.a + iv.length() * i / n;
        vs[i] = ag(ts[i]);
        best = std::max(best, vs[i]);
    }
    for (int i = 1; i < n; ++i) {
        if (vs[i] >= vs[i - 1] && vs[i] >= vs[i + 1]) {
            best = std::max(best, golden_max(ag, ts[i - 1], ts[i + 1]));
        }
    }
    // Stationary points of g are the candidates the grid can miss entirely;
    // the registry provides the next derivative for order 0 and 1.
    if (order <= 1) {
        const RealFn d = derivative_of(f, order + 1);
        for (double z : sign_change_points(d, iv.a, iv.b, 256)) {
            best = std::max(best, ag(z));
        }
    }
    return best;
}

}  // namespace wquad
