#include "wquad/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <queue>
#include <stdexcept>
#include <string>

#include "wquad/oracle.hpp"
#include "wquad/rng.hpp"

namespace wquad {

namespace {

void require_domains(const TestFunction& f, const Weight& w, double a, double b) {
    if (!f.domain.contains_interval(a, b) || !w.domain.contains_interval(a, b)) {
        throw std::domain_error("quadrature: [" + std::to_string(a) + ", " +
                                std::to_string(b) + "] leaves the domain of '" +
                                f.id + "' or '" + w.id + "'");
    }
}

void require_matching(const Partition& part, const Xi& xi) {
    if (static_cast<int>(xi.points.size()) != part.size()) {
        throw std::invalid_argument(
            "quadrature: partition has " + std::to_string(part.size()) +
            " cells but " + std::to_string(xi.points.size()) +
            " evaluation points were given");
    }
    for (int i = 0; i < part.size(); ++i) {
        if (!part.cell(i).contains(xi.points[i])) {
            throw std::domain_error("quadrature: evaluation point " +
                                    std::to_string(xi.points[i]) +
                                    " outside its cell");
        }
    }
}

double local_estimate(const TestFunction& f, const Weight& w, Interval cell,
                      double xi, CorrectionMode mode) {
    const double m = moment(w, cell.a, cell.b);
    const double c = correction_coefficient(w, cell, xi, mode);
    return m * f.eval0(xi) - c * f.eval1(xi);
}

double local_bound(const TestFunction& f, const Weight& w, Interval cell,
                   double xi) {
    const double m = moment(w, cell.a, cell.b);
    const double h = cell.length();
    const double d = xi - cell.midpoint();
    const double snorm = weighted_seminorm(f, w, cell, 2, SeminormP::One);
    return w(xi) / (2.0 * m) * (0.5 * h * h + 2.0 * d * d) *
           (0.5 * h + std::fabs(d)) * snorm;
}

OracleResult reference_fw(const TestFunction& f, const Weight& w, double a,
                          double b) {
    const RealFn integrand = [&](double t) { return f.eval0(t) * w.eval(t); };
    return reference_integral(integrand, a, b);
}

}  // namespace

Partition Partition::uniform(Interval iv, int n) {
    if (n < 1) {
        throw std::invalid_argument("quadrature: a partition needs n >= 1 cells, got " +
                                    std::to_string(n));
    }
    if (!(iv.a < iv.b)) {
        throw std::domain_error("quadrature: a partition needs positive length");
    }
    std::vector<double> nodes(n + 1);
    for (int i = 0; i <= n; ++i) {
        nodes[i] = (i == n) ? iv.b : iv.a + iv.length() * i / n;
    }
    return {std::move(nodes)};
}

Partition Partition::from_nodes(std::vector<double> nodes) {
    if (nodes.size() < 2) {
        throw std::invalid_argument("quadrature: a partition needs at least two nodes");
    }
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        if (!std::isfinite(nodes[i])) {
            throw std::domain_error("quadrature: partition nodes must be finite");
        }
        if (i > 0 && !(nodes[i - 1] < nodes[i])) {
            throw std::domain_error(
                "quadrature: partition nodes must be strictly increasing");
        }
    }
    return {std::move(nodes)};
}

Xi Xi::midpoints(const Partition& part) {
    Xi xi;
    xi.points.reserve(part.size());
    for (int i = 0; i < part.size(); ++i) xi.points.push_back(part.cell(i).midpoint());
    return xi;
}

Xi Xi::left(const Partition& part) {
    Xi xi;
    xi.points.assign(part.nodes.begin(), part.nodes.end() - 1);
    return xi;
}

Xi Xi::right(const Partition& part) {
    Xi xi;
    xi.points.assign(part.nodes.begin() + 1, part.nodes.end());
    return xi;
}

Xi Xi::random(const Partition& part, std::uint64_t seed) {
    UniformRng rng(seed);
    Xi xi;
    xi.points.reserve(part.size());
    for (int i = 0; i < part.size(); ++i) {
        const Interval cell = part.cell(i);
        xi.points.push_back(rng.in(cell.a, cell.b));
    }
    return xi;
}

double one_point_estimate(const TestFunction& f, const Weight& w, Interval iv,
                          double x, CorrectionMode mode) {
    if (iv.a == iv.b) return 0.0;
    require_domains(f, w, iv.a, iv.b);
    if (!iv.contains(x)) {
        throw std::domain_error("quadrature: x = " + std::to_string(x) +
                                " outside [" + std::to_string(iv.a) + ", " +
                                std::to_string(iv.b) + "]");
    }
    return local_estimate(f, w, iv, x, mode);
}

double composite_estimate(const TestFunction& f, const Weight& w,
                          const Partition& part, const Xi& xi,
                          CorrectionMode mode) {
    require_domains(f, w, part.a(), part.b());
    require_matching(part, xi);
    double sum = 0.0;
    for (int i = 0; i < part.size(); ++i) {
        sum += local_estimate(f, w, part.cell(i), xi.points[i], mode);
    }
    return sum;
}

double composite_bound(const TestFunction& f, const Weight& w,
                       const Partition& part, const Xi& xi) {
    require_domains(f, w, part.a(), part.b());
    require_matching(part, xi);
    double sum = 0.0;
    for (int i = 0; i < part.size(); ++i) {
        sum += local_bound(f, w, part.cell(i), xi.points[i]);
    }
    return sum;
}

QuadratureResult composite_run(const TestFunction& f, const Weight& w,
                               const Partition& part, const Xi& xi,
                               CorrectionMode mode, bool with_reference) {
    require_domains(f, w, part.a(), part.b());
    require_matching(part, xi);
    QuadratureResult res;
    res.cells.reserve(part.size());
    for (int i = 0; i < part.size(); ++i) {
        const Interval cell = part.cell(i);
        const double p = xi.points[i];
        const double est = local_estimate(f, w, cell, p, mode);
        const double bnd = local_bound(f, w, cell, p);
        res.estimate += est;
        res.bound += bnd;
        res.cells.push_back({cell, p, est, bnd});
    }
    if (with_reference) {
        res.reference = reference_fw(f, w, part.a(), part.b()).value;
        res.actual_error = std::fabs(res.estimate - *res.reference);
    }
    return res;
}

QuadratureResult adaptive_integrate(const TestFunction& f, const Weight& w,
                                    Interval iv, double tol,
                                    CorrectionMode mode) {
    if (!(tol > 0.0) || !std::isfinite(tol)) {
        throw std::invalid_argument("quadrature: tolerance must be positive and finite");
    }
    QuadratureResult res;
    if (iv.a == iv.b) {
        res.reference = 0.0;
        res.actual_error = 0.0;
        return res;
    }
    require_domains(f, w, iv.a, iv.b);

    struct Cell {
        double a;
        double b;
        int depth;
        double estimate;
        double bound;
    };
    // Max-heap on the local bound; ties resolved towards the leftmost cell so
    // refinement order (and therefore the result) is deterministic.
    const auto heap_less = [](const Cell& lhs, const Cell& rhs) {
        if (lhs.bound != rhs.bound) return lhs.bound < rhs.bound;
        return lhs.a > rhs.a;
    };
    std::priority_queue<Cell, std::vector<Cell>, decltype(heap_less)> heap(heap_less);

    const auto make_cell = [&](double a, double b, int depth) {
        const Interval cell{a, b};
        const double x = cell.midpoint();
        return Cell{a, b, depth, local_estimate(f, w, cell, x, mode),
                    local_bound(f, w, cell, x)};
    };

    constexpr int kMaxDepth = 60;
    constexpr std::size_t kMaxCells = 100000;

    heap.push(make_cell(iv.a, iv.b, 0));
    double total_bound = heap.top().bound;
    while (total_bound > tol) {
        const Cell top = heap.top();
        if (top.depth >= kMaxDepth || heap.size() >= kMaxCells) {
            res.tolerance_met = false;
            break;
        }
        heap.pop();
        const double mid = 0.5 * (top.a + top.b);
        const Cell left = make_cell(top.a, mid, top.depth + 1);
        const Cell right = make_cell(mid, top.b, top.depth + 1);
        total_bound += left.bound + right.bound - top.bound;
        heap.push(left);
        heap.push(right);
    }

    std::vector<CellContribution> cells;
    cells.reserve(heap.size());
    while (!heap.empty()) {
        const Cell& c = heap.top();
        cells.push_back({{c.a, c.b}, 0.5 * (c.a + c.b), c.estimate, c.bound});
        heap.pop();
    }
    std::sort(cells.begin(), cells.end(),
              [](const CellContribution& lhs, const CellContribution& rhs) {
                  return lhs.cell.a < rhs.cell.a;
              });
    for (const CellContribution& c : cells) {
        res.estimate += c.estimate;
        res.bound += c.bound;
    }
    res.cells = std::move(cells);
    res.reference = reference_fw(f, w, iv.a, iv.b).value;
    res.actual_error = std::fabs(res.estimate - *res.reference);
    return res;
}

std::vector<QuadratureResult> convergence_table(const TestFunction& f,
                                                const Weight& w, Interval iv,
                                                const std::vector<int>& ns,
                                                CorrectionMode mode) {
    if (ns.empty()) {
        throw std::invalid_argument("quadrature: convergence table needs at least one n");
    }
    if (!(iv.a < iv.b)) {
        throw std::domain_error("quadrature: convergence table needs positive length");
    }
    require_domains(f, w, iv.a, iv.b);
    const double reference = reference_fw(f, w, iv.a, iv.b).value;
    std::vector<QuadratureResult> rows;
    rows.reserve(ns.size());
    for (int n : ns) {
        const Partition part = Partition::uniform(iv, n);
        QuadratureResult row =
            composite_run(f, w, part, Xi::midpoints(part), mode, false);
        row.reference = reference;
        row.actual_error = std::fabs(row.estimate - reference);
        rows.push_back(std::move(row));
    }
    return rows;
}

}  // namespace wquad
