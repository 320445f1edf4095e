#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "wquad/bounds.hpp"

using namespace wquad;

namespace {

// |u - v| <= tol * max(1, |v|): relative in the large, absolute near zero.
bool close(double u, double v, double tol) {
    return std::fabs(u - v) <= tol * std::max(1.0, std::fabs(v));
}

}  // namespace

TEST_CASE("id parsing, names and aliases") {
    CHECK(parse_inequality("OSTROWSKI_1_1") == InequalityId::Ostrowski_1_1);
    CHECK(parse_inequality("1.1") == InequalityId::Ostrowski_1_1);
    CHECK(parse_inequality("L1_1_2") == InequalityId::L1_1_2);
    CHECK(parse_inequality("2.1") == InequalityId::Weighted_2_1);
    CHECK(parse_inequality("UNWEIGHTED_2_6") == InequalityId::Unweighted_2_6);
    CHECK(parse_inequality("2.7") == InequalityId::Midpoint_2_7);
    CHECK(parse_inequality("TRAPEZOID_2_8") == InequalityId::Trapezoid_2_8);
    CHECK_THROWS_AS(parse_inequality("2.9"), std::invalid_argument);
    CHECK_THROWS_AS(parse_inequality("ostrowski_1_1"), std::invalid_argument);

    for (InequalityId id : all_inequalities()) {
        CHECK(parse_inequality(inequality_name(id)) == id);
        CHECK(!describe(id).empty());
    }
    REQUIRE(all_inequalities().size() == 7);
    CHECK(describe(InequalityId::Weighted_2_1).find("Eq. (2.1)") != std::string::npos);
    CHECK(describe(InequalityId::Midpoint_2_7).find("Eq. (2.7)") != std::string::npos);
}

TEST_CASE("x and weight requirements") {
    CHECK(requires_x(InequalityId::Ostrowski_1_1));
    CHECK(requires_x(InequalityId::Weighted_2_1));
    CHECK(!requires_x(InequalityId::Midpoint_2_7));
    CHECK(!requires_x(InequalityId::Trapezoid_2_8));

    CHECK(requires_unit_weight(InequalityId::Ostrowski_1_1));
    CHECK(requires_unit_weight(InequalityId::L1_1_2));
    CHECK(requires_unit_weight(InequalityId::Twice_1_3));
    CHECK(requires_unit_weight(InequalityId::Unweighted_2_6));
    CHECK(!requires_unit_weight(InequalityId::Weighted_2_1));
    CHECK(!requires_unit_weight(InequalityId::Midpoint_2_7));
    CHECK(!requires_unit_weight(InequalityId::Trapezoid_2_8));
}

TEST_CASE("holds tolerance and report conventions") {
    CHECK(holds_tolerance(0.0) == 1e-9);
    CHECK(holds_tolerance(0.5) == 1e-9);
    CHECK(holds_tolerance(4.0) == 4e-9);

    auto iv = make_interval(0.0, 1.0);
    auto r = assemble_report(InequalityId::Ostrowski_1_1, 2.0 + 5e-10, 2.0, "f", "unit",
                             iv, 0.5, CorrectionMode::Paper);
    CHECK(r.holds);  // inside the slack
    CHECK(r.margin == doctest::Approx(-5e-10));
    r = assemble_report(InequalityId::Ostrowski_1_1, 2.0 + 5e-9, 2.0, "f", "unit", iv,
                        0.5, CorrectionMode::Paper);
    CHECK(!r.holds);  // outside the slack
    r = assemble_report(InequalityId::Ostrowski_1_1, 0.0, 0.0, "f", "unit", iv, 0.5,
                        CorrectionMode::Paper);
    CHECK(r.holds);
    CHECK(!r.ratio.has_value());  // rhs == 0 leaves the ratio undefined
    r = assemble_report(InequalityId::Ostrowski_1_1, 1.0, 4.0, "f", "unit", iv, 0.5,
                        CorrectionMode::Paper);
    REQUIRE(r.ratio.has_value());
    CHECK(*r.ratio == doctest::Approx(0.25).epsilon(1e-15));
}

TEST_CASE("classical bound is sharp for f(t) = t at x = 0") {
    auto r = evaluate_bound(InequalityId::Ostrowski_1_1, function("identity"),
                            weight("unit"), make_interval(0.0, 1.0), 0.0);
    CHECK(close(r.lhs, 0.5, 1e-12));
    CHECK(close(r.rhs, 0.5, 1e-12));
    CHECK(r.holds);
    REQUIRE(r.ratio.has_value());
    CHECK(close(*r.ratio, 1.0, 1e-11));
}

TEST_CASE("L1 variant for f(t) = t") {
    auto r = evaluate_bound(InequalityId::L1_1_2, function("identity"), weight("unit"),
                            make_interval(0.0, 1.0), 0.0);
    CHECK(close(r.lhs, 0.5, 1e-12));
    CHECK(close(r.rhs, 1.0, 1e-12));  // (1/2 + 1/2) * ||f'||_1 = 1
    CHECK(r.holds);
}

TEST_CASE("second-order variants on exp over [0, 1]") {
    auto f = function("exp");
    auto iv = make_interval(0.0, 1.0);
    // x = 0.25, d = -0.25, mean = e - 1, ||f''||_1 = e - 1
    auto r13 = evaluate_bound(InequalityId::Twice_1_3, f, weight("unit"), iv, 0.25);
    const double em1 = 1.7182818284590452;
    const double lhs = std::fabs(std::exp(0.25) + 0.25 * std::exp(0.25) - em1);
    CHECK(close(r13.lhs, lhs, 1e-12));
    CHECK(close(r13.rhs, 0.5625 * em1 / 2.0, 1e-12));  // (0.25 + 0.5)^2 /2 * ||f''||_1
    CHECK(r13.holds);

    auto r26 = evaluate_bound(InequalityId::Unweighted_2_6, f, weight("unit"), iv, 0.25);
    CHECK(close(r26.lhs, lhs, 1e-12));
    // (L^2/2 + 2 d^2)(L/2 + |d|) / (2 L^2) * ||f''||_1 = 0.625 * 0.75 / 2 * (e-1)
    CHECK(close(r26.rhs, 0.625 * 0.75 / 2.0 * em1, 1e-12));
    CHECK(r26.holds);
    // the refined constant is never worse for |d| <= L/2
    CHECK(r26.rhs <= r13.rhs * (1.0 + 1e-12));
}

TEST_CASE("refined rhs never exceeds the squared-bracket rhs") {
    auto f = function("sin");
    auto iv = make_interval(-1.0, 2.0);
    for (double x : {-1.0, -0.3, 0.5, 1.7, 2.0}) {
        auto r13 = evaluate_bound(InequalityId::Twice_1_3, f, weight("unit"), iv, x);
        auto r26 = evaluate_bound(InequalityId::Unweighted_2_6, f, weight("unit"), iv, x);
        CHECK(close(r13.lhs, r26.lhs, 1e-12));
        CHECK(r26.rhs <= r13.rhs * (1.0 + 1e-12));
    }
}

TEST_CASE("weighted general bound reduces to the unit-weight display") {
    // With w = 1 the weighted statement and its reduction are the same
    // inequality; both modes of the correction coefficient coincide too.
    auto f = function("cubic");
    auto iv = make_interval(-0.5, 1.5);
    for (double x : {-0.5, 0.1, 0.5, 1.5}) {
        auto general = evaluate_bound(InequalityId::Weighted_2_1, f, weight("unit"), iv,
                                      x, CorrectionMode::Paper);
        auto reduced = evaluate_bound(InequalityId::Unweighted_2_6, f, weight("unit"),
                                      iv, x);
        CHECK(close(general.lhs, reduced.lhs, 1e-12));
        CHECK(close(general.rhs, reduced.rhs, 1e-12));

        auto exact = evaluate_bound(InequalityId::Weighted_2_1, f, weight("unit"), iv,
                                    x, CorrectionMode::Exact);
        CHECK(close(exact.lhs, general.lhs, 1e-12));
        CHECK(close(exact.rhs, general.rhs, 1e-12));
    }
}

TEST_CASE("midpoint consequence equals the general bound at x = (a+b)/2") {
    auto f = function("exp");
    auto iv = make_interval(0.0, 2.0);
    auto mid = evaluate_bound(InequalityId::Midpoint_2_7, f, weight("unit"), iv,
                              std::nullopt);
    auto gen = evaluate_bound(InequalityId::Weighted_2_1, f, weight("unit"), iv, 1.0);
    CHECK(close(mid.lhs, gen.lhs, 1e-12));
    CHECK(close(mid.rhs, gen.rhs, 1e-12));
    REQUIRE(mid.x.has_value());
    CHECK(*mid.x == 1.0);  // reports the point it actually used

    // supplied x is ignored
    auto mid2 = evaluate_bound(InequalityId::Midpoint_2_7, f, weight("unit"), iv, 0.3);
    CHECK(mid2.lhs == mid.lhs);
    CHECK(mid2.rhs == mid.rhs);
}

TEST_CASE("documented violation: midpoint display fails for sqrt_ln with 1/sqrt weight") {
    auto r = evaluate_bound(InequalityId::Midpoint_2_7, function("sqrt_ln"),
                            weight("inv_sqrt"), make_interval(1.0, 2.0), std::nullopt,
                            CorrectionMode::Paper);
    CHECK(close(r.lhs, 0.030292768841765559, 1e-11));
    CHECK(close(r.rhs, 0.0057042150991553023, 1e-11));
    CHECK(!r.holds);
    CHECK(r.margin < 0.0);
    REQUIRE(r.ratio.has_value());
    CHECK(*r.ratio > 5.0);
}

TEST_CASE("weighted bound holds for inv_sqrt_f with 1/sqrt weight") {
    auto r = evaluate_bound(InequalityId::Weighted_2_1, function("inv_sqrt_f"),
                            weight("inv_sqrt"), make_interval(1.0, 2.0), 1.5,
                            CorrectionMode::Paper);
    CHECK(close(r.lhs, 0.020206081086520218, 1e-11));
    CHECK(close(r.rhs, 0.041826188843628057, 1e-11));
    CHECK(r.holds);
}

TEST_CASE("trapezoid consequence: unit weight, both modes coincide") {
    auto f = function("square");
    auto iv = make_interval(0.0, 1.0);
    auto paper = evaluate_bound(InequalityId::Trapezoid_2_8, f, weight("unit"), iv,
                                std::nullopt, CorrectionMode::Paper);
    // 0.5(f(0)+f(1)) = 0.5, mean = 1/3, corr = (1/4)(0 - 2) = -0.5
    CHECK(close(paper.lhs, 1.0 / 3.0, 1e-12));
    // L^3 (w(a)+w(b)) ||f''||_1 / (4 m^2) = 2 * 2 / 4 = 1
    CHECK(close(paper.rhs, 1.0, 1e-12));
    CHECK(paper.holds);
    CHECK(!paper.x.has_value());

    auto exact = evaluate_bound(InequalityId::Trapezoid_2_8, f, weight("unit"), iv,
                                std::nullopt, CorrectionMode::Exact);
    CHECK(close(exact.lhs, paper.lhs, 1e-12));
    CHECK(close(exact.rhs, paper.rhs, 1e-12));
}

TEST_CASE("argument validation") {
    auto f = function("square");
    const auto& unit = weight("unit");
    const auto& w = weight("inv_sqrt");
    auto iv = make_interval(1.0, 2.0);

    // unit-only ids reject other weights
    CHECK_THROWS_AS(evaluate_bound(InequalityId::Ostrowski_1_1, f, w, iv, 1.5),
                    std::invalid_argument);
    CHECK_THROWS_AS(evaluate_bound(InequalityId::Unweighted_2_6, f, w, iv, 1.5),
                    std::invalid_argument);
    // x required
    CHECK_THROWS_AS(evaluate_bound(InequalityId::Weighted_2_1, f, unit, iv, std::nullopt),
                    std::invalid_argument);
    // x out of range
    CHECK_THROWS_AS(evaluate_bound(InequalityId::Ostrowski_1_1, f, unit, iv, 2.5),
                    std::domain_error);
    // degenerate interval
    CHECK_THROWS_AS(evaluate_bound(InequalityId::Ostrowski_1_1, f, unit,
                                   Interval{1.0, 1.0}, 1.0),
                    std::domain_error);
    // interval outside the weight domain
    CHECK_THROWS_AS(evaluate_bound(InequalityId::Weighted_2_1, f, w,
                                   Interval{-1.0, 1.0}, 0.0),
                    std::domain_error);
}
