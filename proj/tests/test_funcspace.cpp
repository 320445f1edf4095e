#include <doctest.h>

#include <cmath>
#include <limits>
#include <stdexcept>

#include "wquad/funcspace.hpp"
#include "wquad/interval.hpp"

using namespace wquad;

TEST_CASE("registry ids and order") {
    auto fns = function_ids();
    REQUIRE(fns.size() == 10);
    CHECK(fns[0] == "constant");
    CHECK(fns[1] == "identity");
    CHECK(fns[2] == "square");
    CHECK(fns[3] == "cubic");
    CHECK(fns[4] == "poly6");
    CHECK(fns[5] == "exp");
    CHECK(fns[6] == "sin");
    CHECK(fns[7] == "sqrt_ln");
    CHECK(fns[8] == "inv_sqrt_f");
    CHECK(fns[9] == "pow_p_half");

    auto ws = weight_ids();
    REQUIRE(ws.size() == 2);
    CHECK(ws[0] == "unit");
    CHECK(ws[1] == "inv_sqrt");
}

TEST_CASE("polynomial derivatives are exact") {
    auto f = function("cubic");
    CHECK(f(0, 1.5) == doctest::Approx(3.375).epsilon(1e-15));
    CHECK(f(1, 1.5) == doctest::Approx(6.75).epsilon(1e-15));
    CHECK(f(2, 1.5) == doctest::Approx(9.0).epsilon(1e-15));

    auto p6 = function("poly6");
    // t^6 - 3t^4 + 2t^2 - t + 1 at t = 2: 64 - 48 + 8 - 2 + 1 = 23
    CHECK(p6(0, 2.0) == doctest::Approx(23.0).epsilon(1e-15));
    // second derivative 30t^4 - 36t^2 + 4 at t = 1 -> -2
    CHECK(p6(2, 1.0) == doctest::Approx(-2.0).epsilon(1e-15));
    // ... and it really does change sign inside [-2, 2]
    CHECK(p6(2, 0.0) > 0.0);
    CHECK(p6(2, 1.0) < 0.0);
    CHECK(p6(2, 2.0) > 0.0);
}

TEST_CASE("sqrt_ln closed-form derivatives") {
    auto f = function("sqrt_ln");
    const double t = 2.0;
    CHECK(f(0, t) == doctest::Approx(std::sqrt(2.0) * std::log(2.0)).epsilon(1e-15));
    CHECK(f(1, t) ==
          doctest::Approx((std::log(t) + 2.0) / (2.0 * std::sqrt(t))).epsilon(1e-15));
    CHECK(f(2, t) ==
          doctest::Approx(-std::log(t) / (4.0 * std::pow(t, 1.5))).epsilon(1e-15));
    // f'' changes sign at t = 1
    CHECK(f(2, 0.5) > 0.0);
    CHECK(f(2, 2.0) < 0.0);
}

TEST_CASE("inv_sqrt_f derivatives") {
    auto f = function("inv_sqrt_f");
    const double t = 4.0;
    CHECK(f(0, t) == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(f(1, t) == doctest::Approx(-0.5 * std::pow(t, -1.5)).epsilon(1e-15));
    CHECK(f(2, t) == doctest::Approx(0.75 * std::pow(t, -2.5)).epsilon(1e-15));
}

TEST_CASE("pow_p_half parameterization") {
    auto f = function("pow_p_half", 2.0);  // t^{5/2}
    CHECK(f(0, 4.0) == doctest::Approx(32.0).epsilon(1e-15));
    CHECK(f(1, 4.0) == doctest::Approx(2.5 * std::pow(4.0, 1.5)).epsilon(1e-15));
    CHECK(f(2, 4.0) == doctest::Approx(3.75 * std::pow(4.0, 0.5)).epsilon(1e-15));

    CHECK_THROWS_AS(function("pow_p_half", -1.0), std::invalid_argument);
    CHECK_THROWS_AS(function("pow_p_half", 0.0), std::invalid_argument);
    CHECK_THROWS_AS(function("pow_p_half"), std::invalid_argument);    // p required
    CHECK_THROWS_AS(function("identity", 2.0), std::invalid_argument);  // p rejected
}

TEST_CASE("domain enforcement") {
    auto f = function("sqrt_ln");
    CHECK_THROWS_AS(f(0, 0.0), std::domain_error);
    CHECK_THROWS_AS(f(0, -1.0), std::domain_error);
    CHECK_NOTHROW(f(0, 1e-8));

    const auto& w = weight("inv_sqrt");
    CHECK_THROWS_AS(w(0.0), std::domain_error);
    CHECK(w(4.0) == doctest::Approx(0.5).epsilon(1e-15));

    CHECK_THROWS_AS(eval(f, 3, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(eval(f, -1, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(function("nonsense"), std::invalid_argument);
    CHECK_THROWS_AS(weight("nonsense"), std::invalid_argument);
}

TEST_CASE("weight moment antiderivatives") {
    const auto& unit = weight("unit");
    CHECK(unit.moment_antiderivative(3.0) == doctest::Approx(3.0).epsilon(1e-15));
    CHECK(unit.moment_antiderivative2(3.0) == doctest::Approx(4.5).epsilon(1e-15));

    const auto& w = weight("inv_sqrt");
    CHECK(w.moment_antiderivative(4.0) == doctest::Approx(4.0).epsilon(1e-15));
    CHECK(w.moment_antiderivative2(4.0) ==
          doctest::Approx(4.0 / 3.0 * 8.0).epsilon(1e-15));
    CHECK(w.has_closed_moment());
    CHECK(w.has_closed_moment2());
}

TEST_CASE("finite-difference fallback approximates analytic derivatives") {
    auto g = with_finite_differences("exp_fd", Domain::real_line(),
                                     [](double t) { return std::exp(t); });
    CHECK(g(0, 0.7) == doctest::Approx(std::exp(0.7)).epsilon(1e-15));
    // central difference is O(h^2) with h ~ cbrt(eps)
    CHECK(g(1, 0.7) == doctest::Approx(std::exp(0.7)).epsilon(1e-9));
    CHECK(g(2, 0.7) == doctest::Approx(std::exp(0.7)).epsilon(1e-4));
}

TEST_CASE("interval validation") {
    auto iv = make_interval(1.0, 3.0);
    CHECK(iv.length() == 2.0);
    CHECK(iv.midpoint() == 2.0);
    CHECK(iv.contains(1.0));
    CHECK(!iv.contains(3.5));
    CHECK_THROWS_AS(make_interval(2.0, 1.0), std::domain_error);
    CHECK_THROWS_AS(make_interval(0.0, std::numeric_limits<double>::infinity()),
                    std::domain_error);
    CHECK_NOTHROW(make_interval(2.0, 2.0));  // degenerate allowed at this layer
}

TEST_CASE("open domain membership is strict") {
    Domain pos = Domain::positive();
    CHECK(!pos.contains(0.0));
    CHECK(pos.contains(1e-300));
    CHECK(!pos.contains_interval(0.0, 1.0));
    CHECK(pos.contains_interval(0.5, 1.0));
}
