#include <doctest.h>

#include "rgenus/asymptotics.hpp"
#include "rgenus/error.hpp"
#include "rgenus/quadrature.hpp"
#include "support.hpp"

using namespace rgenus;
using namespace rgenus::test;

TEST_CASE("quadrature") {
    const auto r = integrate_adaptive([](double x) { return std::exp(-x * x); }, 0.0, 5.0, 1e-12);
    CHECK(r.value == doctest::Approx(std::sqrt(M_PI) / 2 * std::erf(5.0)).epsilon(1e-12));
    CHECK(r.error <= 1e-12);
    const auto s = integrate_adaptive([](double x) { return 1.0 / std::sqrt(x); }, 0.0, 1.0, 1e-8, 100000);
    CHECK(std::abs(s.value - 2.0) < 1e-7);
    CHECK_THROWS_AS(integrate_adaptive([](double x) { return std::sin(1.0 / x) / x; }, 1e-9, 1.0, 1e-14, 20),
                    ToleranceNotReached);
}

TEST_CASE("u examples") {
    CHECK(u(0, 1e-12).value == 1.0);
    CHECK(std::abs(u(0.6, 1e-12).value - 0.7) < 1e-12);
    const double tol = 1e-12;
    const auto two = u(2.0, tol);
    const long double direct = u_direct(2.0, 10'000'000);
    CHECK(std::abs(static_cast<long double>(two.value) - direct) < tol);
    CHECK(two.tail_bound <= tol);
    CHECK(two.truncation_index >= 1);
    for (double c : {0.3, 1.5, 3.0, 6.0}) CHECK(std::abs(static_cast<long double>(u(c, tol).value) - u_direct(c, 100000)) < tol);
    CHECK_THROWS_AS(u(-1.0, tol), DomainError);
    CHECK_THROWS_AS(u(NAN, tol), DomainError);
    CHECK_THROWS_AS(u(1.0, 0.0), DomainError);
}

TEST_CASE("u is 1 - c/2 below one and convex, non-increasing beyond") {
    const double tol = 1e-10;
    for (int k = 0; k <= 100; ++k) {
        const double c = k / 100.0;
        const auto r = u(c, tol);
        CHECK(std::abs(r.value - (1 - c / 2)) < tol);
        CHECK(r.tail_bound <= tol);
    }
    std::vector<double> vals;
    for (int k = 0; k <= 400; ++k) vals.push_back(u(k / 100.0, tol).value);
    for (std::size_t k = 1; k < vals.size(); ++k) CHECK(vals[k] <= vals[k - 1] + tol);
    for (std::size_t k = 1; k + 1 < vals.size(); ++k) CHECK(vals[k + 1] - 2 * vals[k] + vals[k - 1] >= -4 * tol);
}

TEST_CASE("u_prime") {
    const double tol = 1e-12;
    CHECK(std::abs(u_prime(0.5, tol).value + 0.5) < 1e-10);
    double prev = -1e9;
    for (int k = 1; k <= 40; ++k) {
        const double v = u_prime(k / 10.0, tol).value;
        if (k <= 10)
            CHECK(std::abs(v + 0.5) < 1e-10);
        else
            CHECK(v > prev);
        prev = v;
    }
    for (double c : {0.8, 1.5, 2.0, 3.0}) {
        const double h = 1e-5;
        const double fd = (u(c + h, 1e-14).value - u(c - h, 1e-14).value) / (2 * h);
        CHECK(std::abs(u_prime(c, tol).value - fd) < 1e-6);
    }
    CHECK_THROWS_AS(u_prime(0.0, tol), DomainError);
}

TEST_CASE("mu") {
    const double tol = 1e-12;
    CHECK(std::abs(mu(0.5, tol).value) < 1e-12);
    CHECK(std::abs(mu(0.3, tol).value) < 1e-12);
    CHECK(mu(0.0, tol).value == 0.0);
    const double m50 = mu(50, tol).value;
    CHECK(m50 > 0.48);
    CHECK(m50 < 0.5);
    CHECK(std::abs(mu(1, tol).value - static_cast<double>(u_direct(2.0, 100000)) / 2) < 1e-12);
    double prev = 0;
    for (int k = 51; k <= 2000; k += 7) {
        const double lam = k / 100.0;
        const double v = mu(lam, tol).value;
        CHECK(v > 0);
        CHECK(v < 0.5);
        CHECK(v > prev);
        const double series = (static_cast<double>(u_direct(2 * lam, 100000)) + lam - 1) / (2 * lam);
        CHECK(std::abs(v - series) < 1e-11);
        prev = v;
    }
}

TEST_CASE("lambda_i") {
    const double tol = 1e-10;
    CHECK(lambda_i(0, tol) == 0.0);
    const double l1 = lambda_i(1, tol), l2 = lambda_i(2, tol);
    CHECK(l1 > 0);
    CHECK(l2 > l1);
    for (double i : {0.1, 0.25, 0.5, 1.0, 1.5, 2.0, 3.0}) CHECK(std::abs(lambda_i(i, tol) - shi(2 * i)) < 1e-8);
    double prev = 0;
    for (int k = 1; k <= 30; ++k) {
        const double v = lambda_i(k / 10.0, 1e-8);
        CHECK(v > prev);
        prev = v;
    }
    const auto mc = lambda_mc(1.0, 2'000'000, 99);
    CHECK(std::abs(mc.mean - l1) < 5 * mc.stderr_);
    CHECK(std::abs(mc.mean - l1) < 1e-2);
    CHECK_THROWS_AS(lambda_i(-1, tol), DomainError);
}

TEST_CASE("predict_genus rows") {
    SUBCASE("slightly supercritical") {
        const std::uint64_t n = 1'000'000, s = 31623;
        const auto p = predict_genus(n, n / 2 + s);
        CHECK(p.regime == Regime::slightly_supercritical);
        CHECK(p.lo == doctest::Approx(8.0 * s * s * s / (3.0 * 1e12)));
        CHECK(p.lo == doctest::Approx(84.33).epsilon(1e-3));
    }
    SUBCASE("linear") {
        const auto p = predict_genus(10'000, 30'000);
        CHECK(p.regime == Regime::linear);
        CHECK(p.lambda.value() == 3.0);
        CHECK(p.lo == doctest::Approx(mu(3, 1e-12).value * 30'000));
        CHECK(p.hi == p.lo);
    }
    SUBCASE("dense") {
        const std::uint64_t n = 1000, m = n * (n - 1) / 4;
        const auto p = predict_genus(n, m);
        CHECK(p.regime == Regime::dense);
        CHECK(p.lo == doctest::Approx(m / 6.0));
    }
    SUBCASE("below and inside the window") {
        CHECK(predict_genus(10'000, 4'000).regime == Regime::planar_subcritical);
        CHECK(predict_genus(10'000, 4'000).hi == 0.0);
        CHECK(predict_genus(10'000, 5'100).regime == Regime::critical_window);
    }
    SUBCASE("power-law gap and boundary") {
        const std::uint64_t n = 10'000;
        const auto m = static_cast<std::uint64_t>(std::pow(1e4, 1.42));
        const auto gap = predict_genus(n, m);
        CHECK(gap.regime == Regime::power_law_gap);
        CHECK(gap.j.value() == 2);
        CHECK(gap.lo == doctest::Approx(m / 4.0));
        const auto b = predict_genus(1'000'000, 1'000'000'000);
        CHECK(b.regime == Regime::power_law_boundary);
        CHECK(b.j.value() == 2);
        CHECK(b.lo == doctest::Approx(1e9 / 6));
        CHECK(b.hi == doctest::Approx(1e9 / 4));
    }
    SUBCASE("near linear with a wider cutoff") {
        RegimeThresholds th;
        th.near_linear_max_exponent = 1.3;
        const auto p = predict_genus(10'000, 120'000, th);
        CHECK(p.regime == Regime::near_linear);
        CHECK(p.j.value() == 3);
        CHECK(p.hi == 60'000.0);
        CHECK(p.lo == doctest::Approx(60'000.0 * (1 - 0.4 - 1.0 / 12)));
    }
    CHECK_THROWS_AS(predict_genus(10, 46), DomainError);
}

TEST_CASE("predict_genus sweep is total with ordered intervals") {
    for (std::uint64_t n : {50ULL, 1000ULL, 100'000ULL, 10'000'000ULL}) {
        const double pairs = n * (n - 1) / 2.0;
        for (double m = 1; m <= pairs; m *= 1.07) {
            const auto p = predict_genus(n, static_cast<std::uint64_t>(m));
            CHECK(p.lo >= 0);
            CHECK(p.lo <= p.hi);
            CHECK(p.hi <= m / 2 + 1e-9);
            CHECK_FALSE(to_string(p.regime).empty());
        }
    }
}

TEST_CASE("contiguity verdicts") {
    const std::uint64_t n = 1000;
    const double t = n * n / 24.0;
    CHECK(contiguity_verdict(n, std::nullopt, n * n / 20.0, 0.1) == Contiguity::contiguous);
    CHECK(contiguity_verdict(n, std::nullopt, n * n / 30.0, 0.1) == Contiguity::not_contiguous);
    CHECK(contiguity_verdict(n, std::nullopt, t, 0.1) == Contiguity::undetermined);
    const std::uint64_t m = 3000;
    const double g = predict_genus(n, m).hi;
    CHECK(contiguity_verdict(n, m, 1.2 * g, 0.1) == Contiguity::contiguous);
    CHECK(contiguity_verdict(n, m, 0.8 * g, 0.1) == Contiguity::not_contiguous);
    CHECK(contiguity_verdict(n, m, g, 0.1) == Contiguity::undetermined);
    CHECK(contiguity_verdict(n, 100, 10.0, 0.1) == Contiguity::undetermined);
    CHECK_THROWS_AS(contiguity_verdict(n, m, g, 0.0), DomainError);
}
