// SPDX-License-Identifier: MIT
#include <cmath>
#include <random>

#include "doctest.h"
#include "zs/geometry.hpp"
#include "zs/potential.hpp"

using namespace zs;

TEST_SUITE("potential") {
TEST_CASE("field values") {
    Potential pot;
    CHECK(std::abs(pot.A(0.0) - 1.0) < 1e-15);
    CHECK(std::abs(pot.A(5.0) - 2 * std::exp(-10.0) / (1 + std::exp(-20.0))) < 1e-12);
    try {
        pot.A(cplx(0, pi / 4));
        FAIL("no pole error");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::PoleProximity);
    }
}

TEST_CASE("V0 examples") {
    Potential pot;
    CHECK(std::abs(pot.V0(0.0, I)) < 1e-15);
    CHECK(std::abs(pot.V0(0.0, cplx(0, 0.2)) + 0.96) < 1e-15);
    CHECK(std::abs(pot.V0(10.0, 0.5) + 0.25) < 1e-8);
}

TEST_CASE("correction term g") {
    Potential pot;
    cplx lam(0, 0.2);
    // g = phi''/phi with phi = (A - i(lam + S'/2))^{-1/2}; five-point difference
    auto phi = [&](cplx x) {
        Fields f = pot.fields(x);
        return std::pow(f.A - I * (lam + 0.5 * f.S1), -0.5);
    };
    for (cplx x : {cplx(0.0), cplx(0.3, 0.1), cplx(-0.7, 0.05)}) {
        double h = 1e-3;
        cplx d2 = (-phi(x + 2 * h) + 16.0 * phi(x + h) - 30.0 * phi(x) + 16.0 * phi(x - h) - phi(x - 2 * h)) / (12 * h * h);
        CHECK(std::abs(d2 / phi(x) - pot.correction_g(x, lam)) < 1e-6);
    }
    // the denominator A - i(lam + S'/2) = i g_+ vanishes at zeros of g_+
    TurningPointSet t = find_turning_points(pot, lam);
    REQUIRE(t[3].gclass == GClass::GPlusZero);
    try {
        pot.correction_g(t.x(3), lam);
        FAIL("no error");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::DenominatorVanishes);
    }
    double prev = 1e300;
    for (double x = 3; x <= 8; x += 0.25) {
        double g = std::abs(pot.correction_g(x, 1.0));
        CHECK(g < 1);
        CHECK(g < prev);
        prev = g;
    }
}

TEST_CASE("numerical range") {
    Rect r = Potential().numerical_range();
    CHECK(r.re_lo == doctest::Approx(-0.5));
    CHECK(r.re_hi == doctest::Approx(0.5));
    CHECK(r.im_lo == doctest::Approx(-1));
    CHECK(r.im_hi == doctest::Approx(1));
    CHECK(Potential(2.0).numerical_range().im_hi == doctest::Approx(2));
    Rect z = Potential(1.0, 0.0).numerical_range();
    CHECK(z.re_lo == 0.0);
    CHECK(z.re_hi == 0.0);
}

TEST_CASE("invariants on random samples") {
    Potential pot;
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> u(-1.5, 1.5), v(-1.5, 1.5);
    int n = 0;
    while (n < 300) {
        cplx x(u(rng), v(rng)), lam(u(rng), v(rng));
        if (pot.pole_distance(x) < 0.05) continue;
        ++n;
        cplx V = pot.V0(x, lam);
        CHECK(std::abs(V - pot.g_minus(x, lam) * pot.g_plus(x, lam)) <= 1e-12 * (1 + std::abs(V)));
        CHECK(std::abs(pot.V0(x + cplx(0, pi), lam) - V) <= 1e-12 * (1 + std::abs(V)));
        CHECK(std::abs(pot.V0(std::conj(x), std::conj(lam)) - std::conj(V)) <= 1e-12 * (1 + std::abs(V)));
        CHECK(std::abs(pot.f_tilde(x, lam) + V) == 0.0);
        double xr = u(rng) * 4;
        CHECK(std::abs(pot.A(xr).imag()) == 0.0);
        CHECK(std::abs(pot.S(xr).imag()) == 0.0);
        CHECK(std::abs(pot.A(xr)) <= 1.0);
        auto rf = pot.real_fields(xr);
        CHECK(std::abs(rf[0] - pot.A(xr).real()) < 1e-14);
        CHECK(std::abs(rf[2] - pot.Sprime(xr).real()) < 1e-14);
    }
}
}
