// SPDX-License-Identifier: MIT
#include <cmath>

#include "doctest.h"
#include "zs/mbf.hpp"
#include "zs/quadrature.hpp"

using namespace zs;

TEST_SUITE("mbf") {
TEST_CASE("defining equation") {
    for (double r : {0.5, 1.0, 2.0, 3.5, 5.0})
        for (int a = 0; a < 12; ++a) {
            cplx t = std::polar(r, -pi + 2 * pi * (a + 0.5) / 12);
            const double h = 5e-3;
            auto d5 = [&](auto f) { return (-f(t + 2 * h) + 8.0 * f(t + h) - 8.0 * f(t - h) + f(t - 2 * h)) / (12 * h); };
            cplx d2 = d5([](cplx s) { return U_std(s).du; });
            CHECK(std::abs(d2 - 2.25 * t * U_std(t).u) <= 1e-8 * (1 + std::abs(d2)));
            cplx d1 = d5([](cplx s) { return U_std(s).u; });
            CHECK(std::abs(d1 - U_std(t).du) <= 1e-8 * (1 + std::abs(d1)));
        }
}

TEST_CASE("real axis") {
    double prev = 1e9;
    for (double t = 0.25; t <= 6; t += 0.25) {
        UValue v = U_std(t);
        CHECK(std::abs(v.u.imag()) < 1e-14 * std::abs(v.u) + 1e-300);
        CHECK(v.u.real() > 0);
        CHECK(v.u.real() < prev);
        prev = v.u.real();
    }
    const double kappa = std::pow(1.5, 2.0 / 3.0);
    const double limit = std::sqrt(6 / kappa) / (2 * std::pow(kappa, 0.25));
    for (double t = 5; t <= 30; t += 5) {
        double s = U_std(t).u.real() * std::exp(std::pow(t, 1.5)) * std::pow(t, 0.25);
        CHECK(s < 1.01 * limit);
        CHECK(s > 0.99 * limit);
    }
}

TEST_CASE("cosh integral representation of K_{1/3}") {
    for (cplx t : {cplx(0.7), cplx(2.0), cplx(1.0, 0.5), cplx(1.5, -0.8)}) {
        cplx z = std::pow(t, 1.5);
        QuadResult k = integrate_gk([&](double s) { return std::exp(-z * std::cosh(s)) * std::cosh(s / 3); }, 0, 12,
                                    1e-15, 1e-13);
        cplx u = std::sqrt(2.0 * t / pi) * k.value;
        CHECK(std::abs(u - U_std(t).u) < 1e-10 * std::abs(u));
    }
}

TEST_CASE("rotations and Wronskians") {
    CHECK(lambda_jk(0, 1) == doctest::Approx(1));
    CHECK(lambda_jk(0, 2) == doctest::Approx(1));
    CHECK(lambda_jk(1, 0) == doctest::Approx(-1));
    CHECK(lambda_jk(2, 0) == doctest::Approx(-1));
    for (int j = 0; j < 3; ++j)
        for (int k = 0; k < 3; ++k) {
            if (j == k) continue;
            cplx we = wronskian_U_exact(j, k);
            CHECK(std::abs(we) > 1);
            for (cplx t : {cplx(0.3, 0.2), cplx(-1.0, 2.0), cplx(3.0, -1.0)})
                CHECK(std::abs(wronskian_U(j, k, t) - we) < 1e-8 * std::abs(we));
        }
    double prev0 = 1e9, prev1 = 0;
    for (double r = 1; r <= 5; r += 0.5) {
        double a = std::abs(U_rot(0, r).u), b = std::abs(U_rot(0, std::polar(r, 2 * pi / 3)).u);
        CHECK(a < prev0);
        CHECK(b > prev1);
        prev0 = a;
        prev1 = b;
    }
    CHECK_THROWS_WITH_AS(U_std_phase(1.0, 1.5 * pi), doctest::Contains("PhaseOutOfRange"), Error);
    CHECK(std::abs(U_std_phase(2.0, 0.0).u - U_std(2.0).u) < 1e-14);
}

TEST_CASE("weights and moduli") {
    for (int j = 0; j < 3; ++j)
        for (int k = 0; k < 3; ++k) {
            if (j == k) continue;
            for (double r : {0.1, 1.0, 4.0, 15.0})
                for (int a = 0; a < 24; ++a) {
                    cplx t = std::polar(r, -pi + 2 * pi * (a + 0.5) / 24);
                    if (!(in_sector(j, t) || in_sector(k, t))) continue;
                    CHECK(E_weight(t) >= 1.0);
                    CHECK(E_jk(k, j, t) == doctest::Approx(1 / E_jk(j, k, t)));
                    Moduli m = moduli(j, k, t), n = moduli(k, j, t);
                    double recon = std::norm(U_rot(j, t).u) / (m.E * m.E) + m.E * m.E * std::norm(U_rot(k, t).u);
                    CHECK(std::abs(m.M * m.M - recon) <= 1e-10 * recon);
                    CHECK(m.M == doctest::Approx(n.M).epsilon(1e-10));
                    CHECK(m.N == doctest::Approx(n.N).epsilon(1e-10));
                    CHECK(m.Nhat == doctest::Approx(n.Nhat).epsilon(1e-10));
                    CHECK(std::abs(m.theta + n.theta - pi / 2) < 1e-10);
                    CHECK(std::abs(m.omega + n.omega - pi / 2) < 1e-10);
                    CHECK(std::abs(m.omega_hat + n.omega_hat - pi / 2) < 1e-10);
                    CHECK(m.M <= M_bound(j, k, t));
                    CHECK(m.Nhat <= Nhat_bound(j, k, t));
                }
        }
    CHECK_THROWS_AS(moduli(1, 1, 1.0), Error);
}

TEST_CASE("internal asymptotics of M") {
    // internal part of S_j: |ph t - 2 pi j/3| <= pi/3 - 0.8
    for (int j = 0; j < 3; ++j)
        for (int k = 0; k < 3; ++k) {
            if (j == k) continue;
            double l = lambda_jk(j, k);
            for (int s : {j, k})
                for (double d : {-(pi / 3 - 0.8), 0.0, pi / 3 - 0.8}) {
                    cplx t = std::polar(30.0, 2 * pi * s / 3 + d);
                    double ratio = moduli(j, k, t).M / (std::sqrt(1 + l * l) * std::pow(30.0, -0.25));
                    CHECK(ratio == doctest::Approx(1).epsilon(0.05));
                }
        }
}
}
