// SPDX-License-Identifier: MIT
#include <cmath>

#include "doctest.h"
#include "zs/arcs.hpp"
#include "zs/mbf.hpp"
#include "zs/olver.hpp"
#include "zs/quantize.hpp"
#include "zs/stokes.hpp"

using namespace zs;

namespace {
const cplx kLam(0, 0.2);
cplx x1() { return find_turning_points(Potential(), kLam).x(1); }
}  // namespace

TEST_SUITE("olver") {
TEST_CASE("zeta map") {
    Potential pot;
    cplx c = x1();
    CHECK(std::abs(zeta_map(pot, c, kLam, c)) == 0.0);
    ZetaPath zp(pot, kLam, c, olver_ray(pot, kLam, c, 0.0, 2e-3, 0.5));
    cplx dir = zp.nodes()[1] - zp.nodes()[0];
    dir /= std::abs(dir);
    for (double s : {0.2, 0.5, 0.8}) {
        cplx x = zp.point(0, s);
        double h = 1e-4;
        cplx dxi = (zp.at(x + h * dir).xi - zp.at(x - h * dir).xi) / (2 * h * dir);
        CHECK(std::abs(dxi - zp.at(x).root) < 1e-6);
        ZetaPath::Value v = zp.at(x);
        CHECK(std::abs(v.xi * v.xi - std::pow(v.zeta, 3)) < 1e-10 * std::abs(v.xi * v.xi));
        // f_hat = zeta'^2
        cplx dz = (zeta_map(pot, x + h * dir, kLam, c) - zeta_map(pot, x - h * dir, kLam, c)) / (2 * h * dir);
        CHECK(std::abs(dz * dz - f_hat(pot, x, kLam, c)) < 1e-8 * std::abs(dz * dz));
        CHECK(std::abs(dz) > 0);
    }
    // the ray leaves c where zeta is real positive
    CHECK(std::abs(std::arg(zp.at(zp.point(0, 0.0)).zeta)) < 1e-2);
}

TEST_CASE("Stokes curves are level sets of Re xi") {
    Potential pot;
    TurningPointSet t = find_turning_points(pot, kLam);
    for (auto& c : trace_stokes_lines(pot, t, 1))
        for (size_t i = 1; i < c.pts.size() && c.arclength[i] < 0.3; ++i) {
            cplx xi = std::exp(1.5 * std::log(zeta_map(pot, c.pts[i], kLam, t.x(1))));
            CHECK(std::abs(xi.real()) < 1e-6);
        }
}

TEST_CASE("error-control bracket") {
    Potential pot;
    cplx c = x1();
    ZetaPath zp(pot, kLam, c, {cplx(-20, 0), cplx(c.real() - 1.2, 0)});
    for (double s : {0.5, 0.8, 0.95}) {
        cplx x = zp.point(0, s);
        cplx fd = error_control_bracket(zp, x, 1.0);
        cplx cf = error_control_bracket_closed(pot, kLam, zp.at(x));
        CHECK(std::abs(fd - cf) < 1e-6 * (1 + std::abs(cf)));
    }
}

TEST_CASE("variation") {
    Potential pot;
    cplx c = x1();
    cplx a(-20, 0), m(-8, 0), b(c.real() - 1.2, 0);
    ZetaPath whole(pot, kLam, c, {a, m, b}), left(pot, kLam, c, {a, m}), right(pot, kLam, c, {m, b});
    for (double eps : {0.1, 0.05}) {
        VariationValue w = variation_H(whole, eps), l = variation_H(left, eps), r = variation_H(right, eps);
        CHECK(w.value >= 0);
        CHECK(w.progressive);
        CHECK(std::abs(w.value - l.value - r.value) < 1e-10);
        double unit = variation_H(whole, eps, Balancing::Unit).value;
        CHECK(std::isfinite(unit));
        CHECK(w.value <= unit);
    }
    ZetaPath p2(pot, kLam, c, {cplx(-20, c.imag()), c - 1.2});
    CHECK(variation_H(p2, 0.05).value < variation_H(p2, 0.2).value);
}

TEST_CASE("error bound") {
    Potential pot;
    cplx c = x1();
    ZetaPath zp(pot, kLam, c, olver_ray(pot, kLam, c, 0.0, 2e-3, 0.5));
    double prev = 1e9;
    for (double eps : {0.2, 0.1, 0.05}) {
        OlverBound b = olver_error_bound(0, 1, zp, eps, 1.0, 0.0);
        CHECK(b.applicable);
        CHECK(std::isfinite(b.bound));
        CHECK(b.bound < prev);
        prev = b.bound;
    }
    CHECK(olver_error_bound(0, 1, zp, 0.2, 1.0, 0.0).bound == doctest::Approx(0.534).epsilon(0.01));
    OlverBound inf0 = olver_error_bound(0, 1, zp, 0.1, 1.0, 0.0, true);
    CHECK(inf0.applicable);
    CHECK(std::isfinite(inf0.sigma));
    OlverBound inf1 = olver_error_bound(0, 1, zp, 0.1, 1.0, 0.5, true);
    CHECK_FALSE(inf1.applicable);
    for (int j = 0; j < 3; ++j)
        for (int k = 0; k < 3; ++k)
            if (j != k) {
                double r = rho_jk(j, k);
                CHECK(std::isfinite(r));
                CHECK(r >= 1 + lambda_jk(j, k) * lambda_jk(j, k));
            }
    CHECK_THROWS_AS(rho_jk(0, 3), Error);
}

TEST_CASE("near-zero bracket vanishes at the quantized values") {
    Potential pot;
    double eps = 0.1;
    ActionTracker t = tracker_at(pot, cplx(0, 0.113316937190));
    cplx xi = near_zero_xi(t);
    CHECK(std::abs(near_zero_bracket(xi, eps)) < 1e-8 * std::abs(std::exp(xi / eps)));
    ActionTracker u = tracker_at(pot, cplx(0, 0.15));
    cplx xu = near_zero_xi(u);
    CHECK(std::abs(near_zero_bracket(xu, eps)) > 1e-2 * std::abs(std::exp(xu / eps)));
}
}
