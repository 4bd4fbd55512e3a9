// SPDX-License-Identifier: MIT
#include <cmath>

#include "doctest.h"
#include "zs/action.hpp"
#include "zs/exactwkb.hpp"
#include "zs/geometry.hpp"
#include "zs/quadrature.hpp"
#include "zs/stokes.hpp"

using namespace zs;

namespace {
// [-4, 0] at lam = 0.5 + 0.2i: Re z decreases monotonically, so the minus
// symbols are computed in their decaying direction.
const cplx kLam(0.5, 0.2);

WkbPoint base_at(const Potential& pot, double x) {
    cplx r = large_x_root(pot, kLam, x);
    return {x, 0.0, r, std::sqrt(-I * pot.g_minus(x, kLam) / r), -4.0, 0};
}

double vnorm(const Vec2& v) { return std::hypot(std::abs(v[0]), std::abs(v[1])); }
}  // namespace

TEST_SUITE("exactwkb") {
TEST_CASE("test path is progressive") {
    ProgressVerdict v = is_progressive(Potential(), Contour{{-4.0, 0.0}}, kLam);
    CHECK(v.direction == -1);
    CHECK(v.margin > 0.05);
}

TEST_CASE("script H") {
    Potential pot;
    cplx r0 = large_x_root(pot, kLam, -4.0);
    for (double x : {-3.0, -1.0, 0.5}) {
        cplx r = continue_root(pot, kLam, {-4.0, x}, r0);
        auto logH = [&](double y) {
            cplx ry = sqrt_near(-pot.V0(y, kLam), r);
            return std::log(std::sqrt(-I * pot.g_minus(y, kLam) / ry));
        };
        double h = 1e-5;
        cplx fd = (logH(x + h) - logH(x - h)) / (2 * h) / (I * r);
        CHECK(std::abs(fd - script_H(pot, x, kLam, r)) < 1e-6);
    }
    double prev = 1e9;
    for (double x : {5.0, 10.0, 15.0}) {
        double v = std::abs(script_H(pot, x, kLam, large_x_root(pot, kLam, x)));
        CHECK(v < prev);
        prev = v;
    }
    CHECK(prev < 1e-11);
    cplx x1 = find_turning_points(pot, kLam).x(1);
    CHECK_THROWS_WITH_AS(script_H(pot, x1, kLam, 1.0), doctest::Contains("TurningPointSingularity"), Error);
}

TEST_CASE("recurrence base against an independent quadrature") {
    Potential pot;
    WkbPoint b = base_at(pot, -4.0);
    double eps = 0.1;
    WkbSymbol w1 = wkb_symbols(pot, kLam, b, {-4.0, 0.0}, eps, -1, 1);
    CHECK(w1.w_even == cplx(1.0));
    // I_-[1](z) = int e^{2(z - zeta)/eps} H(zeta) dzeta
    auto f = [&](double s) {
        double x = -4 + 4 * s;
        PathIntegral p = integrate_path(pot, kLam, ActionPath{{-4.0, x}}, b.r, 1, 1e-13);
        cplx r = s == 0 ? b.r : p.root_end;
        return script_H(pot, x, kLam, r) * I * r * 4.0 * std::exp(2.0 * (w1.z - I * p.value) / eps);
    };
    QuadResult q = integrate_gk(f, 0, 1, 1e-13, 1e-12);
    CHECK(std::abs(q.value - w1.w_odd) < 1e-10);
}

TEST_CASE("truncation and eps scaling") {
    Potential pot;
    WkbPoint b = base_at(pot, -4.0);
    double de[3], dodd[3];
    const double eps[3] = {0.2, 0.1, 0.05};
    for (int k = 0; k < 3; ++k) {
        WkbSymbol w = wkb_symbols(pot, kLam, b, {-4.0, 0.0}, eps[k], -1);
        de[k] = std::abs(w.w_even - 1.0);
        dodd[k] = std::abs(w.w_odd);
        CHECK(de[k] / eps[k] < 0.2);
        WkbSymbol w3 = wkb_symbols(pot, kLam, b, {-4.0, 0.0}, eps[k], -1, 3);
        WkbSymbol w6 = wkb_symbols(pot, kLam, b, {-4.0, 0.0}, eps[k], -1, 6);
        CHECK(std::abs(w6.w_even - w3.w_even) <= std::pow(eps[k], 3));
    }
    for (int k = 0; k < 2; ++k) {
        CHECK(de[k] / de[k + 1] >= 1.6);
        CHECK(de[k] / de[k + 1] <= 2.4);
        CHECK(dodd[k] / dodd[k + 1] >= 1.6);
        CHECK(dodd[k] / dodd[k + 1] <= 2.4);
    }
}

TEST_CASE("symbols reproduce the exact solution") {
    Potential pot;
    WkbPoint b = base_at(pot, -4.0);
    double eps = 0.1;
    WkbSymbol w = wkb_symbols(pot, kLam, b, {-4.0, 0.0}, eps, -1);
    Vec2 ode = propagate_v_complex(pot, kLam, eps, {-4.0, 0.0}, wkb_vector_v(b, eps, -1, 1.0, 0.0));
    Vec2 sym = wkb_vector_v(w.end, eps, -1, w.w_even, w.w_odd);
    CHECK(vnorm({ode[0] - sym[0], ode[1] - sym[1]}) < 1e-8 * vnorm(ode));
}

TEST_CASE("Wronskians of WKB solutions") {
    Potential pot;
    double eps = 0.1;
    WkbPoint b0 = base_at(pot, 0.0), b1 = continue_point(pot, kLam, b0, {0.0, -4.0});
    // same base
    WkbSolution p = wkb_solution(pot, kLam, eps, 1, b0, {0.0, -1.0});
    WkbSolution m = wkb_solution(pot, kLam, eps, -1, b0, {0.0, -1.0});
    CHECK(std::abs(wronskian_pair(p, m) - 4.0 * I) < 1e-8);
    // u+ based at 0, u- based at -4, both at -4
    WkbSolution up = wkb_solution(pot, kLam, eps, 1, b0, {0.0, -4.0});
    WkbSolution um = wkb_solution(pot, kLam, eps, -1, b1, {-4.0, -4.0 + 1e-15});
    um.x = up.x;
    cplx W = wronskian_pair(up, um);
    CHECK(std::abs(W - 4.0 * I * up.symbol.w_even) < 1e-8 * std::abs(W));
    // ++ pair
    WkbSolution uq = wkb_solution(pot, kLam, eps, 1, b1, {-4.0, -4.0 + 1e-15});
    uq.x = up.x;
    cplx Wpp = wronskian_pair(up, uq);
    cplx expect = -4.0 * I * std::exp(2.0 * b1.z / eps) * up.symbol.w_odd;
    CHECK(std::abs(Wpp - expect) < 1e-8 * std::abs(expect));
    // mismatched bases
    WkbPoint other = b1;
    other.sheet = 1;
    WkbSolution uo = wkb_solution(pot, kLam, eps, 1, other, {-4.0, -4.0 + 1e-15});
    uo.x = up.x;
    CHECK_THROWS_WITH_AS(wronskian_pair(up, uo), doctest::Contains("BranchMismatch"), Error);
    CHECK_THROWS_WITH_AS(wronskian_pair(p, up), doctest::Contains("InvalidInput"), Error);
    CHECK_THROWS_WITH_AS(wkb_symbols(pot, kLam, b0, {0.0, -1.0}, eps, 1, 13), doctest::Contains("InvalidInput"), Error);
}

TEST_CASE("connection triple around x1") {
    Potential pot;
    cplx lam(0, 0.2);
    cplx x1 = find_turning_points(pot, lam).x(1);
    for (double eps : {0.1, 0.05}) {
        ConnectionTriple T = connection_triple(pot, lam, x1, eps, {1.0, 1.0, 0.6});
        CHECK(T.g_minus_zero);
        CHECK(T.identity_residual <= 1e-8);
        CHECK(T.wronskian_spread <= 1e-8);
        CHECK(std::abs(T.W12 + 2.0 * I * T.w_even_21) < 1e-8);
        CHECK(std::abs(T.W12 + 2.0 * I) < eps);
        CHECK(std::abs(T.W01 - 2.0 * I) < 5 * eps);
    }
}
}
