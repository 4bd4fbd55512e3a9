// SPDX-License-Identifier: MIT
#include <cmath>

#include "doctest.h"
#include "zs/action.hpp"

using namespace zs;

TEST_SUITE("action") {
TEST_CASE("degenerate integral") {
    Potential pot;
    cplx lam(0, 0.2);
    TurningPointSet t = find_turning_points(pot, lam);
    CHECK(std::abs(action_integral(pot, t.x(1), t.x(1), lam).value) == 0.0);
    CHECK(std::abs(action_integral(pot, cplx(0.5, 0.1), cplx(0.5, 0.1), lam).value) == 0.0);
}

TEST_CASE("I12 at the anchor") {
    Potential pot;
    cplx v = I_jk(pot, cplx(0, 0.2), ArcPair::P12);
    CHECK(std::abs(v.real()) < 1e-12);
    CHECK(v.imag() == doctest::Approx(1.582668960265).epsilon(1e-11));
    TurningPointSet t = find_turning_points(pot, cplx(0, 0.2));
    cplx xi = xi_c(pot, t.x(2), cplx(0, 0.2), t.x(1), {(t.x(6) + t.x(7)) / 2.0});
    CHECK(std::abs(std::abs(xi) - 1.582668960265) < 1e-10);
    // the straight route lies in another homotopy class
    cplx s = action_integral(pot, t.x(1), t.x(2), cplx(0, 0.2)).value;
    CHECK(std::abs(std::abs(s) - 0.161114263141) < 1e-9);
}

TEST_CASE("route independence within a homotopy class") {
    Potential pot;
    cplx lam(0, 0.2);
    TurningPointSet t = find_turning_points(pot, lam);
    cplx a = t.x(1), b = t.x(2);
    cplx seed = 1.0;
    cplx w1 = (t.x(6) + t.x(7)) / 2.0;
    cplx v1 = integrate_path(pot, lam, ActionPath{{a, w1, b}, true, true}, seed, 1, 1e-12).value;
    cplx v2 = integrate_path(pot, lam, ActionPath{{a, w1 + cplx(-0.3, 0.1), w1 + cplx(0.3, -0.1), b}, true, true},
                             seed, 1, 1e-12).value;
    CHECK(std::min(std::abs(v1 - v2), std::abs(v1 + v2)) < 1e-9);
}

TEST_CASE("Re I16 = Re I26 on the imaginary axis") {
    Potential pot;
    for (double mu : {0.15, 0.25, 0.35}) {
        ActionTracker t = ActionTracker(pot);
        t.move_l_path(cplx(0, mu));
        CHECK(std::abs(t.I(ArcPair::P16).real() - t.I(ArcPair::P26).real()) < 1e-10);
        CHECK(std::abs(t.I(ArcPair::P12) - (t.I(ArcPair::P16) - t.I(ArcPair::P26))) < 1e-9);
    }
    ActionTracker t(pot);
    t.move_l_path(cplx(0, 0.25));
    CHECK(t.I(ArcPair::P16).real() == doctest::Approx(2.891e-2).epsilon(2e-3));
}

TEST_CASE("xi_c") {
    Potential pot;
    cplx lam(0, 0.2);
    TurningPointSet t = find_turning_points(pot, lam);
    CHECK(std::abs(xi_c(pot, t.x(1), lam, t.x(1))) == 0.0);
    cplx x = t.x(1) + 0.3;
    cplx v = xi_c(pot, x, lam, t.x(1));
    CHECK(v.real() >= 0);
    // xi^2 ~ (4/9) V0'(c) (x - c)^3 near c
    cplx y = t.x(1) + 1e-3;
    cplx w = xi_c(pot, y, lam, t.x(1));
    cplx model = 4.0 / 9.0 * pot.V0_x(t.x(1), lam) * std::pow(y - t.x(1), 3);
    CHECK(std::abs(w * w / model - 1.0) < 1e-2);
}

TEST_CASE("additivity along a real segment") {
    Potential pot;
    cplx lam(0.5, 0.2);
    cplx r0 = large_x_root(pot, lam, 1.0);
    PathIntegral ab = integrate_path(pot, lam, ActionPath{{1.0, 2.0}}, r0, 1, 1e-13);
    PathIntegral bc = integrate_path(pot, lam, ActionPath{{2.0, 3.5}}, ab.root_end, 1, 1e-13);
    PathIntegral ac = integrate_path(pot, lam, ActionPath{{1.0, 3.5}}, r0, 1, 1e-13);
    CHECK(std::abs(ab.value + bc.value - ac.value) < 1e-11);
    CHECK(std::abs(continue_root(pot, lam, {1.0, 2.0, 3.5}, r0) - ac.root_end) < 1e-12);
}
}
