// SPDX-License-Identifier: MIT
#include <algorithm>
#include <cmath>

#include "doctest.h"
#include "zs/geometry.hpp"

using namespace zs;

namespace {
const cplx kX02[8] = {{-1.3221392165, -0.3977993098}, {1.3221392165, -0.3977993098},
                      {-1.3221392165, -1.1729970170}, {1.3221392165, -1.1729970170},
                      {0, -1.2192997745},             {0, -0.3514965523},
                      {0, 0.4237011549},              {0, 1.1470951719}};
}

TEST_SUITE("geometry") {
TEST_CASE("anchor configuration") {
    Potential pot;
    TurningPointSet t = find_turning_points(pot, cplx(0, 0.2));
    for (int k = 1; k <= 8; ++k) CHECK(std::abs(t.x(k) - kX02[k - 1]) < 2e-10);
    const GClass m = GClass::GMinusZero, p = GClass::GPlusZero;
    const GClass expect[8] = {m, m, p, p, p, m, p, m};
    for (int k = 1; k <= 8; ++k) CHECK(t[k].gclass == expect[k - 1]);
    CHECK(classify_zero(pot, t.x(1), cplx(0, 0.2)) == GClass::GMinusZero);
    CHECK(classify_zero(pot, t.x(3), cplx(0, 0.2)) == GClass::GPlusZero);
}

TEST_CASE("sweep") {
    Potential pot;
    auto at_i = sweep_turning_points(pot, I);
    CHECK(std::any_of(at_i.begin(), at_i.end(), [](cplx x) { return std::abs(x) < 1e-10; }));
    auto s = sweep_turning_points(pot, cplx(0, 0.2));
    REQUIRE(s.size() == 8);
    for (cplx x : s) CHECK(std::abs(pot.V0(x, cplx(0, 0.2))) < 1e-12);
}

TEST_CASE("off-axis lambda breaks the mirror pairing") {
    Potential pot;
    cplx lam(0.3, 0.2);
    TurningPointSet a = find_turning_points(pot, lam);
    CHECK(std::abs(a.x(2) + std::conj(a.x(1))) > 1e-3);
    // labels do not depend on the continuation step
    TurningPointSet s = label_anchor(pot, default_anchor);
    TurningPointSet b = continue_turning_points(pot, continue_turning_points(pot, s, cplx(0.3, 0.2), 2e-3), lam, 2e-3);
    for (int k = 1; k <= 8; ++k) CHECK(std::abs(a.x(k) - b.x(k)) < 1e-9);
}

TEST_CASE("labels survive a closed loop avoiding the double points") {
    Potential pot;
    TurningPointSet s = label_anchor(pot, default_anchor);
    TurningPointSet t = s;
    for (cplx l : {cplx(0.6, 0.2), cplx(0.6, 0.5), cplx(0.0, 0.5), cplx(0.0, 0.2)})
        t = continue_turning_points(pot, t, l);
    for (int k = 1; k <= 8; ++k) CHECK(std::abs(reduce_strip(t.x(k)) - s.x(k)) < 1e-9);
}

TEST_CASE("conjugate lambda gives the conjugate zero set") {
    Potential pot;
    cplx lam(0.4, 0.3);
    auto a = sweep_turning_points(pot, lam), b = sweep_turning_points(pot, std::conj(lam));
    REQUIRE(a.size() == b.size());
    for (cplx x : a) {
        double best = 1e9;
        for (cplx y : b) best = std::min(best, std::abs(reduce_strip(std::conj(x)) - y));
        CHECK(best < 1e-9);
    }
}

TEST_CASE("double turning points") {
    Potential pot;
    auto d = double_turning_lambdas();
    int q1 = 0;
    for (auto& e : d) {
        CHECK(std::abs(pot.V0(e.x_d, e.lambda_d)) < 1e-12);
        CHECK(std::abs(pot.V0_x(e.x_d, e.lambda_d)) < 1e-12);
        if (e.quadrant == 1) {
            ++q1;
            CHECK(std::abs(e.lambda_d - cplx(0.3878509902, 0.7461088329)) < 1e-9);
            try {
                find_turning_points(pot, e.lambda_d);
                FAIL("no coalescence error");
            } catch (const Error& err) {
                CHECK(err.code() == Errc::CoalescenceDetected);
            }
        }
    }
    CHECK(q1 == 1);
    CHECK(min_separation(find_turning_points(pot, cplx(0, 0.2)).points) > 0.1);
}
}
