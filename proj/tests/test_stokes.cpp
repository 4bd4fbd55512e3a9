// SPDX-License-Identifier: MIT
#include <cmath>

#include "doctest.h"
#include "zs/arcs.hpp"
#include "zs/stokes.hpp"
#include "fixtures.hpp"

using namespace zs;

TEST_SUITE("stokes") {
TEST_CASE("Stokes lines from x1 at 0.2i") {
    Potential pot;
    TurningPointSet t = find_turning_points(pot, cplx(0, 0.2));
    auto cs = trace_stokes_lines(pot, t, 1);
    REQUIRE(cs.size() == 3);
    bool to2 = false;
    for (auto& c : cs) {
        if (c.term == Termination::TurningPoint && c.end_label == 2) to2 = true;
        CHECK(c.max_level_residual < 1e-6);
    }
    CHECK(to2);
}

TEST_CASE("x7 has a line ending at a pole") {
    Potential pot;
    TurningPointSet t = find_turning_points(pot, cplx(0, 0.2));
    bool pole = false;
    for (auto& c : trace_stokes_lines(pot, t, 7))
        if (c.term == Termination::Pole && std::abs(c.end_pole - cplx(0, pi / 4)) < 1e-9) pole = true;
    CHECK(pole);
}

TEST_CASE("lines leave a simple turning point at 120 degree spacing") {
    Potential pot;
    for (int label : {1, 6, 7}) {
        TurningPointSet t = find_turning_points(pot, cplx(0, 0.2));
        auto cs = trace_stokes_lines(pot, t, label);
        REQUIRE(cs.size() == 3);
        double a[3];
        for (int k = 0; k < 3; ++k) a[k] = std::arg(cs[k].pts[1] - t.x(label));
        for (int k = 0; k < 3; ++k) {
            double d = std::remainder(a[(k + 1) % 3] - a[k], 2 * pi);
            CHECK(std::abs(std::abs(d) - 2 * pi / 3) < 2 * pi / 180);
        }
    }
}

TEST_CASE("only g_- connection at 0.2i joins x1 and x2") {
    Potential pot;
    StokesDiagram d = stokes_diagram(pot, find_turning_points(pot, cplx(0, 0.2)));
    CHECK(d.connected(1, 2));
    for (auto [j, k] : d.connections) {
        bool gj = d.tps[j].gclass == GClass::GMinusZero, gk = d.tps[k].gclass == GClass::GMinusZero;
        if (gj && gk) CHECK((j == 1 && k == 2));
    }
    CHECK(d.connected(7, 8));
}

TEST_CASE("diagram for conjugate-symmetric lambda is mirror symmetric") {
    Potential pot;
    StokesDiagram d = stokes_diagram(pot, find_turning_points(pot, cplx(0, 0.2)));
    // lambda on i R: x -> -conj(x) maps the diagram to itself
    for (auto& c : d.curves) {
        cplx mid = c.pts[c.pts.size() / 2], m = -std::conj(mid);
        double best = 1e9;
        for (auto& e : d.curves)
            for (size_t i = 0; i + 1 < e.pts.size(); ++i) best = std::min(best, std::abs(e.pts[i] - m));
        CHECK(best < 2e-2);
    }
}

TEST_CASE("progressive paths") {
    Potential pot;
    cplx lam(0.5, 0.2);
    ProgressVerdict v = is_progressive(pot, Contour{{5.0, 10.0}}, lam);
    CHECK(v.progressive());
    CHECK(v.direction == -1);
    CHECK(v.margin == doctest::Approx(0.2).epsilon(1e-3));
    // a Stokes line has Re z constant
    TurningPointSet t = find_turning_points(pot, cplx(0, 0.2));
    auto cs = trace_stokes_lines(pot, t, 1);
    std::vector<cplx> seg(cs[0].pts.begin() + 5, cs[0].pts.begin() + std::min<size_t>(cs[0].pts.size() - 5, 60));
    CHECK_FALSE(is_progressive(pot, Contour{seg}, cplx(0, 0.2), {t.x(1)}).progressive());
}

TEST_CASE("admissible contours") {
    Potential pot;
    auto c = find_admissible_contour(pot, cplx(0, 0.2));
    REQUIRE(c.has_value());
    CHECK(c->alpha == 1);
    CHECK(c->beta == 2);
    CHECK_FALSE(find_admissible_contour(pot, cplx(0, 0.35)).has_value());
    CHECK_FALSE(find_admissible_contour(pot, cplx(0.5, 0.01)).has_value());
}

TEST_CASE("admissibility along the spectral arcs") {
    Potential pot;
    const ArcSet& arcs = zs::test::arcs();
    const SpectralArc& a12 = arcs.a12;
    for (size_t i = 1; i + 1 < a12.lambda.size(); i += std::max<size_t>(1, a12.lambda.size() / 6))
        CHECK(find_admissible_contour(pot, a12.lambda[i]).has_value());
    for (ArcPair p : {ArcPair::P16, ArcPair::P26}) {
        const SpectralArc& a = arcs.get(p);
        int tested = 0;
        for (size_t i = 1; i + 1 < a.lambda.size() && tested < 3; i += 7) {
            if (std::abs(a.lambda[i] - arcs.bif.lambda) < 0.2) continue;
            CHECK(find_admissible_contour(pot, a.lambda[i]).has_value());
            ++tested;
        }
        CHECK(tested > 0);
    }
}
}
