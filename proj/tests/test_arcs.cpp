// SPDX-License-Identifier: MIT
#include <cmath>

#include "doctest.h"
#include "zs/arcs.hpp"
#include "zs/stokes.hpp"
#include "fixtures.hpp"

using namespace zs;
using zs::test::arcs;

TEST_SUITE("arcs") {
TEST_CASE("bifurcation point") {
    const BifurcationPoint& b = arcs().bif;
    CHECK(std::abs(b.lambda.real()) < 1e-14);
    CHECK(b.lambda.imag() == doctest::Approx(0.2791599049).epsilon(1e-9));
    CHECK(std::abs(b.actions.I16.real()) < 1e-10);
    CHECK(std::abs(b.actions.I26.real()) < 1e-10);
    CHECK(std::abs(b.actions.I12.real()) < 1e-10);
    CHECK(b.actions.I16.imag() == doctest::Approx(0.722721).epsilon(1e-5));
    CHECK(b.actions.I12.imag() == doctest::Approx(1.445442).epsilon(1e-5));
}

TEST_CASE("x6 lines at the bifurcation") {
    Potential pot;
    TurningPointSet t = find_turning_points(pot, arcs().bif.lambda);
    auto cs = trace_stokes_lines(pot, t, 6);
    REQUIRE(cs.size() == 3);
    int tp = 0, pole = 0;
    for (auto& c : cs) {
        if (c.term == Termination::TurningPoint && (c.end_label == 1 || c.end_label == 2)) ++tp;
        if (c.term == Termination::Pole) ++pole;
        double a = std::arg(c.pts[1] - t.x(6));
        double best = 1e9;
        for (double e : {pi / 6, 5 * pi / 6, -pi / 2}) best = std::min(best, std::abs(a - e));
        CHECK(best < 1e-3);
    }
    CHECK(tp == 2);
    CHECK(pole == 1);
}

TEST_CASE("shape of the arcs") {
    const ArcSet& A = arcs();
    for (cplx l : A.a12.lambda) CHECK(std::abs(l.real()) < 1e-12);
    CHECK(A.a12.lambda.back().imag() < 1e-2);
    cplx lamD = double_turning_lambdas()[0].lambda_d;
    for (auto& d : double_turning_lambdas())
        if (d.quadrant == 1) lamD = d.lambda_d;
    CHECK(std::abs(A.a26.lambda.back() - lamD) < 1e-2);
    CHECK(A.a26.end == ArcEnd::DoublePoint);
    for (size_t i = 1; i < A.a26.lambda.size(); ++i) {
        CHECK(A.a26.lambda[i].real() > A.a26.lambda[i - 1].real() - 1e-12);
        CHECK(A.a26.lambda[i].imag() > A.a26.lambda[i - 1].imag() - 1e-12);
    }
    REQUIRE(A.a16.lambda.size() == A.a26.lambda.size());
    for (size_t i = 0; i < A.a16.lambda.size(); ++i)
        CHECK(std::abs(A.a16.lambda[i] + std::conj(A.a26.lambda[i])) < 1e-9);
    for (ArcPair p : {ArcPair::P12, ArcPair::P16, ArcPair::P26})
        for (cplx a : A.get(p).action) CHECK(std::abs(a.real()) < 1e-9);
}

TEST_CASE("densities") {
    Potential pot;
    ActionTracker t = tracker_at(pot, cplx(0, 0.15));
    CHECK(density_rho(t, ArcPair::P12) == doctest::Approx(0.5174579848).epsilon(1e-8));
    cplx r12 = density_rho_complex(t, ArcPair::P12);
    CHECK(std::abs(r12 - cplx(0, 0.5174579848)) < 1e-9);
    CHECK(std::abs(density_rho_complex(t, ArcPair::P16) - density_rho_complex(t, ArcPair::P26) - r12) < 1e-9);
    cplx lam(0.2, 0.45);
    ActionTracker a = tracker_at(pot, lam), b = tracker_at(pot, -std::conj(lam));
    CHECK(std::abs(density_rho_complex(a, ArcPair::P16) - std::conj(density_rho_complex(b, ArcPair::P26))) < 1e-9);
}
}
