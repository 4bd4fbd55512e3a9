// SPDX-License-Identifier: MIT
#include <algorithm>
#include <cmath>

#include "doctest.h"
#include "fixtures.hpp"

using namespace zs;

namespace {
const cplx kEv02[3] = {{0, 0.1820976490}, {-0.2544394732, 0.5174283092}, {0.2544394732, 0.5174283092}};
const cplx kEv01[6] = {{0, 0.1161480269},  {0, 0.2694965344},  {-0.1504579916, 0.4181612742},
                       {0.1504579916, 0.4181612742}, {-0.3192483345, 0.6303814276}, {0.3192483345, 0.6303814276}};

double nearest(const std::vector<OracleEigenvalue>& d, cplx l) {
    double best = 1e300;
    for (auto& e : d) best = std::min(best, std::abs(e.lambda - l));
    return best;
}
}  // namespace

TEST_SUITE("direct") {
TEST_CASE("free system") {
    Potential zero(0.0, 0.0);
    cplx lam(0.3, 0.2);
    double eps = 0.1;
    Mat2 F = propagate_frame(zero, lam, eps, -1, 2);
    CHECK(std::abs(F[0][0] - std::exp(-I * lam * 3.0 / eps)) < 1e-10);
    CHECK(std::abs(F[1][1] - std::exp(I * lam * 3.0 / eps)) < 1e-10);
    CHECK(std::abs(F[0][1]) < 1e-12);
    CHECK(std::abs(F[1][0]) < 1e-12);
}

TEST_CASE("trace-free system preserves the determinant") {
    Potential pot;
    for (Frame f : {Frame::U, Frame::V}) {
        DirectOptions o;
        o.frame = f;
        Mat2 F = propagate_frame(pot, cplx(0.2, 0.3), 0.1, -3, 3, o);
        double scale = std::abs(F[0][0] * F[1][1]) + std::abs(F[1][0] * F[0][1]);
        CHECK(std::abs(F[0][0] * F[1][1] - F[1][0] * F[0][1] - 1.0) < 1e-10 * scale);
    }
}

TEST_CASE("frames agree on a") {
    Potential pot;
    DirectOptions v;
    v.frame = Frame::V;
    cplx a = scattering_a(pot, cplx(0, 0.2), 0.1).value(), b = scattering_a(pot, cplx(0, 0.2), 0.1, v).value();
    CHECK(std::abs(a - b) < 1e-8 * std::abs(a));
    cplx r = reduced_a(pot, cplx(0, 0.2), 0.1).value();
    CHECK(std::abs(r / a - std::exp(-2.0 * I * cplx(0, 0.2) * 10.0 / 0.1)) < 1e-8 * std::abs(r / a));
}

TEST_CASE("oracle spectra") {
    auto& d2 = zs::test::direct(0.2);
    REQUIRE(d2.size() == 3);
    for (cplx l : kEv02) CHECK(nearest(d2, l) < 1e-9);
    auto& d1 = zs::test::direct(0.1);
    REQUIRE(d1.size() == 6);
    for (cplx l : kEv01) CHECK(nearest(d1, l) < 1e-9);
    for (auto& e : d1) {
        CHECK(e.condition < 1e4);
        CHECK(e.lambda.imag() > 0);
        CHECK(e.certificate.re_lo <= e.lambda.real());
        CHECK(e.lambda.real() <= e.certificate.re_hi);
        // the spectrum is symmetric under lam -> -conj(lam)
        CHECK(nearest(d1, -std::conj(e.lambda)) < 1e-9);
    }
}

TEST_CASE("oracle eigenvalues lie near the arcs") {
    const ArcSet& A = zs::test::arcs();
    for (auto& e : zs::test::direct(0.1)) {
        double best = 1e9;
        for (ArcPair p : {ArcPair::P12, ArcPair::P16, ArcPair::P26})
            for (cplx l : A.get(p).lambda) best = std::min(best, std::abs(l - e.lambda));
        CHECK(best < 0.05);
    }
    int on_axis = 0;
    for (auto& e : zs::test::direct(0.05))
        if (std::abs(e.lambda.real()) < 1e-6 && e.lambda.imag() < A.bif.lambda.imag()) ++on_axis;
    BSOptions o;
    o.exclusion = 0;
    CHECK(on_axis == int(bs_eigenvalues(A.a12, Potential(), 0.05, o).size()));
}

TEST_CASE("polished eigenvalue is stable") {
    Potential pot;
    cplx e0 = polish_eigenvalue(pot, 0.1, cplx(0, 0.116));
    CHECK(std::abs(e0 - cplx(0, 0.1161480268984)) < 1e-12);
    DirectOptions oL, oT;
    oL.L = 20;
    oT.tol = 1e-13;
    CHECK(std::abs(polish_eigenvalue(pot, 0.1, cplx(0, 0.116), oL) - e0) < 1e-8);
    CHECK(std::abs(polish_eigenvalue(pot, 0.1, cplx(0, 0.116), oT) - e0) < 1e-8);
    CHECK(eigenvalue_condition(pot, 0.1, e0) < 1e4);
    NormingConstant b = norming_constant_direct(pot, e0, 0.1);
    CHECK(std::abs(b.value + 1.0) < 0.05);
    CHECK(b.jost.spread < 1e-7);
    CHECK_THROWS_AS(polish_eigenvalue(pot, 0.01, cplx(0, 0.116)), Error);
}

TEST_CASE("reflection coefficient") {
    Potential pot;
    cplx rf = reflection_frame(pot, 1.0, 0.1), rs = reflection_scalar(pot, 1.0, 0.1);
    CHECK(std::abs(rf - rs) < 1e-10);
    CHECK(std::abs(rf) < 1);
    ReflectionSplit sp = reflection_wkb_split(pot, 1.0, 0.1);
    CHECK(std::abs(sp.R - rf) < 1e-9);
    CHECK(std::abs(sp.phase_factor * sp.wronskian_ratio - sp.R) < 1e-12);
    CHECK(std::abs(std::abs(sp.phase_factor) - 1.0) < 1e-12);
    SigmaSplit s = sigma_norm(pot, 1.0);
    CHECK(s.sigma == doctest::Approx(0.9917211467).epsilon(1e-9));
    CHECK(s.sigma == doctest::Approx(s.abs_left + s.abs_right).epsilon(1e-12));
    CHECK_THROWS_AS(reflection_frame(pot, 0.0, 0.1), Error);
}
}
