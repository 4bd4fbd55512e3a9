// SPDX-License-Identifier: MIT
#include <algorithm>
#include <cmath>

#include "doctest.h"
#include "fixtures.hpp"

using namespace zs;
using zs::test::arcs;

namespace {
std::vector<EigenvalueRecord> bs12(double eps) {
    BSOptions o;
    o.exclusion = 0;
    return bs_eigenvalues(arcs().a12, Potential(), eps, o);
}

double nearest(const std::vector<OracleEigenvalue>& d, cplx l) {
    double best = 1e300;
    for (auto& e : d) best = std::min(best, std::abs(e.lambda - l));
    return best;
}
}  // namespace

TEST_SUITE("quantize") {
TEST_CASE("delta index") {
    CHECK(delta_index(GClass::GMinusZero, GClass::GMinusZero).delta == -1);
    CHECK(delta_index(GClass::GPlusZero, GClass::GPlusZero).delta == -1);
    CHECK(delta_index(GClass::GMinusZero, GClass::GPlusZero).delta == 1);
}

TEST_CASE("Bohr-Sommerfeld roots on Lambda12") {
    auto r = bs12(0.1);
    REQUIRE(r.size() == 1);
    CHECK(r[0].n == 5);
    CHECK(std::abs(r[0].lambda - cplx(0, 0.113316937190)) < 1e-10);
    for (double eps : {0.2, 0.1, 0.05}) {
        auto rs = bs12(eps);
        for (size_t i = 0; i < rs.size(); ++i) {
            CHECK(std::abs(rs[i].lambda.real()) < 1e-6);
            CHECK(rs[i].residual <= 1e-10);
            CHECK(rs[i].regime == Regime::GenericArc);
            if (i > 0) CHECK(std::abs(rs[i].action.imag()) > std::abs(rs[i - 1].action.imag()));
            CHECK(std::abs(std::abs(rs[i].action.imag()) / (pi * eps) - (rs[i].n + 0.5)) < 1e-9);
        }
    }
    CHECK(bs12(0.2).size() == 1);
    CHECK(bs12(0.05).size() == 3);
}

TEST_CASE("count doubles when eps halves") {
    double ratio = double(bs12(0.025).size()) / double(bs12(0.05).size());
    CHECK(ratio >= 1.8);
    CHECK(ratio <= 2.2);
}

TEST_CASE("default exclusion") {
    BSOptions o;  // 3 eps log(1/eps) around lam_x
    for (auto& r : bs_eigenvalues(arcs().a26, Potential(), 0.05, o))
        CHECK(std::abs(r.lambda - arcs().bif.lambda) >= 3 * 0.05 * std::log(20.0));
}

TEST_CASE("Bohr-Sommerfeld against the direct oracle") {
    Potential pot;
    double worst[2] = {0, 0};
    const double e[2] = {0.2, 0.1};
    for (int k = 0; k < 2; ++k) {
        BSOptions o;
        o.exclusion = e[k] * std::log(1 / e[k]);
        for (ArcPair p : {ArcPair::P12, ArcPair::P16, ArcPair::P26})
            for (auto& r : bs_eigenvalues(arcs().get(p), pot, e[k], o))
                worst[k] = std::max(worst[k], nearest(zs::test::direct(e[k]), r.lambda));
    }
    CHECK(worst[1] < 0.01);
    CHECK(worst[0] / worst[1] >= 1.5);
}

TEST_CASE("QC3 defect in cases I and III") {
    Potential pot;
    ActionTracker t1 = tracker_at(pot, cplx(0, 0.35)), t3 = tracker_at(pot, cplx(0, 0.2));
    CHECK(std::abs(t1.I(ArcPair::P16).real()) > 0.05);
    CHECK(t1.I(ArcPair::P16).real() < 0);
    CHECK(t3.I(ArcPair::P16).real() > 0);
    for (double eps : {0.1, 0.05}) {
        CHECK(std::abs(qc3_defect(t1, eps) + 1.0) < 0.5);
        CHECK(std::abs(qc3_defect(t3, eps) + 1.0) > 2);
    }
    CHECK(std::abs(qc3_defect(t1, 0.05) + 1.0) == doctest::Approx(0.044).epsilon(0.05));
    CHECK(std::abs(qc3_defect(t3, 0.1) + 1.0) == doctest::Approx(9.95).epsilon(0.01));
}

TEST_CASE("bifurcation window") {
    BifurcationResult br = bifurcation_eigenvalues(Potential(), arcs(), 0.1);
    CHECK(br.radius == doctest::Approx(0.5));
    CHECK(br.exclusion == doctest::Approx(0.1 * std::log(10.0)));
    CHECK(br.roots.size() == 6);
    for (auto& r : br.roots) {
        CHECK(r.regime == Regime::Bifurcation);
        CHECK(r.residual < 1e-10);
        CHECK(std::abs(r.lambda - br.center) <= br.radius);
        CHECK(nearest(zs::test::direct(0.1), r.lambda) < 1e-2);
    }
}

TEST_CASE("near-zero regime") {
    Potential pot;
    NearZeroRegion reg;
    reg.im_hi = 0.2;
    auto a = near_zero_eigenvalues(pot, arcs(), 0.1, reg);
    auto b = near_zero_eigenvalues(pot, arcs(), 0.05, reg);
    REQUIRE(a.size() == 1);
    REQUIRE(b.size() == 2);
    CHECK(std::abs(a[0].lambda - bs12(0.1)[0].lambda) < 1e-8);
    auto g = bs12(0.05);
    for (auto& r : b) {
        CHECK(r.regime == Regime::NearZero);
        double best = 1e9;
        for (auto& q : g) best = std::min(best, std::abs(q.lambda - r.lambda));
        CHECK(best < 1e-8);
    }
    double lo1 = a[0].lambda.imag(), lo2 = std::min(b[0].lambda.imag(), b[1].lambda.imag());
    CHECK(lo2 / lo1 == doctest::Approx(0.5).epsilon(0.2));
    CHECK(lo2 == doctest::Approx(0.065120729176).epsilon(1e-9));
    for (auto& r : a) CHECK(nearest(zs::test::direct(0.1), r.lambda) < 0.1 * 0.1);
}

TEST_CASE("norming signs alternate") {
    auto r = bs12(0.05);
    norming_signs(r, nullptr);
    for (size_t i = 0; i < r.size(); ++i) {
        CHECK(!r[i].norming_verified);
        if (i > 0) CHECK(r[i].norming_sign == -r[i - 1].norming_sign);
    }
    auto s = bs12(0.05);
    norming_signs(s, [](cplx) { return std::optional<cplx>(cplx(-1.0)); });
    const auto& mid = s[s.size() / 2];
    CHECK(mid.norming_verified);
    CHECK(mid.norming_sign == -1);
}
}
