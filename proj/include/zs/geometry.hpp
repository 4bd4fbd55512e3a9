// SPDX-License-Identifier: MIT
#pragma once

#include <array>
#include <vector>

#include "zs/potential.hpp"

namespace zs {

enum class GClass { GMinusZero, GPlusZero };

const char* gclass_name(GClass g);

struct TurningPoint {
    cplx x;
    int label = 0;  // 1..8
    GClass gclass = GClass::GMinusZero;
    int multiplicity = 1;
};

struct TurningPointSet {
    cplx lambda;
    std::array<TurningPoint, 8> points;  // points[k] has label k+1
    std::vector<cplx> path;              // lambda values visited from the anchor

    const TurningPoint& operator[](int label) const { return points.at(label - 1); }
    cplx x(int label) const { return points.at(label - 1).x; }
};

struct DoublePointDatum {
    int quadrant;  // 1..4
    cplx lambda_d;
    cplx x_d;
    int sigma, tau;
};

inline constexpr cplx default_anchor{0.0, 0.2};

// All zeros of V0(., lam) in the fundamental strip, |Re x| <= 6, from a 60x30
// grid of damped Newton seeds. Unlabeled, sorted by (Re, Im).
std::vector<cplx> sweep_turning_points(const Potential& pot, cplx lam);

// Newton polish of a single zero of V0(., lam).
cplx polish_turning_point(const Potential& pot, cplx lam, cplx x0);

// Labels the eight zeros at an anchor lam on the positive imaginary axis
// (below the collision value) from their geometric arrangement.
TurningPointSet label_anchor(const Potential& pot, cplx lam);

// Continues an already labeled set to lam1 along a straight segment.
TurningPointSet continue_turning_points(const Potential& pot, const TurningPointSet& from, cplx lam1,
                                        double max_step = 1e-2);

// Labeled set at lam, continued from the anchor along the L-shaped path
// (horizontal at Im = Im anchor, then vertical). Checked against the sweep.
TurningPointSet find_turning_points(const Potential& pot, cplx lam, cplx anchor = default_anchor);

std::array<DoublePointDatum, 4> double_turning_lambdas();

GClass classify_zero(const Potential& pot, cplx x, cplx lam);

// Minimum pairwise distance within a set, modulo the strip period.
double min_separation(const std::array<TurningPoint, 8>& pts);

}  // namespace zs
