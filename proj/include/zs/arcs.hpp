// SPDX-License-Identifier: MIT
#pragma once

#include <vector>

#include "zs/action.hpp"

namespace zs {

enum class ArcEnd { Origin, Bifurcation, DoublePoint, MaxLength };
const char* arc_end_name(ArcEnd e);

struct SpectralArc {
    ArcPair pair = ArcPair::P12;
    std::vector<cplx> lambda;
    std::vector<double> arclength;
    std::vector<cplx> action;  // I_pair at each node
    ArcEnd end = ArcEnd::MaxLength;
};

struct BifurcationPoint {
    cplx lambda;  // i mu
    ArcActions actions;
};

struct ArcOptions {
    double step = 5e-3;
    double min_step = 1e-6;
    double node_tol = 1e-10;  // |Re I| at accepted nodes
    double max_length = 3.0;
};

// Continues Re I_pair = 0 from the tracker's current lambda. direction picks
// the tangent i conj(I')/|I'| (+1) or its opposite (-1).
SpectralArc trace_arc(const ActionTracker& start, ArcPair pair, int direction, const ArcOptions& opt = {});

// Root of Re I16(i mu) = 0 for mu in (0.2, 0.4).
BifurcationPoint find_bifurcation(const Potential& pot = Potential());

// The three clipped arcs: Lambda12 from lam_x down to 0, Lambda26 from lam_x
// to lam_D(1), Lambda16 from lam_x to lam_D(2).
struct ArcSet {
    BifurcationPoint bif;
    SpectralArc a12, a16, a26;
    const SpectralArc& get(ArcPair p) const { return p == ArcPair::P12 ? a12 : p == ArcPair::P16 ? a16 : a26; }
};
ArcSet trace_all_arcs(const Potential& pot = Potential(), const ArcOptions& opt = {});

// (lam / pi) int dx / sqrt(A^2 + (lam + S'/2)^2) between the pair, on the
// sheet of the signed action, with r = sqrt(-V0) in place of the square root.
cplx density_rho_complex(const ActionTracker& at, ArcPair pair);
// The same with the square root taken as -i r; BranchMismatch unless real.
double density_rho(const ActionTracker& at, ArcPair pair);

// Moves a tracker from the anchor to lam along the L-shaped path.
ActionTracker tracker_at(const Potential& pot, cplx lam);

}  // namespace zs
