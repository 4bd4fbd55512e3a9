// SPDX-License-Identifier: MIT
#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "zs/arcs.hpp"

namespace zs {

enum class Regime { GenericArc, Bifurcation, NearZero };
const char* regime_name(Regime r);

struct OracleMatch {
    cplx lambda;
    double distance = 0;
};

struct EigenvalueRecord {
    cplx lambda;
    int n = 0;
    Regime regime = Regime::GenericArc;
    ArcPair pair = ArcPair::P12;  // arc of the seed for Bifurcation records
    double eps = 0;
    int norming_sign = 0;  // 0 until norming_signs runs
    bool norming_verified = false;
    std::optional<OracleMatch> oracle;
    double residual = 0;  // |m e^{2z/eps} - 1| (or the QC3 defect)
    cplx action;          // the solved action (I_pair, xi, or I16 for QC3)
};

struct DeltaIndex {
    GClass a, b;
    int delta;
};
// -1 when both endpoints share the class, +1 otherwise.
DeltaIndex delta_index(GClass a, GClass b);

struct BSOptions {
    // Nodes with |lam - lam_x| < exclusion are skipped; negative means
    // 3 eps log(1/eps). lam_x is the first node of the arc.
    double exclusion = -1;
    double max_distance = 1e300;  // and nodes farther than this from lam_x
    double newton_tol = 1e-13;
    int max_newton = 20;
};

// Roots of -e^{2 I_pair/eps} = 1 along the arc: |Im I| = (n + 1/2) pi eps.
std::vector<EigenvalueRecord> bs_eigenvalues(const SpectralArc& arc, const Potential& pot, double eps,
                                             const BSOptions& opt = {});

struct BifurcationOptions {
    double radius = -1;    // window radius, negative means 5 eps
    double c_prime = 1.0;  // exclusion c' eps log(1/eps) of the reduced conditions
    double grid_step = 0.5;  // grid spacing in units of eps; <= 0 disables the grid
    double min_im = 0.01;    // seeds and iterates stay above this
    double newton_tol = 1e-13;
    int max_newton = 40;
};

struct BifurcationResult {
    std::vector<EigenvalueRecord> roots;
    std::vector<EigenvalueRecord> seeds;
    std::vector<std::string> dropped;  // seeds whose Newton failed
    double radius = 0;
    double exclusion = 0;
    cplx center;
};

// QC3 defect -e^{2 I16/eps} - e^{2 I26/eps} - 1 at the tracker position.
cplx qc3_defect(const ActionTracker& t, double eps);

// Roots of the QC3 defect in the window around lam_x, seeded by the reduced
// roots of I12, I16, I26 inside the window and by a square grid. Grid roots
// carry n = -1.
BifurcationResult bifurcation_eigenvalues(const Potential& pot, const ArcSet& arcs, double eps,
                                          const BifurcationOptions& opt = {});

struct NearZeroRegion {
    double re_half = 0.05;
    double im_lo = 1e-3;
    double im_hi = -1;  // negative: mu_x - eps log(1/eps)
    double step = 2.5e-3;
};

// Roots of -e^{2 xi_{x1}(x2)/eps} = 1 on the imaginary axis within the region;
// xi uses the route x1 -> (x6 + x7)/2 -> x2.
std::vector<EigenvalueRecord> near_zero_eigenvalues(const Potential& pot, const ArcSet& arcs, double eps,
                                                    const NearZeroRegion& region = {});

// xi_{x1}(x2) at the tracker position.
cplx near_zero_xi(const ActionTracker& t);

// Returns the norming constant at lam or nullopt when unavailable.
using NormingOracle = std::function<std::optional<cplx>(cplx)>;

// Sets norming_sign = g (-1)^n; g from the oracle's sign of Re b at the middle
// record, +1 (unverified) when the oracle is missing or fails.
void norming_signs(std::vector<EigenvalueRecord>& records, const NormingOracle& oracle);

}  // namespace zs
