// SPDX-License-Identifier: MIT
#pragma once

#include <functional>
#include <string>
#include <vector>

#include "zs/geometry.hpp"

namespace zs {

// Polyline path for integrals of sqrt(-V0). If start_tp / end_tp is set the
// corresponding endpoint is a simple turning point and the adjacent segment
// uses the t = c + (b - c) s^2 substitution.
struct ActionPath {
    std::vector<cplx> nodes;
    bool start_tp = false;
    bool end_tp = false;
};

struct PathIntegral {
    cplx value{0.0};   // integral of r^power dt, r the continued sqrt(-V0)
    cplx root_end{0};  // r at the final node (or the reduced root if end_tp)
    double error = 0;
};

// Integral of r(t)^power dt along the path, power = +1 or -1.
// seed: at a regular start, the branch of r(start) is the one nearest seed;
// at a turning-point start, the branch of sqrt(-V0'(c)(b - c)) nearest seed.
// An optional weight w(t) multiplies the integrand.
PathIntegral integrate_path(const Potential& pot, cplx lam, const ActionPath& path, cplx seed,
                            int power = 1, double abstol = 1e-11,
                            const std::function<cplx(cplx)>& weight = nullptr);

// Continues r = sqrt(-V0) along a polyline from the value r0 at route[0].
cplx continue_root(const Potential& pot, cplx lam, const std::vector<cplx>& route, cplx r0);

// Branch of sqrt(-V0(p)) obtained from the value near +lam at x = 8 by
// continuing along 8 -> 8 + i Im p -> p; the horizontal leg steps around
// obstacles (turning points, poles) on its left, i.e. below.
cplx large_x_root(const Potential& pot, cplx lam, cplx p, const std::vector<cplx>& obstacles = {});

struct ActionValue {
    cplx alpha, beta, lambda;
    cplx value;
    double error = 0;
    std::string certificate;  // path and seed description
};

// z(beta, lam, alpha) = i * int_alpha^beta sqrt(-V0) dt on a straight route
// (detoured around obstacles), branch from the large-x seed.
ActionValue action_integral(const Potential& pot, cplx alpha, cplx beta, cplx lam);

enum class ArcPair { P12, P16, P26 };
const char* pair_name(ArcPair p);

// I12, I16, I26 continued from the anchor. Sign convention: at the anchor
// Im I12 > 0, Im I16 > 0 and I12 = I16 - I26.
struct ArcActions {
    cplx I12, I16, I26;
    cplx get(ArcPair p) const { return p == ArcPair::P12 ? I12 : p == ArcPair::P16 ? I16 : I26; }
};

// Unsigned actions at a labeled set (principal seeds). Routes: x1 -> x6,
// x2 -> x6 straight; x1 -> (x6 + x7)/2 -> x2 for I12. When another turning
// point comes within 0.05 of the I12 route (near lam_D) the direct value is
// NaN and trackers use I12 = I16 - I26 instead.
ArcActions raw_arc_actions(const Potential& pot, const TurningPointSet& tps);
bool direct_route_12(const TurningPointSet& tps);

// int w(t) dt / sqrt(-V0) on the same routes and sheets as the signed
// actions (the sheet is fixed by matching the action value). w = 1 by default.
ArcActions arc_inverse_root_integrals(const Potential& pot, const TurningPointSet& tps,
                                      const ArcActions& signed_actions,
                                      const std::function<cplx(cplx)>& weight = nullptr);

// dI/dlam = i int (lam + S'/2) dt / sqrt(-V0) (endpoint terms vanish).
ArcActions arc_action_derivatives(const Potential& pot, const TurningPointSet& tps, const ArcActions& signed_actions);

class ActionTracker {
public:
    explicit ActionTracker(const Potential& pot, cplx anchor = default_anchor);
    // Moves along a straight segment to lam1 in steps of at most max_step.
    void move_to(cplx lam1, double max_step = 1e-2);
    // Moves along the L-shaped path (horizontal, then vertical) to lam1.
    void move_l_path(cplx lam1);

    cplx lambda() const { return tps_.lambda; }
    const TurningPointSet& turning_points() const { return tps_; }
    const ArcActions& actions() const { return act_; }
    cplx I(ArcPair p) const { return act_.get(p); }
    const Potential& potential() const { return pot_; }
    ArcActions derivatives() const { return arc_action_derivatives(pot_, tps_, act_); }

private:
    bool try_step(cplx lam1);
    Potential pot_;
    TurningPointSet tps_;
    ArcActions act_;
    ArcActions prev_;
    cplx prev_lam_;
    bool has_prev_ = false;
};

// I_jk at lam continued from the anchor along the L-shaped path.
cplx I_jk(const Potential& pot, cplx lam, ArcPair p);

// xi_c(x) = int_c^x sqrt(V0) dt on the straight route, branch with Re >= 0.
cplx xi_c(const Potential& pot, cplx x, cplx lam, cplx c);
// Same along c -> waypoints -> x.
cplx xi_c(const Potential& pot, cplx x, cplx lam, cplx c, const std::vector<cplx>& waypoints);

}  // namespace zs
