// SPDX-License-Identifier: MIT
#pragma once

#include <array>
#include <vector>

#include "zs/direct.hpp"
#include "zs/potential.hpp"

namespace zs {

// N = A S'' - 2 lam A' - A' S' and the log-derivative of H = (g_-/g_+)^{1/4}
// with respect to z: N / (4 f r), f = -V0, r the continued sqrt(-V0).
// TurningPointSingularity when |V0| < 1e-12.
cplx script_H(const Potential& pot, cplx x, cplx lam, cplx r);

// Phase map and branch data at a point: z = z(x, lam, alpha), r = sqrt(-V0)
// on the sheet in use (dz/dx = i r) and H with H^2 = -i g_- / r.
struct WkbPoint {
    cplx x, z, r, H;
    cplx alpha;     // base of the phase map
    int sheet = 0;  // caller label for the sheet; Wronskians need equal labels
};

// The data continued from `from` along a polyline (route[0] = from.x).
WkbPoint continue_point(const Potential& pot, cplx lam, const WkbPoint& from, const std::vector<cplx>& route);

struct WkbSymbol {
    cplx z0, z;
    double eps = 0;
    int sign = 1;
    int N = 0;              // recurrence levels used
    cplx w_even, w_odd;     // sum_{n<N} w_{2n}, sum_{n<N} w_{2n+1}
    std::vector<double> terms;  // |w_k(z)|, k = 0, 1, ..., 2N - 1
    WkbPoint end;
};

// Symbols w^{sign} with base at base.x, evaluated at the end of route
// (route[0] = base.x). The iterated operators are applied on a fixed
// composite rule of `nodes` Gauss-Legendre points (panels of 8) along the
// route; recursion stops early once both new terms fall below 1e-12 of the sums.
WkbSymbol wkb_symbols(const Potential& pot, cplx lam, const WkbPoint& base, const std::vector<cplx>& route,
                      double eps, int sign, int N = 8, int nodes = 400);

struct WkbSolution {
    cplx x, lambda;
    double eps = 0;
    int sign = 1;
    WkbPoint base;  // symbol base x0 with its branch data
    WkbPoint at;    // data at x
    Vec2 u;         // original frame, eps/i u' = K u
    Vec2 v;         // gauged frame, u = diag(e^{iS/2eps}, e^{-iS/2eps}) [[1,1],[-1,1]] v
    WkbSymbol symbol;
};

// Exact WKB solution u^{sign}(x, lam, eps, alpha, x0) at the end of route.
WkbSolution wkb_solution(const Potential& pot, cplx lam, double eps, int sign, const WkbPoint& base,
                         const std::vector<cplx>& route, int N = 8);

// det[a.u, b.u] at a common point. BranchMismatch if the phase bases or
// sheets differ, InvalidInput if the evaluation points differ.
cplx wronskian_pair(const WkbSolution& a, const WkbSolution& b);

// Values of the gauged frame at a point from base data and symbols.
Vec2 wkb_vector_v(const WkbPoint& p, double eps, int sign, cplx w_even, cplx w_odd);
Vec2 v_to_u_complex(const Potential& pot, cplx x, double eps, const Vec2& v);

// Gauged system eps/i v' = M v along a complex polyline (RKF78, tolerance tol).
Vec2 propagate_v_complex(const Potential& pot, cplx lam, double eps, const std::vector<cplx>& route, Vec2 v0,
                         double tol = 1e-13);

// The three solutions around a simple turning point alpha: u_0 = u^+ based in
// omega_0, u_1 = u^- in omega_1, u_2 = u^+ in omega_2 (sectors between the
// Stokes rays l_1 l_2, l_2 l_0, l_0 l_1; cut on l_1). Base j sits at
// distance d[j] on the sector bisectors; the exact solutions are obtained by
// integrating the gauged system from the bases, where w = (1, 0).
// anticlockwise = false numbers the rays clockwise (diagnostic).
struct ConnectionTriple {
    cplx alpha, lambda;
    double eps = 0;
    bool g_minus_zero = true;
    WkbPoint base[3];
    double stokes_angle[3];  // directions of l_0, l_1, l_2 at alpha
    // Wronskians in the gauged frame (the original frame carries a factor 2)
    cplx W01, W12, W20;
    cplx target01, target12, target20;  // 2i, -2i, -+2
    double deviation = 0;              // max |W - target|
    double identity_residual = 0;      // |W12 u0 + W20 u1 + W01 u2| / max |u_i|
    double wronskian_spread = 0;       // relative spread along a sample segment
    // symbol values along arcs between neighbouring bases
    cplx w_even_01, w_even_21;  // w^+_even(z_1, eps, z_0), w^+_even(z_1, eps, z_2)
};

ConnectionTriple connection_triple(const Potential& pot, cplx lam, cplx alpha, double eps,
                                   std::array<double, 3> d = {0.4, 0.4, 0.4}, int l0_index = 0,
                                   bool anticlockwise = true);

// Polyline around alpha from one base to another (radius and angle interpolated linearly).
std::vector<cplx> arc_route(cplx alpha, cplx from, cplx to, int pieces = 64);

}  // namespace zs
