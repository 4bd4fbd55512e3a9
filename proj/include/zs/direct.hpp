// SPDX-License-Identifier: MIT
#pragma once

#include <array>
#include <vector>

#include "zs/potential.hpp"

namespace zs {

using Vec2 = std::array<cplx, 2>;
using Mat2 = std::array<Vec2, 2>;  // two column vectors

// u: the original system eps/i u' = K u.
// v: the gauged system eps/i v' = M v, u = diag(e^{iS/2eps}, e^{-iS/2eps}) [[1,1],[-1,1]] v.
enum class Frame { U, V };

struct DirectOptions {
    double L = 10.0;
    double tol = 1e-12;
    double step_frac = 0.25;  // h <= step_frac * eps
    Frame frame = Frame::U;
};

// Value m * exp(log) kept apart so that exponentially large or small
// quantities survive.
struct Scaled {
    cplx m{0.0};
    cplx log{0.0};
    cplx value() const { return m * std::exp(log); }
};

// Propagates a vector of the chosen frame from x0 to x1. The result is
// exp(log_scale) * vec; the vector is renormalised on the way.
struct Propagated {
    Vec2 vec;
    double log_scale = 0;
    long steps = 0;
};
Propagated integrate_zs(const Potential& pot, cplx lam, double eps, double x0, double x1, Vec2 init,
                        const DirectOptions& opt = {});

// Fundamental matrix from x0 to x1 (identity at x0), no renormalisation.
Mat2 propagate_frame(const Potential& pot, cplx lam, double eps, double x0, double x1,
                     const DirectOptions& opt = {});

Vec2 u_to_v(const Potential& pot, double x, double eps, const Vec2& u);
Vec2 v_to_u(const Potential& pot, double x, double eps, const Vec2& v);

// Jost data at x = xm: phi_l ~ e^{-i lam x/eps} e1 at -inf and
// phi_r ~ e^{i lam x/eps} e2 at +inf (u-frame normalisation, first-order
// tail correction at -+L). Vectors are in the frame of opt.frame.
struct JostPair {
    cplx lam;
    double eps;
    double xm;
    Vec2 left, right;
    cplx log_left, log_right;  // phi = exp(log) * vec
};
JostPair jost_pair(const Potential& pot, cplx lam, double eps, double xm = 0.0, const DirectOptions& opt = {});

// a(lam) = det[phi_l, phi_r]. In the v-frame the vectors are mapped back to
// the u-frame at x = 0, so both frames return the same value.
Scaled scattering_a(const Potential& pot, cplx lam, double eps, const DirectOptions& opt = {});

// a up to the non-vanishing analytic factor e^{2 i lam L/eps}; same zeros,
// bounded exponent range. This is what root finding uses.
Scaled reduced_a(const Potential& pot, cplx lam, double eps, const DirectOptions& opt = {});

struct SearchBox {
    double re_lo, re_hi, im_lo, im_hi;
};

struct OracleEigenvalue {
    cplx lambda;
    double residual = 0;    // |a(lambda)| relative to the sampled boundary scale
    double condition = 0;   // |a'|^{-1} |da| / 1e-8 under relative 1e-8 amplitude change
    SearchBox certificate;  // box with winding number 1
    int newton_iters = 0;
};

struct EigenSearchOptions {
    DirectOptions ode;
    double max_box = 0.05;       // boxes larger than this are split even with one root
    double min_box = 1e-7;
    double phase_step = 0.6;     // max phase increment between boundary samples
    int max_evals = 200000;
};

// Roots of a in the box via argument-principle subdivision and Newton with a
// four-point complex-step derivative.
std::vector<OracleEigenvalue> direct_eigenvalues(const Potential& pot, double eps, const SearchBox& region,
                                                 const EigenSearchOptions& opt = {});

// Default search region: the upper half of the numerical range padded by 0.05,
// kept 1e-3 above the real axis.
SearchBox default_search_region(const Potential& pot);

// Newton polish of a single root of a starting at lam0.
cplx polish_eigenvalue(const Potential& pot, double eps, cplx lam0, const DirectOptions& opt = {},
                       int* iters = nullptr);

double eigenvalue_condition(const Potential& pot, double eps, cplx lam, const DirectOptions& opt = {});

// Reflection coefficient for real lam.
// Frame route: R = det[phi_-^l, phi_-^r] / det[phi_+^r, phi_-^l] with the u-frame Jost solutions.
cplx reflection_frame(const Potential& pot, double lam, double eps, const DirectOptions& opt = {});
// Scalar route: the second-order equation for w_- with f = A^2 + (lam + S'/2)^2 and
// g = 3/4 (B'/B)^2 - 1/2 B''/B, B = lam + S'/2 + iA; J_-^l = P e^- + Q e^+ at +inf, R = Q/P.
cplx reflection_scalar(const Potential& pot, double lam, double eps, const DirectOptions& opt = {});

// sigma(lam) = || f^{1/2} - lam ||_{L1}, and the signed half-line integrals
// P_l = int_{-inf}^0 (f^{1/2} - lam), P_r = int_0^{inf} (f^{1/2} - lam).
struct SigmaSplit {
    double sigma;
    double abs_left, abs_right;
    double signed_left, signed_right;
};
SigmaSplit sigma_norm(const Potential& pot, double lam);

// R = e^{2 i P_r/eps} W[w_-^l, w_-^r] / W[w_+^r, w_-^l] with w normalised as
// the WKB solutions based at 0. Returns the Wronskian ratio and the factor.
struct ReflectionSplit {
    cplx R;
    cplx phase_factor;  // e^{2 i P_r / eps}
    cplx wronskian_ratio;
};
ReflectionSplit reflection_wkb_split(const Potential& pot, double lam, double eps, const DirectOptions& opt = {});

// Jost ratio b_J = phi_l / phi_r at an eigenvalue, as exp(log) * m.
// spread: relative spread of the ratio over the sample points.
struct JostRatio {
    Scaled b;
    double spread = 0;
};
JostRatio jost_ratio(const Potential& pot, cplx lam, double eps, const std::vector<double>& xs = {-1, -0.5, 0, 0.5, 1},
                     const DirectOptions& opt = {});

// Norming constant u0^beta / u0^alpha for the pair (alpha, beta) = (x1, x2),
// obtained from b_J and the leading-order WKB normalisations of the two
// decaying solutions at -+L.
struct NormingConstant {
    cplx value;
    JostRatio jost;
};
NormingConstant norming_constant_direct(const Potential& pot, cplx lam, double eps, const DirectOptions& opt = {});

}  // namespace zs
