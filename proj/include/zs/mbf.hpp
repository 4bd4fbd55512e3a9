// SPDX-License-Identifier: MIT
#pragma once

#include "zs/common.hpp"

namespace zs {

// Airy function and derivative for complex argument: Maclaurin series for
// |z| <= 3, Laplace integral on a rotated ray for |ph z| <= 2pi/3, and
// Ai(z) = -w Ai(wz) - w^2 Ai(w^2 z) for the remaining phases.
cplx airy_ai(cplx z);
cplx airy_ai_prime(cplx z);

struct UValue {
    cplx u, du;
};

// U(t) = (2t/pi)^{1/2} K_{1/3}(t^{3/2}), solution of w'' = (9/4) t w decaying
// along ph t = 0. U is entire: U(t) = sqrt(6 pi/kappa) Ai(kappa t), kappa = (3/2)^{2/3}.
UValue U_std(cplx t);
// Same with an explicit phase; |ph| <= 4 pi/3 or PhaseOutOfRange.
UValue U_std_phase(double modulus, double phase);
// U_j(t) = U(t e^{-2 pi i j/3}); du is d/dt.
UValue U_rot(int j, cplx t);

// sin((k - j) pi/3) / sin(pi/3)
double lambda_jk(int j, int k);
// W[U_j, U_k] = U_j U_k' - U_j' U_k evaluated at t, and the closed form.
cplx wronskian_U(int j, int k, cplx t);
cplx wronskian_U_exact(int j, int k);

// S_j: (2j - 1) pi/3 <= ph t <= (2j + 1) pi/3, with slack tol in radians.
bool in_sector(int j, cplx t, double tol = 1e-12);
// E(t) = |exp((-1)^j t^{3/2})| on S_j, which equals exp|Re t^{3/2}| for either branch.
double E_weight(cplx t);
// 1/E on S_j, E on S_k.
double E_jk(int j, int k, cplx t);

struct Moduli {
    double M, N, Nhat;
    double theta, omega, omega_hat;
    double E;  // E_jk
};
Moduli moduli(int j, int k, cplx t);

// Theta(s) = exp(5 pi / (72 |s|)) - 1
double Theta(cplx s);
double C_jk(int j, int k);
// C_jk |t|^{-1/4} [1 + Theta(t^{3/2})]
double M_bound(int j, int k, cplx t);
// (3/2) C_jk |t|^{1/4} [1 + Theta(t^{3/2})]
double Nhat_bound(int j, int k, cplx t);

}  // namespace zs
