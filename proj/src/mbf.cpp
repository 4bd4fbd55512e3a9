// SPDX-License-Identifier: MIT
#include "zs/mbf.hpp"

#include <cmath>

#include <boost/math/special_functions/gamma.hpp>

#include "zs/quadrature.hpp"

namespace zs {

namespace {

constexpr double ai0 = 0.355028053887817239260;   // Ai(0)
constexpr double aip0 = 0.258819403792806798405;  // -Ai'(0)
const cplx omega = std::polar(1.0, 2 * pi / 3);

void airy_series(cplx z, cplx& ai, cplx& aip) {
    cplx z3 = z * z * z;
    cplx f = 1, fp = 0, g = z, gp = 1;
    cplx a = 1, b = z;  // current terms of f and g
    for (int k = 1; k < 200; ++k) {
        a *= z3 / double((3 * k - 1) * (3 * k));
        b *= z3 / double((3 * k) * (3 * k + 1));
        f += a;
        g += b;
        fp += a * double(3 * k) / z;
        gp += b * double(3 * k + 1) / z;
        if (std::abs(a) + std::abs(b) < 1e-18 * (std::abs(f) + std::abs(g))) break;
    }
    ai = ai0 * f - aip0 * g;
    aip = ai0 * fp - aip0 * gp;
}

// |ph z| <= 2pi/3, |z| not small.
void airy_laplace(cplx z, cplx& ai, cplx& aip) {
    cplx zeta = 2.0 / 3.0 * std::exp(1.5 * std::log(z));
    double psi = std::arg(zeta) / 3;  // ray away from the branch point u = -2 zeta
    cplx e = std::polar(1.0, psi);
    double smax = std::pow(45.0 / std::cos(psi), 1.0 / 6.0);
    cplx c0 = 6.0 * std::polar(1.0, 5 * psi / 6), c1 = 6.0 * std::polar(1.0, 7 * psi / 6);
    auto f0 = [&](double s) {
        double s6 = std::pow(s, 6);
        return c0 * std::pow(s, 4) * std::exp(-e * s6) * std::pow(1.0 + e * s6 / (2.0 * zeta), -1.0 / 6);
    };
    auto f1 = [&](double s) {
        double s6 = std::pow(s, 6);
        return c1 * s6 * std::exp(-e * s6) * std::pow(1.0 + e * s6 / (2.0 * zeta), 1.0 / 6);
    };
    cplx i0 = integrate_gk(f0, 0, smax, 1e-17, 1e-15).value;
    cplx i1 = integrate_gk(f1, 0, smax, 1e-17, 1e-15).value;
    cplx ez = std::exp(-zeta);
    cplx q = std::exp(0.25 * std::log(z));
    double sp = std::sqrt(pi);
    ai = ez / (2 * sp * q * boost::math::tgamma(5.0 / 6)) * i0;
    aip = -q * ez / (2 * sp * boost::math::tgamma(7.0 / 6)) * i1;
}

void airy(cplx z, cplx& ai, cplx& aip) {
    if (std::abs(z) <= 3) return airy_series(z, ai, aip);
    if (std::abs(std::arg(z)) <= 2 * pi / 3 + 1e-12) return airy_laplace(z, ai, aip);
    // Ai(z) = -w Ai(wz) - w^2 Ai(w^2 z); both rotated arguments lie in |ph| <= 2pi/3
    cplx a1, d1, a2, d2;
    airy_laplace(omega * z, a1, d1);
    airy_laplace(omega * omega * z, a2, d2);
    ai = -omega * a1 - omega * omega * a2;
    aip = -omega * omega * d1 - omega * omega * omega * omega * d2;
}

const double kappa = std::pow(1.5, 2.0 / 3.0);

double sector_phase(cplx t) {
    double ph = std::arg(t);
    return ph < -pi / 3 ? ph + 2 * pi : ph;  // in [-pi/3, 5pi/3)
}

}  // namespace

cplx airy_ai(cplx z) {
    cplx a, d;
    airy(z, a, d);
    return a;
}

cplx airy_ai_prime(cplx z) {
    cplx a, d;
    airy(z, a, d);
    return d;
}

UValue U_std(cplx t) {
    cplx a, d;
    airy(kappa * t, a, d);
    double c = std::sqrt(6 * pi / kappa);
    return {c * a, c * kappa * d};
}

UValue U_std_phase(double modulus, double phase) {
    if (std::abs(phase) > 4 * pi / 3 + 1e-12)
        throw Error(Errc::PhaseOutOfRange, "phase continuation window is |ph t| <= 4pi/3");
    return U_std(std::polar(modulus, phase));
}

UValue U_rot(int j, cplx t) {
    cplx r = std::polar(1.0, -2 * pi * j / 3);
    UValue v = U_std(t * r);
    return {v.u, v.du * r};
}

double lambda_jk(int j, int k) { return std::sin((k - j) * pi / 3) / std::sin(pi / 3); }

cplx wronskian_U(int j, int k, cplx t) {
    UValue a = U_rot(j, t), b = U_rot(k, t);
    return a.u * b.du - a.du * b.u;
}

cplx wronskian_U_exact(int j, int k) { return 3.0 * I * std::polar(1.0, -(j + k) * pi / 3) * lambda_jk(j, k); }

bool in_sector(int j, cplx t, double tol) {
    if (t == 0.0) return true;
    double ph = sector_phase(t);
    double lo = (2 * j - 1) * pi / 3, hi = (2 * j + 1) * pi / 3;
    for (double p : {ph, ph - 2 * pi, ph + 2 * pi})
        if (p >= lo - tol && p <= hi + tol) return true;
    return false;
}

double E_weight(cplx t) {
    if (t == 0.0) return 1.0;
    return std::exp(std::abs(std::exp(1.5 * std::log(t)).real()));
}

double E_jk(int j, int k, cplx t) {
    if (in_sector(j, t)) return 1.0 / E_weight(t);
    if (in_sector(k, t)) return E_weight(t);
    throw Error(Errc::InvalidInput, "t outside S_j and S_k");
}

Moduli moduli(int j, int k, cplx t) {
    if (j == k) throw Error(Errc::InvalidInput, "moduli need j != k");
    Moduli m;
    m.E = E_jk(j, k, t);
    UValue uj = U_rot(j, t), uk = U_rot(k, t);
    double e2 = m.E * m.E;
    m.M = std::sqrt(std::norm(uj.u) / e2 + e2 * std::norm(uk.u));
    m.N = std::sqrt(std::norm(uj.du) / e2 + e2 * std::norm(uk.du));
    m.theta = std::atan(e2 * std::abs(uk.u) / std::abs(uj.u));
    m.omega = std::atan(e2 * std::abs(uk.du) / std::abs(uj.du));
    // |d[t^{1/4} U]/dt| = |t|^{1/4} |U/(4t) + U'|
    cplx hj = uj.u / (4.0 * t) + uj.du, hk = uk.u / (4.0 * t) + uk.du;
    double at4 = std::pow(std::abs(t), 0.25);
    double dj = at4 * std::abs(hj), dk = at4 * std::abs(hk);
    m.Nhat = std::sqrt(dj * dj / e2 + e2 * dk * dk) / at4;
    m.omega_hat = std::atan(e2 * dk / dj);
    return m;
}

double Theta(cplx s) { return std::exp(5 * pi / (72 * std::abs(s))) - 1; }

double C_jk(int j, int k) {
    auto lam = [](int a, int b) { return std::abs(lambda_jk(a % 3, ((b % 3) + 3) % 3)); };
    double l = std::abs(lambda_jk(j, k));
    double a = std::sqrt(1 + std::pow(l + lam(j, k + 1), 2));
    double b = std::sqrt(1 + std::pow(l + lam(j, k - 1), 2));
    return std::max(a, b);
}

double M_bound(int j, int k, cplx t) {
    double at = std::abs(t);
    return C_jk(j, k) * std::pow(at, -0.25) * (1 + Theta(std::pow(at, 1.5)));
}

double Nhat_bound(int j, int k, cplx t) {
    double at = std::abs(t);
    return 1.5 * C_jk(j, k) * std::pow(at, 0.25) * (1 + Theta(std::pow(at, 1.5)));
}

}  // namespace zs
