// SPDX-License-Identifier: MIT
#include "zs/potential.hpp"

#include <cmath>

namespace zs {

namespace {

// sech(u), tanh(u) without overflow for large |Re u|.
inline void sech_tanh(cplx u, cplx& h, cplx& t) {
    if (u.real() >= 0) {
        cplx e = std::exp(-u);
        cplx e2 = e * e;
        cplx d = 1.0 + e2;
        h = 2.0 * e / d;
        t = (1.0 - e2) / d;
    } else {
        cplx e = std::exp(u);
        cplx e2 = e * e;
        cplx d = 1.0 + e2;
        h = 2.0 * e / d;
        t = (e2 - 1.0) / d;
    }
}

}  // namespace

Potential::Potential(double amp, double phase, Family fam) : amp_(amp), phase_(phase), family_(fam) {}

double Potential::pole_distance(cplx x) const {
    // poles of sech(2x): x = i*pi/4 + i*k*pi/2
    double k = std::round((x.imag() - pi / 4) / (pi / 2));
    cplx p(0.0, pi / 4 + k * pi / 2);
    return std::abs(x - p);
}

void Potential::guard(cplx x) const {
    if (pole_distance(x) < pole_guard())
        throw Error(Errc::PoleProximity, "evaluation too close to a pole of sech(2x)");
}

Fields Potential::fields(cplx x) const {
    guard(x);
    cplx h, t;
    sech_tanh(2.0 * x, h, t);
    cplx h2 = h * h;
    cplx d1 = -2.0 * h * t;
    cplx d2 = 4.0 * h * (1.0 - 2.0 * h2);
    cplx d3 = -8.0 * h * t + 48.0 * h2 * h * t;
    Fields f;
    f.A = amp_ * h;
    f.A1 = amp_ * d1;
    f.A2 = amp_ * d2;
    f.A3 = amp_ * d3;
    f.S = phase_ * h;
    f.S1 = phase_ * d1;
    f.S2 = phase_ * d2;
    f.S3 = phase_ * d3;
    return f;
}

std::array<double, 3> Potential::real_fields(double x) const {
    double u = 2.0 * std::abs(x);
    double e = std::exp(-u);
    double e2 = e * e;
    double h = 2.0 * e / (1.0 + e2);
    double t = (1.0 - e2) / (1.0 + e2);
    if (x < 0) t = -t;
    return {amp_ * h, phase_ * h, -2.0 * phase_ * h * t};
}

cplx Potential::A(cplx x) const { return fields(x).A; }
cplx Potential::S(cplx x) const { return fields(x).S; }
cplx Potential::Sprime(cplx x) const { return fields(x).S1; }

cplx Potential::V0(cplx x, cplx lam) const {
    Fields f = fields(x);
    cplx b = lam + 0.5 * f.S1;
    return -b * b - f.A * f.A;
}

cplx Potential::V0_x(cplx x, cplx lam) const {
    Fields f = fields(x);
    cplx b = lam + 0.5 * f.S1;
    return -b * f.S2 - 2.0 * f.A * f.A1;
}

cplx Potential::V0_xx(cplx x, cplx lam) const {
    Fields f = fields(x);
    cplx b = lam + 0.5 * f.S1;
    return -0.5 * f.S2 * f.S2 - b * f.S3 - 2.0 * f.A1 * f.A1 - 2.0 * f.A * f.A2;
}

cplx Potential::g_minus(cplx x, cplx lam) const {
    Fields f = fields(x);
    return lam + 0.5 * f.S1 - I * f.A;
}

cplx Potential::g_plus(cplx x, cplx lam) const {
    Fields f = fields(x);
    return -(lam + 0.5 * f.S1 + I * f.A);
}

cplx Potential::f_tilde(cplx x, cplx lam) const { return -V0(x, lam); }

cplx Potential::correction_g(cplx x, cplx lam) const {
    Fields f = fields(x);
    cplx D = f.A - I * (lam + 0.5 * f.S1);
    if (std::abs(D) <= 1e-10)
        throw Error(Errc::DenominatorVanishes, "A - i(lambda + S'/2) vanishes (zero of g_plus)");
    cplx r1 = (f.A1 - 0.5 * I * f.S2) / D;
    cplx r2 = (f.A2 - 0.5 * I * f.S3) / D;
    return 0.75 * r1 * r1 - 0.5 * r2;
}

Rect Potential::numerical_range() const {
    // sup over R of 2 sech(u) tanh(u) is 1 (at sinh u = 1), so S' ranges over [-|s|, |s|].
    double s = std::abs(phase_);
    double a = std::abs(amp_);
    return {-0.5 * s, 0.5 * s, -a, a};
}

}  // namespace zs
