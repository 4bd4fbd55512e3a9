// SPDX-License-Identifier: MIT
#include "zs/olver.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "zs/action.hpp"
#include "zs/mbf.hpp"
#include "zs/quadrature.hpp"

namespace zs {

double balancing(Balancing b, cplx t) { return b == Balancing::Unit ? 1.0 : std::pow(1 + std::norm(t), 0.25); }

namespace {

const cplx w3 = std::polar(1.0, 2 * pi / 3);

// Root of z^3 = w nearest pred; throws if the choice is not clear.
cplx cube_root_near(cplx w, cplx pred) {
    if (w == 0.0) return 0.0;
    cplx b = std::exp(std::log(w) / 3.0);
    cplx cand[3] = {b, b * w3, b * w3 * w3};
    double d[3];
    for (int m = 0; m < 3; ++m) d[m] = std::abs(cand[m] - pred);
    int best = static_cast<int>(std::min_element(d, d + 3) - d);
    double second = std::numeric_limits<double>::infinity();
    for (int m = 0; m < 3; ++m)
        if (m != best) second = std::min(second, d[m]);
    if (d[best] > 0.5 * second) throw Error(Errc::BranchContinuationFailure, "zeta branch ambiguous");
    return cand[best];
}

// int_c^t sqrt(-V0) on the straight route, any branch.
cplx root_integral_from(const Potential& pot, cplx lam, cplx c, cplx t) {
    ActionPath p{{c, t}, true, false};
    return integrate_path(pot, lam, p, 1.0, 1, 1e-13).value;
}

}  // namespace

cplx zeta_map(const Potential& pot, cplx x, cplx lam, cplx c) {
    if (x == c) return 0.0;
    cplx f0 = pot.V0_x(c, lam), f1 = 0.5 * pot.V0_xx(c, lam);
    cplx f03 = std::exp(std::log(f0) / 3.0);
    auto model = [&](cplx t) { return std::pow(2.0 / 3.0, 2.0 / 3.0) * f03 * (t - c) * (1.0 + f1 / (5.0 * f0) * (t - c)); };
    double len = std::abs(x - c);
    double s0 = std::min(1.0, 1e-2 / len);
    const int K = 16;
    cplx zeta = 0, prev_zeta = 0;
    double prev_s = 0;
    for (int k = 0; k <= K; ++k) {
        double s = k == 0 ? s0 : s0 + (1 - s0) * k / K;
        if (k > 0 && s <= prev_s) continue;
        cplx t = c + s * (x - c);
        cplx J = root_integral_from(pot, lam, c, t);
        cplx xi2 = -J * J;  // (int sqrt(V0))^2
        cplx pred = k == 0 ? model(t) : prev_zeta * (s / prev_s);
        zeta = cube_root_near(xi2, pred);
        prev_zeta = zeta;
        prev_s = s;
        if (s >= 1) break;
    }
    return zeta;
}

cplx f_hat(const Potential& pot, cplx x, cplx lam, cplx c) { return 4.0 / 9.0 * pot.V0(x, lam) / zeta_map(pot, x, lam, c); }

ZetaPath::ZetaPath(const Potential& pot, cplx lam, cplx c, std::vector<cplx> nodes, int per_segment)
    : pot_(pot), lam_(lam), c_(c), nodes_(std::move(nodes)) {
    if (nodes_.size() < 2) throw Error(Errc::InvalidInput, "path needs two nodes");
    cplx x0 = nodes_[0];
    cplx z0 = zeta_map(pot_, x0, lam_, c_);
    cplx dir = (nodes_[1] - x0) / std::abs(nodes_[1] - x0);
    double d = 1e-5;
    cplx dz = (zeta_map(pot_, x0 + d * dir, lam_, c_) - zeta_map(pot_, x0 - d * dir, lam_, c_)) / (2 * d * dir);
    cplx sq = std::exp(0.5 * std::log(z0));
    cplx xi0 = z0 * sq;
    cplx root0 = sqrt_near(pot_.V0(x0, lam_), 1.5 * sq * dz);
    table_.push_back({x0, xi0, z0, root0});
    for (int s = 0; s < segments(); ++s)
        for (int i = 1; i <= per_segment; ++i) advance(point(s, double(i) / per_segment), 0);
}

ZetaPath::Value ZetaPath::step(const Value& p, cplx x) const {
    ActionPath ap{{p.x, x}, false, false};
    // sqrt(-V0) = -i sqrt(V0) on the continued branch
    PathIntegral pi_ = integrate_path(pot_, lam_, ap, -I * p.root, 1, 1e-13);
    cplx xi = p.xi + I * pi_.value;
    // first-order prediction from zeta' = root / ((3/2) zeta^{1/2}), zeta^{1/2} = xi/zeta
    cplx pred = p.zeta;
    if (p.zeta != 0.0) pred += (x - p.x) * p.root / (1.5 * p.xi / p.zeta);
    return {x, xi, cube_root_near(xi * xi, pred), I * pi_.root_end};
}

void ZetaPath::advance(cplx x, int depth) {
    try {
        table_.push_back(step(table_.back(), x));
    } catch (const Error& e) {
        if (e.code() != Errc::BranchContinuationFailure || depth > 30) throw;
        advance(0.5 * (table_.back().x + x), depth + 1);
        advance(x, depth + 1);
    }
}

ZetaPath::Value ZetaPath::at(cplx x) const {
    size_t best = 0;
    double bd = std::abs(table_[0].x - x);
    for (size_t i = 1; i < table_.size(); ++i) {
        double dd = std::abs(table_[i].x - x);
        if (dd < bd) {
            bd = dd;
            best = i;
        }
    }
    const Value& p = table_[best];
    if (bd == 0) return p;
    return step(p, x);
}

cplx error_control_bracket(const ZetaPath& zp, cplx x, cplx dir, double h) {
    h = std::min(h, 0.25 * std::abs(x - zp.c()));
    const Potential& pot = zp.potential();
    cplx lam = zp.lambda();
    cplx psi[5];
    for (int k = -2; k <= 2; ++k) {
        cplx y = x + double(k) * h * dir;
        ZetaPath::Value v = zp.at(y);
        cplx fh = 4.0 / 9.0 * pot.V0(y, lam) / v.zeta;
        psi[k + 2] = std::exp(-0.25 * std::log(fh));
    }
    // keep one branch of f_hat^{-1/4} across the stencil
    for (int k : {0, 1, 3, 4}) {
        cplx best = psi[k];
        for (int m = 1; m < 4; ++m) {
            cplx c = psi[k] * std::pow(I, m);
            if (std::abs(c - psi[2]) < std::abs(best - psi[2])) best = c;
        }
        psi[k] = best;
    }
    cplx d2 = (-psi[4] + 16.0 * psi[3] - 30.0 * psi[2] + 16.0 * psi[1] - psi[0]) / (12.0 * h * h * dir * dir);
    cplx g = pot.correction_g(x, lam);
    return psi[2] * d2 - g * psi[2] * psi[2];
}

cplx error_control_bracket_closed(const Potential& pot, cplx lam, const ZetaPath::Value& v) {
    cplx V = pot.V0(v.x, lam), V1 = pot.V0_x(v.x, lam), V2 = pot.V0_xx(v.x, lam);
    cplx g = pot.correction_g(v.x, lam);
    cplx inner = 5.0 / 16.0 * V1 * V1 / (V * V) - 0.25 * V2 / V - g;
    cplx sqz = v.xi / v.zeta;  // zeta^{1/2} consistent with xi = zeta^{3/2}
    cplx dz = v.root / (1.5 * sqz);  // zeta'
    return inner / dz - 5.0 / 16.0 * dz / (v.zeta * v.zeta);
}

VariationValue variation_H(const ZetaPath& path, double eps, Balancing omega) {
    VariationValue out;
    double e23 = std::pow(eps, -2.0 / 3.0);
    const GaussRule& gl = gauss_legendre(8);
    for (int s = 0; s < path.segments(); ++s) {
        cplx a = path.nodes()[s], b = path.nodes()[s + 1];
        double len = std::abs(b - a);
        cplx dir = (b - a) / len;
        // fixed composite rule: 50 panels of 8 Gauss-Legendre nodes per segment
        const int panels = 50;
        for (int p = 0; p < panels; ++p) {
            double u0 = double(p) / panels, hu = 1.0 / panels;
            double sum = 0;
            for (size_t q = 0; q < gl.x.size(); ++q) {
                double u = u0 + 0.5 * hu * (gl.x[q] + 1);
                cplx x = a + u * (b - a);
                ZetaPath::Value v = path.at(x);
                cplx br = error_control_bracket(path, x, dir);
                double val = std::abs(br) / balancing(omega, e23 * v.zeta) * len;
                sum += 0.5 * hu * gl.w[q] * val;
            }
            out.value += sum;
        }
    }
    // Re xi monotone along the table
    const auto& t = path.table();
    int dirn = 0;
    for (size_t i = 1; i < t.size(); ++i) {
        double d = t[i].xi.real() - t[i - 1].xi.real();
        if (std::abs(d) < 1e-12) continue;
        int sd = d > 0 ? 1 : -1;
        if (dirn != 0 && sd != dirn) out.progressive = false;
        dirn = sd;
    }
    return out;
}

double rho_jk(int j, int k, Balancing omega) {
    if ((((k - j) % 3) + 3) % 3 == 0) throw Error(Errc::InvalidInput, "rho_jk needs k - j != 0 mod 3");
    // S_j u S_k is the arc of 4pi/3 starting at the lower edge of the first sector
    int first = ((k - j) % 3 + 3) % 3 == 1 ? j : k;
    double lo = (2 * first - 1) * pi / 3, hi = lo + 4 * pi / 3;
    double best = 0;
    for (int i = 1; i <= 64; ++i) {
        double r = 40.0 * i / 64;
        for (int m = 0; m < 64; ++m) {
            cplx t = std::polar(r, lo + (hi - lo) * m / 63);
            double M = moduli(j, k, t).M;
            best = std::max(best, balancing(omega, t) * M * M);
        }
    }
    double l = lambda_jk(j, k);
    return std::max(best, omega == Balancing::Quarter ? 1 + l * l : 0.0);
}

OlverBound olver_error_bound(int j, int k, const ZetaPath& path, double eps, cplx a, cplx b, bool ref_at_infinity,
                             Balancing omega) {
    OlverBound out;
    out.rho = rho_jk(j, k, omega);
    if (ref_at_infinity && b != 0.0) {
        out.applicable = false;
        out.reason = "reference point at infinity in S_j requires b = 0";
    }
    double e23 = std::pow(eps, -2.0 / 3.0);
    for (const auto& v : path.table()) {
        cplx t = e23 * v.zeta;
        if (!(in_sector(j, t, 1e-9) || in_sector(k, t, 1e-9))) {
            out.applicable = false;
            out.reason = "path leaves S_j u S_k";
            return out;
        }
        Moduli m = moduli(j, k, t);
        cplx w = a * U_rot(j, t).u + b * U_rot(k, t).u;
        out.sigma = std::max(out.sigma, balancing(omega, t) * m.M / m.E * std::abs(w));
    }
    out.variation = variation_H(path, eps, omega).value;
    out.E_end = E_jk(j, k, e23 * path.table().back().zeta);
    double l = std::abs(lambda_jk(j, k));
    out.bound = out.sigma / out.rho * out.E_end *
                std::expm1(out.rho * std::pow(eps, 2.0 / 3.0) * out.variation / (3 * l));
    return out;
}

cplx near_zero_bracket(cplx xi, double eps) { return std::exp(-xi / eps) + std::exp(xi / eps); }

std::vector<cplx> olver_ray(const Potential& pot, cplx lam, cplx c, double zeta_phase, double d0, double len) {
    cplx f0 = pot.V0_x(c, lam);
    cplx f03 = std::exp(std::log(f0) / 3.0);
    cplx u = std::polar(1.0, zeta_phase - std::arg(f03));
    return {c + d0 * u, c + (d0 + len) * u};
}

}  // namespace zs
