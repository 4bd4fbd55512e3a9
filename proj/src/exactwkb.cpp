// SPDX-License-Identifier: MIT
#include "zs/exactwkb.hpp"

#include <algorithm>
#include <cmath>

#include <boost/numeric/odeint.hpp>

#include "zs/action.hpp"
#include "zs/quadrature.hpp"

namespace zs {

namespace ode = boost::numeric::odeint;

namespace {

constexpr int kPanel = 8;

// Integration matrix on the 8-point Gauss-Legendre panel:
// S[k][j] = int_{-1}^{t_k} l_j(t) dt for the Lagrange basis l_j.
struct PanelRule {
    std::vector<double> t, w;
    std::vector<std::vector<double>> S;
};

const PanelRule& panel_rule() {
    static const PanelRule rule = [] {
        PanelRule r;
        const GaussRule& g = gauss_legendre(kPanel);
        r.t = g.x;
        r.w = g.w;
        auto lagrange = [&](int j, double t) {
            double v = 1;
            for (int m = 0; m < kPanel; ++m)
                if (m != j) v *= (t - r.t[m]) / (r.t[j] - r.t[m]);
            return v;
        };
        r.S.assign(kPanel, std::vector<double>(kPanel, 0.0));
        for (int k = 0; k < kPanel; ++k) {
            double hi = r.t[k], half = 0.5 * (hi + 1);
            for (int q = 0; q < kPanel; ++q) {
                double tq = -1 + half * (g.x[q] + 1);
                for (int j = 0; j < kPanel; ++j) r.S[k][j] += half * g.w[q] * lagrange(j, tq);
            }
        }
        return r;
    }();
    return rule;
}

cplx numerator_N(const Fields& F, cplx lam) { return F.A * F.S2 - 2.0 * lam * F.A1 - F.A1 * F.S1; }

struct Node {
    cplx x, dxds, r, H, Hs;  // Hs = script H
    cplx dz;                 // dz/ds
};

struct Discretized {
    std::vector<Node> nodes;          // kPanel per panel
    std::vector<cplx> z_start;        // z at each panel start
    std::vector<cplx> z_node;         // z at nodes
    cplx z_end;
    WkbPoint end;
};

Discretized discretize(const Potential& pot, cplx lam, const WkbPoint& base, const std::vector<cplx>& route,
                       int total_nodes) {
    if (route.size() < 2) throw Error(Errc::InvalidInput, "route needs two points");
    if (std::abs(route[0] - base.x) > 1e-14 * (1 + std::abs(base.x)))
        throw Error(Errc::InvalidInput, "route must start at the base point");
    const PanelRule& R = panel_rule();
    double total = 0;
    for (size_t i = 0; i + 1 < route.size(); ++i) total += std::abs(route[i + 1] - route[i]);
    int panels = std::max<int>(static_cast<int>(route.size()) - 1, total_nodes / kPanel);
    Discretized D;
    cplx r = base.r, H = base.H, z = base.z;
    for (size_t i = 0; i + 1 < route.size(); ++i) {
        cplx a = route[i], b = route[i + 1];
        double len = std::abs(b - a);
        if (len == 0) continue;
        int np = std::max(1, static_cast<int>(std::lround(panels * len / total)));
        for (int p = 0; p < np; ++p) {
            cplx pa = a + (b - a) * (double(p) / np), pb = a + (b - a) * (double(p + 1) / np);
            cplx half = 0.5 * (pb - pa), mid = 0.5 * (pa + pb);
            D.z_start.push_back(z);
            size_t first = D.nodes.size();
            for (int k = 0; k < kPanel; ++k) {
                Node n;
                n.x = mid + R.t[k] * half;
                n.dxds = half;
                r = sqrt_near(-pot.V0(n.x, lam), r);
                H = sqrt_near(-I * pot.g_minus(n.x, lam) / r, H);
                n.r = r;
                n.H = H;
                n.Hs = script_H(pot, n.x, lam, r);
                n.dz = I * r * half;
                D.nodes.push_back(n);
            }
            for (int k = 0; k < kPanel; ++k) {
                cplx acc = 0;
                for (int j = 0; j < kPanel; ++j) acc += R.S[k][j] * D.nodes[first + j].dz;
                D.z_node.push_back(z + acc);
            }
            cplx full = 0;
            for (int j = 0; j < kPanel; ++j) full += R.w[j] * D.nodes[first + j].dz;
            z += full;
        }
    }
    D.z_end = z;
    cplx xe = route.back();
    cplx re = sqrt_near(-pot.V0(xe, lam), r);
    D.end = {xe, z, re, sqrt_near(-I * pot.g_minus(xe, lam) / re, H), base.alpha, base.sheet};
    return D;
}

// One application of I_{+-} (sign != 0) or J (sign == 0) to values f at the
// nodes; returns the values at the nodes and at the route end.
std::pair<std::vector<cplx>, cplx> apply_operator(const Discretized& D, const std::vector<cplx>& f, int sign,
                                                  double eps) {
    const PanelRule& R = panel_rule();
    std::vector<cplx> out(D.nodes.size());
    cplx acc = 0;  // value at the current panel start
    size_t panels = D.z_start.size();
    for (size_t p = 0; p < panels; ++p) {
        size_t first = p * kPanel;
        cplx za = D.z_start[p];
        cplx zb = p + 1 < panels ? D.z_start[p + 1] : D.z_end;
        cplx h[kPanel];
        for (int j = 0; j < kPanel; ++j) {
            const Node& n = D.nodes[first + j];
            h[j] = n.Hs * f[first + j] * n.dz;
            if (sign != 0) h[j] *= std::exp(2.0 * sign * (D.z_node[first + j] - za) / eps);
        }
        for (int k = 0; k < kPanel; ++k) {
            cplx s = acc;
            for (int j = 0; j < kPanel; ++j) s += R.S[k][j] * h[j];
            if (sign != 0) s *= std::exp(-2.0 * sign * (D.z_node[first + k] - za) / eps);
            out[first + k] = s;
        }
        cplx s = acc;
        for (int j = 0; j < kPanel; ++j) s += R.w[j] * h[j];
        if (sign != 0) s *= std::exp(-2.0 * sign * (zb - za) / eps);
        acc = s;
    }
    return {out, acc};
}

struct VComplexRhs {
    const Potential& pot;
    cplx lam, a, d;  // x = a + d s
    double eps;
    void operator()(const Vec2& y, Vec2& dy, double s) const {
        cplx x = a + d * s;
        cplx k = I / eps * d;
        dy[0] = k * pot.g_plus(x, lam) * y[1];
        dy[1] = -k * pot.g_minus(x, lam) * y[0];
    }
};

cplx det(const Vec2& a, const Vec2& b) { return a[0] * b[1] - a[1] * b[0]; }

double norm2(const Vec2& a) { return std::sqrt(std::norm(a[0]) + std::norm(a[1])); }

}  // namespace

cplx script_H(const Potential& pot, cplx x, cplx lam, cplx r) {
    cplx f = -pot.V0(x, lam);
    if (std::abs(f) < 1e-12) throw Error(Errc::TurningPointSingularity, "script H at a turning point");
    Fields F = pot.fields(x);
    return numerator_N(F, lam) / (4.0 * f * r);
}

WkbPoint continue_point(const Potential& pot, cplx lam, const WkbPoint& from, const std::vector<cplx>& route) {
    Discretized D = discretize(pot, lam, from, route, std::max<int>(400, 8 * (static_cast<int>(route.size()) - 1)));
    return D.end;
}

WkbSymbol wkb_symbols(const Potential& pot, cplx lam, const WkbPoint& base, const std::vector<cplx>& route,
                      double eps, int sign, int N, int nodes) {
    if (N < 1 || N > 12) throw Error(Errc::InvalidInput, "symbol truncation N must lie in [1, 12]");
    if (sign != 1 && sign != -1) throw Error(Errc::InvalidInput, "sign must be +1 or -1");
    Discretized D = discretize(pot, lam, base, route, nodes);
    WkbSymbol out;
    out.z0 = base.z;
    out.z = D.z_end;
    out.eps = eps;
    out.sign = sign;
    out.end = D.end;
    std::vector<cplx> even(D.nodes.size(), 1.0);
    out.w_even = 1.0;
    out.w_odd = 0.0;
    out.terms.push_back(1.0);
    for (int n = 0; n < N; ++n) {
        auto [odd_nodes, odd_end] = apply_operator(D, even, sign, eps);
        out.w_odd += odd_end;
        out.terms.push_back(std::abs(odd_end));
        out.N = n + 1;
        if (n + 1 == N) break;
        auto [even_nodes, even_end] = apply_operator(D, odd_nodes, 0, eps);
        out.w_even += even_end;
        out.terms.push_back(std::abs(even_end));
        even = std::move(even_nodes);
        double scale = std::max(std::abs(out.w_even), std::abs(out.w_odd));
        if (std::abs(odd_end) < 1e-12 * scale && std::abs(even_end) < 1e-12 * scale) break;
    }
    if (!std::isfinite(std::abs(out.w_even)) || !std::isfinite(std::abs(out.w_odd)))
        throw Error(Errc::QuadratureNonconvergent, "symbol recursion overflowed");
    return out;
}

Vec2 wkb_vector_v(const WkbPoint& p, double eps, int sign, cplx w_even, cplx w_odd) {
    // P_+ swaps the symbol components: v = e^{+-z/eps} [[1/H, 1/H], [iH, -iH]] (swap) w
    cplx a = sign > 0 ? w_odd : w_even, b = sign > 0 ? w_even : w_odd;
    cplx e = std::exp(double(sign) * p.z / eps);
    return {e * (a + b) / p.H, e * I * p.H * (a - b)};
}

Vec2 v_to_u_complex(const Potential& pot, cplx x, double eps, const Vec2& v) {
    cplx e = std::exp(I * pot.S(x) / (2 * eps));
    return {e * (v[0] + v[1]), (v[1] - v[0]) / e};
}

WkbSolution wkb_solution(const Potential& pot, cplx lam, double eps, int sign, const WkbPoint& base,
                         const std::vector<cplx>& route, int N) {
    WkbSolution s;
    s.lambda = lam;
    s.eps = eps;
    s.sign = sign;
    s.base = base;
    s.symbol = wkb_symbols(pot, lam, base, route, eps, sign, N);
    s.at = s.symbol.end;
    s.x = s.at.x;
    s.v = wkb_vector_v(s.at, eps, sign, s.symbol.w_even, s.symbol.w_odd);
    s.u = v_to_u_complex(pot, s.x, eps, s.v);
    return s;
}

cplx wronskian_pair(const WkbSolution& a, const WkbSolution& b) {
    if (a.base.alpha != b.base.alpha || a.base.sheet != b.base.sheet)
        throw Error(Errc::BranchMismatch, "solutions use different phase bases or sheets");
    if (std::abs(a.x - b.x) > 1e-12 * (1 + std::abs(a.x)))
        throw Error(Errc::InvalidInput, "Wronskian needs a common evaluation point");
    return det(a.u, b.u);
}

Vec2 propagate_v_complex(const Potential& pot, cplx lam, double eps, const std::vector<cplx>& route, Vec2 v,
                         double tol) {
    using Stepper = ode::runge_kutta_fehlberg78<Vec2>;
    for (size_t i = 0; i + 1 < route.size(); ++i) {
        cplx a = route[i], d = route[i + 1] - a;
        double len = std::abs(d);
        if (len == 0) continue;
        VComplexRhs rhs{pot, lam, a, d, eps};
        auto ctrl = ode::make_controlled(tol, tol, Stepper());
        double hmax = 0.25 * eps / len, s = 0, h = hmax;
        while (1 - s > 1e-15) {
            if (s + h > 1) h = 1 - s;
            if (ctrl.try_step(rhs, v, s, h) == ode::fail) {
                if (h < 1e-14) throw Error(Errc::StepUnderflow, "complex-path integration step underflow");
                continue;
            }
            h = std::min(h, hmax);
        }
    }
    return v;
}

std::vector<cplx> arc_route(cplx alpha, cplx from, cplx to, int pieces) {
    double r0 = std::abs(from - alpha), r1 = std::abs(to - alpha);
    double a0 = std::arg(from - alpha);
    double da = std::arg((to - alpha) / (from - alpha));
    std::vector<cplx> out;
    for (int k = 0; k <= pieces; ++k) {
        double s = double(k) / pieces;
        out.push_back(alpha + std::polar(r0 + (r1 - r0) * s, a0 + da * s));
    }
    out.front() = from;
    out.back() = to;
    return out;
}

ConnectionTriple connection_triple(const Potential& pot, cplx lam, cplx alpha, double eps, std::array<double, 3> dist,
                                   int l0_index, bool anticlockwise) {
    ConnectionTriple T;
    T.alpha = alpha;
    T.lambda = lam;
    T.eps = eps;
    T.g_minus_zero = std::abs(pot.g_minus(alpha, lam)) < std::abs(pot.g_plus(alpha, lam));
    cplx f0 = pot.V0_x(alpha, lam);
    cplx rho = std::sqrt(-f0);  // sqrt(-V0) ~ rho (x - alpha)^{1/2}
    // Stokes rays: Re[i rho e^{3i theta/2}] = 0
    double th[3];
    for (int m = 0; m < 3; ++m) {
        double t = (pi / 2 + m * pi - std::arg(I * rho)) / 1.5;
        th[m] = std::fmod(std::fmod(t, 2 * pi) + 2 * pi, 2 * pi);
    }
    std::sort(th, th + 3);
    if (!anticlockwise) std::reverse(th, th + 3);
    for (int m = 0; m < 3; ++m) T.stokes_angle[m] = th[(m + l0_index) % 3];
    double cut = T.stokes_angle[1], o = anticlockwise ? 1.0 : -1.0;
    double phi[3] = {cut + o * pi / 3, cut + o * pi, cut + o * 5 * pi / 3};  // bisectors of omega_0, omega_1, omega_2
    // branch of rho: Re z increases from x_0 towards alpha, so Re z(x_0) < 0
    if ((I * rho * std::polar(1.0, 1.5 * phi[0])).real() > 0) rho = -rho;
    cplx kH;  // H ~ kH (x - alpha)^{+-1/4}
    if (T.g_minus_zero) {
        Fields F = pot.fields(alpha);
        kH = std::sqrt(-I * (0.5 * F.S2 - I * F.A1) / rho);
    } else {
        kH = std::sqrt(-I * pot.g_minus(alpha, lam) / rho);
    }
    double q = T.g_minus_zero ? 0.25 : -0.25;
    for (int j = 0; j < 3; ++j) {
        double d = dist[j];
        cplx u = std::polar(1.0, phi[j]);
        cplx xj = alpha + d * u;
        PathIntegral pi_ = integrate_path(pot, lam, ActionPath{{alpha, xj}, true, false},
                                          rho * std::sqrt(d) * std::polar(1.0, 0.5 * phi[j]), 1, 1e-13);
        // H continued outward along the ray from its local model
        const int K = 400;
        double t0 = 1e-4 * d;
        cplx r = rho * std::sqrt(t0) * std::polar(1.0, 0.5 * phi[j]);
        cplx H = kH * std::pow(t0, q) * std::polar(1.0, q * phi[j]);
        for (int k = 0; k <= K; ++k) {
            cplx t = alpha + (t0 + (d - t0) * k / K) * u;
            r = sqrt_near(-pot.V0(t, lam), r);
            H = sqrt_near(-I * pot.g_minus(t, lam) / r, H);
        }
        if (std::abs(r - pi_.root_end) > 1e-8 * std::abs(r))
            throw Error(Errc::BranchMismatch, "root continuation disagrees with the action integral");
        T.base[j] = {xj, I * pi_.value, r, H, alpha, 0};
    }
    if (!(T.base[0].z.real() < 0 && T.base[1].z.real() > 0 && T.base[2].z.real() < 0))
        throw Error(Errc::BranchMismatch, "base points are not in the expected sectors");
    const int sgn[3] = {1, -1, 1};
    Vec2 v0[3];
    for (int j = 0; j < 3; ++j) v0[j] = wkb_vector_v(T.base[j], eps, sgn[j], 1.0, 0.0);
    // all three to alpha, then along a short segment into omega_0 for the spread check
    Vec2 va[3];
    for (int j = 0; j < 3; ++j) va[j] = propagate_v_complex(pot, lam, eps, {T.base[j].x, alpha}, v0[j]);
    T.W01 = det(va[0], va[1]);
    T.W12 = det(va[1], va[2]);
    T.W20 = det(va[2], va[0]);
    T.target01 = 2.0 * I;
    T.target12 = -2.0 * I;
    T.target20 = T.g_minus_zero ? 2.0 : -2.0;
    T.deviation = std::max({std::abs(T.W01 - T.target01), std::abs(T.W12 - T.target12), std::abs(T.W20 - T.target20)});
    {
        Vec2 id;
        double m = 0;
        for (int c = 0; c < 2; ++c) id[c] = T.W12 * va[0][c] + T.W20 * va[1][c] + T.W01 * va[2][c];
        for (int j = 0; j < 3; ++j) m = std::max(m, norm2(va[j]) * std::max({std::abs(T.W01), std::abs(T.W12), std::abs(T.W20)}));
        T.identity_residual = norm2(id) / m;
    }
    {
        cplx step = 0.1 * dist[0] * std::polar(1.0, phi[0]) / 4.0;
        Vec2 vs[3] = {va[0], va[1], va[2]};
        double spread = 0;
        for (int k = 1; k <= 4; ++k) {
            cplx a = alpha + double(k - 1) * step, b = alpha + double(k) * step;
            for (int j = 0; j < 3; ++j) vs[j] = propagate_v_complex(pot, lam, eps, {a, b}, vs[j]);
            spread = std::max({spread, std::abs(det(vs[0], vs[1]) - T.W01) / std::abs(T.W01),
                               std::abs(det(vs[1], vs[2]) - T.W12) / std::abs(T.W12),
                               std::abs(det(vs[2], vs[0]) - T.W20) / std::abs(T.W20)});
        }
        T.wronskian_spread = spread;
    }
    T.w_even_01 = wkb_symbols(pot, lam, T.base[0], arc_route(alpha, T.base[0].x, T.base[1].x), eps, 1).w_even;
    T.w_even_21 = wkb_symbols(pot, lam, T.base[2], arc_route(alpha, T.base[2].x, T.base[1].x), eps, 1).w_even;
    return T;
}

}  // namespace zs
