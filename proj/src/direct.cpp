// SPDX-License-Identifier: MIT
#include "zs/direct.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <boost/numeric/odeint.hpp>

#include "zs/action.hpp"
#include "zs/geometry.hpp"
#include "zs/quadrature.hpp"

namespace zs {

namespace ode = boost::numeric::odeint;

namespace {

struct URhs {
    const Potential& pot;
    cplx lam;
    double eps;
    void operator()(const Vec2& y, Vec2& dy, double x) const {
        auto [A, S, S1] = pot.real_fields(x);
        (void)S1;
        cplx e(std::cos(S / eps), std::sin(S / eps));
        cplx w = -I * A * e;             // omega
        cplx wb = I * A * std::conj(e);  // omega^* continued off the real lambda line
        cplx k = I / eps;
        dy[0] = k * (-lam * y[0] + w * y[1]);
        dy[1] = k * (wb * y[0] + lam * y[1]);
    }
};

struct VRhs {
    const Potential& pot;
    cplx lam;
    double eps;
    void operator()(const Vec2& y, Vec2& dy, double x) const {
        auto [A, S, S1] = pot.real_fields(x);
        (void)S;
        cplx m = lam + 0.5 * S1;
        cplx gp = -(m + I * A);
        cplx gm = m - I * A;
        cplx k = I / eps;
        dy[0] = k * gp * y[1];
        dy[1] = -k * gm * y[0];
    }
};

// w'' = (-f/eps^2 + g) w, state (w, w').
struct ScalarRhs {
    const Potential& pot;
    cplx lam;
    double eps;
    void operator()(const Vec2& y, Vec2& dy, double x) const {
        Fields F = pot.fields(cplx(x, 0.0));
        cplx B = lam + 0.5 * F.S1 + I * F.A;
        cplx B1 = 0.5 * F.S2 + I * F.A1;
        cplx B2 = 0.5 * F.S3 + I * F.A2;
        cplx f = F.A * F.A + (lam + 0.5 * F.S1) * (lam + 0.5 * F.S1);
        cplx r1 = B1 / B;
        cplx g = 0.75 * r1 * r1 - 0.5 * B2 / B;
        dy[0] = y[1];
        dy[1] = (-f / (eps * eps) + g) * y[0];
    }
};

template <class Rhs>
Propagated run(const Rhs& rhs, double x0, double x1, Vec2 y, double eps, const DirectOptions& opt, bool renorm) {
    using Stepper = ode::runge_kutta_fehlberg78<Vec2>;
    auto ctrl = ode::make_controlled(opt.tol, opt.tol, Stepper());
    Propagated out{y, 0.0, 0};
    if (x0 == x1) return out;
    double dir = x1 > x0 ? 1.0 : -1.0;
    double hmax = opt.step_frac * eps;
    double x = x0, h = dir * hmax;
    while (dir * (x1 - x) > 1e-14) {
        if (dir * (x + h - x1) > 0) h = x1 - x;
        auto res = ctrl.try_step(rhs, out.vec, x, h);
        if (res == ode::fail) {
            if (std::abs(h) < 1e-12 * std::max(1.0, std::abs(x)))
                throw Error(Errc::StepUnderflow, "step size underflow in the Zakharov-Shabat integration");
            continue;
        }
        ++out.steps;
        if (std::abs(h) > hmax) h = dir * hmax;
        if (renorm) {
            double n = std::max(std::abs(out.vec[0]), std::abs(out.vec[1]));
            if (n > 1e40 || (n < 1e-40 && n > 0)) {
                out.vec[0] /= n;
                out.vec[1] /= n;
                out.log_scale += std::log(n);
            }
        }
    }
    return out;
}

cplx det(const Vec2& a, const Vec2& b) { return a[0] * b[1] - a[1] * b[0]; }

// First-order tail corrections for the exponential decay A ~ A(L) e^{-2|x|}.
Vec2 left_init(const Potential& pot, cplx lam, double eps, double L) {
    double A = pot.real_fields(-L)[0];
    return {1.0, -A / (2.0 * eps - 2.0 * I * lam)};
}
Vec2 right_init(const Potential& pot, cplx lam, double eps, double L) {
    double A = pot.real_fields(L)[0];
    return {-A / (2.0 * eps - 2.0 * I * lam), 1.0};
}

Propagated propagate(const Potential& pot, cplx lam, double eps, double x0, double x1, Vec2 init,
                     const DirectOptions& opt) {
    if (opt.frame == Frame::U) return run(URhs{pot, lam, eps}, x0, x1, init, eps, opt, true);
    Vec2 v0 = u_to_v(pot, x0, eps, init);
    Propagated p = run(VRhs{pot, lam, eps}, x0, x1, v0, eps, opt, true);
    p.vec = v_to_u(pot, x1, eps, p.vec);
    return p;
}

void check_eps(double eps, const DirectOptions& opt) {
    if (!(eps >= 0.02 && eps <= 0.5)) throw Error(Errc::InvalidInput, "eps must lie in [0.02, 0.5]");
    if (!(opt.L >= 8)) throw Error(Errc::InvalidInput, "L must be at least 8");
}

}  // namespace

Vec2 u_to_v(const Potential& pot, double x, double eps, const Vec2& u) {
    double S = pot.real_fields(x)[1];
    cplx e(std::cos(S / (2 * eps)), -std::sin(S / (2 * eps)));  // e^{-iS/2eps}
    cplx t1 = u[0] * e, t2 = u[1] * std::conj(e);
    return {0.5 * (t1 - t2), 0.5 * (t1 + t2)};
}

Vec2 v_to_u(const Potential& pot, double x, double eps, const Vec2& v) {
    double S = pot.real_fields(x)[1];
    cplx e(std::cos(S / (2 * eps)), std::sin(S / (2 * eps)));  // e^{iS/2eps}
    return {e * (v[0] + v[1]), std::conj(e) * (v[1] - v[0])};
}

Propagated integrate_zs(const Potential& pot, cplx lam, double eps, double x0, double x1, Vec2 init,
                        const DirectOptions& opt) {
    if (opt.frame == Frame::U) return run(URhs{pot, lam, eps}, x0, x1, init, eps, opt, true);
    return run(VRhs{pot, lam, eps}, x0, x1, init, eps, opt, true);
}

Mat2 propagate_frame(const Potential& pot, cplx lam, double eps, double x0, double x1, const DirectOptions& opt) {
    Mat2 out;
    for (int c = 0; c < 2; ++c) {
        Vec2 e{c == 0 ? 1.0 : 0.0, c == 1 ? 1.0 : 0.0};
        Propagated p = opt.frame == Frame::U ? run(URhs{pot, lam, eps}, x0, x1, e, eps, opt, false)
                                             : run(VRhs{pot, lam, eps}, x0, x1, e, eps, opt, false);
        out[c] = p.vec;
    }
    return out;
}

JostPair jost_pair(const Potential& pot, cplx lam, double eps, double xm, const DirectOptions& opt) {
    check_eps(eps, opt);
    double L = opt.L;
    Propagated l = propagate(pot, lam, eps, -L, xm, left_init(pot, lam, eps, L), opt);
    Propagated r = propagate(pot, lam, eps, L, xm, right_init(pot, lam, eps, L), opt);
    JostPair j;
    j.lam = lam;
    j.eps = eps;
    j.xm = xm;
    j.left = l.vec;
    j.right = r.vec;
    j.log_left = I * lam * L / eps + l.log_scale;
    j.log_right = I * lam * L / eps + r.log_scale;
    return j;
}

Scaled scattering_a(const Potential& pot, cplx lam, double eps, const DirectOptions& opt) {
    JostPair j = jost_pair(pot, lam, eps, 0.0, opt);
    return {det(j.left, j.right), j.log_left + j.log_right};
}

Scaled reduced_a(const Potential& pot, cplx lam, double eps, const DirectOptions& opt) {
    Scaled a = scattering_a(pot, lam, eps, opt);
    a.log -= 2.0 * I * lam * opt.L / eps;
    return a;
}

SearchBox default_search_region(const Potential& pot) {
    Rect r = pot.numerical_range();
    return {r.re_lo - 0.05, r.re_hi + 0.05, 1e-3, r.im_hi + 0.05};
}

namespace {

struct Evaluator {
    const Potential& pot;
    double eps;
    const DirectOptions& opt;
    int max_evals;
    std::map<std::pair<double, double>, Scaled> cache;
    int evals = 0;

    const Scaled& operator()(cplx z) {
        auto key = std::make_pair(z.real(), z.imag());
        auto it = cache.find(key);
        if (it != cache.end()) return it->second;
        if (++evals > max_evals) throw Error(Errc::WindingAmbiguous, "evaluation budget exhausted in the box search");
        return cache.emplace(key, scattering_a(pot, z, eps, opt)).first->second;
    }
};

// Phase increment of a from z0 to z1, exact as long as each sampled
// increment stays below pi.
double phase_increment(Evaluator& ev, cplx z0, cplx z1, double step, int depth, double& min_mod_rel) {
    const Scaled& a0 = ev(z0);
    const Scaled& a1 = ev(z1);
    cplx ratio = (a1.m / a0.m) * std::exp(cplx(0.0, (a1.log - a0.log).imag()));
    double d = std::arg(ratio);
    if (std::abs(d) <= step) {
        double rel = std::abs(a1.m) / std::max(std::abs(a0.m), 1e-300) * std::exp((a1.log - a0.log).real());
        min_mod_rel = std::min(min_mod_rel, std::min(rel, 1.0 / std::max(rel, 1e-300)));
        return d;
    }
    if (depth > 40 || std::abs(z1 - z0) < 1e-12)
        throw Error(Errc::WindingAmbiguous, "phase of a(lambda) not resolved on a box edge");
    cplx zm = 0.5 * (z0 + z1);
    return phase_increment(ev, z0, zm, step, depth + 1, min_mod_rel) +
           phase_increment(ev, zm, z1, step, depth + 1, min_mod_rel);
}

double edge_phase(Evaluator& ev, cplx z0, cplx z1, double step, double h0) {
    int n = std::max(1, static_cast<int>(std::ceil(std::abs(z1 - z0) / h0)));
    double total = 0, mr = 1.0;
    for (int k = 0; k < n; ++k) {
        cplx a = z0 + (z1 - z0) * (double(k) / n);
        cplx b = z0 + (z1 - z0) * (double(k + 1) / n);
        total += phase_increment(ev, a, b, step, 0, mr);
    }
    return total;
}

int winding(Evaluator& ev, const SearchBox& b, double step, double h0) {
    cplx c0(b.re_lo, b.im_lo), c1(b.re_hi, b.im_lo), c2(b.re_hi, b.im_hi), c3(b.re_lo, b.im_hi);
    double t = edge_phase(ev, c0, c1, step, h0) + edge_phase(ev, c1, c2, step, h0) +
               edge_phase(ev, c2, c3, step, h0) + edge_phase(ev, c3, c0, step, h0);
    double n = t / (2 * pi);
    double rn = std::round(n);
    if (std::abs(n - rn) > 0.1) throw Error(Errc::WindingAmbiguous, "non-integer winding number");
    return static_cast<int>(rn);
}

// Newton step data from four samples on a circle of radius h around z.
struct NewtonData {
    cplx a, da;  // both scaled by the same factor
};

NewtonData newton_data(const Potential& pot, double eps, cplx z, double h, const DirectOptions& opt) {
    Scaled s0 = scattering_a(pot, z, eps, opt);
    std::array<Scaled, 4> s;
    const cplx rot[4] = {1.0, I, -1.0, -I};
    for (int k = 0; k < 4; ++k) s[k] = scattering_a(pot, z + h * rot[k], eps, opt);
    double ref = s0.log.real();
    for (auto& v : s) ref = std::max(ref, v.log.real());
    auto val = [&](const Scaled& v) { return v.m * std::exp(v.log - ref); };
    cplx d = 0;
    for (int k = 0; k < 4; ++k) d += val(s[k]) / rot[k];
    d /= 4.0 * h;
    return {val(s0), d};
}

}  // namespace

cplx polish_eigenvalue(const Potential& pot, double eps, cplx lam0, const DirectOptions& opt, int* iters) {
    cplx z = lam0;
    double h = 1e-3 * eps;
    int it = 0;
    double prev = INFINITY;
    for (; it < 40; ++it) {
        NewtonData nd = newton_data(pot, eps, z, h, opt);
        if (nd.da == 0.0) throw Error(Errc::NewtonDivergence, "vanishing derivative of a");
        cplx step = nd.a / nd.da;
        if (std::abs(step) > 0.1) step *= 0.1 / std::abs(step);
        z -= step;
        double as = std::abs(step);
        // converged, or stalled at the noise floor of a
        if (as < 1e-14 * std::max(1.0, std::abs(z)) || (as < 1e-10 && as > 0.5 * prev)) {
            ++it;
            break;
        }
        prev = as;
        if (std::abs(step) < 1e-6) h = std::max(1e-7 * eps, std::min(h, 10 * std::abs(step)));
    }
    if (iters) *iters = it;
    if (it >= 40) throw Error(Errc::NewtonDivergence, "Newton iteration for a(lambda) did not converge");
    return z;
}

double eigenvalue_condition(const Potential& pot, double eps, cplx lam, const DirectOptions& opt) {
    const double d = 1e-8;
    Potential p2(pot.amp() * (1 + d), pot.phase() * (1 + d), pot.family());
    NewtonData nd = newton_data(pot, eps, lam, 1e-3 * eps, opt);
    // newton_data scales by exp(ref); recover ref from the unscaled value
    Scaled a0 = scattering_a(pot, lam, eps, opt);
    Scaled a1 = scattering_a(p2, lam, eps, opt);
    cplx v0 = a0.value(), v1 = a1.value();
    cplx scale = (nd.a != 0.0) ? v0 / nd.a : 0.0;
    cplx der = nd.da * scale;
    if (scale == 0.0 || der == 0.0) return INFINITY;
    return std::abs(v1 - v0) / (std::abs(der) * d);
}

std::vector<OracleEigenvalue> direct_eigenvalues(const Potential& pot, double eps, const SearchBox& region,
                                                 const EigenSearchOptions& opt) {
    check_eps(eps, opt.ode);
    if (region.im_lo < 1e-3) throw Error(Errc::InvalidInput, "search region must stay 1e-3 above the real axis");
    Evaluator ev{pot, eps, opt.ode, opt.max_evals, {}, 0};
    double h0 = eps / 2;
    std::vector<OracleEigenvalue> out;

    struct Item {
        SearchBox b;
        int n;
    };
    std::vector<Item> stack;
    stack.push_back({region, winding(ev, region, opt.phase_step, h0)});

    auto split = [&](const Item& it) {
        const SearchBox& b = it.b;
        bool vert = (b.re_hi - b.re_lo) >= (b.im_hi - b.im_lo);
        for (double frac : {0.5, 0.37, 0.63, 0.44, 0.56}) {
            try {
                SearchBox p = b, q = b;
                if (vert) {
                    double s = b.re_lo + frac * (b.re_hi - b.re_lo);
                    p.re_hi = s;
                    q.re_lo = s;
                } else {
                    double s = b.im_lo + frac * (b.im_hi - b.im_lo);
                    p.im_hi = s;
                    q.im_lo = s;
                }
                int np = winding(ev, p, opt.phase_step, h0);
                int nq = winding(ev, q, opt.phase_step, h0);
                if (np < 0 || nq < 0 || np + nq != it.n) continue;
                if (np > 0) stack.push_back({p, np});
                if (nq > 0) stack.push_back({q, nq});
                return;
            } catch (const Error& e) {
                if (e.code() != Errc::WindingAmbiguous) throw;
            }
        }
        throw Error(Errc::WindingAmbiguous, "could not split a box without a root on its boundary");
    };

    while (!stack.empty()) {
        Item it = stack.back();
        stack.pop_back();
        if (it.n <= 0) continue;
        const SearchBox& b = it.b;
        double w = b.re_hi - b.re_lo, hgt = b.im_hi - b.im_lo;
        double size = std::max(w, hgt);
        if (it.n == 1 && size <= opt.max_box) {
            cplx c(0.5 * (b.re_lo + b.re_hi), 0.5 * (b.im_lo + b.im_hi));
            try {
                int iters = 0;
                cplx z = polish_eigenvalue(pot, eps, c, opt.ode, &iters);
                if (z.real() >= b.re_lo && z.real() <= b.re_hi && z.imag() >= b.im_lo && z.imag() <= b.im_hi) {
                    OracleEigenvalue e;
                    e.lambda = z;
                    e.certificate = b;
                    e.newton_iters = iters;
                    Scaled az = scattering_a(pot, z, eps, opt.ode);
                    Scaled ac = ev(cplx(b.re_lo, b.im_lo));
                    e.residual = std::abs(az.m) * std::exp(az.log.real() - ac.log.real()) / std::abs(ac.m);
                    out.push_back(e);
                    continue;
                }
            } catch (const Error& e) {
                if (e.code() != Errc::NewtonDivergence) throw;
            }
        }
        if (size < opt.min_box) {
            // a multiple root, or Newton failed in a tiny box: report the centre
            for (int k = 0; k < it.n; ++k) {
                OracleEigenvalue e;
                e.lambda = cplx(0.5 * (b.re_lo + b.re_hi), 0.5 * (b.im_lo + b.im_hi));
                e.certificate = b;
                out.push_back(e);
            }
            continue;
        }
        split(it);
    }
    std::sort(out.begin(), out.end(), [](const OracleEigenvalue& a, const OracleEigenvalue& b) {
        return a.lambda.imag() != b.lambda.imag() ? a.lambda.imag() < b.lambda.imag() : a.lambda.real() < b.lambda.real();
    });
    for (auto& e : out) e.condition = eigenvalue_condition(pot, eps, e.lambda, opt.ode);
    return out;
}

namespace {

// Jost solutions for real lam evaluated at x = +L (u-frame, unscaled).
struct RealJost {
    Vec2 minus_left;   // phi_-^l propagated to +L
    Vec2 minus_right;  // phi_-^r at +L
    Vec2 plus_right;   // phi_+^r at +L
};

RealJost real_jost(const Potential& pot, double lam, double eps, const DirectOptions& opt) {
    check_eps(eps, opt);
    if (lam == 0) throw Error(Errc::InvalidInput, "reflection coefficient needs lambda != 0");
    double L = opt.L;
    cplx l = lam;
    cplx el = std::exp(I * l * L / eps);  // phi_-^l(-L) = e^{i lam L/eps}(1, corr)
    Vec2 init = left_init(pot, l, eps, L);
    init[0] *= el;
    init[1] *= el;
    Propagated p = propagate(pot, l, eps, -L, L, init, opt);
    double AL = pot.real_fields(L)[0];
    cplx em = std::exp(-I * l * L / eps);
    RealJost j;
    j.minus_left = {p.vec[0] * std::exp(p.log_scale), p.vec[1] * std::exp(p.log_scale)};
    j.minus_right = {em, em * AL / (2.0 * eps + 2.0 * I * l)};
    Vec2 pr = right_init(pot, l, eps, L);
    j.plus_right = {pr[0] / em, pr[1] / em};
    return j;
}

// u -> (w, w') for the w_- reduction at real x.
Vec2 u_to_w(const Potential& pot, double x, cplx lam, double eps, const Vec2& u) {
    Fields F = pot.fields(cplx(x, 0.0));
    cplx B = lam + 0.5 * F.S1 + I * F.A;
    cplx B1 = 0.5 * F.S2 + I * F.A1;
    cplx e(std::cos(F.S.real() / (2 * eps)), std::sin(F.S.real() / (2 * eps)));
    cplx p = u[1] * e - u[0] * std::conj(e);
    cplx q = u[1] * e + u[0] * std::conj(e);
    cplx sb = std::sqrt(B);
    cplx w = p / sb;
    cplx dp = I / eps * B * q;
    cplx dw = (dp - 0.5 * B1 / B * p) / sb;
    return {w, dw};
}

cplx wr(const Vec2& a, const Vec2& b) { return a[0] * b[1] - a[1] * b[0]; }

}  // namespace

cplx reflection_frame(const Potential& pot, double lam, double eps, const DirectOptions& opt) {
    RealJost j = real_jost(pot, lam, eps, opt);
    return det(j.minus_left, j.minus_right) / det(j.plus_right, j.minus_left);
}

cplx reflection_scalar(const Potential& pot, double lam, double eps, const DirectOptions& opt) {
    check_eps(eps, opt);
    if (lam == 0) throw Error(Errc::InvalidInput, "reflection coefficient needs lambda != 0");
    double L = opt.L;
    cplx l = lam;
    Vec2 init = left_init(pot, l, eps, L);
    cplx el = std::exp(I * l * L / eps);
    init[0] *= el;
    init[1] *= el;
    Vec2 w0 = u_to_w(pot, -L, l, eps, init);
    Propagated p = run(ScalarRhs{pot, l, eps}, -L, L, w0, eps, opt, false);
    Vec2 jml = p.vec;
    double AL = pot.real_fields(L)[0];
    cplx em = std::exp(-I * l * L / eps);
    Vec2 jmr = u_to_w(pot, L, l, eps, {em, em * AL / (2.0 * eps + 2.0 * I * l)});
    Vec2 pr = right_init(pot, l, eps, L);
    Vec2 jpr = u_to_w(pot, L, l, eps, {pr[0] / em, pr[1] / em});
    return wr(jml, jmr) / wr(jpr, jml);
}

SigmaSplit sigma_norm(const Potential& pot, double lam) {
    if (lam == 0) throw Error(Errc::InvalidInput, "sigma needs lambda != 0");
    double s = lam > 0 ? 1.0 : -1.0;
    auto integrand = [&](double x) {
        auto [A, S, S1] = pot.real_fields(x);
        (void)S;
        double m = lam + 0.5 * S1;
        return s * std::sqrt(A * A + m * m) - lam;
    };
    const double X = 25.0;
    auto q = [&](double a, double b, bool absval) {
        return integrate_gk([&](double x) { double v = integrand(x); return cplx(absval ? std::abs(v) : v); }, a, b,
                            1e-14, 1e-13, 20000)
            .value.real();
    };
    SigmaSplit out;
    out.abs_left = q(-X, 0, true);
    out.abs_right = q(0, X, true);
    out.signed_left = q(-X, 0, false);
    out.signed_right = q(0, X, false);
    out.sigma = out.abs_left + out.abs_right;
    return out;
}

ReflectionSplit reflection_wkb_split(const Potential& pot, double lam, double eps, const DirectOptions& opt) {
    SigmaSplit sg = sigma_norm(pot, lam);
    cplx R = reflection_scalar(pot, lam, eps, opt);
    ReflectionSplit out;
    out.R = R;
    out.phase_factor = std::exp(2.0 * I * sg.signed_right / eps);
    out.wronskian_ratio = R / out.phase_factor;
    return out;
}

JostRatio jost_ratio(const Potential& pot, cplx lam, double eps, const std::vector<double>& xs,
                     const DirectOptions& opt) {
    if (xs.empty()) throw Error(Errc::InvalidInput, "no sample points");
    std::vector<Scaled> vals;
    for (double x : xs) {
        JostPair j = jost_pair(pot, lam, eps, x, opt);
        // least-squares ratio left = b right
        cplx num = std::conj(j.right[0]) * j.left[0] + std::conj(j.right[1]) * j.left[1];
        cplx den = std::norm(j.right[0]) + std::norm(j.right[1]);
        vals.push_back({num / den, j.log_left - j.log_right});
    }
    JostRatio out;
    out.b = vals[xs.size() / 2];
    double spread = 0;
    for (const auto& v : vals) {
        cplx rel = v.m / out.b.m * std::exp(v.log - out.b.log) - 1.0;
        spread = std::max(spread, std::abs(rel));
    }
    out.spread = spread;
    return out;
}

namespace {

// Walks a polyline continuing r = sqrt(-V0) and H = sqrt(g_-/(i r)).
void continue_r_h(const Potential& pot, cplx lam, const std::vector<cplx>& route, cplx& r, cplx& H) {
    for (size_t i = 0; i + 1 < route.size(); ++i) {
        cplx a = route[i], b = route[i + 1];
        double len = std::abs(b - a);
        double t = 0, h = std::min(0.01, len);
        while (t < len) {
            double hh = std::min(h, len - t);
            cplx x = a + (b - a) * ((t + hh) / len);
            cplx rn = sqrt_near(-pot.V0(x, lam), r);
            cplx Hn = sqrt_near(pot.g_minus(x, lam) / (I * rn), H);
            if (std::abs(std::arg(rn / r)) > 0.15 || std::abs(std::arg(Hn / H)) > 0.15) {
                h = hh * 0.5;
                if (h < 1e-10) throw Error(Errc::BranchContinuationFailure, "continuation passes a turning point");
                continue;
            }
            r = rn;
            H = Hn;
            t += hh;
            h = std::min(0.01, 2 * hh);
        }
    }
}

bool box_clear(const TurningPointSet& tps, int self, double re_lo, double re_hi, double im_lo, double im_hi) {
    for (int k = 1; k <= 8; ++k) {
        if (k == self) continue;
        for (double shift : {-pi, 0.0, pi}) {
            cplx x = tps.x(k) + cplx(0, shift);
            if (x.real() >= re_lo && x.real() <= re_hi && x.imag() >= im_lo && x.imag() <= im_hi) return false;
        }
    }
    return true;
}

}  // namespace

NormingConstant norming_constant_direct(const Potential& pot, cplx lam, double eps, const DirectOptions& opt) {
    NormingConstant out;
    out.jost = jost_ratio(pot, lam, eps, {-1, -0.5, 0, 0.5, 1}, opt);
    TurningPointSet tps = find_turning_points(pot, lam);
    cplx al = tps.x(1), be = tps.x(2);
    if (al.imag() >= 0 || be.imag() >= 0)
        throw Error(Errc::BranchMismatch, "norming normalisation expects x1, x2 below the real axis");
    auto pick_rho = [&](int self, cplx c, bool left_side, bool right_side) {
        double rho = 0.3;
        for (int k = 1; k <= 8; ++k)
            if (k != self) rho = std::min(rho, 0.45 * std::abs(tps.x(k) - c));
        while (rho > 1e-3) {
            double lo = left_side ? c.real() - rho : c.real();
            double hi = right_side ? c.real() + rho : c.real();
            if (box_clear(tps, self, lo, hi, c.imag() - rho, 0.0)) return rho;
            rho *= 0.5;
        }
        throw Error(Errc::PathObstructed, "no clear detour around the turning point");
    };
    double ra = pick_rho(1, al, true, true);
    double rb = pick_rho(2, be, false, true);
    double L = opt.L;
    cplx xL(-L, 0), xR(L, 0);
    cplx rL = sqrt_near(-pot.V0(xL, lam), -lam);
    cplx HL = std::sqrt(pot.g_minus(xL, lam) / (I * rL));
    // canonical route: below alpha, across the connection, above beta
    std::vector<cplx> route{xL, cplx(al.real() - ra, 0)};
    route.push_back(al - ra);
    for (int k = 1; k <= 16; ++k) route.push_back(al + ra * std::exp(I * (pi + pi * k / 16.0)));
    route.push_back(cplx(al.real() + ra, 0));
    route.push_back(xR);
    cplx rR = rL, HR = HL;
    continue_r_h(pot, lam, route, rR, HR);
    if (std::abs(rR + lam) > 1e-3 * (1 + std::abs(lam)))
        throw Error(Errc::BranchMismatch, "continued root at +L is not the decaying branch");
    ActionPath pa{{xL, cplx(al.real() - ra, 0), al - ra, al}, false, true};
    ActionPath pb{{xR, cplx(be.real() + rb, 0), be + rb, be}, false, true};
    cplx ia = integrate_path(pot, lam, pa, rL, 1).value;  // int_{xL}^{alpha} r
    cplx ib = integrate_path(pot, lam, pb, rR, 1).value;  // int_{xR}^{beta} r
    cplx Ca = -I * ia + I * lam * xL;
    cplx Cb = -I * ib + I * lam * xR;
    // u0^alpha -> 2 H_L^{-1} e^{Ca/eps} phi_l, u0^beta -> -2 H_R^{-1} e^{-Cb/eps} phi_r
    cplx logb = std::log(-HL / HR) - (Ca + Cb) / eps - std::log(out.jost.b.m) - out.jost.b.log;
    out.value = std::exp(logb);
    return out;
}

}  // namespace zs
