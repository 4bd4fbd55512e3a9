// SPDX-License-Identifier: MIT
#include "zs/quantize.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

namespace zs {

const char* regime_name(Regime r) {
    switch (r) {
        case Regime::GenericArc: return "generic";
        case Regime::Bifurcation: return "bifurcation";
        case Regime::NearZero: return "near-zero";
    }
    return "?";
}

DeltaIndex delta_index(GClass a, GClass b) { return {a, b, a == b ? -1 : 1}; }

namespace {

void check_eps(double eps) {
    if (!(eps > 0 && eps <= 0.5)) throw Error(Errc::InvalidInput, "eps must lie in (0, 0.5]");
}

struct Solved {
    EigenvalueRecord rec;
    ActionTracker tracker;
};

// Newton on I_pair(lam) = target, tracker moved along.
bool newton_action(ActionTracker& t, ArcPair pair, cplx target, double tol, int max_it) {
    for (int it = 0; it < max_it; ++it) {
        cplx d = t.derivatives().get(pair);
        cplx step = (t.I(pair) - target) / d;
        if (std::abs(step) < tol) return true;
        if (std::abs(step) > 0.05) step *= 0.05 / std::abs(step);
        t.move_to(t.lambda() - step, 2e-3);
    }
    return false;
}

std::vector<Solved> solve_on_arc(const SpectralArc& arc, const Potential& pot, double eps, const BSOptions& opt) {
    check_eps(eps);
    const auto& lam = arc.lambda;
    if (lam.size() < 2) throw Error(Errc::InvalidInput, "arc has fewer than two nodes");
    double excl = opt.exclusion < 0 ? 3 * eps * std::log(1 / eps) : opt.exclusion;
    cplx center = lam.front();
    auto eligible = [&](size_t k) {
        double d = std::abs(lam[k] - center);
        return d >= excl && d <= opt.max_distance;
    };

    double s = arc.action[lam.size() / 2].imag() >= 0 ? 1.0 : -1.0;
    // monotone |Im I| over the eligible nodes
    int dir = 0;
    long prev = -1;
    for (size_t k = 0; k < lam.size(); ++k) {
        if (!eligible(k)) continue;
        if (prev >= 0) {
            double d = s * (arc.action[k].imag() - arc.action[prev].imag());
            int sd = d > 0 ? 1 : d < 0 ? -1 : 0;
            if (sd == 0 || (dir != 0 && sd != dir))
                throw Error(Errc::NonMonotoneAction, std::string("Im I not monotone on ") + pair_name(arc.pair));
            dir = sd;
        }
        prev = static_cast<long>(k);
    }

    std::vector<Solved> out;
    ActionTracker walker = tracker_at(pot, lam.front());
    if (std::abs(walker.I(arc.pair) - arc.action.front()) > 1e-6 * (1 + std::abs(arc.action.front())))
        throw Error(Errc::BranchMismatch, "tracker and arc disagree at the first node");

    for (size_t k = 0; k + 1 < lam.size(); ++k) {
        if (k > 0) walker.move_to(lam[k], 2e-3);
        if (!eligible(k) || !eligible(k + 1)) continue;
        double m0 = s * arc.action[k].imag(), m1 = s * arc.action[k + 1].imag();
        double lo = std::min(m0, m1), hi = std::max(m0, m1);
        int n0 = static_cast<int>(std::ceil(lo / (pi * eps) - 0.5));
        for (int n = std::max(n0, 0);; ++n) {
            double tn = (n + 0.5) * pi * eps;
            if (tn >= hi) break;
            if (tn < lo) continue;
            double f = (tn - m0) / (m1 - m0);
            ActionTracker t = walker;
            t.move_to(lam[k] + f * (lam[k + 1] - lam[k]), 2e-3);
            cplx target = I * s * tn;
            if (!newton_action(t, arc.pair, target, opt.newton_tol, opt.max_newton))
                throw Error(Errc::NewtonDivergence, std::string("BS root n=") + std::to_string(n));
            EigenvalueRecord r;
            r.lambda = t.lambda();
            r.n = n;
            r.regime = Regime::GenericArc;
            r.pair = arc.pair;
            r.eps = eps;
            r.action = t.I(arc.pair);
            r.residual = std::abs(-std::exp(2.0 * r.action / eps) - 1.0);
            out.push_back({r, std::move(t)});
        }
    }
    std::sort(out.begin(), out.end(), [](const Solved& a, const Solved& b) { return a.rec.n < b.rec.n; });
    return out;
}

}  // namespace

std::vector<EigenvalueRecord> bs_eigenvalues(const SpectralArc& arc, const Potential& pot, double eps,
                                             const BSOptions& opt) {
    std::vector<EigenvalueRecord> out;
    for (auto& s : solve_on_arc(arc, pot, eps, opt)) out.push_back(s.rec);
    return out;
}

cplx qc3_defect(const ActionTracker& t, double eps) {
    return -std::exp(2.0 * t.I(ArcPair::P16) / eps) - std::exp(2.0 * t.I(ArcPair::P26) / eps) - 1.0;
}

BifurcationResult bifurcation_eigenvalues(const Potential& pot, const ArcSet& arcs, double eps,
                                          const BifurcationOptions& opt) {
    check_eps(eps);
    BifurcationResult res;
    res.center = arcs.bif.lambda;
    res.radius = opt.radius < 0 ? 5 * eps : opt.radius;
    res.exclusion = opt.c_prime * eps * std::log(1 / eps);
    if (res.radius < res.exclusion)
        throw Error(Errc::InvalidInput, "window radius below the exclusion radius");

    auto polish = [&](ActionTracker t, EigenvalueRecord seed, const std::string& tag) {
        bool ok = false;
        try {
            for (int it = 0; it < opt.max_newton; ++it) {
                cplx e16 = std::exp(2.0 * t.I(ArcPair::P16) / eps);
                cplx e26 = std::exp(2.0 * t.I(ArcPair::P26) / eps);
                cplx F = -e16 - e26 - 1.0;
                ArcActions d = t.derivatives();
                cplx dF = -(2.0 / eps) * (d.I16 * e16 + d.I26 * e26);
                cplx step = F / dF;
                if (std::abs(step) < opt.newton_tol) {
                    ok = true;
                    break;
                }
                if (std::abs(step) > 0.2 * eps) step *= 0.2 * eps / std::abs(step);
                cplx next = t.lambda() - step;
                if (std::abs(next - res.center) > 1.5 * res.radius || next.imag() <= opt.min_im) break;
                t.move_to(next, 2e-3);
            }
        } catch (const Error& e) {
            res.dropped.push_back(tag + ": " + e.what());
            return;
        }
        if (!ok) {
            res.dropped.push_back(tag + ": NewtonDivergence");
            return;
        }
        EigenvalueRecord r = seed;
        r.lambda = t.lambda();
        r.regime = Regime::Bifurcation;
        r.action = t.I(ArcPair::P16);
        r.residual = std::abs(qc3_defect(t, eps));
        if (std::abs(r.lambda - res.center) > res.radius) return;
        for (const auto& q : res.roots)
            if (std::abs(q.lambda - r.lambda) < 1e-8) return;
        res.roots.push_back(r);
    };

    BSOptions bo;
    bo.exclusion = 0;
    bo.max_distance = res.radius;
    for (ArcPair p : {ArcPair::P12, ArcPair::P16, ArcPair::P26}) {
        for (auto& s : solve_on_arc(arcs.get(p), pot, eps, bo)) {
            res.seeds.push_back(s.rec);
            polish(std::move(s.tracker), s.rec, std::string(pair_name(p)) + " n=" + std::to_string(s.rec.n));
        }
    }

    // Grid seeds: rows reached vertically from lam_x, then walked outwards.
    if (opt.grid_step > 0) {
        double h = opt.grid_step * eps;
        int nr = static_cast<int>(std::floor(res.radius / h));
        ActionTracker base = tracker_at(pot, res.center);
        for (int i = -nr; i <= nr; ++i) {
            double im = res.center.imag() + i * h;
            if (im <= opt.min_im) continue;
            ActionTracker row = base;
            try {
                row.move_to(cplx(res.center.real(), im), 2e-3);
            } catch (const Error& e) {
                res.dropped.push_back("grid row: " + std::string(e.what()));
                continue;
            }
            for (int side : {1, -1}) {
                ActionTracker w = row;
                for (int j = side > 0 ? 0 : 1; j <= nr; ++j) {
                    cplx lam(res.center.real() + side * j * h, im);
                    if (std::abs(lam - res.center) > res.radius) break;
                    try {
                        w.move_to(lam, 2e-3);
                    } catch (const Error& e) {
                        res.dropped.push_back("grid walk: " + std::string(e.what()));
                        break;
                    }
                    EigenvalueRecord seed;
                    seed.eps = eps;
                    seed.pair = ArcPair::P12;
                    seed.n = -1;
                    seed.lambda = lam;
                    res.seeds.push_back(seed);
                    polish(w, seed, "grid");
                }
            }
        }
    }
    std::sort(res.roots.begin(), res.roots.end(), [](const EigenvalueRecord& a, const EigenvalueRecord& b) {
        return a.lambda.imag() < b.lambda.imag() ||
               (a.lambda.imag() == b.lambda.imag() && a.lambda.real() < b.lambda.real());
    });
    return res;
}

cplx near_zero_xi(const ActionTracker& t) {
    const auto& tps = t.turning_points();
    cplx xi = xi_c(t.potential(), tps.x(2), t.lambda(), tps.x(1), {0.5 * (tps.x(6) + tps.x(7))});
    // -e^{2 xi/eps} = 1 is even in xi; fix the sheet with Im xi >= 0
    return xi.imag() >= 0 ? xi : -xi;
}

std::vector<EigenvalueRecord> near_zero_eigenvalues(const Potential& pot, const ArcSet& arcs, double eps,
                                                    const NearZeroRegion& region) {
    check_eps(eps);
    double hi = region.im_hi < 0 ? arcs.bif.lambda.imag() - eps * std::log(1 / eps) : region.im_hi;
    std::vector<EigenvalueRecord> out;
    if (hi <= region.im_lo) return out;

    auto xi_at = [](const ActionTracker& t, cplx lam) {
        ActionTracker u = t;
        u.move_to(lam, 2e-3);
        return near_zero_xi(u);
    };

    ActionTracker walker = tracker_at(pot, cplx(0, hi));
    cplx xi0 = near_zero_xi(walker);
    int nsteps = std::max(1, static_cast<int>(std::ceil((hi - region.im_lo) / region.step)));
    for (int k = 0; k < nsteps; ++k) {
        double mu1 = hi - (k + 1) * (hi - region.im_lo) / nsteps;
        ActionTracker next = walker;
        next.move_to(cplx(0, mu1), 2e-3);
        cplx xi1 = near_zero_xi(next);
        double m0 = xi0.imag(), m1 = xi1.imag();
        double lo = std::min(m0, m1), up = std::max(m0, m1);
        int n0 = std::max(0, static_cast<int>(std::ceil(lo / (pi * eps) - 0.5)));
        for (int n = n0;; ++n) {
            double tn = (n + 0.5) * pi * eps;
            if (tn >= up) break;
            if (tn < lo) continue;
            double f = (tn - m0) / (m1 - m0);
            ActionTracker t = walker;
            t.move_to(walker.lambda() + f * (next.lambda() - walker.lambda()), 2e-3);
            cplx target = I * tn;
            bool ok = false;
            for (int it = 0; it < 30; ++it) {
                cplx lam = t.lambda();
                double h = 1e-5;
                cplx d = (xi_at(t, lam + h) - xi_at(t, lam - h)) / (4 * h) +
                         (xi_at(t, lam + I * h) - xi_at(t, lam - I * h)) / (4.0 * I * h);
                cplx step = (near_zero_xi(t) - target) / d;
                if (std::abs(step) < 1e-13) {
                    ok = true;
                    break;
                }
                t.move_to(lam - step, 2e-3);
            }
            if (!ok) throw Error(Errc::NewtonDivergence, "near-zero root n=" + std::to_string(n));
            if (std::abs(t.lambda().real()) > region.re_half) continue;
            EigenvalueRecord r;
            r.lambda = t.lambda();
            r.n = n;
            r.regime = Regime::NearZero;
            r.pair = ArcPair::P12;
            r.eps = eps;
            r.action = near_zero_xi(t);
            r.residual = std::abs(-std::exp(2.0 * r.action / eps) - 1.0);
            out.push_back(r);
        }
        walker = std::move(next);
        xi0 = xi1;
    }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.n < b.n; });
    return out;
}

void norming_signs(std::vector<EigenvalueRecord>& records, const NormingOracle& oracle) {
    if (records.empty()) return;
    const auto& mid = records[records.size() / 2];
    int g = 1;
    bool verified = false;
    if (oracle) {
        try {
            if (auto b = oracle(mid.lambda)) {
                int parity = mid.n % 2 == 0 ? 1 : -1;
                g = (b->real() >= 0 ? 1 : -1) * parity;
                verified = true;
            }
        } catch (const Error&) {
        }
    }
    for (auto& r : records) {
        r.norming_sign = g * (r.n % 2 == 0 ? 1 : -1);
        r.norming_verified = verified;
    }
}

}  // namespace zs
