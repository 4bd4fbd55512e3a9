// SPDX-License-Identifier: MIT
#include "zs/geometry.hpp"

#include <algorithm>
#include <cmath>

namespace zs {

const char* gclass_name(GClass g) { return g == GClass::GMinusZero ? "gMinusZero" : "gPlusZero"; }

namespace {

constexpr double kCoalesce = 1e-5;

double strip_dist(cplx a, cplx b) {
    cplx d = a - b;
    double k = std::round(d.imag() / pi);
    return std::abs(d - cplx(0, k * pi));
}

bool newton_v0(const Potential& pot, cplx lam, cplx& x, int max_iter = 60) {
    for (int it = 0; it < max_iter; ++it) {
        cplx f, fp;
        try {
            f = pot.V0(x, lam);
            fp = pot.V0_x(x, lam);
        } catch (const Error&) {
            return false;
        }
        if (std::abs(fp) < 1e-300) return false;
        cplx dx = f / fp;
        // damping: shrink until the residual decreases
        double a = 1.0;
        cplx xn = x - dx;
        for (int k = 0; k < 20; ++k) {
            xn = x - a * dx;
            try {
                if (std::abs(pot.V0(xn, lam)) < std::abs(f) || std::abs(f) < 1e-14) break;
            } catch (const Error&) {
            }
            a *= 0.5;
        }
        x = xn;
        if (std::abs(x.real()) > 12) return false;
        if (std::abs(a * dx) < 1e-15 * (1 + std::abs(x))) break;
    }
    try {
        return std::abs(pot.V0(x, lam)) <= 1e-10;
    } catch (const Error&) {
        return false;
    }
}

}  // namespace

double min_separation(const std::array<TurningPoint, 8>& pts) {
    double m = 1e300;
    for (int i = 0; i < 8; ++i)
        for (int j = i + 1; j < 8; ++j) m = std::min(m, strip_dist(pts[i].x, pts[j].x));
    return m;
}

cplx polish_turning_point(const Potential& pot, cplx lam, cplx x0) {
    cplx x = x0;
    for (int it = 0; it < 30; ++it) {
        cplx dx = pot.V0(x, lam) / pot.V0_x(x, lam);
        x -= dx;
        if (std::abs(dx) < 1e-15 * (1 + std::abs(x))) break;
    }
    return reduce_strip(x);
}

std::vector<cplx> sweep_turning_points(const Potential& pot, cplx lam) {
    std::vector<cplx> roots;
    const int nre = 60, nim = 30;
    for (int i = 0; i < nre; ++i) {
        double re = -4.0 + 8.0 * (i + 0.5) / nre;
        for (int j = 0; j < nim; ++j) {
            double im = -pi / 2 + pi * (j + 0.5) / nim;
            cplx x(re, im);
            if (!newton_v0(pot, lam, x)) continue;
            x = reduce_strip(x);
            if (std::abs(x.real()) > 6) continue;
            bool dup = false;
            for (auto& r : roots)
                if (strip_dist(r, x) < 1e-6) {
                    dup = true;
                    break;
                }
            if (!dup) roots.push_back(x);
        }
    }
    std::sort(roots.begin(), roots.end(), [](cplx a, cplx b) {
        return a.real() != b.real() ? a.real() < b.real() : a.imag() < b.imag();
    });
    return roots;
}

GClass classify_zero(const Potential& pot, cplx x, cplx lam) {
    double gm = std::abs(pot.g_minus(x, lam)), gp = std::abs(pot.g_plus(x, lam));
    double lo = std::min(gm, gp), hi = std::max(gm, gp);
    if (lo > 1e-8 || hi < 1e-4)
        throw Error(Errc::AmbiguousClass, "cannot decide which factor of V0 vanishes");
    return gm < gp ? GClass::GMinusZero : GClass::GPlusZero;
}

TurningPointSet label_anchor(const Potential& pot, cplx lam) {
    auto roots = sweep_turning_points(pot, lam);
    if (roots.size() != 8)
        throw Error(Errc::RootCountMismatch, "anchor sweep found " + std::to_string(roots.size()) +
                                                 " turning points, expected 8");
    std::vector<cplx> axis, off;
    for (auto r : roots) (std::abs(r.real()) < 1e-8 ? axis : off).push_back(r);
    if (axis.size() != 4 || off.size() != 4)
        throw Error(Errc::RootCountMismatch, "anchor configuration is not 4 imaginary + 4 rectangle");
    std::sort(axis.begin(), axis.end(), [](cplx a, cplx b) { return a.imag() < b.imag(); });
    std::sort(off.begin(), off.end(), [](cplx a, cplx b) { return a.imag() > b.imag(); });
    // off[0], off[1]: upper pair; off[2], off[3]: lower pair
    auto left_right = [](cplx a, cplx b) { return a.real() < b.real() ? std::pair{a, b} : std::pair{b, a}; };
    auto [x1, x2] = left_right(off[0], off[1]);
    auto [x3, x4] = left_right(off[2], off[3]);
    TurningPointSet s;
    s.lambda = lam;
    cplx xs[8] = {x1, x2, x3, x4, axis[0], axis[1], axis[2], axis[3]};
    for (int k = 0; k < 8; ++k) {
        s.points[k].x = polish_turning_point(pot, lam, xs[k]);
        s.points[k].label = k + 1;
        s.points[k].gclass = classify_zero(pot, s.points[k].x, lam);
    }
    s.path.push_back(lam);
    return s;
}

namespace {

// One predictor-corrector step of all eight roots; returns false if the step
// is too large to keep labels unambiguous.
bool step_roots(const Potential& pot, const std::array<TurningPoint, 8>& from, cplx lam0, cplx lam1,
                std::array<TurningPoint, 8>& to) {
    double sep = min_separation(from);
    cplx dl = lam1 - lam0;
    for (int k = 0; k < 8; ++k) {
        cplx x = from[k].x;
        cplx pred;
        cplx xc;
        try {
            // dx/dlam = -V0_lam / V0_x with V0_lam = -2(lam + S'/2)
            cplx vl = -2.0 * (lam0 + 0.5 * pot.Sprime(x));
            pred = x - vl / pot.V0_x(x, lam0) * dl;
            xc = pred;
            bool conv = false;
            for (int it = 0; it < 25; ++it) {
                cplx d = pot.V0(xc, lam1) / pot.V0_x(xc, lam1);
                xc -= d;
                if (std::abs(d) < 1e-14 * (1 + std::abs(xc))) {
                    conv = true;
                    break;
                }
            }
            if (!conv) return false;
        } catch (const Error&) {
            return false;
        }
        if (std::abs(xc - x) > 0.25 * sep || std::abs(xc - pred) > 0.05 * sep) return false;
        to[k] = from[k];
        to[k].x = xc;
    }
    return true;
}

}  // namespace

TurningPointSet continue_turning_points(const Potential& pot, const TurningPointSet& from, cplx lam1,
                                        double max_step) {
    TurningPointSet cur = from;
    cplx lam0 = from.lambda;
    double total = std::abs(lam1 - lam0);
    if (total == 0) return cur;
    double t = 0, h = std::min(max_step, total);
    while (total - t > 1e-14) {
        double hh = std::min(h, total - t);
        if (total - t - hh < 1e-12) hh = total - t;
        cplx la = lam0 + (lam1 - lam0) * (t / total);
        cplx lb = lam0 + (lam1 - lam0) * ((t + hh) / total);
        std::array<TurningPoint, 8> nxt;
        if (!step_roots(pot, cur.points, la, lb, nxt)) {
            h = hh * 0.5;
            if (h < 1e-9) throw Error(Errc::StallDetected, "turning point continuation stalled");
            continue;
        }
        t += hh;
        cur.points = nxt;
        cur.lambda = lb;
        if (min_separation(cur.points) < kCoalesce)
            throw Error(Errc::CoalescenceDetected, "two turning points closer than 1e-5");
        h = std::min(max_step, 2 * hh);
    }
    cur.lambda = lam1;
    cur.path.push_back(lam1);
    for (auto& p : cur.points) p.x = reduce_strip(p.x);
    return cur;
}

TurningPointSet find_turning_points(const Potential& pot, cplx lam, cplx anchor) {
    for (auto& d : double_turning_lambdas())
        if (pot.amp() == 1.0 && pot.phase() == 1.0 && std::abs(lam - d.lambda_d) <= 1e-6)
            throw Error(Errc::CoalescenceDetected, "lambda coincides with a double turning point");
    TurningPointSet s = label_anchor(pot, anchor);
    cplx corner(lam.real(), anchor.imag());
    s = continue_turning_points(pot, s, corner);
    s = continue_turning_points(pot, s, lam);
    auto census = sweep_turning_points(pot, lam);
    if (census.size() != 8)
        throw Error(Errc::RootCountMismatch,
                    "sweep found " + std::to_string(census.size()) + " turning points, expected 8");
    for (auto& p : s.points) {
        bool found = false;
        for (auto c : census)
            if (strip_dist(c, p.x) < 1e-7) found = true;
        if (!found) throw Error(Errc::RootCountMismatch, "continued root missing from sweep");
        p.gclass = classify_zero(pot, p.x, lam);
    }
    return s;
}

std::array<DoublePointDatum, 4> double_turning_lambdas() {
    std::array<DoublePointDatum, 4> out{};
    const double r7 = std::sqrt(7.0);
    int n = 0;
    for (int sigma : {1, -1})
        for (int tau : {1, -1}) {
            cplx w = cplx(1.0, tau * r7);
            cplx lam = I * double(sigma) * std::sqrt(0.5 + w / 8.0) * (1.0 - w / 4.0);
            cplx th = w / (4.0 * I * double(sigma));
            // tanh(2x) has period i*pi/2 in x; only one of the two preimages in
            // the strip is a zero of V0 (sech changes sign between them)
            cplx xa = reduce_strip(0.5 * std::atanh(th));
            cplx xb = reduce_strip(xa + cplx(0, pi / 2));
            Potential pot;
            cplx xd = std::abs(pot.V0(xa, lam)) <= std::abs(pot.V0(xb, lam)) ? xa : xb;
            DoublePointDatum d{0, lam, xd, sigma, tau};
            if (lam.real() > 0 && lam.imag() > 0) d.quadrant = 1;
            else if (lam.real() < 0 && lam.imag() > 0) d.quadrant = 2;
            else if (lam.real() < 0) d.quadrant = 3;
            else d.quadrant = 4;
            out[n++] = d;
        }
    std::sort(out.begin(), out.end(), [](auto& a, auto& b) { return a.quadrant < b.quadrant; });
    return out;
}

}  // namespace zs
