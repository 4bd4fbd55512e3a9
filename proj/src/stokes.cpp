// SPDX-License-Identifier: MIT
#include "zs/stokes.hpp"

#include <algorithm>
#include <cmath>

#include "zs/action.hpp"

namespace zs {

const char* termination_name(Termination t) {
    switch (t) {
        case Termination::Pole: return "Pole";
        case Termination::TurningPoint: return "TurningPoint";
        case Termination::StripBoundary: return "StripBoundary";
        case Termination::WindowBoundary: return "WindowBoundary";
        case Termination::MaxLength: return "MaxLength";
    }
    return "?";
}

bool StokesDiagram::connected(int j, int k) const {
    if (j > k) std::swap(j, k);
    return std::find(connections.begin(), connections.end(), std::pair{j, k}) != connections.end();
}

namespace {

enum class Flow { Level, Gradient };

double nearest_pole_distance(const Potential& pot, cplx x) { return pot.pole_distance(x); }

cplx nearest_pole(cplx x) {
    double k = std::round((x.imag() - pi / 4) / (pi / 2));
    return cplx(0.0, pi / 4 + k * pi / 2);
}

double strip_dist(cplx a, cplx b) {
    cplx d = a - b;
    double k = std::round(d.imag() / pi);
    return std::abs(d - cplx(0, k * pi));
}

// Unit direction of the field at x given the carried root r.
cplx field(Flow f, cplx r) {
    cplx d = std::conj(r) / std::abs(r);
    return f == Flow::Level ? d : cplx(0, -1) * d;
}

StokesCurve trace_curve(const Potential& pot, const TurningPointSet& tps, int label, int branch, double theta,
                        Flow flow, const TraceOptions& opt) {
    StokesCurve cv;
    cv.origin = label;
    cv.branch = branch;
    const cplx c = tps.x(label);
    const cplx k = -pot.V0_x(c, tps.lambda);
    const cplx lam = tps.lambda;
    cplx x = c + opt.start_offset * std::polar(1.0, theta);
    cplx r = sqrt_near(-pot.V0(x, lam), std::sqrt(k) * std::sqrt(opt.start_offset) * std::polar(1.0, theta / 2));
    cplx z = (2.0 / 3.0) * I * r * (x - c);
    double sigma = std::real(field(flow, r) * std::polar(1.0, -theta)) >= 0 ? 1.0 : -1.0;
    cv.pts = {c, x};
    cv.arclength = {0.0, opt.start_offset};
    double s = opt.start_offset;
    double h = 1e-3;

    auto rhs = [&](cplx xx, cplx& rr) {
        rr = sqrt_near(-pot.V0(xx, lam), rr);
        return sigma * field(flow, rr);
    };
    auto rk4 = [&](cplx x0, cplx r0, double hh, cplx& rout) {
        cplx ra = r0;
        cplx k1 = rhs(x0, ra);
        cplx rb = ra;
        cplx k2 = rhs(x0 + 0.5 * hh * k1, rb);
        cplx rc = ra;
        cplx k3 = rhs(x0 + 0.5 * hh * k2, rc);
        cplx rd = rc;
        cplx k4 = rhs(x0 + hh * k3, rd);
        cplx x1 = x0 + hh / 6.0 * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
        rout = sqrt_near(-pot.V0(x1, lam), rd);
        return x1;
    };

    while (true) {
        double dtp = 1e300;
        for (auto& p : tps.points)
            if (p.label != label) dtp = std::min(dtp, strip_dist(p.x, x));
        double dpole = nearest_pole_distance(pot, x);
        double hmax = std::min({0.05, 0.3 * dtp, 0.3 * dpole});
        h = std::min(h, hmax);
        cplx r1, rh, r2;
        cplx xf = rk4(x, r, h, r1);
        cplx xh = rk4(x, r, 0.5 * h, rh);
        cplx x2 = rk4(xh, rh, 0.5 * h, r2);
        double err = std::abs(xf - x2);
        bool turned = std::abs(std::arg(r2 / r)) > 0.3;
        if (err > opt.tol || turned) {
            h *= turned ? 0.5 : std::max(0.2, 0.9 * std::pow(opt.tol / err, 0.2));
            if (h < 1e-13) throw Error(Errc::StallDetected, "Stokes tracer step collapsed");
            continue;
        }
        cplx rm = sqrt_near(-pot.V0(0.5 * (x + x2), lam), r);
        z += I * (r + 4.0 * rm + r2) / 6.0 * (x2 - x);
        if (flow == Flow::Level) {
            cv.max_level_residual = std::max(cv.max_level_residual, std::abs(z.real()));
            cplx zp = I * r2;
            cplx d = -z.real() * std::conj(zp) / std::norm(zp);
            x2 += d;
            r2 = sqrt_near(-pot.V0(x2, lam), r2);
            z += I * r2 * d;
        }
        s += std::abs(x2 - x);
        x = x2;
        r = r2;
        cv.pts.push_back(x);
        cv.arclength.push_back(s);
        h = std::min(2.0 * h, err > 0 ? h * std::min(2.0, 0.9 * std::pow(opt.tol / err, 0.2)) : 2.0 * h);

        for (auto& p : tps.points)
            if (p.label != label && strip_dist(p.x, x) < opt.capture_radius) {
                cv.term = Termination::TurningPoint;
                cv.end_label = p.label;
                cplx target = p.x;
                // express the endpoint in the same period copy as the curve
                target += cplx(0, pi * std::round((x - target).imag() / pi));
                cv.pts.push_back(target);
                cv.arclength.push_back(s + std::abs(target - x));
                return cv;
            }
        if (nearest_pole_distance(pot, x) < opt.pole_radius) {
            cv.term = Termination::Pole;
            cv.end_pole = nearest_pole(x);
            return cv;
        }
        if (std::abs(x.imag()) > pi / 2) {
            cv.term = Termination::StripBoundary;
            return cv;
        }
        if (std::abs(x.real()) > opt.window) {
            cv.term = Termination::WindowBoundary;
            return cv;
        }
        if (s > opt.max_length) {
            cv.term = Termination::MaxLength;
            return cv;
        }
    }
}

double seed_angle(const Potential& pot, const TurningPointSet& tps, int label, int n, bool gradient) {
    cplx k = -pot.V0_x(tps.x(label), tps.lambda);
    double shift = gradient ? pi / 2 : 0.0;
    return (2.0 / 3.0) * (n * pi + shift - std::arg(k) / 2);
}

}  // namespace

std::vector<StokesCurve> trace_stokes_lines(const Potential& pot, const TurningPointSet& tps, int label,
                                            const TraceOptions& opt) {
    if (std::abs(pot.V0_x(tps.x(label), tps.lambda)) < 1e-6)
        throw Error(Errc::InvalidInput, "Stokes tracing needs a simple turning point");
    std::vector<StokesCurve> out;
    for (int n = 0; n < 3; ++n)
        out.push_back(trace_curve(pot, tps, label, n, seed_angle(pot, tps, label, n, false), Flow::Level, opt));
    return out;
}

StokesCurve trace_gradient_line(const Potential& pot, const TurningPointSet& tps, int label, int branch,
                                const TraceOptions& opt) {
    return trace_curve(pot, tps, label, branch, seed_angle(pot, tps, label, branch, true), Flow::Gradient, opt);
}

StokesDiagram stokes_diagram(const Potential& pot, const TurningPointSet& tps, const TraceOptions& opt) {
    StokesDiagram d;
    d.lambda = tps.lambda;
    d.tps = tps;
    for (int j = 1; j <= 8; ++j) {
        auto cs = trace_stokes_lines(pot, tps, j, opt);
        for (auto& c : cs) {
            if (c.term == Termination::TurningPoint) {
                std::pair<int, int> pr{std::min(j, c.end_label), std::max(j, c.end_label)};
                if (std::find(d.connections.begin(), d.connections.end(), pr) == d.connections.end())
                    d.connections.push_back(pr);
            }
            d.curves.push_back(std::move(c));
        }
    }
    std::sort(d.connections.begin(), d.connections.end());
    return d;
}

ProgressVerdict is_progressive(const Potential& pot, const Contour& path, cplx lam,
                               const std::vector<cplx>& turning_points) {
    ProgressVerdict v;
    if (path.pts.size() < 2) return v;
    for (auto& t : turning_points)
        for (size_t i = 0; i + 1 < path.pts.size(); ++i) {
            cplx a = path.pts[i], b = path.pts[i + 1];
            double len = std::abs(b - a);
            if (len == 0) continue;
            cplx w = (t - a) / ((b - a) / len);
            double dist = (w.real() < 0) ? std::abs(t - a) : (w.real() > len ? std::abs(t - b) : std::abs(w.imag()));
            if (dist <= 1e-4) throw Error(Errc::InvalidInput, "path passes within 1e-4 of a turning point");
        }
    cplx r = large_x_root(pot, lam, path.pts[0], turning_points);
    double margin = 1e300;
    int sign = 0;
    bool mono = true;
    for (size_t i = 0; i + 1 < path.pts.size(); ++i) {
        cplx a = path.pts[i], b = path.pts[i + 1];
        double len = std::abs(b - a);
        if (len == 0) continue;
        cplx u = (b - a) / len;
        double t = 0;
        while (true) {
            cplx x = a + u * t;
            cplx rn = sqrt_near(-pot.V0(x, lam), r);
            if (std::abs(std::arg(rn / r)) > 0.5)
                throw Error(Errc::BranchDiscontinuity, "sqrt(-V0) jumps along the path");
            r = rn;
            double dre = std::real(I * r * u);
            int sg = dre > 0 ? 1 : (dre < 0 ? -1 : 0);
            if (sign == 0) sign = sg;
            if (sg != sign || sg == 0) mono = false;
            margin = std::min(margin, std::abs(dre));
            if (t >= len) break;
            double dtp = 1e300;
            for (auto& tp : turning_points) dtp = std::min(dtp, std::abs(tp - x));
            t = std::min(len, t + std::min(0.01, 0.2 * dtp));
        }
    }
    v.margin = mono ? margin : 0.0;
    v.direction = mono ? sign : 0;
    return v;
}

namespace {

int winding_number(const std::vector<cplx>& poly, cplx p) {
    double ang = 0;
    for (size_t i = 0; i < poly.size(); ++i) {
        cplx a = poly[i] - p, b = poly[(i + 1) % poly.size()] - p;
        ang += std::arg(b / a);
    }
    return int(std::lround(ang / (2 * pi)));
}

// Monotone polyline from a turning point to the real axis at Re x = side * 6,
// by breadth-first search on a grid of spacing h over the strip. A move is
// allowed when s * d Re z / ds exceeds cos(88 deg) |r| at both ends of the
// move; the branch of r is carried along as part of the search state.
std::optional<std::vector<cplx>> monotone_grid_line(const Potential& pot, const TurningPointSet& tps, int label,
                                                    int side, int s) {
    const double h = 0.01, reach = 6.0, cmin = std::cos(88.0 * pi / 180);
    const int nx = int(std::lround(2 * (reach + 0.2) / h)) + 1;
    const int ky = int(std::floor(pot.strip_half_width() / h - 1e-9));
    const int ny = 2 * ky + 1;
    auto pos = [&](int i, int j) { return cplx(-(reach + 0.2) + i * h, (j - ky) * h); };
    cplx c = tps.x(label);
    const size_t N = size_t(nx) * ny;
    std::vector<cplx> root(N, cplx(0.0));
    std::vector<char> blocked(N, 0);
    for (int i = 0; i < nx; ++i)
        for (int j = 0; j < ny; ++j) {
            cplx x = pos(i, j);
            size_t id = size_t(i) * ny + j;
            bool near = pot.pole_distance(x) < 0.05;
            for (auto& p : tps.points)
                if (std::abs(p.x - x) < 0.02) near = true;
            if (near) {
                blocked[id] = 1;
                continue;
            }
            root[id] = std::sqrt(-pot.V0(x, tps.lambda));
        }
    // state = node * 2 + (branch flipped relative to the principal root)
    std::vector<int> prev(2 * N, -2);
    std::vector<int> queue;
    auto rate = [&](cplx r, cplx u) { return s * std::real(I * r * u) / std::abs(r); };
    int ci = int(std::lround((c.real() + reach + 0.2) / h)), cj = int(std::lround(c.imag() / h)) + ky;
    for (int i = ci - 4; i <= ci + 4; ++i)
        for (int j = cj - 4; j <= cj + 4; ++j) {
            if (i < 0 || i >= nx || j < 0 || j >= ny) continue;
            size_t id = size_t(i) * ny + j;
            cplx x = pos(i, j);
            if (blocked[id] || std::abs(x - c) < 0.02 || std::abs(x - c) > 0.045) continue;
            cplx u = (x - c) / std::abs(x - c);
            for (int f = 0; f < 2; ++f) {
                cplx r = f ? -root[id] : root[id];
                if (rate(r, u) > cmin) {
                    prev[2 * id + f] = -1;
                    queue.push_back(int(2 * id + f));
                }
            }
        }
    for (size_t q = 0; q < queue.size(); ++q) {
        int st = queue[q];
        size_t id = size_t(st / 2);
        int i = int(id / ny), j = int(id % ny);
        cplx r0 = (st & 1) ? -root[id] : root[id];
        if (j == ky && (pos(i, j).real() * side >= reach)) {
            std::vector<cplx> pts;
            for (int t = st; t >= 0; t = prev[t]) pts.push_back(pos(int((t / 2) / ny), int((t / 2) % ny)));
            pts.push_back(c);
            std::reverse(pts.begin(), pts.end());
            return pts;
        }
        for (int di = -1; di <= 1; ++di)
            for (int dj = -1; dj <= 1; ++dj) {
                if (!di && !dj) continue;
                int a = i + di, b = j + dj;
                if (a < 0 || a >= nx || b < 0 || b >= ny) continue;
                size_t nb = size_t(a) * ny + b;
                if (blocked[nb]) continue;
                cplx r1 = sqrt_near(root[nb] * root[nb], r0);
                int f = std::abs(r1 - root[nb]) <= std::abs(r1 + root[nb]) ? 0 : 1;
                if (prev[2 * nb + f] != -2) continue;
                cplx u = cplx(di, dj) / std::abs(cplx(di, dj));
                if (rate(r0, u) <= cmin || rate(r1, u) <= cmin) continue;
                prev[2 * nb + f] = st;
                queue.push_back(int(2 * nb + f));
            }
    }
    return std::nullopt;
}

// Tail from turning point `label` to Re x < -6 (side = -1) or Re x > 6
// (side = +1), closed off by a diagonal to the real axis and the real axis to
// |Re x| = 12. Gradient lines are tried first, then a grid search for a monotone line.
std::optional<Contour> find_tail(const Potential& pot, const TurningPointSet& tps, int label, int side) {
    TraceOptions opt;
    opt.window = 6.0;
    opt.tol = 1e-7;
    std::vector<cplx> tp_list;
    for (auto& p : tps.points) tp_list.push_back(p.x);
    auto finish = [&](const std::vector<cplx>& raw) -> std::optional<Contour> {
        Contour c;
        c.role = side < 0 ? ContourRole::CMinus : ContourRole::CPlus;
        // thin the polyline
        size_t i0 = 1;
        while (i0 + 1 < raw.size() && std::abs(raw[i0] - raw[0]) < 1e-3) ++i0;
        c.pts.push_back(raw[i0]);
        for (size_t i = i0 + 1; i < raw.size(); ++i)
            if (std::abs(raw[i] - c.pts.back()) > 0.02 || i + 1 == raw.size()) c.pts.push_back(raw[i]);
        // merge into the real axis along a shallow diagonal; vertical drops
        // are level lines when lam is purely imaginary
        cplx e = c.pts.back();
        for (double slope : {1.0, 0.5, 0.25, 0.1}) {
            Contour t = c;
            double run = std::abs(e.imag()) / slope;
            t.pts.push_back(cplx(e.real() + side * run, 0.0));
            t.pts.push_back(cplx(side * std::max(12.0, std::abs(e.real()) + run + 2.0), 0.0));
            try {
                if (is_progressive(pot, t, tps.lambda, tp_list).progressive()) {
                    t.pts.insert(t.pts.begin(), tps.x(label));
                    return t;
                }
            } catch (const Error&) {
            }
        }
        return std::nullopt;
    };
    for (int b = 0; b < 3; ++b) {
        StokesCurve g;
        try {
            g = trace_gradient_line(pot, tps, label, b, opt);
        } catch (const Error&) {
            continue;
        }
        if (g.term != Termination::WindowBoundary || g.pts.back().real() * side <= 0) continue;
        if (auto c = finish(g.pts)) return c;
    }
    for (int s : {1, -1})
        if (auto raw = monotone_grid_line(pot, tps, label, side, s)) {
            Contour c;
            c.role = side < 0 ? ContourRole::CMinus : ContourRole::CPlus;
            c.pts.assign(raw->begin() + 1, raw->end());
            c.pts.push_back(cplx(side * 12.0, 0.0));
            try {
                if (is_progressive(pot, c, tps.lambda, tp_list).progressive()) {
                    c.pts.insert(c.pts.begin(), tps.x(label));
                    return c;
                }
            } catch (const Error&) {
            }
        }
    return std::nullopt;
}

}  // namespace

std::optional<AdmissibleContour> find_admissible_contour(const Potential& pot, const StokesDiagram& d) {
    for (auto [j, k] : d.connections) {
        // spectral arcs join zeros of g_-
        if (d.tps[j].gclass != GClass::GMinusZero || d.tps[k].gclass != GClass::GMinusZero) continue;
        int lo = d.tps.x(j).real() <= d.tps.x(k).real() ? j : k;
        int hi = lo == j ? k : j;
        const StokesCurve* link = nullptr;
        for (auto& c : d.curves)
            if (c.origin == lo && c.term == Termination::TurningPoint && c.end_label == hi) link = &c;
        bool reversed = false;
        if (!link)
            for (auto& c : d.curves)
                if (c.origin == hi && c.term == Termination::TurningPoint && c.end_label == lo) link = &c, reversed = true;
        if (!link) continue;
        auto cm = find_tail(pot, d.tps, lo, -1);
        if (!cm) continue;
        auto cp = find_tail(pot, d.tps, hi, +1);
        if (!cp) continue;
        AdmissibleContour ac;
        ac.alpha = lo;
        ac.beta = hi;
        ac.cminus = *cm;
        ac.cplus = *cp;
        ac.c0.role = ContourRole::C0;
        ac.c0.pts = link->pts;
        if (reversed) std::reverse(ac.c0.pts.begin(), ac.c0.pts.end());
        // region between C and the real axis must be free of poles
        std::vector<cplx> poly(ac.cminus.pts.rbegin(), ac.cminus.pts.rend());
        poly.insert(poly.end(), ac.c0.pts.begin(), ac.c0.pts.end());
        poly.insert(poly.end(), ac.cplus.pts.begin(), ac.cplus.pts.end());
        bool clean = true;
        for (auto p : pot.poles())
            if (winding_number(poly, p) != 0) clean = false;
        if (!clean) continue;
        return ac;
    }
    return std::nullopt;
}

std::optional<AdmissibleContour> find_admissible_contour(const Potential& pot, cplx lam) {
    TurningPointSet tps = find_turning_points(pot, lam);
    return find_admissible_contour(pot, stokes_diagram(pot, tps));
}

}  // namespace zs
