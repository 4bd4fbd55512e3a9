// SPDX-License-Identifier: MIT
#include "zs/action.hpp"

#include <cmath>
#include <cstdlib>

#include "zs/quadrature.hpp"

namespace zs {

const char* pair_name(ArcPair p) {
    switch (p) {
        case ArcPair::P12: return "12";
        case ArcPair::P16: return "16";
        case ArcPair::P26: return "26";
    }
    return "?";
}

namespace {

// -V0(c + d s^2) / s^2 with a Taylor fallback near s = 0.
cplx reduced_q(const Potential& pot, cplx lam, cplx c, cplx d, double s) {
    if (s < 1e-3) {
        cplx v1 = pot.V0_x(c, lam), v2 = pot.V0_xx(c, lam);
        return -d * (v1 + 0.5 * v2 * d * s * s);
    }
    return -pot.V0(c + d * s * s, lam) / (s * s);
}

}  // namespace

PathIntegral integrate_path(const Potential& pot, cplx lam, const ActionPath& path_in, cplx seed, int power,
                            double abstol, const std::function<cplx(cplx)>& weight) {
    ActionPath path = path_in;
    if (path.nodes.size() < 2) return {};
    if (path.nodes.size() == 2 && path.start_tp && path.end_tp) {
        cplx mid = 0.5 * (path.nodes[0] + path.nodes[1]);
        path.nodes.insert(path.nodes.begin() + 1, mid);
    }
    const size_t nseg = path.nodes.size() - 1;
    // absolute rounding of V0 is about eps times the size of its terms
    const double v0_scale = 4e-16 * (1.0 + std::norm(lam) + pot.amp() * pot.amp() + pot.phase() * pot.phase());
    PathIntegral out;
    cplx root = seed;
    for (size_t i = 0; i < nseg; ++i) {
        cplx a = path.nodes[i], b = path.nodes[i + 1];
        if (a == b) continue;
        std::function<cplx(double)> q, m;
        std::function<double(double, double)> noise;
        cplx r0;
        if (i == 0 && path.start_tp) {
            cplx d = b - a;
            q = [&, a, d](double s) { return reduced_q(pot, lam, a, d, s); };
            m = [&, a, d, power](double s) {
                cplx w = weight ? weight(a + d * s * s) : 1.0;
                return w * 2.0 * d * (power == 1 ? s * s : 1.0);
            };
            r0 = sqrt_near(q(0.0), seed);
            noise = [&](double s, double aq) { return s < 1e-3 ? 0.0 : 0.5 * v0_scale / (aq * s * s); };
        } else if (i == nseg - 1 && path.end_tp) {
            cplx d = a - b;
            q = [&, b, d](double s) { return reduced_q(pot, lam, b, d, 1.0 - s); };
            m = [&, b, d, power](double s) {
                double u = 1.0 - s;
                cplx w = weight ? weight(b + d * u * u) : 1.0;
                return w * -2.0 * d * (power == 1 ? u * u : 1.0);
            };
            r0 = sqrt_near(q(0.0), root);
            noise = [&](double s, double aq) {
                double u = 1.0 - s;
                return u < 1e-3 ? 0.0 : 0.5 * v0_scale / (aq * u * u);
            };
        } else {
            cplx d = b - a;
            q = [&, a, d](double s) { return -pot.V0(a + d * s, lam); };
            m = [&, a, d](double s) { return weight ? weight(a + d * s) * d : d; };
            r0 = (i == 0) ? sqrt_near(q(0.0), seed) : sqrt_near(q(0.0), root);
            noise = [&](double, double aq) { return 0.5 * v0_scale / aq; };
        }
        BranchResult br = integrate_sqrt_branch(q, m, power, r0, abstol, 40, 0.35, noise);
        out.value += br.value;
        out.error += br.error;
        root = br.root_end;
    }
    out.root_end = root;
    return out;
}

cplx continue_root(const Potential& pot, cplx lam, const std::vector<cplx>& route, cplx r0) {
    cplx r = r0;
    for (size_t i = 0; i + 1 < route.size(); ++i) {
        cplx a = route[i], b = route[i + 1];
        double len = std::abs(b - a);
        double t = 0, h = std::min(0.02, len);
        while (t < len) {
            double hh = std::min(h, len - t);
            cplx x = a + (b - a) * ((t + hh) / len);
            cplx rn = sqrt_near(-pot.V0(x, lam), r);
            if (std::abs(std::arg(rn / r)) > 0.2) {
                h = hh * 0.5;
                if (h < 1e-10)
                    throw Error(Errc::BranchContinuationFailure, "sqrt(-V0) continuation passes a turning point");
                continue;
            }
            r = rn;
            t += hh;
            h = std::min(0.02, 2 * hh);
        }
    }
    return r;
}

namespace {

bool is_turning_point(const Potential& pot, cplx x, cplx lam) {
    return std::abs(pot.V0(x, lam)) <= 1e-9;
}

// Straight route a -> b with square detours of half-width 2e-3 around any
// obstacle closer than 1e-3 to the segment interior. Detours pass on the
// upper side (larger Im) so the route is the same in both directions.
std::vector<cplx> detour_route(cplx a, cplx b, const std::vector<cplx>& obstacles) {
    std::vector<cplx> nodes{a};
    cplx d = b - a;
    double len = std::abs(d);
    if (len == 0) return {a, b};
    cplx u = d / len, n = I * u;
    if (n.imag() < 0 || (n.imag() == 0 && n.real() < 0)) n = -n;  // same side for either direction
    std::vector<std::pair<double, cplx>> hits;
    for (auto o : obstacles) {
        if (std::abs(o - a) < 1e-9 || std::abs(o - b) < 1e-9) continue;
        cplx w = (o - a) / u;
        if (w.real() > 0 && w.real() < len && std::abs(w.imag()) < 1e-3) hits.push_back({w.real(), o});
    }
    std::sort(hits.begin(), hits.end(), [](auto& x, auto& y) { return x.first < y.first; });
    const double r = 2e-3;
    for (auto& [_, o] : hits) {
        cplx base = a + u * ((o - a) / u).real();
        // an obstacle hugging an endpoint cannot be stepped around; the
        // continuation copes with it directly
        if (std::abs(base - a) < r || std::abs(base - b) < r) continue;
        nodes.push_back(base - r * u + r * n + (o - base));
        nodes.push_back(base + r * u + r * n + (o - base));
    }
    nodes.push_back(b);
    return nodes;
}

}  // namespace

cplx large_x_root(const Potential& pot, cplx lam, cplx p, const std::vector<cplx>& obstacles) {
    const double X = 8.0;
    cplx r0 = sqrt_near(-pot.V0(cplx(X, 0), lam), lam);
    std::vector<cplx> route{cplx(X, 0)};
    auto leg = detour_route(cplx(X, p.imag()), p, obstacles);
    route.insert(route.end(), leg.begin(), leg.end());
    return continue_root(pot, lam, route, r0);
}

ActionValue action_integral(const Potential& pot, cplx alpha, cplx beta, cplx lam) {
    ActionValue v{alpha, beta, lam, 0.0, 0.0, ""};
    if (alpha == beta) {
        v.certificate = "empty";
        return v;
    }
    std::vector<cplx> obstacles = sweep_turning_points(pot, lam);
    for (auto p : pot.poles()) obstacles.push_back(p);
    std::vector<cplx> nodes = detour_route(alpha, beta, obstacles);
    // split at half arclength; the branch there comes from large x, so the
    // reversed route sees the same sheet and z is antisymmetric
    double total = 0;
    for (size_t i = 0; i + 1 < nodes.size(); ++i) total += std::abs(nodes[i + 1] - nodes[i]);
    double acc = 0;
    size_t k = 0;
    while (acc + std::abs(nodes[k + 1] - nodes[k]) < 0.5 * total) acc += std::abs(nodes[k + 1] - nodes[k]), ++k;
    cplx mid = nodes[k] + (nodes[k + 1] - nodes[k]) * ((0.5 * total - acc) / std::abs(nodes[k + 1] - nodes[k]));
    ActionPath to_beta, to_alpha;
    to_beta.nodes = {mid};
    to_beta.nodes.insert(to_beta.nodes.end(), nodes.begin() + k + 1, nodes.end());
    to_beta.end_tp = is_turning_point(pot, beta, lam);
    to_alpha.nodes = {mid};
    for (size_t i = k + 1; i-- > 0;) to_alpha.nodes.push_back(nodes[i]);
    to_alpha.end_tp = is_turning_point(pot, alpha, lam);
    cplx seed = large_x_root(pot, lam, mid, obstacles);
    PathIntegral pb = integrate_path(pot, lam, to_beta, seed, 1);
    PathIntegral pa = integrate_path(pot, lam, to_alpha, seed, 1);
    v.value = I * (pb.value - pa.value);
    v.error = pa.error + pb.error;
    v.certificate = "straight/" + std::to_string(nodes.size() - 1) + "seg/large-x-seed-at-midpoint";
    return v;
}

namespace {

ActionPath route_for(const TurningPointSet& t, ArcPair p) {
    ActionPath path;
    path.start_tp = path.end_tp = true;
    switch (p) {
        case ArcPair::P12: path.nodes = {t.x(1), 0.5 * (t.x(6) + t.x(7)), t.x(2)}; break;
        case ArcPair::P16: path.nodes = {t.x(1), t.x(6)}; break;
        case ArcPair::P26: path.nodes = {t.x(2), t.x(6)}; break;
    }
    return path;
}

cplx principal_seed(const Potential& pot, cplx lam, const ActionPath& path) {
    cplx c = path.nodes[0], b = path.nodes.size() == 2 ? 0.5 * (path.nodes[0] + path.nodes[1]) : path.nodes[1];
    return std::sqrt(reduced_q(pot, lam, c, b - c, 0.0));
}

}  // namespace

namespace {

// Smallest distance from the other turning points to the interior of the route.
double route_clearance(const TurningPointSet& t, const ActionPath& path, int a, int b) {
    double m = 1e300;
    for (auto& p : t.points) {
        if (p.label == a || p.label == b) continue;
        for (size_t i = 0; i + 1 < path.nodes.size(); ++i) {
            cplx u = path.nodes[i], v = path.nodes[i + 1];
            double len = std::abs(v - u);
            cplx w = (p.x - u) / ((v - u) / len);
            double d = w.real() < 0 ? std::abs(p.x - u) : (w.real() > len ? std::abs(p.x - v) : std::abs(w.imag()));
            m = std::min(m, d);
        }
    }
    return m;
}

// Below this clearance the direct x1 -> x2 route is replaced by I16 - I26.
constexpr double kClearance12 = 0.05;

cplx raw_integral(const Potential& pot, const TurningPointSet& tps, ArcPair p, int power,
                  const std::function<cplx(cplx)>& weight) {
    ActionPath path = route_for(tps, p);
    return integrate_path(pot, tps.lambda, path, principal_seed(pot, tps.lambda, path), power, 1e-11, weight).value;
}

}  // namespace

bool direct_route_12(const TurningPointSet& tps) {
    return route_clearance(tps, route_for(tps, ArcPair::P12), 1, 2) >= kClearance12;
}

ArcActions raw_arc_actions(const Potential& pot, const TurningPointSet& tps) {
    ArcActions a{};
    a.I16 = I * raw_integral(pot, tps, ArcPair::P16, 1, nullptr);
    a.I26 = I * raw_integral(pot, tps, ArcPair::P26, 1, nullptr);
    a.I12 = direct_route_12(tps) ? I * raw_integral(pot, tps, ArcPair::P12, 1, nullptr)
                                 : cplx(std::nan(""), std::nan(""));
    return a;
}

ArcActions arc_inverse_root_integrals(const Potential& pot, const TurningPointSet& tps,
                                      const ArcActions& signed_actions,
                                      const std::function<cplx(cplx)>& weight) {
    ArcActions raw = raw_arc_actions(pot, tps);
    auto sheet = [&](ArcPair p) {
        cplx rv = raw.get(p), sv = signed_actions.get(p);
        return std::abs(rv - sv) <= std::abs(rv + sv) ? 1.0 : -1.0;
    };
    ArcActions d{};
    d.I16 = sheet(ArcPair::P16) * raw_integral(pot, tps, ArcPair::P16, -1, weight);
    d.I26 = sheet(ArcPair::P26) * raw_integral(pot, tps, ArcPair::P26, -1, weight);
    d.I12 = std::isnan(raw.I12.real()) ? d.I16 - d.I26
                                       : sheet(ArcPair::P12) * raw_integral(pot, tps, ArcPair::P12, -1, weight);
    return d;
}

ArcActions arc_action_derivatives(const Potential& pot, const TurningPointSet& tps, const ArcActions& signed_actions) {
    cplx lam = tps.lambda;
    auto w = [&pot, lam](cplx t) { return I * (lam + 0.5 * pot.Sprime(t)); };
    return arc_inverse_root_integrals(pot, tps, signed_actions, w);
}

ActionTracker::ActionTracker(const Potential& pot, cplx anchor) : pot_(pot), tps_(label_anchor(pot, anchor)) {
    ArcActions raw = raw_arc_actions(pot_, tps_);
    act_.I12 = raw.I12.imag() >= 0 ? raw.I12 : -raw.I12;
    act_.I16 = raw.I16.imag() >= 0 ? raw.I16 : -raw.I16;
    cplx c1 = act_.I16 - raw.I26, c2 = act_.I16 + raw.I26;
    act_.I26 = std::abs(act_.I12 - c1) <= std::abs(act_.I12 - c2) ? raw.I26 : -raw.I26;
    if (std::abs(act_.I12 - (act_.I16 - act_.I26)) > 1e-8 * (1 + std::abs(act_.I12)))
        throw Error(Errc::BranchMismatch, "anchor actions violate I12 = I16 - I26");
}

namespace {

cplx pick_sign(cplx raw, cplx pred) { return std::abs(raw - pred) <= std::abs(raw + pred) ? raw : -raw; }

bool sign_clear(cplx v, cplx pred) {
    // the chosen sign must be clearly closer than the alternative
    return std::abs(v - pred) < 0.25 * std::abs(v + pred) || std::abs(v) < 1e-12;
}

}  // namespace

bool ActionTracker::try_step(cplx lam1) {
    TurningPointSet nt;
    try {
        nt = continue_turning_points(pot_, tps_, lam1, std::abs(lam1 - tps_.lambda));
    } catch (const Error& e) {
        if (e.code() == Errc::CoalescenceDetected) throw;
        return false;
    }
    ArcActions raw = raw_arc_actions(pot_, nt);
    ArcActions pred = act_;
    if (has_prev_ && std::abs(tps_.lambda - prev_lam_) > 1e-12) {
        cplx r = (lam1 - tps_.lambda) / (tps_.lambda - prev_lam_);
        pred.I12 = act_.I12 + r * (act_.I12 - prev_.I12);
        pred.I16 = act_.I16 + r * (act_.I16 - prev_.I16);
        pred.I26 = act_.I26 + r * (act_.I26 - prev_.I26);
    }
    ArcActions nxt{0.0, pick_sign(raw.I16, pred.I16), pick_sign(raw.I26, pred.I26)};
    if (!sign_clear(nxt.I16, pred.I16) || !sign_clear(nxt.I26, pred.I26)) return false;
    if (std::isnan(raw.I12.real())) {
        nxt.I12 = nxt.I16 - nxt.I26;
    } else {
        nxt.I12 = pick_sign(raw.I12, pred.I12);
        if (!sign_clear(nxt.I12, pred.I12)) return false;
        if (std::abs(nxt.I12 - (nxt.I16 - nxt.I26)) > 1e-7 * (1 + std::abs(nxt.I12)))
            throw Error(Errc::BranchMismatch, "I12 and I16 - I26 disagree; route classes changed");
    }
    prev_ = act_;
    prev_lam_ = tps_.lambda;
    has_prev_ = true;
    act_ = nxt;
    nt.path = tps_.path;
    nt.path.push_back(lam1);
    tps_ = nt;
    return true;
}

void ActionTracker::move_to(cplx lam1, double max_step) {
    cplx lam0 = tps_.lambda;
    double total = std::abs(lam1 - lam0);
    double t = 0, h = std::min(max_step, total);
    while (total - t > 1e-14) {
        double hh = std::min(h, total - t);
        if (total - t - hh < 1e-12) hh = total - t;
        cplx target = lam0 + (lam1 - lam0) * ((t + hh) / total);
        if (!try_step(target)) {
            h = 0.5 * hh;
            if (h < 1e-7) throw Error(Errc::BranchDiscontinuity, "action continuation cannot resolve the sheet");
            continue;
        }
        t += hh;
        h = std::min(max_step, 1.5 * hh);
    }
}

void ActionTracker::move_l_path(cplx lam1) {
    move_to(cplx(lam1.real(), tps_.lambda.imag()));
    move_to(lam1);
}

cplx I_jk(const Potential& pot, cplx lam, ArcPair p) {
    ActionTracker tr(pot);
    tr.move_l_path(lam);
    return tr.I(p);
}

cplx xi_c(const Potential& pot, cplx x, cplx lam, cplx c, const std::vector<cplx>& waypoints) {
    if (x == c && waypoints.empty()) return 0.0;
    ActionPath path;
    path.nodes.push_back(c);
    path.nodes.insert(path.nodes.end(), waypoints.begin(), waypoints.end());
    path.nodes.push_back(x);
    path.start_tp = true;
    path.end_tp = is_turning_point(pot, x, lam);
    cplx seed = std::sqrt(reduced_q(pot, lam, c, path.nodes[1] - c, 0.0));
    cplx z = I * integrate_path(pot, lam, path, seed, 1).value;
    // sqrt(V0) = -i sqrt(-V0) on some sheet; pick the sign with Re >= 0
    return z.real() >= 0 ? z : -z;
}

cplx xi_c(const Potential& pot, cplx x, cplx lam, cplx c) { return xi_c(pot, x, lam, c, {}); }

}  // namespace zs
