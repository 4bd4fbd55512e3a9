// SPDX-License-Identifier: MIT
#include "zs/arcs.hpp"

#include <boost/math/tools/roots.hpp>
#include <cmath>
#include <cstdlib>

namespace zs {

const char* arc_end_name(ArcEnd e) {
    switch (e) {
        case ArcEnd::Origin: return "origin";
        case ArcEnd::Bifurcation: return "bifurcation";
        case ArcEnd::DoublePoint: return "double-point";
        case ArcEnd::MaxLength: return "max-length";
    }
    return "?";
}

ActionTracker tracker_at(const Potential& pot, cplx lam) {
    ActionTracker t(pot);
    t.move_l_path(lam);
    return t;
}

BifurcationPoint find_bifurcation(const Potential& pot) {
    ActionTracker base(pot);
    base.move_to(cplx(0, 0.2));
    auto f = [&](double mu) {
        ActionTracker t = base;
        t.move_to(cplx(0, mu));
        return t.I(ArcPair::P16).real();
    };
    double lo = 0.2, hi = 0.4;
    double flo = f(lo), fhi = f(hi);
    if (flo * fhi > 0) throw Error(Errc::NoRootInBracket, "Re I16 does not change sign on (0.2i, 0.4i)");
    boost::uintmax_t iters = 60;
    auto r = boost::math::tools::toms748_solve(f, lo, hi, flo, fhi,
                                               [](double a, double b) { return std::abs(a - b) < 1e-13; }, iters);
    double mu = 0.5 * (r.first + r.second);
    ActionTracker t = base;
    t.move_to(cplx(0, mu));
    BifurcationPoint b{cplx(0, mu), t.actions()};
    if (std::abs(b.actions.I26.real()) > 1e-7 || std::abs(b.actions.I12.real()) > 1e-7)
        throw Error(Errc::BranchMismatch, "Re I12 or Re I26 does not vanish at the bifurcation point");
    return b;
}

namespace {

// Newton correction of Re I = 0 transverse to the level line.
bool correct(ActionTracker& t, ArcPair pair, double tol) {
    for (int it = 0; it < 8; ++it) {
        cplx v = t.I(pair);
        if (std::abs(v.real()) <= tol) return true;
        cplx d = t.derivatives().get(pair);
        if (std::abs(d) < 1e-14) return false;
        cplx delta = -v.real() * std::conj(d) / std::norm(d);
        if (std::abs(delta) > 0.05) return false;
        t.move_to(t.lambda() + delta, 1e-2);
    }
    return std::abs(t.I(pair).real()) <= tol;
}

}  // namespace

SpectralArc trace_arc(const ActionTracker& start, ArcPair pair, int direction, const ArcOptions& opt) {
    SpectralArc arc;
    arc.pair = pair;
    ActionTracker t = start;
    if (std::abs(t.I(pair).real()) > 1e-6) throw Error(Errc::InvalidInput, "arc seed is not on Re I = 0");
    correct(t, pair, opt.node_tol);
    arc.lambda.push_back(t.lambda());
    arc.arclength.push_back(0);
    arc.action.push_back(t.I(pair));
    const auto dps = double_turning_lambdas();
    cplx prev_tan = 0;
    double h = opt.step;
    double s = 0;
    while (true) {
        cplx d = t.derivatives().get(pair);
        cplx tan = I * std::conj(d) / std::abs(d) * double(direction);
        if (prev_tan != 0.0 && std::real(tan * std::conj(prev_tan)) < 0) tan = -tan;
        // endpoint checks before stepping
        cplx lam = t.lambda();
        for (auto& dp : dps)
            if (std::abs(lam - dp.lambda_d) < 1.5 * h) {
                arc.lambda.push_back(dp.lambda_d);
                s += std::abs(dp.lambda_d - lam);
                arc.arclength.push_back(s);
                arc.action.push_back(0.0);
                arc.end = ArcEnd::DoublePoint;
                return arc;
            }
        if (std::abs(lam) < 1e-3 || std::abs(lam + h * tan) < 1e-3 ||
            (pair == ArcPair::P12 && (lam + h * tan).imag() <= 1e-3)) {
            arc.end = ArcEnd::Origin;
            return arc;
        }
        if (s > opt.max_length) {
            arc.end = ArcEnd::MaxLength;
            return arc;
        }
        ActionTracker trial = t;
        bool ok = false;
        try {
            trial.move_to(lam + h * tan, 1e-2);
            ok = correct(trial, pair, opt.node_tol);
        } catch (const Error& e) {
            if (e.code() != Errc::CoalescenceDetected && e.code() != Errc::BranchDiscontinuity &&
                e.code() != Errc::StallDetected && e.code() != Errc::QuadratureNonconvergent)
                throw;
            ok = false;
        }
        if (!ok || std::abs(trial.lambda() - lam) > 3 * h) {
            h *= 0.5;
            if (h < opt.min_step) throw Error(Errc::LostArc, "arc continuation failed after step halving");
            continue;
        }
        s += std::abs(trial.lambda() - lam);
        prev_tan = tan;
        t = trial;
        arc.lambda.push_back(t.lambda());
        arc.arclength.push_back(s);
        arc.action.push_back(t.I(pair));
        h = std::min(opt.step, 2 * h);
    }
}

ArcSet trace_all_arcs(const Potential& pot, const ArcOptions& opt) {
    ArcSet out;
    out.bif = find_bifurcation(pot);
    ActionTracker at(pot);
    at.move_to(out.bif.lambda);
    // Lambda12 runs down the imaginary axis; pick the direction with dIm < 0
    {
        cplx d = at.derivatives().I12;
        cplx tan = I * std::conj(d);
        int dir = tan.imag() < 0 ? 1 : -1;
        out.a12 = trace_arc(at, ArcPair::P12, dir, opt);
        out.a12.end = ArcEnd::Origin;
    }
    {
        cplx d = at.derivatives().I26;
        cplx tan = I * std::conj(d);
        int dir = tan.real() > 0 ? 1 : -1;
        out.a26 = trace_arc(at, ArcPair::P26, dir, opt);
    }
    {
        cplx d = at.derivatives().I16;
        cplx tan = I * std::conj(d);
        int dir = tan.real() < 0 ? 1 : -1;
        out.a16 = trace_arc(at, ArcPair::P16, dir, opt);
    }
    return out;
}

cplx density_rho_complex(const ActionTracker& at, ArcPair pair) {
    ArcActions d = arc_inverse_root_integrals(at.potential(), at.turning_points(), at.actions());
    return at.lambda() / pi * d.get(pair);
}

double density_rho(const ActionTracker& at, ArcPair pair) {
    // sqrt(A^2 + (lam + S'/2)^2) = -i r with r the root used for z = i int r
    cplx v = I * density_rho_complex(at, pair);
    if (std::abs(v.imag()) > 1e-6 * std::max(1.0, std::abs(v)))
        throw Error(Errc::BranchMismatch, "density is not real on this arc");
    return std::abs(v.real());
}

}  // namespace zs
