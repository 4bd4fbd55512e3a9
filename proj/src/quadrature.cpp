// SPDX-License-Identifier: MIT
#include "zs/quadrature.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <queue>

namespace zs {

const GaussRule& gauss_legendre(int n) {
    static std::mutex mu;
    static std::map<int, GaussRule> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
    GaussRule r;
    r.x.resize(n);
    r.w.resize(n);
    for (int i = 0; i < n; ++i) {
        double z = std::cos(pi * (i + 0.75) / (n + 0.5));
        for (int it2 = 0; it2 < 100; ++it2) {
            double p0 = 1.0, p1 = z;
            for (int k = 2; k <= n; ++k) {
                double p2 = ((2.0 * k - 1.0) * z * p1 - (k - 1.0) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            double dp = n * (z * p1 - p0) / (z * z - 1.0);
            double dz = p1 / dp;
            z -= dz;
            if (std::abs(dz) < 1e-16) {
                r.w[i] = 2.0 / ((1.0 - z * z) * dp * dp);
                break;
            }
        }
        if (r.w[i] == 0.0) {
            double p0 = 1.0, p1 = z;
            for (int k = 2; k <= n; ++k) {
                double p2 = ((2.0 * k - 1.0) * z * p1 - (k - 1.0) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            double dp = n * (z * p1 - p0) / (z * z - 1.0);
            r.w[i] = 2.0 / ((1.0 - z * z) * dp * dp);
        }
        r.x[i] = -z;
    }
    return cache.emplace(n, std::move(r)).first->second;
}

namespace {

// Kronrod 15-point nodes (positive half) and weights, with embedded Gauss 7.
constexpr double xk[8] = {0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
                          0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
                          0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
                          0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr double wk[8] = {0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
                          0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
                          0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
                          0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr double wg[4] = {0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
                          0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Seg {
    double a, b;
    cplx val;
    double err;
    bool operator<(const Seg& o) const { return err < o.err; }
};

Seg gk15(const std::function<cplx(double)>& f, double a, double b) {
    double c = 0.5 * (a + b), h = 0.5 * (b - a);
    cplx fc = f(c);
    cplx rk = fc * wk[7];
    cplx rg = fc * wg[3];
    for (int j = 0; j < 7; ++j) {
        double dx = h * xk[j];
        cplx f1 = f(c - dx), f2 = f(c + dx);
        rk += wk[j] * (f1 + f2);
        if (j % 2 == 1) rg += wg[j / 2] * (f1 + f2);
    }
    return {a, b, rk * h, std::abs((rk - rg) * h)};
}

}  // namespace

QuadResult integrate_gk(const std::function<cplx(double)>& f, double a, double b, double abstol,
                        double reltol, int max_intervals) {
    std::priority_queue<Seg> q;
    Seg s0 = gk15(f, a, b);
    q.push(s0);
    cplx total = s0.val;
    double err = s0.err;
    int n = 1;
    while (err > std::max(abstol, reltol * std::abs(total))) {
        if (n >= max_intervals)
            throw Error(Errc::QuadratureNonconvergent, "adaptive Gauss-Kronrod did not converge");
        Seg s = q.top();
        q.pop();
        double m = 0.5 * (s.a + s.b);
        Seg l = gk15(f, s.a, m), r = gk15(f, m, s.b);
        total += l.val + r.val - s.val;
        err += l.err + r.err - s.err;
        q.push(l);
        q.push(r);
        ++n;
    }
    // recompute to shed accumulated rounding
    cplx sum = 0.0;
    double e = 0.0;
    while (!q.empty()) {
        sum += q.top().val;
        e += q.top().err;
        q.pop();
    }
    return {sum, e, n};
}

namespace {

struct BranchCtx {
    const std::function<cplx(double)>& q;
    const std::function<double(double, double)>& qnoise;
    const std::function<cplx(double)>& m;
    int power;
    double abstol;
    int max_depth;
    double max_turn;
    BranchResult out;
    long calls = 0;
};

constexpr long kMaxPanels = 20000;

// Evaluates the 15 Kronrod nodes in increasing order, continuing the root.
// Returns false if the branch turns too fast between nodes.
bool branch_gk15(BranchCtx& c, double a, double b, cplx ra, cplx& rb, cplx& val, double& err, double& noise) {
    double mid = 0.5 * (a + b), h = 0.5 * (b - a);
    double nodes[15];
    double kw[15];
    double gw[15];
    for (int j = 0; j < 7; ++j) {
        nodes[j] = mid - h * xk[j];
        nodes[14 - j] = mid + h * xk[j];
        kw[j] = kw[14 - j] = wk[j];
        gw[j] = gw[14 - j] = (j % 2 == 1) ? wg[j / 2] : 0.0;
    }
    nodes[7] = mid;
    kw[7] = wk[7];
    gw[7] = wg[3];
    cplx prev = ra;
    cplx sk = 0.0, sg = 0.0;
    double nz = 0.0;
    for (int j = 0; j < 15; ++j) {
        cplx qj = c.q(nodes[j]);
        cplx r = sqrt_near(qj, prev);
        if (std::abs(prev) > 0 && std::abs(std::arg(r / prev)) > c.max_turn) return false;
        prev = r;
        cplx p = (c.power == 1) ? r : 1.0 / r;
        cplx v = c.m(nodes[j]) * p;
        sk += kw[j] * v;
        sg += gw[j] * v;
        if (c.qnoise) nz += kw[j] * std::abs(v) * c.qnoise(nodes[j], std::abs(qj));
    }
    cplx r = sqrt_near(c.q(b), prev);
    if (std::abs(std::arg(r / prev)) > c.max_turn) return false;
    rb = r;
    val = sk * h;
    err = std::abs((sk - sg) * h);
    noise = 10.0 * nz * h;  // rounding in q bounds what the error estimate can show
    return true;
}

void branch_rec(BranchCtx& c, double a, double b, cplx ra, cplx& rb, int depth) {
    cplx val, r_end;
    double err, noise = 0;
    if (++c.calls > kMaxPanels)
        throw Error(Errc::QuadratureNonconvergent, "branch-tracked quadrature exceeded its panel budget");
    bool ok = branch_gk15(c, a, b, ra, r_end, val, err, noise);
    double local_tol = c.abstol * (b - a) + noise;
    if (ok && (err <= local_tol || depth >= c.max_depth)) {
        if (err > local_tol && depth >= c.max_depth && err > 1e3 * local_tol)
            throw Error(Errc::QuadratureNonconvergent, "branch-tracked quadrature hit depth limit");
        c.out.value += val;
        c.out.error += err;
        c.out.intervals += 1;
        rb = r_end;
        return;
    }
    if (depth >= c.max_depth)
        throw Error(Errc::BranchDiscontinuity, "square-root branch could not be continued");
    double mid = 0.5 * (a + b);
    cplx rm;
    branch_rec(c, a, mid, ra, rm, depth + 1);
    branch_rec(c, mid, b, rm, rb, depth + 1);
}

}  // namespace

BranchResult integrate_sqrt_branch(const std::function<cplx(double)>& q,
                                   const std::function<cplx(double)>& m, int power, cplx r0,
                                   double abstol, int max_depth, double max_turn,
                                   const std::function<double(double, double)>& qnoise) {
    BranchCtx c{q, qnoise, m, power, abstol, max_depth, max_turn, {}, 0};
    cplx rb;
    // start from a few pieces so the first error estimate is meaningful
    const int pieces = 4;
    cplx r = r0;
    for (int k = 0; k < pieces; ++k) {
        branch_rec(c, double(k) / pieces, double(k + 1) / pieces, r, rb, 0);
        r = rb;
    }
    c.out.root_end = r;
    return c.out;
}

}  // namespace zs
