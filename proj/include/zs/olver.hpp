// SPDX-License-Identifier: MIT
#pragma once

#include <vector>

#include "zs/potential.hpp"

namespace zs {

// Omega(t) = 1 or (1 + |t|^2)^{1/4}.
enum class Balancing { Unit, Quarter };
double balancing(Balancing b, cplx t);

// zeta(x) = (int_c^x sqrt(V0))^{2/3} on the straight route from c, branch
// fixed near c by (2/3)^{2/3} f0^{1/3} (x - c) [1 + f1/(5 f0) (x - c)] with
// the principal f0^{1/3}, V0 = (t - c)(f0 + f1 (t - c) + ...).
cplx zeta_map(const Potential& pot, cplx x, cplx lam, cplx c);

// f_hat = (4/9) V0 / zeta
cplx f_hat(const Potential& pot, cplx x, cplx lam, cplx c);

// zeta continued along a polyline that stays away from c. The starting value
// comes from zeta_map; values in between are computed from a dense table of
// xi = zeta^{3/2} and root values so that any point on the path can be
// evaluated with the continued branch.
class ZetaPath {
public:
    ZetaPath(const Potential& pot, cplx lam, cplx c, std::vector<cplx> nodes, int per_segment = 200);
    int segments() const { return static_cast<int>(nodes_.size()) - 1; }
    cplx point(int seg, double s) const { return nodes_[seg] + s * (nodes_[seg + 1] - nodes_[seg]); }
    // zeta and xi at a point near the path, continued from the nearest table entry
    struct Value {
        cplx x, xi, zeta, root;  // root = sqrt(V0) on the continued branch
    };
    Value at(cplx x) const;
    Value at(int seg, double s) const { return at(point(seg, s)); }
    const std::vector<Value>& table() const { return table_; }
    cplx c() const { return c_; }
    cplx lambda() const { return lam_; }
    const Potential& potential() const { return pot_; }
    const std::vector<cplx>& nodes() const { return nodes_; }

private:
    Value step(const Value& from, cplx x) const;
    void advance(cplx x, int depth);  // append x, splitting the step while the branch is unclear
    Potential pot_;
    cplx lam_, c_;
    std::vector<cplx> nodes_;
    std::vector<Value> table_;
};

// f_hat^{-1/4} d^2/dx^2 f_hat^{-1/4} - g / f_hat^{1/2}, second derivative by a
// fourth-order central difference along direction dir (|dir| = 1).
cplx error_control_bracket(const ZetaPath& zp, cplx x, cplx dir, double h = 2e-3);

// Same bracket from V0 in closed form:
// {(5/16) V0'^2/V0^2 - (1/4) V0''/V0 - g} / zeta' - (5/16) zeta'/zeta^2,
// zeta' = V0^{1/2} / ((3/2) zeta^{1/2}), zeta^{1/2} = xi/zeta, V0^{1/2} = v.root.
cplx error_control_bracket_closed(const Potential& pot, cplx lam, const ZetaPath::Value& v);

struct VariationValue {
    double value = 0;
    bool progressive = true;  // Re xi monotone on the sampled path
};

// V[H] = int |Omega(eps^{-2/3} zeta)^{-1} bracket| |dx| along the path, by a
// fixed composite rule (50 panels of 8 Gauss-Legendre nodes per segment).
VariationValue variation_H(const ZetaPath& path, double eps, Balancing omega = Balancing::Quarter);

// rho_jk = sup over S_j u S_k of Omega M_jk^2 on a 64 x 64 polar grid to |t| = 40,
// combined with the large-t value (1 + lambda_jk^2).
double rho_jk(int j, int k, Balancing omega = Balancing::Quarter);

struct OlverBound {
    double bound = 0;
    double rho = 0, sigma = 0, variation = 0;
    double E_end = 0;
    bool applicable = true;
    const char* reason = "";
};

// (sigma/rho) E_jk(eps^{-2/3} zeta(x)) (exp{rho eps^{2/3} V/(3|lambda_jk|)} - 1) at the
// path end x for w ~ f_hat^{-1/4} (a U_j + b U_k). ref_at_infinity marks a
// reference point at infinity in an internal part of S_j.
OlverBound olver_error_bound(int j, int k, const ZetaPath& path, double eps, cplx a, cplx b,
                             bool ref_at_infinity = false, Balancing omega = Balancing::Quarter);

// e^{-xi/eps} + e^{xi/eps}, the bracket whose zeros give the near-zero rule.
cplx near_zero_bracket(cplx xi, double eps);

// Two test paths from c + d0 u: along the ray where zeta is real positive and
// along the ray where ph zeta = pi/3 (Taylor directions), length len.
std::vector<cplx> olver_ray(const Potential& pot, cplx lam, cplx c, double zeta_phase, double d0, double len);

}  // namespace zs
