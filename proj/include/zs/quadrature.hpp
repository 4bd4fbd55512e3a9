// SPDX-License-Identifier: MIT
#pragma once

#include <functional>
#include <vector>

#include "zs/common.hpp"

namespace zs {

struct GaussRule {
    std::vector<double> x;  // nodes on [-1, 1]
    std::vector<double> w;
};

// Gauss-Legendre rule with n nodes (cached; thread-safe).
const GaussRule& gauss_legendre(int n);

struct QuadResult {
    cplx value{0.0};
    double error = 0.0;
    int intervals = 0;
};

// Globally adaptive Gauss-Kronrod (7/15) for a complex integrand on [a, b].
QuadResult integrate_gk(const std::function<cplx(double)>& f, double a, double b,
                        double abstol = 1e-10, double reltol = 1e-12, int max_intervals = 4000);

// Integral of m(s) * r(s)^power over s in [0, 1], where r is the branch of
// sqrt(q(s)) continued from r0 at s = 0. Subintervals are processed left to
// right so the branch is carried node to node; a rotation of the root by more
// than `max_turn` radians between consecutive nodes forces a split.
// qnoise(s, |q(s)|), if given, is the relative rounding error of q(s); panels whose
// error estimate is below the propagated rounding are accepted.
struct BranchResult {
    cplx value{0.0};
    cplx root_end{0.0};  // continued root at s = 1
    double error = 0.0;
    int intervals = 0;
};

BranchResult integrate_sqrt_branch(const std::function<cplx(double)>& q,
                                   const std::function<cplx(double)>& m, int power, cplx r0,
                                   double abstol = 1e-11, int max_depth = 40,
                                   double max_turn = 0.35,
                                   const std::function<double(double, double)>& qnoise = nullptr);

}  // namespace zs
