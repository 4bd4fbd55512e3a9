// SPDX-License-Identifier: MIT
#pragma once

#include <array>
#include <string>
#include <vector>

#include "zs/common.hpp"

namespace zs {

// Catalog of analytic pairs. Only the sech(2x) family is provided; a new
// family needs closed-form A, S and their first three derivatives.
enum class Family { Sech2x };

// Values of A, S and derivatives at one point.
struct Fields {
    cplx A, A1, A2, A3;
    cplx S, S1, S2, S3;
};

struct Rect {
    double re_lo, re_hi, im_lo, im_hi;
};

class Potential {
public:
    // A = amp*sech(2x), S = phase*sech(2x). Default is the A = S = sech(2x) pair.
    explicit Potential(double amp = 1.0, double phase = 1.0, Family fam = Family::Sech2x);

    Family family() const { return family_; }
    std::string family_tag() const { return "sech2x"; }
    double amp() const { return amp_; }
    double phase() const { return phase_; }
    double strip_half_width() const { return pi / 2; }
    std::vector<cplx> poles() const { return {cplx(0, pi / 4), cplx(0, -pi / 4)}; }

    double pole_guard() const { return 1e-3; }
    double pole_distance(cplx x) const;

    Fields fields(cplx x) const;
    // Real-axis fast path used by the ODE oracle: {A, S, S'}.
    std::array<double, 3> real_fields(double x) const;

    cplx A(cplx x) const;
    cplx S(cplx x) const;
    cplx Sprime(cplx x) const;
    cplx V0(cplx x, cplx lam) const;
    cplx V0_x(cplx x, cplx lam) const;
    cplx V0_xx(cplx x, cplx lam) const;
    cplx g_minus(cplx x, cplx lam) const;
    cplx g_plus(cplx x, cplx lam) const;
    cplx f_tilde(cplx x, cplx lam) const;       // A^2 + (lam + S'/2)^2 = -V0
    cplx correction_g(cplx x, cplx lam) const;  // Olver correction term g

    Rect numerical_range() const;

private:
    void guard(cplx x) const;
    double amp_, phase_;
    Family family_;
};

}  // namespace zs
