// SPDX-License-Identifier: MIT
#pragma once

#include <complex>
#include <numbers>
#include <stdexcept>
#include <string>

namespace zs {

using cplx = std::complex<double>;

inline constexpr double pi = std::numbers::pi;
inline constexpr cplx I{0.0, 1.0};

enum class Errc {
    InvalidInput,
    Io,
    PoleProximity,
    DenominatorVanishes,
    CoalescenceDetected,
    RootCountMismatch,
    AmbiguousClass,
    StallDetected,
    BranchDiscontinuity,
    PathObstructed,
    QuadratureNonconvergent,
    LostArc,
    NoRootInBracket,
    NonMonotoneAction,
    NewtonDivergence,
    OracleUnavailable,
    TurningPointSingularity,
    BranchMismatch,
    BranchContinuationFailure,
    PhaseOutOfRange,
    StepUnderflow,
    WindingAmbiguous,
};

const char* errc_name(Errc c);

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}
    Errc code() const noexcept { return code_; }

private:
    Errc code_;
};

// Branch of sqrt(w) closest to a reference value (continuity rule).
inline cplx sqrt_near(cplx w, cplx ref) {
    cplx r = std::sqrt(w);
    return (std::real(std::conj(ref) * r) >= 0.0) ? r : -r;
}

// Signed distance helper: nearest image of x modulo i*period.
inline cplx reduce_strip(cplx x, double period = pi) {
    double im = x.imag();
    double k = std::floor((im + period / 2) / period);
    double r = im - k * period;
    // fundamental strip is (-period/2, period/2]
    if (r <= -period / 2) r += period;
    if (r > period / 2) r -= period;
    if (std::abs(r + period / 2) < 1e-15) r = period / 2;
    return {x.real(), r};
}

}  // namespace zs
