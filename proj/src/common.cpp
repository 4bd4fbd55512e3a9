// SPDX-License-Identifier: MIT
#include "zs/common.hpp"

namespace zs {

const char* errc_name(Errc c) {
    switch (c) {
        case Errc::InvalidInput: return "InvalidInput";
        case Errc::Io: return "Io";
        case Errc::PoleProximity: return "PoleProximity";
        case Errc::DenominatorVanishes: return "DenominatorVanishes";
        case Errc::CoalescenceDetected: return "CoalescenceDetected";
        case Errc::RootCountMismatch: return "RootCountMismatch";
        case Errc::AmbiguousClass: return "AmbiguousClass";
        case Errc::StallDetected: return "StallDetected";
        case Errc::BranchDiscontinuity: return "BranchDiscontinuity";
        case Errc::PathObstructed: return "PathObstructed";
        case Errc::QuadratureNonconvergent: return "QuadratureNonconvergent";
        case Errc::LostArc: return "LostArc";
        case Errc::NoRootInBracket: return "NoRootInBracket";
        case Errc::NonMonotoneAction: return "NonMonotoneAction";
        case Errc::NewtonDivergence: return "NewtonDivergence";
        case Errc::OracleUnavailable: return "OracleUnavailable";
        case Errc::TurningPointSingularity: return "TurningPointSingularity";
        case Errc::BranchMismatch: return "BranchMismatch";
        case Errc::BranchContinuationFailure: return "BranchContinuationFailure";
        case Errc::PhaseOutOfRange: return "PhaseOutOfRange";
        case Errc::StepUnderflow: return "StepUnderflow";
        case Errc::WindingAmbiguous: return "WindingAmbiguous";
    }
    return "Unknown";
}

}  // namespace zs
