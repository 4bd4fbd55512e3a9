// SPDX-License-Identifier: MIT
#pragma once

#include <optional>
#include <vector>

#include "zs/geometry.hpp"

namespace zs {

enum class Termination { Pole, TurningPoint, StripBoundary, WindowBoundary, MaxLength };
const char* termination_name(Termination t);

struct StokesCurve {
    int origin = 0;  // turning point label
    int branch = 0;  // 0..2
    std::vector<cplx> pts;
    std::vector<double> arclength;
    Termination term = Termination::MaxLength;
    int end_label = 0;  // for Termination::TurningPoint
    cplx end_pole{0};   // for Termination::Pole
    double max_level_residual = 0;  // max |Re z| seen by the tracer
};

struct StokesDiagram {
    cplx lambda;
    TurningPointSet tps;
    std::vector<StokesCurve> curves;
    std::vector<std::pair<int, int>> connections;  // (j, k) with j < k
    bool connected(int j, int k) const;
};

enum class ContourRole { CMinus, C0, CPlus, Generic };

struct Contour {
    std::vector<cplx> pts;
    ContourRole role = ContourRole::Generic;
};

struct ProgressVerdict {
    int direction = 0;  // +1 / -1 if Re z is monotone, 0 otherwise
    double margin = 0;  // min |d Re z / ds| along the path
    bool progressive() const { return direction != 0 && margin > 0; }
};

struct AdmissibleContour {
    int alpha = 0, beta = 0;  // labels of x_- (left) and x_+ (right)
    Contour cminus, c0, cplus;
};

struct TraceOptions {
    double window = 8.0;
    double max_length = 50.0;
    double start_offset = 1e-4;
    double capture_radius = 1e-4;  // proximity to another turning point
    double pole_radius = 2e-3;     // pole-guard entry
    double tol = 1e-9;
};

// The three Stokes lines (level sets Re z(., lam, c) = 0) leaving the simple
// turning point with the given label.
std::vector<StokesCurve> trace_stokes_lines(const Potential& pot, const TurningPointSet& tps, int label,
                                            const TraceOptions& opt = {});

StokesDiagram stokes_diagram(const Potential& pot, const TurningPointSet& tps, const TraceOptions& opt = {});

// Monotonicity of Re z along a polyline (sampled every <= 0.01).
ProgressVerdict is_progressive(const Potential& pot, const Contour& path, cplx lam,
                               const std::vector<cplx>& turning_points = {});

// Gradient line of Re z from a turning point, along one of the three
// directions of fastest change, until |Re x| > 6 or termination.
StokesCurve trace_gradient_line(const Potential& pot, const TurningPointSet& tps, int label, int branch,
                                const TraceOptions& opt = {});

std::optional<AdmissibleContour> find_admissible_contour(const Potential& pot, cplx lam);
std::optional<AdmissibleContour> find_admissible_contour(const Potential& pot, const StokesDiagram& d);

}  // namespace zs
