// SPDX-License-Identifier: MIT
#pragma once

#include <functional>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "zs/direct.hpp"
#include "zs/quantize.hpp"

namespace zs {

struct CriterionResult {
    int id = 0;
    std::string name;
    bool pass = false;
    double seconds = 0;
    double time_limit = 0;
    std::string detail;                                // measured values
    std::vector<std::string> diagnostics;              // extra lines, not part of the verdict
    std::vector<std::pair<std::string, double>> metrics;
};

// Shared heavy inputs (arcs, oracle spectra). The first criterion that needs
// one pays for it in its runtime.
class SuiteContext {
public:
    explicit SuiteContext(Potential pot = Potential()) : pot_(pot) {}
    const Potential& potential() const { return pot_; }
    const ArcSet& arcs();
    const std::vector<OracleEigenvalue>& direct(double eps);

private:
    Potential pot_;
    std::unique_ptr<ArcSet> arcs_;
    std::map<double, std::vector<OracleEigenvalue>> direct_;
};

int criterion_count();
std::string criterion_name(int id);
// Runs criterion id (1-based); exceptions become failures with the message as detail.
CriterionResult run_criterion(int id, SuiteContext& ctx);
std::vector<CriterionResult> run_suite(const std::vector<int>& ids, SuiteContext& ctx,
                                       const std::function<void(const CriterionResult&)>& on_done = nullptr);

}  // namespace zs
