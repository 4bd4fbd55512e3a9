// SPDX-License-Identifier: MIT
// Shared expensive inputs, computed once per test process.
#pragma once

#include <map>

#include "zs/direct.hpp"
#include "zs/quantize.hpp"

namespace zs::test {

inline const ArcSet& arcs() {
    static const ArcSet a = trace_all_arcs(Potential());
    return a;
}

inline const std::vector<OracleEigenvalue>& direct(double eps) {
    static std::map<double, std::vector<OracleEigenvalue>> cache;
    auto it = cache.find(eps);
    if (it == cache.end()) {
        Potential pot;
        it = cache.emplace(eps, direct_eigenvalues(pot, eps, default_search_region(pot))).first;
    }
    return it->second;
}

}  // namespace zs::test
