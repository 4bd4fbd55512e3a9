// SPDX-License-Identifier: MIT
// Runs the acceptance criteria and prints one verdict line per criterion.
// Exit status is 0 when the suite ran to completion; the verdicts are in the
// output. --strict makes any failing criterion a nonzero exit.
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <string>
#include <vector>

#include "zs/acceptance.hpp"

int main(int argc, char** argv) {
    std::vector<int> ids;
    bool strict = false, verbose = true;
    for (int i = 1; i < argc; ++i) {
        if (!std::strcmp(argv[i], "--strict")) strict = true;
        else if (!std::strcmp(argv[i], "--quiet")) verbose = false;
        else ids.push_back(std::atoi(argv[i]));
    }
    if (ids.empty())
        for (int k = 1; k <= zs::criterion_count(); ++k) ids.push_back(k);
    zs::SuiteContext ctx;
    int failed = 0;
    zs::run_suite(ids, ctx, [&](const zs::CriterionResult& r) {
        if (!r.pass) ++failed;
        std::printf("[%s] criterion %2d  %-34s %7.2f s  %s\n", r.pass ? "PASS" : "FAIL", r.id, r.name.c_str(),
                    r.seconds, r.detail.c_str());
        if (verbose)
            for (auto& d : r.diagnostics) std::printf("         %s\n", d.c_str());
        std::fflush(stdout);
    });
    std::printf("acceptance suite complete: %zu criteria, %d failed\n", ids.size(), failed);
    return strict && failed ? 1 : 0;
}
