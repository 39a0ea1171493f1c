#pragma once

#include <string>
#include <vector>

#include "tdhom/json_io.hpp"

namespace tdhom {

struct SuiteOptions {
    int jobs = 1;
    bool full = false; // full scale (slow) vs quick scale
};

struct SuiteResult {
    std::string name;
    Json report;    // schema "tdhom-report/1"
    int violations = 0;
};

// main, lovasz-decomp, triangular, lemma4, wr, radius, counterexample.
const std::vector<std::string>& suite_names();

// Runs one suite; unknown names are input errors. Deterministic for fixed
// options: parallel shards merge in work-item order.
SuiteResult run_suite(const std::string& name, const SuiteOptions& opts = {});

} // namespace tdhom
