#pragma once

#include <string>
#include <vector>

#include "torus/numeric.hpp"

namespace torus {

/// Outcome of one registered claim scan. violations is empty iff the claim
/// holds on the scanned range; each entry names a counterexample tuple.
struct ScanResult {
    std::string claim_id;
    std::string range;
    long long checked = 0;
    std::vector<std::string> violations;
    double elapsed_seconds = 0.0;
};

std::vector<std::string> list_claims();

/// Runs a registered claim over its range. max = 0 uses the claim's
/// default desk-scale range; jobs <= 0 uses the machine parallelism.
/// Results are deterministic and independent of the partitioning.
ScanResult run_claim(const std::string& claim_id, long long max = 0, int jobs = 0);

}  // namespace torus
