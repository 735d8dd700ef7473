#pragma once

#include <string>
#include <vector>

namespace lcft {

struct VerifyOptions {
    double tol = 1e-5;
    std::vector<double> alphas{1e-2, 1e-3, 1e-4};
    std::string fixture_dir;  // golden checks are skipped when empty
};

struct CheckResult {
    int p = 0;
    std::string name;
    bool pass = false;
    std::string detail;
};

// Full invariant suite for p_lo..p_hi, ordered by p and then check name.
std::vector<CheckResult> run_verify(int p_lo, int p_hi, const VerifyOptions& opt);

}  // namespace lcft
