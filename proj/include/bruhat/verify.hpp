#pragma once

#include <functional>
#include <string>
#include <vector>

namespace bruhat {

struct SweepOptions {
    int n = 4;           // sweep bound
    unsigned seed = 0;   // sampling / iso-search seed
    int trials = 64;     // invertible-combination trials
    int samples = 256;   // sampled instances where exhaustion is too large
    int jobs = 0;        // 0 = all hardware threads, 1 = serial reference
};

struct SweepResult {
    std::string theorem;
    int instances = 0;
    int failures = 0;
    std::vector<std::string> failure_details;  // first few
    double seconds = 0.0;
    bool ok() const { return failures == 0 && instances > 0; }
};

// Task list executed either serially (jobs == 1, the reference path) or with
// an OpenMP parallel-for; results are aggregated in task order either way.
using SweepTask = std::function<bool(std::string&)>;
SweepResult run_tasks(const std::string& name, const std::vector<SweepTask>& tasks,
                      int jobs);

// The CLI-facing theorem sweeps.
std::vector<std::string> theorem_names();
SweepResult verify_theorem(const std::string& name, const SweepOptions& opt);

// Additional acceptance sweeps.
SweepResult verify_zero_criterion(const SweepOptions& opt);      // pi_sigma pibar_rho
SweepResult verify_characteristic(const SweepOptions& opt);      // ch identities
SweepResult verify_indecomposability(const SweepOptions& opt);
SweepResult verify_descent_iso(const SweepOptions& opt);

}  // namespace bruhat
