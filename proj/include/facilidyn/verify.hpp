#pragma once

#include <cstdint>
#include <json.hpp>
#include <string>
#include <vector>

namespace facilidyn {

struct CheckResult {
    int id = 0;
    std::string name;
    bool pass = false;
    std::string measured;
    std::string expected;
    double seconds = 0.0;
    double budget = 0.0;  // wall-time limit in seconds, 0 when unbounded
    nlohmann::json to_json() const;
};

struct VerifyOptions {
    bool quick = false;          // census property on 100 draws only
    std::uint64_t seed = 20240601;
    int census_draws = 1000;
    int poly_draws = 500;
    int jacobian_draws = 200;
    unsigned threads = 0;        // sweep workers, 0 = hardware concurrency
};

CheckResult check_constants();
CheckResult check_fig3_quartet();
CheckResult check_fig4_cycle();
CheckResult check_census_property(int draws, std::uint64_t seed);
CheckResult check_root_counting(int draws, std::uint64_t seed);
CheckResult check_trace_det_identity(int draws, std::uint64_t seed);
CheckResult check_hopf_onset();
CheckResult check_bt_nondegeneracy();
CheckResult check_homoclinic_and_sweep(unsigned threads);
CheckResult check_reduction_forms();

std::vector<CheckResult> run_acceptance(const VerifyOptions& opt);
nlohmann::json acceptance_report(const std::vector<CheckResult>& results);

} // namespace facilidyn
