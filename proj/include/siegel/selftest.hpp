#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace siegel {

struct CheckResult {
    std::string name;
    bool passed = false;
    std::string detail;
    double seconds = 0.0;
};

struct SelftestOptions {
    bool quick = false;           // reduced random-trial counts
    std::uint64_t seed = 0;
};

// Runs every acceptance check and returns one result per check.
std::vector<CheckResult> run_selftest(const SelftestOptions& options);

// Prints "CHECK <name> PASS|FAIL <detail>" lines; returns true when all pass.
bool report_selftest(std::ostream& os, const std::vector<CheckResult>& results);

}  // namespace siegel
