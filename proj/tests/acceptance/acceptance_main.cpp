// Acceptance suite: one line per criterion, nonzero exit when anything fails.

#include "siegel/selftest.hpp"

#include <cstdlib>
#include <iostream>
#include <string>

int main(int argc, char** argv) {
    siegel::SelftestOptions opt;
    for (int i = 1; i < argc; ++i) {
        std::string arg = argv[i];
        if (arg == "--quick") opt.quick = true;
    }
    if (const char* env = std::getenv("SIEGEL_SEED")) opt.seed = std::stoull(env);
    auto results = siegel::run_selftest(opt);
    bool ok = siegel::report_selftest(std::cout, results);
    double total = 0;
    for (const auto& r : results) total += r.seconds;
    std::cout << "total wall time: " << total << " s\n";
    return ok ? 0 : 1;
}
