// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include <cstdlib>
#include <iostream>

#include "dtw1/suite.hpp"

int main(int argc, char** argv) {
    dtw1::SuiteConfig cfg;
    if (argc > 1) cfg.seed = std::strtoull(argv[1], nullptr, 10);
    dtw1::Suite suite(cfg);
    dtw1::print_suite_header(std::cout, cfg);
    int failed = 0;
    for (int id = 1; id <= dtw1::Suite::kCriteria; ++id) {
        auto r = suite.run(id);
        dtw1::print_criterion(std::cout, r);
        std::cout.flush();
        if (!r.pass()) ++failed;
    }
    std::cout << (failed ? "FAILED " : "ALL PASS ") << dtw1::Suite::kCriteria - failed << "/" << dtw1::Suite::kCriteria
              << " criteria\n";
    return failed ? 1 : 0;
}
