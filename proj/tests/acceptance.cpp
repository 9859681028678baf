// Acceptance suite runner: one PASS/FAIL line per criterion, followed by
// indented details. With an argument, runs only that criterion.

#include <cstdlib>
#include <iostream>
#include <string>

#include "arcinv/verify.hpp"

int main(int argc, char** argv) {
    arcinv::VerifyOptions options;
    int first = 1, last = arcinv::criterion_count();
    if (argc > 1) first = last = std::atoi(argv[1]);
    if (argc > 2) options.seed = std::stoull(argv[2]);

    bool all = true;
    for (int id = first; id <= last; ++id) {
        const auto r = arcinv::run_criterion(id, options);
        std::cout << (r.passed ? "PASS" : "FAIL") << " criterion " << r.id << ": " << r.title << "\n";
        for (const auto& d : r.details) std::cout << "    " << d << "\n";
        std::cout.flush();
        all = all && r.passed;
    }
    return all ? EXIT_SUCCESS : EXIT_FAILURE;
}
