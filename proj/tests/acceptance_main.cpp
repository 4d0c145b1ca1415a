// Runs the verification criteria and prints one PASS/FAIL line per
// criterion.  With arguments, runs only the listed criterion numbers.
// Exit status is the number of failing criteria.

#include <cstdlib>
#include <iostream>
#include <vector>

#include "padyn/acceptance.hpp"

int main(int argc, char** argv) {
    std::vector<int> ids;
    for (int i = 1; i < argc; ++i) ids.push_back(std::atoi(argv[i]));
    int failures = 0;
    try {
        for (const auto& r : padyn::run_acceptance(ids)) {
            std::cout << padyn::format_criterion(r) << "\n";
            if (!r.pass) ++failures;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 99;
    }
    return failures;
}
