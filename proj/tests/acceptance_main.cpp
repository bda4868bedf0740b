// Runs the acceptance criteria and prints one pass/fail line per criterion.
#include "countlab/selftest.hpp"

#include <cstdio>

int main() {
    auto results = countlab::acceptance_suite(0);
    int failures = 0;
    int index = 0;
    for (const auto& res : results) {
        ++index;
        if (!res.pass) ++failures;
        std::printf("[%2d/%zu] %s  %s%s%s\n", index, results.size(), res.pass ? "PASS" : "FAIL",
                    res.name.c_str(), res.detail.empty() ? "" : " — ", res.detail.c_str());
        std::fflush(stdout);
    }
    if (failures) std::printf("%d criterion(s) failed\n", failures);
    else std::printf("all %zu criteria passed\n", results.size());
    return failures == 0 ? 0 : 1;
}
