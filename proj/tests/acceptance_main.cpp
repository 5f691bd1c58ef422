#include <cstdio>

#include "cpar/verify.hpp"

// One line per acceptance criterion. The exit status only reflects crashes;
// failing criteria are reported, not hidden.
int main() {
    int passed = 0, total = 0;
    cpar::run_all({}, [&](const cpar::CriterionResult& r) {
        ++total;
        passed += r.pass;
        std::printf("%s %2d %s: %s (%.2fs)\n", r.pass ? "PASS" : "FAIL", r.id, r.name.c_str(), r.detail.c_str(),
                    r.seconds);
        std::fflush(stdout);
    });
    std::printf("%d/%d criteria pass\n", passed, total);
    return 0;
}
