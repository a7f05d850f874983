// One PASS/FAIL line per acceptance criterion, at full size and exact tolerance
// (criterion 9 uses the numeric tolerances inside verify_constant_term).

#include "mtp/verify.hpp"

#include <cstdio>
#include <cstring>

int main(int argc, char** argv) {
    mtp::SuiteOptions o;
    if (argc > 1 && std::strcmp(argv[1], "--threads") == 0 && argc > 2) o.threads = static_cast<unsigned>(std::atoi(argv[2]));
    int failed = 0;
    for (auto& s : mtp::suites()) {
        if (s.criterion == 0) continue;
        mtp::SuiteResult r = s.run(o);
        std::printf("%s criterion %d: %s [%s] checked=%zu failures=%zu time=%.1fs\n", r.passed ? "PASS" : "FAIL", s.criterion,
                    s.description.c_str(), s.name.c_str(), r.checked, r.failures, r.seconds);
        for (auto& m : r.messages) std::printf("    %s\n", m.c_str());
        std::fflush(stdout);
        failed += !r.passed;
    }
    std::printf("%d of 9 criteria failed\n", failed);
    return failed ? 1 : 0;
}
