#include "acceptance.hpp"

#include <cstdio>
#include <cstdlib>
#include <string>

int main(int argc, char** argv) {
    std::uint64_t seed = 0x5EED;
    if (argc > 1) seed = std::strtoull(argv[1], nullptr, 0);
    bool all = true;
    rotconj::run_acceptance(seed, [&](const rotconj::CriterionResult& r) {
        all = all && r.passed;
        std::printf("criterion %d [%s] %s (%.2fs): %s\n", r.id, r.title.c_str(), r.passed ? "PASS" : "FAIL",
                    r.seconds, r.detail.c_str());
        std::fflush(stdout);
    });
    return all ? EXIT_SUCCESS : EXIT_FAILURE;
}
