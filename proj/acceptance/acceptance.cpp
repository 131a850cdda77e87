// Acceptance suite: one line per criterion. Tolerances live with each check
// in src/verify.cpp; the seed below pins every sampled quantity.
#include <chrono>
#include <cstdio>
#include <cstring>
#include <string>

#include "swc/verify.hpp"

using namespace swc;

namespace {
constexpr unsigned long long kSeed = 20170518ULL;
}

int main(int argc, char** argv) {
    Profile prof = Profile::full;
    for (int i = 1; i < argc; ++i)
        if (std::strcmp(argv[i], "--quick") == 0) prof = Profile::quick;
    int failed = 0;
    for (int id : profile_criteria(prof)) {
        const Criterion& c = acceptance_criteria()[id - 1];
        auto start = std::chrono::steady_clock::now();
        auto checks = run_criterion(id, prof, kSeed);
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        int fails = 0, skips = 0;
        for (const auto& r : checks) {
            if (r.status == Status::fail) ++fails;
            if (r.status == Status::skipped) ++skips;
        }
        bool ok = fails == 0 && skips == 0 && !checks.empty();
        if (!ok) ++failed;
        std::printf("%s  %2d %-18s %3zu checks  %7.2fs  %s\n", ok ? "PASS" : "FAIL", id, c.key.c_str(), checks.size(),
                    secs, c.title.c_str());
        for (const auto& r : checks)
            if (r.status != Status::pass)
                std::printf("      %s %s measured=%g bound=%g tol=%g %s\n", status_name(r.status).c_str(), r.name.c_str(),
                            r.measured, r.bound, r.tolerance, r.detail.c_str());
        std::fflush(stdout);
    }
    std::printf("%s: %d criteria failed\n", failed == 0 ? "ACCEPTED" : "REJECTED", failed);
    return failed == 0 ? 0 : 1;
}
