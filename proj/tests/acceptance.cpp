// Prints one PASS/FAIL line per acceptance criterion; exit status 1 if any fails.
// Usage: acceptance [--budget quick|desk|full] [criterion ids...]

#include <cstdio>
#include <cstring>
#include <set>
#include <string>

#include "checks/criteria.hpp"

int main(int argc, char** argv) {
    using namespace cellkit::checks;
    std::string budget = "full";
    std::set<int> only;
    for (int i = 1; i < argc; ++i) {
        if (std::strcmp(argv[i], "--budget") == 0 && i + 1 < argc)
            budget = argv[++i];
        else
            only.insert(std::stoi(argv[i]));
    }
    Context ctx(budget_named(budget));
    int failed = 0;
    for (const auto& c : criteria()) {
        if (!only.empty() && !only.count(c.id)) continue;
        const auto r = run_criterion(c, ctx);
        const bool ok = r.passed && r.within_limit;
        failed += ok ? 0 : 1;
        std::printf("%s  %2d  %-52s %8.2fs%s  %s\n", ok ? "PASS" : "FAIL", r.id, r.title.c_str(), r.seconds,
                    r.within_limit ? "" : " (over limit)", r.detail.c_str());
        std::fflush(stdout);
    }
    std::printf("%s: %d failing criteria\n", failed ? "FAILED" : "OK", failed);
    return failed ? 1 : 0;
}
