// Runs the acceptance criteria and prints one line per criterion.
// Usage: acceptance [id ...]   (all twelve when no id is given)

#include <cstdio>
#include <cstdlib>
#include <vector>

#include "wqed/verify/acceptance.hpp"

int main(int argc, char** argv) {
    std::vector<int> ids;
    for (int i = 1; i < argc; ++i) {
        const int id = std::atoi(argv[i]);
        if (id < 1 || id > wqed::verify::kCriterionCount) {
            std::fprintf(stderr, "criterion ids are 1-%d\n", wqed::verify::kCriterionCount);
            return 2;
        }
        ids.push_back(id);
    }
    if (ids.empty())
        for (int id = 1; id <= wqed::verify::kCriterionCount; ++id) ids.push_back(id);

    int failed = 0;
    for (int id : ids) {
        const auto r = wqed::verify::run_criterion(id);
        std::printf("[%s] criterion %2d  %-30s %7.1fs  %s\n", r.passed ? "PASS" : "FAIL", r.id, r.title.c_str(),
                    r.seconds, r.detail.c_str());
        std::fflush(stdout);
        failed += r.passed ? 0 : 1;
    }
    return failed == 0 ? 0 : 1;
}
