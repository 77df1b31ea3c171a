#include "obl/acceptance.hpp"

#include <cstdio>
#include <cstdlib>
#include <set>
#include <string>

int main(int argc, char** argv) {
    std::set<int> only;
    for (int i = 1; i < argc; ++i) only.insert(std::atoi(argv[i]));

    obl::AcceptanceOptions options;
    options.only = only;
    auto results = obl::run_acceptance(options);

    bool all = true;
    for (const auto& r : results) {
        std::printf("%s  [%2d] %s (%.2fs)%s%s\n", r.pass ? "PASS" : "FAIL", r.id, r.name.c_str(),
                    r.seconds, r.detail.empty() ? "" : "  ", r.detail.c_str());
        all = all && r.pass;
    }
    return all ? 0 : 1;
}
