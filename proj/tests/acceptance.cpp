#include <cstdio>

#include "lrb/verify.hpp"

int main() {
    bool all = true;
    for (auto& r : lrb::run_suite("all", 1800)) {
        std::printf("%s %d %s (%.2fs) %s\n", r.pass ? "PASS" : "FAIL", r.id, r.name.c_str(), r.seconds, r.detail.c_str());
        all = all && r.pass;
    }
    return all ? 0 : 1;
}
