#pragma once

#include <string>
#include <vector>

namespace lrb {

struct CriterionReport {
    int id = 0;
    std::string name;
    bool pass = false;
    std::string detail;
    double seconds = 0;
    double limit = 0;  // wall-clock limit in seconds, 0 = none
};

// 1..10; budget caps the sweeps (seconds), a sweep that runs out fails
CriterionReport run_criterion(int id, double budget = 1800);

// "all", "branching", "genexp" or "separation"
std::vector<int> suite_members(const std::string& suite);
std::vector<CriterionReport> run_suite(const std::string& suite, double budget = 1800);

}  // namespace lrb
