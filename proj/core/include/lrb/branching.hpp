#pragma once

#include <string>
#include <vector>

#include "lrb/partitions.hpp"

namespace lrb {

enum class Group { O, Sp, B, C };
Group parse_group(const std::string& s);
std::string group_name(Group g);

enum Method : unsigned { DIRECT = 1, BARRED = 2, FLAGGED = 4, ALL_METHODS = 7 };

struct BranchingQuery {
    int n = 0;
    Partition lambda, mu;
    Group group = Group::O;
};

struct DeltaTerm {
    Partition delta;
    long long barred = 0, flagged = 0;
};

struct BranchingResult {
    std::vector<DeltaTerm> terms;  // every delta in range, zero terms included
    long long direct = -1, barred = -1, flagged = -1;
};

// throws std::invalid_argument on a malformed query
void check_query(const BranchingQuery& q);

// delta range: |delta| = |lambda| - |mu|, delta in lambda, l(delta) <= n, in the group's family
std::vector<Partition> delta_range(const BranchingQuery& q);

BranchingResult multiplicity(const BranchingQuery& q, unsigned methods = ALL_METHODS);
long long multiplicity_value(const BranchingQuery& q, Method m);

// Littlewood's sum; refuses outside l(lambda) <= n/2
long long littlewood_stable(const BranchingQuery& q);

// [lambda : mu] + [lambda : mu_bar] when the two differ
long long double_bracket(int n, const Partition& lambda, const Partition& mu);

struct EWCheck {
    long long plus = 0, minus = 0, difference = 0, flagged = 0;
    bool equal = false;
};
// mu = (d, 2^a, 1^b, 0^c), nu = (d, 2^c, 1^b, 0^a), n = 1 + a + b + c
EWCheck enright_willenbring_check(int n, int a, int b, int c, int d, const Partition& lambda);

}  // namespace lrb
