#include <doctest.h>

#include <stdexcept>

#include "lrb/branching.hpp"
#include "lrb/spinor.hpp"

using namespace lrb;

TEST_CASE("golden n = 8") {
    BranchingQuery q{8, {5, 4, 4, 3, 2, 2}, {2, 2, 2, 1, 1}, Group::O};
    auto r = multiplicity(q);
    CHECK(r.direct == 1);
    CHECK(r.barred == 1);
    CHECK(r.flagged == 1);
    bool seen_a = false, seen_b = false;
    for (auto& t : r.terms) {
        if (t.delta == Partition{4, 2, 2, 2, 2}) {
            seen_a = true;
            CHECK(t.barred == 1);
            CHECK(t.flagged == 1);
        }
        if (t.delta == Partition{4, 4, 2, 2}) {
            seen_b = true;
            CHECK(t.barred == 0);
            CHECK(t.flagged == 0);
        }
    }
    CHECK(seen_a);
    CHECK(seen_b);
    auto ew = enright_willenbring_check(8, 2, 2, 3, 2, q.lambda);
    CHECK(ew.plus == 2);
    CHECK(ew.minus == 1);
    CHECK(ew.equal);
}

TEST_CASE("trivial and small cases") {
    CHECK(multiplicity_value({4, {}, {}, Group::O}, FLAGGED) == 1);
    CHECK(multiplicity_value({4, {}, {}, Group::O}, DIRECT) == 1);
    // the standard representation restricts to the standard one
    CHECK(multiplicity_value({3, {1}, {1}, Group::O}, DIRECT) == 1);
    // Sym^2 C^n = trivial + traceless part
    CHECK(multiplicity_value({3, {2}, {}, Group::O}, FLAGGED) == 1);
    CHECK(multiplicity_value({3, {2}, {2}, Group::O}, FLAGGED) == 1);
    CHECK(multiplicity_value({3, {1, 1}, {}, Group::O}, FLAGGED) == 0);
    // Lambda^2 C^4 for Sp_4 contains the trivial representation
    CHECK(multiplicity_value({4, {1, 1}, {}, Group::Sp}, FLAGGED) == 1);
    CHECK(multiplicity_value({4, {2}, {}, Group::Sp}, FLAGGED) == 0);
    // the determinant of O_n
    CHECK(multiplicity_value({3, {1, 1, 1}, {1, 1, 1}, Group::O}, FLAGGED) == 1);
    CHECK(multiplicity_value({3, {1, 1, 1}, {}, Group::O}, FLAGGED) == 0);
}

TEST_CASE("outside the stable range the Littlewood sum overcounts") {
    // O_2: lambda = (1,1) is the determinant, mu = (1,1) is in P(O_2)
    BranchingQuery q{2, {1, 1}, {1, 1}, Group::O};
    CHECK(multiplicity_value(q, FLAGGED) == 1);
    CHECK_THROWS_AS(littlewood_stable(q), std::invalid_argument);
    // n = 3, lambda = (2,2): Littlewood gives 1 for mu = (), the true value is 0
    BranchingQuery r{3, {2, 2}, {}, Group::O};
    long long naive = 0;
    for (auto& d : delta_range(r)) naive += d == Partition{2, 2} ? 1 : 0;
    CHECK(naive == 1);
    CHECK(multiplicity_value(r, DIRECT) == multiplicity_value(r, FLAGGED));
}

TEST_CASE("three methods agree, n <= 5") {
    for (int n = 1; n <= 5; ++n)
        for (int k = 0; k <= 5; ++k)
            for (auto& mu : partitions_of(k, n)) {
                if (!in_P_O(n, mu)) continue;
                for (int L = k; L <= 7; ++L)
                    for (auto& lam : partitions_of(L, n)) {
                        auto r = multiplicity({n, lam, mu, Group::O});
                        CHECK(r.direct == r.barred);
                        CHECK(r.barred == r.flagged);
                        if (2 * length(lam) <= n) CHECK(littlewood_stable({n, lam, mu, Group::O}) == r.flagged);
                    }
            }
}

TEST_CASE("input validation") {
    CHECK_THROWS_AS(multiplicity({2, {1, 1, 1}, {}, Group::O}), std::invalid_argument);
    CHECK_THROWS_AS(multiplicity({3, {2}, {1, 1, 1, 1}, Group::O}), std::invalid_argument);
    CHECK_THROWS_AS(multiplicity({4, {2}, {1, 1, 1}, Group::Sp}), std::invalid_argument);
    CHECK_THROWS_AS(multiplicity({4, {2}, {}, Group::Sp}, DIRECT), std::invalid_argument);
    CHECK_THROWS_AS(parse_group("SO"), std::invalid_argument);
    CHECK(group_name(parse_group("C")) == "C");
    CHECK_THROWS_AS(enright_willenbring_check(8, 2, 2, 2, 2, {}), std::invalid_argument);
}

TEST_CASE("delta range") {
    auto ds = delta_range({8, {5, 4, 4, 3, 2, 2}, {2, 2, 2, 1, 1}, Group::O});
    CHECK(ds.size() == 4);
    for (auto& d : ds) {
        CHECK(weight(d) == 12);
        CHECK(is_in_family(d, Family::EVEN_ROWS));
    }
    for (auto& d : delta_range({6, {3, 3, 2}, {1, 1}, Group::Sp})) CHECK(is_in_family(d, Family::EVEN_COLUMNS));
}
