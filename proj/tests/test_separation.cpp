#include <doctest.h>

#include <stdexcept>

#include <set>

#include "lrb/branching.hpp"
#include "lrb/flags.hpp"
#include "lrb/separation.hpp"

using namespace lrb;

namespace {
using TC = TwoColumn;
SpinorElement example_313() {
    return {8, {4, 3, 3, 2},
            {TC{Kind::T, 4, {1, 3, 4, 5}, {1, 2}}, TC{Kind::T, 3, {1, 3, 4}, {1, 2}}, TC{Kind::T, 3, {1, 5, 6}, {1, 4}},
             TC{Kind::T, 2, {1, 2, 3, 5}, {1, 2, 3, 4}}}};
}
ColumnTuple tuple_313() {
    ColumnTuple t;
    t.cols = {{}, {1, 2, 3, 4}, {1, 2, 3, 5}, {1, 4}, {1, 5, 6}, {1, 2}, {1, 3, 4}, {1, 2}, {1, 3, 4, 5}};
    t.tails = {0, 0, 2, 0, 3, 0, 3, 0, 4};
    return t;
}
}  // namespace

TEST_CASE("sliding: closed and operator forms") {
    auto t = tuple_313();
    for (int j : {6, 4, 2}) CHECK(sliding_closed(j, t) == sliding_operator(j, t));
    // case (ii): U_3(1) = 4 > U_2(2) = 3
    auto s2 = sliding_closed(2, t);
    CHECK(s2.cols[3] == Column{1, 5});
    CHECK(s2.cols[2] == Column{1, 2, 3, 4});
    CHECK(s2.tails[3] == 2);
    CHECK(s2.tails[2] == 0);
    // case (i), which on reachable states only meets an empty U_{j+1}
    ColumnTuple c;
    c.cols = {{}, {1, 2}, {1, 2, 3, 4}, {}};
    c.tails = {0, 0, 2, 0};
    auto s = sliding_closed(2, c);
    CHECK(s.cols[3] == Column{3, 4});
    CHECK(s.cols[2] == Column{1, 2});
    CHECK(s == sliding_operator(2, c));
    // equal entries are outside the domain
    c.cols[3] = {3};  // U_3(1) = U_2(2) = 3
    CHECK_THROWS_AS(sliding_closed(2, c), std::logic_error);
    // no tail: identity
    CHECK(sliding_closed(1, t) == t);
}

TEST_CASE("sliding: closed forms commute, operator forms only in descending order") {
    auto t = tuple_313();
    CHECK(sliding_closed(6, sliding_closed(4, t)) == sliding_closed(4, sliding_closed(6, t)));
    CHECK(sliding_closed(2, sliding_closed(6, t)) == sliding_closed(6, sliding_closed(2, t)));
    CHECK(sliding_operator(4, sliding_operator(6, t)) == sliding_closed(4, sliding_closed(6, t)));
    // after S_4 the column U_5 carries a tail, so F_5 in case (ii) of S_6 vanishes
    CHECK_THROWS_AS(sliding_operator(6, sliding_operator(4, t)), std::logic_error);
}

TEST_CASE("bicrystal operators invert each other") {
    auto t = tuple_313();
    for (int j = 1; j + 1 < (int)t.cols.size(); ++j) {
        auto f = bicrystal_F(j, t);
        if (f) CHECK(bicrystal_E(j, *f) == t);
        auto e = bicrystal_E(j, t);
        if (e) CHECK(bicrystal_F(j, *e) == t);
    }
}

TEST_CASE("separation goldens") {
    SlideAudit audit;
    std::vector<SlideTrace> trace;
    auto r = separate(example_313(), -1, &audit, &trace);
    CHECK(r.delta == Partition{4, 4, 2, 2});
    CHECK(r.tail.rows == std::vector<std::vector<int>>{{1, 1, 1, 1}, {3, 3, 5, 5}, {4, 4, 6}, {5}});
    CHECK(r.barred);
    CHECK(audit.clean());
    CHECK(audit.applications > 0);
    CHECK_FALSE(trace.empty());

    SpinorElement neg{9, {4, 3, 3, 2, 1},
                      {TC{Kind::T, 4, {1, 3, 4, 5}, {1, 2}}, TC{Kind::T, 3, {1, 3, 4}, {1, 2}},
                       TC{Kind::T, 3, {1, 5, 6}, {1, 4}}, TC{Kind::T, 2, {1, 2, 3, 7}, {1, 2, 3, 6}},
                       TC{Kind::SP_MINUS, 0, {1, 2, 3, 4, 5}, {}}}};
    r = separate(neg, -1, &audit);
    CHECK(r.delta == Partition{6, 4, 2, 2, 2});
    CHECK(r.tail.rows == std::vector<std::vector<int>>{{1, 1, 1, 1, 3}, {3, 3, 5, 7}, {4, 4, 6}, {5}});
    CHECK(audit.clean());

    SpinorElement sm{3, {2, 1}, {TC{Kind::T, 2, {1, 2, 3, 7}, {1, 2, 3, 6}}, TC{Kind::SP_MINUS, 0, {1, 2, 3, 4, 5}, {}}}};
    r = separate(sm);
    CHECK(r.columns == std::vector<Column>{{1, 2, 3, 7}, {1, 2, 3}, {1, 2, 3, 4, 5, 6}});
    CHECK(r.tails == std::vector<int>{2, 1, 0});
    CHECK(r.delta == Partition{6, 2, 2});
}

TEST_CASE("padding") {
    SpinorElement sm{3, {2, 1}, {TC{Kind::T, 2, {1, 2, 3, 7}, {1, 2, 3, 6}}, TC{Kind::SP_MINUS, 0, {1, 2, 3, 4, 5}, {}}}};
    int a = default_padding(sm);
    CHECK(a % 2 == 0);
    CHECK(separate(sm, a) == separate(sm, a + 2));
    CHECK(separate(sm, a) == separate(sm, a + 10));
    CHECK_THROWS_AS(pad_negative(sm, 3), std::invalid_argument);
    CHECK_THROWS_AS(pad_negative(example_313(), 20), std::invalid_argument);
    auto p = pad_negative(sm, a);
    CHECK(validate_element(p));
}

TEST_CASE("separation is a bijection onto barred tableaux, n <= 5") {
    for (int n = 1; n <= 5; ++n)
        for (int k = 0; k <= 6; ++k)
            for (auto& mu : partitions_of(k, n)) {
                if (!in_P_O(n, mu)) continue;
                for (int L = k; L <= 6; ++L)
                    for (auto& lam : partitions_of(L, n)) {
                        std::set<std::pair<Partition, std::vector<std::vector<int>>>> image;
                        auto els = enumerate_LRd(mu, lam, n);
                        for (auto& e : els) {
                            auto r = separate(e);
                            CHECK(r.barred);
                            CHECK(r.lambda == lam);
                            image.insert({r.delta, r.tail.rows});
                        }
                        CHECK(image.size() == els.size());
                        CHECK((long long)els.size() == multiplicity_value({n, lam, mu, Group::O}, BARRED));
                    }
            }
}

TEST_CASE("n = 4 reconstruction inverts separation") {
    long both_cases[4] = {0, 0, 0, 0};
    for (int k = 0; k <= 4; ++k)
        for (auto& mu : partitions_of(k, 2)) {
            if (!(mu.empty() || length(mu) == 2)) continue;
            for (int L = k; L <= 10; ++L)
                for (auto& lam : partitions_of(L, 4))
                    for (auto& e : enumerate_LRd(mu, lam, 4)) {
                        auto r = separate(e);
                        CHECK(reconstruct_n4(r.delta, r.tail, mu) == e);
                        if (!mu.empty()) ++both_cases[flag_sequences_row(r.tail, make_context(4, mu), r.delta).m[1]];
                    }
        }
    CHECK(both_cases[2] > 0);
    CHECK(both_cases[3] > 0);
}
