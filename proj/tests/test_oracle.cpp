#include <doctest.h>

#include "lrb/oracle.hpp"

using namespace lrb;
using oracle::RootType;

TEST_CASE("Freudenthal agrees with the Weyl character formula up to rank 2") {
    for (int m = 1; m <= 2; ++m)
        for (auto t : {RootType::B, RootType::D}) {
            if (t == RootType::D && m < 2) continue;
            for (int w = 0; w <= 4; ++w)
                for (auto& mu : partitions_of(w, m)) CHECK(oracle::weyl_character_matches(oracle::root_system(t, m), mu));
        }
}

TEST_CASE("dimensions") {
    auto dim = [](RootType t, int m, const Partition& mu) {
        long long s = 0;
        for (auto& [w, c] : oracle::freudenthal(oracle::root_system(t, m), mu)) s += c;
        return s;
    };
    CHECK(dim(RootType::B, 2, {1}) == 5);
    CHECK(dim(RootType::B, 2, {1, 1}) == 10);
    CHECK(dim(RootType::B, 3, {2}) == 27);
    CHECK(dim(RootType::D, 3, {1, 1}) == 15);
    CHECK(dim(RootType::D, 4, {1}) == 8);
}

TEST_CASE("zero weight spaces") {
    CHECK(oracle::zero_weight_dim(RootType::B, 2, {1, 1}) == 2);
    CHECK(oracle::zero_weight_dim(RootType::D, 3, {1, 1}) == 3);
    CHECK(oracle::zero_weight_dim(RootType::B, 3, {1}) == 1);
    CHECK(oracle::zero_weight_dim(RootType::D, 3, {1}) == 0);
}

TEST_CASE("Lusztig t-analogue on adjoint representations") {
    // exponents of B_2: 1, 3; of D_3 = A_3: 1, 2, 3
    CHECK(oracle::lusztig_zero_weight(RootType::B, 2, {1, 1}) == Poly({0, 1, 0, 1}));
    CHECK(oracle::lusztig_zero_weight(RootType::D, 3, {1, 1}) == Poly({0, 1, 1, 1}));
    CHECK(oracle::lusztig_zero_weight(RootType::B, 3, {}) == Poly({1}));
}

TEST_CASE("simple root coordinates") {
    std::vector<int> c;
    CHECK(oracle::simple_coords(oracle::root_system(RootType::D, 3), {1, 1, 0}, c));
    CHECK(c == std::vector<int>{1, 1, 1});
    CHECK_FALSE(oracle::simple_coords(oracle::root_system(RootType::D, 3), {1, 0, 0}, c));
    CHECK(oracle::simple_coords(oracle::root_system(RootType::B, 2), {1, 0}, c));
    CHECK(c == std::vector<int>{1, 1});
}
