#include <doctest.h>

#include <random>

#include "lrb/oracle.hpp"
#include "lrb/tableau.hpp"

using namespace lrb;

namespace {
Word random_word(std::mt19937& g, int len, int maxv) {
    std::uniform_int_distribution<int> d(1, maxv);
    Word w(len);
    for (int& x : w) x = d(g);
    return w;
}
}  // namespace

TEST_CASE("shapes and columns") {
    Tableau t = from_columns({{1, 2, 3}, {1, 3}, {2}});
    CHECK(t.outer == Partition{3, 2, 1});
    CHECK(t.rows == std::vector<std::vector<int>>{{1, 1, 2}, {2, 3}, {3}});
    CHECK(is_semistandard(t));
    CHECK(t.columns() == std::vector<Column>{{1, 2, 3}, {1, 3}, {2}});
    Tableau r = rotated_empty({2, 2, 1});
    CHECK(r.outer == Partition{2, 2, 2});
    CHECK(r.inner == Partition{1});
    CHECK(rotated_inner({3, 1}) == Partition{2});
}

TEST_CASE("semistandard enumeration counts Kostka numbers") {
    // SSYT of shape (2,1) in 3 letters: 8; of (2,2) in 3 letters: 6
    CHECK(enumerate_sst({2, 1}, {}, 3).size() == 8);
    CHECK(enumerate_sst({2, 2}, {}, 3).size() == 6);
    CHECK(enumerate_sst({3}, {}, 2).size() == 4);
    CHECK(enumerate_sst({2, 1}, {1}, 2).size() == 4);
    for (auto& t : enumerate_sst({3, 2}, {1}, 3)) CHECK(is_semistandard(t));
}

TEST_CASE("insertion normal form agrees with row insertion oracle") {
    std::mt19937 g(7);
    for (int k = 0; k < 300; ++k) {
        Word w = random_word(g, 1 + k % 9, 4);
        Tableau a = insertion_normal_form(w), b = oracle::knuth_normal_form(w);
        CHECK(a == b);
        CHECK(is_semistandard(a));
        CHECK(insertion_normal_form(reading_word(a)) == a);  // idempotent
    }
}

TEST_CASE("insertion normal form small cases") {
    // words read columns top to bottom, right to left: an increasing word is a column
    CHECK(insertion_normal_form({1, 2, 3}).rows == std::vector<std::vector<int>>{{1}, {2}, {3}});
    CHECK(insertion_normal_form({3, 2, 1}).rows == std::vector<std::vector<int>>{{1, 2, 3}});
    CHECK(reading_word(highest_tableau({3, 2})) == Word{1, 1, 2, 1, 2});
    Tableau h = highest_tableau({3, 2});
    CHECK(insertion_normal_form(reading_word(h)) == h);
    CHECK(is_l_highest(h));
    CHECK(knuth_equivalent(insertion_normal_form({2, 1, 3}), insertion_normal_form({2, 3, 1})));
}

TEST_CASE("crystal operators are partial inverses and respect the signature") {
    std::mt19937 g(11);
    for (int k = 0; k < 200; ++k) {
        Word w = random_word(g, 7, 4);
        for (int i = 1; i <= 3; ++i) {
            auto f = f_word(i, w);
            CHECK(f.has_value() == (phi_word(i, w) > 0));
            if (f) {
                CHECK(e_word(i, *f) == w);
                CHECK(eps_word(i, *f) == eps_word(i, w) + 1);
            }
            auto e = e_word(i, w);
            CHECK(e.has_value() == (eps_word(i, w) > 0));
            if (e) CHECK(f_word(i, *e) == w);
        }
    }
    Tableau t = from_columns({{1, 2}, {1}});
    auto f = crystal_f(2, t);
    REQUIRE(f);
    CHECK(is_semistandard(*f));
    CHECK(crystal_e(2, *f) == t);
    CHECK(eps_i(1, t) == 0);
    CHECK(phi_i(1, t) == 1);
}

TEST_CASE("lattice conditions") {
    CHECK(is_lattice_word({1, 1, 2, 1, 2, 3}));
    CHECK_FALSE(is_lattice_word({1, 2, 2}));
    CHECK(is_anti_lattice_word({1, 2}, 2));
    CHECK_FALSE(is_anti_lattice_word({2, 1}, 2));
    CHECK(is_anti_lattice_word({1, 2, 1, 2, 2}, 2));
}
