#include <doctest.h>

#include "lrb/branching.hpp"
#include "lrb/flags.hpp"
#include "lrb/lr.hpp"
#include "lrb/spinor.hpp"

using namespace lrb;

namespace {
Tableau rows_of(const Partition& outer, std::vector<std::vector<int>> rows) {
    Tableau t = empty_of_shape(outer);
    t.rows = std::move(rows);
    return t;
}
}  // namespace

TEST_CASE("context") {
    auto c = make_context(8, {2, 2, 2, 1, 1});
    CHECK(c.p == 5);
    CHECK(c.q == 3);
    CHECK(c.r == 3);  // negative case: n - p
    auto d = make_context(8, {4, 3, 3, 2});
    CHECK(d.p == 4);
    CHECK(d.r == 4);
}

TEST_CASE("row side goldens") {
    auto ctx = make_context(8, {2, 2, 2, 1, 1});
    Tableau Sa = rows_of({5, 3}, {{1, 3, 3, 3, 5}, {2, 4, 4}});
    auto fa = flag_sequences_row(Sa, ctx, {4, 2, 2, 2, 2});
    CHECK(fa.m == std::vector<int>{1, 3, 5, 7, 8});
    CHECK(fa.nseq == std::vector<int>{2, 4, 6});
    CHECK(is_barred_D_row(Sa, ctx, {4, 2, 2, 2, 2}));

    Tableau Sb = rows_of({5, 3}, {{1, 1, 3, 3, 5}, {2, 2, 4}});
    auto fb = flag_sequences_row(Sb, ctx, {4, 4, 2, 2});
    CHECK(fb.m == std::vector<int>{1, 3, 5, 6, 8});
    CHECK(fb.nseq == std::vector<int>{2, 4, 7});
    CHECK_FALSE(is_barred_D_row(Sb, ctx, {4, 4, 2, 2}));
}

TEST_CASE("companion side golden") {
    Partition mu{2, 2, 2, 1, 1};
    auto ctx = make_context(8, mu);
    Tableau U = from_rotated_columns(mu, {{2, 3, 6}, {1, 2, 3, 4, 6}});
    auto f = flag_sequences_companion(U, ctx);
    CHECK(f.m == std::vector<int>{1, 3, 5, 7, 8});
    CHECK(f.nseq == std::vector<int>{2, 4, 6});
    CHECK(is_flagged_D_companion(U, ctx));
}

TEST_CASE("row, companion and skew sides agree through psi") {
    long checked = 0;
    for (int n = 2; n <= 7; ++n)
        for (int k = 1; k <= 5; ++k)
            for (auto& mu : partitions_of(k, n)) {
                if (!in_P_O(n, mu)) continue;
                auto ctx = make_context(n, mu);
                for (int L = k; L <= 8; ++L)
                    for (auto& lam : partitions_of(L, n))
                        for (auto& d : delta_range({n, lam, mu, Group::O})) {
                            for (auto& w : enumerate_lr(conjugate(lam), conjugate(d), conjugate(mu), LrKind::LATTICE)) {
                                Tableau U = psi(w.companion, d, lam);
                                auto fr = flag_sequences_row(w.companion, ctx, d);
                                if (!fr.not_in_set) CHECK(fr == flag_sequences_companion(U, ctx));
                                CHECK(is_barred_D_row(w.companion, ctx, d) == is_flagged_D_companion(U, ctx));
                                ++checked;
                            }
                            for (auto& w : enumerate_lr(lam, d, mu, LrKind::ANTI_LATTICE)) {
                                CHECK(flag_from_skew(w.filling, ctx) == flag_sequences_companion(w.companion, ctx));
                                CHECK(is_flagged_D_skew(w.filling, ctx) == is_flagged_D_companion(w.companion, ctx));
                            }
                        }
            }
    CHECK(checked > 500);
}

TEST_CASE("types B and C conditions") {
    // sigma_i + 2i <= n + 1 on the rightmost column
    Tableau U = from_rotated_columns({1, 1}, {{1, 2}});
    CHECK(is_flagged_C(U, 4));
    CHECK_FALSE(is_flagged_C(from_rotated_columns({1, 1}, {{3, 4}}), 4));
    for (auto g : {Group::Sp, Group::B})
        for (int n = 2; n <= 6; ++n)
            for (int k = 0; k <= 4; ++k)
                for (auto& mu : partitions_of(k, g == Group::B ? n : n / 2))
                    for (int L = k; L <= 7; ++L)
                        for (auto& lam : partitions_of(L, n)) {
                            auto r = multiplicity({n, lam, mu, g}, BARRED | FLAGGED);
                            CHECK(r.barred == r.flagged);
                        }
}
