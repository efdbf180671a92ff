#include <doctest.h>

#include "lrb/lr.hpp"
#include "lrb/oracle.hpp"

using namespace lrb;

TEST_CASE("LR counts agree with the brute-force oracle") {
    for (int w = 0; w <= 6; ++w)
        for (auto& lam : partitions_of(w, 4))
            for (int k = 0; k <= w; ++k)
                for (auto& mu : partitions_of(k, 4)) {
                    if (!contains(lam, mu)) continue;
                    for (auto& nu : partitions_of(w - k, 4)) {
                        long long a = lr_count(lam, mu, nu);
                        CHECK(a == oracle::lr_brute(lam, mu, nu));
                        CHECK(a == lr_count(lam, mu, nu, LrKind::ANTI_LATTICE));
                    }
                }
}

TEST_CASE("oracle symmetry in mu and nu") {
    for (int w = 0; w <= 6; ++w)
        for (auto& lam : partitions_of(w, 4))
            for (int k = 0; k <= w; ++k)
                for (auto& mu : partitions_of(k, 4))
                    for (auto& nu : partitions_of(w - k, 4))
                        CHECK(oracle::lr_brute(lam, mu, nu) == oracle::lr_brute(lam, nu, mu));
}

TEST_CASE("classical values") {
    CHECK(lr_count({3, 2, 1}, {2, 1}, {2, 1}) == 2);
    CHECK(lr_count({2, 1}, {1}, {1, 1}) == 1);
    CHECK(lr_count({4, 2}, {2}, {2, 1}) == 0);
}

TEST_CASE("companions and fillings invert each other") {
    for (auto kind : {LrKind::LATTICE, LrKind::ANTI_LATTICE})
        for (auto& w : enumerate_lr({4, 3, 2, 1}, {2, 1}, {3, 2, 1}, kind)) {
            CHECK(is_semistandard(w.filling));
            CHECK(companion_of(w.filling, {3, 2, 1}, kind) == w.companion);
            CHECK(filling_of(w.companion, {4, 3, 2, 1}, {2, 1}) == w.filling);
        }
}

TEST_CASE("anti-lattice enumeration reads the filling") {
    for (auto& w : enumerate_lr({7, 6, 4, 3, 2}, {6, 4, 2, 2}, {2, 2, 2, 1, 1}, LrKind::ANTI_LATTICE)) {
        CHECK(is_anti_lattice(w.filling, 5));
        CHECK(w.companion.outer == rotated_empty({2, 2, 2, 1, 1}).outer);
    }
}

TEST_CASE("psi golden and bijectivity") {
    Partition lam{7, 6, 4, 3, 2}, mu{6, 4, 2, 2}, nu{2, 2, 2, 1, 1};
    Tableau S = empty_of_shape({5, 3});
    S.rows = {{1, 3, 3, 5, 7}, {2, 4, 6}};
    Tableau U = psi(S, mu, lam);
    CHECK(U == from_rotated_columns(nu, {{2, 3, 5}, {1, 2, 3, 4, 5}}));
    CHECK(psi_inverse(U, mu, lam) == S);

    auto lat = enumerate_lr(conjugate(lam), conjugate(mu), conjugate(nu), LrKind::LATTICE);
    auto anti = enumerate_lr(lam, mu, nu, LrKind::ANTI_LATTICE);
    REQUIRE(lat.size() == anti.size());
    for (auto& w : lat) {
        Tableau u = psi(w.companion, mu, lam);
        bool found = false;
        for (auto& a : anti) found = found || a.companion == u;
        CHECK(found);
        CHECK(psi_inverse(u, mu, lam) == w.companion);
    }
}
