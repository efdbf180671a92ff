#pragma once

#include <optional>
#include <vector>

#include "lrb/poly.hpp"
#include "lrb/tableau.hpp"

namespace lrb {

struct EpsPhi {
    std::vector<int> eps, phi;  // index i-1 holds eps_i, phi_i for 1 <= i <= n-1
};
EpsPhi eps_phi(const Tableau& t, int n);

struct DistinguishedWitness {
    Tableau T;
    std::vector<int> eps, phi;
    Partition rho, lambda, delta;
    int exponent = 0;  // |phi + rho| / 2
};

// rho_T from the closed formula; lambda = phi + rho, delta = eps + rho as gl_n weights
std::optional<DistinguishedWitness> is_distinguished(const Tableau& t, int n);

// brute force: search every rho with c_i(rho) <= bound for which T is rho-distinguished;
// returns the minimal |rho| found (or -1)
int distinguished_by_search(const Tableau& t, int n, int bound);

// flagged distinguished tableaux in SST_n(mu^pi)
std::vector<DistinguishedWitness> flagged_distinguished(const Partition& mu, int n);
// the union over mu and mu_bar
std::vector<DistinguishedWitness> distinguished_set(const Partition& mu, int n);

enum class GenexpType { B, D };
Poly distinguished_sum(GenexpType type, int m, const Partition& mu);
// K^{so_n}_{mu,0}(t); throws std::logic_error if the division by 1 + t^m is not exact
Poly K_so_odd(const Partition& mu, int m);
Poly K_so_even(const Partition& mu, int m);

struct IdentityCheck {
    Poly lhs, rhs;  // both truncated at degree D
    bool equal = false;
};
IdentityCheck graded_identity_check(const Partition& mu, int n, int D);

}  // namespace lrb
