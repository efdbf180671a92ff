#pragma once

// Brute-force checkers.  Nothing here may depend on flags, spinor or separation.

#include <map>
#include <vector>

#include "lrb/partitions.hpp"
#include "lrb/poly.hpp"
#include "lrb/tableau.hpp"

namespace lrb::oracle {

// all skew SST of lam/mu with content nu, filtered by the row-reading lattice rule
long long lr_brute(const Partition& lam, const Partition& mu, const Partition& nu);

// row (Schensted) insertion of the reversed word; a different algorithm from word_insert
Tableau knuth_normal_form(const Word& w);

enum class RootType { B, D };

struct RootSystem {
    RootType type;
    int m;
    std::vector<std::vector<int>> positive;  // epsilon coordinates
    std::vector<int> two_rho;
};
RootSystem root_system(RootType t, int m);

// epsilon-coordinate weight -> simple-root coordinates; false if not in the root lattice
bool simple_coords(const RootSystem& rs, const std::vector<int>& wt, std::vector<int>& out);

// weight multiplicities of V^mu by Freudenthal's recursion (all weights)
std::map<std::vector<int>, long long> freudenthal(const RootSystem& rs, const Partition& mu);
long long zero_weight_dim(RootType t, int m, const Partition& mu);

// Weyl character formula: A_{mu+rho} == ch * A_rho, Laurent polynomials in doubled coords
bool weyl_character_matches(const RootSystem& rs, const Partition& mu);

// Lusztig t-analogue of the zero weight multiplicity via the t-Kostant partition function
Poly lusztig_zero_weight(RootType t, int m, const Partition& mu);

}  // namespace lrb::oracle
