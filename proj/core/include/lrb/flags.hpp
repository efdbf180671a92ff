#pragma once

#include <vector>

#include "lrb/tableau.hpp"

namespace lrb {

// p = mu'_1, q = mu'_2; r = p when n - 2p >= 0, else n - p
struct FlagContext {
    int n = 0;
    Partition mu;
    int p = 0, q = 0, r = 0;
};
FlagContext make_context(int n, const Partition& mu);

struct FlagSequences {
    std::vector<int> m;     // length p
    std::vector<int> nseq;  // length q
    bool not_in_set = false;
    bool operator==(const FlagSequences&) const = default;
};

// U of shape mu^pi; sigma_i / tau_j read from the bottom of the two rightmost columns
FlagSequences flag_sequences_companion(const Tableau& U, const FlagContext& ctx);
bool is_flagged_D_companion(const Tableau& U, const FlagContext& ctx);

// S of shape mu' (straight); s = first row, t = second row
FlagSequences flag_sequences_row(const Tableau& S, const FlagContext& ctx, const Partition& delta);
bool is_barred_D_row(const Tableau& S, const FlagContext& ctx, const Partition& delta);

// skew filling of lam/delta with content mu^pi (entries 1..p)
FlagSequences flag_from_skew(const Tableau& filling, const FlagContext& ctx);
bool is_flagged_D_skew(const Tableau& filling, const FlagContext& ctx);

// types B and C: sigma_i + 2i <= n + 1, resp. s_i > delta^rev_{2i}
bool is_flagged_C(const Tableau& U, int n);
bool is_barred_C(const Tableau& S, int n, const Partition& delta);
bool is_barred_B(const Tableau& S, int n, const Partition& delta);

}  // namespace lrb
