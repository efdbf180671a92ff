#include "lrb/flags.hpp"

#include <algorithm>
#include <stdexcept>

namespace lrb {

FlagContext make_context(int n, const Partition& mu0) {
    FlagContext c;
    c.n = n;
    c.mu = canonical(mu0);
    Partition mc = conjugate(c.mu);
    c.p = part(mc, 1);
    c.q = part(mc, 2);
    if (c.p + c.q > n) throw std::invalid_argument("make_context: mu'_1 + mu'_2 > n");
    c.r = n - 2 * c.p >= 0 ? c.p : n - c.p;
    // at n = 2p both readings give r = p
    if (n == 2 * c.p && c.r != n - c.p) throw std::logic_error("make_context: boundary mismatch");
    return c;
}

static int window_top(int i, const FlagContext& ctx) {
    return i <= ctx.r ? 2 * i - 1 : ctx.n - ctx.p + i;
}

// n_j = j-th smallest of {j+1..n} minus {m_{j+1..p}}
static bool fill_nseq(FlagSequences& fs, const FlagContext& ctx) {
    fs.nseq.assign(ctx.q, 0);
    for (int j = 1; j <= ctx.q; ++j) {
        int seen = 0;
        for (int k = j + 1; k <= ctx.n; ++k) {
            bool used = false;
            for (int i = j + 1; i <= ctx.p; ++i)
                if (fs.m[i - 1] == k) used = true;
            if (used) continue;
            if (++seen == j) {
                fs.nseq[j - 1] = k;
                break;
            }
        }
        if (!fs.nseq[j - 1]) return false;
    }
    return true;
}

// i-th entry from the bottom of column c (0-based absolute)
static int from_bottom(const Tableau& t, int c, int i) {
    int last = -1;
    for (int r = 0; r < t.num_rows(); ++r)
        if (t.has(r, c)) last = r;
    if (last - i + 1 < 0 || !t.has(last - i + 1, c)) throw std::invalid_argument("flags: column too short");
    return t.at(last - i + 1, c);
}

FlagSequences flag_sequences_companion(const Tableau& U, const FlagContext& ctx) {
    FlagSequences fs;
    if (ctx.p == 0) return fs;
    int right = U.num_cols() - 1;
    fs.m.resize(ctx.p);
    for (int i = 1; i <= ctx.p; ++i) {
        int sigma = from_bottom(U, right, i);
        fs.m[i - 1] = std::min(ctx.n - sigma + 1, window_top(i, ctx));
    }
    if (!fill_nseq(fs, ctx)) fs.not_in_set = true;
    return fs;
}

bool is_flagged_D_companion(const Tableau& U, const FlagContext& ctx) {
    auto fs = flag_sequences_companion(U, ctx);
    if (fs.not_in_set) return false;
    int left = U.num_cols() - 2;
    for (int j = 1; j <= ctx.q; ++j)
        if (from_bottom(U, left, j) + fs.nseq[j - 1] > ctx.n + 1) return false;
    return true;
}

FlagSequences flag_sequences_row(const Tableau& S, const FlagContext& ctx, const Partition& delta) {
    FlagSequences fs;
    if (ctx.p == 0) return fs;
    auto drev = reverse_padded(delta, ctx.n);
    fs.m.assign(ctx.p, 0);
    std::vector<bool> used(ctx.n + 2, false);
    for (int i = ctx.p; i >= 1; --i) {
        int s = S.rows[0][i - 1];
        int best = 0;
        for (int k = i; k <= std::min(window_top(i, ctx), ctx.n); ++k)
            if (!used[k] && drev[k - 1] < s) best = k;
        if (!best) {
            fs.not_in_set = true;
            return fs;
        }
        fs.m[i - 1] = best;
        used[best] = true;
    }
    if (!fill_nseq(fs, ctx)) fs.not_in_set = true;
    return fs;
}

bool is_barred_D_row(const Tableau& S, const FlagContext& ctx, const Partition& delta) {
    auto fs = flag_sequences_row(S, ctx, delta);
    if (fs.not_in_set) return false;
    auto drev = reverse_padded(delta, ctx.n);
    for (int j = 1; j <= ctx.q; ++j)
        if (S.rows[1][j - 1] <= drev[fs.nseq[j - 1] - 1]) return false;
    return true;
}

// row indices (1-based) holding v, leftmost occurrence of each row first: largest row first
static std::vector<int> rows_with(const Tableau& f, int v) {
    std::vector<int> rs;
    for (int r = f.num_rows() - 1; r >= 0; --r)
        for (int x : f.rows[r])
            if (x == v) rs.push_back(r + 1);
    return rs;
}

static bool skew_sigma_tau(const Tableau& f, const FlagContext& ctx, std::vector<int>& sigma, std::vector<int>& tau) {
    sigma.assign(ctx.p, 0);
    tau.assign(ctx.q, 0);
    for (int i = 1; i <= ctx.p; ++i) {
        auto rs = rows_with(f, ctx.p - i + 1);
        if (rs.empty()) return false;
        sigma[i - 1] = rs[0];
        if (i <= ctx.q) {
            if (rs.size() < 2) return false;
            tau[i - 1] = rs[1];
        }
    }
    return true;
}

FlagSequences flag_from_skew(const Tableau& f, const FlagContext& ctx) {
    FlagSequences fs;
    if (ctx.p == 0) return fs;
    std::vector<int> sigma, tau;
    if (!skew_sigma_tau(f, ctx, sigma, tau)) throw std::invalid_argument("flag_from_skew: content is not mu^pi");
    fs.m.resize(ctx.p);
    for (int i = 1; i <= ctx.p; ++i) fs.m[i - 1] = std::min(ctx.n - sigma[i - 1] + 1, window_top(i, ctx));
    if (!fill_nseq(fs, ctx)) fs.not_in_set = true;
    return fs;
}

bool is_flagged_D_skew(const Tableau& f, const FlagContext& ctx) {
    if (ctx.p == 0) return true;
    auto fs = flag_from_skew(f, ctx);
    if (fs.not_in_set) return false;
    std::vector<int> sigma, tau;
    skew_sigma_tau(f, ctx, sigma, tau);
    for (int j = 1; j <= ctx.q; ++j)
        if (tau[j - 1] + fs.nseq[j - 1] > ctx.n + 1) return false;
    return true;
}

bool is_flagged_C(const Tableau& U, int n) {
    if (U.num_cols() == 0) return true;
    int right = U.num_cols() - 1;
    int p = 0;
    for (int r = 0; r < U.num_rows(); ++r)
        if (U.has(r, right)) ++p;
    for (int i = 1; i <= p; ++i)
        if (from_bottom(U, right, i) + 2 * i > n + 1) return false;
    return true;
}

bool is_barred_C(const Tableau& S, int n, const Partition& delta) {
    if (S.rows.empty()) return true;
    auto drev = reverse_padded(delta, n);
    const auto& s = S.rows[0];
    for (int i = 1; i <= (int)s.size(); ++i) {
        if (2 * i > n) return false;
        if (s[i - 1] <= drev[2 * i - 1]) return false;
    }
    return true;
}

bool is_barred_B(const Tableau& S, int n, const Partition& delta) { return is_barred_C(S, n, delta); }

}  // namespace lrb
