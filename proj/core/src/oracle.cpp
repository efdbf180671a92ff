#include "lrb/oracle.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>

namespace lrb::oracle {

long long lr_brute(const Partition& lam0, const Partition& mu0, const Partition& nu0) {
    Partition lam = canonical(lam0), mu = canonical(mu0), nu = canonical(nu0);
    if (weight(lam) != weight(mu) + weight(nu) || !contains(lam, mu)) return 0;
    int p = length(nu);
    // row-major cells
    std::vector<std::pair<int, int>> cells;
    for (int r = 0; r < length(lam); ++r)
        for (int c = part(mu, r + 1); c < part(lam, r + 1); ++c) cells.push_back({r, c});
    std::map<std::pair<int, int>, int> val;
    long long count = 0;
    std::vector<int> cnt(p + 1, 0);
    std::function<void(size_t)> rec = [&](size_t k) {
        if (k == cells.size()) {
            for (int i = 1; i <= p; ++i)
                if (cnt[i] != part(nu, i)) return;
            // rows right to left, top to bottom
            Word w;
            for (int r = 0; r < length(lam); ++r)
                for (int c = part(lam, r + 1) - 1; c >= part(mu, r + 1); --c) w.push_back(val[{r, c}]);
            std::vector<int> seen(p + 2, 0);
            for (int x : w) {
                ++seen[x];
                if (x > 1 && seen[x] > seen[x - 1]) return;
            }
            ++count;
            return;
        }
        auto [r, c] = cells[k];
        for (int v = 1; v <= p; ++v) {
            if (cnt[v] >= part(nu, v)) continue;
            auto left = val.find({r, c - 1});
            if (left != val.end() && c - 1 >= part(mu, r + 1) && left->second > v) continue;
            auto up = val.find({r - 1, c});
            if (r > 0 && c >= part(mu, r) && up != val.end() && up->second >= v) continue;
            val[{r, c}] = v;
            ++cnt[v];
            rec(k + 1);
            --cnt[v];
            val.erase({r, c});
        }
    };
    rec(0);
    return count;
}

Tableau knuth_normal_form(const Word& w) {
    std::vector<std::vector<int>> rows;
    for (auto it = w.rbegin(); it != w.rend(); ++it) {
        int a = *it;
        for (size_t r = 0;; ++r) {
            if (r == rows.size()) {
                rows.push_back({a});
                break;
            }
            auto pos = std::upper_bound(rows[r].begin(), rows[r].end(), a);
            if (pos == rows[r].end()) {
                rows[r].push_back(a);
                break;
            }
            std::swap(*pos, a);
        }
    }
    Partition sh;
    for (auto& r : rows) sh.push_back((int)r.size());
    Tableau t = empty_of_shape(sh);
    t.rows = rows;
    return t;
}

RootSystem root_system(RootType t, int m) {
    RootSystem rs{t, m, {}, std::vector<int>(m)};
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j) {
            std::vector<int> a(m, 0), b(m, 0);
            a[i] = 1, a[j] = -1;
            b[i] = 1, b[j] = 1;
            rs.positive.push_back(a);
            rs.positive.push_back(b);
        }
    if (t == RootType::B)
        for (int k = 0; k < m; ++k) {
            std::vector<int> a(m, 0);
            a[k] = 1;
            rs.positive.push_back(a);
        }
    // 2 rho = sum of positive roots
    for (auto& a : rs.positive)
        for (int i = 0; i < m; ++i) rs.two_rho[i] += a[i];
    return rs;
}

bool simple_coords(const RootSystem& rs, const std::vector<int>& wt, std::vector<int>& out) {
    int m = rs.m;
    out.assign(m, 0);
    std::vector<int> S(m + 1, 0);
    for (int i = 0; i < m; ++i) S[i + 1] = S[i] + wt[i];
    if (rs.type == RootType::B) {
        for (int i = 0; i < m; ++i) out[i] = S[i + 1];
        return true;
    }
    if (m == 1) return false;
    for (int i = 0; i + 2 < m; ++i) out[i] = S[i + 1];
    int a = S[m - 1] - wt[m - 1], b = S[m];
    if (a % 2 || b % 2) return false;
    out[m - 2] = a / 2;
    out[m - 1] = b / 2;
    return true;
}

static bool below(const RootSystem& rs, const std::vector<int>& hi, const std::vector<int>& lo) {
    std::vector<int> d(rs.m), c;
    for (int i = 0; i < rs.m; ++i) d[i] = hi[i] - lo[i];
    if (!simple_coords(rs, d, c)) return false;
    return std::all_of(c.begin(), c.end(), [](int x) { return x >= 0; });
}

// Weyl orbit representative; D keeps the sign parity on the last coordinate
static std::vector<int> dominant(const RootSystem& rs, std::vector<int> w) {
    int neg = 0;
    bool zero = false;
    for (int& x : w) {
        if (x < 0) ++neg, x = -x;
        if (x == 0) zero = true;
    }
    std::sort(w.begin(), w.end(), std::greater<int>());
    if (rs.type == RootType::D && neg % 2 && !zero && !w.empty()) w.back() = -w.back();
    return w;
}

static long long dot(const std::vector<int>& a, const std::vector<int>& b) {
    long long s = 0;
    for (size_t i = 0; i < a.size(); ++i) s += (long long)a[i] * b[i];
    return s;
}

std::map<std::vector<int>, long long> freudenthal(const RootSystem& rs, const Partition& mu0) {
    int m = rs.m;
    std::vector<int> mu(m, 0);
    for (int i = 0; i < m; ++i) mu[i] = part(mu0, i + 1);
    int bound = m ? mu[0] : 0;
    std::map<std::vector<int>, long long> memo;
    std::vector<int> B(m);
    for (int i = 0; i < m; ++i) B[i] = 2 * mu[i] + rs.two_rho[i];
    long long normB = dot(B, B);
    auto in_box = [&](const std::vector<int>& w) {
        return std::all_of(w.begin(), w.end(), [&](int x) { return x >= -bound && x <= bound; });
    };
    std::function<long long(const std::vector<int>&)> mult = [&](const std::vector<int>& lam) -> long long {
        if (!in_box(lam)) return 0;
        if (lam != dominant(rs, lam)) return mult(dominant(rs, lam));
        if (!below(rs, mu, lam)) return 0;
        if (lam == mu) return 1;
        auto it = memo.find(lam);
        if (it != memo.end()) return it->second;
        std::vector<int> A(m);
        for (int i = 0; i < m; ++i) A[i] = 2 * lam[i] + rs.two_rho[i];
        long long denom = normB - dot(A, A);
        long long num = 0;
        for (auto& a : rs.positive) {
            std::vector<int> w = lam;
            while (true) {
                for (int i = 0; i < m; ++i) w[i] += a[i];
                if (!in_box(w)) break;
                long long mw = mult(w);
                if (mw) num += 8 * dot(w, a) * mw;
            }
        }
        if (denom <= 0 || num % denom) throw std::logic_error("freudenthal: non-integral multiplicity");
        return memo[lam] = num / denom;
    };
    std::map<std::vector<int>, long long> out;
    std::vector<int> w(m, -bound);
    while (true) {
        long long v = mult(w);
        if (v) out[w] = v;
        int i = 0;
        while (i < m && w[i] == bound) w[i++] = -bound;
        if (i == m) break;
        ++w[i];
    }
    return out;
}

long long zero_weight_dim(RootType t, int m, const Partition& mu) {
    if (m == 0) return weight(mu) == 0 ? 1 : 0;
    auto ch = freudenthal(root_system(t, m), mu);
    auto it = ch.find(std::vector<int>(m, 0));
    return it == ch.end() ? 0 : it->second;
}

// signed permutations; D keeps an even number of sign changes
static void for_each_weyl(const RootSystem& rs, const std::function<void(const std::vector<int>&, const std::vector<int>&, int)>& fn) {
    int m = rs.m;
    std::vector<int> perm(m);
    std::iota(perm.begin(), perm.end(), 0);
    do {
        int inv = 0;
        for (int i = 0; i < m; ++i)
            for (int j = i + 1; j < m; ++j)
                if (perm[i] > perm[j]) ++inv;
        for (int mask = 0; mask < (1 << m); ++mask) {
            int flips = __builtin_popcount(mask);
            if (rs.type == RootType::D && flips % 2) continue;
            std::vector<int> sg(m);
            for (int i = 0; i < m; ++i) sg[i] = (mask >> i) & 1 ? -1 : 1;
            int sign = ((inv + flips) % 2) ? -1 : 1;
            fn(perm, sg, sign);
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
}

static std::vector<int> act(const std::vector<int>& perm, const std::vector<int>& sg, const std::vector<int>& v) {
    std::vector<int> w(v.size());
    for (size_t i = 0; i < v.size(); ++i) w[perm[i]] = sg[i] * v[i];
    return w;
}

bool weyl_character_matches(const RootSystem& rs, const Partition& mu) {
    int m = rs.m;
    using Laurent = std::map<std::vector<int>, long long>;
    auto ch = freudenthal(rs, mu);
    std::vector<int> top(m);
    for (int i = 0; i < m; ++i) top[i] = 2 * part(mu, i + 1) + rs.two_rho[i];
    Laurent lhs, arho;
    for_each_weyl(rs, [&](const std::vector<int>& p, const std::vector<int>& s, int sign) {
        lhs[act(p, s, top)] += sign;
        arho[act(p, s, rs.two_rho)] += sign;
    });
    Laurent rhs;
    for (auto& [w, c] : ch)
        for (auto& [v, d] : arho) {
            std::vector<int> k(m);
            for (int i = 0; i < m; ++i) k[i] = 2 * w[i] + v[i];
            rhs[k] += c * d;
        }
    auto clean = [](Laurent& l) {
        for (auto it = l.begin(); it != l.end();) it = it->second ? std::next(it) : l.erase(it);
    };
    clean(lhs);
    clean(rhs);
    return lhs == rhs;
}

Poly lusztig_zero_weight(RootType t, int m, const Partition& mu) {
    if (m == 0) return weight(mu) == 0 ? Poly({1}) : Poly();
    RootSystem rs = root_system(t, m);
    std::vector<std::vector<int>> roots;
    for (auto& a : rs.positive) {
        std::vector<int> c;
        simple_coords(rs, a, c);
        roots.push_back(c);
    }
    std::map<std::pair<size_t, std::vector<int>>, Poly> memo;
    std::function<Poly(size_t, const std::vector<int>&)> kostant = [&](size_t k, const std::vector<int>& c) -> Poly {
        if (k == roots.size())
            return std::all_of(c.begin(), c.end(), [](int x) { return x == 0; }) ? Poly({1}) : Poly();
        auto key = std::make_pair(k, c);
        auto it = memo.find(key);
        if (it != memo.end()) return it->second;
        Poly acc;
        std::vector<int> cur = c;
        for (int j = 0;; ++j) {
            acc += Poly::monomial(j) * kostant(k + 1, cur);
            bool ok = true;
            for (int i = 0; i < m; ++i) {
                cur[i] -= roots[k][i];
                if (cur[i] < 0) ok = false;
            }
            if (!ok) break;
        }
        return memo[key] = acc;
    };
    std::vector<int> top(m);
    for (int i = 0; i < m; ++i) top[i] = 2 * part(mu, i + 1) + rs.two_rho[i];
    Poly total;
    for_each_weyl(rs, [&](const std::vector<int>& p, const std::vector<int>& s, int sign) {
        auto w = act(p, s, top);
        std::vector<int> g(m), c;
        for (int i = 0; i < m; ++i) {
            int d = w[i] - rs.two_rho[i];
            if (d % 2) return;
            g[i] = d / 2;
        }
        if (!simple_coords(rs, g, c)) return;
        if (std::any_of(c.begin(), c.end(), [](int x) { return x < 0; })) return;
        Poly k = kostant(0, c);
        if (sign > 0) total += k;
        else total -= k;
    });
    return total;
}

}  // namespace lrb::oracle
