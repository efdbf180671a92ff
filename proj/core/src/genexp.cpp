#include "lrb/genexp.hpp"

#include <stdexcept>

#include "lrb/branching.hpp"
#include "lrb/flags.hpp"
#include "lrb/spinor.hpp"

namespace lrb {

EpsPhi eps_phi(const Tableau& t, int n) {
    if (t.max_entry() > n) throw std::invalid_argument("eps_phi: entry larger than n");
    EpsPhi r;
    for (int i = 1; i < n; ++i) {
        r.eps.push_back(eps_i(i, t));
        r.phi.push_back(phi_i(i, t));
    }
    return r;
}

// partition with c[i-1] columns of height i
static Partition from_fundamental(const std::vector<int>& c) {
    Partition p(c.size(), 0);
    int run = 0;
    for (int i = (int)c.size(); i >= 1; --i) {
        run += c[i - 1];
        p[i - 1] = run;
    }
    return canonical(p);
}

static int count_entry(const Tableau& t, int v) {
    int k = 0;
    for (auto& row : t.rows)
        for (int x : row) k += x == v;
    return k;
}

std::optional<DistinguishedWitness> is_distinguished(const Tableau& t, int n) {
    auto ep = eps_phi(t, n);
    int top = count_entry(t, n);
    // c_n(lambda) = rho_n + #n must vanish when n is odd
    if (n % 2 == 1 && top > 0) return std::nullopt;
    std::vector<int> rho(n, 0), lam(n, 0), del(n, 0);
    for (int i = 1; i < n; ++i) {
        int e = ep.eps[i - 1], f = ep.phi[i - 1];
        if (i % 2 == 1) {
            if (f != 0 || e % 2 != 0) return std::nullopt;
        } else {
            rho[i - 1] = e % 2;
        }
        lam[i - 1] = f + rho[i - 1];
        del[i - 1] = e + rho[i - 1];
    }
    lam[n - 1] = top;
    DistinguishedWitness w;
    w.T = t;
    w.eps = ep.eps;
    w.phi = ep.phi;
    w.rho = from_fundamental(rho);
    w.lambda = from_fundamental(lam);
    w.delta = from_fundamental(del);
    w.exponent = weight(w.lambda) / 2;
    return w;
}

int distinguished_by_search(const Tableau& t, int n, int bound) {
    auto ep = eps_phi(t, n);
    int top = count_entry(t, n);
    std::vector<int> c(n, 0);
    int best = -1;
    while (true) {
        bool ok = true;
        for (int i = 1; i <= n && ok; ++i) {
            int e = i < n ? ep.eps[i - 1] : 0;
            int f = i < n ? ep.phi[i - 1] : top;
            if ((e + c[i - 1]) % 2) ok = false;               // delta has even rows
            if (i % 2 == 1 && f + c[i - 1] != 0) ok = false;  // lambda has even columns
        }
        if (ok) {
            int w = 0;
            for (int i = 1; i <= n; ++i) w += i * c[i - 1];
            if (best < 0 || w < best) best = w;
        }
        int k = 0;
        while (k < n && c[k] == bound) c[k++] = 0;
        if (k == n) break;
        ++c[k];
    }
    return best;
}

std::vector<DistinguishedWitness> flagged_distinguished(const Partition& mu0, int n) {
    Partition mu = canonical(mu0);
    auto ctx = make_context(n, mu);
    Tableau shape = rotated_empty(mu);
    std::vector<DistinguishedWitness> out;
    for (auto& t : enumerate_sst(shape.outer, shape.inner, n)) {
        auto w = is_distinguished(t, n);
        if (w && is_flagged_D_companion(t, ctx)) out.push_back(*w);
    }
    return out;
}

std::vector<DistinguishedWitness> distinguished_set(const Partition& mu, int n) {
    auto w = orthogonal_weight(n, mu);
    auto out = flagged_distinguished(w.mu, n);
    if (w.mu_bar != w.mu) {
        auto more = flagged_distinguished(w.mu_bar, n);
        out.insert(out.end(), more.begin(), more.end());
    }
    return out;
}

Poly distinguished_sum(GenexpType type, int m, const Partition& mu) {
    if (m < 1) throw std::invalid_argument("rank must be positive");
    if (type == GenexpType::D && m < 2) throw std::invalid_argument("so_2 is not covered");
    if (length(mu) > m) throw std::invalid_argument("l(mu) > m");
    int n = type == GenexpType::B ? 2 * m + 1 : 2 * m;
    Poly s;
    for (auto& w : distinguished_set(mu, n)) s += Poly::monomial(w.exponent);
    return s;
}

Poly K_so_odd(const Partition& mu, int m) { return distinguished_sum(GenexpType::B, m, mu); }

Poly K_so_even(const Partition& mu, int m) {
    Poly s = distinguished_sum(GenexpType::D, m, mu);
    bool ok = false;
    Poly q = s.divided_by(Poly::monomial(0) + Poly::monomial(m), ok);
    if (!ok) throw std::logic_error("K_so_even: sum is not divisible by 1 + t^m");
    return q;
}

IdentityCheck graded_identity_check(const Partition& mu, int n, int D) {
    IdentityCheck r;
    for (auto& lam : enumerate_family(Family::EVEN_COLUMNS, 2 * D, n)) {
        long long v = double_bracket(n, lam, mu);
        if (v) r.lhs += Poly::monomial(weight(lam) / 2, v);
    }
    Poly s;
    for (auto& w : distinguished_set(mu, n)) s += Poly::monomial(w.exponent);
    std::vector<int> degs;
    for (int i = 1; i <= n / 2; ++i) degs.push_back(2 * i);
    r.rhs = (inverse_product_series(degs, D) * s).truncated(D);
    r.lhs = r.lhs.truncated(D);
    r.equal = r.lhs == r.rhs;
    return r;
}

}  // namespace lrb
