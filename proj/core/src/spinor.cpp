#include "lrb/spinor.hpp"

#include <algorithm>
#include <climits>
#include <functional>
#include <stdexcept>

namespace lrb {

bool pair_fits(const Column& L, const Column& R, int b) {
    for (int j = 0; j < (int)L.size(); ++j) {
        int k = j + b;
        if (k >= 0 && k < (int)R.size() && L[j] > R[k]) return false;
    }
    return true;
}

int minimal_offset(const Column& L, const Column& R) {
    for (int b = std::max(0, (int)R.size() - (int)L.size());; ++b)
        if (pair_fits(L, R, b)) return b;
}

static bool strictly_increasing(const Column& c) {
    for (size_t i = 1; i < c.size(); ++i)
        if (c[i - 1] >= c[i]) return false;
    return c.empty() || c[0] >= 1;
}

int residue(const TwoColumn& t) {
    if (t.is_sp()) return (int)t.left.size() % 2;
    if (t.kind == Kind::TBAR0) return 0;
    int b = t.b(), best = 0;
    for (int k = 1; k <= std::min(t.a, b); ++k) {
        if (!pair_fits(t.left, t.right, b - k)) break;
        best = k;
    }
    return best;
}

bool is_valid_component(const TwoColumn& t) {
    if (!strictly_increasing(t.left) || !strictly_increasing(t.right)) return false;
    switch (t.kind) {
    case Kind::SP_PLUS: return t.right.empty() && t.left.size() % 2 == 0;
    case Kind::SP_MINUS: return t.right.empty() && t.left.size() % 2 == 1;
    case Kind::TBAR0: {
        int b = (int)t.right.size() - (int)t.left.size();
        return t.a == 0 && t.left.size() % 2 == 1 && b >= 0 && b % 2 == 0 && pair_fits(t.left, t.right, b);
    }
    case Kind::T: {
        int b = t.b(), c = t.c();
        if (t.a < 0 || b < 0 || c < 0 || b % 2 || c % 2) return false;
        return pair_fits(t.left, t.right, b) && residue(t) <= 1;
    }
    }
    return false;
}

namespace {

// two-column grid: column 0 is L (rows b..), column 1 is R (rows 0..)
struct Grid {
    std::vector<int> col[2];  // 0 = empty
    Grid(const Column& L, const Column& R, int b) {
        int rows = std::max((int)R.size() + 1, b + (int)L.size()) + 1;
        col[0].assign(rows, 0);
        col[1].assign(rows, 0);
        for (size_t j = 0; j < L.size(); ++j) col[0][b + j] = L[j];
        for (size_t j = 0; j < R.size(); ++j) col[1][j] = R[j];
    }
    int get(int r, int c) const { return r >= 0 && r < (int)col[c].size() ? col[c][r] : 0; }
    Column extract(int c) const {
        Column out;
        for (int x : col[c])
            if (x) out.push_back(x);
        return out;
    }
};

}  // namespace

std::optional<ColumnPair> calE(const Column& L, const Column& R) {
    int b = minimal_offset(L, R);
    int c = (int)R.size() - b;
    int a = (int)L.size() - c;
    if (a <= 0) return std::nullopt;
    Grid g(L, R, b);
    int r = (int)R.size(), cc = 1;
    while (true) {
        int up = g.get(r - 1, cc);
        int left = cc == 1 ? g.get(r, 0) : 0;
        if (!up && !left) break;
        if (up >= left) {  // tie: from above
            g.col[cc][r] = up;
            g.col[cc][r - 1] = 0;
            --r;
        } else {
            g.col[1][r] = left;
            g.col[0][r] = 0;
            cc = 0;
        }
    }
    if (cc != 0 || r != b) throw std::logic_error("calE: hole did not exit at the top of L");
    return ColumnPair{g.extract(0), g.extract(1)};
}

std::optional<ColumnPair> calF(const Column& L, const Column& R) {
    int b = minimal_offset(L, R);
    if (b == 0) return std::nullopt;
    Grid g(L, R, b);
    int r = b - 1, cc = 0;
    while (true) {
        int down = g.get(r + 1, cc);
        int right = cc == 0 ? g.get(r, 1) : 0;
        if (!down && !right) break;
        if (down && (!right || down <= right)) {  // tie: from below
            g.col[cc][r] = down;
            g.col[cc][r + 1] = 0;
            ++r;
        } else {
            g.col[0][r] = right;
            g.col[1][r] = 0;
            cc = 1;
        }
    }
    if (cc != 1 || r != (int)R.size() - 1) throw std::logic_error("calF: hole did not exit at the bottom of R");
    return ColumnPair{g.extract(0), g.extract(1)};
}

static int normalized_tail(const TwoColumn& t) {
    int b = minimal_offset(t.left, t.right);
    return (int)t.left.size() - ((int)t.right.size() - b);
}

std::optional<TwoColumn> calE(const TwoColumn& t) {
    int a0 = normalized_tail(t);
    auto p = calE(t.left, t.right);
    if (!p) return std::nullopt;
    return TwoColumn{Kind::T, a0 - 1, p->first, p->second};
}

std::optional<TwoColumn> calF(const TwoColumn& t) {
    int a0 = normalized_tail(t);
    auto p = calF(t.left, t.right);
    if (!p) return std::nullopt;
    return TwoColumn{Kind::T, a0 + 1, p->first, p->second};
}

ColumnPair star_pair(const TwoColumn& t) {
    if (t.is_sp()) return {t.left, {}};
    if (residue(t) != 1) throw std::invalid_argument("star_pair: residue is not 1");
    auto p = calF(t.left, t.right);
    if (!p) throw std::logic_error("star_pair: F vanished");
    return *p;
}

ColumnPair lr_pair(const TwoColumn& t) {
    if (t.is_sp()) return {t.left, {}};
    ColumnPair p{t.left, t.right};
    for (int k = t.a - residue(t); k > 0; --k) {
        auto q = calE(p.first, p.second);
        if (!q) throw std::logic_error("lr_pair: E vanished");
        p = *q;
    }
    return p;
}

static bool admissible_T(const TwoColumn& t, const TwoColumn& s) {
    int a = t.a, rT = residue(t);
    int a2, rS, eps = 0;
    const Column& SL = s.left;
    if (s.is_sp()) {
        rS = (int)SL.size() % 2;
        a2 = rS;
        eps = s.kind == Kind::SP_MINUS;
    } else {
        rS = residue(s);
        a2 = s.a;
    }
    if (a < a2) return false;
    int rr = rT * rS;
    if ((int)t.right.size() > (int)SL.size() - a2 + 2 * rr) return false;

    Column LS = lr_pair(s).first;
    Column TR = rr ? star_pair(t).second : t.right;
    for (int i = 1; i <= std::min((int)TR.size(), (int)LS.size()); ++i)
        if (from_bottom(TR, i) > from_bottom(LS, i)) return false;

    Column RT = lr_pair(t).second;
    Column SLc = rr ? star_pair(s).first : SL;
    int shift = a - a2 + (rr ? eps : 0);
    for (int i = 1; i + shift <= (int)RT.size() && i <= (int)SLc.size(); ++i)
        if (from_bottom(RT, i + shift) > from_bottom(SLc, i)) return false;
    return true;
}

bool is_admissible(const TwoColumn& t, const TwoColumn& s) {
    if (t.kind == Kind::T) {
        if (s.kind == Kind::TBAR0) return admissible_T(t, TwoColumn{Kind::SP_MINUS, 0, s.left, {}});
        return admissible_T(t, s);
    }
    if (t.kind == Kind::TBAR0 && (s.kind == Kind::TBAR0 || s.kind == Kind::SP_MINUS)) {
        const Column& L = t.right;
        const Column& R = s.left;
        int b = (int)R.size() - (int)L.size();
        return L.size() % 2 == 1 && R.size() % 2 == 1 && b >= 0 && b % 2 == 0 && pair_fits(L, R, b);
    }
    throw std::invalid_argument("is_admissible: unsupported pair of kinds");
}

bool in_P_O(int n, const Partition& mu) {
    Partition c = conjugate(canonical(mu));
    return part(c, 1) + part(c, 2) <= n;
}

OrthogonalWeight orthogonal_weight(int n, const Partition& mu0) {
    OrthogonalWeight w;
    w.n = n;
    w.mu = canonical(mu0);
    if (!in_P_O(n, w.mu)) throw std::invalid_argument("mu is not in P(O_n)");
    Partition c = conjugate(w.mu);
    int p = part(c, 1);
    Partition cb = c;
    if (cb.empty()) cb.push_back(0);
    cb[0] = n - p;
    w.mu_bar = conjugate(canonical(cb));
    w.positive = n - 2 * p >= 0;
    int d = w.positive ? n - 2 * p : 2 * p - n;
    w.q = d / 2;
    w.r = d % 2;
    w.M = w.positive ? p : n - p;
    return w;
}

std::vector<Slot> element_template(const OrthogonalWeight& w) {
    std::vector<Slot> s;
    const Partition& base = w.positive ? w.mu : w.mu_bar;
    for (int i = 1; i <= w.M; ++i) s.push_back({Kind::T, part(base, i)});
    for (int i = 0; i < w.q; ++i) s.push_back({w.positive ? Kind::T : Kind::TBAR0, 0});
    if (w.r) s.push_back({w.positive ? Kind::SP_PLUS : Kind::SP_MINUS, 0});
    return s;
}

std::vector<Column> u_columns(const SpinorElement& e) {
    std::vector<Column> u;
    for (auto it = e.comps.rbegin(); it != e.comps.rend(); ++it) {
        if (it->is_sp()) {
            u.push_back(it->left);
        } else {
            u.push_back(it->right);
            u.push_back(it->left);
        }
    }
    return u;
}

std::vector<int> u_tails(const SpinorElement& e) {
    std::vector<int> t;
    for (auto it = e.comps.rbegin(); it != e.comps.rend(); ++it) {
        switch (it->kind) {
        case Kind::SP_PLUS: t.push_back(0); break;
        case Kind::SP_MINUS: t.push_back(1); break;
        case Kind::TBAR0: t.push_back(1); t.push_back(1); break;
        case Kind::T: t.push_back(0); t.push_back(it->a); break;
        }
    }
    return t;
}

Word element_word(const SpinorElement& e) {
    Word w;
    for (auto& c : u_columns(e)) w.insert(w.end(), c.begin(), c.end());
    return w;
}

SpinorElement element_from_u(int n, const Partition& mu, const std::vector<Column>& u) {
    SpinorElement e{n, canonical(mu), {}};
    auto slots = element_template(orthogonal_weight(n, mu));
    size_t k = 0;
    auto take = [&]() {
        if (k >= u.size()) throw std::invalid_argument("element_from_u: too few columns");
        return u[k++];
    };
    std::vector<TwoColumn> rev;
    for (auto it = slots.rbegin(); it != slots.rend(); ++it) {
        TwoColumn t{it->kind, it->a, {}, {}};
        if (t.is_sp()) {
            t.left = take();
        } else {
            t.right = take();
            t.left = take();
        }
        rev.push_back(t);
    }
    if (k != u.size()) throw std::invalid_argument("element_from_u: too many columns");
    e.comps.assign(rev.rbegin(), rev.rend());
    return e;
}

bool matches_template(const SpinorElement& e) {
    auto slots = element_template(orthogonal_weight(e.n, e.mu));
    if (slots.size() != e.comps.size()) return false;
    for (size_t i = 0; i < slots.size(); ++i) {
        if (slots[i].kind != e.comps[i].kind || slots[i].a != e.comps[i].a) return false;
        if (!is_valid_component(e.comps[i])) return false;
    }
    return true;
}

bool validate_element(const SpinorElement& e) {
    if (!matches_template(e)) return false;
    for (size_t i = 0; i + 1 < e.comps.size(); ++i)
        if (!is_admissible(e.comps[i], e.comps[i + 1])) return false;
    return true;
}

bool is_l_highest_element(const SpinorElement& e) { return is_lattice_word(element_word(e)); }

static bool is_initial(const Column& c) {
    for (size_t k = 0; k < c.size(); ++k)
        if (c[k] != (int)k + 1) return false;
    return true;
}

// (H1), (H2) for one T(a) component given the predecessor's c and residue
static bool h1h2(const TwoColumn& t, long long prev_c, int prev_r) {
    int c = t.c(), rr = residue(t);
    const Column &L = t.left, &R = t.right;
    for (int k = 1; k < (int)R.size(); ++k)
        if (R[k - 1] != k) return false;
    for (int k = 1; k <= c; ++k)
        if (L[k - 1] != k) return false;
    if (rr == 0) return R.empty() || R.back() == (int)R.size();
    if (!(R.back() == (int)R.size() || R.back() >= prev_c + 1 + prev_r)) return false;
    return t.a >= 1 && L[c] == c + 1;
}

bool check_Hcirc(const SpinorElement& e) {
    auto w = orthogonal_weight(e.n, e.mu);
    long long prev_c = LLONG_MAX / 4;
    int prev_r = 0;
    int i = (int)e.comps.size() - 1;
    if (!w.positive) {
        // U_0 .. U_{2m}: every spin or TBAR0 column is 1..k
        const Column* last = nullptr;
        for (; i >= 0 && e.comps[i].kind != Kind::T; --i) {
            if (!is_initial(e.comps[i].left) || !is_initial(e.comps[i].right)) return false;
            last = &e.comps[i].left;
        }
        // predecessor of the first T(a): the padded T(1) built on U_{2m}
        if (last) {
            prev_c = (long long)last->size() - 1;
            prev_r = 1;
        }
    } else if (i >= 0 && e.comps[i].is_sp()) {
        if (!is_initial(e.comps[i].left)) return false;
        --i;
    }
    for (; i >= 0; --i) {
        const TwoColumn& t = e.comps[i];
        if (!h1h2(t, prev_c, prev_r)) return false;
        prev_c = t.c();
        prev_r = residue(t);
    }
    return true;
}

static std::optional<SpinorElement> rebuild(const SpinorElement& e, const std::vector<Column>& u) {
    SpinorElement out = e;
    size_t k = 0;
    for (auto it = out.comps.rbegin(); it != out.comps.rend(); ++it) {
        if (it->is_sp()) {
            it->left = u[k++];
        } else {
            it->right = u[k++];
            it->left = u[k++];
        }
    }
    if (!validate_element(out)) throw std::logic_error("crystal operator left T(mu,n)");
    return out;
}

static std::vector<Column> split_word(const Word& w, const std::vector<Column>& shape) {
    std::vector<Column> u;
    size_t k = 0;
    for (auto& c : shape) {
        u.emplace_back(w.begin() + k, w.begin() + k + c.size());
        k += c.size();
    }
    return u;
}

// signature over the spin factors U_0 (x) U_1 (x) ...; returns the acting factor
static int zero_signature(const std::vector<Column>& u, bool raise) {
    std::vector<int> plus;
    int last_minus = -1;
    for (int k = 0; k < (int)u.size(); ++k) {
        const Column& c = u[k];
        bool eps = c.size() >= 2 && c[0] == 1 && c[1] == 2;
        bool phi = std::find(c.begin(), c.end(), 1) == c.end() && std::find(c.begin(), c.end(), 2) == c.end();
        if (eps) {
            if (!plus.empty()) plus.pop_back();
            else last_minus = k;
        }
        if (phi) plus.push_back(k);
    }
    if (raise) return last_minus;
    return plus.empty() ? -1 : plus.front();
}

static std::optional<SpinorElement> d_crystal(int i, const SpinorElement& e, bool raise) {
    auto u = u_columns(e);
    if (i >= 1) {
        Word w = element_word(e);
        auto nw = raise ? e_word(i, w) : f_word(i, w);
        if (!nw) return std::nullopt;
        return rebuild(e, split_word(*nw, u));
    }
    int k = zero_signature(u, raise);
    if (k < 0) return std::nullopt;
    if (raise) u[k].erase(u[k].begin(), u[k].begin() + 2);
    else u[k].insert(u[k].begin(), {1, 2});
    return rebuild(e, u);
}

std::optional<SpinorElement> d_crystal_e(int i, const SpinorElement& e) { return d_crystal(i, e, true); }
std::optional<SpinorElement> d_crystal_f(int i, const SpinorElement& e) { return d_crystal(i, e, false); }

namespace {

struct LrdSearch {
    int n;
    Partition mu, lamc;
    int maxv, total;
    std::vector<Slot> slots;  // right to left
    std::vector<int> cnt;
    int used = 0;
    std::vector<TwoColumn> built;  // right to left
    std::vector<int> min_after;    // cells still forced by tails
    std::vector<SpinorElement> out;

    void columns(Column& col, int from, const std::function<void()>& k) {
        k();
        for (int v = from; v <= maxv; ++v) {
            if (cnt[v] >= part(lamc, v)) continue;
            if (v > 1 && cnt[v] >= cnt[v - 1]) continue;
            if (used + 1 > total) return;
            ++cnt[v];
            ++used;
            col.push_back(v);
            columns(col, v + 1, k);
            col.pop_back();
            --used;
            --cnt[v];
        }
    }

    void slot(size_t s) {
        if (s == slots.size()) {
            if (used != total) return;
            SpinorElement e{n, mu, {built.rbegin(), built.rend()}};
            out.push_back(e);
            return;
        }
        if (total - used < min_after[s]) return;
        TwoColumn t{slots[s].kind, slots[s].a, {}, {}};
        auto finish = [&]() {
            if (!is_valid_component(t)) return;
            if (!built.empty() && !is_admissible(t, built.back())) return;
            built.push_back(t);
            slot(s + 1);
            built.pop_back();
        };
        if (t.is_sp()) {
            columns(t.left, 1, finish);
        } else {
            columns(t.right, 1, [&]() {
                if (total - used < t.a + (s + 1 < slots.size() ? min_after[s + 1] : 0)) return;
                columns(t.left, 1, finish);
            });
        }
    }
};

}  // namespace

std::vector<SpinorElement> enumerate_LRd(const Partition& mu0, const Partition& lam0, int n) {
    Partition mu = canonical(mu0), lam = canonical(lam0);
    if (length(lam) > n) throw std::invalid_argument("enumerate_LRd: l(lambda) > n");
    auto w = orthogonal_weight(n, mu);
    LrdSearch st;
    st.n = n;
    st.mu = mu;
    st.lamc = conjugate(lam);
    st.maxv = part(lam, 1);
    st.total = weight(lam);
    auto slots = element_template(w);
    st.slots.assign(slots.rbegin(), slots.rend());
    st.cnt.assign(st.maxv + 2, 0);
    st.min_after.assign(st.slots.size() + 1, 0);
    for (int s = (int)st.slots.size() - 1; s >= 0; --s) st.min_after[s] = st.min_after[s + 1] + st.slots[s].a;
    st.slot(0);
    return st.out;
}

}  // namespace lrb
