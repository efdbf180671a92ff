#include "lrb/lr.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace lrb {

namespace {

struct Cell {
    int r, c;
};

std::vector<Cell> skew_cells_reading(const Partition& lam, const Partition& mu, bool reversed) {
    std::vector<Cell> cells;
    int cols = part(lam, 1);
    for (int c = cols - 1; c >= 0; --c)
        for (int r = 0; r < length(lam); ++r)
            if (c >= part(mu, r + 1) && c < part(lam, r + 1)) cells.push_back({r, c});
    if (reversed) std::reverse(cells.begin(), cells.end());
    return cells;
}

}  // namespace

Tableau companion_of(const Tableau& filling, const Partition& nu, LrKind kind) {
    Tableau comp = kind == LrKind::LATTICE ? empty_of_shape(nu) : rotated_empty(nu);
    int p = comp.num_rows();
    std::vector<std::vector<int>> rows(p);
    for (int r = 0; r < filling.num_rows(); ++r)
        for (int x : filling.rows[r]) {
            if (x < 1 || x > p) throw std::invalid_argument("companion_of: entry outside content");
            rows[x - 1].push_back(r + 1);
        }
    for (int i = 0; i < p; ++i) {
        std::sort(rows[i].begin(), rows[i].end());
        if (rows[i].size() != comp.rows[i].size()) throw std::invalid_argument("companion_of: content mismatch");
        comp.rows[i] = rows[i];
    }
    return comp;
}

Tableau filling_of(const Tableau& companion, const Partition& lam, const Partition& mu) {
    Tableau f = empty_of_shape(lam, mu);
    std::vector<std::vector<int>> rows(f.num_rows());
    for (int i = 0; i < companion.num_rows(); ++i)
        for (int j : companion.rows[i]) {
            if (j < 1 || j > f.num_rows()) throw std::invalid_argument("filling_of: row index out of range");
            rows[j - 1].push_back(i + 1);
        }
    for (int r = 0; r < f.num_rows(); ++r) {
        std::sort(rows[r].begin(), rows[r].end());
        if (rows[r].size() != f.rows[r].size()) throw std::invalid_argument("filling_of: shape mismatch");
        f.rows[r] = rows[r];
    }
    return f;
}

std::vector<LrWitness> enumerate_lr(const Partition& lam0, const Partition& mu0, const Partition& nu0, LrKind kind) {
    Partition lam = canonical(lam0), mu = canonical(mu0), nu = canonical(nu0);
    std::vector<LrWitness> out;
    if (weight(lam) != weight(mu) + weight(nu) || !contains(lam, mu)) return out;
    int p = length(nu);
    bool anti = kind == LrKind::ANTI_LATTICE;
    auto cells = skew_cells_reading(lam, mu, anti);
    Tableau f = empty_of_shape(lam, mu);
    std::vector<int> cnt(p + 2, 0);
    auto cap = [&](int v) { return anti ? part(nu, p - v + 1) : part(nu, v); };

    std::function<void(size_t)> rec = [&](size_t k) {
        if (k == cells.size()) {
            out.push_back({f, companion_of(f, nu, kind), kind});
            return;
        }
        auto [r, c] = cells[k];
        int lo = 1, hi = p;
        if (!anti) {
            if (f.has(r, c + 1)) hi = std::min(hi, f.at(r, c + 1));
            if (f.has(r - 1, c)) lo = std::max(lo, f.at(r - 1, c) + 1);
        } else {
            if (f.has(r, c - 1)) lo = std::max(lo, f.at(r, c - 1));
            if (f.has(r + 1, c)) hi = std::min(hi, f.at(r + 1, c) - 1);
        }
        for (int v = lo; v <= hi; ++v) {
            if (cnt[v] >= cap(v)) continue;
            if (!anti && v > 1 && cnt[v] + 1 > cnt[v - 1]) continue;
            if (anti && v < p && cnt[v] + 1 > cnt[v + 1]) continue;
            ++cnt[v];
            f.at(r, c) = v;
            rec(k + 1);
            --cnt[v];
        }
    };
    rec(0);
    std::sort(out.begin(), out.end(), [](const LrWitness& a, const LrWitness& b) {
        return a.companion.rows < b.companion.rows;
    });
    return out;
}

long long lr_count(const Partition& lam, const Partition& mu, const Partition& nu, LrKind kind) {
    return (long long)enumerate_lr(lam, mu, nu, kind).size();
}

// -- recording tableaux ------------------------------------------------------

static void check_horizontal(const Partition& big, const Partition& small) {
    for (int k = 1; k <= length(big); ++k)
        if (part(big, k + 1) > part(small, k)) throw std::logic_error("recording: strip is not horizontal");
}

static void label_strip(Tableau& q, const Partition& big, const Partition& small, int label) {
    for (int r = 0; r < length(big); ++r)
        for (int c = part(small, r + 1); c < part(big, r + 1); ++c) q.at(r, c) = label;
}

Recording recording(const Tableau& t, const Partition& base, Orientation o) {
    Tableau h = highest_tableau(base);
    std::vector<Partition> shapes{canonical(base)};
    if (o == Orientation::COLUMNS) {
        auto cols = t.columns();
        for (int c = (int)cols.size() - 1; c >= 0; --c) {
            h = word_insert(cols[c], h);
            shapes.push_back(h.outer);
        }
        for (auto& s : shapes) s = conjugate(s);
    } else {
        for (auto& row : t.rows) {
            h = word_insert(row, h);
            shapes.push_back(h.outer);
        }
    }
    Tableau q = empty_of_shape(shapes.back(), shapes.front());
    for (size_t i = 1; i < shapes.size(); ++i) {
        if (!contains(shapes[i], shapes[i - 1])) throw std::logic_error("recording: shapes not nested");
        check_horizontal(shapes[i], shapes[i - 1]);
        label_strip(q, shapes[i], shapes[i - 1], (int)i);
    }
    return {q, h};
}

// cells of q labelled <= i, together with the base, as a partition
static Partition shape_upto(const Tableau& q, int i) {
    Partition s(q.num_rows(), 0);
    for (int r = 0; r < q.num_rows(); ++r) {
        s[r] = part(q.inner, r + 1);
        for (int c = part(q.inner, r + 1); c < part(q.outer, r + 1); ++c)
            if (q.at(r, c) <= i) s[r] = c + 1;
    }
    return canonical(s);
}

// weakly increasing sequences of length len, entry k in [lo[k], hi]
static void weak_sequences(int len, const std::vector<int>& lo, int hi, const std::function<void(const std::vector<int>&)>& fn) {
    std::vector<int> cur(len);
    std::function<void(int, int)> rec = [&](int k, int floor) {
        if (k == len) {
            fn(cur);
            return;
        }
        for (int v = std::max(floor, lo[k]); v <= hi; ++v) {
            cur[k] = v;
            rec(k + 1, v);
        }
    };
    rec(0, 1);
}

Tableau psi(const Tableau& S, const Partition& mu0, const Partition& lam0) {
    Partition mu = canonical(mu0), lam = canonical(lam0);
    Partition nu = conjugate(S.outer);
    int p = length(nu);
    Tableau q = recording(S, conjugate(mu), Orientation::COLUMNS).q;
    if (q.outer != lam || q.inner != mu) throw std::invalid_argument("psi: S does not insert to H_{lam'}");
    Tableau U = rotated_empty(nu);
    Tableau target = highest_tableau(lam);
    int maxv = length(lam);
    std::vector<Tableau> found;

    std::function<void(int, const Tableau&)> rec = [&](int i, const Tableau& h) {
        if (i == p) {
            if (h == target) found.push_back(U);
            return;
        }
        int len = (int)U.rows[i].size();
        int off = part(U.inner, i + 1);
        std::vector<int> lo(len, 1);
        for (int k = 0; k < len; ++k)
            if (U.has(i - 1, off + k)) lo[k] = U.at(i - 1, off + k) + 1;
        Partition want = shape_upto(q, i + 1);
        weak_sequences(len, lo, maxv, [&](const std::vector<int>& row) {
            Tableau h2 = word_insert(row, h);
            if (h2.outer != want) return;
            U.rows[i] = row;
            rec(i + 1, h2);
        });
    };
    rec(0, highest_tableau(mu));
    if (found.size() != 1)
        throw std::logic_error("psi: expected a unique U, found " + std::to_string(found.size()));
    return found[0];
}

Tableau psi_inverse(const Tableau& U, const Partition& mu0, const Partition& lam0) {
    Partition mu = canonical(mu0), lam = canonical(lam0);
    int p = U.num_rows();
    Partition nu(p);
    for (int i = 0; i < p; ++i) nu[p - 1 - i] = (int)U.rows[i].size();
    nu = canonical(nu);
    Tableau q = recording(U, mu, Orientation::ROWS).q;
    if (q.outer != lam || q.inner != mu) throw std::invalid_argument("psi_inverse: U does not insert to H_lam");
    Tableau S = empty_of_shape(conjugate(nu));
    Tableau target = highest_tableau(conjugate(lam));
    int maxv = part(lam, 1);
    std::vector<Tableau> found;

    // columns of S right to left; column c has height nu_{c+1}
    std::function<void(int, const Tableau&)> rec = [&](int i, const Tableau& h) {
        if (i == p) {
            if (h == target) found.push_back(S);
            return;
        }
        int c = p - 1 - i;
        int ht = part(nu, c + 1);
        Partition want = conjugate(shape_upto(q, i + 1));
        std::vector<int> col(ht);
        std::function<void(int)> fill = [&](int k) {
            if (k == ht) {
                Tableau h2 = word_insert(col, h);
                if (h2.outer != want) return;
                for (int r = 0; r < ht; ++r) S.at(r, c) = col[r];
                rec(i + 1, h2);
                return;
            }
            int lo = k ? col[k - 1] + 1 : 1;
            int hi = maxv;
            if (S.has(k, c + 1)) hi = std::min(hi, S.at(k, c + 1));
            for (int v = lo; v <= hi; ++v) {
                col[k] = v;
                fill(k + 1);
            }
        };
        fill(0);
    };
    rec(0, highest_tableau(conjugate(mu)));
    if (found.size() != 1)
        throw std::logic_error("psi_inverse: expected a unique S, found " + std::to_string(found.size()));
    return found[0];
}

}  // namespace lrb
