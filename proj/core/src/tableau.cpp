#include "lrb/tableau.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace lrb {

bool Tableau::has(int r, int c) const {
    return r >= 0 && r < num_rows() && c >= part(inner, r + 1) && c < part(outer, r + 1);
}

int Tableau::at(int r, int c) const { return rows[r][c - part(inner, r + 1)]; }
int& Tableau::at(int r, int c) { return rows[r][c - part(inner, r + 1)]; }

int Tableau::size() const {
    int s = 0;
    for (auto& r : rows) s += (int)r.size();
    return s;
}

std::vector<Column> Tableau::columns() const {
    std::vector<Column> cols(num_cols());
    for (int r = 0; r < num_rows(); ++r)
        for (int c = part(inner, r + 1); c < part(outer, r + 1); ++c) cols[c].push_back(at(r, c));
    return cols;
}

int Tableau::max_entry() const {
    int m = 0;
    for (auto& r : rows)
        for (int x : r) m = std::max(m, x);
    return m;
}

Tableau empty_of_shape(const Partition& outer, const Partition& inner) {
    Tableau t{canonical(outer), canonical(inner), {}};
    t.rows.resize(length(t.outer));
    for (int r = 0; r < (int)t.rows.size(); ++r)
        t.rows[r].assign(part(t.outer, r + 1) - part(t.inner, r + 1), 0);
    return t;
}

Tableau from_columns(const std::vector<Column>& cols) {
    Partition colh;
    for (auto& c : cols) colh.push_back((int)c.size());
    Tableau t = empty_of_shape(conjugate(canonical(colh)));
    for (size_t c = 0; c < cols.size(); ++c)
        for (size_t r = 0; r < cols[c].size(); ++r) t.at((int)r, (int)c) = cols[c][r];
    return t;
}

Partition rotated_inner(const Partition& lam) {
    int l = length(lam);
    Partition in(l);
    for (int i = 1; i <= l; ++i) in[i - 1] = part(lam, 1) - part(lam, l - i + 1);
    return canonical(in);
}

Tableau rotated_empty(const Partition& lam) {
    int l = length(lam);
    return empty_of_shape(Partition(l, part(lam, 1)), rotated_inner(lam));
}

Tableau from_rotated_columns(const Partition& lam, const std::vector<Column>& cols) {
    Tableau t = rotated_empty(lam);
    for (int c = 0; c < t.num_cols(); ++c) {
        size_t k = 0;
        for (int r = 0; r < t.num_rows(); ++r)
            if (t.has(r, c)) {
                if (k >= cols.at(c).size()) throw std::invalid_argument("column too short");
                t.at(r, c) = cols[c][k++];
            }
        if (k != cols[c].size()) throw std::invalid_argument("column too long");
    }
    return t;
}

bool is_semistandard(const Tableau& t) {
    if (!is_partition(t.outer) || !is_partition(t.inner) || !contains(t.outer, t.inner)) return false;
    if ((int)t.rows.size() != length(t.outer)) return false;
    for (int r = 0; r < t.num_rows(); ++r) {
        if ((int)t.rows[r].size() != part(t.outer, r + 1) - part(t.inner, r + 1)) return false;
        for (int c = part(t.inner, r + 1); c < part(t.outer, r + 1); ++c) {
            if (t.at(r, c) < 1) return false;
            if (t.has(r, c + 1) && t.at(r, c) > t.at(r, c + 1)) return false;
            if (t.has(r + 1, c) && t.at(r, c) >= t.at(r + 1, c)) return false;
        }
    }
    return true;
}

std::vector<Tableau> enumerate_sst(const Partition& outer, const Partition& inner, int max_entry) {
    std::vector<Tableau> out;
    Tableau t = empty_of_shape(outer, inner);
    std::vector<std::pair<int, int>> cells;
    for (int r = 0; r < t.num_rows(); ++r)
        for (int c = part(inner, r + 1); c < part(outer, r + 1); ++c) cells.push_back({r, c});
    std::function<void(size_t)> rec = [&](size_t k) {
        if (k == cells.size()) {
            out.push_back(t);
            return;
        }
        auto [r, c] = cells[k];
        int lo = 1;
        if (t.has(r, c - 1)) lo = std::max(lo, t.at(r, c - 1));
        if (t.has(r - 1, c)) lo = std::max(lo, t.at(r - 1, c) + 1);
        for (int v = lo; v <= max_entry; ++v) {
            t.at(r, c) = v;
            rec(k + 1);
        }
    };
    rec(0);
    return out;
}

Word reading_word(const Tableau& t) {
    Word w;
    auto cols = t.columns();
    for (int c = (int)cols.size() - 1; c >= 0; --c) w.insert(w.end(), cols[c].begin(), cols[c].end());
    return w;
}

std::vector<int> word_content(const Word& w, int upto) {
    int m = upto;
    for (int x : w) m = std::max(m, x);
    std::vector<int> cnt(m + 1, 0);
    for (int x : w) ++cnt[x];
    return cnt;
}

std::vector<int> content(const Tableau& t, int upto) { return word_content(reading_word(t), upto); }

Partition shape(const Tableau& t) { return t.outer; }

Tableau highest_tableau(const Partition& lam, bool rotated) {
    Partition p = canonical(lam);
    if (!rotated) {
        Tableau t = empty_of_shape(p);
        for (int r = 0; r < t.num_rows(); ++r)
            for (auto& x : t.rows[r]) x = r + 1;
        return t;
    }
    Tableau t = rotated_empty(p);
    for (int c = 0; c < t.num_cols(); ++c) {
        int k = 0;
        for (int r = 0; r < t.num_rows(); ++r)
            if (t.has(r, c)) t.at(r, c) = ++k;
    }
    return t;
}

static std::vector<Column> straight_columns(const Tableau& t) {
    if (length(t.inner) != 0) throw std::invalid_argument("insertion needs a straight tableau");
    return t.columns();
}

static void insert_into(std::vector<Column>& cols, int a) {
    for (auto& col : cols) {
        auto it = std::lower_bound(col.begin(), col.end(), a);
        if (it == col.end()) {
            col.push_back(a);
            return;
        }
        std::swap(*it, a);
    }
    cols.push_back({a});
}

Tableau column_insert(int a, const Tableau& t) {
    auto cols = straight_columns(t);
    insert_into(cols, a);
    return from_columns(cols);
}

Tableau word_insert(const Word& w, const Tableau& t) {
    auto cols = straight_columns(t);
    for (int a : w) insert_into(cols, a);
    return from_columns(cols);
}

Tableau tableau_insert(const Tableau& s, const Tableau& t) { return word_insert(reading_word(s), t); }

Tableau insertion_normal_form(const Word& w) { return word_insert(w, Tableau{}); }

bool knuth_equivalent(const Tableau& a, const Tableau& b) {
    return insertion_normal_form(reading_word(a)) == insertion_normal_form(reading_word(b));
}

// unmatched letters after cancelling each i against a later i+1
struct Signature {
    std::vector<int> plus;   // positions of unmatched i (left to right)
    std::vector<int> minus;  // positions of unmatched i+1
};

static Signature signature(int i, const Word& w) {
    Signature s;
    std::vector<int> open;
    for (int k = 0; k < (int)w.size(); ++k) {
        if (w[k] == i) {
            open.push_back(k);
        } else if (w[k] == i + 1) {
            if (!open.empty())
                open.pop_back();
            else
                s.minus.push_back(k);
        }
    }
    s.plus = open;
    return s;
}

int eps_word(int i, const Word& w) { return (int)signature(i, w).minus.size(); }
int phi_word(int i, const Word& w) { return (int)signature(i, w).plus.size(); }

std::optional<Word> e_word(int i, const Word& w) {
    auto s = signature(i, w);
    if (s.minus.empty()) return std::nullopt;
    Word v = w;
    v[s.minus.back()] = i;
    return v;
}

std::optional<Word> f_word(int i, const Word& w) {
    auto s = signature(i, w);
    if (s.plus.empty()) return std::nullopt;
    Word v = w;
    v[s.plus.front()] = i + 1;
    return v;
}

int eps_i(int i, const Tableau& t) { return eps_word(i, reading_word(t)); }
int phi_i(int i, const Tableau& t) { return phi_word(i, reading_word(t)); }

// write a word back into t's cells in reading order
static Tableau refill(const Tableau& t, const Word& w) {
    Tableau u = t;
    size_t k = 0;
    for (int c = t.num_cols() - 1; c >= 0; --c)
        for (int r = 0; r < t.num_rows(); ++r)
            if (t.has(r, c)) u.at(r, c) = w[k++];
    return u;
}

std::optional<Tableau> crystal_e(int i, const Tableau& t) {
    auto w = e_word(i, reading_word(t));
    if (!w) return std::nullopt;
    return refill(t, *w);
}

std::optional<Tableau> crystal_f(int i, const Tableau& t) {
    auto w = f_word(i, reading_word(t));
    if (!w) return std::nullopt;
    return refill(t, *w);
}

bool is_lattice_word(const Word& w) {
    std::vector<int> cnt(2, 0);
    for (int x : w) {
        if (x >= (int)cnt.size()) cnt.resize(x + 2, 0);
        ++cnt[x];
        if (x > 1 && cnt[x] > cnt[x - 1]) return false;
    }
    return true;
}

bool is_anti_lattice_word(const Word& w, int p) {
    if (p < 0)
        for (int x : w) p = std::max(p, x);
    std::vector<int> cnt(std::max(p, 0) + 2, 0);
    for (int k = (int)w.size() - 1; k >= 0; --k) {
        int x = w[k];
        if (x > p) return false;
        ++cnt[x];
        if (x < p && cnt[x] > cnt[x + 1]) return false;
    }
    return true;
}

bool is_l_highest(const Tableau& t) { return is_lattice_word(reading_word(t)); }
bool is_anti_lattice(const Tableau& t, int p) { return is_anti_lattice_word(reading_word(t), p); }

}  // namespace lrb
