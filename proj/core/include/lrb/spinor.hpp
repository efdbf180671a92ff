#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "lrb/tableau.hpp"

namespace lrb {

enum class Kind { T, TBAR0, SP_PLUS, SP_MINUS };

// T(a): L of height a+c, R of height b+c; L's top sits b rows below R's top,
// so L's bottom a cells hang below R (the tail).  TBAR0: same placement with
// a = 0 and |L| = c+1 odd.  SP kinds use left only.
struct TwoColumn {
    Kind kind = Kind::T;
    int a = 0;
    Column left, right;

    int b() const { return (int)right.size() - c(); }
    int c() const { return (int)left.size() - a; }
    bool is_sp() const { return kind == Kind::SP_PLUS || kind == Kind::SP_MINUS; }
    bool operator==(const TwoColumn&) const = default;
};

using ColumnPair = std::pair<Column, Column>;  // (left, right)

// U(i): i-th from the bottom, 1-based
inline int from_bottom(const Column& u, int i) { return u[u.size() - i]; }

// rows L[j] <= R[j + b] where both exist
bool pair_fits(const Column& L, const Column& R, int b);
// smallest b >= max(0, |R| - |L|) with pair_fits; this is the residue-0 placement
int minimal_offset(const Column& L, const Column& R);

int residue(const TwoColumn& t);
bool is_valid_component(const TwoColumn& t);

// jeu de taquin moves on a column pair in its residue-0 placement; nullopt is 0
std::optional<ColumnPair> calE(const Column& L, const Column& R);
std::optional<ColumnPair> calF(const Column& L, const Column& R);
std::optional<TwoColumn> calE(const TwoColumn& t);
std::optional<TwoColumn> calF(const TwoColumn& t);

ColumnPair star_pair(const TwoColumn& t);  // needs residue 1
ColumnPair lr_pair(const TwoColumn& t);

bool is_admissible(const TwoColumn& t, const TwoColumn& s);

struct OrthogonalWeight {
    int n = 0;
    Partition mu, mu_bar;
    bool positive = true;  // n - 2 mu'_1 >= 0
    int q = 0, r = 0, M = 0;
};
OrthogonalWeight orthogonal_weight(int n, const Partition& mu);
bool in_P_O(int n, const Partition& mu);

struct Slot {
    Kind kind;
    int a;
};
// left to right: T_l, ..., T_1, T_0
std::vector<Slot> element_template(const OrthogonalWeight& w);

struct SpinorElement {
    int n = 0;
    Partition mu;
    std::vector<TwoColumn> comps;  // left to right
    bool operator==(const SpinorElement&) const = default;
};

// U_0, U_1, U_2, ...: right to left, R before L in each two-column
std::vector<Column> u_columns(const SpinorElement& e);
// tail length of each U_k, same order
std::vector<int> u_tails(const SpinorElement& e);
Word element_word(const SpinorElement& e);  // w(U_0) w(U_1) ...

bool matches_template(const SpinorElement& e);
bool validate_element(const SpinorElement& e);
bool is_l_highest_element(const SpinorElement& e);
bool check_Hcirc(const SpinorElement& e);

std::optional<SpinorElement> d_crystal_e(int i, const SpinorElement& e);
std::optional<SpinorElement> d_crystal_f(int i, const SpinorElement& e);

// l-highest elements of T(mu, n) with content lam'
std::vector<SpinorElement> enumerate_LRd(const Partition& mu, const Partition& lam, int n);

// rebuild an element from its U columns (U_0 first)
SpinorElement element_from_u(int n, const Partition& mu, const std::vector<Column>& u);

}  // namespace lrb
