#pragma once

#include <optional>
#include <vector>

#include "lrb/partitions.hpp"

namespace lrb {

using Word = std::vector<int>;
using Column = std::vector<int>;  // top to bottom

// Rows are listed top to bottom; row i holds outer_i - inner_i entries,
// starting at column inner_i.
struct Tableau {
    Partition outer, inner;
    std::vector<std::vector<int>> rows;

    bool operator==(const Tableau&) const = default;
    int num_rows() const { return (int)rows.size(); }
    int num_cols() const { return outer.empty() ? 0 : outer[0]; }
    bool has(int r, int c) const;  // 0-based absolute coordinates
    int at(int r, int c) const;
    int& at(int r, int c);
    int size() const;
    std::vector<Column> columns() const;  // left to right, each top to bottom
    int max_entry() const;
};

Tableau empty_of_shape(const Partition& outer, const Partition& inner = {});
Tableau from_columns(const std::vector<Column>& cols);  // straight shape, left to right
// rotated shape lambda^pi: outer (lambda_1^l), inner_i = lambda_1 - lambda_{l-i+1}
Partition rotated_inner(const Partition& lam);
Tableau rotated_empty(const Partition& lam);
Tableau from_rotated_columns(const Partition& lam, const std::vector<Column>& cols);

bool is_semistandard(const Tableau& t);
// every SST of outer/inner with entries in 1..max_entry, row by row
std::vector<Tableau> enumerate_sst(const Partition& outer, const Partition& inner, int max_entry);
Word reading_word(const Tableau& t);
std::vector<int> content(const Tableau& t, int upto = 0);  // index 0 unused
std::vector<int> word_content(const Word& w, int upto = 0);
Partition shape(const Tableau& t);  // outer of a straight tableau

Tableau highest_tableau(const Partition& lam, bool rotated = false);

// Schensted column insertion: the topmost entry >= a is bumped
Tableau column_insert(int a, const Tableau& t);
Tableau word_insert(const Word& w, const Tableau& t);  // w_1 first
Tableau tableau_insert(const Tableau& s, const Tableau& t);
Tableau insertion_normal_form(const Word& w);
bool knuth_equivalent(const Tableau& a, const Tableau& b);

// type A crystal on words and tableaux (via the reading word)
int eps_word(int i, const Word& w);
int phi_word(int i, const Word& w);
std::optional<Word> e_word(int i, const Word& w);
std::optional<Word> f_word(int i, const Word& w);
int eps_i(int i, const Tableau& t);
int phi_i(int i, const Tableau& t);
std::optional<Tableau> crystal_e(int i, const Tableau& t);
std::optional<Tableau> crystal_f(int i, const Tableau& t);

bool is_lattice_word(const Word& w);
// every suffix has #i >= #(i-1) for 1 < i <= p (p defaults to the max letter)
bool is_anti_lattice_word(const Word& w, int p = -1);
bool is_l_highest(const Tableau& t);
bool is_anti_lattice(const Tableau& t, int p = -1);

}  // namespace lrb
