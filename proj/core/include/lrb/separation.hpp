#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lrb/spinor.hpp"

namespace lrb {

// cols[k] = U_k.  U_0 may be empty.
struct ColumnTuple {
    std::vector<Column> cols;
    std::vector<int> tails;  // tail length carried by each U_k (0 for right columns)
    bool operator==(const ColumnTuple&) const = default;
};

// X(U_{j+1}, U_j) with U_{j+1} as the left column, residue-0 placement
std::optional<ColumnTuple> bicrystal_E(int j, const ColumnTuple& t);
std::optional<ColumnTuple> bicrystal_F(int j, const ColumnTuple& t);

struct SlideAudit {
    long applications = 0;
    long closed_agree = 0;
    long knuth_ok = 0;
    long commute_checks = 0;
    long commute_ok = 0;
    std::vector<std::string> failures;
    bool clean() const { return failures.empty(); }
};

// S_j on U_{j+1}, U_j; a = tail of U_j.  Throws std::logic_error on U_{j+1}(1) = U_j(a).
ColumnTuple sliding_closed(int j, const ColumnTuple& t);
ColumnTuple sliding_operator(int j, const ColumnTuple& t);
// closed form, cross-checked against the operator form when audit is given
ColumnTuple sliding_S(int j, const ColumnTuple& t, SlideAudit* audit = nullptr);

struct SlideTrace {
    int n = 0;
    Partition mu;
    std::vector<Column> before;  // U_0, U_1, ...
    std::vector<Column> after;   // after all slides (padding included in the negative case)
    Column left;
    int left_tail = 0;
};

struct StepResult {
    SpinorElement next;
    Column left;
    int left_tail = 0;
};

// default padding height for the negative case
int default_padding(const SpinorElement& e);

// the padded positive element on U_{2l}, ..., U_{2m}, U = (1..a)
SpinorElement pad_negative(const SpinorElement& e, int a);

StepResult slide_step(const SpinorElement& e, int pad = -1, SlideAudit* audit = nullptr, SlideTrace* trace = nullptr);

struct SeparationResult {
    Partition delta;
    Tableau tail;  // shape mu'
    Partition lambda;
    std::vector<Column> columns;  // the separated tableau, left to right
    std::vector<int> tails;
    bool barred = false;
    bool operator==(const SeparationResult&) const = default;
};

SeparationResult separate(const SpinorElement& e, int pad = -1, SlideAudit* audit = nullptr,
                          std::vector<SlideTrace>* trace = nullptr);

// inverse of separate for n = 4, mu'_1 = 2
SpinorElement reconstruct_n4(const Partition& delta, const Tableau& W, const Partition& mu);

}  // namespace lrb
