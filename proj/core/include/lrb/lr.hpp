#pragma once

#include <optional>
#include <vector>

#include "lrb/tableau.hpp"

namespace lrb {

enum class LrKind { LATTICE, ANTI_LATTICE };

// filling: skew tableau of lam/mu.  companion: shape nu (LATTICE) or nu^pi (ANTI);
// row i of the companion lists, sorted, the filling rows that contain i.
struct LrWitness {
    Tableau filling;
    Tableau companion;
    LrKind kind;
    bool operator==(const LrWitness&) const = default;
};

std::vector<LrWitness> enumerate_lr(const Partition& lam, const Partition& mu, const Partition& nu, LrKind kind);
long long lr_count(const Partition& lam, const Partition& mu, const Partition& nu, LrKind kind = LrKind::LATTICE);

Tableau companion_of(const Tableau& filling, const Partition& nu, LrKind kind);
Tableau filling_of(const Tableau& companion, const Partition& lam, const Partition& mu);

enum class Orientation { COLUMNS, ROWS };

// COLUMNS: columns of t, rightmost first, inserted into H_base; label i marks
// sh(H^i)'/sh(H^{i-1})'.  ROWS: rows top to bottom, label i marks sh(H_i)/sh(H_{i-1}).
// Throws std::logic_error when a strip is not horizontal.
struct Recording {
    Tableau q;
    Tableau result;  // the final inserted tableau
};
Recording recording(const Tableau& t, const Partition& base, Orientation o);

// S: companion of shape nu' with (S -> H_{mu'}) = H_{lam'}.  Returns U of shape
// nu^pi with (U -> H_mu) = H_lam and matching recording.  Throws if the
// matching U is not unique (or absent).
Tableau psi(const Tableau& S, const Partition& mu, const Partition& lam);
Tableau psi_inverse(const Tableau& U, const Partition& mu, const Partition& lam);

}  // namespace lrb
