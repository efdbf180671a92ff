#include "lrb/branching.hpp"

#include <stdexcept>

#include "lrb/flags.hpp"
#include "lrb/lr.hpp"
#include "lrb/spinor.hpp"

namespace lrb {

Group parse_group(const std::string& s) {
    if (s == "O") return Group::O;
    if (s == "Sp") return Group::Sp;
    if (s == "B") return Group::B;
    if (s == "C") return Group::C;
    throw std::invalid_argument("unknown group " + s);
}

std::string group_name(Group g) {
    switch (g) {
    case Group::O: return "O";
    case Group::Sp: return "Sp";
    case Group::B: return "B";
    case Group::C: return "C";
    }
    return "?";
}

static Family family_of(Group g) {
    switch (g) {
    case Group::O: return Family::EVEN_ROWS;
    case Group::B: return Family::ALL;
    default: return Family::EVEN_COLUMNS;
    }
}

void check_query(const BranchingQuery& q) {
    if (q.n < 1) throw std::invalid_argument("n must be positive");
    if (!is_partition(q.lambda) || !is_partition(q.mu)) throw std::invalid_argument("not a partition");
    if (length(q.lambda) > q.n) throw std::invalid_argument("l(lambda) > n");
    switch (q.group) {
    case Group::O:
        if (!in_P_O(q.n, q.mu)) throw std::invalid_argument("mu is not in P(O_n)");
        break;
    case Group::Sp:
    case Group::C:
        if (2 * length(q.mu) > q.n) throw std::invalid_argument("l(mu) > n/2");
        break;
    case Group::B:
        if (length(q.mu) > q.n) throw std::invalid_argument("l(mu) > n");
        break;
    }
}

std::vector<Partition> delta_range(const BranchingQuery& q) {
    std::vector<Partition> out;
    int w = weight(q.lambda) - weight(q.mu);
    if (w < 0) return out;
    for (auto& d : partitions_of(w, q.n))
        if (is_in_family(d, family_of(q.group)) && contains(q.lambda, d)) out.push_back(d);
    return out;
}

static long long count_barred(const BranchingQuery& q, const Partition& d) {
    long long k = 0;
    auto lc = conjugate(q.lambda);
    for (auto& w : enumerate_lr(lc, conjugate(d), conjugate(q.mu), LrKind::LATTICE)) {
        bool ok = q.group == Group::O ? is_barred_D_row(w.companion, make_context(q.n, q.mu), d)
                                      : is_barred_C(w.companion, q.n, d);
        k += ok;
    }
    return k;
}

static long long count_flagged(const BranchingQuery& q, const Partition& d) {
    long long k = 0;
    for (auto& w : enumerate_lr(q.lambda, d, q.mu, LrKind::ANTI_LATTICE)) {
        bool ok = q.group == Group::O ? is_flagged_D_companion(w.companion, make_context(q.n, q.mu))
                                      : is_flagged_C(w.companion, q.n);
        k += ok;
    }
    return k;
}

BranchingResult multiplicity(const BranchingQuery& q, unsigned methods) {
    check_query(q);
    BranchingResult r;
    if (methods & DIRECT) {
        if (q.group != Group::O) throw std::invalid_argument("direct count needs the spinor model (group O)");
        r.direct = (long long)enumerate_LRd(q.mu, q.lambda, q.n).size();
    }
    if (methods & (BARRED | FLAGGED)) {
        if (methods & BARRED) r.barred = 0;
        if (methods & FLAGGED) r.flagged = 0;
        for (auto& d : delta_range(q)) {
            DeltaTerm t{d, 0, 0};
            if (methods & BARRED) r.barred += t.barred = count_barred(q, d);
            if (methods & FLAGGED) r.flagged += t.flagged = count_flagged(q, d);
            r.terms.push_back(t);
        }
    }
    return r;
}

long long multiplicity_value(const BranchingQuery& q, Method m) {
    auto r = multiplicity(q, m);
    return m == DIRECT ? r.direct : m == BARRED ? r.barred : r.flagged;
}

long long littlewood_stable(const BranchingQuery& q) {
    check_query(q);
    if (2 * length(q.lambda) > q.n) throw std::invalid_argument("outside the stable range l(lambda) <= n/2");
    long long s = 0;
    for (auto& d : delta_range(q)) s += lr_count(q.lambda, d, q.mu);
    return s;
}

long long double_bracket(int n, const Partition& lambda, const Partition& mu) {
    auto w = orthogonal_weight(n, mu);
    long long v = multiplicity_value({n, lambda, w.mu, Group::O}, FLAGGED);
    if (w.mu_bar != w.mu) v += multiplicity_value({n, lambda, w.mu_bar, Group::O}, FLAGGED);
    return v;
}

EWCheck enright_willenbring_check(int n, int a, int b, int c, int d, const Partition& lambda) {
    if (d < 2 || a < 1 || b < 1 || c < 1 || 1 + a + b + c != n) throw std::invalid_argument("EW parameters do not fit n");
    Partition mu{d}, nu{d};
    mu.insert(mu.end(), a, 2);
    mu.insert(mu.end(), b, 1);
    nu.insert(nu.end(), c, 2);
    nu.insert(nu.end(), b, 1);
    if (!in_P_O(n, mu)) throw std::invalid_argument("EW: mu is not in P(O_n)");
    EWCheck r;
    auto lc = conjugate(lambda);
    for (auto& x : partitions_of(weight(lambda) - weight(mu), n))
        if (is_in_family(x, Family::EVEN_ROWS)) r.plus += lr_count(lc, conjugate(x), conjugate(mu));
    for (auto& y : partitions_of(weight(lambda) - weight(nu), n))
        if (is_in_family(y, Family::EVEN_ROWS)) r.minus += lr_count(lc, conjugate(y), conjugate(nu));
    r.difference = r.plus - r.minus;
    r.flagged = multiplicity_value({n, lambda, mu, Group::O}, FLAGGED);
    r.equal = r.difference == r.flagged;
    return r;
}

}  // namespace lrb
