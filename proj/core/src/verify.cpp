#include "lrb/verify.hpp"

#include <chrono>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>

#include "lrb/branching.hpp"
#include "lrb/flags.hpp"
#include "lrb/genexp.hpp"
#include "lrb/lr.hpp"
#include "lrb/oracle.hpp"
#include "lrb/separation.hpp"

namespace lrb {

namespace {

using Clock = std::chrono::steady_clock;

struct Deadline {
    Clock::time_point end;
    bool expired() const { return Clock::now() > end; }
};

struct Outcome {
    bool pass = true;
    std::ostringstream msg;
    int shown = 0;
    void fail(const std::string& s) {
        pass = false;
        if (shown++ < 5) msg << s << "; ";
    }
};

std::string show(const std::vector<int>& v) { return to_string(v); }

Tableau rows_tableau(const Partition& outer, const std::vector<std::vector<int>>& rows) {
    Tableau t = empty_of_shape(outer);
    t.rows = rows;
    return t;
}

// --- goldens ---

void psi_golden(Outcome& o) {
    Partition lam{7, 6, 4, 3, 2}, mu{6, 4, 2, 2}, nu{2, 2, 2, 1, 1};
    Tableau S = rows_tableau({5, 3}, {{1, 3, 3, 5, 7}, {2, 4, 6}});
    Tableau want = from_rotated_columns(nu, {{2, 3, 5}, {1, 2, 3, 4, 5}});
    Tableau U = psi(S, mu, lam);
    if (U != want) o.fail("psi(S) differs from the displayed U");
    if (psi_inverse(want, mu, lam) != S) o.fail("psi_inverse(U) does not recover S");
}

void flag_goldens(Outcome& o) {
    Partition mu{2, 2, 2, 1, 1};
    auto ctx = make_context(8, mu);
    Partition da{4, 2, 2, 2, 2}, db{4, 4, 2, 2};
    Tableau Sa = rows_tableau({5, 3}, {{1, 3, 3, 3, 5}, {2, 4, 4}});
    auto fa = flag_sequences_row(Sa, ctx, da);
    if (fa.not_in_set || fa.m != std::vector<int>{1, 3, 5, 7, 8} || fa.nseq != std::vector<int>{2, 4, 6})
        o.fail("S: m=" + show(fa.m) + " n=" + show(fa.nseq));
    if (!is_barred_D_row(Sa, ctx, da)) o.fail("S should be barred");
    Tableau Sb = rows_tableau({5, 3}, {{1, 1, 3, 3, 5}, {2, 2, 4}});
    auto fb = flag_sequences_row(Sb, ctx, db);
    if (fb.not_in_set || fb.m != std::vector<int>{1, 3, 5, 6, 8} || fb.nseq != std::vector<int>{2, 4, 7})
        o.fail("S_beta: m=" + show(fb.m) + " n=" + show(fb.nseq));
    if (is_barred_D_row(Sb, ctx, db)) o.fail("S_beta should not be barred");
    Tableau U = from_rotated_columns(mu, {{2, 3, 6}, {1, 2, 3, 4, 6}});
    auto fu = flag_sequences_companion(U, ctx);
    if (fu.m != std::vector<int>{1, 3, 5, 7, 8} || fu.nseq != std::vector<int>{2, 4, 6})
        o.fail("U: m=" + show(fu.m) + " n=" + show(fu.nseq));
    if (!is_flagged_D_companion(U, ctx)) o.fail("U should be flagged");
}

void branching_golden(Outcome& o) {
    BranchingQuery q{8, {5, 4, 4, 3, 2, 2}, {2, 2, 2, 1, 1}, Group::O};
    auto r = multiplicity(q, ALL_METHODS);
    if (r.direct != 1 || r.barred != 1 || r.flagged != 1)
        o.fail("direct/barred/flagged = " + std::to_string(r.direct) + "/" + std::to_string(r.barred) + "/" +
               std::to_string(r.flagged));
    std::map<Partition, std::pair<long long, long long>> per;
    for (auto& t : r.terms) per[t.delta] = {t.barred, t.flagged};
    auto expect = [&](const Partition& d, long long v) {
        auto it = per.find(d);
        if (it == per.end()) return o.fail("delta " + show(d) + " missing from the range");
        if (it->second.first != v || it->second.second != v) o.fail("delta " + show(d) + " contributes wrongly");
    };
    expect({4, 2, 2, 2, 2}, 1);
    expect({4, 4, 2, 2}, 0);
    auto ew = enright_willenbring_check(8, 2, 2, 3, 2, q.lambda);
    if (ew.plus != 2 || ew.minus != 1 || ew.difference != 1 || !ew.equal)
        o.fail("EW difference " + std::to_string(ew.plus) + "-" + std::to_string(ew.minus));
}

void separation_goldens(Outcome& o) {
    using TC = TwoColumn;
    SpinorElement ex{8, {4, 3, 3, 2},
                     {TC{Kind::T, 4, {1, 3, 4, 5}, {1, 2}}, TC{Kind::T, 3, {1, 3, 4}, {1, 2}},
                      TC{Kind::T, 3, {1, 5, 6}, {1, 4}}, TC{Kind::T, 2, {1, 2, 3, 5}, {1, 2, 3, 4}}}};
    auto r = separate(ex);
    if (r.delta != Partition{4, 4, 2, 2}) o.fail("first example: delta " + show(r.delta));
    if (r.tail.rows != std::vector<std::vector<int>>{{1, 1, 1, 1}, {3, 3, 5, 5}, {4, 4, 6}, {5}})
        o.fail("first example: tail differs");
    if (!r.barred) o.fail("first example: tail not barred");

    SpinorElement neg{9, {4, 3, 3, 2, 1},
                      {TC{Kind::T, 4, {1, 3, 4, 5}, {1, 2}}, TC{Kind::T, 3, {1, 3, 4}, {1, 2}},
                       TC{Kind::T, 3, {1, 5, 6}, {1, 4}}, TC{Kind::T, 2, {1, 2, 3, 7}, {1, 2, 3, 6}},
                       TC{Kind::SP_MINUS, 0, {1, 2, 3, 4, 5}, {}}}};
    r = separate(neg);
    if (r.delta != Partition{6, 4, 2, 2, 2}) o.fail("negative example: delta " + show(r.delta));
    if (r.tail.rows != std::vector<std::vector<int>>{{1, 1, 1, 1, 3}, {3, 3, 5, 7}, {4, 4, 6}, {5}})
        o.fail("negative example: tail differs");

    SpinorElement sm{3, {2, 1}, {TC{Kind::T, 2, {1, 2, 3, 7}, {1, 2, 3, 6}}, TC{Kind::SP_MINUS, 0, {1, 2, 3, 4, 5}, {}}}};
    r = separate(sm);
    if (r.columns != std::vector<Column>{{1, 2, 3, 7}, {1, 2, 3}, {1, 2, 3, 4, 5, 6}} || r.tails != std::vector<int>{2, 1, 0})
        o.fail("spin-minus example: separated tableau differs");
    if (r.delta != Partition{6, 2, 2}) o.fail("spin-minus example: delta " + show(r.delta));
}

// --- the sweep over n <= 6, |lambda| <= 8 ---

struct Sweep {
    bool finished = false;
    long instances = 0, elements = 0, negative = 0, stable = 0;
    Outcome main, stable_range, padding;
    SlideAudit audit;
};

void run_sweep(Sweep& s, const Deadline& dl, int nmax = 6, int wmax = 8) {
    for (int n = 1; n <= nmax; ++n)
        for (int k = 0; k <= wmax; ++k)
            for (auto& mu : partitions_of(k, n)) {
                if (!in_P_O(n, mu)) continue;
                bool negative = !orthogonal_weight(n, mu).positive;
                auto ctx = make_context(n, mu);
                for (int L = k; L <= wmax; ++L)
                    for (auto& lam : partitions_of(L, n)) {
                        if (dl.expired()) return;
                        ++s.instances;
                        std::string where = "n=" + std::to_string(n) + " lam=" + show(lam) + " mu=" + show(mu);
                        BranchingQuery q{n, lam, mu, Group::O};
                        auto r = multiplicity(q, ALL_METHODS);
                        if (r.direct != r.barred || r.barred != r.flagged)
                            s.main.fail(where + ": direct/barred/flagged " + std::to_string(r.direct) + "/" +
                                        std::to_string(r.barred) + "/" + std::to_string(r.flagged));
                        std::set<std::pair<Partition, std::vector<std::vector<int>>>> image, barred;
                        for (auto& e : enumerate_LRd(mu, lam, n)) {
                            ++s.elements;
                            SeparationResult sr;
                            try {
                                sr = separate(e, -1, &s.audit);
                            } catch (const std::exception& ex) {
                                s.main.fail(where + ": separate threw " + ex.what());
                                continue;
                            }
                            if (!sr.barred || sr.lambda != lam) s.main.fail(where + ": image outside the barred set");
                            image.insert({sr.delta, sr.tail.rows});
                            if (negative) {
                                ++s.negative;
                                int a = default_padding(e);
                                try {
                                    if (!(separate(e, a) == separate(e, a + 2))) s.padding.fail(where + ": a vs a+2 differ");
                                } catch (const std::exception& ex) {
                                    s.padding.fail(where + ": " + ex.what());
                                }
                            }
                        }
                        if ((long long)image.size() != r.direct) s.main.fail(where + ": separate is not injective");
                        for (auto& d : delta_range(q))
                            for (auto& w : enumerate_lr(conjugate(lam), conjugate(d), conjugate(mu), LrKind::LATTICE))
                                if (is_barred_D_row(w.companion, ctx, d)) barred.insert({d, w.companion.rows});
                        if (image != barred) s.main.fail(where + ": image differs from the barred set");

                        if (2 * length(lam) <= n) {
                            ++s.stable;
                            for (auto& d : delta_range(q))
                                for (auto& w : enumerate_lr(lam, d, mu, LrKind::ANTI_LATTICE))
                                    if (!is_flagged_D_companion(w.companion, ctx))
                                        s.stable_range.fail(where + ": LR tableau rejected for delta " + show(d));
                            long long lw = littlewood_stable(q);
                            if (lw != r.flagged) s.stable_range.fail(where + ": Littlewood " + std::to_string(lw));
                        }
                    }
            }
    s.finished = true;
}

// --- generalized exponents ---

void genexp_checks(Outcome& o, const Deadline& dl, long& cases) {
    using oracle::RootType;
    Poly kb = K_so_odd({1, 1}, 2), kd = K_so_even({1, 1}, 3);
    Poly want_b = Poly::monomial(1) + Poly::monomial(3);
    Poly want_d = Poly::monomial(1) + Poly::monomial(2) + Poly::monomial(3);
    if (kb != want_b) o.fail("K_B(2,(1,1)) = " + kb.str());
    if (oracle::lusztig_zero_weight(RootType::B, 2, {1, 1}) != want_b) o.fail("oracle disagrees on B_2 adjoint");
    if (kd != want_d) o.fail("K_D(3,(1,1)) = " + kd.str());
    if (oracle::lusztig_zero_weight(RootType::D, 3, {1, 1}) != want_d) o.fail("oracle disagrees on D_3 adjoint");
    for (int m = 1; m <= 3; ++m)
        for (int k = 0; k <= 5; ++k)
            for (auto& mu : partitions_of(k, m))
                for (auto type : {GenexpType::B, GenexpType::D}) {
                    if (type == GenexpType::D && m < 2) continue;  // so_2 is abelian
                    if (dl.expired()) return o.fail("budget exhausted");
                    ++cases;
                    auto rt = type == GenexpType::B ? RootType::B : RootType::D;
                    std::string where = std::string(type == GenexpType::B ? "B" : "D") + std::to_string(m) + " mu=" + show(mu);
                    Poly K;
                    try {
                        K = type == GenexpType::B ? K_so_odd(mu, m) : K_so_even(mu, m);
                    } catch (const std::exception& ex) {
                        o.fail(where + ": " + ex.what());
                        continue;
                    }
                    if (!K.nonnegative()) o.fail(where + ": negative coefficient");
                    long long z = oracle::zero_weight_dim(rt, m, mu);
                    if (K.at_one() != z) o.fail(where + ": K(1)=" + std::to_string(K.at_one()) + " dim=" + std::to_string(z));
                    if (K != oracle::lusztig_zero_weight(rt, m, mu)) o.fail(where + ": differs from the Lusztig oracle");
                }
}

void identity_checks(Outcome& o, const Deadline& dl, long& cases) {
    for (int n = 1; n <= 5; ++n)
        for (int k = 0; k <= 3; ++k)
            for (auto& mu : partitions_of(k, n)) {
                if (!in_P_O(n, mu)) continue;
                if (dl.expired()) return o.fail("budget exhausted");
                ++cases;
                auto r = graded_identity_check(mu, n, 4);
                if (!r.equal) o.fail("n=" + std::to_string(n) + " mu=" + show(mu) + ": " + r.lhs.str() + " vs " + r.rhs.str());
            }
}

const char* kNames[] = {"",
                        "psi golden",
                        "flag-sequence goldens",
                        "branching golden",
                        "separation goldens",
                        "main bijection suite",
                        "stable range",
                        "sliding invariants",
                        "generalized exponents",
                        "graded identity",
                        "padding stability"};
const double kLimits[] = {0, 1, 1, 30, 5, 900, 900, 900, 600, 600, 900};

struct Runner {
    Deadline dl;
    std::optional<Sweep> sweep;
    double sweep_seconds = 0;

    Sweep& get_sweep() {
        if (!sweep) {
            auto t0 = Clock::now();
            sweep.emplace();
            run_sweep(*sweep, dl);
            sweep_seconds = std::chrono::duration<double>(Clock::now() - t0).count();
        }
        return *sweep;
    }

    CriterionReport run(int id) {
        if (id < 1 || id > 10) throw std::invalid_argument("criterion id must be 1..10");
        CriterionReport rep;
        rep.id = id;
        rep.name = kNames[id];
        rep.limit = kLimits[id];
        auto t0 = Clock::now();
        Outcome o;
        std::ostringstream info;
        bool from_sweep = id == 5 || id == 6 || id == 7 || id == 10;
        try {
            switch (id) {
            case 1: psi_golden(o); break;
            case 2: flag_goldens(o); break;
            case 3: branching_golden(o); break;
            case 4: separation_goldens(o); break;
            case 8: {
                long cases = 0;
                genexp_checks(o, dl, cases);
                info << cases << " cases";
                break;
            }
            case 9: {
                long cases = 0;
                identity_checks(o, dl, cases);
                info << cases << " cases";
                break;
            }
            default: {
                Sweep& s = get_sweep();
                if (!s.finished) o.fail("budget exhausted during the sweep");
                if (id == 5) {
                    info << s.instances << " instances, " << s.elements << " elements";
                    if (!s.main.pass) o.fail(s.main.msg.str());
                } else if (id == 6) {
                    info << s.stable << " stable instances";
                    if (!s.stable_range.pass) o.fail(s.stable_range.msg.str());
                } else if (id == 7) {
                    auto& a = s.audit;
                    info << a.applications << " applications, " << a.commute_checks << " commutation checks";
                    if (a.closed_agree != a.applications || a.knuth_ok != a.applications || a.commute_ok != a.commute_checks)
                        o.fail("audit counters disagree");
                    for (size_t i = 0; i < a.failures.size() && i < 5; ++i) o.fail(a.failures[i]);
                    if (a.applications == 0) o.fail("no slide was exercised");
                } else {
                    info << s.negative << " negative elements";
                    if (!s.padding.pass) o.fail(s.padding.msg.str());
                    if (s.negative == 0) o.fail("no negative instance was exercised");
                }
            }
            }
        } catch (const std::exception& ex) {
            o.fail(std::string("exception: ") + ex.what());
        }
        rep.seconds = std::chrono::duration<double>(Clock::now() - t0).count();
        if (from_sweep) rep.seconds = std::max(rep.seconds, sweep_seconds);  // the sweep is shared
        if (rep.limit > 0 && rep.seconds > rep.limit) o.fail("over the time limit");
        rep.pass = o.pass;
        std::string s = info.str();
        if (!o.pass) s += (s.empty() ? "" : "; ") + o.msg.str();
        rep.detail = s;
        return rep;
    }
};

}  // namespace

std::vector<int> suite_members(const std::string& suite) {
    if (suite == "all") return {1, 2, 3, 4, 5, 6, 7, 8, 9, 10};
    if (suite == "branching") return {1, 2, 3, 5, 6};
    if (suite == "separation") return {4, 7, 10};
    if (suite == "genexp") return {8, 9};
    throw std::invalid_argument("unknown suite " + suite);
}

CriterionReport run_criterion(int id, double budget) {
    Runner r{Deadline{Clock::now() + std::chrono::duration_cast<Clock::duration>(std::chrono::duration<double>(budget))}, {}, 0};
    return r.run(id);
}

std::vector<CriterionReport> run_suite(const std::string& suite, double budget) {
    auto ids = suite_members(suite);
    Runner r{Deadline{Clock::now() + std::chrono::duration_cast<Clock::duration>(std::chrono::duration<double>(budget))}, {}, 0};
    std::vector<CriterionReport> out;
    for (int id : ids) out.push_back(r.run(id));
    return out;
}

}  // namespace lrb
