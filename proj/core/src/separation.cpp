#include "lrb/separation.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "lrb/flags.hpp"

namespace lrb {

namespace {

std::optional<ColumnTuple> act(int j, const ColumnTuple& t, bool raise) {
    if (j < 1 || j + 1 >= (int)t.cols.size()) throw std::invalid_argument("bicrystal: j out of range");
    auto p = raise ? calE(t.cols[j + 1], t.cols[j]) : calF(t.cols[j + 1], t.cols[j]);
    if (!p) return std::nullopt;
    ColumnTuple out = t;
    out.cols[j + 1] = p->first;
    out.cols[j] = p->second;
    return out;
}

Word flatten(const std::vector<Column>& cols) {
    Word w;
    for (auto& c : cols) w.insert(w.end(), c.begin(), c.end());
    return w;
}

// 1 for case (i), 2 for case (ii), 0 for identity
int slide_case(int j, const ColumnTuple& t) {
    int a = t.tails[j];
    if (a == 0) return 0;
    const Column& up = t.cols[j + 1];
    const Column& lo = t.cols[j];
    if ((int)lo.size() < a) throw std::logic_error("sliding: tail longer than its column");
    if (up.empty()) return 1;
    int x = from_bottom(up, 1), y = from_bottom(lo, a);
    if (x == y) throw std::logic_error("sliding: U_{j+1}(1) = U_j(a)");
    return x < y ? 1 : 2;
}

std::string show(const Column& c) {
    std::string s = "(";
    for (size_t i = 0; i < c.size(); ++i) s += (i ? "," : "") + std::to_string(c[i]);
    return s + ")";
}

}  // namespace

std::optional<ColumnTuple> bicrystal_E(int j, const ColumnTuple& t) { return act(j, t, true); }
std::optional<ColumnTuple> bicrystal_F(int j, const ColumnTuple& t) { return act(j, t, false); }

ColumnTuple sliding_closed(int j, const ColumnTuple& t) {
    int kind = slide_case(j, t);
    if (kind == 0) return t;
    int a = t.tails[j];
    ColumnTuple out = t;
    const Column& up = t.cols[j + 1];
    const Column& lo = t.cols[j];
    Column nu, nl;
    if (kind == 1) {
        nu = up;
        nu.insert(nu.end(), lo.end() - a, lo.end());
        nl.assign(lo.begin(), lo.end() - a);
    } else {
        if (up.size() < 2) throw std::logic_error("sliding: case (ii) needs |U_{j+1}| >= 2");
        nu.assign(up.begin(), up.end() - 1);  // drops U_{j+1}(1), keeps U_{j+1}(2)
        nu.insert(nu.end(), lo.end() - (a - 1), lo.end());
        nl.assign(lo.begin(), lo.end() - (a - 1));
        nl.push_back(up.back());
    }
    out.cols[j + 1] = nu;
    out.cols[j] = nl;
    out.tails[j + 1] = a;
    out.tails[j] = 0;
    return out;
}

ColumnTuple sliding_operator(int j, const ColumnTuple& t) {
    int kind = slide_case(j, t);
    if (kind == 0) return t;
    int a = t.tails[j];
    auto need = [](std::optional<ColumnTuple> x, const char* what) {
        if (!x) throw std::logic_error(std::string("sliding: ") + what + " vanished");
        return *x;
    };
    ColumnTuple cur = t;
    if (kind == 1) {
        for (int k = 0; k < a; ++k) cur = need(bicrystal_F(j, cur), "F_j");
    } else {
        if (j < 2) throw std::logic_error("sliding: case (ii) needs U_{j-1}");
        cur = need(bicrystal_F(j - 1, cur), "F_{j-1}");
        for (int k = 0; k < a - 1; ++k) cur = need(bicrystal_F(j, cur), "F_j");
        cur = need(bicrystal_E(j - 1, cur), "E_{j-1}");
        cur = need(bicrystal_E(j, cur), "E_j");
        if (cur.cols[j - 1] != t.cols[j - 1]) throw std::logic_error("sliding: U_{j-1} changed");
    }
    cur.tails[j + 1] = a;
    cur.tails[j] = 0;
    return cur;
}

ColumnTuple sliding_S(int j, const ColumnTuple& t, SlideAudit* audit) {
    ColumnTuple out = sliding_closed(j, t);
    if (!audit) return out;
    ++audit->applications;
    std::string where = "S_" + std::to_string(j) + " on " + show(t.cols[j + 1]) + "," + show(t.cols[j]);
    try {
        if (sliding_operator(j, t) == out) ++audit->closed_agree;
        else audit->failures.push_back(where + ": closed and operator forms differ");
    } catch (const std::exception& ex) {
        audit->failures.push_back(where + ": operator form threw: " + ex.what());
    }
    if (insertion_normal_form(flatten(t.cols)) == insertion_normal_form(flatten(out.cols))) ++audit->knuth_ok;
    else audit->failures.push_back(where + ": not Knuth equivalent");
    return out;
}

// closed forms always compose; operator forms only where both orders are defined
static void check_commutation(const ColumnTuple& t, const std::vector<int>& js, SlideAudit* audit) {
    if (!audit) return;
    for (size_t x = 0; x < js.size(); ++x)
        for (size_t y = x + 1; y < js.size(); ++y) {
            int j = js[x], k = js[y];
            std::string tag = "S_" + std::to_string(j) + " and S_" + std::to_string(k);
            ++audit->commute_checks;
            if (sliding_closed(j, sliding_closed(k, t)) == sliding_closed(k, sliding_closed(j, t))) ++audit->commute_ok;
            else audit->failures.push_back(tag + ": closed forms do not commute");
            std::optional<ColumnTuple> jk, kj;
            try { jk = sliding_operator(j, sliding_operator(k, t)); } catch (const std::logic_error&) {}
            try { kj = sliding_operator(k, sliding_operator(j, t)); } catch (const std::logic_error&) {}
            if (!jk || !kj) continue;
            ++audit->commute_checks;
            if (*jk == *kj) ++audit->commute_ok;
            else audit->failures.push_back(tag + ": operator forms do not commute");
        }
}

// apply S_top, S_{top-2}, ..., S_2
static ColumnTuple slide_all(ColumnTuple t, int top, SlideAudit* audit) {
    std::vector<int> js;
    for (int j = top; j >= 2; j -= 2) js.push_back(j);
    check_commutation(t, js, audit);
    for (int j : js) t = sliding_S(j, t, audit);
    return t;
}

// indexed tuple: cols[k] = U_k, cols[0] empty unless there is a spin column
static ColumnTuple indexed_tuple(const SpinorElement& e) {
    auto u = u_columns(e);
    auto tl = u_tails(e);
    bool sp = !e.comps.empty() && e.comps.back().is_sp();
    ColumnTuple t;
    if (!sp) {
        t.cols.push_back({});
        t.tails.push_back(0);
    }
    t.cols.insert(t.cols.end(), u.begin(), u.end());
    t.tails.insert(t.tails.end(), tl.begin(), tl.end());
    return t;
}

static Partition drop_first_row(const Partition& mu) {
    return mu.empty() ? mu : Partition(mu.begin() + 1, mu.end());
}

int default_padding(const SpinorElement& e) {
    int mx = 0;
    for (auto& c : u_columns(e))
        for (int x : c) mx = std::max(mx, x);
    return 2 * (mx + e.n + weight(e.mu));
}

SpinorElement pad_negative(const SpinorElement& e, int a) {
    auto w = orthogonal_weight(e.n, e.mu);
    if (w.positive) throw std::invalid_argument("pad_negative: weight is not in the negative case");
    if (a <= 0 || a % 2) throw std::invalid_argument("pad_negative: padding height must be even and positive");
    auto t = indexed_tuple(e);
    int m = w.q, ell = w.M;
    Column U;
    for (int k = 1; k <= a; ++k) U.push_back(k);
    Partition eta(w.mu_bar.begin(), w.mu_bar.begin() + ell);
    eta.push_back(1);
    SpinorElement out{2 * ell + 2, canonical(eta), {}};
    for (int i = 0; i < ell; ++i) out.comps.push_back(e.comps[i]);
    out.comps.push_back(TwoColumn{Kind::T, 1, t.cols[2 * m], U});
    if (!validate_element(out)) throw std::invalid_argument("pad_negative: padded element is not admissible (padding too small?)");
    return out;
}

StepResult slide_step(const SpinorElement& e, int pad, SlideAudit* audit, SlideTrace* trace) {
    auto w = orthogonal_weight(e.n, e.mu);
    ColumnTuple t = indexed_tuple(e);
    bool sp = !e.comps.empty() && e.comps.back().is_sp();
    std::vector<Column> nc;
    std::vector<int> ntails;
    StepResult res;
    ColumnTuple after;
    auto keep = [&](const ColumnTuple& s, int from, int to) {
        for (int k = from; k <= to; ++k) {
            if (k == 0 && !sp) continue;
            nc.push_back(s.cols[k]);
            ntails.push_back(s.tails[k]);
        }
    };
    if (w.positive) {
        int top = (int)t.cols.size() - 1;  // 2l
        after = slide_all(t, top - 2, audit);
        res.left = after.cols[top];
        res.left_tail = after.tails[top];
        keep(after, 0, top - 1);
    } else {
        if (pad < 0) pad = default_padding(e);
        pad_negative(e, pad);
        int m = w.q, N = 2 * w.M + 2;
        ColumnTuple V;
        V.cols.push_back({});
        V.tails.push_back(0);
        Column U;
        for (int k = 1; k <= pad; ++k) U.push_back(k);
        V.cols.push_back(U);
        V.tails.push_back(0);
        for (int k = 2; k <= N; ++k) {
            V.cols.push_back(t.cols[2 * m + k - 2]);
            V.tails.push_back(k == 2 ? 1 : t.tails[2 * m + k - 2]);
        }
        after = slide_all(V, N - 2, audit);
        res.left = after.cols[N];
        res.left_tail = after.tails[N];
        keep(t, 0, 2 * m - 1);
        for (int k = 2; k <= N - 1; ++k) {
            nc.push_back(after.cols[k]);
            ntails.push_back(after.tails[k]);
        }
    }
    res.next = element_from_u(e.n - 1, drop_first_row(e.mu), nc);
    if (u_tails(res.next) != ntails) throw std::logic_error("slide_step: tails do not match the smaller template");
    if (!validate_element(res.next)) throw std::logic_error("slide_step: result is not admissible");
    if (trace) {
        trace->n = e.n;
        trace->mu = e.mu;
        trace->before = u_columns(e);
        trace->after = after.cols;
        trace->left = res.left;
        trace->left_tail = res.left_tail;
    }
    return res;
}

static bool initial(const Column& c, int len) {
    for (int k = 0; k < len; ++k)
        if (c[k] != k + 1) return false;
    return true;
}

SeparationResult separate(const SpinorElement& e0, int pad, SlideAudit* audit, std::vector<SlideTrace>* trace) {
    if (!validate_element(e0)) throw std::invalid_argument("separate: not an element of T(mu,n)");
    if (!is_l_highest_element(e0)) throw std::invalid_argument("separate: element is not l-highest");
    SeparationResult r;
    SpinorElement e = e0;
    while (e.n > 3) {
        SlideTrace st;
        auto s = slide_step(e, pad, audit, trace ? &st : nullptr);
        if (trace) trace->push_back(st);
        r.columns.push_back(s.left);
        r.tails.push_back(s.left_tail);
        e = s.next;
    }
    auto w = orthogonal_weight(e.n, e.mu);
    if (!w.positive && w.M == 1) {
        // n = 3: pad with a long column, slide once, drop the padding
        if (pad < 0) pad = default_padding(e);
        pad_negative(e, pad);
        auto t = indexed_tuple(e);
        ColumnTuple V;
        Column U;
        for (int k = 1; k <= pad; ++k) U.push_back(k);
        V.cols = {{}, U, t.cols[0], t.cols[1], t.cols[2]};
        V.tails = {0, 0, 1, t.tails[1], t.tails[2]};
        V = slide_all(V, 2, audit);
        for (int k = 4; k >= 2; --k) {
            r.columns.push_back(V.cols[k]);
            r.tails.push_back(V.tails[k]);
        }
        if (trace) {
            SlideTrace st;
            st.n = e.n;
            st.mu = e.mu;
            st.before = u_columns(e);
            st.after = V.cols;
            trace->push_back(st);
        }
    } else {
        auto u = u_columns(e);
        auto tl = u_tails(e);
        for (int k = (int)u.size() - 1; k >= 0; --k) {
            r.columns.push_back(u[k]);
            r.tails.push_back(tl[k]);
        }
    }

    // read off body and tail
    std::vector<int> heights;
    std::vector<Column> tail_cols;
    for (size_t k = 0; k < r.columns.size(); ++k) {
        const Column& c = r.columns[k];
        int a = r.tails[k], h = (int)c.size() - a;
        if (h < 0 || !initial(c, h)) throw std::logic_error("separate: body column is not 1..k");
        if (!heights.empty() && h < heights.back()) throw std::logic_error("separate: body heights decrease");
        heights.push_back(h);
        if (a > 0) tail_cols.emplace_back(c.end() - a, c.end());
    }
    std::reverse(heights.begin(), heights.end());
    r.delta = canonical(heights);
    for (int d : r.delta)
        if (d % 2) throw std::logic_error("separate: body has an odd row");
    r.tail = from_columns(tail_cols);
    if (shape(r.tail) != conjugate(e0.mu)) throw std::logic_error("separate: tail shape is not mu'");
    if (!is_semistandard(r.tail)) throw std::logic_error("separate: tail is not semistandard");
    Tableau ins = tableau_insert(r.tail, highest_tableau(conjugate(r.delta)));
    Tableau nf = insertion_normal_form(element_word(e0));
    if (ins != nf || !is_l_highest(nf)) throw std::logic_error("separate: tail does not insert to the element's class");
    r.lambda = conjugate(shape(nf));
    r.barred = is_barred_D_row(r.tail, make_context(e0.n, e0.mu), r.delta);
    return r;
}

SpinorElement reconstruct_n4(const Partition& delta0, const Tableau& W, const Partition& mu0) {
    Partition mu = canonical(mu0), delta = canonical(delta0);
    if (length(delta) > 4) throw std::invalid_argument("reconstruct_n4: l(delta) > 4");
    std::vector<Column> V(5);
    for (int i = 1; i <= 4; ++i)
        for (int k = 1; k <= part(delta, i); ++k) V[i].push_back(k);
    auto join = [](Column a, const Column& b) {
        a.insert(a.end(), b.begin(), b.end());
        return a;
    };
    SpinorElement e{4, mu, {}};
    if (mu.empty()) {
        if (W.size()) throw std::invalid_argument("reconstruct_n4: tail must be empty for mu = 0");
        e.comps = {TwoColumn{Kind::T, 0, V[4], V[3]}, TwoColumn{Kind::T, 0, V[2], V[1]}};
    } else {
        if (length(mu) != 2) throw std::invalid_argument("reconstruct_n4: needs mu'_1 = 2");
        if (shape(W) != conjugate(mu) || !is_semistandard(W)) throw std::invalid_argument("reconstruct_n4: tail has the wrong shape");
        auto cols = W.columns();
        const Column &W2 = cols[0], &W1 = cols[1];
        int a2 = (int)W2.size(), a1 = (int)W1.size();
        auto fs = flag_sequences_row(W, make_context(4, mu), delta);
        if (fs.not_in_set || fs.m.size() < 2) throw std::invalid_argument("reconstruct_n4: tail is outside the flagged set");
        if (fs.m[1] == 3) {
            e.comps = {TwoColumn{Kind::T, a2, join(V[4], W2), V[3]}, TwoColumn{Kind::T, a1, join(V[2], W1), V[1]}};
        } else if (fs.m[1] == 2) {
            if (V[2].size() < 2) throw std::invalid_argument("reconstruct_n4: body too short for m_2 = 2");
            Column v3 = V[3];
            v3.push_back(from_bottom(W1, a1));
            v3.push_back(from_bottom(V[2], 1));
            Column l1(V[2].begin(), V[2].end() - 2);
            l1.push_back(from_bottom(V[2], 2));
            l1.insert(l1.end(), W1.begin() + 1, W1.end());
            e.comps = {TwoColumn{Kind::T, a2, join(V[4], W2), v3}, TwoColumn{Kind::T, a1, l1, V[1]}};
        } else {
            throw std::invalid_argument("reconstruct_n4: m_2 must be 2 or 3");
        }
    }
    if (!validate_element(e)) throw std::invalid_argument("reconstruct_n4: construction is not admissible");
    return e;
}

}  // namespace lrb
