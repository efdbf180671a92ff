#include "lrb/partitions.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <stdexcept>

namespace lrb {

Partition canonical(Partition p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
    return p;
}

bool is_partition(const Partition& p) {
    for (size_t i = 0; i < p.size(); ++i) {
        if (p[i] < 0) return false;
        if (i + 1 < p.size() && p[i] < p[i + 1]) return false;
    }
    return true;
}

int weight(const Partition& p) {
    int s = 0;
    for (int x : p) s += x;
    return s;
}

int length(const Partition& p) {
    int l = 0;
    for (int x : p)
        if (x > 0) ++l;
    return l;
}

int part(const Partition& p, int i) {
    return (i >= 1 && i <= (int)p.size()) ? p[i - 1] : 0;
}

Partition conjugate(const Partition& p) {
    Partition q;
    if (p.empty() || p[0] == 0) return q;
    q.assign(p[0], 0);
    for (int x : p)
        for (int j = 0; j < x; ++j) ++q[j];
    return q;
}

bool contains(const Partition& outer, const Partition& inner) {
    for (size_t i = 0; i < inner.size(); ++i)
        if (inner[i] > part(outer, (int)i + 1)) return false;
    return true;
}

static bool all_even(const Partition& p) {
    return std::all_of(p.begin(), p.end(), [](int x) { return x % 2 == 0; });
}

bool is_in_family(const Partition& p, Family f, int max_length) {
    if (max_length >= 0 && length(p) > max_length) return false;
    switch (f) {
        case Family::ALL: return true;
        case Family::EVEN_ROWS: return all_even(p);
        case Family::EVEN_COLUMNS: return all_even(conjugate(p));
        case Family::BOTH: return all_even(p) && all_even(conjugate(p));
    }
    return false;
}

std::vector<Partition> partitions_of(int w, int max_length, int max_part) {
    std::vector<Partition> out;
    if (w < 0) return out;
    if (max_part < 0 || max_part > w) max_part = w;
    Partition cur;
    std::function<void(int, int)> rec = [&](int rest, int cap) {
        if (rest == 0) {
            out.push_back(cur);
            return;
        }
        if (max_length >= 0 && (int)cur.size() >= max_length) return;
        for (int x = std::min(cap, rest); x >= 1; --x) {
            cur.push_back(x);
            rec(rest - x, x);
            cur.pop_back();
        }
    };
    rec(w, max_part);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Partition> enumerate_family(Family f, int max_weight, int max_length) {
    std::vector<Partition> out;
    for (int w = 0; w <= max_weight; ++w)
        for (auto& p : partitions_of(w, max_length))
            if (is_in_family(p, f)) out.push_back(p);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<int> reverse_padded(const Partition& d, int n) {
    if (length(d) > n) throw std::invalid_argument("reverse_padded: length exceeds n");
    std::vector<int> r(n, 0);
    for (int i = 1; i <= n; ++i) r[i - 1] = part(d, n - i + 1);
    return r;
}

std::string to_string(const Partition& p) {
    std::ostringstream os;
    os << "(";
    for (size_t i = 0; i < p.size(); ++i) os << (i ? "," : "") << p[i];
    os << ")";
    return os.str();
}

Partition parse_partition(const std::string& s) {
    Partition p;
    std::string tok;
    std::istringstream is(s);
    while (std::getline(is, tok, ',')) {
        tok.erase(std::remove_if(tok.begin(), tok.end(), ::isspace), tok.end());
        if (tok.empty()) continue;
        size_t used = 0;
        int v = -1;
        try {
            v = std::stoi(tok, &used);
        } catch (const std::logic_error&) {
            throw std::invalid_argument("bad partition: " + s);
        }
        if (used != tok.size() || v < 0) throw std::invalid_argument("bad partition: " + s);
        p.push_back(v);
    }
    if (!is_partition(p)) throw std::invalid_argument("not weakly decreasing: " + s);
    return canonical(p);
}

}  // namespace lrb
