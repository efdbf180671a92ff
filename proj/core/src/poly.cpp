#include "lrb/poly.hpp"

#include <sstream>

namespace lrb {

void Poly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Poly Poly::monomial(int e, long long coef) {
    std::vector<long long> c(e + 1, 0);
    c[e] = coef;
    return Poly(c);
}

long long Poly::at_one() const {
    long long s = 0;
    for (auto x : c_) s += x;
    return s;
}

bool Poly::nonnegative() const {
    for (auto x : c_)
        if (x < 0) return false;
    return true;
}

Poly& Poly::operator+=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), 0);
    for (size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), 0);
    for (size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly();
    std::vector<long long> c(a.c_.size() + b.c_.size() - 1, 0);
    for (size_t i = 0; i < a.c_.size(); ++i)
        for (size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
    return Poly(c);
}

Poly Poly::truncated(int max_deg) const {
    std::vector<long long> c = c_;
    if ((int)c.size() > max_deg + 1) c.resize(max_deg + 1);
    return Poly(c);
}

Poly Poly::divided_by(const Poly& d, bool& ok) const {
    ok = false;
    if (d.is_zero()) return Poly();
    long long lead = d.c_.back();
    std::vector<long long> rem = c_;
    int dd = d.degree();
    if (degree() < dd) {
        ok = is_zero();
        return Poly();
    }
    std::vector<long long> q(degree() - dd + 1, 0);
    for (int k = degree(); k >= dd; --k) {
        if (rem[k] % lead != 0) return Poly();
        long long f = rem[k] / lead;
        q[k - dd] = f;
        for (int j = 0; j <= dd; ++j) rem[k - dd + j] -= f * d.c_[j];
    }
    for (auto x : rem)
        if (x != 0) return Poly();
    ok = true;
    return Poly(q);
}

std::map<int, long long> Poly::sparse() const {
    std::map<int, long long> m;
    for (size_t i = 0; i < c_.size(); ++i)
        if (c_[i]) m[(int)i] = c_[i];
    return m;
}

std::string Poly::str() const {
    if (c_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (size_t i = 0; i < c_.size(); ++i) {
        if (!c_[i]) continue;
        if (!first) os << (c_[i] > 0 ? " + " : " - ");
        else if (c_[i] < 0) os << "-";
        long long a = c_[i] < 0 ? -c_[i] : c_[i];
        if (i == 0) os << a;
        else {
            if (a != 1) os << a;
            os << "t";
            if (i > 1) os << "^" << i;
        }
        first = false;
    }
    return os.str();
}

Poly inverse_product_series(const std::vector<int>& degs, int max_deg) {
    std::vector<long long> s(max_deg + 1, 0);
    s[0] = 1;
    for (int d : degs) {
        if (d <= 0) continue;
        for (int k = d; k <= max_deg; ++k) s[k] += s[k - d];
    }
    return Poly(s);
}

}  // namespace lrb
