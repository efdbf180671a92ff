#pragma once

#include <map>
#include <string>
#include <vector>

namespace lrb {

// integer polynomial in t, dense coefficients, trailing zeros trimmed
class Poly {
public:
    Poly() = default;
    explicit Poly(std::vector<long long> c) : c_(std::move(c)) { trim(); }
    static Poly monomial(int e, long long coef = 1);

    int degree() const { return (int)c_.size() - 1; }  // -1 for zero
    bool is_zero() const { return c_.empty(); }
    long long operator[](int e) const { return e >= 0 && e < (int)c_.size() ? c_[e] : 0; }
    const std::vector<long long>& coeffs() const { return c_; }
    long long at_one() const;
    bool nonnegative() const;

    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(const Poly& a, const Poly& b);
    bool operator==(const Poly&) const = default;

    Poly truncated(int max_deg) const;
    // exact division; ok is false when d does not divide
    Poly divided_by(const Poly& d, bool& ok) const;

    std::map<int, long long> sparse() const;
    std::string str() const;

private:
    void trim();
    std::vector<long long> c_;
};

// 1/prod(1 - t^{d}) for d in degs, as a power series up to max_deg
Poly inverse_product_series(const std::vector<int>& degs, int max_deg);

}  // namespace lrb
