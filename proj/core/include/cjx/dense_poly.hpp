#ifndef CJX_DENSE_POLY_HPP
#define CJX_DENSE_POLY_HPP

#include <cassert>
#include <cstddef>
#include <initializer_list>
#include <utility>
#include <vector>

namespace cjx {

/// Dense univariate polynomial over an exact coefficient type. Canonical
/// form: trailing (leading) zeros trimmed, so equality is coefficient-wise
/// and degree() is honest. The zero polynomial has degree -1.
template <typename T>
class DensePoly {
  public:
    DensePoly() = default;
    explicit DensePoly(std::vector<T> coeffs) : c_(std::move(coeffs)) { trim(); }
    DensePoly(std::initializer_list<T> coeffs) : c_(coeffs) { trim(); }

    static DensePoly zero() { return DensePoly(); }
    static DensePoly constant(T a) {
        DensePoly p;
        p.c_.push_back(std::move(a));
        p.trim();
        return p;
    }
    static DensePoly monomial(T a, int e) {
        DensePoly p;
        p.c_.assign(static_cast<std::size_t>(e) + 1, T(0));
        p.c_.back() = std::move(a);
        p.trim();
        return p;
    }
    static DensePoly x() { return monomial(T(1), 1); }

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    const T& leading() const {
        assert(!c_.empty());
        return c_.back();
    }
    T coeff(int i) const {
        if (i < 0 || i >= static_cast<int>(c_.size())) return T(0);
        return c_[static_cast<std::size_t>(i)];
    }
    const std::vector<T>& coeffs() const { return c_; }

    bool is_constant() const { return c_.size() <= 1; }

    friend bool operator==(const DensePoly&, const DensePoly&) = default;

    friend DensePoly operator+(const DensePoly& a, const DensePoly& b) {
        std::vector<T> r(std::max(a.c_.size(), b.c_.size()), T(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i) r[i] += a.c_[i];
        for (std::size_t i = 0; i < b.c_.size(); ++i) r[i] += b.c_[i];
        return DensePoly(std::move(r));
    }
    friend DensePoly operator-(const DensePoly& a, const DensePoly& b) {
        std::vector<T> r(std::max(a.c_.size(), b.c_.size()), T(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i) r[i] += a.c_[i];
        for (std::size_t i = 0; i < b.c_.size(); ++i) r[i] -= b.c_[i];
        return DensePoly(std::move(r));
    }
    DensePoly operator-() const {
        std::vector<T> r = c_;
        for (T& v : r) v = -v;
        return DensePoly(std::move(r));
    }
    friend DensePoly operator*(const DensePoly& a, const DensePoly& b) {
        if (a.is_zero() || b.is_zero()) return DensePoly();
        std::vector<T> r(a.c_.size() + b.c_.size() - 1, T(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i] == T(0)) continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
        }
        return DensePoly(std::move(r));
    }
    friend DensePoly operator*(const T& a, const DensePoly& p) {
        std::vector<T> r = p.c_;
        for (T& v : r) v = a * v;
        return DensePoly(std::move(r));
    }

    /// p * x^e
    DensePoly shifted(int e) const {
        if (is_zero()) return DensePoly();
        std::vector<T> r(static_cast<std::size_t>(e), T(0));
        r.insert(r.end(), c_.begin(), c_.end());
        return DensePoly(std::move(r));
    }

    /// Substitution p(q). Horner over the coefficient ring.
    DensePoly compose(const DensePoly& q) const {
        DensePoly r;
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * q + constant(*it);
        return r;
    }

    T eval(const T& v) const {
        T r(0);
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * v + *it;
        return r;
    }

  private:
    void trim() {
        while (!c_.empty() && c_.back() == T(0)) c_.pop_back();
    }
    std::vector<T> c_;
};

/// Division with remainder when the divisor's leading coefficient is a
/// unit (always over a field; for monic divisors over any ring).
template <typename T>
struct PolyDivMod {
    DensePoly<T> quotient, remainder;
};

template <typename T>
PolyDivMod<T> field_divmod(const DensePoly<T>& a, const DensePoly<T>& b) {
    assert(!b.is_zero());
    DensePoly<T> r = a, q;
    while (!r.is_zero() && r.degree() >= b.degree()) {
        T c = r.leading() / b.leading();
        int e = r.degree() - b.degree();
        DensePoly<T> m = DensePoly<T>::monomial(c, e);
        q = q + m;
        r = r - m * b;
    }
    return {q, r};
}

/// Exact division over a field-coefficient ring; nullopt if not divisible.
template <typename T>
std::optional<DensePoly<T>> field_div_exact(const DensePoly<T>& a, const DensePoly<T>& b) {
    auto [q, r] = field_divmod(a, b);
    if (!r.is_zero()) return std::nullopt;
    return q;
}

/// Monic gcd over a field (Euclid). gcd(0,0) = 0.
template <typename T>
DensePoly<T> field_gcd(DensePoly<T> a, DensePoly<T> b) {
    while (!b.is_zero()) {
        auto [q, r] = field_divmod(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.is_zero()) a = (T(1) / a.leading()) * a;
    return a;
}

/// Extended Euclid over a field: returns (g, u, v) with u*a + v*b = g monic.
template <typename T>
struct PolyBezout {
    DensePoly<T> g, u, v;
};

template <typename T>
PolyBezout<T> field_ext_gcd(const DensePoly<T>& a, const DensePoly<T>& b) {
    DensePoly<T> r0 = a, r1 = b;
    DensePoly<T> u0 = DensePoly<T>::constant(T(1)), u1;
    DensePoly<T> v0, v1 = DensePoly<T>::constant(T(1));
    while (!r1.is_zero()) {
        auto [q, r] = field_divmod(r0, r1);
        DensePoly<T> u2 = u0 - q * u1, v2 = v0 - q * v1;
        r0 = std::move(r1);
        r1 = std::move(r);
        u0 = std::move(u1);
        u1 = std::move(u2);
        v0 = std::move(v1);
        v1 = std::move(v2);
    }
    if (!r0.is_zero()) {
        T inv = T(1) / r0.leading();
        r0 = inv * r0;
        u0 = inv * u0;
        v0 = inv * v0;
    }
    return {r0, u0, v0};
}

}  // namespace cjx

#endif
