#ifndef CJX_NUMBERS_HPP
#define CJX_NUMBERS_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

namespace cjx {

// All coefficient arithmetic in the engine is exact. No floating point.
using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Integer int_gcd(const Integer& a, const Integer& b) {
    return boost::multiprecision::gcd(a, b);
}

inline Integer int_abs(const Integer& a) { return a < 0 ? Integer(-a) : a; }

inline Integer int_pow(Integer base, unsigned long e) {
    Integer r = 1;
    while (e) {
        if (e & 1) r *= base;
        base *= base;
        e >>= 1;
    }
    return r;
}

/// Euclidean division with remainder in [0, |b|). Requires b != 0.
inline void euclid_divmod(const Integer& a, const Integer& b, Integer& q, Integer& r) {
    q = a / b;  // truncated
    r = a - q * b;
    if (r < 0) {
        if (b > 0) {
            q -= 1;
            r += b;
        } else {
            q += 1;
            r -= b;
        }
    }
}

/// 2-adic valuation of a nonzero integer.
inline long v2(const Integer& a) {
    if (a == 0) throw std::invalid_argument("v2(0) undefined");
    return static_cast<long>(boost::multiprecision::lsb(int_abs(a)));
}

/// 2-adic valuation of a nonzero rational (negative when the reduced
/// denominator is even).
inline long v2(const Rational& a) {
    if (a == 0) throw std::invalid_argument("v2(0) undefined");
    const Integer num = boost::multiprecision::numerator(a);
    const Integer den = boost::multiprecision::denominator(a);
    long v = v2(num);
    if ((den & 1) == 0) v -= v2(den);
    return v;
}

inline Integer num(const Rational& a) { return boost::multiprecision::numerator(a); }
inline Integer den(const Rational& a) { return boost::multiprecision::denominator(a); }

inline bool is_integer(const Rational& a) { return den(a) == 1; }

/// Is the reduced denominator a power of two?
inline bool is_dyadic(const Rational& a) {
    Integer d = den(a);
    return (d & (d - 1)) == 0;
}

inline Rational rat_pow(const Rational& base, long e) {
    if (e < 0) {
        if (base == 0) throw std::invalid_argument("0^negative");
        Rational inv = Rational(den(base), num(base));
        return rat_pow(inv, -e);
    }
    Rational r = 1, b = base;
    unsigned long k = static_cast<unsigned long>(e);
    while (k) {
        if (k & 1) r *= b;
        b *= b;
        k >>= 1;
    }
    return r;
}

inline std::string to_string(const Integer& a) { return a.str(); }

inline std::string to_string(const Rational& a) {
    if (is_integer(a)) return num(a).str();
    return num(a).str() + "/" + den(a).str();
}

}  // namespace cjx

#endif
