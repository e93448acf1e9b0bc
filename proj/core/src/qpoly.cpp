#include "cjx/qpoly.hpp"

#include <stdexcept>

namespace cjx {

QPolyRing::QPolyRing(Rational c, int d) : c_(std::move(c)), d_(d) {
    if (c_ == 0 || d_ < 1) throw std::invalid_argument("QPolyRing: action x -> c*x^d needs c != 0, d >= 1");
    if (d_ == 1 && (c_ == 1 || c_ == -1))
        throw std::invalid_argument("QPolyRing: x -> c*x with c a root of unity is not admissible");
}

std::string QPolyRing::name() const {
    return "QPoly{c=" + to_string(c_) + ",d=" + std::to_string(d_) + "}";
}

QPoly QPolyRing::act_once(const QPoly& f) const {
    // f(x) -> f(c * x^d): coefficient a_i moves to exponent d*i scaled by c^i.
    if (f.is_zero()) return f;
    std::vector<Rational> r(static_cast<std::size_t>(f.degree()) * static_cast<std::size_t>(d_) + 1,
                            Rational(0));
    Rational cp = 1;
    for (int i = 0; i <= f.degree(); ++i) {
        if (f.coeff(i) != 0) r[static_cast<std::size_t>(i) * static_cast<std::size_t>(d_)] = f.coeff(i) * cp;
        cp *= c_;
    }
    return QPoly(std::move(r));
}

QPoly QPolyRing::act(const MonoidElement& s, const QPoly& f) const {
    QPoly r = f;
    for (long n = 0; n < s[0]; ++n) r = act_once(r);
    return r;
}

std::optional<QPoly> QPolyRing::preimage_once(const QPoly& f) const {
    if (f.is_zero()) return f;
    if (f.degree() % d_ != 0) return std::nullopt;
    std::vector<Rational> r(static_cast<std::size_t>(f.degree() / d_) + 1, Rational(0));
    for (int i = 0; i <= f.degree(); ++i) {
        if (f.coeff(i) == 0) continue;
        if (i % d_ != 0) return std::nullopt;
        r[static_cast<std::size_t>(i / d_)] = f.coeff(i);
    }
    Rational cp = 1;
    for (std::size_t i = 0; i < r.size(); ++i) {
        if (r[i] != 0) r[i] /= cp;
        cp *= c_;
    }
    return QPoly(std::move(r));
}

std::optional<QPoly> QPolyRing::preimage(const MonoidElement& s, const QPoly& f) const {
    QPoly r = f;
    for (long n = 0; n < s[0]; ++n) {
        auto p = preimage_once(r);
        if (!p) return std::nullopt;
        r = std::move(*p);
    }
    return r;
}

QPoly qpoly_gcd_list(std::span<const QPoly> gens) {
    QPoly g;
    for (const QPoly& f : gens) g = field_gcd(g, f);
    return g;
}

bool QPolyRing::ideal_contains(const QPoly& r, std::span<const QPoly> gens) const {
    QPoly g = qpoly_gcd_list(gens);
    if (g.is_zero()) return r.is_zero();
    return field_div_exact(r, g).has_value();
}

QPoly QPolyRing::action_image_of_x(long n) const {
    QPoly u = QPoly::x();
    for (long i = 0; i < n; ++i) u = act_once(u);
    return u;
}

QPoly minimal_monic_kernel(const QPoly& u, const QPoly& g) {
    if (g.is_zero() || g.degree() < 1)
        throw std::invalid_argument("minimal_monic_kernel: need deg g >= 1");
    const int n = g.degree();
    const std::size_t un = static_cast<std::size_t>(n);

    // Powers of u mod g, as column vectors of length n.
    std::vector<QPoly> pw;
    pw.reserve(un + 1);
    pw.push_back(QPoly::constant(Rational(1)));
    const QPoly ured = field_divmod(u, g).remainder;
    for (int i = 1; i <= n; ++i) pw.push_back(field_divmod(pw.back() * ured, g).remainder);

    for (int m = 1; m <= n; ++m) {
        // Solve sum_{i<m} a_i * pw[i] = -pw[m]: n equations, m unknowns.
        const std::size_t um = static_cast<std::size_t>(m);
        std::vector<std::vector<Rational>> A(un, std::vector<Rational>(um + 1, Rational(0)));
        for (std::size_t j = 0; j < um; ++j)
            for (std::size_t row = 0; row < un; ++row) A[row][j] = pw[j].coeff(static_cast<int>(row));
        for (std::size_t row = 0; row < un; ++row) A[row][um] = -pw[um].coeff(static_cast<int>(row));

        std::size_t rank = 0;
        std::vector<std::size_t> pivotCol;
        for (std::size_t col = 0; col < um && rank < un; ++col) {
            std::size_t piv = rank;
            while (piv < un && A[piv][col] == 0) ++piv;
            if (piv == un) continue;
            std::swap(A[piv], A[rank]);
            const Rational inv = Rational(1) / A[rank][col];
            for (std::size_t j = col; j <= um; ++j) A[rank][j] *= inv;
            for (std::size_t row = 0; row < un; ++row) {
                if (row == rank || A[row][col] == 0) continue;
                const Rational f = A[row][col];
                for (std::size_t j = col; j <= um; ++j) A[row][j] -= f * A[rank][j];
            }
            pivotCol.push_back(col);
            ++rank;
        }

        bool consistent = true;
        for (std::size_t row = rank; row < un; ++row)
            if (A[row][um] != 0) {
                consistent = false;
                break;
            }
        if (!consistent) continue;

        std::vector<Rational> a(um, Rational(0));
        for (std::size_t i = 0; i < rank; ++i) a[pivotCol[i]] = A[i][um];
        a.push_back(Rational(1));  // monic x^m
        return QPoly(std::move(a));
    }
    throw std::logic_error("minimal_monic_kernel: no solution up to deg g (impossible)");
}

PreimageIdealResult<QPoly> QPolyRing::preimage_ideal(const MonoidElement& s,
                                                     std::span<const QPoly> gens) const {
    QPoly g = qpoly_gcd_list(gens);
    if (g.is_zero()) return {{}, true};  // preimage of the zero ideal is zero (injectivity)
    if (g.is_constant()) return {{QPoly::constant(Rational(1))}, true};
    if (s.is_zero()) return {{g}, true};
    const QPoly u = action_image_of_x(s[0]);
    return {{minimal_monic_kernel(u, g)}, true};
}

}  // namespace cjx
