#include "cjx/zpoly.hpp"

#include <algorithm>
#include <deque>

#include "cjx/intlat.hpp"

namespace cjx {

namespace {

ZPoly sign_normalize(ZPoly f) {
    if (!f.is_zero() && f.leading() < 0) f = -f;
    return f;
}

void ext_gcd(const Integer& a, const Integer& b, Integer& g, Integer& x, Integer& y) {
    Integer r0 = a, r1 = b, x0 = 1, x1 = 0, y0 = 0, y1 = 1;
    while (r1 != 0) {
        Integer q = r0 / r1;
        Integer r2 = r0 - q * r1, x2 = x0 - q * x1, y2 = y0 - q * y1;
        r0 = std::move(r1);
        r1 = std::move(r2);
        x0 = std::move(x1);
        x1 = std::move(x2);
        y0 = std::move(y1);
        y1 = std::move(y2);
    }
    if (r0 < 0) {
        r0 = -r0;
        x0 = -x0;
        y0 = -y0;
    }
    g = r0;
    x = x0;
    y = y0;
}

bool poly_less(const ZPoly& a, const ZPoly& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    if (int_abs(a.leading()) != int_abs(b.leading())) return int_abs(a.leading()) < int_abs(b.leading());
    return a.coeffs() < b.coeffs();
}

/// Full normal form against a degree-sorted basis. Each step either kills
/// the leading term or strictly shrinks |lc| via Euclidean division, so
/// the loop terminates; irreducible leading terms move to the remainder.
ZPoly reduce_with(ZPoly f, const std::vector<ZPoly>& basis) {
    ZPoly result;
    while (!f.is_zero()) {
        bool step = false;
        for (const ZPoly& g : basis) {
            if (g.degree() > f.degree()) break;
            Integer q, r;
            euclid_divmod(f.leading(), g.leading(), q, r);
            if (q == 0) continue;
            f = f - q * g.shifted(f.degree() - g.degree());
            step = true;
            break;
        }
        if (!step) {
            result = result + ZPoly::monomial(f.leading(), f.degree());
            f = f - ZPoly::monomial(f.leading(), f.degree());
        }
    }
    return result;
}

}  // namespace

Integer zpoly_content(const ZPoly& f) {
    Integer g = 0;
    for (const Integer& a : f.coeffs()) g = int_gcd(g, a);
    return g;
}

ZPoly to_zpoly(const QPoly& f) {
    std::vector<Integer> c(f.coeffs().size());
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (!is_integer(f.coeffs()[i])) throw std::invalid_argument("to_zpoly: non-integral coefficient");
        c[i] = num(f.coeffs()[i]);
    }
    return ZPoly(std::move(c));
}

QPoly to_qpoly(const ZPoly& f) {
    std::vector<Rational> c(f.coeffs().size());
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = Rational(f.coeffs()[i]);
    return QPoly(std::move(c));
}

ZPoly ZStrongGroebner::reduce(ZPoly f) const { return reduce_with(std::move(f), basis_); }

bool ZStrongGroebner::contains(const ZPoly& f) const { return reduce(f).is_zero(); }

ZStrongGroebner::ZStrongGroebner(std::span<const ZPoly> gens) {
    for (const ZPoly& g : gens)
        if (!g.is_zero()) basis_.push_back(sign_normalize(g));
    std::sort(basis_.begin(), basis_.end(), poly_less);
    basis_.erase(std::unique(basis_.begin(), basis_.end()), basis_.end());

    std::deque<std::pair<std::size_t, std::size_t>> pairs;
    auto enqueue_all = [&] {
        pairs.clear();
        for (std::size_t i = 0; i < basis_.size(); ++i)
            for (std::size_t j = i + 1; j < basis_.size(); ++j) pairs.emplace_back(i, j);
    };
    enqueue_all();

    while (!pairs.empty()) {
        auto [i, j] = pairs.front();
        pairs.pop_front();
        const ZPoly f = basis_[i], g = basis_[j];
        const int m = std::max(f.degree(), g.degree());
        const Integer a = f.leading(), b = g.leading();
        const Integer l = a / int_gcd(a, b) * b;

        // S-polynomial (cancels leading terms) and gcd-polynomial (leading
        // coefficient gcd(a,b)); both are required for a *strong* basis
        // over the Euclidean coefficient domain.
        ZPoly spoly = (l / a) * f.shifted(m - f.degree()) - (l / b) * g.shifted(m - g.degree());
        Integer gab, x, y;
        ext_gcd(a, b, gab, x, y);
        ZPoly gpoly = x * f.shifted(m - f.degree()) + y * g.shifted(m - g.degree());

        for (ZPoly* h : {&spoly, &gpoly}) {
            ZPoly red = sign_normalize(reduce_with(std::move(*h), basis_));
            if (red.is_zero()) continue;
            basis_.push_back(std::move(red));
            std::sort(basis_.begin(), basis_.end(), poly_less);
            enqueue_all();
        }
    }

    // Interreduce to a canonical basis: deterministic output for the same
    // ideal presentation.
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t i = 0; i < basis_.size(); ++i) {
            std::vector<ZPoly> others;
            others.reserve(basis_.size() - 1);
            for (std::size_t j = 0; j < basis_.size(); ++j)
                if (j != i) others.push_back(basis_[j]);
            ZPoly red = sign_normalize(reduce_with(basis_[i], others));
            if (red == basis_[i]) continue;
            changed = true;
            if (red.is_zero()) {
                basis_.erase(basis_.begin() + static_cast<std::ptrdiff_t>(i));
            } else {
                basis_[i] = std::move(red);
            }
            std::sort(basis_.begin(), basis_.end(), poly_less);
            break;  // restart the pass after any change
        }
    }
}

ZPolyRing::ZPolyRing(Integer c, int d, int degree_cap) : c_(std::move(c)), d_(d), cap_(degree_cap) {
    if (c_ == 0 || d_ < 1) throw std::invalid_argument("ZPolyRing: action x -> c*x^d needs c != 0, d >= 1");
    if (d_ == 1 && int_abs(c_) < 2)
        throw std::invalid_argument("ZPolyRing: x -> c*x needs |c| >= 2 for an admissible action");
    if (cap_ < 1) throw std::invalid_argument("ZPolyRing: degree cap must be positive");
}

std::string ZPolyRing::name() const {
    return "ZPoly{c=" + to_string(c_) + ",d=" + std::to_string(d_) + "}";
}

ZPoly ZPolyRing::act_once(const ZPoly& f) const {
    if (f.is_zero()) return f;
    std::vector<Integer> r(static_cast<std::size_t>(f.degree()) * static_cast<std::size_t>(d_) + 1,
                           Integer(0));
    Integer cp = 1;
    for (int i = 0; i <= f.degree(); ++i) {
        if (f.coeff(i) != 0) r[static_cast<std::size_t>(i) * static_cast<std::size_t>(d_)] = f.coeff(i) * cp;
        cp *= c_;
    }
    return ZPoly(std::move(r));
}

ZPoly ZPolyRing::act(const MonoidElement& s, const ZPoly& f) const {
    ZPoly r = f;
    for (long n = 0; n < s[0]; ++n) r = act_once(r);
    return r;
}

std::optional<ZPoly> ZPolyRing::preimage_once(const ZPoly& f) const {
    if (f.is_zero()) return f;
    if (f.degree() % d_ != 0) return std::nullopt;
    std::vector<Integer> r(static_cast<std::size_t>(f.degree() / d_) + 1, Integer(0));
    for (int i = 0; i <= f.degree(); ++i) {
        if (f.coeff(i) == 0) continue;
        if (i % d_ != 0) return std::nullopt;
        r[static_cast<std::size_t>(i / d_)] = f.coeff(i);
    }
    Integer cp = 1;
    for (std::size_t i = 0; i < r.size(); ++i) {
        if (r[i] != 0) {
            if (r[i] % cp != 0) return std::nullopt;
            r[i] /= cp;
        }
        cp *= c_;
    }
    return ZPoly(std::move(r));
}

std::optional<ZPoly> ZPolyRing::preimage(const MonoidElement& s, const ZPoly& f) const {
    ZPoly r = f;
    for (long n = 0; n < s[0]; ++n) {
        auto p = preimage_once(r);
        if (!p) return std::nullopt;
        r = std::move(*p);
    }
    return r;
}

bool ZPolyRing::ideal_contains(const ZPoly& r, std::span<const ZPoly> gens) const {
    return ZStrongGroebner(gens).contains(r);
}

PreimageIdealResult<ZPoly> ZPolyRing::preimage_ideal(const MonoidElement& s,
                                                     std::span<const ZPoly> gens) const {
    std::vector<ZPoly> nz;
    for (const ZPoly& g : gens)
        if (!g.is_zero()) nz.push_back(g);
    if (nz.empty()) return {{}, true};  // zero ideal pulls back to zero
    if (s.is_zero()) return {nz, true};

    const long n = s[0];
    ZStrongGroebner gb(nz);

    // act(s, x^i) = gamma^i * x^(delta * i)
    Integer gamma = 1;
    long delta = 1;
    for (long step = 0; step < n; ++step) {
        // sigma(gamma * x^delta) = gamma * c^delta * x^(d * delta)
        gamma *= int_pow(c_, static_cast<unsigned long>(delta));
        delta *= d_;
    }

    std::vector<ZPoly> acc;
    auto acc_contains = [&](const ZPoly& f) {
        if (acc.empty()) return f.is_zero();
        return ZStrongGroebner(acc).contains(f);
    };

    for (long m = 0; m <= cap_; ++m) {
        const long N = delta * m;  // image degree of slice m
        if (N > 4096) throw DegreeBoundExceeded(acc, cap_);

        // Monic pure-power certificate: once x^m maps into the ideal, every
        // slice above m is generated by x^m together with the exact slices
        // already collected, so the accumulated list is complete.
        const ZPoly pure =
            ZPoly::monomial(int_pow(gamma, static_cast<unsigned long>(m)), static_cast<int>(N));
        if (gb.contains(pure)) {
            ZPoly xm = ZPoly::monomial(Integer(1), static_cast<int>(m));
            if (!acc_contains(xm)) acc.push_back(std::move(xm));
            return {acc, true};
        }

        // Exact slice m: { a in Z^{m+1} : sum_i a_i gamma^i x^{delta i} in
        // span_Z{ x^j g : g in GB, j + deg g <= N } }. Elements of the ideal
        // of degree <= N are exactly the Z-span of those shifts (strong
        // basis, top reduction), so the slice is the a-projection of an
        // integer kernel.
        std::vector<std::vector<Integer>> colsW;
        for (const ZPoly& g : gb.basis()) {
            for (long j = 0; j + g.degree() <= N; ++j) {
                std::vector<Integer> col(static_cast<std::size_t>(N) + 1, 0);
                for (int t = 0; t <= g.degree(); ++t) col[static_cast<std::size_t>(j + t)] = g.coeff(t);
                colsW.push_back(std::move(col));
            }
        }
        const std::size_t aCols = static_cast<std::size_t>(m) + 1;
        const std::size_t totalCols = aCols + colsW.size();
        IntMatrix A(static_cast<std::size_t>(N) + 1, std::vector<Integer>(totalCols, 0));
        Integer gp = 1;
        for (long i = 0; i <= m; ++i) {
            A[static_cast<std::size_t>(delta * i)][static_cast<std::size_t>(i)] = gp;
            gp *= gamma;
        }
        for (std::size_t w = 0; w < colsW.size(); ++w)
            for (std::size_t r = 0; r <= static_cast<std::size_t>(N); ++r) A[r][aCols + w] = -colsW[w][r];

        for (const auto& v : integer_kernel(A, totalCols)) {
            std::vector<Integer> coeffs(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(aCols));
            ZPoly f = sign_normalize(ZPoly(std::move(coeffs)));
            if (f.is_zero() || acc_contains(f)) continue;
            acc.push_back(std::move(f));
        }
    }
    throw DegreeBoundExceeded(acc, cap_);
}

}  // namespace cjx
