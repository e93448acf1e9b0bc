#ifndef CJX_QPOLY_HPP
#define CJX_QPOLY_HPP

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "cjx/dense_poly.hpp"
#include "cjx/monoid.hpp"
#include "cjx/numbers.hpp"

namespace cjx {

using QPoly = DensePoly<Rational>;

/// Generators of a preimage ideal together with a completeness flag.
/// Over Q[x] the computation always terminates with complete = true; the
/// Z[x] counterpart may return a partial (degree-capped) answer.
template <typename P>
struct PreimageIdealResult {
    std::vector<P> gens;
    bool complete = true;
};

/// Smallest monic h with h(u) == 0 mod g, over Q[x]. Requires deg g >= 1.
/// Exists with deg h <= deg g (the characteristic polynomial of
/// multiplication by u on Q[x]/(g) is one candidate), found degree by
/// degree with exact linear algebra.
QPoly minimal_monic_kernel(const QPoly& u, const QPoly& g);

/// The base ring Q[x] carrying the action sigma(x) = c * x^d. Injectivity
/// requires c != 0 and, when d = 1, c not a root of unity (c != +-1).
class QPolyRing {
  public:
    using Element = QPoly;
    static constexpr bool kMembershipActInvariant = true;

    QPolyRing(Rational c, int d);

    int k() const { return 1; }
    const Rational& c() const { return c_; }
    int d() const { return d_; }
    std::string name() const;

    Element act(const MonoidElement& s, const Element& f) const;
    std::optional<Element> preimage(const MonoidElement& s, const Element& f) const;

    bool ideal_contains(const Element& r, std::span<const Element> gens) const;
    bool is_regular(const Element& r) const { return !r.is_zero(); }

    /// Generators of { f in R : act(s, f) in <gens> }.
    PreimageIdealResult<Element> preimage_ideal(const MonoidElement& s,
                                                std::span<const Element> gens) const;

    /// sigma^n(x) as a polynomial (a monomial gamma * x^(d^n)).
    Element action_image_of_x(long n) const;

    bool operator==(const QPolyRing& o) const { return c_ == o.c_ && d_ == o.d_; }

  private:
    Element act_once(const Element& f) const;
    std::optional<Element> preimage_once(const Element& f) const;

    Rational c_;
    int d_;
};

/// Monic gcd of a generator list; zero for an empty/zero list.
QPoly qpoly_gcd_list(std::span<const QPoly> gens);

}  // namespace cjx

#endif
