#ifndef CJX_ZPOLY_HPP
#define CJX_ZPOLY_HPP

#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "cjx/dense_poly.hpp"
#include "cjx/monoid.hpp"
#include "cjx/numbers.hpp"
#include "cjx/qpoly.hpp"

namespace cjx {

using ZPoly = DensePoly<Integer>;

/// Raised when the degree-capped search for Z[x] preimage ideals runs out
/// of budget without a completeness certificate. Carries the partial
/// generator list found so far; callers treat the result as non-decisive.
class DegreeBoundExceeded : public std::runtime_error {
  public:
    DegreeBoundExceeded(std::vector<ZPoly> partial, int cap)
        : std::runtime_error("Z[x] preimage-ideal search exceeded degree cap " + std::to_string(cap)),
          partial_gens(std::move(partial)),
          degree_cap(cap) {}

    std::vector<ZPoly> partial_gens;
    int degree_cap;
};

/// A strong Groebner basis of an ideal of Z[x]: every ideal element is
/// top-reducible by some basis element (deg g <= deg f and lc g | lc f).
/// Built by S-polynomial / gcd-polynomial completion over the Euclidean
/// domain Z, with full divmod reduction.
class ZStrongGroebner {
  public:
    explicit ZStrongGroebner(std::span<const ZPoly> gens);

    bool contains(const ZPoly& f) const;
    ZPoly reduce(ZPoly f) const;
    const std::vector<ZPoly>& basis() const { return basis_; }

  private:
    std::vector<ZPoly> basis_;  // sign-normalized (lc > 0), sorted by (deg, lc)
};

/// The base ring Z[x] with the action sigma(x) = c * x^d; c integral,
/// nonzero, and |c| >= 2 when d = 1.
class ZPolyRing {
  public:
    using Element = ZPoly;
    static constexpr bool kMembershipActInvariant = false;

    ZPolyRing(Integer c, int d, int degree_cap = 24);

    int k() const { return 1; }
    const Integer& c() const { return c_; }
    int d() const { return d_; }
    int degree_cap() const { return cap_; }
    std::string name() const;

    Element act(const MonoidElement& s, const Element& f) const;
    std::optional<Element> preimage(const MonoidElement& s, const Element& f) const;

    bool ideal_contains(const Element& r, std::span<const Element> gens) const;
    bool is_regular(const Element& r) const { return !r.is_zero(); }

    /// Generators of { f in R : act(s, f) in <gens> }, assembled from exact
    /// degree slices (integer lattice kernels against the strong Groebner
    /// spans). Complete when a monic pure power x^m certifies that all
    /// higher slices are generated; otherwise throws DegreeBoundExceeded
    /// with the partial answer.
    PreimageIdealResult<Element> preimage_ideal(const MonoidElement& s,
                                                std::span<const Element> gens) const;

  private:
    Element act_once(const Element& f) const;
    std::optional<Element> preimage_once(const Element& f) const;

    Integer c_;
    int d_;
    int cap_;
};

/// gcd of all coefficients, >= 0; 0 for the zero polynomial.
Integer zpoly_content(const ZPoly& f);

ZPoly to_zpoly(const QPoly& f);  // throws if a coefficient is non-integral
QPoly to_qpoly(const ZPoly& f);

}  // namespace cjx

#endif
