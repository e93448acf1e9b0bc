#ifndef CJX_MONOID_HPP
#define CJX_MONOID_HPP

#include <algorithm>
#include <cassert>
#include <compare>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace cjx {

/// Element of the acting monoid S = N^k (componentwise addition). The k
/// generators are commuting injective endomorphisms of the base ring;
/// composition of their actions corresponds to exponent addition.
class MonoidElement {
  public:
    explicit MonoidElement(int k = 1) : e_(static_cast<std::size_t>(k), 0) {}
    explicit MonoidElement(std::vector<long> exps) : e_(std::move(exps)) {
        for (long v : e_) assert(v >= 0);
    }

    static MonoidElement zero(int k) { return MonoidElement(k); }
    static MonoidElement unit(int k, int i) {
        MonoidElement m(k);
        m.e_[static_cast<std::size_t>(i)] = 1;
        return m;
    }
    /// Convenience for the cyclic case k = 1.
    static MonoidElement of(long n) { return MonoidElement(std::vector<long>{n}); }

    int dim() const { return static_cast<int>(e_.size()); }
    long operator[](int i) const { return e_[static_cast<std::size_t>(i)]; }
    long& at(int i) { return e_[static_cast<std::size_t>(i)]; }
    const std::vector<long>& exponents() const { return e_; }

    bool is_zero() const {
        return std::all_of(e_.begin(), e_.end(), [](long v) { return v == 0; });
    }
    long total() const {
        long t = 0;
        for (long v : e_) t += v;
        return t;
    }
    /// Componentwise order (the divisibility order of N^k).
    bool leq(const MonoidElement& o) const {
        assert(dim() == o.dim());
        for (int i = 0; i < dim(); ++i)
            if (e_[static_cast<std::size_t>(i)] > o[i]) return false;
        return true;
    }

    friend bool operator==(const MonoidElement&, const MonoidElement&) = default;
    auto operator<=>(const MonoidElement& o) const { return e_ <=> o.e_; }

    std::string str() const {
        std::string s;
        for (std::size_t i = 0; i < e_.size(); ++i) {
            if (i) s += ',';
            s += std::to_string(e_[i]);
        }
        return s;
    }

  private:
    std::vector<long> e_;
};

inline MonoidElement compose(const MonoidElement& s, const MonoidElement& t) {
    assert(s.dim() == t.dim());
    std::vector<long> e(static_cast<std::size_t>(s.dim()));
    for (int i = 0; i < s.dim(); ++i) e[static_cast<std::size_t>(i)] = s[i] + t[i];
    return MonoidElement(std::move(e));
}

/// Minimal solution of the left Ore condition t1*s1 = t2*s2. The common
/// value is the componentwise max of s1 and s2; any other solution
/// dominates it in the divisibility order.
struct OrePair {
    MonoidElement t1, t2, common;
};

inline OrePair ore_pair(const MonoidElement& s1, const MonoidElement& s2) {
    assert(s1.dim() == s2.dim());
    const int k = s1.dim();
    std::vector<long> c(static_cast<std::size_t>(k)), a(static_cast<std::size_t>(k)),
        b(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) {
        c[static_cast<std::size_t>(i)] = std::max(s1[i], s2[i]);
        a[static_cast<std::size_t>(i)] = c[static_cast<std::size_t>(i)] - s1[i];
        b[static_cast<std::size_t>(i)] = c[static_cast<std::size_t>(i)] - s2[i];
    }
    return {MonoidElement(std::move(a)), MonoidElement(std::move(b)), MonoidElement(std::move(c))};
}

/// u with compose(u, t) = s, when t <= s componentwise.
inline std::optional<MonoidElement> divide_exact(const MonoidElement& s, const MonoidElement& t) {
    assert(s.dim() == t.dim());
    std::vector<long> e(static_cast<std::size_t>(s.dim()));
    for (int i = 0; i < s.dim(); ++i) {
        if (t[i] > s[i]) return std::nullopt;
        e[static_cast<std::size_t>(i)] = s[i] - t[i];
    }
    return MonoidElement(std::move(e));
}

inline MonoidElement componentwise_max(const MonoidElement& a, const MonoidElement& b) {
    return ore_pair(a, b).common;
}

/// Element of the group of left quotients S^{-1}S = Z^k. The S-action on
/// the extension ring is by automorphisms, so it extends to this group.
class GroupElement {
  public:
    explicit GroupElement(int k = 1) : e_(static_cast<std::size_t>(k), 0) {}
    explicit GroupElement(std::vector<long> exps) : e_(std::move(exps)) {}
    GroupElement(const MonoidElement& m) : e_(m.exponents()) {}  // NOLINT: embedding

    static GroupElement of(long n) { return GroupElement(std::vector<long>{n}); }

    int dim() const { return static_cast<int>(e_.size()); }
    long operator[](int i) const { return e_[static_cast<std::size_t>(i)]; }

    GroupElement operator-() const {
        std::vector<long> e = e_;
        for (long& v : e) v = -v;
        return GroupElement(std::move(e));
    }
    friend GroupElement operator+(const GroupElement& a, const GroupElement& b) {
        assert(a.dim() == b.dim());
        std::vector<long> e(static_cast<std::size_t>(a.dim()));
        for (int i = 0; i < a.dim(); ++i) e[static_cast<std::size_t>(i)] = a[i] + b[i];
        return GroupElement(std::move(e));
    }
    friend bool operator==(const GroupElement&, const GroupElement&) = default;

    /// Positive part: max(g, 0) componentwise.
    MonoidElement positive_part() const {
        std::vector<long> e(static_cast<std::size_t>(dim()));
        for (int i = 0; i < dim(); ++i) e[static_cast<std::size_t>(i)] = std::max(e_[static_cast<std::size_t>(i)], 0L);
        return MonoidElement(std::move(e));
    }
    /// Negative part: max(-g, 0) componentwise, so g = positive - negative.
    MonoidElement negative_part() const { return (-*this).positive_part(); }

    std::string str() const {
        std::string s;
        for (std::size_t i = 0; i < e_.size(); ++i) {
            if (i) s += ',';
            s += std::to_string(e_[i]);
        }
        return s;
    }

  private:
    std::vector<long> e_;
};

}  // namespace cjx

#endif
