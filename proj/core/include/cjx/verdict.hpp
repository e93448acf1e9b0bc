#ifndef CJX_VERDICT_HPP
#define CJX_VERDICT_HPP

#include <atomic>
#include <optional>
#include <string>
#include <utility>

#include "cjx/monoid.hpp"

namespace cjx {

enum class VerdictKind { Member, NonMember, Unknown };

inline const char* to_string(VerdictKind k) {
    switch (k) {
        case VerdictKind::Member: return "Member";
        case VerdictKind::NonMember: return "NonMember";
        case VerdictKind::Unknown: return "Unknown";
    }
    return "?";
}

/// Three-valued result of a bounded search. Member and NonMember are
/// final: they are produced only from sound certificates (a constructive
/// witness in the window, a decisive base-ring oracle, or a registered
/// explicit model) and are never revised by enlarging the window.
/// Unknown records the exhausted window and may be refined later.
struct Verdict {
    VerdictKind kind = VerdictKind::Unknown;
    /// Member: the witnessing s found by the search. Absent when the
    /// certificate came from a model and the witness lies beyond the window.
    std::optional<MonoidElement> witness;
    std::string explanation;
    /// Unknown: the bound that was exhausted.
    std::optional<MonoidElement> window;

    bool decisive() const { return kind != VerdictKind::Unknown; }
    bool is_member() const { return kind == VerdictKind::Member; }
    bool is_nonmember() const { return kind == VerdictKind::NonMember; }

    static Verdict member(std::optional<MonoidElement> w, std::string why) {
        return {VerdictKind::Member, std::move(w), std::move(why), std::nullopt};
    }
    static Verdict non_member(std::string certificate) {
        return {VerdictKind::NonMember, std::nullopt, std::move(certificate), std::nullopt};
    }
    static Verdict unknown(MonoidElement exhausted, std::string why = {}) {
        return {VerdictKind::Unknown, std::nullopt, std::move(why), std::move(exhausted)};
    }
};

/// Truncation of the unions over S: searches range over s <= bound
/// componentwise. The margin is the number of consecutive unchanged
/// steps after which a closure accumulation is reported as heuristically
/// stabilized (still flagged non-decisive unless a model certifies it).
struct SearchWindow {
    MonoidElement bound;
    int margin = 3;

    static SearchWindow of(long b, int margin = 3) { return {MonoidElement::of(b), margin}; }
};

/// Enumerates all s <= bound componentwise, graded by total degree and
/// lexicographic within a grade, so searches report the smallest witness.
template <typename F>
void for_each_in_window(const MonoidElement& bound, F&& visit) {
    const int k = bound.dim();
    std::vector<long> cur(static_cast<std::size_t>(k), 0);
    long maxTotal = 0;
    for (int i = 0; i < k; ++i) maxTotal += bound[i];
    for (long grade = 0; grade <= maxTotal; ++grade) {
        // enumerate vectors with given total, lexicographic
        std::fill(cur.begin(), cur.end(), 0);
        // simple recursive enumeration via explicit stack over positions
        auto rec = [&](auto&& self, int pos, long remaining) -> bool {
            if (pos == k - 1) {
                if (remaining > bound[pos]) return true;
                cur[static_cast<std::size_t>(pos)] = remaining;
                return visit(MonoidElement(std::vector<long>(cur)));
            }
            for (long v = 0; v <= std::min(remaining, bound[pos]); ++v) {
                cur[static_cast<std::size_t>(pos)] = v;
                if (!self(self, pos + 1, remaining - v)) return false;
            }
            return true;
        };
        if (!rec(rec, 0, grade)) return;  // visitor returned false: stop
    }
}

/// Global tally of cross-checks between search-based and model-based
/// answers. Any recorded contradiction is an implementation bug; the
/// acceptance suite requires the count to stay at zero.
class VerdictAudit {
  public:
    static std::atomic<long>& comparisons() {
        static std::atomic<long> n{0};
        return n;
    }
    static std::atomic<long>& contradictions() {
        static std::atomic<long> n{0};
        return n;
    }
    static void record_agreement() { ++comparisons(); }
    static void record_contradiction() {
        ++comparisons();
        ++contradictions();
    }
    static void reset() {
        comparisons() = 0;
        contradictions() = 0;
    }
};

}  // namespace cjx

#endif
