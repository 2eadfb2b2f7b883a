#pragma once

#include <compare>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>

namespace mseg {

/// A nonempty segment [a,b] on a single cuspidal line.
///
/// Only the exponents are kept; the cuspidal base is implicit. The empty
/// segment [a,a-1] is never stored: operations that may produce it return
/// `std::optional<Segment>` instead.
///
/// The defaulted ordering is lexicographic in (a,b), which is exactly the
/// order written ≺^L elsewhere ("a < a'" or "a = a' and b < b'").
class Segment {
public:
    constexpr Segment(int a, int b) : a_(a), b_(b) {
        if (b < a) {
            throw std::invalid_argument("segment [" + std::to_string(a) + "," +
                                        std::to_string(b) + "] is empty");
        }
    }

    /// Singleton segment [c].
    static constexpr Segment point(int c) { return Segment(c, c); }

    constexpr int a() const noexcept { return a_; }
    constexpr int b() const noexcept { return b_; }
    constexpr int length() const noexcept { return b_ - a_ + 1; }

    constexpr bool contains(int c) const noexcept { return a_ <= c && c <= b_; }
    constexpr bool contains(const Segment& other) const noexcept {
        return a_ <= other.a_ && other.b_ <= b_;
    }

    friend constexpr auto operator<=>(const Segment&, const Segment&) = default;
    friend constexpr bool operator==(const Segment&, const Segment&) = default;

private:
    int a_;
    int b_;
};

/// True iff `first < second` as linked segments: a < a' <= b+1 <= b'.
constexpr bool precedes(const Segment& first, const Segment& second) noexcept {
    return first.a() < second.a() && second.a() <= first.b() + 1 && first.b() + 1 <= second.b();
}

constexpr bool is_linked(const Segment& d1, const Segment& d2) noexcept {
    return precedes(d1, d2) || precedes(d2, d1);
}

/// -[a,b] = [a+1,b]; a singleton truncates to nothing.
constexpr std::optional<Segment> left_truncate(const Segment& d) noexcept {
    if (d.a() + 1 > d.b()) {
        return std::nullopt;
    }
    return Segment(d.a() + 1, d.b());
}

/// (d1 ∪ d2, d1 ∩ d2) for a linked pair, in either argument order.
/// The intersection is absent for adjacent segments.
inline std::pair<Segment, std::optional<Segment>> union_intersection(const Segment& d1,
                                                                     const Segment& d2) {
    if (!is_linked(d1, d2)) {
        throw std::invalid_argument("union_intersection: segments are not linked");
    }
    const Segment& lo = precedes(d1, d2) ? d1 : d2;
    const Segment& hi = precedes(d1, d2) ? d2 : d1;
    std::optional<Segment> meet;
    if (hi.a() <= lo.b()) {
        meet = Segment(hi.a(), lo.b());
    }
    return {Segment(lo.a(), hi.b()), meet};
}

}  // namespace mseg
