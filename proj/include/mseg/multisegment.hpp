#pragma once

#include <algorithm>
#include <cstddef>
#include <functional>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <vector>

#include "segment.hpp"

namespace mseg {

/// Finite multiset of segments, stored sorted in (a,b)-lex order.
///
/// Two multisegments compare equal iff they hold the same segments with the
/// same multiplicities. The empty multisegment is a valid value.
class Multisegment {
public:
    using const_iterator = std::vector<Segment>::const_iterator;

    Multisegment() = default;
    Multisegment(std::initializer_list<Segment> segs) : segs_(segs) {
        std::sort(segs_.begin(), segs_.end());
    }
    explicit Multisegment(std::vector<Segment> segs) : segs_(std::move(segs)) {
        std::sort(segs_.begin(), segs_.end());
    }

    std::span<const Segment> segments() const noexcept { return segs_; }
    const_iterator begin() const noexcept { return segs_.begin(); }
    const_iterator end() const noexcept { return segs_.end(); }
    std::size_t size() const noexcept { return segs_.size(); }
    bool empty() const noexcept { return segs_.empty(); }
    const Segment& front() const { return segs_.front(); }
    const Segment& back() const { return segs_.back(); }

    std::size_t count(const Segment& d) const {
        auto [lo, hi] = std::equal_range(segs_.begin(), segs_.end(), d);
        return static_cast<std::size_t>(hi - lo);
    }
    bool contains(const Segment& d) const { return std::binary_search(segs_.begin(), segs_.end(), d); }

    void add(const Segment& d) { segs_.insert(std::upper_bound(segs_.begin(), segs_.end(), d), d); }
    void add(const std::optional<Segment>& d) {
        if (d) {
            add(*d);
        }
    }
    void add(const Multisegment& other) {
        for (const auto& d : other) {
            add(d);
        }
    }

    /// Removes one copy of `d`; returns false if `d` does not occur.
    bool erase_one(const Segment& d) {
        auto it = std::lower_bound(segs_.begin(), segs_.end(), d);
        if (it == segs_.end() || *it != d) {
            return false;
        }
        segs_.erase(it);
        return true;
    }

    /// Multiset difference; throws if `other` is not contained in `*this`.
    void subtract(const Multisegment& other) {
        for (const auto& d : other) {
            if (!erase_one(d)) {
                throw std::invalid_argument("multisegment subtraction: segment not present");
            }
        }
    }

    Multisegment with(const Segment& d) const {
        Multisegment out = *this;
        out.add(d);
        return out;
    }
    Multisegment without(const Segment& d) const {
        Multisegment out = *this;
        if (!out.erase_one(d)) {
            throw std::invalid_argument("multisegment: segment not present");
        }
        return out;
    }

    /// Smallest left endpoint; precondition: nonempty.
    int min_a() const { return segs_.front().a(); }

    friend bool operator==(const Multisegment&, const Multisegment&) = default;
    friend auto operator<=>(const Multisegment& x, const Multisegment& y) {
        return std::lexicographical_compare_three_way(x.segs_.begin(), x.segs_.end(), y.segs_.begin(),
                                                      y.segs_.end());
    }

private:
    std::vector<Segment> segs_;
};

struct MultisegmentHash {
    std::size_t operator()(const Multisegment& m) const noexcept {
        std::size_t h = 0xcbf29ce484222325ULL;
        for (const auto& d : m) {
            h ^= static_cast<std::size_t>(static_cast<unsigned>(d.a())) * 0x9e3779b97f4a7c15ULL;
            h *= 0x100000001b3ULL;
            h ^= static_cast<std::size_t>(static_cast<unsigned>(d.b())) + 0x7f4a7c15ULL;
            h *= 0x100000001b3ULL;
        }
        return h;
    }
};

/// Scalar context. The degree of the cuspidal base only rescales absolute
/// lengths; it never influences ordering or removal.
struct Config {
    int rho_degree = 1;

    explicit Config(int degree = 1) : rho_degree(degree) {
        if (degree < 1) {
            throw std::invalid_argument("rho degree must be positive");
        }
    }
};

/// An ascending order: every earlier/later pair is unlinked or has a strictly
/// smaller left endpoint first.
inline bool is_ascending(std::span<const Segment> seq) {
    for (std::size_t i = 0; i < seq.size(); ++i) {
        for (std::size_t j = i + 1; j < seq.size(); ++j) {
            if (is_linked(seq[i], seq[j]) && !(seq[i].a() < seq[j].a())) {
                return false;
            }
        }
    }
    return true;
}

/// The canonical ascending order, (a,b)-lex. Same-a segments are nested and
/// hence unlinked, so the result always passes `is_ascending`.
inline std::vector<Segment> ascending_sort(const Multisegment& m) {
    return {m.begin(), m.end()};
}

/// m[c]: segments with left endpoint c.
inline Multisegment select_a(const Multisegment& m, int c) {
    std::vector<Segment> out;
    std::copy_if(m.begin(), m.end(), std::back_inserter(out), [c](const Segment& d) { return d.a() == c; });
    return Multisegment(std::move(out));
}

/// m<c>: segments with right endpoint c.
inline Multisegment select_b(const Multisegment& m, int c) {
    std::vector<Segment> out;
    std::copy_if(m.begin(), m.end(), std::back_inserter(out), [c](const Segment& d) { return d.b() == c; });
    return Multisegment(std::move(out));
}

inline long l_abs(const Segment& d, const Config& cfg = Config{}) {
    return static_cast<long>(d.length()) * cfg.rho_degree;
}

inline long l_abs(const Multisegment& m, const Config& cfg = Config{}) {
    long total = 0;
    for (const auto& d : m) {
        total += l_abs(d, cfg);
    }
    return total;
}

inline bool is_submultisegment(const Multisegment& sub, const Multisegment& m) {
    return std::includes(m.begin(), m.end(), sub.begin(), sub.end());
}

/// -(m): left truncation of every segment, dropping singletons.
inline Multisegment left_truncate(const Multisegment& m) {
    Multisegment out;
    for (const auto& d : m) {
        out.add(left_truncate(d));
    }
    return out;
}

/// All submultisegments (distinct as multisets), in canonical order.
inline std::vector<Multisegment> submultisegments(const Multisegment& m) {
    std::vector<std::pair<Segment, std::size_t>> groups;
    for (const auto& d : m) {
        if (!groups.empty() && groups.back().first == d) {
            ++groups.back().second;
        } else {
            groups.emplace_back(d, 1);
        }
    }
    std::vector<Multisegment> out;
    std::vector<Segment> cur;
    std::function<void(std::size_t)> rec = [&](std::size_t g) {
        if (g == groups.size()) {
            out.emplace_back(cur);
            return;
        }
        for (std::size_t k = 0; k <= groups[g].second; ++k) {
            rec(g + 1);
            cur.push_back(groups[g].first);
        }
        cur.erase(cur.end() - static_cast<long>(groups[g].second + 1), cur.end());
    };
    rec(0);
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace mseg
