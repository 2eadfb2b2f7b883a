#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "invariants.hpp"
#include "removal.hpp"
#include "text.hpp"
#include "zelevinsky.hpp"

namespace mseg {

/// Outcome of a batch of checks. Counterexamples carry the failing input in
/// `key=value; ...` form (multisegments in canonical grammar).
struct Counterexample {
    std::string input;
    std::string expected;
    std::string actual;

    friend auto operator<=>(const Counterexample&, const Counterexample&) = default;
};

struct CampaignReport {
    std::uint64_t seed = 0;
    std::size_t instances = 0;
    std::size_t passes = 0;
    std::vector<Counterexample> counterexamples;

    void record(bool ok, std::string input, std::string expected, std::string actual) {
        ++instances;
        if (ok) {
            ++passes;
        } else {
            counterexamples.push_back({std::move(input), std::move(expected), std::move(actual)});
        }
    }
    void merge(const CampaignReport& other) {
        instances += other.instances;
        passes += other.passes;
        counterexamples.insert(counterexamples.end(), other.counterexamples.begin(),
                               other.counterexamples.end());
    }
    bool clean() const { return counterexamples.empty(); }
};

inline std::string format_outcome(const RemovalOutcome& r) {
    return r.is_infinity() ? std::string("infinity") : format_multisegment(*r);
}

// ---------------------------------------------------------------------------
// Local minimizability and the fine-chain criterion

/// With a the least left endpoint of n: some Δ in n[a+1] is contained in
/// strictly more segments of fs(n,h) than of n[a].
inline bool is_locally_minimizable(const Multisegment& n, const Multisegment& h) {
    if (n.empty()) {
        throw std::invalid_argument("is_locally_minimizable: empty multisegment");
    }
    const int a = n.min_a();
    const Multisegment head = select_a(n, a);
    const Multisegment first = fs(n, h);
    auto containing = [](const Multisegment& m, const Segment& d) {
        return std::count_if(m.begin(), m.end(), [&](const Segment& s) { return s.contains(d); });
    };
    for (const auto& d : select_a(n, a + 1)) {
        if (containing(head, d) < containing(first, d)) {
            return true;
        }
    }
    return false;
}

/// n is minimal to h iff no step of its fine chain is locally minimizable.
/// Inadmissible n is never minimal.
inline bool is_minimal(const Multisegment& n, const Multisegment& h) {
    if (!is_admissible(n, h)) {
        return false;
    }
    for (const auto& step : fine_chain(n, h).steps) {
        if (is_locally_minimizable(step.n, step.h)) {
            return false;
        }
    }
    return true;
}

/// Oracle: no strictly smaller n' in the Zelevinsky order gives the same
/// removal result.
inline bool is_minimal_bruteforce(const Multisegment& n, const Multisegment& h, DownSetCache* cache = nullptr) {
    const RemovalOutcome target = remove_multi(n, h);
    if (target.is_infinity()) {
        return false;
    }
    auto check = [&](const MultisegmentSet& down) {
        for (const auto& other : down) {
            if (other != n && remove_multi(other, h) == target) {
                return false;
            }
        }
        return true;
    };
    if (cache) {
        return check(*lower_set(n, *cache));
    }
    return check(lower_set(n));
}

/// Greedy descent through one-move successors that keep r(·,h) fixed. The
/// fixed point is the unique minimal element of S(h, r(n,h)).
inline Multisegment find_minimal(const Multisegment& n, const Multisegment& h) {
    const RemovalOutcome target = remove_multi(n, h);
    if (target.is_infinity()) {
        throw NotAdmissible("find_minimal: multisegment is not admissible");
    }
    Multisegment cur = n;
    for (bool moved = true; moved;) {
        moved = false;
        for (auto& next : iu_successors(cur)) {
            if (remove_multi(next, h) == target) {
                cur = std::move(next);
                moved = true;
                break;
            }
        }
    }
    return cur;
}

struct Window {
    int lo;
    int hi;
};

inline Window default_window(const Multisegment& h) {
    if (h.empty()) {
        return {0, 0};
    }
    int lo = h.min_a();
    int hi = lo;
    for (const auto& d : h) {
        hi = std::max(hi, d.b());
    }
    return {lo, hi};
}

/// S(h, target) restricted to segments inside the window: every n with
/// l_abs(n) = l_abs(h) - l_abs(target) and r(n,h) = target.
///
/// Segments are chosen in canonical order, so the removal can be folded
/// along the enumeration and inadmissible prefixes pruned.
inline MultisegmentSet enumerate_S(const Multisegment& h, const Multisegment& target, Window window) {
    const long budget = l_abs(h) - l_abs(target);
    if (budget < 0) {
        throw std::invalid_argument("enumerate_S: target is longer than h, S is empty");
    }
    std::vector<Segment> pool;
    for (int a = window.lo; a <= window.hi; ++a) {
        for (int b = a; b <= window.hi; ++b) {
            pool.emplace_back(a, b);
        }
    }
    MultisegmentSet out;
    std::vector<Segment> chosen;
    std::function<void(std::size_t, long, const Multisegment&)> rec = [&](std::size_t from, long left,
                                                                          const Multisegment& cur) {
        if (left == 0) {
            if (cur == target) {
                out.insert(Multisegment(chosen));
            }
            return;
        }
        for (std::size_t i = from; i < pool.size(); ++i) {
            if (pool[i].length() > left) {
                continue;
            }
            auto next = remove_segment(pool[i], cur);
            if (next.is_infinity()) {
                continue;
            }
            chosen.push_back(pool[i]);
            rec(i, left - pool[i].length(), *next);
            chosen.pop_back();
        }
    };
    rec(0, budget, h);
    return out;
}

inline MultisegmentSet enumerate_S(const Multisegment& h, const Multisegment& target) {
    return enumerate_S(h, target, default_window(h));
}

/// Elements of `s` with no other element of `s` strictly below them.
inline std::vector<Multisegment> minimal_elements(const MultisegmentSet& s, DownSetCache* cache = nullptr) {
    std::vector<Multisegment> out;
    for (const auto& x : s) {
        bool minimal = true;
        auto scan = [&](const MultisegmentSet& down) {
            for (const auto& y : down) {
                if (y != x && s.contains(y)) {
                    minimal = false;
                    return;
                }
            }
        };
        if (cache) {
            scan(*lower_set(x, *cache));
        } else {
            scan(lower_set(x));
        }
        if (minimal) {
            out.push_back(x);
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// Consecutive pairs

/// Linked pairs d1 < d2 of m (as distinct values) with no other segment s of
/// m having a(d1) <= a(s) <= a(d2), b(d1) <= b(s) <= b(d2) and s linked to d1
/// or d2. Further copies of d1 or d2 do not block the pair.
inline std::vector<std::pair<Segment, Segment>> consecutive_pairs(const Multisegment& m) {
    std::vector<std::pair<Segment, Segment>> out;
    for (const auto& mv : linked_pairs(m)) {
        const Segment& d1 = mv.first;
        const Segment& d2 = mv.second;
        bool blocked = false;
        for (const auto& s : m) {
            if (s == d1 || s == d2) {
                continue;
            }
            if (d1.a() <= s.a() && s.a() <= d2.a() && d1.b() <= s.b() && s.b() <= d2.b() &&
                (is_linked(s, d1) || is_linked(s, d2))) {
                blocked = true;
                break;
            }
        }
        if (!blocked) {
            out.emplace_back(d1, d2);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

// ---------------------------------------------------------------------------
// Pair equivalence

/// The three conditions that coincide for a linked pair d < dp with both
/// segments admissible.
struct PairReport {
    bool non_overlapping;
    bool intermediate;
    bool pair_minimal;

    bool agree() const { return non_overlapping == intermediate && intermediate == pair_minimal; }
};

inline PairReport pair_equivalence_report(const Segment& d, const Segment& dp, const Multisegment& h) {
    if (!precedes(d, dp)) {
        throw std::invalid_argument("pair_equivalence_report: requires d < dp linked");
    }
    if (!is_admissible_segment(d, h) || !is_admissible_segment(dp, h)) {
        throw NotAdmissible("pair_equivalence_report: both segments must be admissible");
    }
    const Multisegment pair{d, dp};
    return {non_overlapping(d, dp, h), has_intermediate_segment(d, dp, h), is_minimal_bruteforce(pair, h)};
}

// ---------------------------------------------------------------------------
// Extension by a segment to the upper right

struct DaggerResult {
    bool minimal_with;
    bool eta_equal;
};

/// For n minimal to h and d strictly to the upper right of every segment of
/// n: whether n + d stays minimal, and whether η_d(r(n,h)) = η_d(h).
inline DaggerResult check_dagger_extension(const Multisegment& n, const Multisegment& h, const Segment& d) {
    for (const auto& s : n) {
        if (!(s.a() < d.a() && s.b() < d.b())) {
            throw std::invalid_argument("check_dagger_extension: segment of n not below d");
        }
    }
    if (!is_minimal(n, h)) {
        throw std::invalid_argument("check_dagger_extension: n is not minimal to h");
    }
    const RemovalOutcome r = remove_multi(n, h);
    return {is_minimal(n.with(d), h), eta(d, *r) == eta(d, h)};
}

// ---------------------------------------------------------------------------
// Subsequent property and order shadow

inline std::string instance_key(const Multisegment& n, const Multisegment& h) {
    return "n=" + format_multisegment(n) + "; h=" + format_multisegment(h);
}

/// Every submultisegment of a minimal n is minimal to h; every ascending
/// prefix is minimal to h, and the matching suffix is minimal to the removal
/// result of the prefix.
inline CampaignReport check_subsequent(const Multisegment& n, const Multisegment& h) {
    if (!is_minimal(n, h)) {
        throw std::invalid_argument("check_subsequent: n is not minimal to h");
    }
    CampaignReport rep;
    for (const auto& sub : submultisegments(n)) {
        bool ok = is_minimal(sub, h);
        rep.record(ok, "sub; " + instance_key(sub, h), "minimal", ok ? "minimal" : "not minimal");
    }
    const auto seq = ascending_sort(n);
    for (std::size_t s = 0; s <= seq.size(); ++s) {
        Multisegment prefix(std::vector<Segment>(seq.begin(), seq.begin() + static_cast<long>(s)));
        Multisegment suffix(std::vector<Segment>(seq.begin() + static_cast<long>(s), seq.end()));
        bool ok_prefix = is_minimal(prefix, h);
        rep.record(ok_prefix, "prefix; " + instance_key(prefix, h), "minimal",
                   ok_prefix ? "minimal" : "not minimal");
        const RemovalOutcome mid = remove_multi(prefix, h);
        bool ok_suffix = !mid.is_infinity() && is_minimal(suffix, *mid);
        rep.record(ok_suffix, "suffix; n=" + format_multisegment(suffix) + "; h=" + format_outcome(mid),
                   "minimal", ok_suffix ? "minimal" : "not minimal");
    }
    return rep;
}

/// Iterated single-segment removal of n's segments in every order, compared
/// with r(n,h). Exploratory: disagreements are reported, not asserted.
inline CampaignReport check_order_shadow(const Multisegment& n, const Multisegment& h) {
    const RemovalOutcome expected = remove_multi(n, h);
    CampaignReport rep;
    std::vector<Segment> order = ascending_sort(n);
    do {
        const RemovalOutcome got = remove_sequence(order, h);
        rep.record(got == expected, instance_key(n, h) + "; order=" + format_sequence(order),
                   format_outcome(expected), format_outcome(got));
    } while (std::next_permutation(order.begin(), order.end()));
    return rep;
}

// ---------------------------------------------------------------------------
// Realization by essentially Speh building blocks

/// Parameters (c,d,m) of an essentially Speh representation, with d ≡ m mod 2.
struct SpehParams {
    int c;
    int d;
    int m;

    /// Its highest derivative segment [c-(d-m)/2, c+(d+m-2)/2].
    Segment hd_segment() const { return Segment(c - (d - m) / 2, c + (d + m - 2) / 2); }
    /// Cuspidal support window [c-(d+m-2)/2, c+(d+m-2)/2].
    Segment window() const { return Segment(c - (d + m - 2) / 2, c + (d + m - 2) / 2); }

    friend bool operator==(const SpehParams&, const SpehParams&) = default;
};

/// One block per segment, taken in order of nondecreasing right endpoint.
/// d_i is the segment length and m_i the least value of the right parity
/// whose window covers the window of the previous block.
inline std::vector<SpehParams> speh_realization(const Multisegment& m) {
    if (m.empty()) {
        throw std::invalid_argument("speh_realization: empty multisegment");
    }
    std::vector<Segment> order = ascending_sort(m);
    std::stable_sort(order.begin(), order.end(), [](const Segment& x, const Segment& y) { return x.b() < y.b(); });
    std::vector<SpehParams> out;
    for (const auto& seg : order) {
        const int d = seg.length();
        int mm = d % 2 == 0 ? 2 : 1;
        if (!out.empty()) {
            // window lower end is b - (d + m - 2)
            const int need = seg.b() - out.back().window().a() - d + 2;
            while (mm < need) {
                mm += 2;
            }
        }
        const int c = seg.b() - (d + mm - 2) / 2;
        out.push_back({c, d, mm});
    }
    return out;
}

/// Checks the realization invariants; returns an empty string when they hold.
inline std::string speh_violation(const Multisegment& m, const std::vector<SpehParams>& params) {
    Multisegment sum;
    for (std::size_t i = 0; i < params.size(); ++i) {
        const auto& p = params[i];
        if (p.d < 1 || p.m < 1 || (p.d - p.m) % 2 != 0) {
            return "parity or positivity violated at block " + std::to_string(i);
        }
        if (p.hd_segment().length() != p.d) {
            return "segment length differs from d at block " + std::to_string(i);
        }
        if (i > 0) {
            if (p.hd_segment().b() < params[i - 1].hd_segment().b()) {
                return "right endpoints not sorted at block " + std::to_string(i);
            }
            if (!p.window().contains(params[i - 1].window())) {
                return "window does not cover previous window at block " + std::to_string(i);
            }
        }
        sum.add(p.hd_segment());
    }
    if (sum != m) {
        return "segments sum to " + format_multisegment(sum);
    }
    return {};
}

}  // namespace mseg
