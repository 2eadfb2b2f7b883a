#pragma once

#include <optional>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "multisegment.hpp"

namespace mseg {

/// Result of a removal: a multisegment, or the absorbing infinity marker that
/// records inadmissibility.
class RemovalOutcome {
public:
    RemovalOutcome(Multisegment m) : value_(std::move(m)) {}  // NOLINT(google-explicit-constructor)
    static RemovalOutcome infinity() { return RemovalOutcome(); }

    bool is_infinity() const noexcept { return !value_.has_value(); }
    explicit operator bool() const noexcept { return value_.has_value(); }
    const Multisegment& value() const {
        if (!value_) {
            throw std::logic_error("removal outcome is infinity");
        }
        return *value_;
    }
    const Multisegment& operator*() const { return value(); }
    const Multisegment* operator->() const { return &value(); }

    friend bool operator==(const RemovalOutcome&, const RemovalOutcome&) = default;

private:
    RemovalOutcome() = default;
    std::optional<Multisegment> value_;
};

/// Inadmissible input to an operation that requires admissibility.
class NotAdmissible : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

namespace detail {

/// Shortest [a,c] in h with c >= b, if any.
inline std::optional<Segment> shortest_reaching(const Multisegment& h, int a, int b) {
    for (const auto& d : h) {  // lex order: first hit at a(d)=a with b(d)>=b is the shortest
        if (d.a() == a && d.b() >= b) {
            return d;
        }
        if (d.a() > a) {
            break;
        }
    }
    return std::nullopt;
}

}  // namespace detail

/// Some [a,c] in h with c >= b exists, where d = [a,b].
inline bool is_admissible_segment(const Segment& d, const Multisegment& h) {
    return detail::shortest_reaching(h, d.a(), d.b()).has_value();
}

/// Υ(d,h): the shortest segment of h starting at a(d) and ending at or after b(d).
inline Segment upsilon(const Segment& d, const Multisegment& h) {
    auto up = detail::shortest_reaching(h, d.a(), d.b());
    if (!up) {
        throw NotAdmissible("upsilon: segment is not admissible");
    }
    return *up;
}

/// r(d,h), computed by the recursion
///   r(d,h) = r(-d, h - Υ(d,h) + -Υ(d,h)),
/// terminating with h* once -d is empty. Inadmissibility at any step gives
/// infinity, and infinity is absorbing.
inline RemovalOutcome remove_segment(const Segment& d, const RemovalOutcome& h) {
    if (h.is_infinity()) {
        return h;
    }
    Multisegment cur = h.value();
    for (int a = d.a(); a <= d.b(); ++a) {
        auto up = detail::shortest_reaching(cur, a, d.b());
        if (!up) {
            return RemovalOutcome::infinity();
        }
        cur.erase_one(*up);
        cur.add(left_truncate(*up));
    }
    return cur;
}

inline RemovalOutcome remove_segment(const Segment& d, const Multisegment& h) {
    return remove_segment(d, RemovalOutcome(h));
}

/// Iterated removal along an explicit sequence (no reordering).
inline RemovalOutcome remove_sequence(std::span<const Segment> seq, RemovalOutcome h) {
    for (const auto& d : seq) {
        h = remove_segment(d, h);
        if (h.is_infinity()) {
            break;
        }
    }
    return h;
}

/// r(n,h): iterated removal along the canonical ascending order of n.
inline RemovalOutcome remove_multi(const Multisegment& n, const RemovalOutcome& h) {
    return remove_sequence(n.segments(), h);
}

inline RemovalOutcome remove_multi(const Multisegment& n, const Multisegment& h) {
    return remove_multi(n, RemovalOutcome(h));
}

inline bool is_admissible(const Multisegment& n, const Multisegment& h) {
    return !remove_multi(n, h).is_infinity();
}

/// The removal sequence Δ_1..Δ_r, its truncations, and the result.
struct RemovalTrace {
    std::vector<Segment> picked;
    std::vector<std::optional<Segment>> truncated;
    Multisegment result;
};

/// Direct (non-recursive) removal process.
///
/// Δ_1 is Υ(d,h). Each later Δ_i = [a_i,b_i] is the ≺^L-least segment of h
/// with a_{i-1} < a_i <= b and b <= b_i < b_{i-1}. Truncations are
/// [a_{i+1}, b_i] for i < r and [b+1, b_r] for the last one.
///
/// Two conditions differ from a literal transcription of the usual
/// definition: the last truncation is [b+1, b_r] (the literal [b_r+1, b] is
/// empty whenever b <= b_r), and picks are bounded by a_i <= b. Without the
/// bound, d = [0] on {[0,3],[2]} would pick [2] and disagree with the
/// recursion in `remove_segment`.
inline RemovalTrace removal_trace(const Segment& d, const Multisegment& h) {
    const int b = d.b();
    RemovalTrace tr;
    tr.picked.push_back(upsilon(d, h));
    for (;;) {
        const Segment& prev = tr.picked.back();
        std::optional<Segment> next;
        for (const auto& cand : h) {
            if (cand.a() > prev.a() && cand.a() <= b && cand.b() >= b && cand.b() < prev.b()) {
                next = cand;  // h is lex sorted, so the first hit is ≺^L-minimal
                break;
            }
        }
        if (!next) {
            break;
        }
        tr.picked.push_back(*next);
    }
    const std::size_t r = tr.picked.size();
    for (std::size_t i = 0; i + 1 < r; ++i) {
        tr.truncated.emplace_back(Segment(tr.picked[i + 1].a(), tr.picked[i].b()));
    }
    if (b + 1 <= tr.picked.back().b()) {
        tr.truncated.emplace_back(Segment(b + 1, tr.picked.back().b()));
    } else {
        tr.truncated.emplace_back(std::nullopt);
    }
    tr.result = h;
    for (const auto& p : tr.picked) {
        tr.result.erase_one(p);
    }
    for (const auto& t : tr.truncated) {
        tr.result.add(t);
    }
    return tr;
}

// Truncation operators feeding the fine chain.

/// fs(n,h): with a the least left endpoint of n and n[a] = {Δ_1..Δ_k} in
/// canonical order, collects Υ(Δ_i, r_i) where r_1 = h and
/// r_{i+1} = r(Δ_i, r_i).
inline Multisegment fs(const Multisegment& n, const Multisegment& h) {
    if (n.empty()) {
        throw std::invalid_argument("fs: empty multisegment");
    }
    const int a = n.min_a();
    Multisegment out;
    Multisegment cur = h;
    for (const auto& d : n) {
        if (d.a() != a) {
            break;
        }
        out.add(upsilon(d, cur));
        auto next = remove_segment(d, cur);
        if (next.is_infinity()) {
            throw NotAdmissible("fs: iterated removal is not admissible");
        }
        cur = *next;
    }
    return out;
}

/// trr(n,h) = h - fs(n,h) + -(fs(n,h)).
inline Multisegment trr(const Multisegment& n, const Multisegment& h) {
    Multisegment first = fs(n, h);
    Multisegment out = h;
    out.subtract(first);
    out.add(left_truncate(first));
    return out;
}

/// trd(n,h) = n - n[a] + -(n[a]).
inline Multisegment trd(const Multisegment& n, const Multisegment& /*h*/) {
    if (n.empty()) {
        throw std::invalid_argument("trd: empty multisegment");
    }
    const Multisegment head = select_a(n, n.min_a());
    Multisegment out = n;
    out.subtract(head);
    out.add(left_truncate(head));
    return out;
}

struct FineChainStep {
    Multisegment n;
    Multisegment h;
    Multisegment fs;
};

/// Steps (n_i, h_i, fs(n_i,h_i)) until n_i is empty, with
/// h_{i+1} = trr(n_i,h_i) and n_{i+1} = trd(n_i,h_i).
struct FineChain {
    std::vector<FineChainStep> steps;
};

inline FineChain fine_chain(const Multisegment& n, const Multisegment& h) {
    if (!is_admissible(n, h)) {
        throw NotAdmissible("fine_chain: multisegment is not admissible");
    }
    FineChain chain;
    Multisegment cur_n = n;
    Multisegment cur_h = h;
    while (!cur_n.empty()) {
        Multisegment first = fs(cur_n, cur_h);
        Multisegment next_h = cur_h;
        next_h.subtract(first);
        next_h.add(left_truncate(first));
        Multisegment next_n = trd(cur_n, cur_h);
        chain.steps.push_back({cur_n, cur_h, std::move(first)});
        cur_n = std::move(next_n);
        cur_h = std::move(next_h);
    }
    return chain;
}

}  // namespace mseg
