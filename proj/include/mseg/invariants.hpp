#pragma once

#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "removal.hpp"

namespace mseg {

/// ε_d(h): segments of h[a(d)] containing d, counted with multiplicity.
inline int epsilon(const Segment& d, const Multisegment& h) {
    int n = 0;
    for (const auto& s : h) {
        if (s.a() == d.a() && s.b() >= d.b()) {
            ++n;
        }
    }
    return n;
}

/// η_d(h) = (ε_[a,b], ε_[a+1,b], ..., ε_[b,b]).
struct EtaVector {
    Segment base;
    std::vector<int> counts;

    int total() const { return std::accumulate(counts.begin(), counts.end(), 0); }
    friend bool operator==(const EtaVector&, const EtaVector&) = default;
};

inline EtaVector eta(const Segment& d, const Multisegment& h) {
    EtaVector out{d, {}};
    out.counts.reserve(static_cast<std::size_t>(d.length()));
    for (int a = d.a(); a <= d.b(); ++a) {
        out.counts.push_back(epsilon(Segment(a, d.b()), h));
    }
    return out;
}

/// |η|_d(h), the entry sum of η_d(h).
inline int abs_eta(const Segment& d, const Multisegment& h) { return eta(d, h).total(); }

inline std::string format_eta(const EtaVector& e) {
    std::string out = "(";
    for (std::size_t i = 0; i < e.counts.size(); ++i) {
        if (i) {
            out += ',';
        }
        out += std::to_string(e.counts[i]);
    }
    return out + ")";
}

/// mx(h,d) = Σ_{a<=a'<=b} ε_[a',b](h) · [a',b].
inline Multisegment mx(const Multisegment& h, const Segment& d) {
    Multisegment out;
    for (int a = d.a(); a <= d.b(); ++a) {
        const Segment s(a, d.b());
        for (int k = epsilon(s, h); k > 0; --k) {
            out.add(s);
        }
    }
    return out;
}

/// Some s in h with a(d) <= a(s) < a(dp) and a(s) <= b(d) <= b(s) < b(dp).
inline bool has_intermediate_segment(const Segment& d, const Segment& dp, const Multisegment& h) {
    if (!precedes(d, dp)) {
        throw std::invalid_argument("has_intermediate_segment: requires d < dp linked");
    }
    for (const auto& s : h) {
        if (d.a() <= s.a() && s.a() < dp.a() && s.a() <= d.b() && d.b() <= s.b() && s.b() < dp.b()) {
            return true;
        }
    }
    return false;
}

/// Non-overlapping property for d < dp, evaluated on the removal side:
/// η_dp(r(d,h)) = η_dp(h). For a(dp) > a(d) the ε-counts after the
/// derivative coincide with those of the removal result, so this is the
/// representation-level property read through the highest derivative
/// multisegment.
inline bool non_overlapping(const Segment& d, const Segment& dp, const Multisegment& h) {
    if (!precedes(d, dp)) {
        throw std::invalid_argument("non_overlapping: requires d < dp linked");
    }
    auto r = remove_segment(d, h);
    if (r.is_infinity()) {
        throw NotAdmissible("non_overlapping: d is not admissible");
    }
    return eta(dp, *r) == eta(dp, h);
}

}  // namespace mseg
