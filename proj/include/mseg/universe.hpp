#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <random>
#include <stdexcept>
#include <vector>

#include "multisegment.hpp"

namespace mseg {

/// Bounded universe U: multisegments with segments inside [lo,hi], at most
/// `max_segments` segments and each segment at most `max_multiplicity` times.
struct UniverseParams {
    int lo = 0;
    int hi = 3;
    int max_segments = 3;
    int max_multiplicity = 2;
};

inline std::vector<Segment> segments_in(int lo, int hi) {
    std::vector<Segment> out;
    for (int a = lo; a <= hi; ++a) {
        for (int b = a; b <= hi; ++b) {
            out.emplace_back(a, b);
        }
    }
    return out;
}

/// All members of U in canonical order.
inline std::vector<Multisegment> universe(const UniverseParams& p) {
    if (p.lo > p.hi) {
        throw std::invalid_argument("universe: empty window");
    }
    const auto pool = segments_in(p.lo, p.hi);
    std::vector<Multisegment> out;
    std::vector<Segment> cur;
    std::function<void(std::size_t)> rec = [&](std::size_t idx) {
        if (idx == pool.size()) {
            out.emplace_back(cur);
            return;
        }
        rec(idx + 1);
        int pushed = 0;
        while (pushed < p.max_multiplicity && static_cast<int>(cur.size()) < p.max_segments) {
            cur.push_back(pool[idx]);
            ++pushed;
            rec(idx + 1);
        }
        cur.erase(cur.end() - pushed, cur.end());
    };
    rec(0);
    std::sort(out.begin(), out.end());
    return out;
}

struct GenParams {
    int lo = 0;
    int hi = 3;
    int max_segments = 3;
    int max_multiplicity = 2;
    std::uint64_t seed = 0;
};

using Rng = std::mt19937_64;

/// Random member of the bounded universe: a segment count uniform in
/// [0, max_segments], then segments uniform over those still below the
/// multiplicity cap.
inline Multisegment gen_multisegment(const GenParams& p, Rng& rng) {
    if (p.lo > p.hi || p.max_segments < 1 || p.max_multiplicity < 1) {
        throw std::invalid_argument("gen_multisegment: bad parameters");
    }
    const auto pool = segments_in(p.lo, p.hi);
    std::vector<int> used(pool.size(), 0);
    const int k = std::uniform_int_distribution<int>(0, p.max_segments)(rng);
    Multisegment out;
    for (int i = 0; i < k; ++i) {
        std::vector<std::size_t> open;
        for (std::size_t j = 0; j < pool.size(); ++j) {
            if (used[j] < p.max_multiplicity) {
                open.push_back(j);
            }
        }
        if (open.empty()) {
            break;
        }
        const std::size_t pick = open[std::uniform_int_distribution<std::size_t>(0, open.size() - 1)(rng)];
        ++used[pick];
        out.add(pool[pick]);
    }
    return out;
}

inline Multisegment gen_multisegment(const GenParams& p) {
    Rng rng(p.seed);
    return gen_multisegment(p, rng);
}

}  // namespace mseg
