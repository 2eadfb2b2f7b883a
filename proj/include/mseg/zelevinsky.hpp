#pragma once

#include <algorithm>
#include <deque>
#include <map>
#include <memory>
#include <mutex>
#include <set>
#include <shared_mutex>
#include <sstream>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "multisegment.hpp"
#include "text.hpp"

namespace mseg {

/// A linked pair of segments consumed by one elementary intersection-union
/// process.
struct IUMove {
    Segment first;
    Segment second;
};

/// m - Δ - Δ' + Δ∪Δ' + Δ∩Δ' (an empty intersection is dropped).
inline Multisegment iu_move(const Multisegment& m, const IUMove& mv) {
    if (!is_linked(mv.first, mv.second)) {
        throw std::invalid_argument("iu_move: segments are not linked");
    }
    Multisegment out = m;
    if (!out.erase_one(mv.first) || !out.erase_one(mv.second)) {
        throw std::invalid_argument("iu_move: segment not present in multisegment");
    }
    auto [un, meet] = union_intersection(mv.first, mv.second);
    out.add(un);
    out.add(meet);
    return out;
}

/// Every linked pair of distinct segment values in m, with first < second.
inline std::vector<IUMove> linked_pairs(const Multisegment& m) {
    std::vector<IUMove> out;
    auto segs = m.segments();
    for (std::size_t i = 0; i < segs.size(); ++i) {
        if (i > 0 && segs[i] == segs[i - 1]) {
            continue;
        }
        for (std::size_t j = i + 1; j < segs.size(); ++j) {
            if (segs[j] == segs[j - 1] && j - 1 != i) {
                continue;
            }
            if (precedes(segs[i], segs[j])) {
                out.push_back({segs[i], segs[j]});
            } else if (precedes(segs[j], segs[i])) {
                out.push_back({segs[j], segs[i]});
            }
        }
    }
    return out;
}

/// Distinct results of one elementary move, in canonical order.
inline std::vector<Multisegment> iu_successors(const Multisegment& m) {
    std::vector<Multisegment> out;
    for (const auto& mv : linked_pairs(m)) {
        out.push_back(iu_move(m, mv));
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

using MultisegmentSet = std::set<Multisegment>;

/// Memo of down-sets keyed by canonical form. Safe to share between threads.
class DownSetCache {
public:
    std::shared_ptr<const MultisegmentSet> find(const Multisegment& m) const {
        std::shared_lock lock(mu_);
        auto it = memo_.find(m);
        return it == memo_.end() ? nullptr : it->second;
    }
    std::shared_ptr<const MultisegmentSet> insert(const Multisegment& m, MultisegmentSet down) {
        auto ptr = std::make_shared<const MultisegmentSet>(std::move(down));
        std::unique_lock lock(mu_);
        return memo_.try_emplace(m, std::move(ptr)).first->second;
    }
    std::size_t size() const {
        std::shared_lock lock(mu_);
        return memo_.size();
    }

private:
    mutable std::shared_mutex mu_;
    std::unordered_map<Multisegment, std::shared_ptr<const MultisegmentSet>, MultisegmentHash> memo_;
};

namespace detail {

inline MultisegmentSet bfs_down(const Multisegment& m) {
    MultisegmentSet seen{m};
    std::deque<Multisegment> queue{m};
    while (!queue.empty()) {
        Multisegment cur = std::move(queue.front());
        queue.pop_front();
        for (auto& next : iu_successors(cur)) {
            if (seen.insert(next).second) {
                queue.push_back(std::move(next));
            }
        }
    }
    return seen;
}

}  // namespace detail

/// {n : n <=_Z m}, including m itself.
inline MultisegmentSet lower_set(const Multisegment& m) { return detail::bfs_down(m); }

inline std::shared_ptr<const MultisegmentSet> lower_set(const Multisegment& m, DownSetCache& cache) {
    if (auto hit = cache.find(m)) {
        return hit;
    }
    return cache.insert(m, detail::bfs_down(m));
}

/// Multiset of cuspidal points covered by m, one entry per point and copy.
/// Elementary moves preserve it.
inline std::vector<int> cuspidal_support(const Multisegment& m) {
    std::vector<int> pts;
    for (const auto& d : m) {
        for (int c = d.a(); c <= d.b(); ++c) {
            pts.push_back(c);
        }
    }
    std::sort(pts.begin(), pts.end());
    return pts;
}

/// n <=_Z m, decided by breadth-first search over elementary moves from m.
inline bool zel_leq(const Multisegment& n, const Multisegment& m) {
    if (n == m) {
        return true;
    }
    if (n.size() > m.size() || cuspidal_support(n) != cuspidal_support(m)) {
        return false;
    }
    MultisegmentSet seen{m};
    std::deque<Multisegment> queue{m};
    while (!queue.empty()) {
        Multisegment cur = std::move(queue.front());
        queue.pop_front();
        for (auto& next : iu_successors(cur)) {
            if (next == n) {
                return true;
            }
            // moves never increase the number of segments
            if (next.size() < n.size()) {
                continue;
            }
            if (seen.insert(next).second) {
                queue.push_back(std::move(next));
            }
        }
    }
    return false;
}

inline bool zel_leq(const Multisegment& n, const Multisegment& m, DownSetCache& cache) {
    if (n == m) {
        return true;
    }
    return lower_set(m, cache)->contains(n);
}

/// {n : lo <=_Z n <=_Z hi}.
inline MultisegmentSet interval(const Multisegment& lo, const Multisegment& hi) {
    MultisegmentSet down = lower_set(hi);
    if (!down.contains(lo)) {
        throw std::invalid_argument("interval: endpoints are not comparable");
    }
    MultisegmentSet out;
    for (const auto& n : down) {
        if (zel_leq(lo, n)) {
            out.insert(n);
        }
    }
    return out;
}

/// Covering pairs (upper, lower) of <=_Z restricted to `nodes`, obtained by
/// transitive reduction of the induced order.
inline std::vector<std::pair<Multisegment, Multisegment>> hasse_edges(const MultisegmentSet& nodes) {
    std::vector<Multisegment> v(nodes.begin(), nodes.end());
    const std::size_t k = v.size();
    std::vector<std::vector<bool>> below(k, std::vector<bool>(k, false));
    for (std::size_t i = 0; i < k; ++i) {
        MultisegmentSet down = lower_set(v[i]);
        for (std::size_t j = 0; j < k; ++j) {
            below[i][j] = i != j && down.contains(v[j]);
        }
    }
    std::vector<std::pair<Multisegment, Multisegment>> edges;
    for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = 0; j < k; ++j) {
            if (!below[i][j]) {
                continue;
            }
            bool covered = true;
            for (std::size_t mid = 0; mid < k && covered; ++mid) {
                if (below[i][mid] && below[mid][j]) {
                    covered = false;
                }
            }
            if (covered) {
                edges.emplace_back(v[i], v[j]);
            }
        }
    }
    return edges;
}

/// Graphviz digraph of the Hasse diagram; edges point from larger to smaller.
inline std::string hasse_dot(const MultisegmentSet& nodes) {
    std::ostringstream os;
    os << "digraph zelevinsky {\n";
    for (const auto& n : nodes) {
        os << "  \"" << format_multisegment(n) << "\";\n";
    }
    for (const auto& [hi, lo] : hasse_edges(nodes)) {
        os << "  \"" << format_multisegment(hi) << "\" -> \"" << format_multisegment(lo) << "\";\n";
    }
    os << "}\n";
    return os.str();
}

}  // namespace mseg
