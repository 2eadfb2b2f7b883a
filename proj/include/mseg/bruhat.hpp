#pragma once

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace mseg::bruhat {

/// Permutation of {1..n} in one-line notation.
class Permutation {
public:
    explicit Permutation(std::vector<int> images) : w_(std::move(images)) {
        std::vector<int> sorted = w_;
        std::sort(sorted.begin(), sorted.end());
        for (std::size_t i = 0; i < sorted.size(); ++i) {
            if (sorted[i] != static_cast<int>(i) + 1) {
                throw std::invalid_argument("not a permutation of 1..n");
            }
        }
    }

    static Permutation identity(int n) {
        std::vector<int> v(static_cast<std::size_t>(n));
        std::iota(v.begin(), v.end(), 1);
        return Permutation(std::move(v));
    }

    int size() const noexcept { return static_cast<int>(w_.size()); }
    /// w(k), 1-based.
    int operator()(int k) const { return w_.at(static_cast<std::size_t>(k - 1)); }
    const std::vector<int>& images() const noexcept { return w_; }

    /// Number of inversions.
    int length() const {
        int inv = 0;
        for (std::size_t i = 0; i < w_.size(); ++i) {
            for (std::size_t j = i + 1; j < w_.size(); ++j) {
                inv += w_[i] > w_[j];
            }
        }
        return inv;
    }

    friend auto operator<=>(const Permutation&, const Permutation&) = default;

private:
    std::vector<int> w_;
};

/// Digits `213` or comma-separated `2,1,3` for n >= 10.
inline Permutation parse_permutation(std::string_view text) {
    std::vector<int> v;
    if (text.find(',') != std::string_view::npos) {
        std::size_t start = 0;
        while (start <= text.size()) {
            std::size_t end = text.find(',', start);
            if (end == std::string_view::npos) {
                end = text.size();
            }
            v.push_back(std::stoi(std::string(text.substr(start, end - start))));
            start = end + 1;
        }
    } else {
        for (char ch : text) {
            if (ch < '1' || ch > '9') {
                throw std::invalid_argument("bad permutation digit");
            }
            v.push_back(ch - '0');
        }
    }
    return Permutation(std::move(v));
}

inline std::string format_permutation(const Permutation& w) {
    std::string out;
    const bool wide = w.size() >= 10;
    for (int x : w.images()) {
        if (wide && !out.empty()) {
            out += ',';
        }
        out += std::to_string(x);
    }
    return out;
}

/// w[k,l] = |{ a : 1 <= a <= k, w(a) >= l }|.
inline int w_stat(const Permutation& w, int k, int l) {
    const int n = w.size();
    if (k < 1 || k > n || l < 1 || l > n) {
        throw std::out_of_range("w_stat: index out of range");
    }
    int count = 0;
    for (int a = 1; a <= k; ++a) {
        count += w(a) >= l;
    }
    return count;
}

/// Statistic criterion: wp <= w iff wp[k,l] <= w[k,l] for all k,l.
inline bool bruhat_leq(const Permutation& wp, const Permutation& w) {
    if (wp.size() != w.size()) {
        throw std::invalid_argument("bruhat_leq: size mismatch");
    }
    const int n = w.size();
    for (int k = 1; k <= n; ++k) {
        for (int l = 1; l <= n; ++l) {
            if (w_stat(wp, k, l) > w_stat(w, k, l)) {
                return false;
            }
        }
    }
    return true;
}

inline std::vector<Permutation> all_permutations(int n) {
    std::vector<Permutation> out;
    auto v = Permutation::identity(n).images();
    do {
        out.emplace_back(v);
    } while (std::next_permutation(v.begin(), v.end()));
    return out;
}

inline constexpr int kOracleMaxN = 7;

namespace detail {

/// Materialized Bruhat order on S_n: below[i] lists indices (into the
/// lex-sorted permutation list) of all elements <= perms[i].
struct OrderTable {
    std::vector<Permutation> perms;
    std::vector<std::vector<bool>> below;

    std::size_t index(const Permutation& w) const {
        return static_cast<std::size_t>(std::lower_bound(perms.begin(), perms.end(), w) - perms.begin());
    }
};

/// Covers are w' = w·t for a transposition t with length dropping by one;
/// the order is their reflexive-transitive closure, built by increasing length.
inline OrderTable build_order(int n) {
    OrderTable t;
    t.perms = all_permutations(n);
    const std::size_t k = t.perms.size();
    t.below.assign(k, std::vector<bool>(k, false));
    std::vector<std::size_t> by_length(k);
    std::iota(by_length.begin(), by_length.end(), 0);
    std::vector<int> len(k);
    for (std::size_t i = 0; i < k; ++i) {
        len[i] = t.perms[i].length();
    }
    std::stable_sort(by_length.begin(), by_length.end(), [&](std::size_t x, std::size_t y) { return len[x] < len[y]; });
    for (std::size_t i : by_length) {
        t.below[i][i] = true;
        auto img = t.perms[i].images();
        for (std::size_t p = 0; p < img.size(); ++p) {
            for (std::size_t q = p + 1; q < img.size(); ++q) {
                std::swap(img[p], img[q]);
                Permutation lower(img);
                std::swap(img[p], img[q]);
                const std::size_t j = t.index(lower);
                if (len[j] + 1 != len[i]) {
                    continue;
                }
                for (std::size_t x = 0; x < k; ++x) {
                    if (t.below[j][x]) {
                        t.below[i][x] = true;
                    }
                }
            }
        }
    }
    return t;
}

inline const OrderTable& order_table(int n) {
    static std::mutex mu;
    static std::map<int, std::unique_ptr<const OrderTable>> tables;
    std::lock_guard lock(mu);
    auto& slot = tables[n];
    if (!slot) {
        slot = std::make_unique<const OrderTable>(build_order(n));
    }
    return *slot;
}

}  // namespace detail

/// Independent decision of wp <= w through the transposition-cover relation.
inline bool bruhat_leq_oracle(const Permutation& wp, const Permutation& w) {
    if (wp.size() != w.size()) {
        throw std::invalid_argument("bruhat_leq_oracle: size mismatch");
    }
    if (w.size() > kOracleMaxN) {
        throw std::invalid_argument("bruhat_leq_oracle: n exceeds oracle bound");
    }
    const auto& t = detail::order_table(w.size());
    return t.below[t.index(w)][t.index(wp)];
}

/// w increasing on {1..n-i} and on {n-i+1..n}.
inline bool is_min_coset_rep(const Permutation& w, int i) {
    const int n = w.size();
    for (int k = 1; k < n; ++k) {
        if (k == n - i) {
            continue;
        }
        if (w(k) > w(k + 1)) {
            return false;
        }
    }
    return true;
}

/// Minimal representatives of S_n / (S_{n-i} x S_i), lex ordered.
inline std::vector<Permutation> min_coset_reps(int n, int i) {
    if (n < 0 || i < 0 || i > n) {
        throw std::invalid_argument("min_coset_reps: need 0 <= i <= n");
    }
    std::vector<Permutation> out;
    // choose the image set of the back block; both blocks are increasing
    std::vector<bool> back(static_cast<std::size_t>(n), false);
    std::fill(back.end() - i, back.end(), true);
    do {
        std::vector<int> img;
        for (int v = 1; v <= n; ++v) {
            if (!back[static_cast<std::size_t>(v - 1)]) {
                img.push_back(v);
            }
        }
        for (int v = 1; v <= n; ++v) {
            if (back[static_cast<std::size_t>(v - 1)]) {
                img.push_back(v);
            }
        }
        out.emplace_back(std::move(img));
    } while (std::next_permutation(back.begin(), back.end()));
    std::sort(out.begin(), out.end());
    return out;
}

struct CosetCriteria {
    bool leq;
    bool front;
    bool back;
};

inline CosetCriteria coset_criteria_check(const Permutation& wp, const Permutation& w, int i) {
    if (wp.size() != w.size()) {
        throw std::invalid_argument("coset_criteria_check: size mismatch");
    }
    if (!is_min_coset_rep(wp, i) || !is_min_coset_rep(w, i)) {
        throw std::invalid_argument("coset_criteria_check: not a minimal coset representative");
    }
    const int n = w.size();
    CosetCriteria out{bruhat_leq(wp, w), true, true};
    for (int k = 1; k <= n - i; ++k) {
        out.front = out.front && wp(k) <= w(k);
    }
    for (int k = n - i + 1; k <= n; ++k) {
        out.back = out.back && wp(k) >= w(k);
    }
    return out;
}

}  // namespace mseg::bruhat
