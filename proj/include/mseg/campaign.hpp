#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "bruhat.hpp"
#include "invariants.hpp"
#include "minimality.hpp"
#include "removal.hpp"
#include "text.hpp"
#include "universe.hpp"
#include "zelevinsky.hpp"

namespace mseg {

struct CampaignParams {
    UniverseParams universe{};
    std::uint64_t seed = 42;
    /// Instance count for seeded campaigns; 0 selects the campaign default.
    std::size_t count = 0;
};

struct CampaignResult {
    std::string name;
    bool assertive = true;
    CampaignParams params;
    CampaignReport report;

    /// 0 when clean or exploratory, 1 otherwise.
    int exit_code() const { return assertive && !report.clean() ? 1 : 0; }
};

inline const std::vector<std::string>& campaign_names() {
    static const std::vector<std::string> names{
        "removal-equivalence", "lemma-properties", "pair-equivalence", "minimality-criterion",
        "unique-minimal",      "convexity",        "subsequent",       "dagger",
        "order-shadow",        "bruhat-equivalence", "speh-roundtrip"};
    return names;
}

namespace campaigns {

inline std::string key(std::string_view tag, const std::string& value) {
    return std::string(tag) + "=" + value;
}

inline std::string bool_str(bool b) { return b ? "true" : "false"; }

/// Trace result agrees with the recursion; trace nesting and length hold.
inline CampaignReport removal_equivalence(const CampaignParams& p) {
    CampaignReport rep;
    const auto u = universe(p.universe);
    for (const auto& d : segments_in(p.universe.lo, p.universe.hi)) {
        for (const auto& h : u) {
            if (!is_admissible_segment(d, h)) {
                continue;
            }
            const auto tr = removal_trace(d, h);
            const auto rec = remove_segment(d, h);
            bool ok = !rec.is_infinity() && tr.result == *rec;
            for (std::size_t i = 1; i < tr.picked.size(); ++i) {
                ok = ok && tr.picked[i - 1].a() < tr.picked[i].a() && tr.picked[i - 1].b() > tr.picked[i].b() &&
                     tr.picked[i].b() >= d.b();
            }
            ok = ok && l_abs(h) - l_abs(tr.result) == l_abs(d);
            rep.record(ok, key("d", format_segment(d)) + "; " + key("h", format_multisegment(h)),
                       format_outcome(rec), format_multisegment(tr.result));
        }
    }
    return rep;
}

/// Removal lemma items (2)-(5).
inline CampaignReport lemma_properties(const CampaignParams& p) {
    CampaignReport rep;
    const auto u = universe(p.universe);
    const auto segs = segments_in(p.universe.lo, p.universe.hi);
    for (const auto& h : u) {
        const std::string hk = key("h", format_multisegment(h));
        for (const auto& d : segs) {
            if (!is_admissible_segment(d, h)) {
                continue;
            }
            const Multisegment r = *remove_segment(d, h);
            const std::string dk = key("d", format_segment(d)) + "; " + hk;
            // (2) lower left endpoints untouched
            for (int a = p.universe.lo; a < d.a(); ++a) {
                bool ok = select_a(r, a) == select_a(h, a);
                rep.record(ok, "item=2; a'=" + std::to_string(a) + "; " + dk, format_multisegment(select_a(h, a)),
                           format_multisegment(select_a(r, a)));
            }
            // (3) member removal
            if (h.contains(d)) {
                const Multisegment expect = h.without(d);
                rep.record(r == expect, "item=3; " + dk, format_multisegment(expect), format_multisegment(r));
            }
            for (const auto& dp : segs) {
                if (!is_admissible_segment(dp, h)) {
                    continue;
                }
                const std::string pk = "d'=" + format_segment(dp) + "; " + dk;
                // (4) Υ-exchange for equal left endpoints
                if (dp.a() == d.a() && d < dp) {
                    const Multisegment r2 = *remove_segment(dp, h);
                    if (is_admissible_segment(dp, r) && is_admissible_segment(d, r2)) {
                        const Multisegment lhs{upsilon(d, h), upsilon(dp, r)};
                        const Multisegment rhs{upsilon(dp, h), upsilon(d, r2)};
                        rep.record(lhs == rhs, "item=4; " + pk, format_multisegment(lhs), format_multisegment(rhs));
                    }
                }
                // (5) unlinked segments commute, infinity included
                if (d < dp && !is_linked(d, dp)) {
                    const auto lhs = remove_segment(dp, remove_segment(d, h));
                    const auto rhs = remove_segment(d, remove_segment(dp, h));
                    rep.record(lhs == rhs, "item=5; " + pk, format_outcome(lhs), format_outcome(rhs));
                }
            }
        }
    }
    return rep;
}

inline CampaignReport pair_equivalence(const CampaignParams& p) {
    CampaignReport rep;
    const auto u = universe(p.universe);
    const auto segs = segments_in(p.universe.lo, p.universe.hi);
    for (const auto& h : u) {
        for (const auto& d : segs) {
            if (!is_admissible_segment(d, h)) {
                continue;
            }
            for (const auto& dp : segs) {
                if (!precedes(d, dp) || !is_admissible_segment(dp, h)) {
                    continue;
                }
                const auto pr = pair_equivalence_report(d, dp, h);
                const std::string got =
                    bool_str(pr.non_overlapping) + "," + bool_str(pr.intermediate) + "," + bool_str(pr.pair_minimal);
                rep.record(pr.agree(),
                           key("d", format_segment(d)) + "; " + key("d'", format_segment(dp)) + "; " +
                               key("h", format_multisegment(h)),
                           "all equal", got);
            }
        }
    }
    return rep;
}

/// Admissible pairs (n,h) drawn from U x U.
inline std::vector<std::pair<Multisegment, Multisegment>> admissible_pairs(const UniverseParams& up) {
    const auto u = universe(up);
    std::vector<std::pair<Multisegment, Multisegment>> out;
    for (const auto& h : u) {
        for (const auto& n : u) {
            if (is_admissible(n, h)) {
                out.emplace_back(n, h);
            }
        }
    }
    return out;
}

inline CampaignReport minimality_criterion(const CampaignParams& p) {
    CampaignReport rep;
    DownSetCache cache;
    for (const auto& [n, h] : admissible_pairs(p.universe)) {
        const bool crit = is_minimal(n, h);
        const bool brute = is_minimal_bruteforce(n, h, &cache);
        rep.record(crit == brute, instance_key(n, h), bool_str(brute), bool_str(crit));
    }
    return rep;
}

/// Distinct (h, target) pairs realized by admissible pairs of U, with one
/// witness n each.
inline std::map<std::pair<Multisegment, Multisegment>, Multisegment> realized_targets(const UniverseParams& up) {
    std::map<std::pair<Multisegment, Multisegment>, Multisegment> out;
    for (const auto& [n, h] : admissible_pairs(up)) {
        out.try_emplace({h, *remove_multi(n, h)}, n);
    }
    return out;
}

/// S(h,target) has exactly one minimal element, reached by find_minimal.
inline CampaignReport unique_minimal(const CampaignParams& p) {
    CampaignReport rep;
    DownSetCache cache;
    for (const auto& [ht, witness] : realized_targets(p.universe)) {
        const auto& [h, target] = ht;
        const auto s = enumerate_S(h, target);
        const auto mins = minimal_elements(s, &cache);
        std::string got;
        for (const auto& m : mins) {
            got += (got.empty() ? "" : " | ") + format_multisegment(m);
        }
        const std::string k = key("h", format_multisegment(h)) + "; " + key("target", format_multisegment(target));
        rep.record(mins.size() == 1, k, "one minimal element", got);
        if (mins.size() == 1) {
            const auto found = find_minimal(witness, h);
            rep.record(found == mins.front(), "find; " + instance_key(witness, h), format_multisegment(mins.front()),
                       format_multisegment(found));
        }
    }
    return rep;
}

/// n1 <=_Z n <=_Z n2 with n1, n2 in S(h,target) forces n in S(h,target).
inline CampaignReport convexity(const CampaignParams& p) {
    CampaignReport rep;
    DownSetCache cache;
    for (const auto& [ht, witness] : realized_targets(p.universe)) {
        const auto& [h, target] = ht;
        const auto s = enumerate_S(h, target);
        MultisegmentSet between;
        for (const auto& top : s) {
            for (const auto& mid : *lower_set(top, cache)) {
                if (s.contains(mid) || between.contains(mid)) {
                    continue;
                }
                const auto& down = *lower_set(mid, cache);
                if (std::any_of(down.begin(), down.end(), [&](const Multisegment& x) { return s.contains(x); })) {
                    between.insert(mid);
                }
            }
        }
        std::string got = between.empty() ? "interval-closed" : format_multisegment(*between.begin());
        rep.record(between.empty(),
                   key("h", format_multisegment(h)) + "; " + key("target", format_multisegment(target)),
                   "interval-closed", got);
    }
    return rep;
}

inline std::vector<std::pair<Multisegment, Multisegment>> minimal_pairs(const UniverseParams& up) {
    std::vector<std::pair<Multisegment, Multisegment>> out;
    for (auto& [n, h] : admissible_pairs(up)) {
        if (is_minimal(n, h)) {
            out.emplace_back(n, h);
        }
    }
    return out;
}

inline CampaignReport subsequent(const CampaignParams& p) {
    CampaignReport rep;
    for (const auto& [n, h] : minimal_pairs(p.universe)) {
        rep.merge(check_subsequent(n, h));
    }
    return rep;
}

/// Qualifying triples: n minimal to h, d admissible to h and strictly to the
/// upper right of every segment of n.
inline CampaignReport dagger(const CampaignParams& p) {
    CampaignReport rep;
    const auto segs = segments_in(p.universe.lo, p.universe.hi);
    for (const auto& [n, h] : minimal_pairs(p.universe)) {
        for (const auto& d : segs) {
            if (!is_admissible_segment(d, h)) {
                continue;
            }
            if (!std::all_of(n.begin(), n.end(), [&](const Segment& s) { return s.a() < d.a() && s.b() < d.b(); })) {
                continue;
            }
            const auto res = check_dagger_extension(n, h, d);
            rep.record(res.minimal_with == res.eta_equal, key("d", format_segment(d)) + "; " + instance_key(n, h),
                       "minimal_with == eta_equal",
                       "minimal_with=" + bool_str(res.minimal_with) + ", eta_equal=" + bool_str(res.eta_equal));
        }
    }
    return rep;
}

inline GenParams gen_params(const CampaignParams& p) {
    return {p.universe.lo, p.universe.hi, p.universe.max_segments, p.universe.max_multiplicity, p.seed};
}

/// Exploratory: seeded minimal instances with at least two segments.
inline CampaignReport order_shadow(const CampaignParams& p) {
    CampaignReport rep;
    rep.seed = p.seed;
    const std::size_t count = p.count ? p.count : 500;
    const GenParams gp = gen_params(p);
    Rng rng(p.seed);
    std::size_t drawn = 0;
    for (std::size_t attempts = 0; drawn < count && attempts < 1000 * count; ++attempts) {
        const Multisegment h = gen_multisegment(gp, rng);
        const Multisegment n0 = gen_multisegment(gp, rng);
        if (n0.size() < 2 || !is_admissible(n0, h)) {
            continue;
        }
        const Multisegment n = find_minimal(n0, h);
        if (n.size() < 2) {
            continue;
        }
        ++drawn;
        const auto orders = check_order_shadow(n, h);
        if (orders.clean()) {
            rep.record(true, instance_key(n, h), "", "");
        } else {
            const auto& first = orders.counterexamples.front();
            rep.record(false, first.input, first.expected,
                       first.actual + " (" + std::to_string(orders.counterexamples.size()) + " of " +
                           std::to_string(orders.instances) + " orders disagree)");
        }
    }
    return rep;
}

inline long binomial(int n, int k) {
    long r = 1;
    for (int i = 1; i <= k; ++i) {
        r = r * (n - k + i) / i;
    }
    return r;
}

/// Statistic criterion versus cover closure on S_n (n <= 5); the three
/// coset criteria and coset sizes on S^{n-i,i} (n <= 6).
inline CampaignReport bruhat_equivalence(const CampaignParams&) {
    using namespace bruhat;
    CampaignReport rep;
    for (int n = 1; n <= 5; ++n) {
        const auto all = all_permutations(n);
        for (const auto& x : all) {
            for (const auto& y : all) {
                const bool stat = bruhat_leq(x, y);
                const bool oracle = bruhat_leq_oracle(x, y);
                rep.record(stat == oracle, "w'=" + format_permutation(x) + "; w=" + format_permutation(y),
                           bool_str(oracle), bool_str(stat));
            }
        }
    }
    for (int n = 1; n <= 6; ++n) {
        for (int i = 0; i <= n; ++i) {
            const auto reps = min_coset_reps(n, i);
            const std::string ni = "n=" + std::to_string(n) + "; i=" + std::to_string(i);
            rep.record(static_cast<long>(reps.size()) == binomial(n, i), "count; " + ni,
                       std::to_string(binomial(n, i)), std::to_string(reps.size()));
            for (const auto& x : reps) {
                for (const auto& y : reps) {
                    const auto c = coset_criteria_check(x, y, i);
                    rep.record(c.leq == c.front && c.front == c.back,
                               ni + "; w'=" + format_permutation(x) + "; w=" + format_permutation(y), "all equal",
                               bool_str(c.leq) + "," + bool_str(c.front) + "," + bool_str(c.back));
                }
            }
        }
    }
    // each representative is the Bruhat-least element of its coset
    for (int n = 1; n <= 5; ++n) {
        for (int i = 0; i <= n; ++i) {
            for (const auto& w : all_permutations(n)) {
                auto img = w.images();
                std::sort(img.begin(), img.begin() + (n - i));
                std::sort(img.begin() + (n - i), img.end());
                const Permutation rep_w(img);
                const bool ok = bruhat_leq_oracle(rep_w, w);
                rep.record(ok, "coset-min; n=" + std::to_string(n) + "; i=" + std::to_string(i) +
                                   "; w=" + format_permutation(w),
                           format_permutation(rep_w) + " <= w", bool_str(ok));
            }
        }
    }
    return rep;
}

inline CampaignReport speh_roundtrip(const CampaignParams& p) {
    CampaignReport rep;
    rep.seed = p.seed;
    const std::size_t count = p.count ? p.count : 200;
    GenParams gp = gen_params(p);
    Rng rng(p.seed);
    for (std::size_t drawn = 0; drawn < count;) {
        const Multisegment m = gen_multisegment(gp, rng);
        if (m.empty()) {
            continue;
        }
        ++drawn;
        const auto params = speh_realization(m);
        const std::string why = speh_violation(m, params);
        rep.record(why.empty(), key("m", format_multisegment(m)), "realized", why.empty() ? "realized" : why);
    }
    return rep;
}

}  // namespace campaigns

inline bool is_exploratory(std::string_view name) { return name == "order-shadow"; }

/// Runs a named verification campaign. Counterexamples are sorted so that
/// the report is independent of evaluation order.
inline CampaignResult run_campaign(const std::string& name, const CampaignParams& params) {
    using Fn = CampaignReport (*)(const CampaignParams&);
    static const std::map<std::string, Fn, std::less<>> table{
        {"removal-equivalence", campaigns::removal_equivalence},
        {"lemma-properties", campaigns::lemma_properties},
        {"pair-equivalence", campaigns::pair_equivalence},
        {"minimality-criterion", campaigns::minimality_criterion},
        {"unique-minimal", campaigns::unique_minimal},
        {"convexity", campaigns::convexity},
        {"subsequent", campaigns::subsequent},
        {"dagger", campaigns::dagger},
        {"order-shadow", campaigns::order_shadow},
        {"bruhat-equivalence", campaigns::bruhat_equivalence},
        {"speh-roundtrip", campaigns::speh_roundtrip},
    };
    auto it = table.find(name);
    if (it == table.end()) {
        throw std::invalid_argument("unknown campaign: " + name);
    }
    CampaignResult out{name, !is_exploratory(name), params, it->second(params)};
    out.report.seed = params.seed;
    std::sort(out.report.counterexamples.begin(), out.report.counterexamples.end());
    return out;
}

/// Versioned JSON form of a campaign result.
inline nlohmann::ordered_json to_json(const CampaignResult& r) {
    nlohmann::ordered_json j;
    j["schema"] = 1;
    j["campaign"] = r.name;
    j["assertive"] = r.assertive;
    j["seed"] = r.report.seed;
    j["params"] = {{"window", std::to_string(r.params.universe.lo) + ":" + std::to_string(r.params.universe.hi)},
                   {"max_segments", r.params.universe.max_segments},
                   {"max_multiplicity", r.params.universe.max_multiplicity},
                   {"count", r.params.count}};
    j["instances"] = r.report.instances;
    j["passes"] = r.report.passes;
    auto cex = nlohmann::ordered_json::array();
    for (const auto& c : r.report.counterexamples) {
        cex.push_back({{"input", c.input}, {"expected", c.expected}, {"actual", c.actual}});
    }
    j["counterexamples"] = std::move(cex);
    if (!r.assertive) {
        j["findings"] = !r.report.clean();
    }
    return j;
}

/// Splits a counterexample input `k1=v1; k2=v2` into fields; bare tags
/// (like `sub`) map to an empty value.
inline std::map<std::string, std::string> parse_instance(std::string_view input) {
    std::map<std::string, std::string> out;
    std::size_t start = 0;
    while (start < input.size()) {
        std::size_t end = input.find(';', start);
        if (end == std::string_view::npos) {
            end = input.size();
        }
        std::string_view field = input.substr(start, end - start);
        while (!field.empty() && field.front() == ' ') {
            field.remove_prefix(1);
        }
        const auto eq = field.find('=');
        if (eq == std::string_view::npos) {
            out[std::string(field)] = "";
        } else {
            out[std::string(field.substr(0, eq))] = std::string(field.substr(eq + 1));
        }
        start = end + 1;
    }
    return out;
}

}  // namespace mseg
