// Command-line front end for the multisegment library.
//
// Exit codes: 0 success (or a clean/exploratory campaign), 1 an assertive
// campaign found counterexamples, 2 usage or parse error.

#include <cstdint>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include <mseg/mseg.hpp>

namespace {

using nlohmann::ordered_json;

constexpr int kUsageError = 2;

struct Globals {
    int deg = 1;
    bool json = false;
    bool dot = false;
    std::string window;
};

mseg::Window parse_window(const std::string& text) {
    const auto colon = text.find(':', text.empty() ? 0 : 1);
    if (colon == std::string::npos) {
        throw mseg::ParseError("window must be lo:hi", 0);
    }
    const int lo = std::stoi(text.substr(0, colon));
    const int hi = std::stoi(text.substr(colon + 1));
    if (lo > hi) {
        throw mseg::ParseError("window lower end exceeds upper end", 0);
    }
    return {lo, hi};
}

void print_set(const mseg::MultisegmentSet& s, const Globals& g) {
    if (g.dot) {
        std::cout << mseg::hasse_dot(s);
    } else if (g.json) {
        ordered_json arr = ordered_json::array();
        for (const auto& m : s) {
            arr.push_back(mseg::format_multisegment(m));
        }
        std::cout << arr.dump(2) << "\n";
    } else {
        for (const auto& m : s) {
            std::cout << mseg::format_multisegment(m) << "\n";
        }
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Multisegment calculus: removal processes, Zelevinsky order, minimal sequences"};
    app.require_subcommand(1);
    app.fallthrough();

    Globals g;
    app.add_option("--deg", g.deg, "Degree of the cuspidal base (scales absolute lengths)")
        ->check(CLI::PositiveNumber);
    app.add_flag("--json", g.json, "Emit JSON");
    app.add_flag("--dot", g.dot, "Emit Graphviz DOT where a poset is printed");
    app.add_option("--window", g.window, "Segment window lo:hi");

    std::string arg1, arg2, arg3;
    auto* remove = app.add_subcommand("remove", "r(n,h): print the result or `infinity`");
    remove->add_option("n", arg1, "Segment or multisegment to remove")->required();
    remove->add_option("hd", arg2, "Multisegment h")->required();

    auto* trace = app.add_subcommand("trace", "Removal sequence and truncations of r(d,h)");
    trace->add_option("d", arg1, "Segment")->required();
    trace->add_option("hd", arg2, "Multisegment h")->required();

    auto* eta = app.add_subcommand("eta", "eta_d(h) as a tuple");
    eta->add_option("d", arg1, "Segment")->required();
    eta->add_option("hd", arg2, "Multisegment h")->required();

    auto* mx = app.add_subcommand("mx", "mx(h,d)");
    mx->add_option("hd", arg1, "Multisegment h")->required();
    mx->add_option("d", arg2, "Segment")->required();

    auto* zle = app.add_subcommand("zle", "Decide n <=_Z m");
    zle->add_option("n", arg1, "Multisegment")->required();
    zle->add_option("m", arg2, "Multisegment")->required();

    auto* hasse = app.add_subcommand("hasse", "Hasse diagram (DOT) of the lower set of m, or of [lo,m]");
    hasse->add_option("m", arg1, "Upper multisegment")->required();
    hasse->add_option("lo", arg2, "Optional lower endpoint");

    auto* mcheck = app.add_subcommand("minimal-check", "Is n minimal to h");
    mcheck->add_option("n", arg1, "Multisegment")->required();
    mcheck->add_option("hd", arg2, "Multisegment h")->required();

    auto* mfind = app.add_subcommand("minimal-find", "Unique minimal element of S(h, r(n,h))");
    mfind->add_option("n", arg1, "Multisegment")->required();
    mfind->add_option("hd", arg2, "Multisegment h")->required();

    auto* enums = app.add_subcommand("enumerate-s", "All n inside the window with r(n,h) = target");
    enums->add_option("hd", arg1, "Multisegment h")->required();
    enums->add_option("target", arg2, "Multisegment")->required();

    auto* speh = app.add_subcommand("speh-realize", "Essentially Speh parameters realizing m");
    speh->add_option("m", arg1, "Multisegment")->required();

    auto* bru = app.add_subcommand("bruhat", "Bruhat order: `leq w' w`, `stat w k l`, `reps n i`");
    bru->add_option("op", arg1, "leq | stat | reps")->required()->check(CLI::IsMember({"leq", "stat", "reps"}));
    std::vector<std::string> bru_args;
    bru->add_option("args", bru_args, "Operands")->required();

    auto* verify = app.add_subcommand("verify", "Run a verification campaign and print a JSON report");
    verify->add_option("campaign", arg1, "Campaign name")->required()->check(CLI::IsMember(mseg::campaign_names()));
    std::uint64_t seed = 42;
    std::size_t count = 0;
    int max_segments = 3;
    int max_mult = 2;
    verify->add_option("--seed", seed, "Seed for seeded campaigns");
    verify->add_option("--count", count, "Instance count for seeded campaigns (0 = default)");
    verify->add_option("--max-segments", max_segments, "Universe: maximum number of segments")
        ->check(CLI::PositiveNumber);
    verify->add_option("--max-multiplicity", max_mult, "Universe: maximum multiplicity")->check(CLI::PositiveNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsageError;
    }

    const mseg::Config cfg(g.deg);
    try {
        if (*remove) {
            const auto n = mseg::parse_multisegment(arg1);
            const auto h = mseg::parse_multisegment(arg2);
            const auto r = mseg::remove_multi(n, h);
            if (g.json) {
                ordered_json j{{"n", mseg::format_multisegment(n)},
                               {"h", mseg::format_multisegment(h)},
                               {"result", mseg::format_outcome(r)}};
                if (!r.is_infinity()) {
                    j["l_abs"] = mseg::l_abs(*r, cfg);
                }
                std::cout << j.dump(2) << "\n";
            } else {
                std::cout << mseg::format_outcome(r) << "\n";
            }
        } else if (*trace) {
            const auto d = mseg::parse_segment(arg1);
            const auto h = mseg::parse_multisegment(arg2);
            if (!mseg::is_admissible_segment(d, h)) {
                std::cout << "infinity\n";
                return 0;
            }
            const auto tr = mseg::removal_trace(d, h);
            for (std::size_t i = 0; i < tr.picked.size(); ++i) {
                std::cout << "picked " << mseg::format_segment(tr.picked[i]) << " truncated "
                          << (tr.truncated[i] ? mseg::format_segment(*tr.truncated[i]) : std::string("0")) << "\n";
            }
            std::cout << "result " << mseg::format_multisegment(tr.result) << "\n";
            std::cout << "l_abs " << mseg::l_abs(h, cfg) << " -> " << mseg::l_abs(tr.result, cfg) << "\n";
        } else if (*eta) {
            const auto d = mseg::parse_segment(arg1);
            const auto h = mseg::parse_multisegment(arg2);
            const auto e = mseg::eta(d, h);
            if (g.json) {
                std::cout << ordered_json{{"eta", e.counts}, {"abs", e.total()}}.dump(2) << "\n";
            } else {
                std::cout << mseg::format_eta(e) << "\n";
            }
        } else if (*mx) {
            const auto h = mseg::parse_multisegment(arg1);
            const auto d = mseg::parse_segment(arg2);
            std::cout << mseg::format_multisegment(mseg::mx(h, d)) << "\n";
        } else if (*zle) {
            const auto n = mseg::parse_multisegment(arg1);
            const auto m = mseg::parse_multisegment(arg2);
            std::cout << (mseg::zel_leq(n, m) ? "true" : "false") << "\n";
        } else if (*hasse) {
            const auto m = mseg::parse_multisegment(arg1);
            const auto nodes = arg2.empty() ? mseg::lower_set(m) : mseg::interval(mseg::parse_multisegment(arg2), m);
            if (g.json) {
                ordered_json j{{"nodes", ordered_json::array()}, {"edges", ordered_json::array()}};
                for (const auto& x : nodes) {
                    j["nodes"].push_back(mseg::format_multisegment(x));
                }
                for (const auto& [hi, lo] : mseg::hasse_edges(nodes)) {
                    j["edges"].push_back({mseg::format_multisegment(hi), mseg::format_multisegment(lo)});
                }
                std::cout << j.dump(2) << "\n";
            } else {
                std::cout << mseg::hasse_dot(nodes);
            }
        } else if (*mcheck) {
            const auto n = mseg::parse_multisegment(arg1);
            const auto h = mseg::parse_multisegment(arg2);
            const bool crit = mseg::is_minimal(n, h);
            if (g.json) {
                std::cout << ordered_json{{"admissible", mseg::is_admissible(n, h)},
                                          {"minimal", crit},
                                          {"bruteforce", mseg::is_minimal_bruteforce(n, h)}}
                                 .dump(2)
                          << "\n";
            } else {
                std::cout << (crit ? "true" : "false") << "\n";
            }
        } else if (*mfind) {
            const auto n = mseg::parse_multisegment(arg1);
            const auto h = mseg::parse_multisegment(arg2);
            if (!mseg::is_admissible(n, h)) {
                std::cout << "infinity\n";
                return 0;
            }
            std::cout << mseg::format_multisegment(mseg::find_minimal(n, h)) << "\n";
        } else if (*enums) {
            const auto h = mseg::parse_multisegment(arg1);
            const auto target = mseg::parse_multisegment(arg2);
            const auto w = g.window.empty() ? mseg::default_window(h) : parse_window(g.window);
            print_set(mseg::enumerate_S(h, target, w), g);
        } else if (*speh) {
            const auto m = mseg::parse_multisegment(arg1);
            const auto params = mseg::speh_realization(m);
            if (g.json) {
                ordered_json arr = ordered_json::array();
                for (const auto& p : params) {
                    arr.push_back({{"c", p.c}, {"d", p.d}, {"m", p.m},
                                   {"segment", mseg::format_segment(p.hd_segment())}});
                }
                std::cout << arr.dump(2) << "\n";
            } else {
                for (const auto& p : params) {
                    std::cout << "c=" << p.c << " d=" << p.d << " m=" << p.m << " "
                              << mseg::format_segment(p.hd_segment()) << "\n";
                }
            }
        } else if (*bru) {
            namespace b = mseg::bruhat;
            if (arg1 == "leq" && bru_args.size() == 2) {
                std::cout << (b::bruhat_leq(b::parse_permutation(bru_args[0]), b::parse_permutation(bru_args[1]))
                                  ? "true"
                                  : "false")
                          << "\n";
            } else if (arg1 == "stat" && bru_args.size() == 3) {
                std::cout << b::w_stat(b::parse_permutation(bru_args[0]), std::stoi(bru_args[1]),
                                       std::stoi(bru_args[2]))
                          << "\n";
            } else if (arg1 == "reps" && bru_args.size() == 2) {
                for (const auto& w : b::min_coset_reps(std::stoi(bru_args[0]), std::stoi(bru_args[1]))) {
                    std::cout << b::format_permutation(w) << "\n";
                }
            } else {
                std::cerr << "bruhat: wrong number of operands for " << arg1 << "\n";
                return kUsageError;
            }
        } else if (*verify) {
            mseg::CampaignParams params;
            if (!g.window.empty()) {
                const auto w = parse_window(g.window);
                params.universe.lo = w.lo;
                params.universe.hi = w.hi;
            }
            params.universe.max_segments = max_segments;
            params.universe.max_multiplicity = max_mult;
            params.seed = seed;
            params.count = count;
            const auto result = mseg::run_campaign(arg1, params);
            std::cout << mseg::to_json(result).dump(2) << "\n";
            return result.exit_code();
        }
    } catch (const mseg::ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kUsageError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsageError;
    }
    return 0;
}
