// Acceptance suite: one PASS/FAIL line per criterion.
// usage: acceptance [--only N] [--known-failure N]...
#include <chrono>
#include <cstdio>
#include <functional>
#include <set>
#include <string>

#include "omega/charsample.hpp"
#include "omega/error.hpp"
#include "omega/io.hpp"
#include "omega/reductions.hpp"
#include "support.hpp"

using namespace omega;
using namespace omega::test;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

struct Verdict {
    bool pass = true;
    std::string detail;

    void require(bool ok, const std::string& what) {
        if (!ok && pass) detail = what;
        pass = pass && ok;
    }
};

/// Artifacts produced by criteria 1-8, checked for format round trips by criterion 9.
struct Artifacts {
    std::vector<Automaton> automata;
    std::vector<Sample> samples;
};

Artifacts artifacts;

LearnerConfig config(AcceptanceType type, bool trace = false) {
    LearnerConfig cfg;
    cfg.type = type;
    cfg.trace = trace;
    return cfg;
}

Verdict criterion1() {
    Verdict v;
    const auto t0 = Clock::now();
    const auto a = sprout(fix_s3(), config(AcceptanceType::Parity));
    const double elapsed = seconds_since(t0);
    v.require(a.ts.num_states() == 3, "learned automaton has " + std::to_string(a.ts.num_states()) + " states");
    v.require(std::holds_alternative<ParityCondition>(a.condition), "result is not a parity automaton");
    v.require(!equivalence(a, fix_a()), "learned automaton differs from the three-state reference");
    v.require(elapsed < 1.0, "took " + std::to_string(elapsed) + " s");
    artifacts.automata.push_back(a);
    artifacts.samples.push_back(fix_s3());
    if (v.pass) v.detail = "3 states, equivalent, " + std::to_string(elapsed) + " s";
    return v;
}

Verdict criterion2() {
    Verdict v;
    auto z = [](std::initializer_list<std::size_t> ids) {
        TransitionSet s(7);
        for (auto i : ids) s.set(i - 1);
        return s;
    };
    const auto h = PartialCondition::make({z({1, 2, 3, 4, 5, 6, 7}), z({1, 2, 3, 4}), z({4, 5, 6, 7}), z({1, 2}),
                                           z({2, 3, 4}), z({4, 5, 7}), z({4, 6, 7})},
                                          {z({1}), z({2, 3}), z({5}), z({4, 6})});
    TransitionSet universe(7);
    universe.set();
    const auto r = parity_cons(h, universe);
    v.require(r.has_value(), "no parity condition found");
    if (!r) return v;
    const std::vector<Priority> expected{5, 4, 3, 2, 1, 1, 0};
    v.require(condition_size(r->condition) == 6, "uses " + std::to_string(condition_size(r->condition)) + " priorities");
    v.require(r->condition.priority == expected, "priorities differ from 5 4 3 2 1 1 0");
    if (v.pass) v.detail = "6 priorities, t1..t7 -> 5 4 3 2 1 1 0";
    return v;
}

Verdict criterion3() {
    Verdict v;
    Rng rng(3);
    std::size_t disagreements = 0;
    for (std::size_t i = 2; i <= 4; ++i) {
        const auto a = sprout(l_i_sample(i), config(AcceptanceType::Parity));
        artifacts.automata.push_back(a);
        artifacts.samples.push_back(l_i_sample(i));
        v.require(a.ts.num_states() == i, "L_" + std::to_string(i) + " gave " + std::to_string(a.ts.num_states()) + " states");
        const auto reference = reference_l_i(i);
        for (int probe = 0; probe < 200; ++probe) {
            const auto w = normalize(random_word(rng, 2, 20, 10));
            if (accepts(a, w) != accepts(reference, w) || accepts(a, w) != in_l_i(w, i)) ++disagreements;
        }
    }
    v.require(disagreements == 0, std::to_string(disagreements) + " probe disagreements");
    if (v.pass) v.detail = "2, 3, 4 states; 600 probes agree";
    return v;
}

Verdict criterion4() {
    Verdict v;
    Rng rng(4);
    std::size_t ok = 0, total = 0;
    std::string misses;
    for (auto type : learnable_types()) {
        std::size_t type_ok = 0;
        for (int i = 0; i < 100; ++i) {
            const auto target = random_irc_automaton(rng, type, 5);
            const auto s = characteristic_sample(target);
            const auto learned = sprout(s, config(type));
            bool good = !equivalence(learned, target);

            std::vector<OmegaWord> pos = s.positive, neg = s.negative;
            for (int extra = 0; extra < 10; ++extra) {
                const auto w = normalize(random_word(rng, 2, 4, 4));
                (accepts(target, w) ? pos : neg).push_back(w);
            }
            const auto bigger = make_sample(s.alphabet, pos, neg);
            const auto relearned = sprout(bigger, config(type));
            good = good && !equivalence(relearned, target);
            ok += good;
            type_ok += good;
            ++total;
            if (i % 10 == 0) {
                artifacts.automata.push_back(target);
                artifacts.automata.push_back(relearned);
                artifacts.samples.push_back(bigger);
            }
        }
        misses += std::string(misses.empty() ? "" : ", ") + std::string(to_string(type)) + " " + std::to_string(type_ok) + "/100";
    }
    v.require(ok == total, std::to_string(ok) + "/" + std::to_string(total) + " recovered (" + misses + ")");
    if (v.pass) v.detail = std::to_string(ok) + "/" + std::to_string(total) + " recovered with and without extra words";
    return v;
}

/// All sets of at most `max` distinct nonempty subsets of an n-element universe.
std::vector<std::vector<std::size_t>> families(std::size_t n, std::size_t max) {
    const std::size_t subsets = (std::size_t{1} << n) - 1;
    std::vector<std::vector<std::size_t>> out{{}};
    std::function<void(std::size_t, std::vector<std::size_t>&)> grow = [&](std::size_t next, std::vector<std::size_t>& cur) {
        if (cur.size() == max) return;
        for (std::size_t m = next; m <= subsets; ++m) {
            cur.push_back(m);
            out.push_back(cur);
            grow(m + 1, cur);
            cur.pop_back();
        }
    };
    std::vector<std::size_t> cur;
    grow(1, cur);
    return out;
}

Verdict criterion5() {
    Verdict v;
    const auto t0 = Clock::now();
    std::size_t checked = 0, mismatches = 0;
    std::string first;
    for (std::size_t n = 1; n <= 4; ++n) {
        TransitionSet universe(n);
        universe.set();
        const auto fam = families(n, 3);
        for (const auto& p : fam) {
            for (const auto& q : fam) {
                if (std::any_of(p.begin(), p.end(), [&](std::size_t m) { return std::find(q.begin(), q.end(), m) != q.end(); }))
                    continue;
                std::vector<TransitionSet> pos, neg;
                for (auto m : p) pos.emplace_back(n, m);
                for (auto m : q) neg.emplace_back(n, m);
                const auto h = PartialCondition::make(pos, neg);
                for (auto type : learnable_types()) {
                    const auto solved = solve(h, universe, type);
                    const auto oracle = brute_force_consistency(universe, h, type, {}, {}, Exec::Serial);
                    bool agree = solved.has_value() == oracle.has_value();
                    if (agree && solved) {
                        agree = naive_consistent(*solved, h);
                        if (type == AcceptanceType::Parity) agree = agree && condition_size(*solved) == condition_size(*oracle);
                    }
                    ++checked;
                    if (!agree) {
                        if (mismatches == 0) first = std::string(to_string(type)) + " on universe " + std::to_string(n);
                        ++mismatches;
                    }
                }
            }
        }
    }
    const double elapsed = seconds_since(t0);
    v.require(mismatches == 0, std::to_string(mismatches) + " mismatches, first: " + first);
    v.require(elapsed < 300.0, "took " + std::to_string(elapsed) + " s");
    if (v.pass) v.detail = std::to_string(checked) + " instances agree in " + std::to_string(elapsed) + " s";
    return v;
}

Verdict criterion6() {
    Verdict v;
    const auto triangle = parse_graph("n 3\n1 2\n2 3\n3 1\n");
    DiGraph k4{4, {}};
    for (std::size_t i = 1; i <= 4; ++i)
        for (std::size_t j = 1; j <= 4; ++j)
            if (i != j) k4.edges.emplace_back(i, j);
    for (auto type : {AcceptanceType::GenBuchi, AcceptanceType::Rabin}) {
        const std::string name(to_string(type));
        auto instance = [&](const DiGraph& g) {
            return type == AcceptanceType::GenBuchi ? coloring_to_genbuchi_instance(g) : coloring_to_rabin_instance(g);
        };
        const auto tri = instance(triangle);
        const auto h = std::get<PartialCondition>(induced_partial_condition(tri.ts, tri.sample));
        const auto c = brute_force_consistency(tri.ts, h, type, 3);
        v.require(c.has_value(), name + ": triangle not 3-consistent");
        if (c) {
            bool valid = false;
            try {
                valid = valid_coloring(triangle, decode_coloring(*c, triangle));
            } catch (const Error&) {
            }
            v.require(valid, name + ": decoded triangle coloring invalid");
            artifacts.automata.push_back({tri.ts, *c});
        }
        artifacts.samples.push_back(tri.sample);
        const auto big = instance(k4);
        const auto hk = std::get<PartialCondition>(induced_partial_condition(big.ts, big.sample));
        v.require(!brute_force_consistency(big.ts, hk, type, 3), name + ": K4 found 3-consistent");
        artifacts.samples.push_back(big.sample);
    }
    if (v.pass) v.detail = "triangle consistent with valid colorings, K4 inconsistent, both targets";
    return v;
}

Verdict criterion7() {
    Verdict v;
    const auto s = non_termination_sample();
    const auto r = learn(s, config(AcceptanceType::Parity, true));
    artifacts.samples.push_back(s);
    artifacts.automata.push_back(r.automaton);
    const bool chain = r.before_extend && chain_with_self_loops(*r.before_extend);
    const bool consistent = consistent_with(r.automaton, s);
    v.require(r.threshold_hit, "threshold " + std::to_string(r.threshold) + " never reached; Sprout stopped after " +
                                   std::to_string(r.iterations) + " insertions with " +
                                   std::to_string(r.automaton.ts.num_states()) + " states");
    v.require(chain, "no chain with self-loops before Extend");
    v.require(consistent, "result inconsistent with the sample");

    std::size_t previous = 0;
    for (std::size_t len = 5; len <= 7; ++len) {
        const auto sample = l_or_sample(len);
        const auto lr = learn(sample, config(AcceptanceType::Parity, true));
        const std::size_t states = chain_prefix_states(lr.trace);
        v.require(states >= len + 1 && states > previous,
                  "L-or sample of period " + std::to_string(len) + ": chain of " + std::to_string(states) + " states");
        v.require(consistent_with(lr.automaton, sample), "L-or result inconsistent");
        previous = states;
        artifacts.samples.push_back(sample);
        artifacts.automata.push_back(lr.automaton);
    }
    if (v.pass) v.detail = "threshold branch taken, chain before Extend, consistent; L-or chains grow";
    else v.detail += " (sample-consistent: " + std::string(consistent ? "yes" : "no") + ")";
    return v;
}

Verdict criterion8() {
    Verdict v;
    Rng rng(8);
    std::size_t ok = 0, total = 0;
    for (int i = 0; i < 1000; ++i) {
        const auto s = random_sample(rng, Alphabet::letters(2), 8, 4, 4);
        for (auto type : learnable_types()) {
            const auto a = sprout(s, config(type));
            ok += consistent_with(a, s);
            ++total;
            if (i % 50 == 0) artifacts.automata.push_back(a);
        }
        if (i % 50 == 0) artifacts.samples.push_back(s);
    }
    v.require(ok == total, std::to_string(ok) + "/" + std::to_string(total) + " consistent");
    if (v.pass) v.detail = std::to_string(ok) + "/" + std::to_string(total) + " consistent";
    return v;
}

bool same_automaton(const Automaton& x, const Automaton& y) {
    return x.ts == y.ts && x.condition == y.condition && !equivalence(x, y);
}

Verdict criterion9() {
    Verdict v;
    std::size_t checked = 0;
    for (const auto& s : artifacts.samples) {
        const auto text = emit_sample(s);
        const auto back = parse_sample(text).sample;
        v.require(back == s && emit_sample(back) == text, "sample round trip failed");
        ++checked;
    }
    for (const auto& a : artifacts.automata) {
        const auto text = emit_hoa(a);
        const auto back = parse_hoa(text);
        v.require(same_automaton(back, a) && emit_hoa(back) == text, "HOA round trip failed");
        ++checked;
    }
    v.require(artifacts.samples.size() > 0 && artifacts.automata.size() > 0, "no artifacts collected");
    if (v.pass)
        v.detail = std::to_string(artifacts.samples.size()) + " samples and " + std::to_string(artifacts.automata.size()) +
                   " automata round-trip";
    return v;
}

}  // namespace

int main(int argc, char** argv) {
    std::set<int> known_failures;
    std::optional<int> only;
    for (int i = 1; i < argc; ++i) {
        const std::string arg = argv[i];
        if ((arg == "--known-failure" || arg == "--only") && i + 1 < argc) {
            const int n = std::stoi(argv[++i]);
            if (arg == "--only") only = n;
            else known_failures.insert(n);
        } else {
            std::fprintf(stderr, "usage: %s [--only N] [--known-failure N]...\n", argv[0]);
            return 2;
        }
    }

    const std::vector<std::pair<std::string, std::function<Verdict()>>> criteria{
        {"three-state parity automaton learned from its sample", criterion1},
        {"parity solver on the six-level Zielonka example", criterion2},
        {"L_i family for i = 2, 3, 4", criterion3},
        {"learning in the limit from characteristic samples", criterion4},
        {"solvers agree with the exhaustive oracle", criterion5},
        {"coloring reduction instances", criterion6},
        {"non-learnability behavior", criterion7},
        {"learned automata are consistent with random samples", criterion8},
        {"format round trips on generated artifacts", criterion9},
    };
    int unexpected = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        const int id = static_cast<int>(i + 1);
        if (only && *only != id) continue;
        const auto t0 = Clock::now();
        Verdict v;
        try {
            v = criteria[i].second();
        } catch (const std::exception& e) {
            v.pass = false;
            v.detail = std::string("exception: ") + e.what();
        }
        std::printf("%s %d: %s -- %s [%.2f s]%s\n", v.pass ? "PASS" : "FAIL", id, criteria[i].first.c_str(),
                    v.detail.c_str(), seconds_since(t0), !v.pass && known_failures.count(id) ? " (known failure)" : "");
        std::fflush(stdout);
        if (!v.pass && !known_failures.count(id)) ++unexpected;
    }
    return unexpected == 0 ? 0 : 1;
}
