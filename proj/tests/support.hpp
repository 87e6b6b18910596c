#pragma once

// Test-side helpers: fixtures, random generators and naive oracles written
// independently of the library algorithms they check.

#include <algorithm>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "omega/charsample.hpp"
#include "omega/condition.hpp"
#include "omega/consistency.hpp"
#include "omega/oracle.hpp"
#include "omega/scc.hpp"
#include "omega/sprout.hpp"
#include "omega/word.hpp"

namespace omega::test {

inline OmegaWord W(const Alphabet& ab, const std::string& text) { return parse_omega_word(ab, text); }
inline OmegaWord W(const std::string& text) { return parse_omega_word(Alphabet::letters(2), text); }

inline TransitionSet set_of(std::size_t universe, std::initializer_list<std::size_t> members) {
    TransitionSet s(universe);
    for (auto m : members) s.set(m);
    return s;
}

inline TransitionSet set_of(const TransitionSystem& ts, std::initializer_list<std::pair<StateId, char>> transitions) {
    TransitionSet s = ts.empty_set();
    for (auto [q, c] : transitions) s.set(ts.index({q, static_cast<Symbol>(c - 'a')}));
    return s;
}

/// The three-state parity automaton for infinitely many bbb blocks:
/// ε=0, b=1, bb=2; every transition has priority 1 except bb -b-> ε.
inline Automaton fix_a() {
    TransitionSystem ts(Alphabet::letters(2), 3);
    ts.set_label(0, "ε");
    ts.set_label(1, "b");
    ts.set_label(2, "bb");
    const Symbol a = 0, b = 1;
    ts.set_transition(0, a, 0);
    ts.set_transition(0, b, 1);
    ts.set_transition(1, a, 0);
    ts.set_transition(1, b, 2);
    ts.set_transition(2, a, 0);
    ts.set_transition(2, b, 0);
    ParityCondition c{std::vector<Priority>(6, 1)};
    c.priority[ts.index({2, b})] = 0;
    return {ts, c};
}

/// One state with both loops accepting: every word.
inline Automaton universal_automaton() {
    TransitionSystem ts(Alphabet::letters(2));
    ts.set_transition(0, 0, 0);
    ts.set_transition(0, 1, 0);
    return {ts, BuchiCondition{ts.defined_transitions()}};
}

/// Sub-system with states ε, b and the b-transition of b undefined.
inline TransitionSystem fix_t1() {
    TransitionSystem ts(Alphabet::letters(2), 2);
    ts.set_transition(0, 0, 0);
    ts.set_transition(0, 1, 1);
    ts.set_transition(1, 0, 0);
    return ts;
}

inline Sample fix_s3() {
    const auto ab = Alphabet::letters(2);
    return make_sample(ab,
                       {W(ab, "(b)"), W(ab, "(bbbabbaba)"), W(ab, "(abbb)"), W(ab, "(babb)"), W(ab, "(bbab)"),
                        W(ab, "(bbba)")},
                       {W(ab, "(a)"), W(ab, "(ba)"), W(ab, "(bba)")});
}

// ------------------------------------------------------------ naive oracles

inline Symbol naive_at(const OmegaWord& w, std::size_t i) {
    return i < w.spoke.size() ? w.spoke[i] : w.period[(i - w.spoke.size()) % w.period.size()];
}

inline bool naive_equal(const OmegaWord& x, const OmegaWord& y) {
    const std::size_t n = 4 * (x.spoke.size() + y.spoke.size() + x.period.size() * y.period.size()) + 8;
    for (std::size_t i = 0; i < n; ++i)
        if (naive_at(x, i) != naive_at(y, i)) return false;
    return true;
}

/// Infinity set by plain simulation: after |u| + |Q|·|v| steps the sequence of
/// states at period starts has entered its cycle, which is at most |Q| periods
/// long, so the next |Q|·|v| steps cover exactly the recurring transitions.
inline std::optional<TransitionSet> naive_infinity_set(const TransitionSystem& ts, const OmegaWord& w,
                                                       StateId start) {
    const std::size_t transient = w.spoke.size() + ts.num_states() * w.period.size();
    const std::size_t window = ts.num_states() * w.period.size();
    StateId q = start;
    TransitionSet inf = ts.empty_set();
    for (std::size_t i = 0; i < transient + window; ++i) {
        const Symbol s = naive_at(w, i);
        if (!ts.defined(q, s)) return std::nullopt;
        if (i >= transient) inf.set(ts.index({q, s}));
        q = ts.successor(q, s);
    }
    return inf;
}

inline bool naive_satisfies(const TransitionSet& x, const AcceptanceCondition& c) {
    if (const auto* b = std::get_if<BuchiCondition>(&c)) return (x & b->accepting).any();
    if (const auto* g = std::get_if<GenBuchiCondition>(&c)) {
        for (const auto& f : g->components)
            if (!(x & f).any()) return false;
        return true;
    }
    if (const auto* p = std::get_if<ParityCondition>(&c)) {
        Priority least = kNoPriority;
        for (std::size_t t = 0; t < x.size(); ++t)
            if (x.test(t)) least = std::min(least, p->priority[t]);
        return least % 2 == 0;
    }
    if (const auto* r = std::get_if<RabinCondition>(&c)) {
        for (const auto& pair : r->pairs)
            if (!(x & pair.fin).any() && (x & pair.inf).any()) return true;
        return false;
    }
    const auto& m = std::get<MullerCondition>(c);
    return std::find(m.accepting.begin(), m.accepting.end(), x) != m.accepting.end();
}

inline bool naive_accepts(const Automaton& a, const OmegaWord& w, std::optional<StateId> from = {}) {
    const auto inf = naive_infinity_set(a.ts, w, from.value_or(a.ts.initial()));
    return inf && naive_satisfies(*inf, a.condition);
}

/// Membership in (Σ*b^i)^ω over {a, b}: the cyclic period contains b^i.
inline bool in_l_i(const OmegaWord& w, std::size_t i) {
    const auto& v = w.period;
    for (std::size_t start = 0; start < v.size(); ++start) {
        std::size_t run = 0;
        while (run < i && v[(start + run) % v.size()] == 1) ++run;
        if (run == i) return true;
    }
    return false;
}

/// Hand-built DPA for (Σ*b^i)^ω: state j counts trailing b's; completing a
/// block of i b's emits priority 0, everything else priority 1.
inline Automaton reference_l_i(std::size_t i) {
    TransitionSystem ts(Alphabet::letters(2), i);
    ParityCondition c{std::vector<Priority>(2 * i, 1)};
    for (StateId q = 0; q < i; ++q) {
        ts.set_transition(q, 0, 0);
        const StateId next = q + 1 == i ? 0 : q + 1;
        ts.set_transition(q, 1, next);
        if (q + 1 == i) c.priority[ts.index({q, 1})] = 0;
    }
    return {ts, c};
}

/// The sample S^i for L_i: b^ω, (b^i a b^{i-1} a … b a)^ω, (b^j a b^k)^ω for
/// j + k = i as positives and (b^j a)^ω for j < i as negatives.
inline Sample l_i_sample(std::size_t i) {
    const auto ab = Alphabet::letters(2);
    auto bs = [](std::size_t n) { return std::string(n, 'b'); };
    std::vector<OmegaWord> pos{W(ab, "(b)")};
    std::string staircase;
    for (std::size_t j = i; j >= 1; --j) staircase += bs(j) + "a";
    pos.push_back(W(ab, "(" + staircase + ")"));
    for (std::size_t j = 0; j <= i; ++j) pos.push_back(W(ab, "(" + bs(j) + "a" + bs(i - j) + ")"));
    std::vector<OmegaWord> neg;
    for (std::size_t j = 0; j < i; ++j) neg.push_back(W(ab, "(" + bs(j) + "a)"));
    return make_sample(ab, pos, neg);
}

/// Membership in L∨: the cyclic period contains aaaa or bbbb.
inline bool in_l_or(const OmegaWord& w) {
    const auto& v = w.period;
    for (std::size_t start = 0; start < v.size(); ++start) {
        bool same = true;
        for (std::size_t k = 1; k < 4 && same; ++k) same = v[(start + k) % v.size()] == v[start];
        if (same) return true;
    }
    return false;
}

// ------------------------------------------------------------ generators

using Rng = std::mt19937_64;

inline std::size_t uniform(Rng& rng, std::size_t lo, std::size_t hi) {
    return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

inline Word random_finite(Rng& rng, std::size_t k, std::size_t len) {
    Word w(len);
    for (auto& s : w) s = static_cast<Symbol>(uniform(rng, 0, k - 1));
    return w;
}

inline OmegaWord random_word(Rng& rng, std::size_t k, std::size_t max_spoke, std::size_t max_period) {
    return OmegaWord{random_finite(rng, k, uniform(rng, 0, max_spoke)),
                     random_finite(rng, k, uniform(rng, 1, max_period))};
}

/// Random disjoint sample with at most `max_words` words.
inline Sample random_sample(Rng& rng, const Alphabet& ab, std::size_t max_words, std::size_t max_spoke,
                            std::size_t max_period) {
    const std::size_t n = uniform(rng, 1, max_words);
    std::vector<OmegaWord> pos, neg;
    std::vector<OmegaWord> seen;
    for (std::size_t i = 0; i < n; ++i) {
        const auto w = normalize(random_word(rng, ab.size(), max_spoke, max_period));
        if (std::find(seen.begin(), seen.end(), w) != seen.end()) continue;
        seen.push_back(w);
        (uniform(rng, 0, 1) ? pos : neg).push_back(w);
    }
    return make_sample(ab, pos, neg);
}

/// Random transition system, each transition defined with probability
/// `density`, targets uniform.
inline TransitionSystem random_ts(Rng& rng, std::size_t states, std::size_t k, double density = 1.0) {
    TransitionSystem ts(Alphabet::letters(k), states);
    std::bernoulli_distribution defined(density);
    for (StateId q = 0; q < states; ++q)
        for (Symbol s = 0; s < k; ++s)
            if (defined(rng)) ts.set_transition(q, s, static_cast<StateId>(uniform(rng, 0, states - 1)));
    return ts;
}

inline TransitionSet random_subset(Rng& rng, const TransitionSet& universe, double p = 0.5) {
    std::bernoulli_distribution in(p);
    TransitionSet s(universe.size());
    for (std::size_t t = 0; t < universe.size(); ++t)
        if (universe.test(t) && in(rng)) s.set(t);
    return s;
}

inline AcceptanceCondition random_condition(Rng& rng, const TransitionSystem& ts, AcceptanceType type) {
    const TransitionSet u = ts.defined_transitions();
    switch (type) {
        case AcceptanceType::Buchi:
            return BuchiCondition{random_subset(rng, u)};
        case AcceptanceType::GenBuchi: {
            GenBuchiCondition g;
            for (std::size_t i = uniform(rng, 1, 3); i > 0; --i) g.components.push_back(random_subset(rng, u, 0.6));
            return g;
        }
        case AcceptanceType::Parity: {
            ParityCondition p{std::vector<Priority>(ts.universe_size(), kNoPriority)};
            const std::size_t top = uniform(rng, 1, 3);
            for (std::size_t t = 0; t < ts.universe_size(); ++t)
                if (u.test(t)) p.priority[t] = static_cast<Priority>(uniform(rng, 0, top));
            return p;
        }
        case AcceptanceType::Rabin: {
            RabinCondition r;
            for (std::size_t i = uniform(rng, 1, 2); i > 0; --i)
                r.pairs.push_back({random_subset(rng, u, 0.3), random_subset(rng, u, 0.5)});
            return r;
        }
        case AcceptanceType::Muller:
            break;
    }
    return MullerCondition{};
}

/// All states reachable from the initial one.
inline bool all_reachable(const TransitionSystem& ts) {
    const auto acc = access_words(ts);
    return std::all_of(acc.begin(), acc.end(), [](const auto& w) { return w.has_value(); });
}

/// Random complete automaton whose states have pairwise distinct residuals.
inline Automaton random_irc_automaton(Rng& rng, AcceptanceType type, std::size_t max_states = 5, std::size_t k = 2) {
    for (;;) {
        const std::size_t n = uniform(rng, 1, max_states);
        TransitionSystem ts = random_ts(rng, n, k);
        if (!all_reachable(ts)) continue;
        Automaton a{ts, random_condition(rng, ts, type)};
        bool irc = true;
        for (StateId p = 0; p < n && irc; ++p)
            for (StateId q = p + 1; q < n && irc; ++q)
                if (!separating_word(a, p, q)) irc = false;
        if (irc) return a;
    }
}

inline const std::vector<AcceptanceType>& learnable_types() {
    static const std::vector<AcceptanceType> types{AcceptanceType::Buchi, AcceptanceType::GenBuchi,
                                                   AcceptanceType::Parity, AcceptanceType::Rabin};
    return types;
}

/// Every positive set satisfies c and no negative one does.
inline bool naive_consistent(const AcceptanceCondition& c, const PartialCondition& h) {
    for (const auto& x : h.positive)
        if (!naive_satisfies(x, c)) return false;
    for (const auto& x : h.negative)
        if (naive_satisfies(x, c)) return false;
    return true;
}

inline bool consistent_with(const Automaton& a, const Sample& s) {
    for (const auto& w : s.positive)
        if (!naive_accepts(a, w)) return false;
    for (const auto& w : s.negative)
        if (naive_accepts(a, w)) return false;
    return true;
}

inline Sample non_termination_sample() { return make_sample(Alphabet::letters(2), {W("(baa)")}, {W("(ab)"), W("(ba)"), W("(babaa)")}); }

/// All words with period length ≤ v and empty spoke, labeled by L∨.
inline Sample l_or_sample(std::size_t v) {
    std::vector<OmegaWord> pos, neg;
    std::set<OmegaWord> seen;
    for (std::size_t len = 1; len <= v; ++len)
        for (std::size_t mask = 0; mask < (std::size_t{1} << len); ++mask) {
            OmegaWord w;
            for (std::size_t i = 0; i < len; ++i) w.period.push_back(static_cast<Symbol>((mask >> i) & 1u));
            w = normalize(w);
            if (seen.insert(w).second) (in_l_or(w) ? pos : neg).push_back(w);
        }
    return make_sample(Alphabet::letters(2), pos, neg);
}

/// Every state but the last has one self-loop and one edge to the next state;
/// the last has at most a self-loop.
inline bool chain_with_self_loops(const TransitionSystem& ts) {
    StateId q = ts.initial();
    std::vector<bool> seen(ts.num_states(), false);
    for (std::size_t i = 0; i < ts.num_states(); ++i) {
        if (seen[q]) return false;
        seen[q] = true;
        const StateId n0 = ts.successor(q, 0), n1 = ts.successor(q, 1);
        const int loops = (n0 == q) + (n1 == q);
        if (i + 1 == ts.num_states())
            return loops <= 1 && (n0 == q || n0 == kNoState) && (n1 == q || n1 == kNoState);
        if (loops != 1) return false;
        q = n0 == q ? n1 : n0;
        if (q == kNoState) return false;
    }
    return true;
}

/// Size of the last chain in the longest chain-shaped prefix of a trace.
inline std::size_t chain_prefix_states(const std::vector<TraceStep>& trace) {
    std::size_t states = 1;
    for (const auto& step : trace) {
        if (!chain_with_self_loops(step.ts)) break;
        states = step.ts.num_states();
    }
    return states;
}

}  // namespace omega::test
