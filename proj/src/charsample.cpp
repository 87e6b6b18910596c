#include "omega/charsample.hpp"

#include <algorithm>
#include <deque>
#include <map>

#include "clauses.hpp"
#include "omega/error.hpp"
#include "omega/oracle.hpp"
#include "omega/scc.hpp"

namespace omega {

RepresentativeTable minimal_representatives(const Automaton& a) {
    const auto access = access_words(a.ts);
    RepresentativeTable table;
    for (StateId q = 0; q < a.ts.num_states(); ++q) {
        if (!access[q])
            throw Error(ErrorKind::UnreachableState, "state " + a.ts.label(q) + " is not reachable");
        table.reps.emplace_back(q, *access[q]);
    }
    std::sort(table.reps.begin(), table.reps.end(),
              [](const auto& x, const auto& y) { return length_lex_less(x.second, y.second); });
    for (const auto& [q, w] : table.reps) {
        for (Symbol s = 0; s < a.ts.num_symbols(); ++s) {
            if (!a.ts.defined(q, s)) continue;
            Word v = w;
            v.push_back(s);
            table.trans_reps.emplace_back(q, s, std::move(v));
        }
    }
    std::sort(table.trans_reps.begin(), table.trans_reps.end(),
              [](const auto& x, const auto& y) { return length_lex_less(std::get<2>(x), std::get<2>(y)); });
    return table;
}

std::optional<OmegaWord> separating_word(const Automaton& a, StateId p, StateId q) {
    if (p == q) return std::nullopt;
    return equivalence(reroot(a, p), reroot(a, q));
}

OmegaWord prepend(const Word& x, const OmegaWord& w) {
    Word spoke = x;
    spoke.insert(spoke.end(), w.spoke.begin(), w.spoke.end());
    return normalize(OmegaWord{std::move(spoke), w.period});
}

namespace {

std::vector<std::size_t> distances_from(const TransitionSystem& ts, StateId q) {
    std::vector<std::size_t> dist(ts.num_states(), static_cast<std::size_t>(-1));
    std::deque<StateId> queue{q};
    dist[q] = 0;
    while (!queue.empty()) {
        const StateId x = queue.front();
        queue.pop_front();
        for (Symbol s = 0; s < ts.num_symbols(); ++s) {
            const StateId y = ts.successor(x, s);
            if (y != kNoState && dist[y] == static_cast<std::size_t>(-1)) {
                dist[y] = dist[x] + 1;
                queue.push_back(y);
            }
        }
    }
    return dist;
}

/// Transitions whose source is reachable from q.
TransitionSet reachable_from(const TransitionSystem& ts, StateId q) {
    const auto dist = distances_from(ts, q);
    TransitionSet set = ts.empty_set();
    for (StateId x = 0; x < ts.num_states(); ++x) {
        if (dist[x] == static_cast<std::size_t>(-1)) continue;
        for (Symbol s = 0; s < ts.num_symbols(); ++s)
            if (ts.defined(x, s)) set.set(ts.index({x, s}));
    }
    return set;
}

/// Word through the access word of the component's least-accessed state.
OmegaWord loop_word(const TransitionSystem& ts, const std::vector<std::optional<Word>>& access,
                    const TransitionSet& loop) {
    const auto inside = states_of(ts, loop);
    std::optional<Word> best;
    for (StateId q = 0; q < ts.num_states(); ++q)
        if (inside[q] && access[q] && (!best || length_lex_less(*access[q], *best))) best = access[q];
    if (!best) throw Error(ErrorKind::Unreachable, "loop is not reachable");
    return word_visiting_all(ts, loop, *best);
}

class SampleBuilder {
public:
    explicit SampleBuilder(const Automaton& a) : a_(a) {}

    void add(const OmegaWord& w) {
        auto n = normalize(w);
        (accepts(a_, n) ? pos_ : neg_).push_back(std::move(n));
    }

    bool has_positive_with_prefix(const Word& v) const {
        return std::any_of(pos_.begin(), pos_.end(), [&](const OmegaWord& w) {
            for (std::size_t i = 0; i < v.size(); ++i)
                if (w.at(i) != v[i]) return false;
            return true;
        });
    }

    Sample build() { return make_sample(a_.ts.alphabet(), std::move(pos_), std::move(neg_)); }

private:
    const Automaton& a_;
    std::vector<OmegaWord> pos_, neg_;
};

}  // namespace

std::optional<OmegaWord> accepting_continuation(const Automaton& a, StateId q) {
    const auto dist = distances_from(a.ts, q);
    const TransitionSet region = reachable_from(a.ts, q);
    auto sccs = scc_transition_sets(a.ts, region);
    auto distance = [&](const TransitionSet& s) {
        std::size_t d = static_cast<std::size_t>(-1);
        for (auto t = s.find_first(); t != TransitionSet::npos; t = s.find_next(t))
            d = std::min(d, dist[a.ts.transition(t).state]);
        return d;
    };
    std::stable_sort(sccs.begin(), sccs.end(),
                     [&](const TransitionSet& x, const TransitionSet& y) { return distance(x) < distance(y); });
    const auto identity = [](const TransitionSet& s) { return s; };
    const auto accepting = detail::clauses(a.condition, a.ts.defined_transitions(), identity, a.ts.empty_set(), true);
    const Automaton from_q = reroot(a, q);
    for (const auto& s : sccs) {
        for (const auto& c : accepting) {
            if (auto loop = detail::find_loop(a.ts, s - c.fin, c))
                return word_visiting_all(from_q.ts, *loop, Word{});
        }
    }
    return std::nullopt;
}

Sample congruence_sample(const Automaton& a) {
    const auto table = minimal_representatives(a);
    SampleBuilder builder(a);

    std::map<std::pair<StateId, StateId>, OmegaWord> separators;
    auto separator = [&](StateId p, StateId q) -> const OmegaWord& {
        const auto key = std::minmax(p, q);
        auto it = separators.find(key);
        if (it == separators.end()) {
            auto w = separating_word(a, key.first, key.second);
            if (!w)
                throw Error(ErrorKind::NotIRC,
                            "states " + a.ts.label(p) + " and " + a.ts.label(q) + " have the same residual language");
            it = separators.emplace(key, std::move(*w)).first;
        }
        return it->second;
    };

    for (const auto& [q, u] : table.reps) {
        for (const auto& [p, s, v] : table.trans_reps) {
            const StateId target = a.ts.successor(p, s);
            if (target == q) continue;
            const OmegaWord& w = separator(q, target);
            builder.add(prepend(u, w));
            builder.add(prepend(v, w));
        }
    }
    for (const auto& [p, s, v] : table.trans_reps) {
        if (builder.has_positive_with_prefix(v)) continue;
        if (auto cont = accepting_continuation(a, a.ts.successor(p, s))) builder.add(prepend(v, *cont));
    }
    return builder.build();
}

namespace {

void sign_and_add(SampleBuilder& builder, const TransitionSystem& ts, const std::vector<std::optional<Word>>& access,
                  const TransitionSet& loop) {
    builder.add(loop_word(ts, access, loop));
}

void peel_parity(SampleBuilder& builder, const TransitionSystem& ts, const std::vector<std::optional<Word>>& access,
                 const ParityCondition& kappa, const TransitionSet& region) {
    for (const auto& s : scc_transition_sets(ts, region)) {
        sign_and_add(builder, ts, access, s);
        Priority least = kNoPriority;
        for (auto t = s.find_first(); t != TransitionSet::npos; t = s.find_next(t)) least = std::min(least, kappa.priority[t]);
        TransitionSet rest = s;
        for (auto t = s.find_first(); t != TransitionSet::npos; t = s.find_next(t))
            if (kappa.priority[t] == least) rest.reset(t);
        peel_parity(builder, ts, access, kappa, rest);
    }
}

}  // namespace

Sample condition_sample(const Automaton& a) {
    const auto& ts = a.ts;
    const auto access = access_words(ts);
    const TransitionSet reachable = reachable_transitions(ts);
    SampleBuilder builder(a);
    std::visit(
        [&](const auto& cond) {
            using T = std::decay_t<decltype(cond)>;
            if constexpr (std::is_same_v<T, BuchiCondition>) {
                for (const auto& s : scc_transition_sets(ts, reachable - cond.accepting))
                    sign_and_add(builder, ts, access, s);
            } else if constexpr (std::is_same_v<T, GenBuchiCondition>) {
                for (const auto& f : cond.components)
                    for (const auto& s : scc_transition_sets(ts, reachable - f)) sign_and_add(builder, ts, access, s);
                for (const auto& s : scc_transition_sets(ts, reachable))
                    if (satisfies(s, a.condition)) sign_and_add(builder, ts, access, s);
            } else if constexpr (std::is_same_v<T, ParityCondition>) {
                peel_parity(builder, ts, access, cond, reachable);
            } else if constexpr (std::is_same_v<T, RabinCondition>) {
                for (const auto& pair : cond.pairs) {
                    for (const auto& k : scc_transition_sets(ts, reachable - pair.fin)) {
                        sign_and_add(builder, ts, access, k);
                        TransitionSet removed = ts.empty_set();
                        for (const auto& other : cond.pairs)
                            if (!k.intersects(other.fin)) removed |= other.inf;
                        if (removed.none()) continue;
                        for (const auto& sub : scc_transition_sets(ts, k - removed)) sign_and_add(builder, ts, access, sub);
                    }
                }
            } else {
                throw Error(ErrorKind::UnsupportedType, "no condition sample for Muller conditions");
            }
        },
        a.condition);
    return builder.build();
}

Sample characteristic_sample(const Automaton& a) { return merge_samples(congruence_sample(a), condition_sample(a)); }

}  // namespace omega
