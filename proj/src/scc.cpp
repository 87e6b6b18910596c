#include "omega/scc.hpp"

#include <algorithm>
#include <deque>
#include <functional>

#include "omega/error.hpp"

namespace omega {

std::vector<TransitionSet> scc_transition_sets(const TransitionSystem& ts, const TransitionSet& restrict) {
    const std::size_t n = ts.num_states();
    const std::size_t k = ts.num_symbols();
    std::vector<int> index(n, -1), low(n, 0), comp(n, -1);
    std::vector<bool> on_stack(n, false);
    std::vector<StateId> stack;
    int counter = 0;
    int components = 0;

    // Iterative Tarjan; frames hold (state, next symbol to explore).
    std::vector<std::pair<StateId, Symbol>> frames;
    for (StateId root = 0; root < n; ++root) {
        if (index[root] != -1) continue;
        frames.push_back({root, 0});
        index[root] = low[root] = counter++;
        stack.push_back(root);
        on_stack[root] = true;
        while (!frames.empty()) {
            auto& [q, a] = frames.back();
            if (a < k) {
                const Symbol sym = a++;
                const std::size_t t = ts.index({q, sym});
                if (!restrict.test(t)) continue;
                const StateId p = ts.target(t);
                if (p == kNoState) continue;
                if (index[p] == -1) {
                    index[p] = low[p] = counter++;
                    stack.push_back(p);
                    on_stack[p] = true;
                    frames.push_back({p, 0});
                } else if (on_stack[p]) {
                    low[q] = std::min(low[q], index[p]);
                }
                continue;
            }
            const StateId done = q;
            frames.pop_back();
            if (!frames.empty()) low[frames.back().first] = std::min(low[frames.back().first], low[done]);
            if (low[done] == index[done]) {
                StateId p;
                do {
                    p = stack.back();
                    stack.pop_back();
                    on_stack[p] = false;
                    comp[p] = components;
                } while (p != done);
                ++components;
            }
        }
    }

    std::vector<TransitionSet> sets(static_cast<std::size_t>(components), ts.empty_set());
    for (auto t = restrict.find_first(); t != TransitionSet::npos; t = restrict.find_next(t)) {
        const StateId p = ts.target(t);
        if (p == kNoState) continue;
        const StateId q = ts.transition(t).state;
        if (comp[q] == comp[p]) sets[static_cast<std::size_t>(comp[q])].set(t);
    }
    std::vector<TransitionSet> out;
    for (auto& s : sets)
        if (s.any()) out.push_back(std::move(s));
    std::sort(out.begin(), out.end(),
              [](const TransitionSet& a, const TransitionSet& b) { return a.find_first() < b.find_first(); });
    return out;
}

std::vector<std::optional<Word>> access_words(const TransitionSystem& ts) {
    std::vector<std::optional<Word>> words(ts.num_states());
    std::deque<StateId> queue{ts.initial()};
    words[ts.initial()] = Word{};
    while (!queue.empty()) {
        const StateId q = queue.front();
        queue.pop_front();
        for (Symbol a = 0; a < ts.num_symbols(); ++a) {
            const StateId p = ts.successor(q, a);
            if (p == kNoState || words[p]) continue;
            Word w = *words[q];
            w.push_back(a);
            words[p] = std::move(w);
            queue.push_back(p);
        }
    }
    return words;
}

TransitionSet reachable_transitions(const TransitionSystem& ts) {
    const auto words = access_words(ts);
    TransitionSet set = ts.empty_set();
    for (StateId q = 0; q < ts.num_states(); ++q) {
        if (!words[q]) continue;
        for (Symbol a = 0; a < ts.num_symbols(); ++a)
            if (ts.defined(q, a)) set.set(ts.index({q, a}));
    }
    return set;
}

std::vector<bool> states_of(const TransitionSystem& ts, const TransitionSet& set) {
    std::vector<bool> in(ts.num_states(), false);
    for (auto t = set.find_first(); t != TransitionSet::npos; t = set.find_next(t)) {
        in[ts.transition(t).state] = true;
        if (ts.target(t) != kNoState) in[ts.target(t)] = true;
    }
    return in;
}

bool is_strongly_connected(const TransitionSystem& ts, const TransitionSet& set) {
    if (set.none()) return false;
    for (auto t = set.find_first(); t != TransitionSet::npos; t = set.find_next(t))
        if (ts.target(t) == kNoState) return false;
    auto sccs = scc_transition_sets(ts, set);
    return sccs.size() == 1 && sccs.front() == set;
}

std::optional<Word> shortest_path(const TransitionSystem& ts, StateId from, StateId to, const TransitionSet& allowed) {
    if (from == to) return Word{};
    std::vector<std::pair<StateId, Symbol>> parent(ts.num_states(), {kNoState, 0});
    std::vector<bool> seen(ts.num_states(), false);
    std::deque<StateId> queue{from};
    seen[from] = true;
    while (!queue.empty()) {
        const StateId q = queue.front();
        queue.pop_front();
        for (Symbol a = 0; a < ts.num_symbols(); ++a) {
            const std::size_t t = ts.index({q, a});
            if (!allowed.test(t)) continue;
            const StateId p = ts.target(t);
            if (p == kNoState || seen[p]) continue;
            seen[p] = true;
            parent[p] = {q, a};
            if (p == to) {
                Word w;
                for (StateId s = to; s != from; s = parent[s].first) w.push_back(parent[s].second);
                std::reverse(w.begin(), w.end());
                return w;
            }
            queue.push_back(p);
        }
    }
    return std::nullopt;
}

OmegaWord word_visiting_all(const TransitionSystem& ts, const TransitionSet& component, const Word& access) {
    if (component.size() != ts.universe_size() || !is_strongly_connected(ts, component))
        throw Error(ErrorKind::NotStronglyConnected, "component is not a strongly connected transition set");
    const StateId reached = ts.run_finite(ts.initial(), access);
    if (reached == kNoState) throw Error(ErrorKind::Unreachable, "access word leaves the transition system");
    const auto inside = states_of(ts, component);

    Word spoke = access;
    StateId start = reached;
    if (!inside[start]) {
        // extend minimally: nearest component state, ties length-lexicographic
        std::optional<Word> best;
        StateId best_state = kNoState;
        const TransitionSet all = ts.defined_transitions();
        for (StateId q = 0; q < ts.num_states(); ++q) {
            if (!inside[q]) continue;
            auto path = shortest_path(ts, start, q, all);
            if (path && (!best || length_lex_less(*path, *best))) {
                best = std::move(path);
                best_state = q;
            }
        }
        if (!best) throw Error(ErrorKind::Unreachable, "component not reachable from the access word");
        spoke.insert(spoke.end(), best->begin(), best->end());
        start = best_state;
    }

    Word tour;
    TransitionSet visited(ts.universe_size());
    StateId current = start;
    for (auto t = component.find_first(); t != TransitionSet::npos; t = component.find_next(t)) {
        if (visited.test(t)) continue;
        const Transition tr = ts.transition(t);
        auto path = shortest_path(ts, current, tr.state, component);
        StateId q = current;
        for (Symbol a : *path) {
            visited.set(ts.index({q, a}));
            q = ts.successor(q, a);
        }
        tour.insert(tour.end(), path->begin(), path->end());
        tour.push_back(tr.symbol);
        visited.set(t);
        current = ts.target(t);
    }
    auto back = shortest_path(ts, current, start, component);
    tour.insert(tour.end(), back->begin(), back->end());
    return normalize(OmegaWord{std::move(spoke), std::move(tour)});
}

}  // namespace omega
