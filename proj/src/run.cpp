#include "omega/run.hpp"

#include <algorithm>

#include "omega/error.hpp"

namespace omega {

namespace {

void check_symbols(const TransitionSystem& ts, const OmegaWord& w) {
    if (w.period.empty()) throw Error(ErrorKind::PreconditionViolated, "period must not be empty");
    for (Symbol a : w.spoke)
        if (a >= ts.num_symbols()) throw Error(ErrorKind::SymbolNotInAlphabet, "word symbol not in alphabet");
    for (Symbol a : w.period)
        if (a >= ts.num_symbols()) throw Error(ErrorKind::SymbolNotInAlphabet, "word symbol not in alphabet");
}

}  // namespace

RunResult run(const TransitionSystem& ts, const OmegaWord& w) { return run_from(ts, ts.initial(), w); }

RunResult run_from(const TransitionSystem& ts, StateId start, const OmegaWord& w) {
    check_symbols(ts, w);
    std::vector<Transition> steps;
    StateId q = start;
    for (std::size_t i = 0; i < w.spoke.size(); ++i) {
        const Symbol a = w.spoke[i];
        const StateId next = ts.successor(q, a);
        if (next == kNoState) {
            Word prefix(w.spoke.begin(), w.spoke.begin() + static_cast<std::ptrdiff_t>(i) + 1);
            OmegaWord exit{Word(w.spoke.begin() + static_cast<std::ptrdiff_t>(i), w.spoke.end()), w.period};
            return EscapingRun{q, std::move(prefix), normalize(std::move(exit))};
        }
        steps.push_back({q, a});
        q = next;
    }
    const std::size_t n = w.period.size();
    // first[q·n + k] = position in `steps` where (q, offset k) was first seen
    std::vector<std::size_t> first(ts.num_states() * n, static_cast<std::size_t>(-1));
    std::size_t k = 0;
    std::size_t rounds = 0;
    while (true) {
        const std::size_t key = static_cast<std::size_t>(q) * n + k;
        if (first[key] != static_cast<std::size_t>(-1)) {
            InfiniteRun result{{}, ts.empty_set()};
            const auto loop_start = static_cast<std::ptrdiff_t>(first[key]);
            result.prefix.assign(steps.begin(), steps.begin() + loop_start);
            for (auto it = steps.begin() + loop_start; it != steps.end(); ++it) result.infinity_set.set(ts.index(*it));
            return result;
        }
        first[key] = steps.size();
        const Symbol a = w.period[k];
        const StateId next = ts.successor(q, a);
        if (next == kNoState) {
            Word prefix = w.spoke;
            for (std::size_t r = 0; r < rounds; ++r) prefix.insert(prefix.end(), w.period.begin(), w.period.end());
            prefix.insert(prefix.end(), w.period.begin(), w.period.begin() + static_cast<std::ptrdiff_t>(k) + 1);
            OmegaWord exit{Word(w.period.begin() + static_cast<std::ptrdiff_t>(k), w.period.end()), w.period};
            return EscapingRun{q, std::move(prefix), normalize(std::move(exit))};
        }
        steps.push_back({q, a});
        q = next;
        if (++k == n) {
            k = 0;
            ++rounds;
        }
    }
}

std::vector<Escape> escapes(std::span<const OmegaWord> positives, const TransitionSystem& ts) {
    std::vector<Escape> out;
    for (const auto& w : positives) {
        auto r = run(ts, w);
        if (auto* e = std::get_if<EscapingRun>(&r)) out.push_back({w, std::move(e->escape_prefix)});
    }
    std::stable_sort(out.begin(), out.end(),
                     [](const Escape& a, const Escape& b) { return length_lex_less(a.escape_prefix, b.escape_prefix); });
    return out;
}

bool indistinguishable(const TransitionSystem& ts, const OmegaWord& w1, const OmegaWord& w2) {
    auto r1 = run(ts, w1);
    auto r2 = run(ts, w2);
    const auto* e1 = std::get_if<EscapingRun>(&r1);
    const auto* e2 = std::get_if<EscapingRun>(&r2);
    return e1 && e2 && e1->state == e2->state && omega_equal(e1->exit_string, e2->exit_string);
}

}  // namespace omega
