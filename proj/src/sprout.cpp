#include "omega/sprout.hpp"

#include <algorithm>
#include <exception>
#include <map>
#include <numeric>
#include <set>

#include "omega/error.hpp"
#include "omega/run.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace omega {

std::size_t threshold(const Sample& s) {
    if (s.size() == 0) throw Error(ErrorKind::EmptySample, "threshold of an empty sample is undefined");
    std::size_t spoke = 0;
    std::size_t period = 0;
    for (const auto* side : {&s.positive, &s.negative}) {
        for (const auto& w : *side) {
            spoke = std::max(spoke, w.spoke.size());
            period = std::max(period, w.period.size());
        }
    }
    return spoke + period * period + 1;
}

namespace {

std::string state_label(const Alphabet& alphabet, const Word& name) {
    return name.empty() ? std::string("ε") : alphabet.format(name);
}

TransitionSystem with_transition(const TransitionSystem& ts, StateId from, Symbol a, StateId to) {
    TransitionSystem next = ts;
    next.set_transition(from, a, to);
    return next;
}

/// Index of the first consistent candidate, or candidates.size().
std::size_t first_consistent(const TransitionSystem& ts, StateId from, Symbol a, const std::vector<StateId>& candidates,
                             const Sample& s, AcceptanceType type, bool parallel) {
    const std::size_t n = candidates.size();
#ifdef _OPENMP
    if (parallel && n > 1 && omp_get_max_threads() > 1 && !omp_in_parallel()) {
        const auto chunk = static_cast<std::size_t>(omp_get_max_threads());
        for (std::size_t begin = 0; begin < n; begin += chunk) {
            const std::size_t end = std::min(n, begin + chunk);
            std::vector<char> ok(end - begin, 0);
            std::exception_ptr failure;
#pragma omp parallel for schedule(dynamic, 1)
            for (std::ptrdiff_t i = static_cast<std::ptrdiff_t>(begin); i < static_cast<std::ptrdiff_t>(end); ++i) {
                try {
                    const auto idx = static_cast<std::size_t>(i);
                    ok[idx - begin] = ts_consistent(with_transition(ts, from, a, candidates[idx]), s, type) ? 1 : 0;
                } catch (...) {
#pragma omp critical(sprout_failure)
                    if (!failure) failure = std::current_exception();
                }
            }
            if (failure) std::rethrow_exception(failure);
            for (std::size_t i = begin; i < end; ++i)
                if (ok[i - begin]) return i;
        }
        return n;
    }
#else
    (void)parallel;
#endif
    for (std::size_t i = 0; i < n; ++i)
        if (ts_consistent(with_transition(ts, from, a, candidates[i]), s, type)) return i;
    return n;
}

}  // namespace

LearnResult learn(const Sample& s, const LearnerConfig& cfg) {
    if (s.alphabet.empty()) throw Error(ErrorKind::EmptyAlphabet, "sample has no alphabet");
    if (cfg.threshold_override && *cfg.threshold_override < 1)
        throw Error(ErrorKind::InvalidArgument, "threshold override must be at least 1");
    if (cfg.type == AcceptanceType::Muller) throw Error(ErrorKind::UnsupportedType, "Sprout targets Büchi, generalized Büchi, parity or Rabin");

    LearnResult result;
    result.threshold = s.size() == 0 ? 0 : (cfg.threshold_override ? *cfg.threshold_override : threshold(s));

    TransitionSystem ts(s.alphabet, 1, 0);
    std::vector<Word> names{Word{}};
    ts.set_label(0, state_label(s.alphabet, names[0]));

    if (auto conflict = induced_partial_condition(ts, s); std::holds_alternative<ConflictReport>(conflict))
        throw Error(ErrorKind::DisjointnessViolation, "the sample contains a word on both sides");

    while (true) {
        const auto pending = escapes(s.positive, ts);
        if (pending.empty()) break;
        const Word& ua = pending.front().escape_prefix;
        const Word u(ua.begin(), ua.end() - 1);
        const Symbol a = ua.back();
        if (u.size() > result.threshold) {
            result.threshold_hit = true;
            result.before_extend = ts;
            ts = extend(ts, s);
            break;
        }
        ++result.iterations;
        const StateId from = ts.run_finite(ts.initial(), u);

        std::vector<StateId> order(ts.num_states());
        std::iota(order.begin(), order.end(), StateId{0});
        std::sort(order.begin(), order.end(),
                  [&](StateId p, StateId q) { return length_lex_less(names[p], names[q]); });

        const std::size_t chosen = first_consistent(ts, from, a, order, s, cfg.type, cfg.parallel);
        TraceStep step;
        step.escape_prefix = ua;
        step.inserted = {from, a};
        if (chosen < order.size()) {
            ts.set_transition(from, a, order[chosen]);
        } else {
            Word name = names[from];
            name.push_back(a);
            const StateId q = ts.add_state(state_label(s.alphabet, name));
            names.push_back(std::move(name));
            ts.set_transition(from, a, q);
            step.new_state = true;
        }
        if (cfg.trace) {
            step.ts = ts;
            result.trace.push_back(std::move(step));
        }
    }
    result.automaton = build_aut(ts, s, cfg.type);
    return result;
}

Automaton sprout(const Sample& s, const LearnerConfig& cfg) {
    LearnerConfig quiet = cfg;
    quiet.trace = false;
    return learn(s, quiet).automaton;
}

TransitionSystem extend(const TransitionSystem& ts, const Sample& s) {
    // exit strings of escaping positives, grouped by escape state
    std::map<StateId, std::set<OmegaWord>> exits;
    for (const auto& w : s.positive) {
        auto r = run(ts, w);
        if (auto* e = std::get_if<EscapingRun>(&r)) {
            if (!e->exit_string.spoke.empty())
                throw Error(ErrorKind::PreconditionViolated,
                            "exit string " + format_omega_word(ts.alphabet(), e->exit_string) + " is not purely periodic");
            exits[e->state].insert(e->exit_string);
        }
    }

    TransitionSystem out = ts;
    const std::size_t k = ts.num_symbols();
    for (const auto& [q, words] : exits) {
        // Gadget nodes are residual word sets; q itself is the entry and is never re-entered.
        std::map<std::set<OmegaWord>, StateId> nodes;
        std::vector<std::pair<StateId, std::set<OmegaWord>>> work{{q, words}};
        std::map<StateId, Word> paths{{q, Word{}}};
        while (!work.empty()) {
            auto [node, set] = std::move(work.back());
            work.pop_back();
            for (Symbol a = 0; a < k; ++a) {
                if (node == q && out.defined(q, a)) continue;
                std::set<OmegaWord> residual;
                for (const auto& w : set) {
                    if (w.at(0) != a) continue;
                    OmegaWord rest{{}, w.period};
                    std::rotate(rest.period.begin(), rest.period.begin() + 1, rest.period.end());
                    residual.insert(normalize(std::move(rest)));
                }
                if (residual.empty()) continue;
                auto it = nodes.find(residual);
                if (it == nodes.end()) {
                    Word path = paths[node];
                    path.push_back(a);
                    const std::string label = ts.label(q) + "~" + ts.alphabet().format(path);
                    const StateId fresh = out.add_state(label);
                    paths[fresh] = path;
                    it = nodes.emplace(residual, fresh).first;
                    work.emplace_back(fresh, residual);
                }
                out.set_transition(node, a, it->second);
            }
        }
    }
    return out;
}

Automaton build_aut(const TransitionSystem& ts, const Sample& s, AcceptanceType type) {
    auto induced = induced_partial_condition(ts, s);
    if (std::holds_alternative<ConflictReport>(induced))
        throw Error(ErrorKind::InternalInconsistency, "transition system conflicts with the sample");
    auto condition = solve(std::get<PartialCondition>(induced), ts.defined_transitions(), type);
    if (!condition)
        throw Error(ErrorKind::InternalInconsistency,
                    "no " + std::string(to_string(type)) + " condition is consistent with the sample");
    return Automaton{ts, std::move(*condition)};
}

}  // namespace omega
