#pragma once

#include <span>
#include <variant>
#include <vector>

#include "omega/transition_system.hpp"

namespace omega {

struct InfiniteRun {
    std::vector<Transition> prefix;  ///< transient part before the lasso
    TransitionSet infinity_set;
};

struct EscapingRun {
    StateId state;         ///< last state reached
    Word escape_prefix;    ///< ua, where the a-step from `state` is undefined
    OmegaWord exit_string; ///< av, normalized
};

using RunResult = std::variant<InfiniteRun, EscapingRun>;

/// Run of `ts` from its initial state. Throws SymbolNotInAlphabet.
RunResult run(const TransitionSystem& ts, const OmegaWord& w);
RunResult run_from(const TransitionSystem& ts, StateId start, const OmegaWord& w);

struct Escape {
    OmegaWord word;
    Word escape_prefix;
};

/// Escaping positives, ordered length-lexicographically by escape prefix.
std::vector<Escape> escapes(std::span<const OmegaWord> positives, const TransitionSystem& ts);

/// Both runs escape from the same state with ω-equal exit strings.
bool indistinguishable(const TransitionSystem& ts, const OmegaWord& w1, const OmegaWord& w2);

}  // namespace omega
