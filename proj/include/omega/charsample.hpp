#pragma once

#include <optional>
#include <tuple>
#include <vector>

#include "omega/condition.hpp"
#include "omega/sample.hpp"

namespace omega {

struct RepresentativeTable {
    std::vector<std::pair<StateId, Word>> reps;                  ///< state ↦ least access word
    std::vector<std::tuple<StateId, Symbol, Word>> trans_reps;  ///< source, symbol, ûσ
};

/// Least access words per state and the words ûσ. Throws UnreachableState.
RepresentativeTable minimal_representatives(const Automaton& a);

/// Word accepted from exactly one of p, q; nullopt if their residuals coincide.
std::optional<OmegaWord> separating_word(const Automaton& a, StateId p, StateId q);

/// An accepting loop reachable from q, nearest first, as a word read from q.
std::optional<OmegaWord> accepting_continuation(const Automaton& a, StateId q);

/// x · w.
OmegaWord prepend(const Word& x, const OmegaWord& w);

/// Words fixing the right congruence. Throws NotIRC.
Sample congruence_sample(const Automaton& a);

/// Words fixing the acceptance condition on a's transition system.
/// Throws UnsupportedType for Muller conditions.
Sample condition_sample(const Automaton& a);

/// Union of both parts.
Sample characteristic_sample(const Automaton& a);

}  // namespace omega
