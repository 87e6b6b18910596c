#pragma once

#include <optional>
#include <vector>

#include "omega/transition_system.hpp"

namespace omega {

/// Non-trivial SCCs of the subsystem restricted to `restrict`, each given as
/// its set of internal transitions; sorted by least member.
std::vector<TransitionSet> scc_transition_sets(const TransitionSystem& ts, const TransitionSet& restrict);

/// Length-lexicographically least access word per state (nullopt if unreachable).
std::vector<std::optional<Word>> access_words(const TransitionSystem& ts);

/// Transitions whose source is reachable from the initial state.
TransitionSet reachable_transitions(const TransitionSystem& ts);

/// States touched by a transition set (as sources or targets).
std::vector<bool> states_of(const TransitionSystem& ts, const TransitionSet& set);

/// Non-empty and strongly connected within its own transitions.
bool is_strongly_connected(const TransitionSystem& ts, const TransitionSet& set);

/// Least path (length-lex) from `from` to `to` using only `allowed`
/// transitions; nullopt if none exists.
std::optional<Word> shortest_path(const TransitionSystem& ts, StateId from, StateId to, const TransitionSet& allowed);

/// u·v^ω whose run has infinity set exactly `component`; u extends `access`
/// minimally to enter the component. Throws NotStronglyConnected, Unreachable.
OmegaWord word_visiting_all(const TransitionSystem& ts, const TransitionSet& component, const Word& access);

}  // namespace omega
