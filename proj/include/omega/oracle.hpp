#pragma once

#include <optional>
#include <vector>

#include "omega/condition.hpp"

namespace omega {

enum class Exec { Serial, Parallel };

struct OracleLimits {
    std::size_t loop_universe = 16;            ///< enumerate_loops
    std::size_t buchi_parity_universe = 12;    ///< brute force, Büchi and parity
    std::size_t genbuchi_rabin_universe = 9;   ///< brute force, generalized Büchi and Rabin
    std::size_t product_transitions = 16;      ///< equivalence_exhaustive
};

struct LoopCatalog {
    std::vector<TransitionSet> loops;  ///< canonical order
    std::size_t guard = 0;
};

/// All reachable strongly connected transition subsets. Throws UniverseTooLarge.
LoopCatalog enumerate_loops(const TransitionSystem& ts, const OracleLimits& limits = {}, Exec exec = Exec::Parallel);

/// Exhaustive search for a condition of `type` over `universe` that is
/// consistent with h and has size ≤ k (unbounded when k is absent). Returns the
/// first hit in the fixed enumeration order.
std::optional<AcceptanceCondition> brute_force_consistency(const TransitionSet& universe, const PartialCondition& h,
                                                           AcceptanceType type, std::optional<std::size_t> k = {},
                                                           const OracleLimits& limits = {},
                                                           Exec exec = Exec::Parallel);

/// Same with universe = defined transitions of ts.
std::optional<AcceptanceCondition> brute_force_consistency(const TransitionSystem& ts, const PartialCondition& h,
                                                           AcceptanceType type, std::optional<std::size_t> k = {},
                                                           const OracleLimits& limits = {},
                                                           Exec exec = Exec::Parallel);

/// Adds a rejecting sink so that every transition is defined.
Automaton complete_with_sink(const Automaton& a);

/// Same automaton with another initial state.
Automaton reroot(const Automaton& a, StateId q);

/// A word accepted by exactly one of the automata, or nullopt if they are
/// equivalent. Products are searched symbolically per acceptance clause;
/// Muller conditions fall back to equivalence_exhaustive. Throws AlphabetMismatch.
std::optional<OmegaWord> equivalence(const Automaton& a1, const Automaton& a2);

/// Loop enumeration over the product. Throws UniverseTooLarge past
/// limits.product_transitions.
std::optional<OmegaWord> equivalence_exhaustive(const Automaton& a1, const Automaton& a2,
                                                const OracleLimits& limits = {});

/// Priority-pair search for two parity automata. Throws AlphabetMismatch,
/// UnsupportedType.
std::optional<OmegaWord> parity_equiv_fast(const Automaton& a1, const Automaton& a2);

}  // namespace omega
