#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "omega/condition.hpp"

namespace omega {

/// Strictly decreasing chain Z0 ⊋ Z1 ⊋ … with alternating classification bits.
struct ZielonkaPath {
    std::vector<std::pair<TransitionSet, int>> entries;
    std::size_t length() const { return entries.size(); }
};

struct ParityResult {
    ZielonkaPath path;
    ParityCondition condition;
};

/// All four solvers take the explicit universe (the defined transitions of the
/// ambient system) and throw InconsistentPartialCondition if H0 ∩ H1 ≠ ∅.
std::optional<BuchiCondition> buchi_cons(const PartialCondition& h, const TransitionSet& universe);
std::optional<GenBuchiCondition> gen_buchi_cons(const PartialCondition& h, const TransitionSet& universe);
std::optional<ParityResult> parity_cons(const PartialCondition& h, const TransitionSet& universe);
std::optional<RabinCondition> rabin_cons(const PartialCondition& h, const TransitionSet& universe);

/// The chain construction alone; requires the universe to be classified by h.
std::optional<ZielonkaPath> zielonka_path(const PartialCondition& h, const TransitionSet& universe);

/// κ(t) = σ0 + max{i : t ∈ Zi}; kNoPriority outside Z0.
ParityCondition priorities_from_path(const ZielonkaPath& path);

/// Dispatches on type. Muller is accepted too (accepting family = H0).
std::optional<AcceptanceCondition> solve(const PartialCondition& h, const TransitionSet& universe, AcceptanceType type);

/// No conflict in the induced partial condition and the solver succeeds.
bool ts_consistent(const TransitionSystem& ts, const Sample& s, AcceptanceType type);

enum class DualFlavor { CoBuchi, Streett };

/// Solves the swapped partial condition (H1, H0) with buchi_cons or rabin_cons.
/// The returned condition describes the rejecting words: a co-Büchi (resp.
/// Streett) automaton accepts exactly what it does not satisfy.
std::optional<AcceptanceCondition> streett_or_cobuchi_cons(const PartialCondition& h, const TransitionSet& universe,
                                                           DualFlavor flavor);

}  // namespace omega
