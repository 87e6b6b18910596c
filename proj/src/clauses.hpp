#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "omega/condition.hpp"

namespace omega::detail {

/// Fin(fin) ∧ ⋀ Inf(inf_i) ∧ ⋀ (Inf(G) → Inf(H)).
struct Clause {
    TransitionSet fin;
    std::vector<TransitionSet> inf;
    std::vector<std::pair<TransitionSet, TransitionSet>> streett;
};

Clause conjoin(const Clause& x, const Clause& y);

using Lift = std::function<TransitionSet(const TransitionSet&)>;

/// Disjunctive form of acceptance (or rejection) of `c`, mapped through `up`
/// into a target universe whose empty set is `none`. `defined` is the set of
/// defined transitions in c's own universe. Rejection of Muller conditions is
/// not supported (UnsupportedType).
std::vector<Clause> clauses(const AcceptanceCondition& c, const TransitionSet& defined, const Lift& up,
                            const TransitionSet& none, bool accepting);

/// Some strongly connected X ⊆ allowed satisfying the Inf and Streett parts of
/// the clause; the caller removes `fin` from `allowed` beforehand.
std::optional<TransitionSet> find_loop(const TransitionSystem& ts, const TransitionSet& allowed, const Clause& c);

}  // namespace omega::detail
