#pragma once

#include <cstdint>
#include <limits>
#include <string_view>
#include <variant>
#include <vector>

#include "omega/run.hpp"
#include "omega/sample.hpp"
#include "omega/transition_system.hpp"

namespace omega {

enum class AcceptanceType { Buchi, GenBuchi, Parity, Rabin, Muller };

std::string_view to_string(AcceptanceType type);
AcceptanceType parse_acceptance_type(std::string_view name);

using Priority = std::uint32_t;
inline constexpr Priority kNoPriority = std::numeric_limits<Priority>::max();

struct BuchiCondition {
    TransitionSet accepting;
    bool operator==(const BuchiCondition&) const = default;
};

struct GenBuchiCondition {
    std::vector<TransitionSet> components;
    bool operator==(const GenBuchiCondition&) const = default;
};

/// Min-even parity; priority[i] is kNoPriority for transitions outside the domain.
struct ParityCondition {
    std::vector<Priority> priority;
    bool operator==(const ParityCondition&) const = default;
};

struct RabinPair {
    TransitionSet fin;  ///< E: must be avoided
    TransitionSet inf;  ///< F: must recur
    bool operator==(const RabinPair&) const = default;
};

struct RabinCondition {
    std::vector<RabinPair> pairs;
    bool operator==(const RabinCondition&) const = default;
};

struct MullerCondition {
    std::vector<TransitionSet> accepting;
    bool operator==(const MullerCondition&) const = default;
};

using AcceptanceCondition =
    std::variant<BuchiCondition, GenBuchiCondition, ParityCondition, RabinCondition, MullerCondition>;

AcceptanceType type_of(const AcceptanceCondition& c);

struct Automaton {
    TransitionSystem ts;
    AcceptanceCondition condition;
};

/// Whether the infinity set X satisfies c. Throws EmptyInfinitySet.
bool satisfies(const TransitionSet& x, const AcceptanceCondition& c);

/// False on escaping runs.
bool accepts(const Automaton& a, const OmegaWord& w);

/// Same, but starting from state `from`.
bool accepts_from(const Automaton& a, StateId from, const OmegaWord& w);

/// Number of priorities / components / pairs; 1 for Büchi; |F| for Muller.
std::size_t condition_size(const AcceptanceCondition& c);

/// Two families of transition sets, deduplicated and sorted canonically.
struct PartialCondition {
    std::vector<TransitionSet> positive;  ///< H0
    std::vector<TransitionSet> negative;  ///< H1

    static PartialCondition make(std::vector<TransitionSet> positive, std::vector<TransitionSet> negative);

    /// H0 ∩ H1 = ∅.
    bool consistent() const;
    /// 0 if X ∈ H0, 1 if X ∈ H1, -1 otherwise.
    int classify(const TransitionSet& x) const;

    bool operator==(const PartialCondition&) const = default;
};

/// Sorts canonically and removes duplicates.
void normalize_family(std::vector<TransitionSet>& family);

struct ConflictReport {
    enum class Kind { SharedInfinitySet, Indistinguishable };
    Kind kind;
    OmegaWord positive;
    OmegaWord negative;
};

/// Infinity sets of the non-escaping sample words, or the first conflict found.
std::variant<PartialCondition, ConflictReport> induced_partial_condition(const TransitionSystem& ts, const Sample& s);

}  // namespace omega
