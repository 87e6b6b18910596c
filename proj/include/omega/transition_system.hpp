#pragma once

#include <boost/dynamic_bitset.hpp>
#include <compare>
#include <cstdint>
#include <limits>
#include <string>
#include <vector>

#include "omega/word.hpp"

namespace omega {

using StateId = std::uint32_t;
inline constexpr StateId kNoState = std::numeric_limits<StateId>::max();

struct Transition {
    StateId state;
    Symbol symbol;

    friend auto operator<=>(const Transition&, const Transition&) = default;
};

/// Subset of the transition universe Q×Σ, indexed by state·|Σ| + symbol.
using TransitionSet = boost::dynamic_bitset<std::uint64_t>;

/// Member indices in increasing order.
std::vector<std::size_t> members(const TransitionSet& set);

/// Canonical order on transition sets: smaller first, then lexicographic on the
/// sorted member indices.
bool canonical_less(const TransitionSet& a, const TransitionSet& b);

/// Deterministic partial transition system.
class TransitionSystem {
public:
    TransitionSystem() = default;
    explicit TransitionSystem(Alphabet alphabet, std::size_t num_states = 1, StateId initial = 0);

    const Alphabet& alphabet() const { return alphabet_; }
    std::size_t num_states() const { return labels_.size(); }
    std::size_t num_symbols() const { return alphabet_.size(); }
    StateId initial() const { return initial_; }
    void set_initial(StateId q);

    StateId add_state(std::string label = {});
    const std::string& label(StateId q) const { return labels_.at(q); }
    void set_label(StateId q, std::string label) { labels_.at(q) = std::move(label); }

    void set_transition(StateId from, Symbol a, StateId to);
    void remove_transition(StateId from, Symbol a);
    StateId successor(StateId from, Symbol a) const { return delta_[index({from, a})]; }
    bool defined(StateId from, Symbol a) const { return successor(from, a) != kNoState; }

    /// δ* from `from`; kNoState as soon as a step is undefined.
    StateId run_finite(StateId from, const Word& w) const;

    std::size_t universe_size() const { return delta_.size(); }
    std::size_t index(Transition t) const { return static_cast<std::size_t>(t.state) * num_symbols() + t.symbol; }
    Transition transition(std::size_t index) const {
        return {static_cast<StateId>(index / num_symbols()), static_cast<Symbol>(index % num_symbols())};
    }
    StateId target(std::size_t index) const { return delta_[index]; }

    TransitionSet empty_set() const { return TransitionSet(universe_size()); }
    TransitionSet defined_transitions() const;
    std::size_t num_transitions() const;
    bool complete() const;

    bool operator==(const TransitionSystem& other) const = default;

private:
    Alphabet alphabet_;
    StateId initial_ = 0;
    std::vector<StateId> delta_;
    std::vector<std::string> labels_;
};

}  // namespace omega
