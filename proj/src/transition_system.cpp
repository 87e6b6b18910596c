#include "omega/transition_system.hpp"

#include "omega/error.hpp"

namespace omega {

std::vector<std::size_t> members(const TransitionSet& set) {
    std::vector<std::size_t> out;
    out.reserve(set.count());
    for (auto i = set.find_first(); i != TransitionSet::npos; i = set.find_next(i)) out.push_back(i);
    return out;
}

bool canonical_less(const TransitionSet& a, const TransitionSet& b) {
    const auto ca = a.count();
    const auto cb = b.count();
    if (ca != cb) return ca < cb;
    auto i = a.find_first();
    auto j = b.find_first();
    while (i != TransitionSet::npos && j != TransitionSet::npos) {
        if (i != j) return i < j;
        i = a.find_next(i);
        j = b.find_next(j);
    }
    return a.size() < b.size();
}

TransitionSystem::TransitionSystem(Alphabet alphabet, std::size_t num_states, StateId initial)
    : alphabet_(std::move(alphabet)), initial_(initial) {
    if (alphabet_.empty()) throw Error(ErrorKind::EmptyAlphabet, "transition system needs a non-empty alphabet");
    if (num_states == 0) throw Error(ErrorKind::InvalidArgument, "transition system needs at least one state");
    if (initial >= num_states) throw Error(ErrorKind::InvalidArgument, "initial state out of range");
    labels_.resize(num_states);
    for (std::size_t q = 0; q < num_states; ++q) labels_[q] = std::to_string(q);
    delta_.assign(num_states * alphabet_.size(), kNoState);
}

void TransitionSystem::set_initial(StateId q) {
    if (q >= num_states()) throw Error(ErrorKind::InvalidArgument, "initial state out of range");
    initial_ = q;
}

StateId TransitionSystem::add_state(std::string label) {
    const auto q = static_cast<StateId>(labels_.size());
    labels_.push_back(label.empty() ? std::to_string(q) : std::move(label));
    delta_.resize(delta_.size() + num_symbols(), kNoState);
    return q;
}

void TransitionSystem::set_transition(StateId from, Symbol a, StateId to) {
    if (from >= num_states() || to >= num_states())
        throw Error(ErrorKind::InvalidArgument, "transition endpoint out of range");
    if (a >= num_symbols()) throw Error(ErrorKind::SymbolNotInAlphabet, "symbol index out of range");
    delta_[index({from, a})] = to;
}

void TransitionSystem::remove_transition(StateId from, Symbol a) {
    if (from >= num_states() || a >= num_symbols()) throw Error(ErrorKind::InvalidArgument, "no such transition slot");
    delta_[index({from, a})] = kNoState;
}

StateId TransitionSystem::run_finite(StateId from, const Word& w) const {
    StateId q = from;
    for (Symbol a : w) {
        if (a >= num_symbols()) throw Error(ErrorKind::SymbolNotInAlphabet, "symbol index out of range");
        q = successor(q, a);
        if (q == kNoState) return kNoState;
    }
    return q;
}

TransitionSet TransitionSystem::defined_transitions() const {
    TransitionSet set(universe_size());
    for (std::size_t i = 0; i < delta_.size(); ++i)
        if (delta_[i] != kNoState) set.set(i);
    return set;
}

std::size_t TransitionSystem::num_transitions() const {
    std::size_t n = 0;
    for (StateId t : delta_) n += t != kNoState;
    return n;
}

bool TransitionSystem::complete() const { return num_transitions() == delta_.size(); }

}  // namespace omega
