#pragma once

#include <optional>
#include <vector>

#include "omega/condition.hpp"
#include "omega/consistency.hpp"

namespace omega {

struct LearnerConfig {
    AcceptanceType type = AcceptanceType::Parity;
    std::optional<std::size_t> threshold_override;
    bool trace = false;
    /// Evaluate the candidate targets of one insertion concurrently. The first
    /// consistent candidate in canonical order wins either way.
    bool parallel = true;
};

struct TraceStep {
    TransitionSystem ts;  ///< system after the step
    Transition inserted;
    bool new_state = false;
    Word escape_prefix;
};

struct LearnResult {
    Automaton automaton;
    std::vector<TraceStep> trace;
    bool threshold_hit = false;
    std::optional<TransitionSystem> before_extend;
    std::size_t iterations = 0;
    std::size_t threshold = 0;
};

/// max|u| + (max|v|)² + 1 over all sample words. Throws EmptySample.
std::size_t threshold(const Sample& s);

/// Sprout with diagnostics.
LearnResult learn(const Sample& s, const LearnerConfig& cfg);

/// Sprout; the result accepts every positive and rejects every negative.
Automaton sprout(const Sample& s, const LearnerConfig& cfg);

/// Attaches, below every state q, a loop gadget in which exactly the positive
/// exit strings leaving from q loop. Throws PreconditionViolated if some
/// positive exit string is not purely periodic.
TransitionSystem extend(const TransitionSystem& ts, const Sample& s);

/// Solves the induced partial condition of ts. Throws InternalInconsistency
/// if there is a conflict or no condition of the type exists.
Automaton build_aut(const TransitionSystem& ts, const Sample& s, AcceptanceType type);

}  // namespace omega
