#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "omega/condition.hpp"
#include "omega/sample.hpp"

namespace omega {

struct ParsedSample {
    Sample sample;
    std::vector<std::string> warnings;
};

/// Sample file: optional `alphabet:` line, then `positive:` and `negative:`
/// sections with one `u(v)` word per line; `#` starts a comment. Without an
/// alphabet line every non-blank character is a symbol (sorted).
/// Throws ParseError (with line and column) and DisjointnessViolation.
ParsedSample parse_sample(std::string_view text);
std::string emit_sample(const Sample& s);

/// HOA v1 with transition-based marks. Symbols are encoded as valuations of
/// log2|Σ| propositions when |Σ| is a power of two, one-hot otherwise; the
/// symbol names travel in a `symbols:` header.
std::string emit_hoa(const Automaton& a, std::string_view name = {});

/// Inverse of emit_hoa on deterministic, transition-marked documents.
/// Throws ParseError and UnsupportedFeature.
Automaton parse_hoa(std::string_view text);

/// Graphviz rendering; `dashed` marks one transition, `condition` adds
/// priorities / acceptance marks to edge labels.
std::string emit_dot(const TransitionSystem& ts, std::optional<Transition> dashed = {},
                     const AcceptanceCondition* condition = nullptr);

std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view contents);

}  // namespace omega
