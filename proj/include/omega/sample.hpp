#pragma once

#include <string>
#include <vector>

#include "omega/word.hpp"

namespace omega {

/// Disjoint sets of positive and negative ω-words, stored normalized, sorted
/// and without duplicates.
struct Sample {
    Alphabet alphabet;
    std::vector<OmegaWord> positive;
    std::vector<OmegaWord> negative;

    std::size_t size() const { return positive.size() + negative.size(); }
    bool operator==(const Sample&) const = default;
};

/// Normalizes, sorts and deduplicates both sides, then checks disjointness
/// (DisjointnessViolation). Duplicate words are reported through `warnings`.
Sample make_sample(Alphabet alphabet, std::vector<OmegaWord> positive, std::vector<OmegaWord> negative,
                   std::vector<std::string>* warnings = nullptr);

/// Union of two samples over the same alphabet (AlphabetMismatch otherwise).
Sample merge_samples(const Sample& a, const Sample& b);

}  // namespace omega
