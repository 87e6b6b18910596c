#include "omega/sample.hpp"

#include <algorithm>

#include "omega/error.hpp"

namespace omega {

namespace {

void canonicalize(const Alphabet& alphabet, std::vector<OmegaWord>& words, std::vector<std::string>* warnings) {
    for (auto& w : words) {
        for (Symbol a : w.spoke)
            if (a >= alphabet.size()) throw Error(ErrorKind::SymbolNotInAlphabet, "sample word uses unknown symbol");
        for (Symbol a : w.period)
            if (a >= alphabet.size()) throw Error(ErrorKind::SymbolNotInAlphabet, "sample word uses unknown symbol");
        w = normalize(std::move(w));
    }
    std::sort(words.begin(), words.end());
    auto last = std::unique(words.begin(), words.end());
    if (warnings) {
        for (auto it = words.begin(); it + 1 < words.end(); ++it) {
            if (*it == *(it + 1) && (it == words.begin() || !(*(it - 1) == *it)))
                warnings->push_back("duplicate word " + format_omega_word(alphabet, *it));
        }
    }
    words.erase(last, words.end());
}

}  // namespace

Sample make_sample(Alphabet alphabet, std::vector<OmegaWord> positive, std::vector<OmegaWord> negative,
                   std::vector<std::string>* warnings) {
    if (alphabet.empty()) throw Error(ErrorKind::EmptyAlphabet, "sample needs a non-empty alphabet");
    canonicalize(alphabet, positive, warnings);
    canonicalize(alphabet, negative, warnings);
    std::vector<OmegaWord> shared;
    std::set_intersection(positive.begin(), positive.end(), negative.begin(), negative.end(),
                          std::back_inserter(shared));
    if (!shared.empty())
        throw Error(ErrorKind::DisjointnessViolation,
                    "word " + format_omega_word(alphabet, shared.front()) + " is both positive and negative");
    return Sample{std::move(alphabet), std::move(positive), std::move(negative)};
}

Sample merge_samples(const Sample& a, const Sample& b) {
    if (!(a.alphabet == b.alphabet)) throw Error(ErrorKind::AlphabetMismatch, "samples use different alphabets");
    auto pos = a.positive;
    pos.insert(pos.end(), b.positive.begin(), b.positive.end());
    auto neg = a.negative;
    neg.insert(neg.end(), b.negative.begin(), b.negative.end());
    return make_sample(a.alphabet, std::move(pos), std::move(neg));
}

}  // namespace omega
