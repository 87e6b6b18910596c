#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace omega {

using Symbol = std::uint32_t;
using Word = std::vector<Symbol>;

/// Finite ordered alphabet. The symbol order is the order used by every
/// length-lexicographic comparison in the library.
class Alphabet {
public:
    Alphabet() = default;
    explicit Alphabet(std::vector<std::string> symbols);

    /// Alphabet {"a", "b", ...} of the first `n` lowercase letters.
    static Alphabet letters(std::size_t n);

    std::size_t size() const { return symbols_.size(); }
    bool empty() const { return symbols_.empty(); }
    const std::string& name(Symbol s) const;
    std::optional<Symbol> find(std::string_view name) const;
    const std::vector<std::string>& symbols() const { return symbols_; }

    /// True when every symbol is a single character, in which case words are
    /// written without separators.
    bool compact() const;

    std::string format(const Word& w) const;
    Word parse_word(std::string_view text) const;

    bool operator==(const Alphabet&) const = default;

private:
    std::vector<std::string> symbols_;
};

/// Shorter words first, then lexicographic by symbol index.
bool length_lex_less(const Word& a, const Word& b);

/// The ultimately periodic word spoke · period^ω.
struct OmegaWord {
    Word spoke;
    Word period;

    Symbol at(std::size_t i) const;
    std::size_t length() const { return spoke.size() + period.size(); }

    friend auto operator<=>(const OmegaWord&, const OmegaWord&) = default;
    friend bool operator==(const OmegaWord&, const OmegaWord&) = default;
};

/// Reduced form: primitive period, spoke rolled back as far as possible.
OmegaWord normalize(OmegaWord w);

/// Same infinite word, decided on the first max(|u|,|x|) + |v|·|y| positions.
bool omega_equal(const OmegaWord& w1, const OmegaWord& w2);

/// `u(v)` rendering.
std::string format_omega_word(const Alphabet& alphabet, const OmegaWord& w);

/// Parses `u(v)` and normalizes. Throws ParseError or SymbolNotInAlphabet.
OmegaWord parse_omega_word(const Alphabet& alphabet, std::string_view text);

}  // namespace omega
