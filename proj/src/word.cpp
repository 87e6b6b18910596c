#include "omega/word.hpp"

#include <algorithm>
#include <cctype>
#include <set>

#include "omega/error.hpp"

namespace omega {

Alphabet::Alphabet(std::vector<std::string> symbols) : symbols_(std::move(symbols)) {
    if (symbols_.empty()) throw Error(ErrorKind::EmptyAlphabet, "alphabet must not be empty");
    std::set<std::string> seen;
    for (const auto& s : symbols_) {
        if (s.empty()) throw Error(ErrorKind::InvalidArgument, "empty symbol name");
        for (char c : s) {
            if (std::isspace(static_cast<unsigned char>(c)) || c == '(' || c == ')' || c == '"')
                throw Error(ErrorKind::InvalidArgument, "symbol name '" + s + "' contains a reserved character");
        }
        if (!seen.insert(s).second) throw Error(ErrorKind::InvalidArgument, "duplicate symbol '" + s + "'");
    }
}

Alphabet Alphabet::letters(std::size_t n) {
    std::vector<std::string> names;
    for (std::size_t i = 0; i < n; ++i) names.emplace_back(1, static_cast<char>('a' + i));
    return Alphabet(std::move(names));
}

const std::string& Alphabet::name(Symbol s) const {
    if (s >= symbols_.size())
        throw Error(ErrorKind::SymbolNotInAlphabet, "symbol index " + std::to_string(s) + " out of range");
    return symbols_[s];
}

std::optional<Symbol> Alphabet::find(std::string_view name) const {
    for (std::size_t i = 0; i < symbols_.size(); ++i)
        if (symbols_[i] == name) return static_cast<Symbol>(i);
    return std::nullopt;
}

bool Alphabet::compact() const {
    return std::all_of(symbols_.begin(), symbols_.end(), [](const std::string& s) { return s.size() == 1; });
}

std::string Alphabet::format(const Word& w) const {
    std::string out;
    const bool tight = compact();
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (!tight && i > 0) out += ' ';
        out += name(w[i]);
    }
    return out;
}

namespace {

struct Token {
    enum Kind { Symbol, Open, Close } kind;
    std::string text;
    std::size_t column;
};

std::vector<Token> tokenize(std::string_view text, bool compact) {
    std::vector<Token> tokens;
    std::size_t i = 0;
    while (i < text.size()) {
        char c = text[i];
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++i;
        } else if (c == '(') {
            tokens.push_back({Token::Open, "(", i + 1});
            ++i;
        } else if (c == ')') {
            tokens.push_back({Token::Close, ")", i + 1});
            ++i;
        } else if (compact) {
            tokens.push_back({Token::Symbol, std::string(1, c), i + 1});
            ++i;
        } else {
            std::size_t j = i;
            while (j < text.size() && !std::isspace(static_cast<unsigned char>(text[j])) && text[j] != '(' &&
                   text[j] != ')')
                ++j;
            tokens.push_back({Token::Symbol, std::string(text.substr(i, j - i)), i + 1});
            i = j;
        }
    }
    return tokens;
}

Symbol lookup(const Alphabet& alphabet, const Token& t) {
    auto s = alphabet.find(t.text);
    if (!s)
        throw Error(ErrorKind::SymbolNotInAlphabet,
                    "symbol '" + t.text + "' at column " + std::to_string(t.column) + " is not in the alphabet");
    return *s;
}

}  // namespace

Word Alphabet::parse_word(std::string_view text) const {
    Word w;
    for (const auto& t : tokenize(text, compact())) {
        if (t.kind != Token::Symbol)
            throw Error(ErrorKind::ParseError, "unexpected '" + t.text + "' at column " + std::to_string(t.column));
        w.push_back(lookup(*this, t));
    }
    return w;
}

bool length_lex_less(const Word& a, const Word& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
}

Symbol OmegaWord::at(std::size_t i) const {
    if (i < spoke.size()) return spoke[i];
    return period[(i - spoke.size()) % period.size()];
}

OmegaWord normalize(OmegaWord w) {
    const std::size_t n = w.period.size();
    if (n == 0) throw Error(ErrorKind::PreconditionViolated, "period must not be empty");
    for (std::size_t d = 1; d < n; ++d) {
        if (n % d != 0) continue;
        bool periodic = true;
        for (std::size_t i = d; i < n && periodic; ++i) periodic = w.period[i] == w.period[i - d];
        if (periodic) {
            w.period.resize(d);
            break;
        }
    }
    while (!w.spoke.empty() && w.spoke.back() == w.period.back()) {
        w.spoke.pop_back();
        std::rotate(w.period.rbegin(), w.period.rbegin() + 1, w.period.rend());
    }
    return w;
}

bool omega_equal(const OmegaWord& w1, const OmegaWord& w2) {
    const std::size_t bound = std::max(w1.spoke.size(), w2.spoke.size()) + w1.period.size() * w2.period.size();
    for (std::size_t i = 0; i < bound; ++i)
        if (w1.at(i) != w2.at(i)) return false;
    return true;
}

std::string format_omega_word(const Alphabet& alphabet, const OmegaWord& w) {
    return alphabet.format(w.spoke) + "(" + alphabet.format(w.period) + ")";
}

OmegaWord parse_omega_word(const Alphabet& alphabet, std::string_view text) {
    auto tokens = tokenize(text, alphabet.compact());
    OmegaWord w;
    std::size_t i = 0;
    for (; i < tokens.size() && tokens[i].kind == Token::Symbol; ++i) w.spoke.push_back(lookup(alphabet, tokens[i]));
    if (i == tokens.size() || tokens[i].kind != Token::Open)
        throw Error(ErrorKind::ParseError, "expected '(' in ω-word '" + std::string(text) + "'");
    for (++i; i < tokens.size() && tokens[i].kind == Token::Symbol; ++i) w.period.push_back(lookup(alphabet, tokens[i]));
    if (i == tokens.size() || tokens[i].kind != Token::Close)
        throw Error(ErrorKind::ParseError, "expected ')' in ω-word '" + std::string(text) + "'");
    if (i + 1 != tokens.size())
        throw Error(ErrorKind::ParseError, "trailing input after ')' at column " + std::to_string(tokens[i + 1].column));
    if (w.period.empty()) throw Error(ErrorKind::ParseError, "empty period in ω-word '" + std::string(text) + "'");
    return normalize(std::move(w));
}

}  // namespace omega
