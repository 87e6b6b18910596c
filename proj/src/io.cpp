#include "omega/io.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "omega/error.hpp"

namespace omega {

// ---------------------------------------------------------------- samples

namespace {

std::string trim(std::string_view s) {
    std::size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return std::string(s.substr(b, e - b));
}

std::vector<std::string> split_ws(std::string_view s) {
    std::istringstream in{std::string(s)};
    std::vector<std::string> out;
    for (std::string tok; in >> tok;) out.push_back(tok);
    return out;
}

[[noreturn]] void parse_fail(std::size_t line, std::size_t column, const std::string& what) {
    throw Error(ErrorKind::ParseError,
                "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what);
}

}  // namespace

ParsedSample parse_sample(std::string_view text) {
    struct Line {
        std::size_t number;
        std::size_t indent;
        std::string content;
    };
    std::vector<Line> lines;
    {
        std::istringstream in{std::string(text)};
        std::string raw;
        std::size_t n = 0;
        while (std::getline(in, raw)) {
            ++n;
            if (!raw.empty() && raw.back() == '\r') raw.pop_back();
            if (auto hash = raw.find('#'); hash != std::string::npos) raw.resize(hash);
            std::size_t indent = 0;
            while (indent < raw.size() && std::isspace(static_cast<unsigned char>(raw[indent]))) ++indent;
            std::string content = trim(raw);
            if (!content.empty()) lines.push_back({n, indent + 1, std::move(content)});
        }
    }

    std::optional<Alphabet> alphabet;
    enum class Section { None, Positive, Negative } section = Section::None;
    std::vector<std::pair<Section, const Line*>> words;
    for (const auto& line : lines) {
        if (line.content.rfind("alphabet:", 0) == 0) {
            if (alphabet || section != Section::None || !words.empty())
                parse_fail(line.number, line.indent, "'alphabet:' must come first and only once");
            auto names = split_ws(std::string_view(line.content).substr(9));
            if (names.empty()) parse_fail(line.number, line.indent, "empty alphabet");
            try {
                alphabet = Alphabet(std::move(names));
            } catch (const Error& e) {
                parse_fail(line.number, line.indent, e.what());
            }
        } else if (line.content == "positive:") {
            section = Section::Positive;
        } else if (line.content == "negative:") {
            section = Section::Negative;
        } else {
            if (section == Section::None)
                parse_fail(line.number, line.indent, "word outside a 'positive:' or 'negative:' section");
            words.emplace_back(section, &line);
        }
    }
    if (!alphabet) {
        std::set<std::string> symbols;
        for (const auto& [sec, line] : words)
            for (char c : line->content)
                if (!std::isspace(static_cast<unsigned char>(c)) && c != '(' && c != ')') symbols.insert(std::string(1, c));
        if (symbols.empty()) throw Error(ErrorKind::ParseError, "cannot infer an alphabet from an empty sample");
        alphabet = Alphabet(std::vector<std::string>(symbols.begin(), symbols.end()));
    }

    std::vector<OmegaWord> pos, neg;
    for (const auto& [sec, line] : words) {
        try {
            auto w = parse_omega_word(*alphabet, line->content);
            (sec == Section::Positive ? pos : neg).push_back(std::move(w));
        } catch (const Error& e) {
            parse_fail(line->number, line->indent, e.what());
        }
    }
    ParsedSample result;
    result.sample = make_sample(*alphabet, std::move(pos), std::move(neg), &result.warnings);
    return result;
}

std::string emit_sample(const Sample& s) {
    std::string out = "alphabet:";
    for (const auto& name : s.alphabet.symbols()) out += " " + name;
    out += "\npositive:\n";
    for (const auto& w : s.positive) out += format_omega_word(s.alphabet, w) + "\n";
    out += "negative:\n";
    for (const auto& w : s.negative) out += format_omega_word(s.alphabet, w) + "\n";
    return out;
}

// ---------------------------------------------------------------- HOA

namespace {

bool power_of_two(std::size_t n) { return n != 0 && (n & (n - 1)) == 0; }

struct Encoding {
    std::size_t aps = 0;
    bool binary = true;

    explicit Encoding(std::size_t symbols) {
        binary = power_of_two(symbols);
        aps = binary ? static_cast<std::size_t>(std::countr_zero(symbols)) : symbols;
    }

    /// Truth value of proposition `ap` under symbol s.
    bool value(Symbol s, std::size_t ap) const { return binary ? ((s >> ap) & 1u) != 0 : s == ap; }

    std::string label(Symbol s) const {
        if (aps == 0) return "t";
        std::string out;
        for (std::size_t ap = 0; ap < aps; ++ap) {
            if (ap) out += "&";
            if (!value(s, ap)) out += "!";
            out += std::to_string(ap);
        }
        return out;
    }
};

std::string quote(std::string_view s) {
    std::string out = "\"";
    for (char c : s) {
        if (c == '"' || c == '\\') out += '\\';
        out += c;
    }
    return out + "\"";
}

std::string parity_formula(std::size_t sets) {
    std::string f;
    for (std::size_t i = sets; i-- > 0;) {
        const std::string atom = (i % 2 == 0 ? "Inf(" : "Fin(") + std::to_string(i) + ")";
        if (f.empty()) {
            f = atom;
        } else {
            const std::string inner = i + 2 == sets ? f : "(" + f + ")";
            f = atom + (i % 2 == 0 ? " | " : " & ") + inner;
        }
    }
    return f;
}

struct AcceptanceHeader {
    std::string name;
    std::size_t sets = 0;
    std::string formula;
};

AcceptanceHeader acceptance_header(const AcceptanceCondition& c, std::size_t universe) {
    return std::visit(
        [&](const auto& cond) -> AcceptanceHeader {
            using T = std::decay_t<decltype(cond)>;
            if constexpr (std::is_same_v<T, BuchiCondition>) {
                return {"Buchi", 1, "Inf(0)"};
            } else if constexpr (std::is_same_v<T, GenBuchiCondition>) {
                const std::size_t k = cond.components.size();
                std::string f;
                for (std::size_t i = 0; i < k; ++i) f += (i ? "&" : "") + std::string("Inf(") + std::to_string(i) + ")";
                return {"generalized-Buchi " + std::to_string(k), k, k == 0 ? "t" : f};
            } else if constexpr (std::is_same_v<T, ParityCondition>) {
                Priority top = 0;
                for (Priority p : cond.priority)
                    if (p != kNoPriority) top = std::max(top, p);
                const std::size_t sets = static_cast<std::size_t>(top) + 1;
                return {"parity min even " + std::to_string(sets), sets, parity_formula(sets)};
            } else if constexpr (std::is_same_v<T, RabinCondition>) {
                const std::size_t r = cond.pairs.size();
                std::string f;
                for (std::size_t i = 0; i < r; ++i)
                    f += (i ? " | " : "") + std::string("(Fin(") + std::to_string(2 * i) + ")&Inf(" +
                         std::to_string(2 * i + 1) + "))";
                return {"Rabin " + std::to_string(r), 2 * r, r == 0 ? "f" : f};
            } else {
                // one acceptance set per transition index
                std::string f;
                for (const auto& m : cond.accepting) {
                    std::string term;
                    for (std::size_t t = 0; t < universe; ++t)
                        term += (term.empty() ? "" : "&") + std::string(m.test(t) ? "Inf(" : "Fin(") +
                                std::to_string(t) + ")";
                    f += (f.empty() ? "" : " | ") + ("(" + term + ")");
                }
                return {"", universe, f.empty() ? "f" : f};
            }
        },
        c);
}

std::vector<std::size_t> marks_of(const AcceptanceCondition& c, std::size_t t) {
    std::vector<std::size_t> marks;
    std::visit(
        [&](const auto& cond) {
            using T = std::decay_t<decltype(cond)>;
            if constexpr (std::is_same_v<T, BuchiCondition>) {
                if (cond.accepting.test(t)) marks.push_back(0);
            } else if constexpr (std::is_same_v<T, GenBuchiCondition>) {
                for (std::size_t i = 0; i < cond.components.size(); ++i)
                    if (cond.components[i].test(t)) marks.push_back(i);
            } else if constexpr (std::is_same_v<T, ParityCondition>) {
                if (cond.priority[t] != kNoPriority) marks.push_back(cond.priority[t]);
            } else if constexpr (std::is_same_v<T, RabinCondition>) {
                for (std::size_t i = 0; i < cond.pairs.size(); ++i) {
                    if (cond.pairs[i].fin.test(t)) marks.push_back(2 * i);
                    if (cond.pairs[i].inf.test(t)) marks.push_back(2 * i + 1);
                }
            } else {
                marks.push_back(t);
            }
        },
        c);
    return marks;
}

}  // namespace

std::string emit_hoa(const Automaton& a, std::string_view name) {
    const auto& ts = a.ts;
    const Encoding enc(ts.num_symbols());
    std::ostringstream out;
    out << "HOA: v1\n";
    if (!name.empty()) out << "name: " << quote(name) << "\n";
    out << "States: " << ts.num_states() << "\n";
    out << "Start: " << ts.initial() << "\n";
    out << "AP: " << enc.aps;
    for (std::size_t i = 0; i < enc.aps; ++i) out << " " << quote("p" + std::to_string(i));
    out << "\n";
    out << "symbols:";
    for (const auto& s : ts.alphabet().symbols()) out << " " << quote(s);
    out << "\n";
    out << "/* symbol encoding (" << (enc.binary ? "binary" : "one-hot") << "):";
    for (Symbol s = 0; s < ts.num_symbols(); ++s) out << " " << ts.alphabet().name(s) << "=[" << enc.label(s) << "]";
    out << " */\n";
    const auto header = acceptance_header(a.condition, ts.universe_size());
    if (!header.name.empty()) out << "acc-name: " << header.name << "\n";
    out << "Acceptance: " << header.sets << " " << header.formula << "\n";
    out << "properties: trans-labels explicit-labels trans-acc deterministic\n";
    out << "--BODY--\n";
    for (StateId q = 0; q < ts.num_states(); ++q) {
        out << "State: " << q << " " << quote(ts.label(q)) << "\n";
        for (Symbol s = 0; s < ts.num_symbols(); ++s) {
            if (!ts.defined(q, s)) continue;
            const std::size_t t = ts.index({q, s});
            out << "[" << enc.label(s) << "] " << ts.successor(q, s);
            const auto marks = marks_of(a.condition, t);
            if (!marks.empty()) {
                out << " {";
                for (std::size_t i = 0; i < marks.size(); ++i) out << (i ? " " : "") << marks[i];
                out << "}";
            }
            out << "\n";
        }
    }
    out << "--END--\n";
    return out.str();
}

namespace {

struct HoaToken {
    enum Kind { Header, Ident, String, Int, Punct, End } kind;
    std::string text;
    std::size_t line;
};

class HoaLexer {
public:
    explicit HoaLexer(std::string_view text) : text_(text) {}

    HoaToken next() {
        skip();
        if (pos_ >= text_.size()) return {HoaToken::End, "", line_};
        const char c = text_[pos_];
        if (c == '"') {
            std::string s;
            ++pos_;
            while (pos_ < text_.size() && text_[pos_] != '"') {
                if (text_[pos_] == '\\' && pos_ + 1 < text_.size()) ++pos_;
                if (text_[pos_] == '\n') ++line_;
                s += text_[pos_++];
            }
            if (pos_ >= text_.size()) fail("unterminated string");
            ++pos_;
            return {HoaToken::String, s, line_};
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t b = pos_;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
            return {HoaToken::Int, std::string(text_.substr(b, pos_ - b)), line_};
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_' || c == '-') {
            std::size_t b = pos_;
            while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_' ||
                                           text_[pos_] == '-'))
                ++pos_;
            std::string word(text_.substr(b, pos_ - b));
            if (pos_ < text_.size() && text_[pos_] == ':') {
                ++pos_;
                return {HoaToken::Header, word, line_};
            }
            if (word == "--BODY--" || word == "--END--" || word == "--ABORT--") return {HoaToken::Punct, word, line_};
            return {HoaToken::Ident, word, line_};
        }
        ++pos_;
        return {HoaToken::Punct, std::string(1, c), line_};
    }

    [[noreturn]] void fail(const std::string& what) const {
        throw Error(ErrorKind::ParseError, "HOA line " + std::to_string(line_) + ": " + what);
    }

private:
    void skip() {
        while (pos_ < text_.size()) {
            if (text_[pos_] == '\n') {
                ++line_;
                ++pos_;
            } else if (std::isspace(static_cast<unsigned char>(text_[pos_]))) {
                ++pos_;
            } else if (text_.compare(pos_, 2, "/*") == 0) {
                auto end = text_.find("*/", pos_ + 2);
                if (end == std::string_view::npos) fail("unterminated comment");
                line_ += static_cast<std::size_t>(std::count(text_.begin() + static_cast<std::ptrdiff_t>(pos_),
                                                             text_.begin() + static_cast<std::ptrdiff_t>(end), '\n'));
                pos_ = end + 2;
            } else {
                break;
            }
        }
    }

    std::string_view text_;
    std::size_t pos_ = 0;
    std::size_t line_ = 1;
};

/// Boolean label over AP indices: t f ! & | ( ) and integers.
class LabelParser {
public:
    LabelParser(const std::vector<HoaToken>& tokens, const HoaLexer& lexer) : tokens_(tokens), lexer_(lexer) {}

    bool eval(const std::function<bool(std::size_t)>& value) {
        pos_ = 0;
        value_ = &value;
        bool r = disjunction();
        if (pos_ != tokens_.size()) lexer_.fail("malformed label");
        return r;
    }

private:
    bool disjunction() {
        bool r = conjunction();
        while (peek("|")) {
            ++pos_;
            r = conjunction() || r;
        }
        return r;
    }
    bool conjunction() {
        bool r = atom();
        while (peek("&")) {
            ++pos_;
            r = atom() && r;
        }
        return r;
    }
    bool atom() {
        if (pos_ >= tokens_.size()) lexer_.fail("truncated label");
        const auto& t = tokens_[pos_++];
        if (t.kind == HoaToken::Punct && t.text == "!") return !atom();
        if (t.kind == HoaToken::Punct && t.text == "(") {
            bool r = disjunction();
            if (!peek(")")) lexer_.fail("missing ')' in label");
            ++pos_;
            return r;
        }
        if (t.kind == HoaToken::Ident && t.text == "t") return true;
        if (t.kind == HoaToken::Ident && t.text == "f") return false;
        if (t.kind == HoaToken::Int) return (*value_)(std::stoul(t.text));
        lexer_.fail("unsupported label element '" + t.text + "'");
    }
    bool peek(const char* p) const {
        return pos_ < tokens_.size() && tokens_[pos_].kind == HoaToken::Punct && tokens_[pos_].text == p;
    }

    const std::vector<HoaToken>& tokens_;
    const HoaLexer& lexer_;
    std::size_t pos_ = 0;
    const std::function<bool(std::size_t)>* value_ = nullptr;
};

struct Edge {
    StateId from;
    std::vector<HoaToken> label;
    StateId to;
    std::vector<std::size_t> marks;
    std::size_t line;
};

}  // namespace

Automaton parse_hoa(std::string_view text) {
    HoaLexer lex(text);
    std::vector<HoaToken> tokens;
    for (auto t = lex.next(); t.kind != HoaToken::End; t = lex.next()) tokens.push_back(std::move(t));
    std::size_t i = 0;
    auto at_end = [&] { return i >= tokens.size(); };

    std::optional<std::size_t> states;
    std::optional<StateId> start;
    std::size_t aps = 0;
    std::vector<std::string> symbols;
    std::string acc_name;
    std::vector<std::string> acc_params;
    std::optional<std::size_t> acc_sets;
    bool seen_hoa = false;

    // headers
    while (!at_end() && !(tokens[i].kind == HoaToken::Punct && tokens[i].text == "--BODY--")) {
        const auto& h = tokens[i];
        if (h.kind != HoaToken::Header) lex.fail("expected a header, got '" + h.text + "'");
        ++i;
        std::vector<HoaToken> values;
        while (!at_end() && tokens[i].kind != HoaToken::Header &&
               !(tokens[i].kind == HoaToken::Punct && tokens[i].text == "--BODY--"))
            values.push_back(tokens[i++]);
        auto int_at = [&](std::size_t k) -> std::size_t {
            if (k >= values.size() || values[k].kind != HoaToken::Int) lex.fail("header '" + h.text + "' expects a number");
            return std::stoul(values[k].text);
        };
        if (h.text == "HOA") {
            if (values.empty() || values[0].text != "v1") throw Error(ErrorKind::UnsupportedFeature, "only HOA v1 is supported");
            seen_hoa = true;
        } else if (h.text == "States") {
            states = int_at(0);
        } else if (h.text == "Start") {
            if (start) throw Error(ErrorKind::UnsupportedFeature, "multiple initial states");
            if (values.size() != 1) throw Error(ErrorKind::UnsupportedFeature, "alternating initial states");
            start = static_cast<StateId>(int_at(0));
        } else if (h.text == "AP") {
            aps = int_at(0);
            if (values.size() != aps + 1) lex.fail("AP count does not match the listed names");
        } else if (h.text == "symbols") {
            for (const auto& v : values) {
                if (v.kind != HoaToken::String) lex.fail("symbols header expects strings");
                symbols.push_back(v.text);
            }
        } else if (h.text == "acc-name") {
            if (values.empty()) lex.fail("empty acc-name");
            acc_name = values[0].text;
            for (std::size_t k = 1; k < values.size(); ++k) acc_params.push_back(values[k].text);
        } else if (h.text == "Acceptance") {
            acc_sets = int_at(0);
        } else if (h.text == "Alias" || h.text == "tool" || h.text == "name" || h.text == "properties" ||
                   std::islower(static_cast<unsigned char>(h.text[0]))) {
            // informational
        } else {
            throw Error(ErrorKind::UnsupportedFeature, "unsupported header '" + h.text + "'");
        }
    }
    if (!seen_hoa) lex.fail("missing 'HOA: v1'");
    if (at_end()) lex.fail("missing --BODY--");
    ++i;
    if (!states) lex.fail("missing States header");
    if (!start) lex.fail("missing Start header");
    if (!acc_sets) lex.fail("missing Acceptance header");
    if (*states == 0) lex.fail("automaton needs at least one state");

    if (symbols.empty()) {
        for (std::size_t v = 0; v < (std::size_t{1} << aps); ++v) symbols.push_back(std::to_string(v));
    }
    const std::size_t k = symbols.size();
    const Encoding enc(k);
    if (enc.aps != aps) lex.fail("AP count does not fit the symbol encoding");

    TransitionSystem ts(Alphabet(symbols), *states, *start);
    std::vector<Edge> edges;
    std::optional<StateId> current;
    std::set<StateId> declared;
    while (!at_end() && !(tokens[i].kind == HoaToken::Punct && tokens[i].text == "--END--")) {
        const auto& t = tokens[i];
        if (t.kind == HoaToken::Header && t.text == "State") {
            ++i;
            if (at_end() || tokens[i].kind != HoaToken::Int) lex.fail("State expects a number");
            const auto q = static_cast<StateId>(std::stoul(tokens[i++].text));
            if (q >= *states) lex.fail("state number out of range");
            if (!declared.insert(q).second) lex.fail("state declared twice");
            if (!at_end() && tokens[i].kind == HoaToken::String) ts.set_label(q, tokens[i++].text);
            if (!at_end() && tokens[i].kind == HoaToken::Punct && tokens[i].text == "{")
                throw Error(ErrorKind::UnsupportedFeature, "state-based acceptance marks");
            current = q;
        } else if (t.kind == HoaToken::Punct && t.text == "[") {
            if (!current) lex.fail("edge before any State");
            Edge e{*current, {}, 0, {}, t.line};
            ++i;
            while (!at_end() && !(tokens[i].kind == HoaToken::Punct && tokens[i].text == "]")) e.label.push_back(tokens[i++]);
            if (at_end()) lex.fail("unterminated label");
            ++i;
            if (at_end() || tokens[i].kind != HoaToken::Int) lex.fail("edge expects a target state");
            e.to = static_cast<StateId>(std::stoul(tokens[i++].text));
            if (e.to >= *states) lex.fail("edge target out of range");
            if (!at_end() && tokens[i].kind == HoaToken::Punct && tokens[i].text == "&")
                throw Error(ErrorKind::UnsupportedFeature, "alternating transitions");
            if (!at_end() && tokens[i].kind == HoaToken::Punct && tokens[i].text == "{") {
                ++i;
                while (!at_end() && tokens[i].kind == HoaToken::Int) e.marks.push_back(std::stoul(tokens[i++].text));
                if (at_end() || tokens[i].text != "}") lex.fail("unterminated acceptance marks");
                ++i;
            }
            for (std::size_t m : e.marks)
                if (m >= *acc_sets) lex.fail("acceptance mark out of range");
            edges.push_back(std::move(e));
        } else if (t.kind == HoaToken::Int) {
            throw Error(ErrorKind::UnsupportedFeature, "implicit edge labels");
        } else {
            lex.fail("unexpected '" + t.text + "' in body");
        }
    }
    if (at_end()) lex.fail("missing --END--");

    std::vector<std::vector<std::size_t>> marks(ts.universe_size());
    for (const auto& e : edges) {
        LabelParser label(e.label, lex);
        for (Symbol s = 0; s < k; ++s) {
            const std::function<bool(std::size_t)> value = [&](std::size_t ap) {
                if (ap >= aps) lex.fail("label uses an undeclared proposition");
                return enc.value(s, ap);
            };
            if (!label.eval(value)) continue;
            if (ts.defined(e.from, s)) throw Error(ErrorKind::UnsupportedFeature, "nondeterministic transitions");
            ts.set_transition(e.from, s, e.to);
            marks[ts.index({e.from, s})] = e.marks;
        }
    }

    const std::size_t n = ts.universe_size();
    auto marked = [&](std::size_t set) {
        TransitionSet x(n);
        for (std::size_t t = 0; t < n; ++t)
            if (std::find(marks[t].begin(), marks[t].end(), set) != marks[t].end()) x.set(t);
        return x;
    };
    auto param = [&](std::size_t idx) -> std::size_t {
        if (idx >= acc_params.size()) lex.fail("acc-name is missing a parameter");
        return std::stoul(acc_params[idx]);
    };
    AcceptanceCondition condition;
    if (acc_name == "Buchi") {
        condition = BuchiCondition{marked(0)};
    } else if (acc_name == "generalized-Buchi") {
        GenBuchiCondition c;
        for (std::size_t j = 0; j < param(0); ++j) c.components.push_back(marked(j));
        condition = std::move(c);
    } else if (acc_name == "parity") {
        if (acc_params.size() != 3 || acc_params[0] != "min" || acc_params[1] != "even")
            throw Error(ErrorKind::UnsupportedFeature, "only 'parity min even' is supported");
        ParityCondition c{std::vector<Priority>(n, kNoPriority)};
        for (std::size_t t = 0; t < n; ++t) {
            if (ts.target(t) == kNoState) continue;
            if (marks[t].size() != 1)
                throw Error(ErrorKind::UnsupportedFeature, "parity transitions need exactly one mark");
            c.priority[t] = static_cast<Priority>(marks[t][0]);
        }
        condition = std::move(c);
    } else if (acc_name == "Rabin") {
        RabinCondition c;
        for (std::size_t j = 0; j < param(0); ++j) c.pairs.push_back({marked(2 * j), marked(2 * j + 1)});
        condition = std::move(c);
    } else {
        throw Error(ErrorKind::UnsupportedFeature, "unsupported acc-name '" + acc_name + "'");
    }
    return Automaton{std::move(ts), std::move(condition)};
}

// ---------------------------------------------------------------- DOT

namespace {

std::string dot_escape(std::string_view s) {
    std::string out;
    for (char c : s) {
        if (c == '"' || c == '\\') out += '\\';
        out += c;
    }
    return out;
}

}  // namespace

std::string emit_dot(const TransitionSystem& ts, std::optional<Transition> dashed, const AcceptanceCondition* condition) {
    std::ostringstream out;
    out << "digraph ts {\n  rankdir=LR;\n  node [shape=circle];\n  init [shape=point];\n";
    for (StateId q = 0; q < ts.num_states(); ++q) out << "  s" << q << " [label=\"" << dot_escape(ts.label(q)) << "\"];\n";
    out << "  init -> s" << ts.initial() << ";\n";
    for (StateId q = 0; q < ts.num_states(); ++q) {
        for (Symbol a = 0; a < ts.num_symbols(); ++a) {
            if (!ts.defined(q, a)) continue;
            std::string label = ts.alphabet().name(a);
            if (condition) {
                const auto marks = marks_of(*condition, ts.index({q, a}));
                if (std::holds_alternative<ParityCondition>(*condition)) {
                    if (!marks.empty()) label += " : " + std::to_string(marks[0]);
                } else if (!marks.empty()) {
                    label += " {";
                    for (std::size_t i = 0; i < marks.size(); ++i) label += (i ? "," : "") + std::to_string(marks[i]);
                    label += "}";
                }
            }
            out << "  s" << q << " -> s" << ts.successor(q, a) << " [label=\"" << dot_escape(label) << "\"";
            if (dashed && dashed->state == q && dashed->symbol == a) out << ", style=dashed";
            out << "];\n";
        }
    }
    out << "}\n";
    return out.str();
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(ErrorKind::InvalidArgument, "cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_file(const std::string& path, std::string_view contents) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error(ErrorKind::InvalidArgument, "cannot write '" + path + "'");
    out << contents;
}

}  // namespace omega
