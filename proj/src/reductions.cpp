#include "omega/reductions.hpp"

#include <set>
#include <sstream>

#include "omega/error.hpp"

namespace omega {

DiGraph parse_graph(std::string_view text) {
    DiGraph g;
    bool header = false;
    std::set<std::pair<std::size_t, std::size_t>> seen;
    std::istringstream in{std::string(text)};
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
        std::istringstream fields(line);
        std::string first;
        if (!(fields >> first)) continue;
        auto fail = [&](const std::string& what) {
            throw Error(ErrorKind::ParseError, "graph line " + std::to_string(line_no) + ": " + what);
        };
        if (!header) {
            long long n = 0;
            if (first != "n" || !(fields >> n) || n < 1) fail("expected 'n <count>' with count ≥ 1");
            g.n = static_cast<std::size_t>(n);
            header = true;
        } else {
            long long i = 0, j = 0;
            try {
                i = std::stoll(first);
            } catch (const std::exception&) {
                fail("expected an edge 'i j'");
            }
            if (!(fields >> j)) fail("expected an edge 'i j'");
            if (i < 1 || j < 1 || static_cast<std::size_t>(i) > g.n || static_cast<std::size_t>(j) > g.n)
                fail("vertex out of range");
            if (i == j) fail("self-loop on vertex " + std::to_string(i));
            auto e = std::make_pair(static_cast<std::size_t>(i), static_cast<std::size_t>(j));
            if (seen.insert(e).second) g.edges.push_back(e);
        }
        std::string extra;
        if (fields >> extra) fail("unexpected trailing text '" + extra + "'");
    }
    if (!header) throw Error(ErrorKind::ParseError, "graph is missing the 'n <count>' line");
    return g;
}

std::string format_graph(const DiGraph& g) {
    std::string out = "n " + std::to_string(g.n) + "\n";
    for (const auto& [i, j] : g.edges) out += std::to_string(i) + " " + std::to_string(j) + "\n";
    return out;
}

TransitionSystem star_ts(std::size_t n) {
    if (n < 1) throw Error(ErrorKind::InvalidArgument, "star needs at least one ray");
    std::vector<std::string> symbols;
    for (std::size_t i = 1; i <= n; ++i) symbols.push_back(std::to_string(i));
    TransitionSystem ts(Alphabet(std::move(symbols)), n + 1, 0);
    for (std::size_t i = 1; i <= n; ++i) {
        const auto a = static_cast<Symbol>(i - 1);
        ts.set_transition(0, a, static_cast<StateId>(i));
        ts.set_transition(static_cast<StateId>(i), a, 0);
    }
    return ts;
}

TransitionSet star_spoke(const TransitionSystem& star, std::size_t i) {
    TransitionSet s = star.empty_set();
    const auto a = static_cast<Symbol>(i - 1);
    s.set(star.index({0, a}));
    s.set(star.index({static_cast<StateId>(i), a}));
    return s;
}

namespace {

void validate(const DiGraph& g) {
    if (g.n < 1) throw Error(ErrorKind::InvalidArgument, "graph needs at least one vertex");
    for (const auto& [i, j] : g.edges) {
        if (i < 1 || j < 1 || i > g.n || j > g.n) throw Error(ErrorKind::InvalidArgument, "edge endpoint out of range");
        if (i == j) throw Error(ErrorKind::InvalidArgument, "graph has a self-loop");
    }
}

std::pair<std::vector<OmegaWord>, std::vector<OmegaWord>> star_words(const DiGraph& g) {
    std::vector<OmegaWord> edge_words, vertex_words;
    for (const auto& [i, j] : g.edges) {
        const auto a = static_cast<Symbol>(i - 1);
        const auto b = static_cast<Symbol>(j - 1);
        edge_words.push_back({{}, {a, a, b, b}});
    }
    for (std::size_t i = 1; i <= g.n; ++i) vertex_words.push_back({{}, {static_cast<Symbol>(i - 1)}});
    return {edge_words, vertex_words};
}

}  // namespace

ReductionInstance coloring_to_genbuchi_instance(const DiGraph& g) {
    validate(g);
    auto ts = star_ts(g.n);
    auto [edges, vertices] = star_words(g);
    auto sample = make_sample(ts.alphabet(), std::move(edges), std::move(vertices));
    return {std::move(ts), std::move(sample)};
}

ReductionInstance coloring_to_rabin_instance(const DiGraph& g) {
    validate(g);
    auto ts = star_ts(g.n);
    auto [edges, vertices] = star_words(g);
    auto sample = make_sample(ts.alphabet(), std::move(vertices), std::move(edges));
    return {std::move(ts), std::move(sample)};
}

bool valid_coloring(const DiGraph& g, const std::vector<std::size_t>& colors) {
    if (colors.size() != g.n) return false;
    for (const auto& [i, j] : g.edges)
        if (colors[i - 1] == colors[j - 1]) return false;
    return true;
}

std::vector<std::size_t> decode_coloring(const AcceptanceCondition& c, const DiGraph& g) {
    validate(g);
    const auto star = star_ts(g.n);
    std::vector<std::size_t> colors(g.n);
    for (std::size_t i = 1; i <= g.n; ++i) {
        const TransitionSet spoke = star_spoke(star, i);
        std::size_t color = static_cast<std::size_t>(-1);
        if (const auto* gb = std::get_if<GenBuchiCondition>(&c)) {
            for (std::size_t k = 0; k < gb->components.size() && color == static_cast<std::size_t>(-1); ++k) {
                if (gb->components[k].size() != spoke.size())
                    throw Error(ErrorKind::InvalidCondition, "condition is not over the star system");
                if (!gb->components[k].intersects(spoke)) color = k;
            }
        } else if (const auto* rabin = std::get_if<RabinCondition>(&c)) {
            for (std::size_t k = 0; k < rabin->pairs.size() && color == static_cast<std::size_t>(-1); ++k) {
                const auto& pair = rabin->pairs[k];
                if (pair.fin.size() != spoke.size() || pair.inf.size() != spoke.size())
                    throw Error(ErrorKind::InvalidCondition, "condition is not over the star system");
                if (!pair.fin.intersects(spoke) && pair.inf.intersects(spoke)) color = k;
            }
        } else {
            throw Error(ErrorKind::InvalidCondition, "only generalized Büchi and Rabin conditions encode colorings");
        }
        if (color == static_cast<std::size_t>(-1))
            throw Error(ErrorKind::InvalidCondition, "vertex " + std::to_string(i) + " receives no color");
        colors[i - 1] = color;
    }
    if (!valid_coloring(g, colors)) throw Error(ErrorKind::InvalidCondition, "decoded coloring has a monochromatic edge");
    return colors;
}

}  // namespace omega
