#include "omega/oracle.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <deque>
#include <functional>
#include <map>
#include <set>

#include "omega/error.hpp"
#include "omega/scc.hpp"
#include "clauses.hpp"

namespace omega {

namespace {

using Mask = std::uint64_t;

constexpr Mask bit(std::size_t i) { return Mask{1} << i; }

/// Transition sets of a small universe as bit masks over its members.
struct Compact {
    std::vector<std::size_t> ids;
    std::size_t size = 0;

    explicit Compact(const TransitionSet& universe) : ids(members(universe)), size(universe.size()) {}

    Mask encode(const TransitionSet& x) const {
        if (x.size() != size) throw Error(ErrorKind::InvalidArgument, "transition set universe mismatch");
        Mask m = 0;
        std::size_t covered = 0;
        for (std::size_t i = 0; i < ids.size(); ++i) {
            if (x.test(ids[i])) {
                m |= bit(i);
                ++covered;
            }
        }
        if (covered != x.count()) throw Error(ErrorKind::InvalidArgument, "transition set outside the universe");
        return m;
    }

    TransitionSet decode(Mask m) const {
        TransitionSet x(size);
        for (std::size_t i = 0; i < ids.size(); ++i)
            if (m & bit(i)) x.set(ids[i]);
        return x;
    }
};

/// Size first, then lexicographic on sorted members.
bool canonical_mask_less(Mask a, Mask b) {
    const int pa = std::popcount(a);
    const int pb = std::popcount(b);
    if (pa != pb) return pa < pb;
    const Mask d = a ^ b;
    if (d == 0) return false;
    return (a & (d & (~d + 1))) != 0;
}

std::vector<Mask> subsets_in_canonical_order(std::size_t m) {
    std::vector<Mask> order(std::size_t{1} << m);
    for (Mask i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), canonical_mask_less);
    return order;
}

/// Smallest index in [0, n) satisfying pred, or n.
template <class Pred>
std::size_t first_index(std::size_t n, Exec exec, Pred pred) {
    if (exec == Exec::Serial) {
        for (std::size_t i = 0; i < n; ++i)
            if (pred(i)) return i;
        return n;
    }
    std::size_t best = n;
#pragma omp parallel for schedule(dynamic, 16) reduction(min : best)
    for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(n); ++i) {
        const auto idx = static_cast<std::size_t>(i);
        if (idx < best && pred(idx)) best = std::min(best, idx);
    }
    return best;
}

// ---------------------------------------------------------------- loops

struct LocalGraph {
    std::vector<std::size_t> ids;  // transition indices
    std::vector<unsigned> src, dst;
};

LocalGraph local_graph(const TransitionSystem& ts, const TransitionSet& transitions) {
    LocalGraph g;
    g.ids = members(transitions);
    std::map<StateId, unsigned> local;
    auto id = [&](StateId q) {
        auto [it, fresh] = local.emplace(q, static_cast<unsigned>(local.size()));
        return it->second;
    };
    for (std::size_t t : g.ids) {
        g.src.push_back(id(ts.transition(t).state));
        g.dst.push_back(id(ts.target(t)));
    }
    return g;
}

bool mask_strongly_connected(const LocalGraph& g, Mask m) {
    if (m == 0) return false;
    Mask states = 0;
    for (Mask r = m; r; r &= r - 1) {
        const auto i = static_cast<std::size_t>(std::countr_zero(r));
        states |= bit(g.src[i]) | bit(g.dst[i]);
    }
    const Mask start = bit(g.src[static_cast<std::size_t>(std::countr_zero(m))]);
    for (int direction = 0; direction < 2; ++direction) {
        Mask reach = start;
        bool grew = true;
        while (grew) {
            grew = false;
            for (Mask r = m; r; r &= r - 1) {
                const auto i = static_cast<std::size_t>(std::countr_zero(r));
                const unsigned from = direction == 0 ? g.src[i] : g.dst[i];
                const unsigned to = direction == 0 ? g.dst[i] : g.src[i];
                if ((reach & bit(from)) && !(reach & bit(to))) {
                    reach |= bit(to);
                    grew = true;
                }
            }
        }
        if (reach != states) return false;
    }
    return true;
}

// ---------------------------------------------------------------- brute force

struct Problem {
    std::size_t m = 0;
    std::vector<Mask> pos, neg;
};

bool hits_all(Mask f, const std::vector<Mask>& sets) {
    return std::all_of(sets.begin(), sets.end(), [f](Mask x) { return (x & f) != 0; });
}

bool misses_all(Mask f, const std::vector<Mask>& sets) {
    return std::none_of(sets.begin(), sets.end(), [f](Mask x) { return (x & f) != 0; });
}

std::optional<Mask> search_buchi(const Problem& p, Exec exec) {
    const auto order = subsets_in_canonical_order(p.m);
    const std::size_t i = first_index(order.size(), exec, [&](std::size_t idx) {
        return hits_all(order[idx], p.pos) && misses_all(order[idx], p.neg);
    });
    if (i == order.size()) return std::nullopt;
    return order[i];
}

class ParitySearch {
public:
    ParitySearch(const Problem& p, std::size_t k) : m_(p.m), k_(k), checks_(p.m) {
        for (Mask x : p.pos) add(x, 0);
        for (Mask x : p.neg) add(x, 1);
    }

    bool impossible() const { return empty_set_; }

    /// Depth-first completion of kappa[0..pos); values ascending.
    bool complete(std::size_t pos, std::vector<unsigned>& kappa, unsigned used) const {
        if (pos == m_) return true;
        for (unsigned v = 0; v <= k_; ++v) {
            const unsigned next_used = used | (1u << v);
            if (static_cast<std::size_t>(std::popcount(next_used)) > k_) continue;
            kappa[pos] = v;
            if (satisfied_at(pos, kappa) && complete(pos + 1, kappa, next_used)) return true;
        }
        return false;
    }

    /// Decodes prefix number `code` (base k+1, position 0 most significant)
    /// and checks it; returns the used-values mask or nullopt.
    std::optional<unsigned> prefix(std::size_t code, std::size_t depth, std::vector<unsigned>& kappa) const {
        unsigned used = 0;
        for (std::size_t i = depth; i-- > 0;) {
            kappa[i] = static_cast<unsigned>(code % (k_ + 1));
            code /= k_ + 1;
        }
        for (std::size_t i = 0; i < depth; ++i) {
            used |= 1u << kappa[i];
            if (static_cast<std::size_t>(std::popcount(used)) > k_ || !satisfied_at(i, kappa)) return std::nullopt;
        }
        return used;
    }

private:
    void add(Mask x, int cls) {
        if (x == 0) {
            empty_set_ = true;
            return;
        }
        const auto last = static_cast<std::size_t>(63 - std::countl_zero(x));
        checks_[last].emplace_back(x, cls);
    }

    bool satisfied_at(std::size_t pos, const std::vector<unsigned>& kappa) const {
        for (const auto& [x, cls] : checks_[pos]) {
            unsigned least = ~0u;
            for (Mask r = x; r; r &= r - 1) least = std::min(least, kappa[static_cast<std::size_t>(std::countr_zero(r))]);
            if (static_cast<int>(least % 2) != cls) return false;
        }
        return true;
    }

    std::size_t m_;
    std::size_t k_;
    std::vector<std::vector<std::pair<Mask, int>>> checks_;
    bool empty_set_ = false;
};

std::optional<std::vector<unsigned>> search_parity(const Problem& p, std::size_t k, Exec exec) {
    if (k == 0) return std::nullopt;
    ParitySearch search(p, k);
    if (search.impossible()) return std::nullopt;
    std::vector<unsigned> kappa(p.m, 0);
    if (exec == Exec::Serial || p.m == 0) {
        if (search.complete(0, kappa, 0)) return kappa;
        return std::nullopt;
    }
    std::size_t depth = 0;
    std::size_t prefixes = 1;
    while (depth < p.m && prefixes < 256) {
        prefixes *= k + 1;
        ++depth;
    }
    const std::size_t hit = first_index(prefixes, exec, [&](std::size_t code) {
        std::vector<unsigned> local(p.m, 0);
        auto used = search.prefix(code, depth, local);
        return used && search.complete(depth, local, *used);
    });
    if (hit == prefixes) return std::nullopt;
    auto used = search.prefix(hit, depth, kappa);
    search.complete(depth, kappa, *used);
    return kappa;
}

/// Lexicographically first set of `j` candidate indices whose coverage covers
/// `target`.
std::optional<std::vector<std::size_t>> search_cover(const std::vector<Mask>& coverage, Mask target, std::size_t j,
                                                     Exec exec) {
    if (j == 0) {
        if (target == 0) return std::vector<std::size_t>{};
        return std::nullopt;
    }
    const std::size_t n = coverage.size();
    if (n < j) return std::nullopt;
    std::function<bool(std::size_t, std::size_t, Mask, std::vector<std::size_t>&)> dfs =
        [&](std::size_t start, std::size_t left, Mask acc, std::vector<std::size_t>& chosen) -> bool {
        if (left == 0) return (acc & target) == target;
        for (std::size_t i = start; i + left <= n; ++i) {
            chosen.push_back(i);
            if (dfs(i + 1, left - 1, acc | coverage[i], chosen)) return true;
            chosen.pop_back();
        }
        return false;
    };
    const std::size_t first = first_index(n - j + 1, exec, [&](std::size_t i) {
        std::vector<std::size_t> chosen{i};
        return dfs(i + 1, j - 1, coverage[i], chosen);
    });
    if (first == n - j + 1) return std::nullopt;
    std::vector<std::size_t> chosen{first};
    dfs(first + 1, j - 1, coverage[first], chosen);
    return chosen;
}

Mask full_mask(std::size_t n) { return n == 64 ? ~Mask{0} : bit(n) - 1; }

struct GenBuchiCandidates {
    std::vector<Mask> sets;
    std::vector<Mask> coverage;
};

GenBuchiCandidates genbuchi_candidates(const Problem& p, Exec exec) {
    const auto order = subsets_in_canonical_order(p.m);
    std::vector<Mask> cover(order.size(), 0);
    std::vector<char> valid(order.size(), 0);
    auto eval = [&](std::size_t i) {
        const Mask f = order[i];
        if (!hits_all(f, p.pos)) return;
        valid[i] = 1;
        Mask c = 0;
        for (std::size_t j = 0; j < p.neg.size(); ++j)
            if ((p.neg[j] & f) == 0) c |= bit(j);
        cover[i] = c;
    };
    if (exec == Exec::Serial) {
        for (std::size_t i = 0; i < order.size(); ++i) eval(i);
    } else {
#pragma omp parallel for schedule(static)
        for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(order.size()); ++i) eval(static_cast<std::size_t>(i));
    }
    GenBuchiCandidates out;
    std::set<Mask> seen;
    for (std::size_t i = 0; i < order.size(); ++i) {
        if (valid[i] && seen.insert(cover[i]).second) {
            out.sets.push_back(order[i]);
            out.coverage.push_back(cover[i]);
        }
    }
    return out;
}

struct RabinCandidates {
    std::vector<std::pair<Mask, Mask>> pairs;
    std::vector<Mask> coverage;
};

RabinCandidates rabin_candidates(const Problem& p, Exec exec) {
    std::size_t total = 1;
    for (std::size_t i = 0; i < p.m; ++i) total *= 3;
    std::vector<Mask> cover(total, 0);
    auto decode = [&](std::size_t code) {
        Mask e = 0, f = 0;
        for (std::size_t i = 0; i < p.m; ++i, code /= 3) {
            if (code % 3 == 1) e |= bit(i);
            if (code % 3 == 2) f |= bit(i);
        }
        return std::make_pair(e, f);
    };
    auto eval = [&](std::size_t code) {
        const auto [e, f] = decode(code);
        if (f == 0) return;
        for (Mask n : p.neg)
            if ((n & e) == 0 && (n & f) != 0) return;
        Mask c = 0;
        for (std::size_t j = 0; j < p.pos.size(); ++j)
            if ((p.pos[j] & e) == 0 && (p.pos[j] & f) != 0) c |= bit(j);
        cover[code] = c;
    };
    if (exec == Exec::Serial) {
        for (std::size_t i = 0; i < total; ++i) eval(i);
    } else {
#pragma omp parallel for schedule(static)
        for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(total); ++i) eval(static_cast<std::size_t>(i));
    }
    RabinCandidates out;
    std::set<Mask> seen;
    for (std::size_t code = 0; code < total; ++code) {
        if (cover[code] != 0 && seen.insert(cover[code]).second) {
            out.pairs.push_back(decode(code));
            out.coverage.push_back(cover[code]);
        }
    }
    return out;
}

// ---------------------------------------------------------------- products

struct Product {
    TransitionSystem ts;
    std::vector<std::pair<StateId, StateId>> pairs;
};

Product build_product(const TransitionSystem& a, const TransitionSystem& b) {
    Product p;
    p.ts = TransitionSystem(a.alphabet(), 1, 0);
    std::map<std::pair<StateId, StateId>, StateId> ids;
    auto label = [&](StateId x, StateId y) { return "(" + a.label(x) + "," + b.label(y) + ")"; };
    p.pairs.push_back({a.initial(), b.initial()});
    ids[p.pairs[0]] = 0;
    p.ts.set_label(0, label(a.initial(), b.initial()));
    for (std::size_t i = 0; i < p.pairs.size(); ++i) {
        const auto [x, y] = p.pairs[i];
        for (Symbol s = 0; s < a.num_symbols(); ++s) {
            const StateId nx = a.successor(x, s);
            const StateId ny = b.successor(y, s);
            if (nx == kNoState || ny == kNoState) continue;
            auto [it, fresh] = ids.emplace(std::make_pair(nx, ny), static_cast<StateId>(p.pairs.size()));
            if (fresh) {
                p.pairs.push_back({nx, ny});
                p.ts.add_state(label(nx, ny));
            }
            p.ts.set_transition(static_cast<StateId>(i), s, it->second);
        }
    }
    return p;
}

std::size_t side_index(const Product& p, const TransitionSystem& side, bool first, std::size_t t) {
    const Transition tr = p.ts.transition(t);
    const StateId q = first ? p.pairs[tr.state].first : p.pairs[tr.state].second;
    return side.index({q, tr.symbol});
}

/// Product transitions whose projection lies in `s`.
TransitionSet lift(const Product& p, const TransitionSystem& side, bool first, const TransitionSet& s) {
    TransitionSet out = p.ts.empty_set();
    const TransitionSet all = p.ts.defined_transitions();
    for (auto t = all.find_first(); t != TransitionSet::npos; t = all.find_next(t))
        if (s.test(side_index(p, side, first, t))) out.set(t);
    return out;
}

TransitionSet project(const Product& p, const TransitionSystem& side, bool first, const TransitionSet& x) {
    TransitionSet out = side.empty_set();
    for (auto t = x.find_first(); t != TransitionSet::npos; t = x.find_next(t)) out.set(side_index(p, side, first, t));
    return out;
}

OmegaWord product_witness(const Product& p, const TransitionSet& loop) {
    const auto access = access_words(p.ts);
    const StateId q = p.ts.transition(loop.find_first()).state;
    return word_visiting_all(p.ts, loop, *access[q]);
}

std::vector<detail::Clause> product_clauses(const Product& p, const Automaton& a, bool first, bool accepting) {
    return detail::clauses(
        a.condition, a.ts.defined_transitions(), [&](const TransitionSet& s) { return lift(p, a.ts, first, s); },
        p.ts.empty_set(), accepting);
}

void require_same_alphabet(const Automaton& a1, const Automaton& a2) {
    if (!(a1.ts.alphabet() == a2.ts.alphabet()))
        throw Error(ErrorKind::AlphabetMismatch, "automata are over different alphabets");
}

}  // namespace

LoopCatalog enumerate_loops(const TransitionSystem& ts, const OracleLimits& limits, Exec exec) {
    const TransitionSet reachable = reachable_transitions(ts);
    const std::size_t m = reachable.count();
    if (m > limits.loop_universe || m > 30)
        throw Error(ErrorKind::UniverseTooLarge, std::to_string(m) + " reachable transitions exceed the loop guard");
    const LocalGraph g = local_graph(ts, reachable);
    const std::size_t total = std::size_t{1} << m;
    std::vector<char> flag(total, 0);
    if (exec == Exec::Serial) {
        for (std::size_t x = 1; x < total; ++x) flag[x] = mask_strongly_connected(g, x) ? 1 : 0;
    } else {
#pragma omp parallel for schedule(dynamic, 256)
        for (std::ptrdiff_t x = 1; x < static_cast<std::ptrdiff_t>(total); ++x)
            flag[static_cast<std::size_t>(x)] = mask_strongly_connected(g, static_cast<Mask>(x)) ? 1 : 0;
    }
    LoopCatalog catalog;
    catalog.guard = limits.loop_universe;
    for (std::size_t x = 1; x < total; ++x) {
        if (!flag[x]) continue;
        TransitionSet set = ts.empty_set();
        for (std::size_t i = 0; i < m; ++i)
            if (x & bit(i)) set.set(g.ids[i]);
        catalog.loops.push_back(std::move(set));
    }
    std::sort(catalog.loops.begin(), catalog.loops.end(), canonical_less);
    return catalog;
}

std::optional<AcceptanceCondition> brute_force_consistency(const TransitionSet& universe, const PartialCondition& h,
                                                           AcceptanceType type, std::optional<std::size_t> k,
                                                           const OracleLimits& limits, Exec exec) {
    if (!h.consistent())
        throw Error(ErrorKind::InconsistentPartialCondition, "a transition set is both positive and negative");
    const Compact compact(universe);
    const std::size_t m = compact.ids.size();
    const bool light = type == AcceptanceType::Buchi || type == AcceptanceType::Parity;
    const std::size_t guard = light ? limits.buchi_parity_universe : limits.genbuchi_rabin_universe;
    if (m > guard || m > 20)
        throw Error(ErrorKind::UniverseTooLarge,
                    std::to_string(m) + " transitions exceed the brute-force guard of " + std::to_string(guard));
    if (h.positive.size() > 64 || h.negative.size() > 64)
        throw Error(ErrorKind::UniverseTooLarge, "too many sets in the partial condition");

    Problem p;
    p.m = m;
    for (const auto& x : h.positive) p.pos.push_back(compact.encode(x));
    for (const auto& x : h.negative) p.neg.push_back(compact.encode(x));

    switch (type) {
        case AcceptanceType::Buchi: {
            if (k && *k == 0) return std::nullopt;
            if (auto f = search_buchi(p, exec)) return AcceptanceCondition{BuchiCondition{compact.decode(*f)}};
            return std::nullopt;
        }
        case AcceptanceType::Parity: {
            const std::size_t max_k = k ? *k : std::max<std::size_t>(m, 1);
            for (std::size_t j = 1; j <= max_k; ++j) {
                if (auto kappa = search_parity(p, j, exec)) {
                    ParityCondition c{std::vector<Priority>(universe.size(), kNoPriority)};
                    for (std::size_t i = 0; i < m; ++i) c.priority[compact.ids[i]] = (*kappa)[i];
                    return AcceptanceCondition{std::move(c)};
                }
            }
            return std::nullopt;
        }
        case AcceptanceType::GenBuchi: {
            const auto cand = genbuchi_candidates(p, exec);
            const Mask target = full_mask(p.neg.size());
            const std::size_t lo = (k && *k == 0) ? 0 : 1;
            const std::size_t hi = k ? *k : std::max<std::size_t>(p.neg.size(), 1);
            for (std::size_t j = lo; j <= hi; ++j) {
                if (auto chosen = search_cover(cand.coverage, target, j, exec)) {
                    GenBuchiCondition c;
                    for (std::size_t i : *chosen) c.components.push_back(compact.decode(cand.sets[i]));
                    return AcceptanceCondition{std::move(c)};
                }
            }
            return std::nullopt;
        }
        case AcceptanceType::Rabin: {
            const auto cand = rabin_candidates(p, exec);
            const Mask target = full_mask(p.pos.size());
            const std::size_t hi = k ? *k : p.pos.size();
            for (std::size_t j = 0; j <= hi; ++j) {
                if (auto chosen = search_cover(cand.coverage, target, j, exec)) {
                    RabinCondition c;
                    for (std::size_t i : *chosen)
                        c.pairs.push_back({compact.decode(cand.pairs[i].first), compact.decode(cand.pairs[i].second)});
                    return AcceptanceCondition{std::move(c)};
                }
            }
            return std::nullopt;
        }
        case AcceptanceType::Muller:
            return AcceptanceCondition{MullerCondition{h.positive}};
    }
    throw Error(ErrorKind::UnsupportedType, "unknown acceptance type");
}

std::optional<AcceptanceCondition> brute_force_consistency(const TransitionSystem& ts, const PartialCondition& h,
                                                           AcceptanceType type, std::optional<std::size_t> k,
                                                           const OracleLimits& limits, Exec exec) {
    return brute_force_consistency(ts.defined_transitions(), h, type, k, limits, exec);
}

Automaton complete_with_sink(const Automaton& a) {
    if (a.ts.complete()) return a;
    Automaton out{a.ts, a.condition};
    const StateId sink = out.ts.add_state("⊥");
    for (StateId q = 0; q < out.ts.num_states(); ++q)
        for (Symbol s = 0; s < out.ts.num_symbols(); ++s)
            if (!out.ts.defined(q, s)) out.ts.set_transition(q, s, sink);
    const std::size_t n = out.ts.universe_size();
    std::visit(
        [&](auto& cond) {
            using T = std::decay_t<decltype(cond)>;
            if constexpr (std::is_same_v<T, BuchiCondition>) {
                cond.accepting.resize(n);
            } else if constexpr (std::is_same_v<T, GenBuchiCondition>) {
                for (auto& f : cond.components) f.resize(n);
            } else if constexpr (std::is_same_v<T, ParityCondition>) {
                const std::size_t old = cond.priority.size();
                cond.priority.resize(n, kNoPriority);
                for (std::size_t t = 0; t < n; ++t)
                    if (t >= old || cond.priority[t] == kNoPriority) cond.priority[t] = 1;
            } else if constexpr (std::is_same_v<T, RabinCondition>) {
                for (auto& pair : cond.pairs) {
                    pair.fin.resize(n);
                    pair.inf.resize(n);
                }
            } else {
                for (auto& f : cond.accepting) f.resize(n);
            }
        },
        out.condition);
    return out;
}

Automaton reroot(const Automaton& a, StateId q) {
    Automaton out = a;
    out.ts.set_initial(q);
    return out;
}

std::optional<OmegaWord> equivalence(const Automaton& a1, const Automaton& a2) {
    require_same_alphabet(a1, a2);
    if (type_of(a1.condition) == AcceptanceType::Muller || type_of(a2.condition) == AcceptanceType::Muller)
        return equivalence_exhaustive(a1, a2);
    const Automaton c1 = complete_with_sink(a1);
    const Automaton c2 = complete_with_sink(a2);
    const Product p = build_product(c1.ts, c2.ts);
    const TransitionSet all = p.ts.defined_transitions();
    const auto acc1 = product_clauses(p, c1, true, true);
    const auto rej1 = product_clauses(p, c1, true, false);
    const auto acc2 = product_clauses(p, c2, false, true);
    const auto rej2 = product_clauses(p, c2, false, false);
    for (const auto* pairing : {&acc1, &acc2}) {
        const auto& rejecting = pairing == &acc1 ? rej2 : rej1;
        for (const auto& x : *pairing) {
            for (const auto& y : rejecting) {
                const detail::Clause c = detail::conjoin(x, y);
                if (auto loop = detail::find_loop(p.ts, all - c.fin, c)) return product_witness(p, *loop);
            }
        }
    }
    return std::nullopt;
}

std::optional<OmegaWord> equivalence_exhaustive(const Automaton& a1, const Automaton& a2, const OracleLimits& limits) {
    require_same_alphabet(a1, a2);
    const Automaton c1 = complete_with_sink(a1);
    const Automaton c2 = complete_with_sink(a2);
    const Product p = build_product(c1.ts, c2.ts);
    if (p.ts.num_transitions() > limits.product_transitions)
        throw Error(ErrorKind::UniverseTooLarge,
                    "product has " + std::to_string(p.ts.num_transitions()) + " transitions, guard is " +
                        std::to_string(limits.product_transitions));
    OracleLimits loop_limits = limits;
    loop_limits.loop_universe = limits.product_transitions;
    for (const auto& loop : enumerate_loops(p.ts, loop_limits).loops) {
        const bool x = satisfies(project(p, c1.ts, true, loop), c1.condition);
        const bool y = satisfies(project(p, c2.ts, false, loop), c2.condition);
        if (x != y) return product_witness(p, loop);
    }
    return std::nullopt;
}

std::optional<OmegaWord> parity_equiv_fast(const Automaton& a1, const Automaton& a2) {
    require_same_alphabet(a1, a2);
    if (type_of(a1.condition) != AcceptanceType::Parity || type_of(a2.condition) != AcceptanceType::Parity)
        throw Error(ErrorKind::UnsupportedType, "parity_equiv_fast needs two parity automata");
    const Automaton c1 = complete_with_sink(a1);
    const Automaton c2 = complete_with_sink(a2);
    const Product p = build_product(c1.ts, c2.ts);
    const auto& k1 = std::get<ParityCondition>(c1.condition).priority;
    const auto& k2 = std::get<ParityCondition>(c2.condition).priority;
    const TransitionSet all = p.ts.defined_transitions();
    const auto ts_members = members(all);
    std::vector<Priority> pri1(p.ts.universe_size(), kNoPriority), pri2(p.ts.universe_size(), kNoPriority);
    for (std::size_t t : ts_members) {
        pri1[t] = k1[side_index(p, c1.ts, true, t)];
        pri2[t] = k2[side_index(p, c2.ts, false, t)];
    }
    std::set<Priority> used1, used2;
    for (std::size_t t : ts_members) {
        used1.insert(pri1[t]);
        used2.insert(pri2[t]);
    }
    auto search = [&](const std::vector<Priority>& even_side, const std::set<Priority>& even_used,
                      const std::vector<Priority>& odd_side, const std::set<Priority>& odd_used) -> std::optional<OmegaWord> {
        for (Priority c1p : even_used) {
            if (c1p % 2 != 0) continue;
            for (Priority c2p : odd_used) {
                if (c2p % 2 != 1) continue;
                TransitionSet allowed = p.ts.empty_set();
                for (std::size_t t : ts_members)
                    if (even_side[t] >= c1p && odd_side[t] >= c2p) allowed.set(t);
                for (const auto& s : scc_transition_sets(p.ts, allowed)) {
                    bool has1 = false, has2 = false;
                    for (auto t = s.find_first(); t != TransitionSet::npos; t = s.find_next(t)) {
                        has1 = has1 || even_side[t] == c1p;
                        has2 = has2 || odd_side[t] == c2p;
                    }
                    if (has1 && has2) return product_witness(p, s);
                }
            }
        }
        return std::nullopt;
    };
    if (auto w = search(pri1, used1, pri2, used2)) return w;
    return search(pri2, used2, pri1, used1);
}

}  // namespace omega
