#include "omega/condition.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "omega/error.hpp"

namespace omega {

std::string_view to_string(AcceptanceType type) {
    switch (type) {
        case AcceptanceType::Buchi: return "buchi";
        case AcceptanceType::GenBuchi: return "genbuchi";
        case AcceptanceType::Parity: return "parity";
        case AcceptanceType::Rabin: return "rabin";
        case AcceptanceType::Muller: return "muller";
    }
    return "unknown";
}

AcceptanceType parse_acceptance_type(std::string_view name) {
    if (name == "buchi") return AcceptanceType::Buchi;
    if (name == "genbuchi") return AcceptanceType::GenBuchi;
    if (name == "parity") return AcceptanceType::Parity;
    if (name == "rabin") return AcceptanceType::Rabin;
    if (name == "muller") return AcceptanceType::Muller;
    throw Error(ErrorKind::UnsupportedType, "unknown acceptance type '" + std::string(name) + "'");
}

AcceptanceType type_of(const AcceptanceCondition& c) { return static_cast<AcceptanceType>(c.index()); }

namespace {

bool intersects(const TransitionSet& a, const TransitionSet& b) {
    if (a.size() != b.size()) throw Error(ErrorKind::InvalidCondition, "transition set universe mismatch");
    return a.intersects(b);
}

}  // namespace

bool satisfies(const TransitionSet& x, const AcceptanceCondition& c) {
    if (x.none()) throw Error(ErrorKind::EmptyInfinitySet, "infinity sets are never empty");
    return std::visit(
        [&](const auto& cond) -> bool {
            using T = std::decay_t<decltype(cond)>;
            if constexpr (std::is_same_v<T, BuchiCondition>) {
                return intersects(x, cond.accepting);
            } else if constexpr (std::is_same_v<T, GenBuchiCondition>) {
                return std::all_of(cond.components.begin(), cond.components.end(),
                                   [&](const TransitionSet& f) { return intersects(x, f); });
            } else if constexpr (std::is_same_v<T, ParityCondition>) {
                Priority least = kNoPriority;
                for (auto t = x.find_first(); t != TransitionSet::npos; t = x.find_next(t)) {
                    if (t >= cond.priority.size() || cond.priority[t] == kNoPriority)
                        throw Error(ErrorKind::InvalidCondition, "parity condition undefined on a visited transition");
                    least = std::min(least, cond.priority[t]);
                }
                return least % 2 == 0;
            } else if constexpr (std::is_same_v<T, RabinCondition>) {
                return std::any_of(cond.pairs.begin(), cond.pairs.end(), [&](const RabinPair& p) {
                    return !intersects(x, p.fin) && intersects(x, p.inf);
                });
            } else {
                return std::find(cond.accepting.begin(), cond.accepting.end(), x) != cond.accepting.end();
            }
        },
        c);
}

bool accepts(const Automaton& a, const OmegaWord& w) { return accepts_from(a, a.ts.initial(), w); }

bool accepts_from(const Automaton& a, StateId from, const OmegaWord& w) {
    auto r = run_from(a.ts, from, w);
    if (const auto* inf = std::get_if<InfiniteRun>(&r)) return satisfies(inf->infinity_set, a.condition);
    return false;
}

std::size_t condition_size(const AcceptanceCondition& c) {
    return std::visit(
        [](const auto& cond) -> std::size_t {
            using T = std::decay_t<decltype(cond)>;
            if constexpr (std::is_same_v<T, BuchiCondition>) {
                return 1;
            } else if constexpr (std::is_same_v<T, GenBuchiCondition>) {
                return cond.components.size();
            } else if constexpr (std::is_same_v<T, ParityCondition>) {
                std::set<Priority> used;
                for (Priority p : cond.priority)
                    if (p != kNoPriority) used.insert(p);
                return used.size();
            } else if constexpr (std::is_same_v<T, RabinCondition>) {
                return cond.pairs.size();
            } else {
                return cond.accepting.size();
            }
        },
        c);
}

void normalize_family(std::vector<TransitionSet>& family) {
    std::sort(family.begin(), family.end(), canonical_less);
    family.erase(std::unique(family.begin(), family.end()), family.end());
}

PartialCondition PartialCondition::make(std::vector<TransitionSet> positive, std::vector<TransitionSet> negative) {
    normalize_family(positive);
    normalize_family(negative);
    return PartialCondition{std::move(positive), std::move(negative)};
}

bool PartialCondition::consistent() const {
    for (const auto& p : positive)
        if (std::binary_search(negative.begin(), negative.end(), p, canonical_less)) return false;
    return true;
}

int PartialCondition::classify(const TransitionSet& x) const {
    if (std::binary_search(positive.begin(), positive.end(), x, canonical_less)) return 0;
    if (std::binary_search(negative.begin(), negative.end(), x, canonical_less)) return 1;
    return -1;
}

std::variant<PartialCondition, ConflictReport> induced_partial_condition(const TransitionSystem& ts, const Sample& s) {
    std::vector<TransitionSet> h0, h1;
    // escaping words keyed by (escape state, exit string); exit strings are normalized
    std::map<std::pair<StateId, OmegaWord>, const OmegaWord*> escaping_positive;
    std::vector<std::pair<TransitionSet, const OmegaWord*>> witnesses;

    for (const auto& w : s.positive) {
        auto r = run(ts, w);
        if (auto* inf = std::get_if<InfiniteRun>(&r)) {
            witnesses.emplace_back(inf->infinity_set, &w);
            h0.push_back(std::move(inf->infinity_set));
        } else {
            auto& e = std::get<EscapingRun>(r);
            escaping_positive.emplace(std::make_pair(e.state, std::move(e.exit_string)), &w);
        }
    }
    std::sort(witnesses.begin(), witnesses.end(),
              [](const auto& a, const auto& b) { return canonical_less(a.first, b.first); });

    for (const auto& w : s.negative) {
        auto r = run(ts, w);
        if (auto* inf = std::get_if<InfiniteRun>(&r)) {
            auto it = std::lower_bound(witnesses.begin(), witnesses.end(), inf->infinity_set,
                                       [](const auto& a, const TransitionSet& x) { return canonical_less(a.first, x); });
            if (it != witnesses.end() && it->first == inf->infinity_set)
                return ConflictReport{ConflictReport::Kind::SharedInfinitySet, *it->second, w};
            h1.push_back(std::move(inf->infinity_set));
        } else {
            auto& e = std::get<EscapingRun>(r);
            auto it = escaping_positive.find(std::make_pair(e.state, e.exit_string));
            if (it != escaping_positive.end())
                return ConflictReport{ConflictReport::Kind::Indistinguishable, *it->second, w};
        }
    }
    return PartialCondition::make(std::move(h0), std::move(h1));
}

}  // namespace omega
