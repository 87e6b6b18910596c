#include "omega/consistency.hpp"

#include <algorithm>

#include "omega/error.hpp"

namespace omega {

namespace {

void require_consistent(const PartialCondition& h, const TransitionSet& universe) {
    if (!h.consistent())
        throw Error(ErrorKind::InconsistentPartialCondition, "a transition set is both positive and negative");
    for (const auto* family : {&h.positive, &h.negative})
        for (const auto& x : *family)
            if (x.size() != universe.size() || !x.is_subset_of(universe))
                throw Error(ErrorKind::InvalidArgument, "partial condition set outside the universe");
}

/// ⊆-maximal members of `family` (input order preserved).
std::vector<TransitionSet> maximal_sets(const std::vector<TransitionSet>& family) {
    std::vector<TransitionSet> out;
    for (std::size_t i = 0; i < family.size(); ++i) {
        bool maximal = true;
        for (std::size_t j = 0; j < family.size() && maximal; ++j)
            if (i != j && family[i] != family[j] && family[i].is_subset_of(family[j])) maximal = false;
        if (maximal && std::find(out.begin(), out.end(), family[i]) == out.end()) out.push_back(family[i]);
    }
    return out;
}

}  // namespace

std::optional<BuchiCondition> buchi_cons(const PartialCondition& h, const TransitionSet& universe) {
    require_consistent(h, universe);
    TransitionSet negative_union(universe.size());
    for (const auto& n : h.negative) negative_union |= n;
    for (const auto& p : h.positive)
        if (p.is_subset_of(negative_union)) return std::nullopt;
    return BuchiCondition{universe - negative_union};
}

std::optional<GenBuchiCondition> gen_buchi_cons(const PartialCondition& h, const TransitionSet& universe) {
    require_consistent(h, universe);
    const auto maximal = maximal_sets(h.negative);
    if (maximal.empty()) return GenBuchiCondition{{universe}};
    for (const auto& p : h.positive)
        for (const auto& n : maximal)
            if (p.is_subset_of(n)) return std::nullopt;
    GenBuchiCondition c;
    for (const auto& n : maximal) c.components.push_back(universe - n);
    return c;
}

std::optional<ZielonkaPath> zielonka_path(const PartialCondition& h, const TransitionSet& universe) {
    require_consistent(h, universe);
    int sigma = h.classify(universe);
    if (sigma < 0) throw Error(ErrorKind::PreconditionViolated, "the universe must be classified");
    ZielonkaPath path;
    path.entries.emplace_back(universe, sigma);
    TransitionSet current = universe;
    while (true) {
        const auto& opposite = sigma == 0 ? h.negative : h.positive;
        TransitionSet next(universe.size());
        for (const auto& x : opposite)
            if (x.is_subset_of(current)) next |= x;
        if (next == current) return std::nullopt;
        if (next.none()) return path;
        sigma = 1 - sigma;
        path.entries.emplace_back(next, sigma);
        current = std::move(next);
    }
}

ParityCondition priorities_from_path(const ZielonkaPath& path) {
    ParityCondition c;
    if (path.entries.empty()) return c;
    const auto& z0 = path.entries.front().first;
    const auto sigma0 = static_cast<Priority>(path.entries.front().second);
    c.priority.assign(z0.size(), kNoPriority);
    for (std::size_t i = 0; i < path.entries.size(); ++i) {
        const auto& z = path.entries[i].first;
        for (auto t = z.find_first(); t != TransitionSet::npos; t = z.find_next(t))
            c.priority[t] = sigma0 + static_cast<Priority>(i);
    }
    return c;
}

std::optional<ParityResult> parity_cons(const PartialCondition& h, const TransitionSet& universe) {
    require_consistent(h, universe);
    if (universe.none()) {
        // No transitions: no set can be classified, the empty mapping is consistent.
        return ParityResult{{}, ParityCondition{std::vector<Priority>(universe.size(), kNoPriority)}};
    }
    std::optional<ZielonkaPath> best;
    if (h.classify(universe) >= 0) {
        best = zielonka_path(h, universe);
    } else {
        auto with = [&](bool positive) {
            PartialCondition extended = h;
            (positive ? extended.positive : extended.negative).push_back(universe);
            normalize_family(positive ? extended.positive : extended.negative);
            return zielonka_path(extended, universe);
        };
        auto p = with(true);
        auto n = with(false);
        if (p && n)
            best = n->length() < p->length() ? std::move(n) : std::move(p);
        else
            best = p ? std::move(p) : std::move(n);
    }
    if (!best) return std::nullopt;
    auto condition = priorities_from_path(*best);
    return ParityResult{std::move(*best), std::move(condition)};
}

std::optional<RabinCondition> rabin_cons(const PartialCondition& h, const TransitionSet& universe) {
    require_consistent(h, universe);
    RabinCondition c;
    for (const auto& p : h.positive) {
        std::vector<TransitionSet> inside;
        for (const auto& n : h.negative)
            if (n.is_subset_of(p)) inside.push_back(n);
        TransitionSet covered(universe.size());
        for (const auto& n : maximal_sets(inside)) covered |= n;
        TransitionSet f = p - covered;
        if (f.none()) return std::nullopt;
        c.pairs.push_back({universe - p, std::move(f)});
    }
    return c;
}

std::optional<AcceptanceCondition> solve(const PartialCondition& h, const TransitionSet& universe, AcceptanceType type) {
    switch (type) {
        case AcceptanceType::Buchi:
            if (auto c = buchi_cons(h, universe)) return AcceptanceCondition{std::move(*c)};
            return std::nullopt;
        case AcceptanceType::GenBuchi:
            if (auto c = gen_buchi_cons(h, universe)) return AcceptanceCondition{std::move(*c)};
            return std::nullopt;
        case AcceptanceType::Parity:
            if (auto c = parity_cons(h, universe)) return AcceptanceCondition{std::move(c->condition)};
            return std::nullopt;
        case AcceptanceType::Rabin:
            if (auto c = rabin_cons(h, universe)) return AcceptanceCondition{std::move(*c)};
            return std::nullopt;
        case AcceptanceType::Muller:
            require_consistent(h, universe);
            return AcceptanceCondition{MullerCondition{h.positive}};
    }
    throw Error(ErrorKind::UnsupportedType, "unknown acceptance type");
}

bool ts_consistent(const TransitionSystem& ts, const Sample& s, AcceptanceType type) {
    auto induced = induced_partial_condition(ts, s);
    if (std::holds_alternative<ConflictReport>(induced)) return false;
    return solve(std::get<PartialCondition>(induced), ts.defined_transitions(), type).has_value();
}

std::optional<AcceptanceCondition> streett_or_cobuchi_cons(const PartialCondition& h, const TransitionSet& universe,
                                                           DualFlavor flavor) {
    const PartialCondition swapped{h.negative, h.positive};
    return solve(swapped, universe, flavor == DualFlavor::CoBuchi ? AcceptanceType::Buchi : AcceptanceType::Rabin);
}

}  // namespace omega
