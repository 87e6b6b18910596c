#include "clauses.hpp"

#include <algorithm>
#include <set>

#include "omega/error.hpp"
#include "omega/scc.hpp"

namespace omega::detail {

Clause conjoin(const Clause& x, const Clause& y) {
    Clause c{x.fin | y.fin, x.inf, x.streett};
    c.inf.insert(c.inf.end(), y.inf.begin(), y.inf.end());
    c.streett.insert(c.streett.end(), y.streett.begin(), y.streett.end());
    return c;
}

std::vector<Clause> clauses(const AcceptanceCondition& c, const TransitionSet& defined, const Lift& up,
                            const TransitionSet& none, bool accepting) {
    std::vector<Clause> out;
    std::visit(
        [&](const auto& cond) {
            using T = std::decay_t<decltype(cond)>;
            if constexpr (std::is_same_v<T, BuchiCondition>) {
                if (accepting)
                    out.push_back({none, {up(cond.accepting)}, {}});
                else
                    out.push_back({up(cond.accepting), {}, {}});
            } else if constexpr (std::is_same_v<T, GenBuchiCondition>) {
                if (accepting) {
                    Clause cl{none, {}, {}};
                    for (const auto& f : cond.components) cl.inf.push_back(up(f));
                    out.push_back(std::move(cl));
                } else {
                    for (const auto& f : cond.components) out.push_back({up(f), {}, {}});
                }
            } else if constexpr (std::is_same_v<T, ParityCondition>) {
                std::set<Priority> used;
                for (Priority q : cond.priority)
                    if (q != kNoPriority) used.insert(q);
                for (Priority q : used) {
                    if ((q % 2 == 0) != accepting) continue;
                    TransitionSet below(defined.size());
                    TransitionSet at(defined.size());
                    for (std::size_t t = 0; t < cond.priority.size(); ++t) {
                        if (cond.priority[t] == kNoPriority) continue;
                        if (cond.priority[t] < q) below.set(t);
                        if (cond.priority[t] == q) at.set(t);
                    }
                    out.push_back({up(below), {up(at)}, {}});
                }
            } else if constexpr (std::is_same_v<T, RabinCondition>) {
                if (accepting) {
                    for (const auto& pair : cond.pairs) out.push_back({up(pair.fin), {up(pair.inf)}, {}});
                } else {
                    Clause cl{none, {}, {}};
                    for (const auto& pair : cond.pairs) cl.streett.emplace_back(up(pair.inf), up(pair.fin));
                    out.push_back(std::move(cl));
                }
            } else {
                if (!accepting) throw Error(ErrorKind::UnsupportedType, "no clause form for Muller rejection");
                for (const auto& m : cond.accepting) {
                    Clause cl{up(defined - m), {}, {}};
                    for (auto t = m.find_first(); t != TransitionSet::npos; t = m.find_next(t)) {
                        TransitionSet single(defined.size());
                        single.set(t);
                        cl.inf.push_back(up(single));
                    }
                    out.push_back(std::move(cl));
                }
            }
        },
        c);
    return out;
}

std::optional<TransitionSet> find_loop(const TransitionSystem& ts, const TransitionSet& allowed, const Clause& c) {
    for (const auto& s : scc_transition_sets(ts, allowed)) {
        if (std::any_of(c.inf.begin(), c.inf.end(), [&](const TransitionSet& f) { return !f.intersects(s); })) continue;
        TransitionSet bad = ts.empty_set();
        for (const auto& [g, h] : c.streett)
            if (g.intersects(s) && !h.intersects(s)) bad |= g;
        if (bad.none()) return s;
        if (auto inner = find_loop(ts, s - bad, c)) return inner;
    }
    return std::nullopt;
}

}  // namespace omega::detail
