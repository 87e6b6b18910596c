// Serial versus OpenMP timings of the parallel kernels; results must agree.
// usage: omega_bench [threads]
#include <omp.h>

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <random>
#include <set>

#include "omega/oracle.hpp"
#include "omega/sprout.hpp"

using namespace omega;

namespace {

template <class F>
double time_of(F&& f) {
    const auto t0 = std::chrono::steady_clock::now();
    f();
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

void report(const char* name, double serial, double parallel, bool agree) {
    std::printf("%-28s serial %8.3f s   parallel %8.3f s   speedup %5.2fx   %s\n", name, serial, parallel,
                parallel > 0 ? serial / parallel : 0.0, agree ? "results agree" : "RESULTS DIFFER");
}

/// Symbol 0 cycles through all states, so every transition is reachable.
TransitionSystem dense_ts(std::size_t states, std::size_t symbols, unsigned seed) {
    std::mt19937_64 rng(seed);
    TransitionSystem ts(Alphabet::letters(symbols), states, 0);
    for (StateId q = 0; q < states; ++q)
        for (Symbol a = 0; a < symbols; ++a)
            ts.set_transition(q, a, static_cast<StateId>(a == 0 ? (q + 1) % states : rng() % states));
    return ts;
}

/// Words of period at most `len` with empty spoke, positive iff the period repeats a symbol cyclically.
Sample periodic_sample(std::size_t len) {
    std::vector<OmegaWord> pos, neg;
    std::set<OmegaWord> seen;
    for (std::size_t l = 1; l <= len; ++l)
        for (std::size_t mask = 0; mask < (std::size_t{1} << l); ++mask) {
            OmegaWord w;
            for (std::size_t i = 0; i < l; ++i) w.period.push_back(static_cast<Symbol>((mask >> i) & 1u));
            w = normalize(w);
            if (!seen.insert(w).second) continue;
            bool repeat = false;
            for (std::size_t i = 0; i < w.period.size(); ++i)
                repeat = repeat || w.period[i] == w.period[(i + 1) % w.period.size()];
            (repeat ? pos : neg).push_back(w);
        }
    return make_sample(Alphabet::letters(2), pos, neg);
}

}  // namespace

int main(int argc, char** argv) {
    const int threads = argc > 1 ? std::atoi(argv[1]) : omp_get_num_procs();
    omp_set_num_threads(std::max(threads, 1));
    std::printf("threads: %d (processors: %d)\n", omp_get_max_threads(), omp_get_num_procs());

    {
        const auto ts = dense_ts(5, 3, 7);
        LoopCatalog s, p;
        const double ts_ = time_of([&] { s = enumerate_loops(ts, {}, Exec::Serial); });
        const double tp = time_of([&] { p = enumerate_loops(ts, {}, Exec::Parallel); });
        report("enumerate_loops (15 trans.)", ts_, tp, s.loops == p.loops);
    }
    {
        const auto ts = dense_ts(5, 2, 11);
        const auto loops = enumerate_loops(ts).loops;
        std::vector<TransitionSet> pos, neg;
        for (std::size_t i = 0; i < loops.size(); ++i) (loops[i].count() % 3 == 0 ? pos : neg).push_back(loops[i]);
        const auto h = PartialCondition::make(pos, neg);
        std::optional<AcceptanceCondition> s, p;
        const double ts_ = time_of([&] { s = brute_force_consistency(ts, h, AcceptanceType::Parity, {}, {}, Exec::Serial); });
        const double tp = time_of([&] { p = brute_force_consistency(ts, h, AcceptanceType::Parity, {}, {}, Exec::Parallel); });
        report("brute force parity (10)", ts_, tp, s == p);
    }
    {
        const auto sample = periodic_sample(12);
        LearnerConfig cfg;
        cfg.type = AcceptanceType::Parity;
        cfg.parallel = false;
        Automaton s, p;
        const double ts_ = time_of([&] { s = sprout(sample, cfg); });
        cfg.parallel = true;
        const double tp = time_of([&] { p = sprout(sample, cfg); });
        report("sprout candidates", ts_, tp, s.ts == p.ts && s.condition == p.condition);
    }
    return 0;
}
