#include <doctest.h>

#include "omega/error.hpp"
#include "omega/run.hpp"
#include "omega/scc.hpp"
#include "support.hpp"

using namespace omega;
using namespace omega::test;

namespace {

const Alphabet ab = Alphabet::letters(2);

OmegaWord raw(const std::string& u, const std::string& v) { return OmegaWord{ab.parse_word(u), ab.parse_word(v)}; }

}  // namespace

TEST_SUITE("omega_core") {
    TEST_CASE("alphabet validation") {
        CHECK_THROWS_AS(Alphabet(std::vector<std::string>{}), Error);
        CHECK_THROWS_AS(Alphabet({"a", "a"}), Error);
        CHECK_THROWS_AS(Alphabet({"a b"}), Error);
        const Alphabet numerals({"1", "10"});
        CHECK_FALSE(numerals.compact());
        CHECK(format_omega_word(numerals, parse_omega_word(numerals, "10 (10 1)")) == "10(10 1)");
        CHECK(format_omega_word(numerals, parse_omega_word(numerals, "1 (10 1)")) == "(1 10)");
    }

    TEST_CASE("normalize examples") {
        CHECK(normalize(raw("ab", "ab")) == raw("", "ab"));
        CHECK(normalize(raw("a", "ba")) == raw("", "ab"));
        CHECK(normalize(raw("", "abab")) == raw("", "ab"));
        CHECK(normalize(raw("aab", "bb")) == raw("aa", "b"));
    }

    TEST_CASE("omega_equal examples") {
        CHECK(omega_equal(raw("", "ab"), raw("a", "ba")));
        CHECK_FALSE(omega_equal(raw("", "ab"), raw("", "ba")));
        // unroll 2 + 3·3 = 11 positions of both words
        const auto x = raw("ab", "aab"), y = raw("aba", "aba");
        bool same = true;
        for (std::size_t i = 0; i < 11; ++i) same = same && naive_at(x, i) == naive_at(y, i);
        CHECK(omega_equal(x, y) == same);
        CHECK(omega_equal(x, y) == naive_equal(x, y));
    }

    TEST_CASE("normalize is idempotent and preserves the word") {
        Rng rng(11);
        for (int i = 0; i < 1000; ++i) {
            const auto w = random_word(rng, 2, 6, 6);
            const auto n = normalize(w);
            CHECK(normalize(n) == n);
            CHECK(omega_equal(w, n));
            CHECK(naive_equal(w, n));
        }
    }

    TEST_CASE("omega_equal agrees with naive unrolling") {
        Rng rng(12);
        int equal = 0;
        for (int i = 0; i < 1000; ++i) {
            auto x = random_word(rng, 2, 4, 4);
            // bias towards equal pairs: re-express x with a rotated, repeated period
            OmegaWord y = random_word(rng, 2, 4, 4);
            if (i % 2 == 0) {
                y = x;
                for (std::size_t r = uniform(rng, 0, 3); r > 0; --r) {
                    y.spoke.push_back(y.period.front());
                    std::rotate(y.period.begin(), y.period.begin() + 1, y.period.end());
                }
                const auto p = y.period;
                for (std::size_t r = uniform(rng, 0, 2); r > 0; --r) y.period.insert(y.period.end(), p.begin(), p.end());
            }
            const bool expected = naive_equal(x, y);
            equal += expected;
            CHECK(omega_equal(x, y) == expected);
        }
        CHECK(equal >= 500);
    }

    TEST_CASE("word syntax round trip") {
        CHECK(format_omega_word(ab, W("ab(ab)")) == "(ab)");
        CHECK(format_omega_word(ab, W("ab(ba)")) == "ab(ba)");
        CHECK(format_omega_word(ab, W("(b)")) == "(b)");
        CHECK(format_omega_word(ab, W("a b ( a )")) == "ab(a)");
        CHECK_THROWS_AS(W("ab"), Error);
        CHECK_THROWS_AS(W("a()"), Error);
        CHECK_THROWS_AS(W("(c)"), Error);
        Rng rng(13);
        for (int i = 0; i < 200; ++i) {
            const auto w = normalize(random_word(rng, 2, 5, 5));
            CHECK(W(format_omega_word(ab, w)) == w);
        }
    }

    TEST_CASE("run examples") {
        const auto a = fix_a();
        const auto r = run(a.ts, W("(bbba)"));
        REQUIRE(std::holds_alternative<InfiniteRun>(r));
        CHECK(std::get<InfiniteRun>(r).infinity_set == set_of(a.ts, {{0, 'b'}, {1, 'b'}, {2, 'b'}, {0, 'a'}}));

        const auto e = run(fix_t1(), W("(b)"));
        REQUIRE(std::holds_alternative<EscapingRun>(e));
        CHECK(std::get<EscapingRun>(e).state == 1);
        CHECK(std::get<EscapingRun>(e).escape_prefix == ab.parse_word("bb"));
        CHECK(std::get<EscapingRun>(e).exit_string == W("(b)"));

        TransitionSystem loop(ab);
        loop.set_transition(0, 0, 0);
        const auto l = run(loop, W("(a)"));
        REQUIRE(std::holds_alternative<InfiniteRun>(l));
        CHECK(std::get<InfiniteRun>(l).infinity_set == set_of(loop, {{0, 'a'}}));

        CHECK_THROWS_AS(run(loop, OmegaWord{{}, {5}}), Error);
    }

    TEST_CASE("first undefined symbol escapes from the initial state") {
        TransitionSystem empty(ab);
        const auto r = run(empty, W("b(a)"));
        REQUIRE(std::holds_alternative<EscapingRun>(r));
        CHECK(std::get<EscapingRun>(r).state == 0);
        CHECK(std::get<EscapingRun>(r).escape_prefix == ab.parse_word("b"));
        CHECK(std::get<EscapingRun>(r).exit_string == W("b(a)"));
    }

    TEST_CASE("run agrees with plain simulation") {
        Rng rng(14);
        for (int i = 0; i < 500; ++i) {
            const auto ts = random_ts(rng, uniform(rng, 1, 5), 2, 0.8);
            const auto w = normalize(random_word(rng, 2, 5, 5));
            const auto r = run(ts, w);
            const auto naive = naive_infinity_set(ts, w, ts.initial());
            CHECK(std::holds_alternative<InfiniteRun>(r) == naive.has_value());
            if (const auto* inf = std::get_if<InfiniteRun>(&r)) {
                CHECK(inf->infinity_set == *naive);
                CHECK(is_strongly_connected(ts, inf->infinity_set));
                const auto sccs = scc_transition_sets(ts, reachable_transitions(ts));
                CHECK(std::any_of(sccs.begin(), sccs.end(), [&](const TransitionSet& c) {
                    return inf->infinity_set.is_subset_of(c);
                }));
            } else {
                const auto& esc = std::get<EscapingRun>(r);
                CHECK_FALSE(ts.defined(esc.state, esc.escape_prefix.back()));
                CHECK(ts.run_finite(ts.initial(), Word(esc.escape_prefix.begin(), esc.escape_prefix.end() - 1)) ==
                      esc.state);
            }
        }
    }

    TEST_CASE("escapes examples") {
        const auto t1 = fix_t1();
        std::vector<OmegaWord> bw{W("(b)")};
        auto e = escapes(bw, t1);
        REQUIRE(e.size() == 1);
        CHECK(e[0].escape_prefix == ab.parse_word("bb"));
        std::vector<OmegaWord> aw{W("(a)")};
        CHECK(escapes(aw, t1).empty());

        const auto s3 = fix_s3();
        TransitionSystem empty(ab);
        e = escapes(s3.positive, empty);
        CHECK(e.size() == 6);
        for (const auto& x : e) CHECK(x.escape_prefix == Word{x.word.at(0)});
        for (std::size_t i = 1; i < e.size(); ++i) CHECK_FALSE(length_lex_less(e[i].escape_prefix, e[i - 1].escape_prefix));
    }

    TEST_CASE("indistinguishable examples") {
        const auto t1 = fix_t1();
        CHECK(indistinguishable(t1, W("b(b)"), W("(b)")));
        CHECK(indistinguishable(t1, W("(b)"), W("a(b)")));
        CHECK_FALSE(indistinguishable(t1, W("(b)"), W("(a)")));
    }

    TEST_CASE("indistinguishable is an equivalence on escaping words") {
        Rng rng(15);
        for (int i = 0; i < 300; ++i) {
            const auto ts = random_ts(rng, uniform(rng, 1, 3), 2, 0.6);
            std::vector<OmegaWord> esc;
            for (int attempt = 0; attempt < 200 && esc.size() < 3; ++attempt) {
                const auto w = normalize(random_word(rng, 2, 3, 2));
                if (std::holds_alternative<EscapingRun>(run(ts, w))) esc.push_back(w);
            }
            if (esc.size() < 3) continue;
            const auto &x = esc[0], &y = esc[1], &z = esc[2];
            CHECK(indistinguishable(ts, x, x));
            CHECK(indistinguishable(ts, x, y) == indistinguishable(ts, y, x));
            if (indistinguishable(ts, x, y) && indistinguishable(ts, y, z)) CHECK(indistinguishable(ts, x, z));
        }
    }

    TEST_CASE("scc_transition_sets examples") {
        const auto a = fix_a();
        auto all = a.ts.defined_transitions();
        auto sccs = scc_transition_sets(a.ts, all);
        REQUIRE(sccs.size() == 1);
        CHECK(sccs[0] == all);

        auto five = all;
        five.reset(a.ts.index({2, 1}));
        sccs = scc_transition_sets(a.ts, five);
        REQUIRE(sccs.size() == 1);
        CHECK(sccs[0] == five);

        const auto t1 = fix_t1();
        sccs = scc_transition_sets(t1, t1.defined_transitions());
        REQUIRE(sccs.size() == 1);
        CHECK(sccs[0] == t1.defined_transitions());
    }

    TEST_CASE("scc output is sorted by least member") {
        TransitionSystem ts(ab, 3);
        ts.set_transition(0, 1, 1);
        ts.set_transition(1, 0, 1);
        ts.set_transition(1, 1, 2);
        ts.set_transition(2, 0, 2);
        const auto sccs = scc_transition_sets(ts, ts.defined_transitions());
        REQUIRE(sccs.size() == 2);
        CHECK(sccs[0] == set_of(ts, {{1, 'a'}}));
        CHECK(sccs[1] == set_of(ts, {{2, 'a'}}));
    }

    TEST_CASE("word_visiting_all examples") {
        const auto a = fix_a();
        const auto all = a.ts.defined_transitions();
        auto w = word_visiting_all(a.ts, all, {});
        CHECK(std::get<InfiniteRun>(run(a.ts, w)).infinity_set == all);

        TransitionSystem loop(ab);
        loop.set_transition(0, 0, 0);
        CHECK(word_visiting_all(loop, loop.defined_transitions(), {}) == W("(a)"));

        const auto c = set_of(a.ts, {{0, 'b'}, {1, 'a'}});
        w = word_visiting_all(a.ts, c, {});
        CHECK(omega_equal(w, W("(ba)")));

        CHECK_THROWS_AS(word_visiting_all(a.ts, set_of(a.ts, {{0, 'a'}, {1, 'a'}}), {}), Error);
    }

    TEST_CASE("word_visiting_all realizes every reachable loop") {
        Rng rng(16);
        for (int i = 0; i < 100; ++i) {
            const auto ts = random_ts(rng, uniform(rng, 1, 4), 2, 0.8);
            const auto acc = access_words(ts);
            for (const auto& loop : enumerate_loops(ts).loops) {
                const auto states = states_of(ts, loop);
                StateId q = 0;
                while (!states[q]) ++q;
                const auto w = word_visiting_all(ts, loop, *acc[q]);
                const auto r = run(ts, w);
                REQUIRE(std::holds_alternative<InfiniteRun>(r));
                CHECK(std::get<InfiniteRun>(r).infinity_set == loop);
                CHECK(w.period.size() <= ts.num_symbols() * ts.num_states() * ts.num_states());
            }
        }
    }
}
