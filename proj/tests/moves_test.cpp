#include "timealign/moves.hpp"

#include "timealign/errors.hpp"
#include "test_support.hpp"

#include <doctest.h>

using namespace timealign;
using namespace timealign::testing;

namespace {

// The worked five-event pair used throughout: gamma aligns to sigma.
const TimedTrace kGamma = T("1,1,2,4,5");
const TimedTrace kSigma = T("1,2,2.5,4.2,5");

MixedMove M(const char* stamp, const char* delay, std::size_t pos) {
    return MixedMove(R(stamp), R(delay), pos);
}

// Scattered, repeated positions, out of order; cost 5.3.
MoveSequence scattered_run() {
    return {M("-1", "0", 1), M("0", "2", 1), M("0", "-1", 1), M("0.3", "-0.8", 3),
            M("0", "-0.2", 5)};
}

// Its combined one-move-per-position form; cost 3.3.
MoveSequence combined_run() {
    return {M("-1", "1", 1), M("0", "0", 2), M("0.3", "-0.8", 3), M("0", "0", 4),
            M("0", "-0.2", 5)};
}

// The canonical minimal run for the pair; cost 1.5.
MoveSequence stable_run() {
    return {M("0", "-0.2", 5), M("0", "-0.3", 4), M("0", "0", 3), M("0.5", "0.5", 2),
            M("0", "0", 1)};
}

}  // namespace

TEST_CASE("a stamp edits one timestamp") {
    CHECK(apply_move(T("4,6,6"), M("-1", "0", 1)) == T("3,6,6"));
}

TEST_CASE("a delay shifts the suffix") {
    CHECK(apply_move(T("4,8,11"), M("0", "-1", 1)) == T("3,7,10"));
}

TEST_CASE("the zero move is the identity") {
    CHECK(apply_move(T("4,8,11"), M("0", "0", 2)) == T("4,8,11"));
}

TEST_CASE("positions outside 1..n are index errors") {
    CHECK_THROWS_AS(apply_move(T("1,2"), M("1", "0", 0)), std::out_of_range);
    CHECK_THROWS_AS(apply_move(T("1,2"), M("1", "0", 3)), std::out_of_range);
    CHECK_THROWS_AS(apply_move_to_flow(flow_of(T("1,2")), M("1", "0", 3)), std::out_of_range);
    CHECK_THROWS_AS(apply_run(T("1,2"), {M("1", "0", 3)}), std::out_of_range);
}

TEST_CASE("a move seen through the flow vector touches two entries") {
    // Derived from the timing-domain definition: the stamp grows this flow
    // entry and shrinks the next one by the same amount.
    FlowVector before{R("1"), R("0"), R("1"), R("1.7"), R("0.8")};
    FlowVector after{R("1"), R("1"), R("0.5"), R("1.7"), R("0.8")};
    CHECK(apply_move_to_flow(before, M("0.5", "0.5", 2)) == after);
    CHECK(apply_move_to_flow(before, M("0", "0", 3)) == before);
}

TEST_CASE("flow and timing views of a move agree exactly") {
    std::mt19937_64 rng(90210);
    for (int round = 0; round < 500; ++round) {
        std::size_t n = 1 + rng() % 9;
        TimedTrace trace = random_trace(rng, n);
        MixedMove move(random_rational(rng), random_rational(rng), 1 + rng() % n);
        CHECK(flow_of(apply_move(trace, move)) == apply_move_to_flow(flow_of(trace), move));
    }
}

TEST_CASE("mixed moves commute") {
    std::mt19937_64 rng(4242);
    for (int round = 0; round < 200; ++round) {
        std::size_t n = 2 + rng() % 8;
        TimedTrace trace = random_trace(rng, n);
        MixedMove first(random_rational(rng), random_rational(rng), 1 + rng() % n);
        MixedMove second(random_rational(rng), random_rational(rng), 1 + rng() % n);
        CHECK(apply_move(apply_move(trace, first), second) ==
              apply_move(apply_move(trace, second), first));
    }
}

TEST_CASE("a run composes left to right") {
    CHECK(apply_run(T("0,3,4"), {M("0.5", "0", 1), M("0", "-0.5", 2)}) == T("0.5,2.5,3.5"));
    CHECK(run_cost({M("0.5", "0", 1), M("0", "-0.5", 2)}) == R("1"));
    CHECK(apply_run(T("0,3,4"), {}) == T("0,3,4"));
    CHECK(apply_run(kGamma, scattered_run()) == kSigma);
    CHECK(apply_run(kGamma, stable_run()) == kSigma);
}

TEST_CASE("a run equals its per-move composition") {
    std::mt19937_64 rng(1313);
    for (int round = 0; round < 200; ++round) {
        std::size_t n = 1 + rng() % 8;
        TimedTrace trace = random_trace(rng, n);
        MoveSequence run = random_run(rng, n, rng() % 12);
        TimedTrace stepwise = trace;
        for (const MixedMove& move : run) stepwise = apply_move(stepwise, move);
        CHECK(apply_run(trace, run) == stepwise);
    }
}

TEST_CASE("run cost sums move costs") {
    CHECK(run_cost(combined_run()) == R("3.3"));
    CHECK(run_cost(scattered_run()) == R("5.3"));
    CHECK(run_cost(MoveSequence{}) == R("0"));
    CHECK(run_cost(stable_run()) == R("1.5"));
}

TEST_CASE("run cost is invariant under reversal") {
    std::mt19937_64 rng(555);
    for (int round = 0; round < 100; ++round) {
        MoveSequence run = random_run(rng, 6, rng() % 10);
        MoveSequence reversed(run.rbegin(), run.rend());
        CHECK(run_cost(run) == run_cost(reversed));
    }
}

TEST_CASE("chronology is one ordered move per position") {
    CHECK(is_chronological(combined_run(), 5));
    CHECK_FALSE(is_chronological(scattered_run(), 5));
    CHECK(is_chronological({}, 0));
    CHECK_FALSE(is_chronological(combined_run(), 4));
    CHECK(is_reverse_chronological(stable_run(), 5));
    CHECK_FALSE(is_reverse_chronological(combined_run(), 5));
    CHECK(is_reverse_chronological({}, 0));
}

TEST_CASE("co-operation means stamp and delay share a sign") {
    CHECK(is_cooperative(stable_run()));
    CHECK_FALSE(is_cooperative({M("1", "-1", 2)}));
    CHECK_FALSE(is_cooperative(combined_run()));  // (-1, 1, 1) fights itself
    CHECK(is_cooperative(MoveSequence{}));
}

TEST_CASE("cross co-operation compares stamps with the next delay") {
    CHECK(is_cross_cooperative(stable_run()));
    // stamp 1 at position 1 against delay 1 at position 2
    MoveSequence bad{M("0", "1", 2), M("1", "0", 1)};
    CHECK_FALSE(is_cross_cooperative(bad));
    CHECK_THROWS_AS(is_cross_cooperative(scattered_run()), contract_error);
}

TEST_CASE("the canonical run is stable, alternatives are not") {
    CHECK(is_stable(stable_run(), kGamma, kSigma));
    // The pure-delay run also aligns the pair but wastes cost at position 2.
    MoveSequence delays{M("0", "-0.2", 5), M("0", "-0.3", 4), M("0", "-0.5", 3), M("0", "1", 2),
                        M("0", "0", 1)};
    CHECK(apply_run(kGamma, delays) == kSigma);
    CHECK_FALSE(is_stable(delays, kGamma, kSigma));
    // Not aligning at all is a contract violation, not "unstable".
    MoveSequence broken{M("0", "1", 5), M("0", "0", 4), M("0", "0", 3), M("0", "0", 2),
                        M("0", "0", 1)};
    CHECK_THROWS_AS(is_stable(broken, kGamma, kSigma), contract_error);
}

TEST_CASE("combining per position yields the chronological form") {
    CHECK(to_chronological(scattered_run(), 5) == combined_run());
    CHECK(to_chronological(combined_run(), 5) == combined_run());
    CHECK(to_chronological({}, 0).empty());
    CHECK_THROWS_AS(to_chronological({M("1", "0", 7)}, 5), std::out_of_range);
}

TEST_CASE("a stamp on the last position folds into its delay") {
    MoveSequence run{M("0.5", "0.25", 3)};
    MoveSequence folded = to_chronological(run, 3);
    CHECK(folded[2] == M("0", "0.75", 3));
    TimedTrace trace = T("1,2,3");
    CHECK(apply_run(trace, folded) == apply_run(trace, run));
}

TEST_CASE("chronological rewrite preserves effect and never raises cost") {
    std::mt19937_64 rng(2024);
    for (int round = 0; round < 200; ++round) {
        std::size_t n = 1 + rng() % 8;
        MoveSequence run = random_run(rng, n, rng() % 10);
        MoveSequence chrono = to_chronological(run, n);
        CHECK(is_chronological(chrono, n));
        CHECK(run_cost(chrono) <= run_cost(run));
        for (int probe = 0; probe < 5; ++probe) {
            TimedTrace trace = random_trace(rng, n);
            CHECK(apply_run(trace, chrono) == apply_run(trace, run));
        }
    }
}

TEST_CASE("co-operative rewrite of the worked run") {
    // The two-case rewrite turns the cost-3.3 run into the pure-delay run of
    // cost 2: each fighting move keeps its dominant delay part and pushes the
    // cancelled stamp into the next move.
    MoveSequence result = to_cooperative(combined_run());
    MoveSequence expected{M("0", "0", 1), M("0", "1", 2), M("0", "-0.5", 3), M("0", "-0.3", 4),
                          M("0", "-0.2", 5)};
    CHECK(result == expected);
    CHECK(is_cooperative(result));
    CHECK(run_cost(result) == R("2"));
    CHECK(apply_run(kGamma, result) == kSigma);
}

TEST_CASE("co-operative rewrite leaves a co-operative run alone") {
    MoveSequence run{M("1", "2", 1), M("0", "-1", 2), M("-0.5", "0", 3), M("0", "0", 4)};
    CHECK(is_cooperative(run));
    CHECK(to_cooperative(run) == run);
    CHECK_THROWS_AS(to_cooperative(scattered_run()), contract_error);
}

TEST_CASE("co-operative rewrite preserves effect and never raises cost") {
    std::mt19937_64 rng(77);
    for (int round = 0; round < 200; ++round) {
        std::size_t n = 1 + rng() % 8;
        MoveSequence chrono = to_chronological(random_run(rng, n, rng() % 10), n);
        MoveSequence coop = to_cooperative(chrono);
        CHECK(is_chronological(coop, n));
        CHECK(is_cooperative(coop));
        CHECK(run_cost(coop) <= run_cost(chrono));
        for (int probe = 0; probe < 5; ++probe) {
            TimedTrace trace = random_trace(rng, n);
            CHECK(apply_run(trace, coop) == apply_run(trace, chrono));
        }
    }
}

TEST_CASE("cross co-operative rewrite fixes an offending pair") {
    TimedTrace source = T("0,0");
    // Delay 1 at position 2, then stamp 1 with delay 1 at position 1: the
    // stamp fights the delay it rides behind.
    MoveSequence run{M("0", "1", 2), M("1", "1", 1)};
    TimedTrace target = apply_run(source, run);
    CHECK(target == T("2,2"));
    CHECK(is_cooperative(run));
    CHECK_FALSE(is_cross_cooperative(run));

    MoveSequence fixed = to_cross_cooperative(run, source, target);
    CHECK(is_cross_cooperative(fixed));
    CHECK(is_cooperative(fixed));
    CHECK(apply_run(source, fixed) == target);
    // Cost drops by exactly min(|stamp|, |next delay|) = 1.
    CHECK(run_cost(run) - run_cost(fixed) == R("1"));
}

TEST_CASE("cross co-operative rewrite leaves a compliant run alone") {
    MoveSequence run = stable_run();
    CHECK(to_cross_cooperative(run, kGamma, kSigma) == run);
    CHECK_THROWS_AS(to_cross_cooperative(combined_run(), kGamma, kSigma), contract_error);
    MoveSequence wrong{M("0", "1", 5), M("0", "0", 4), M("0", "0", 3), M("0", "0", 2),
                       M("0", "0", 1)};
    CHECK_THROWS_AS(to_cross_cooperative(wrong, kGamma, kSigma), contract_error);
}

TEST_CASE("cross co-operative rewrite preserves effect and never raises cost") {
    std::mt19937_64 rng(90901);
    int violations_seen = 0;
    for (int round = 0; round < 300; ++round) {
        std::size_t n = 1 + rng() % 7;
        TimedTrace source = random_trace(rng, n);
        TimedTrace target = random_trace(rng, n);
        // Build a reverse chronological co-operative aligning run.
        MoveSequence chrono = to_chronological(random_run(rng, n, 1 + rng() % 6), n);
        TimedTrace shifted = apply_run(source, chrono);
        MoveSequence correction;
        FlowVector gap_flow = flow_of(target);
        FlowVector shifted_flow = flow_of(shifted);
        for (std::size_t i = 0; i < n; ++i) {
            correction.emplace_back(Rational(0), gap_flow.flows[i] - shifted_flow.flows[i], i + 1);
        }
        MoveSequence full = chrono;
        full.insert(full.end(), correction.begin(), correction.end());
        MoveSequence coop = to_cooperative(to_chronological(full, n));
        MoveSequence reversed(coop.rbegin(), coop.rend());
        REQUIRE(apply_run(source, reversed) == target);

        bool had_violation = !is_cross_cooperative(reversed);
        violations_seen += had_violation ? 1 : 0;
        MoveSequence fixed = to_cross_cooperative(reversed, source, target);
        CHECK(is_cross_cooperative(fixed));
        CHECK(is_cooperative(fixed));
        CHECK(apply_run(source, fixed) == target);
        CHECK(run_cost(fixed) <= run_cost(reversed));
    }
    CHECK(violations_seen > 10);  // the generator does exercise the rewrite
}
