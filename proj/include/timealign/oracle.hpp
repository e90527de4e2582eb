#pragma once

#include "timealign/model.hpp"
#include "timealign/moves.hpp"

#include <cstdint>
#include <span>

namespace timealign {

/// Chronological aligning runs, parametrized by their stamp components.
///
/// Once a run is chronological with one mixed move per position, choosing the
/// stamps s_1..s_{n-1} forces every delay (the run must land each timestamp
/// on the target), so the space of candidate runs is an (n-1)-dimensional
/// family and the run cost is a convex piecewise linear function of s.
struct StampProgram {
    /// Timestamp errors target - source per position.
    std::vector<Rational> errors;

    static StampProgram of(const TimedTrace& source, const TimedTrace& target);

    std::size_t length() const { return errors.size(); }

    /// The delays forced by the given stamps (s_0 = s_n = 0):
    /// d_i = (E_i - E_{i-1}) - s_i + s_{i-1}.
    std::vector<Rational> forced_delays(std::span<const Rational> stamps) const;

    /// The chronological run (s_i, d_i, i); applying it to the source trace
    /// gives the target exactly, whatever the stamps.
    MoveSequence run_for(std::span<const Rational> stamps) const;

    /// Total cost sum |s_i| + |d_i| of that run.
    Rational cost_of(std::span<const Rational> stamps) const;
};

/// Exact mixed-move distance by brute force, independent of the linear-time
/// sweep: the cost is convex piecewise linear and coercive in the stamps, so
/// its minimum sits on a vertex of the arrangement of the 2n-1 breakpoint
/// hyperplanes {s_i = 0} and {d_i = 0}; every (n-1)-subset is solved exactly
/// and the best value returned. Throws capacity_error when n > 8.
Rational oracle_mixed_distance(const TimedTrace& source, const TimedTrace& target);

/// Exact optimal alignment distance by enumeration: candidate flow vectors
/// are built from every combination of {eft, lft, clamped observed flow} plus
/// seeded uniform samples inside each interval, and the best mixed distance
/// to the observed trace is returned. Throws capacity_error when n > 6.
Rational oracle_align_distance(const SequentialProcessModel& model, const TimedTrace& observed,
                               int samples_per_position, std::uint64_t seed = 20240101);

/// A valid but arbitrary run aligning source to target: random stamps with
/// their forced delays, then randomly split and shuffled (mixed moves
/// commute, so the effect is preserved). Deterministic in seed.
MoveSequence random_aligning_run(const TimedTrace& source, const TimedTrace& target,
                                 std::uint64_t seed);

/// A random trace with flows in [-10, 10] at millesimal resolution;
/// deterministic in seed. Test and benchmark input generator.
TimedTrace random_timed_trace(std::size_t length, std::uint64_t seed);

}  // namespace timealign
