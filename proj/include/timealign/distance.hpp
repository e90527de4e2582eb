#pragma once

#include "timealign/moves.hpp"

namespace timealign {

enum class DistanceVariant { stamp_only, delay_only, mixed };

/// A distance value together with a witnessing run: applying the witness to
/// the source trace yields the target exactly, and its cost equals the value.
struct DistanceReport {
    Rational value;
    MoveSequence witness;
    DistanceVariant variant = DistanceVariant::mixed;
};

/// Minimal cost using stamp moves only: sum of per-position timestamp gaps.
/// Witness: one stamp per position, chronological.
/// Throws contract_error on length mismatch.
DistanceReport stamp_distance(const TimedTrace& source, const TimedTrace& target);

/// Minimal cost using delay moves only: sum of per-position flow gaps.
/// Witness: one delay per position, chronological.
/// Throws contract_error on length mismatch.
DistanceReport delay_distance(const TimedTrace& source, const TimedTrace& target);

/// Minimal cost when stamps and delays mix freely.
///
/// One backward sweep over the flow errors e_i = f_target(i) - f_source(i)
/// decides, per position, how much correction a stamp should absorb (it can
/// serve two adjacent flow entries at once) and leaves the rest to the
/// delay. The emitted witness is the unique stable, co-operative, reverse
/// chronological run; its cost is the distance. Linear time.
/// Throws contract_error on length mismatch.
DistanceReport mixed_distance(const TimedTrace& source, const TimedTrace& target);

/// The mixed distance value alone, without materializing the witness.
/// Identical sweep; handy for very long traces.
Rational mixed_distance_value(const TimedTrace& source, const TimedTrace& target);

}  // namespace timealign
