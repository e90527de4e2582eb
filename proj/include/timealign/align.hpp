#pragma once

#include "timealign/distance.hpp"
#include "timealign/model.hpp"

namespace timealign {

/// One row of the alignment explanation: what was observed, what the model
/// allows, and what the aligned trace uses.
struct AlignmentStep {
    Rational observed_flow;
    Rational aligned_flow;
    TimeInterval interval;
};

/// An aligned model trace for an observed trace: the aligned trace is a word
/// of the model, the distance is the mixed-move distance between the two,
/// and the witness transforms the observed trace into the aligned one.
struct AlignmentResult {
    TimedTrace aligned;
    Rational distance;
    MoveSequence witness;
    std::vector<AlignmentStep> per_position;
};

/// Nearest point of the interval: x itself when inside, else the closer
/// bound (an unbounded interval never cuts from above).
Rational clamp_flow(const Rational& value, const TimeInterval& interval);

/// Aligns an observed timestamp sequence to the model by clamping each flow
/// entry into its interval; the resulting trace minimizes the mixed-move
/// distance over the whole model language. Linear time.
AlignmentResult align(const SequentialProcessModel& model, const TimedTrace& observed);

/// Label-checked variant: throws contract_error naming the first divergent
/// position when the activity sequence does not match the model.
AlignmentResult align(const SequentialProcessModel& model, const LabeledTrace& observed);

}  // namespace timealign
