#pragma once

#include "timealign/trace.hpp"

#include <cstddef>
#include <vector>

namespace timealign {

/// An edit move on a timed trace: a stamp component that shifts one timestamp
/// locally, and a delay component that shifts the timestamp and everything
/// after it. Positions are 1-based.
///
/// On the trace itself:      t'(i) = t(i) + stamp + delay,
///                           t'(j) = t(j) + delay          for j > i.
/// On the flow vector:       f'(i) = f(i) + stamp + delay,
///                           f'(i+1) = f(i+1) - stamp      when i < n.
struct MixedMove {
    Rational stamp;
    Rational delay;
    std::size_t position = 1;

    MixedMove() = default;
    MixedMove(Rational s, Rational d, std::size_t pos)
        : stamp(std::move(s)), delay(std::move(d)), position(pos) {}

    Rational cost() const { return abs(stamp) + abs(delay); }
    bool pure_stamp() const { return delay.is_zero(); }
    bool pure_delay() const { return stamp.is_zero(); }
    /// Stamp and delay push in the same direction (or one is zero).
    bool cooperative() const { return stamp.sign() * delay.sign() >= 0; }

    bool operator==(const MixedMove&) const = default;
};

using MoveSequence = std::vector<MixedMove>;

/// Applies one move. Throws std::out_of_range unless 1 <= position <= n.
TimedTrace apply_move(const TimedTrace& trace, const MixedMove& move);

/// The same move seen through the flow representation: only positions i and
/// i+1 change. Exactly consistent with apply_move through flow_of.
FlowVector apply_move_to_flow(const FlowVector& flow, const MixedMove& move);

/// Left-to-right composition of the whole run.
TimedTrace apply_run(const TimedTrace& trace, const MoveSequence& run);

/// Sum of |stamp| + |delay| over the run.
Rational run_cost(const MoveSequence& run);

/// Exactly one move per position 1..n, in increasing position order.
bool is_chronological(const MoveSequence& run, std::size_t trace_length);

/// Exactly one move per position 1..n, in decreasing position order.
bool is_reverse_chronological(const MoveSequence& run, std::size_t trace_length);

/// Every move has stamp and delay of one sign.
bool is_cooperative(const MoveSequence& run);

/// No stamp shares a sign with the delay played at the next position:
/// stamp(i) * delay(i+1) <= 0 for every i < n. Defined for runs with one
/// move per position; throws contract_error when the run is not reverse
/// chronological.
bool is_cross_cooperative(const MoveSequence& run);

/// Whether the run is the canonical stable one: reverse chronological,
/// co-operative, and at every position the stamp is the prudent choice
/// given the residual flow errors e_i, e_{i+1} at that point of the replay:
///
///     s = 0        when e_i * e_{i+1} >= 0,
///     s = e_i      when they oppose and |e_i| < |e_{i+1}|,
///     s = -e_{i+1} otherwise.
///
/// Throws contract_error when the run does not align source to target at
/// all; returns false when it aligns but is not in stable form.
bool is_stable(const MoveSequence& run, const TimedTrace& source, const TimedTrace& target);

/// Merges all moves at one position into a single mixed move and orders the
/// result by position, one move per position 1..n (a stamp on the last
/// position is folded into its delay; both act identically there). Same net
/// effect on every trace of length n, never costlier.
MoveSequence to_chronological(const MoveSequence& run, std::size_t trace_length);

/// Rewrites a chronological run into a co-operative one, left to right: a
/// move whose components fight each other is replaced by its pure part, the
/// cancelled remainder migrating into the next move's delay. Same net
/// effect, never costlier. Throws contract_error unless the input is
/// chronological.
MoveSequence to_cooperative(const MoveSequence& run);

/// Rewrites a reverse chronological co-operative run aligning source to
/// target into a cross co-operative one. Each offending pair transfers the
/// shared sign mass from the later delay into the earlier move, reducing the
/// cost by min(|stamp|, |next delay|). Alignment is re-checked after every
/// local rewrite. Throws contract_error on precondition violations.
MoveSequence to_cross_cooperative(const MoveSequence& run, const TimedTrace& source,
                                  const TimedTrace& target);

}  // namespace timealign
