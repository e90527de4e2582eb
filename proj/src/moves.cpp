#include "timealign/moves.hpp"

#include "timealign/errors.hpp"

#include <map>
#include <string>

namespace timealign {

namespace {

void check_position(std::size_t position, std::size_t length, const char* op) {
    if (position < 1 || position > length) {
        throw std::out_of_range(std::string(op) + ": position " + std::to_string(position) +
                                " out of range for trace of length " + std::to_string(length));
    }
}

/// The stamp the stability rule prescribes for residual errors (e_i, e_next).
Rational stable_stamp(const Rational& err, const Rational& err_next) {
    if (err.sign() * err_next.sign() >= 0) return Rational(0);
    if (abs(err) < abs(err_next)) return err;
    return -err_next;
}

}  // namespace

TimedTrace apply_move(const TimedTrace& trace, const MixedMove& move) {
    check_position(move.position, trace.size(), "apply_move");
    TimedTrace result = trace;
    std::size_t idx = move.position - 1;
    result.stamps[idx] += move.stamp + move.delay;
    for (std::size_t j = idx + 1; j < result.size(); ++j) {
        result.stamps[j] += move.delay;
    }
    return result;
}

FlowVector apply_move_to_flow(const FlowVector& flow, const MixedMove& move) {
    check_position(move.position, flow.size(), "apply_move_to_flow");
    FlowVector result = flow;
    std::size_t idx = move.position - 1;
    result.flows[idx] += move.stamp + move.delay;
    if (idx + 1 < result.size()) {
        result.flows[idx + 1] -= move.stamp;
    }
    return result;
}

TimedTrace apply_run(const TimedTrace& trace, const MoveSequence& run) {
    // Each move touches at most two flow entries, so the composition is
    // linear in |trace| + |run| through the flow representation.
    FlowVector flow = flow_of(trace);
    for (const MixedMove& move : run) {
        check_position(move.position, flow.size(), "apply_run");
        std::size_t idx = move.position - 1;
        flow.flows[idx] += move.stamp + move.delay;
        if (idx + 1 < flow.size()) {
            flow.flows[idx + 1] -= move.stamp;
        }
    }
    return trace_of_flow(flow);
}

Rational run_cost(const MoveSequence& run) {
    Rational total;
    for (const MixedMove& move : run) {
        total += move.cost();
    }
    return total;
}

bool is_chronological(const MoveSequence& run, std::size_t trace_length) {
    if (run.size() != trace_length) return false;
    for (std::size_t k = 0; k < run.size(); ++k) {
        if (run[k].position != k + 1) return false;
    }
    return true;
}

bool is_reverse_chronological(const MoveSequence& run, std::size_t trace_length) {
    if (run.size() != trace_length) return false;
    for (std::size_t k = 0; k < run.size(); ++k) {
        if (run[k].position != trace_length - k) return false;
    }
    return true;
}

bool is_cooperative(const MoveSequence& run) {
    for (const MixedMove& move : run) {
        if (!move.cooperative()) return false;
    }
    return true;
}

bool is_cross_cooperative(const MoveSequence& run) {
    std::size_t n = run.size();
    if (!is_reverse_chronological(run, n)) {
        throw contract_error("is_cross_cooperative: run must be reverse chronological");
    }
    // run[n - i] is the move at position i.
    for (std::size_t i = 1; i < n; ++i) {
        const Rational& stamp = run[n - i].stamp;
        const Rational& next_delay = run[n - i - 1].delay;
        if (stamp.sign() * next_delay.sign() > 0) return false;
    }
    return true;
}

bool is_stable(const MoveSequence& run, const TimedTrace& source, const TimedTrace& target) {
    if (source.size() != target.size()) {
        throw contract_error("is_stable: source and target lengths differ");
    }
    if (apply_run(source, run) != target) {
        throw contract_error("is_stable: run does not align source to target");
    }
    std::size_t n = source.size();
    if (!is_reverse_chronological(run, n)) return false;
    if (!is_cooperative(run)) return false;
    if (n == 0) return true;

    // The move on the last position carries no stamp; a stamp there would be
    // a delay in disguise.
    if (!run.front().stamp.is_zero()) return false;

    // Replay in decision order. The delay at position i and the stamp at
    // position i-1 are decided together against the residual errors, so the
    // state the case split sees already carries the stamp chosen one step
    // earlier but not yet this position's delay.
    FlowVector current = flow_of(source);
    FlowVector goal = flow_of(target);
    for (std::size_t pos = n; pos >= 2; --pos) {
        const MixedMove& here = run[n - pos];      // position pos
        const MixedMove& prev = run[n - pos + 1];  // position pos - 1
        Rational err = goal.flows[pos - 2] - current.flows[pos - 2];
        Rational err_next = goal.flows[pos - 1] - current.flows[pos - 1];
        if (prev.stamp != stable_stamp(err, err_next)) return false;
        current.flows[pos - 1] += here.delay - prev.stamp;
        current.flows[pos - 2] += prev.stamp;
    }
    return true;
}

MoveSequence to_chronological(const MoveSequence& run, std::size_t trace_length) {
    std::map<std::size_t, std::pair<Rational, Rational>> combined;
    for (const MixedMove& move : run) {
        check_position(move.position, trace_length, "to_chronological");
        auto& [stamp, delay] = combined[move.position];
        stamp += move.stamp;
        delay += move.delay;
    }
    MoveSequence result;
    result.reserve(trace_length);
    for (std::size_t pos = 1; pos <= trace_length; ++pos) {
        auto it = combined.find(pos);
        if (it == combined.end()) {
            result.emplace_back(Rational(0), Rational(0), pos);
        } else if (pos == trace_length) {
            result.emplace_back(Rational(0), it->second.first + it->second.second, pos);
        } else {
            result.emplace_back(it->second.first, it->second.second, pos);
        }
    }
    return result;
}

MoveSequence to_cooperative(const MoveSequence& run) {
    std::size_t n = run.size();
    if (!is_chronological(run, n)) {
        throw contract_error("to_cooperative: run must be chronological");
    }
    MoveSequence result = run;
    if (n > 0 && !result[n - 1].stamp.is_zero()) {
        result[n - 1].delay += result[n - 1].stamp;
        result[n - 1].stamp = Rational(0);
    }
    for (std::size_t k = 0; k < n; ++k) {
        MixedMove& move = result[k];
        if (move.cooperative()) continue;
        Rational merged = move.stamp + move.delay;
        if (abs(move.delay) >= abs(move.stamp)) {
            // The delay survives; its next-position ripple loses the stamp.
            if (k + 1 < n) result[k + 1].delay -= move.stamp;
            move = MixedMove(Rational(0), merged, move.position);
        } else {
            // The stamp survives; the dropped delay migrates one move right.
            if (k + 1 < n) result[k + 1].delay += move.delay;
            move = MixedMove(merged, Rational(0), move.position);
        }
    }
    return result;
}

MoveSequence to_cross_cooperative(const MoveSequence& run, const TimedTrace& source,
                                  const TimedTrace& target) {
    std::size_t n = run.size();
    if (!is_reverse_chronological(run, n) || n != source.size()) {
        throw contract_error("to_cross_cooperative: run must be reverse chronological");
    }
    if (!is_cooperative(run)) {
        throw contract_error("to_cross_cooperative: run must be co-operative");
    }
    if (apply_run(source, run) != target) {
        throw contract_error("to_cross_cooperative: run does not align source to target");
    }

    MoveSequence result = run;
    if (n == 0) return result;
    if (!result[0].stamp.is_zero()) {
        result[0].delay += result[0].stamp;
        result[0].stamp = Rational(0);
    }
    // result[n - i] is the move at position i; fix pairs from the top down so
    // a repaired pair stays repaired.
    for (std::size_t i = n - 1; i >= 1; --i) {
        MixedMove& move = result[n - i];
        MixedMove& next = result[n - i - 1];
        if (move.stamp.sign() * next.delay.sign() <= 0) continue;
        Rational transfer = abs(move.stamp) < abs(next.delay) ? move.stamp : next.delay;
        next.delay -= transfer;
        move.stamp -= transfer;
        move.delay += transfer;
        // The index bookkeeping here is easy to get wrong; re-check the net
        // effect after every local repair.
        if (apply_run(source, result) != target) {
            throw std::logic_error("to_cross_cooperative: local rewrite changed the run effect");
        }
    }
    return result;
}

}  // namespace timealign
