#pragma once

#include "timealign/rational.hpp"

#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

namespace timealign {

/// Absolute timestamps of a linear trace, one per event.
///
/// Observed traces may carry arbitrary values (even decreasing ones); whether
/// a trace fits a process model is a separate question answered by the model
/// module.
struct TimedTrace {
    std::vector<Rational> stamps;

    TimedTrace() = default;
    TimedTrace(std::initializer_list<Rational> values) : stamps(values) {}
    explicit TimedTrace(std::vector<Rational> values) : stamps(std::move(values)) {}

    std::size_t size() const { return stamps.size(); }
    bool empty() const { return stamps.empty(); }
    bool operator==(const TimedTrace&) const = default;
};

/// The dual representation of a trace: durations between consecutive events.
/// flows[0] is the first timestamp itself (duration since time zero).
struct FlowVector {
    std::vector<Rational> flows;

    FlowVector() = default;
    FlowVector(std::initializer_list<Rational> values) : flows(values) {}
    explicit FlowVector(std::vector<Rational> values) : flows(std::move(values)) {}

    std::size_t size() const { return flows.size(); }
    bool empty() const { return flows.empty(); }
    bool operator==(const FlowVector&) const = default;
};

/// Consecutive differences; the exact inverse of trace_of_flow.
FlowVector flow_of(const TimedTrace& trace);

/// Prefix sums; the exact inverse of flow_of.
TimedTrace trace_of_flow(const FlowVector& flow);

/// Parses a comma-separated list of exact rational literals, e.g.
/// "0.5,2.5,3.5". Spaces around entries are ignored. Throws parse_error.
TimedTrace parse_trace(std::string_view text);

/// Renders a trace as comma-separated exact literals.
std::string to_string(const TimedTrace& trace);

}  // namespace timealign
