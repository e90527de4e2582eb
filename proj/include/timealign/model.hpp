#pragma once

#include "timealign/trace.hpp"

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

namespace timealign {

/// Closed duration constraint [eft, lft]; an absent lft means no upper bound.
struct TimeInterval {
    Rational eft;
    std::optional<Rational> lft;

    TimeInterval() = default;
    /// Throws std::invalid_argument unless 0 <= eft <= lft.
    TimeInterval(Rational earliest, std::optional<Rational> latest);

    bool bounded() const { return lft.has_value(); }
    bool contains(const Rational& value) const {
        return eft <= value && (!lft || value <= *lft);
    }
    bool operator==(const TimeInterval&) const = default;
};

/// A chain of labeled transitions; each interval constrains the duration
/// between the previous event and this one (the first is measured from time
/// zero). A trace belongs to the model when every flow entry sits inside its
/// interval.
struct SequentialProcessModel {
    std::string name;
    std::vector<std::pair<std::string, TimeInterval>> transitions;

    std::size_t size() const { return transitions.size(); }
    bool operator==(const SequentialProcessModel&) const = default;
};

struct TimedEvent {
    std::string activity;
    Rational timestamp;
    bool operator==(const TimedEvent&) const = default;
};

/// One observed case: activity/timestamp pairs in recording order.
struct LabeledTrace {
    std::string case_id;
    std::vector<TimedEvent> events;

    std::size_t size() const { return events.size(); }
    TimedTrace timestamps() const;
    std::vector<std::string> labels() const;
    bool operator==(const LabeledTrace&) const = default;
};

/// Whether the trace is a word of the model's language: every flow entry
/// inside its interval, with time starting at zero. Exact comparisons.
/// Throws contract_error on length mismatch.
bool membership(const SequentialProcessModel& model, const TimedTrace& trace);

/// Whether the trace's activity sequence equals the model's label sequence.
bool untimed_match(const SequentialProcessModel& model, const LabeledTrace& trace);

/// Draws each flow uniformly from its interval (an unbounded interval is cut
/// at eft + horizon) and returns the resulting trace. Deterministic in seed;
/// the result always satisfies membership. Throws contract_error unless
/// horizon > 0.
TimedTrace sample_trace(const SequentialProcessModel& model, std::uint64_t seed,
                        const Rational& horizon);

/// Parses the JSON model document:
///   {"name": optional string,
///    "transitions": [{"label": string, "eft": "0.5", "lft": "2" | "inf"}]}
/// Bounds are quoted exact literals (decimal or fraction). Throws parse_error
/// with field context on malformed documents, inverted intervals, or
/// negative eft.
SequentialProcessModel parse_model(const std::string& json_text);

/// parse_model on a file's contents; errors carry the file name.
SequentialProcessModel load_model(const std::filesystem::path& path);

/// Inverse of parse_model: parse_model(serialize_model(m)) == m, including
/// unbounded intervals and non-decimal rationals.
std::string serialize_model(const SequentialProcessModel& model);

}  // namespace timealign
