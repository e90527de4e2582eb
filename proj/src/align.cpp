#include "timealign/align.hpp"

#include "timealign/errors.hpp"

namespace timealign {

Rational clamp_flow(const Rational& value, const TimeInterval& interval) {
    if (value < interval.eft) return interval.eft;
    if (interval.bounded() && value > *interval.lft) return *interval.lft;
    return value;
}

AlignmentResult align(const SequentialProcessModel& model, const TimedTrace& observed) {
    if (model.size() != observed.size()) {
        throw contract_error("align: trace length " + std::to_string(observed.size()) +
                             " does not match model length " + std::to_string(model.size()));
    }
    AlignmentResult result;
    FlowVector observed_flow = flow_of(observed);
    FlowVector aligned_flow;
    aligned_flow.flows.reserve(model.size());
    result.per_position.reserve(model.size());
    for (std::size_t i = 0; i < model.size(); ++i) {
        const TimeInterval& interval = model.transitions[i].second;
        Rational clamped = clamp_flow(observed_flow.flows[i], interval);
        result.per_position.push_back({observed_flow.flows[i], clamped, interval});
        aligned_flow.flows.push_back(std::move(clamped));
    }
    result.aligned = trace_of_flow(aligned_flow);
    DistanceReport report = mixed_distance(observed, result.aligned);
    result.distance = std::move(report.value);
    result.witness = std::move(report.witness);
    return result;
}

AlignmentResult align(const SequentialProcessModel& model, const LabeledTrace& observed) {
    if (model.size() != observed.size()) {
        throw contract_error("align: case '" + observed.case_id + "' has " +
                             std::to_string(observed.size()) + " events but the model has " +
                             std::to_string(model.size()) + " transitions");
    }
    for (std::size_t i = 0; i < model.size(); ++i) {
        if (model.transitions[i].first != observed.events[i].activity) {
            throw contract_error("align: case '" + observed.case_id +
                                 "' diverges from the model at position " + std::to_string(i + 1) +
                                 ": expected '" + model.transitions[i].first + "', found '" +
                                 observed.events[i].activity + "'");
        }
    }
    return align(model, observed.timestamps());
}

}  // namespace timealign
