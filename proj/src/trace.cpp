#include "timealign/trace.hpp"

#include "timealign/errors.hpp"

namespace timealign {

FlowVector flow_of(const TimedTrace& trace) {
    FlowVector flow;
    flow.flows.reserve(trace.size());
    for (std::size_t i = 0; i < trace.size(); ++i) {
        if (i == 0) {
            flow.flows.push_back(trace.stamps[0]);
        } else {
            flow.flows.push_back(trace.stamps[i] - trace.stamps[i - 1]);
        }
    }
    return flow;
}

TimedTrace trace_of_flow(const FlowVector& flow) {
    TimedTrace trace;
    trace.stamps.reserve(flow.size());
    Rational running;
    for (const Rational& duration : flow.flows) {
        running += duration;
        trace.stamps.push_back(running);
    }
    return trace;
}

TimedTrace parse_trace(std::string_view text) {
    TimedTrace trace;
    std::size_t start = 0;
    // An all-whitespace input is the empty trace.
    if (text.find_first_not_of(" \t") == std::string_view::npos) return trace;
    while (true) {
        std::size_t comma = text.find(',', start);
        std::string_view entry = comma == std::string_view::npos
                                     ? text.substr(start)
                                     : text.substr(start, comma - start);
        while (!entry.empty() && (entry.front() == ' ' || entry.front() == '\t')) entry.remove_prefix(1);
        while (!entry.empty() && (entry.back() == ' ' || entry.back() == '\t')) entry.remove_suffix(1);
        trace.stamps.push_back(Rational::parse(entry));
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    return trace;
}

std::string to_string(const TimedTrace& trace) {
    std::string result;
    for (std::size_t i = 0; i < trace.size(); ++i) {
        if (i > 0) result += ',';
        result += trace.stamps[i].str();
    }
    return result;
}

}  // namespace timealign
