#include "timealign/model.hpp"

#include "timealign/errors.hpp"

#include <json.hpp>

#include <fstream>
#include <random>
#include <sstream>

namespace timealign {

using nlohmann::json;

TimeInterval::TimeInterval(Rational earliest, std::optional<Rational> latest)
    : eft(std::move(earliest)), lft(std::move(latest)) {
    if (eft.sign() < 0) {
        throw std::invalid_argument("interval with negative earliest firing time " + eft.str());
    }
    if (lft && *lft < eft) {
        throw std::invalid_argument("inverted interval [" + eft.str() + ", " + lft->str() + "]");
    }
}

TimedTrace LabeledTrace::timestamps() const {
    TimedTrace trace;
    trace.stamps.reserve(events.size());
    for (const TimedEvent& event : events) trace.stamps.push_back(event.timestamp);
    return trace;
}

std::vector<std::string> LabeledTrace::labels() const {
    std::vector<std::string> result;
    result.reserve(events.size());
    for (const TimedEvent& event : events) result.push_back(event.activity);
    return result;
}

bool membership(const SequentialProcessModel& model, const TimedTrace& trace) {
    if (model.size() != trace.size()) {
        throw contract_error("membership: trace length " + std::to_string(trace.size()) +
                             " does not match model length " + std::to_string(model.size()));
    }
    FlowVector flow = flow_of(trace);
    for (std::size_t i = 0; i < flow.size(); ++i) {
        if (!model.transitions[i].second.contains(flow.flows[i])) return false;
    }
    return true;
}

bool untimed_match(const SequentialProcessModel& model, const LabeledTrace& trace) {
    if (model.size() != trace.size()) return false;
    for (std::size_t i = 0; i < model.size(); ++i) {
        if (model.transitions[i].first != trace.events[i].activity) return false;
    }
    return true;
}

TimedTrace sample_trace(const SequentialProcessModel& model, std::uint64_t seed,
                        const Rational& horizon) {
    if (horizon.sign() <= 0) {
        throw contract_error("sample_trace: horizon must be positive");
    }
    // Engine output is mapped to rationals by hand so the draw only depends
    // on the seed, not on the standard library's distribution internals.
    std::mt19937_64 rng(seed);
    constexpr long long resolution = 1000;
    FlowVector flow;
    flow.flows.reserve(model.size());
    for (const auto& [label, interval] : model.transitions) {
        Rational upper = interval.bounded() ? *interval.lft : interval.eft + horizon;
        long long step = static_cast<long long>(rng() % (resolution + 1));
        flow.flows.push_back(interval.eft +
                             (upper - interval.eft) * Rational(step, resolution));
    }
    return trace_of_flow(flow);
}

namespace {

Rational parse_bound(const json& value, const std::string& context) {
    if (!value.is_string()) {
        throw parse_error(context + ": bounds must be quoted exact literals");
    }
    try {
        return Rational::parse(value.get<std::string>());
    } catch (const parse_error& err) {
        throw parse_error(context + ": " + err.what());
    }
}

}  // namespace

SequentialProcessModel parse_model(const std::string& json_text) {
    json doc;
    try {
        doc = json::parse(json_text);
    } catch (const json::exception& err) {
        throw parse_error(std::string("model: ") + err.what());
    }
    if (!doc.is_object()) throw parse_error("model: document is not an object");
    if (!doc.contains("transitions") || !doc["transitions"].is_array()) {
        throw parse_error("model: missing \"transitions\" array");
    }

    SequentialProcessModel model;
    if (doc.contains("name")) {
        if (!doc["name"].is_string()) throw parse_error("model: \"name\" must be a string");
        model.name = doc["name"].get<std::string>();
    }
    std::size_t index = 0;
    for (const json& entry : doc["transitions"]) {
        std::string context = "model: transition " + std::to_string(index);
        if (!entry.is_object() || !entry.contains("label") || !entry.contains("eft") ||
            !entry.contains("lft")) {
            throw parse_error(context + ": expected {label, eft, lft}");
        }
        if (!entry["label"].is_string() || entry["label"].get<std::string>().empty()) {
            throw parse_error(context + ": label must be a nonempty string");
        }
        Rational eft = parse_bound(entry["eft"], context + " field eft");
        std::optional<Rational> lft;
        if (!(entry["lft"].is_string() && entry["lft"].get<std::string>() == "inf")) {
            lft = parse_bound(entry["lft"], context + " field lft");
        }
        try {
            model.transitions.emplace_back(entry["label"].get<std::string>(),
                                           TimeInterval(std::move(eft), std::move(lft)));
        } catch (const std::invalid_argument& err) {
            throw parse_error(context + ": " + err.what());
        }
        ++index;
    }
    return model;
}

SequentialProcessModel load_model(const std::filesystem::path& path) {
    std::ifstream input(path);
    if (!input) throw parse_error("cannot open model file " + path.string());
    std::ostringstream buffer;
    buffer << input.rdbuf();
    try {
        return parse_model(buffer.str());
    } catch (const parse_error& err) {
        throw parse_error(path.string() + ": " + err.what());
    }
}

std::string serialize_model(const SequentialProcessModel& model) {
    json doc = json::object();
    if (!model.name.empty()) doc["name"] = model.name;
    doc["transitions"] = json::array();
    for (const auto& [label, interval] : model.transitions) {
        doc["transitions"].push_back({
            {"label", label},
            {"eft", interval.eft.str()},
            {"lft", interval.bounded() ? interval.lft->str() : std::string("inf")},
        });
    }
    return doc.dump(2);
}

}  // namespace timealign
