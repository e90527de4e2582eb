#include "timealign/model.hpp"

#include "timealign/errors.hpp"
#include "test_support.hpp"

#include <doctest.h>

using namespace timealign;
using namespace timealign::testing;

namespace {

TimeInterval I(const char* eft, const char* lft) {
    return TimeInterval(R(eft), Rational::parse(lft));
}

TimeInterval unbounded(const char* eft) { return TimeInterval(R(eft), std::nullopt); }

// Three chained steps: [0,1], then exactly 2, then exactly 1.
SequentialProcessModel gate_model() {
    SequentialProcessModel model;
    model.transitions = {{"d", I("0", "1")}, {"e", I("2", "2")}, {"f", I("1", "1")}};
    return model;
}

LabeledTrace labeled(const char* case_id, std::initializer_list<const char*> activities,
                     const char* stamps) {
    LabeledTrace trace;
    trace.case_id = case_id;
    TimedTrace times = T(stamps);
    std::size_t i = 0;
    for (const char* activity : activities) {
        trace.events.push_back({activity, times.stamps[i++]});
    }
    return trace;
}

}  // namespace

TEST_CASE("interval validity") {
    CHECK_THROWS_AS(TimeInterval(R("3"), R("1")), std::invalid_argument);
    CHECK_THROWS_AS(TimeInterval(R("-1"), R("1")), std::invalid_argument);
    CHECK(I("1", "1").contains(R("1")));
    CHECK_FALSE(I("1", "2").contains(R("2.001")));
    CHECK(unbounded("3").contains(R("1000000")));
    CHECK_FALSE(unbounded("3").contains(R("2.999")));
}

TEST_CASE("membership checks every flow entry") {
    SequentialProcessModel model = gate_model();
    CHECK(membership(model, T("1,3,4")));
    CHECK_FALSE(membership(model, T("3,4,5")));
    CHECK(membership(SequentialProcessModel{}, TimedTrace{}));
    CHECK_THROWS_AS(membership(model, T("1,3")), contract_error);
}

TEST_CASE("membership equals the direct duration check") {
    std::mt19937_64 rng(31337);
    for (int round = 0; round < 200; ++round) {
        std::size_t n = 1 + rng() % 5;
        SequentialProcessModel model;
        for (std::size_t i = 0; i < n; ++i) {
            Rational lo = abs(random_rational(rng, 2000));
            Rational hi = lo + abs(random_rational(rng, 2000));
            model.transitions.push_back({"t" + std::to_string(i), TimeInterval(lo, hi)});
        }
        TimedTrace trace = random_trace(rng, n);
        bool direct = true;
        Rational previous(0);
        for (std::size_t i = 0; i < n; ++i) {
            direct = direct && model.transitions[i].second.contains(trace.stamps[i] - previous);
            previous = trace.stamps[i];
        }
        CHECK(membership(model, trace) == direct);
    }
}

TEST_CASE("untimed match compares label sequences") {
    SequentialProcessModel model = gate_model();
    CHECK(untimed_match(model, labeled("c", {"d", "e", "f"}, "4,6,6")));
    CHECK_FALSE(untimed_match(model, labeled("c", {"d", "f"}, "4,6")));
    CHECK_FALSE(untimed_match(model, labeled("c", {"d", "e", "g"}, "4,6,6")));
    CHECK(untimed_match(SequentialProcessModel{}, LabeledTrace{}));
}

TEST_CASE("sampled traces belong to the model") {
    std::mt19937_64 rng(99);
    for (int round = 0; round < 1000; ++round) {
        std::size_t n = rng() % 6;
        SequentialProcessModel model;
        for (std::size_t i = 0; i < n; ++i) {
            Rational lo = abs(random_rational(rng, 3000));
            std::optional<Rational> hi;
            if (rng() % 4 != 0) hi = lo + abs(random_rational(rng, 3000));
            model.transitions.push_back({"t" + std::to_string(i), TimeInterval(lo, hi)});
        }
        TimedTrace sampled = sample_trace(model, rng(), R("10"));
        CHECK(membership(model, sampled));
    }
}

TEST_CASE("point intervals sample the unique trace") {
    SequentialProcessModel model;
    model.transitions = {{"a", I("2", "2")}, {"b", I("1", "1")}};
    CHECK(sample_trace(model, 5, R("1")) == T("2,3"));
}

TEST_CASE("sampling is deterministic in the seed") {
    SequentialProcessModel model = gate_model();
    CHECK(sample_trace(model, 12, R("4")) == sample_trace(model, 12, R("4")));
    CHECK_THROWS_AS(sample_trace(model, 12, R("0")), contract_error);
}

TEST_CASE("model documents parse") {
    SequentialProcessModel model = parse_model(
        R"({"transitions":[{"label":"d","eft":"0","lft":"1"},)"
        R"({"label":"e","eft":"2","lft":"2"},{"label":"f","eft":"1","lft":"1"}]})");
    CHECK(model == gate_model());
    CHECK(parse_model(R"({"transitions":[]})").size() == 0);
}

TEST_CASE("malformed model documents are data errors") {
    CHECK_THROWS_AS(parse_model("{"), parse_error);
    CHECK_THROWS_AS(parse_model("[]"), parse_error);
    CHECK_THROWS_AS(parse_model(R"({"transitions":[{"label":"x","eft":"3","lft":"1"}]})"),
                    parse_error);
    CHECK_THROWS_AS(parse_model(R"({"transitions":[{"label":"x","eft":"-1","lft":"1"}]})"),
                    parse_error);
    CHECK_THROWS_AS(parse_model(R"({"transitions":[{"label":"x","eft":0,"lft":"1"}]})"),
                    parse_error);
    CHECK_THROWS_AS(parse_model(R"({"transitions":[{"label":"","eft":"0","lft":"1"}]})"),
                    parse_error);
    CHECK_THROWS_AS(parse_model(R"({"transitions":[{"eft":"0","lft":"1"}]})"), parse_error);
}

TEST_CASE("field context is reported") {
    try {
        parse_model(R"({"transitions":[{"label":"ok","eft":"0","lft":"1"},)"
                    R"({"label":"bad","eft":"x","lft":"1"}]})");
        FAIL("expected parse_error");
    } catch (const parse_error& err) {
        std::string message = err.what();
        CHECK(message.find("transition 1") != std::string::npos);
        CHECK(message.find("eft") != std::string::npos);
    }
}

TEST_CASE("serialization round-trips, including inf and non-decimal bounds") {
    SequentialProcessModel model;
    model.name = "gates";
    model.transitions = {{"a", I("1/3", "2/3")}, {"b", unbounded("0.25")}, {"c", I("2", "2")}};
    CHECK(parse_model(serialize_model(model)) == model);
    CHECK(parse_model(serialize_model(gate_model())) == gate_model());
    std::string text = serialize_model(model);
    CHECK(text.find("\"inf\"") != std::string::npos);
    CHECK(text.find("1/3") != std::string::npos);
}
