#include "timealign/report.hpp"

#include <json.hpp>

#include <algorithm>
#include <cstdio>
#include <sstream>

namespace timealign {

using nlohmann::json;

namespace {

/// Exact fraction, with the decimal alongside when one exists and differs.
std::string pretty_value(const Rational& value) {
    std::string fraction = value.fraction_str();
    if (auto decimal = value.decimal_str(); decimal && *decimal != fraction) {
        return fraction + " (= " + *decimal + ")";
    }
    return fraction;
}

std::string yes_no(bool value) { return value ? "yes" : "no"; }

std::string csv_field(const std::string& value) {
    if (value.find_first_of(",\"\n") == std::string::npos) return value;
    std::string quoted = "\"";
    for (char c : value) {
        if (c == '"') quoted += '"';
        quoted += c;
    }
    quoted += '"';
    return quoted;
}

std::string format_seconds(double seconds) {
    char buffer[32];
    std::snprintf(buffer, sizeof(buffer), "%.6f", seconds);
    return buffer;
}

std::string format_ratio(const std::optional<double>& ratio) {
    if (!ratio) return "-";
    char buffer[32];
    std::snprintf(buffer, sizeof(buffer), "%.2f", *ratio);
    return buffer;
}

struct Summary {
    std::size_t cases = 0;
    std::size_t untimed_matches = 0;
    std::size_t conforming = 0;
    std::size_t with_distance = 0;
    std::size_t warnings = 0;
    std::size_t errors = 0;
    Rational distance_sum;
    std::optional<Rational> distance_max;
};

Summary summarize(const Report& report) {
    Summary s;
    s.cases = report.records.size();
    for (const CaseRecord& record : report.records) {
        if (record.untimed.value_or(false)) ++s.untimed_matches;
        if (record.conforms.value_or(false)) ++s.conforming;
        if (record.distance) {
            ++s.with_distance;
            s.distance_sum += *record.distance;
            if (!s.distance_max || *record.distance > *s.distance_max) {
                s.distance_max = *record.distance;
            }
        }
        s.warnings += record.warnings.size();
        if (record.error) ++s.errors;
    }
    return s;
}

}  // namespace

void Report::sort_records() {
    std::stable_sort(records.begin(), records.end(),
                     [](const CaseRecord& a, const CaseRecord& b) { return a.case_id < b.case_id; });
}

std::string render_moves(const MoveSequence& run) {
    std::string result;
    for (const MixedMove& move : run) {
        result += '(' + move.stamp.str() + ',' + move.delay.str() + ',' +
                  std::to_string(move.position) + ')';
    }
    return result;
}

std::string render_text(const Report& report) {
    std::ostringstream out;
    for (const CaseRecord& record : report.records) {
        out << "case " << record.case_id << "\n";
        if (record.untimed) out << "  untimed: " << yes_no(*record.untimed) << "\n";
        if (record.conforms) out << "  conforms: " << yes_no(*record.conforms) << "\n";
        if (record.distance) out << "  distance: " << pretty_value(*record.distance) << "\n";
        if (record.aligned) out << "  aligned: " << to_string(*record.aligned) << "\n";
        if (record.witness) out << "  witness: " << render_moves(*record.witness) << "\n";
        for (const std::string& warning : record.warnings) {
            out << "  warning: " << warning << "\n";
        }
        if (record.error) out << "  error: " << *record.error << "\n";
    }
    Summary s = summarize(report);
    out << "summary\n";
    out << "  cases: " << s.cases << "\n";
    out << "  untimed_matches: " << s.untimed_matches << "\n";
    out << "  conforming: " << s.conforming << "\n";
    if (s.with_distance > 0) {
        Rational mean = s.distance_sum / Rational(static_cast<long long>(s.with_distance));
        out << "  distance_mean: " << pretty_value(mean) << "\n";
        out << "  distance_max: " << pretty_value(*s.distance_max) << "\n";
    }
    if (s.warnings > 0) out << "  warnings: " << s.warnings << "\n";
    if (s.errors > 0) out << "  errors: " << s.errors << "\n";
    return out.str();
}

std::string render_json(const Report& report) {
    json cases = json::array();
    for (const CaseRecord& record : report.records) {
        json row = json::object();
        row["case_id"] = record.case_id;
        if (record.untimed) row["untimed"] = *record.untimed;
        if (record.conforms) row["conforms"] = *record.conforms;
        if (record.distance) row["distance"] = record.distance->str();
        if (record.aligned) row["aligned"] = to_string(*record.aligned);
        if (record.witness) {
            json moves = json::array();
            for (const MixedMove& move : *record.witness) {
                moves.push_back({{"stamp", move.stamp.str()},
                                 {"delay", move.delay.str()},
                                 {"position", move.position}});
            }
            row["witness"] = std::move(moves);
        }
        if (!record.warnings.empty()) row["warnings"] = record.warnings;
        if (record.error) row["error"] = *record.error;
        cases.push_back(std::move(row));
    }
    Summary s = summarize(report);
    json summary = {{"cases", s.cases},
                    {"untimed_matches", s.untimed_matches},
                    {"conforming", s.conforming},
                    {"with_distance", s.with_distance},
                    {"warnings", s.warnings},
                    {"errors", s.errors}};
    if (s.with_distance > 0) {
        Rational mean = s.distance_sum / Rational(static_cast<long long>(s.with_distance));
        summary["distance_mean"] = mean.str();
        summary["distance_max"] = s.distance_max->str();
    }
    json doc = {{"cases", std::move(cases)}, {"summary", std::move(summary)}};
    return doc.dump(2) + "\n";
}

std::string render_csv(const Report& report) {
    std::string out = "case_id,untimed,conforms,distance,aligned,witness,warnings,error\n";
    for (const CaseRecord& record : report.records) {
        std::string warnings;
        for (std::size_t i = 0; i < record.warnings.size(); ++i) {
            if (i > 0) warnings += "; ";
            warnings += record.warnings[i];
        }
        out += csv_field(record.case_id);
        out += ',';
        out += record.untimed ? yes_no(*record.untimed) : "";
        out += ',';
        out += record.conforms ? yes_no(*record.conforms) : "";
        out += ',';
        out += record.distance ? csv_field(record.distance->str()) : "";
        out += ',';
        out += record.aligned ? csv_field(to_string(*record.aligned)) : "";
        out += ',';
        out += record.witness ? csv_field(render_moves(*record.witness)) : "";
        out += ',';
        out += csv_field(warnings);
        out += ',';
        out += record.error ? csv_field(*record.error) : "";
        out += '\n';
    }
    return out;
}

std::string render_text(const BenchReport& report) {
    std::ostringstream out;
    out << "length\tseconds\tratio\n";
    for (const BenchRow& row : report.rows) {
        out << row.length << '\t' << format_seconds(row.seconds) << '\t'
            << format_ratio(row.ratio) << '\n';
    }
    return out.str();
}

std::string render_json(const BenchReport& report) {
    json rows = json::array();
    for (const BenchRow& row : report.rows) {
        json entry = {{"length", row.length}, {"seconds", row.seconds}};
        if (row.ratio) entry["ratio"] = *row.ratio;
        rows.push_back(std::move(entry));
    }
    return json{{"rows", std::move(rows)}}.dump(2) + "\n";
}

std::string render_csv(const BenchReport& report) {
    std::string out = "length,seconds,ratio\n";
    for (const BenchRow& row : report.rows) {
        out += std::to_string(row.length);
        out += ',';
        out += format_seconds(row.seconds);
        out += ',';
        if (row.ratio) out += format_ratio(row.ratio);
        out += '\n';
    }
    return out;
}

}  // namespace timealign
