#include "timealign/event_log.hpp"

#include "timealign/errors.hpp"

#include <fstream>
#include <map>
#include <string>

namespace timealign {

namespace {

std::string trim(std::string text) {
    while (!text.empty() && (text.back() == '\r' || text.back() == ' ' || text.back() == '\t')) {
        text.pop_back();
    }
    std::size_t start = text.find_first_not_of(" \t");
    return start == std::string::npos ? std::string() : text.substr(start);
}

}  // namespace

const LabeledTrace* EventLog::find(const std::string& case_id) const {
    for (const LabeledTrace& trace : cases) {
        if (trace.case_id == case_id) return &trace;
    }
    return nullptr;
}

EventLog parse_event_log(std::istream& input) {
    EventLog log;
    std::map<std::string, std::size_t> case_index;
    std::string line;
    std::size_t line_no = 0;
    bool header_seen = false;
    while (std::getline(input, line)) {
        ++line_no;
        std::string row = trim(line);
        if (row.empty()) continue;
        if (!header_seen) {
            if (row != "case_id,activity,timestamp") {
                throw parse_error("line " + std::to_string(line_no) +
                                  ": expected header 'case_id,activity,timestamp'");
            }
            header_seen = true;
            continue;
        }
        std::size_t first = row.find(',');
        std::size_t second = first == std::string::npos ? std::string::npos : row.find(',', first + 1);
        if (first == std::string::npos || second == std::string::npos ||
            row.find(',', second + 1) != std::string::npos) {
            throw parse_error("line " + std::to_string(line_no) + ": expected 3 fields");
        }
        std::string case_id = trim(row.substr(0, first));
        std::string activity = trim(row.substr(first + 1, second - first - 1));
        std::string stamp_text = trim(row.substr(second + 1));
        if (case_id.empty() || activity.empty()) {
            throw parse_error("line " + std::to_string(line_no) + ": empty case_id or activity");
        }
        Rational timestamp;
        try {
            timestamp = Rational::parse(stamp_text);
        } catch (const parse_error& err) {
            throw parse_error("line " + std::to_string(line_no) + ": " + err.what());
        }
        auto [it, inserted] = case_index.try_emplace(case_id, log.cases.size());
        if (inserted) {
            log.cases.push_back(LabeledTrace{case_id, {}});
        }
        log.cases[it->second].events.push_back({std::move(activity), std::move(timestamp)});
    }
    if (!header_seen) throw parse_error("empty event log: missing header row");
    return log;
}

EventLog load_event_log(const std::filesystem::path& path) {
    std::ifstream input(path);
    if (!input) throw parse_error("cannot open log file " + path.string());
    try {
        return parse_event_log(input);
    } catch (const parse_error& err) {
        throw parse_error(path.string() + ": " + err.what());
    }
}

}  // namespace timealign
