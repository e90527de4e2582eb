#pragma once

#include "timealign/model.hpp"

#include <filesystem>
#include <istream>
#include <vector>

namespace timealign {

/// An event log: one LabeledTrace per case, cases kept in first-appearance
/// order, events kept in file order within each case.
struct EventLog {
    std::vector<LabeledTrace> cases;

    const LabeledTrace* find(const std::string& case_id) const;
};

/// Parses CSV with the exact header `case_id,activity,timestamp`. Rows of a
/// case may be interleaved with other cases; their relative order is kept.
/// Fields are plain (no quoting); timestamps are exact literals. Throws
/// parse_error with a line number on malformed input.
EventLog parse_event_log(std::istream& input);

/// parse_event_log on a file; errors carry the file name.
EventLog load_event_log(const std::filesystem::path& path);

}  // namespace timealign
