#pragma once

#include "timealign/moves.hpp"
#include "timealign/trace.hpp"

#include <optional>
#include <string>
#include <vector>

namespace timealign {

/// One per-case result row. Fields are present when the command computed
/// them: `check` fills the conformance flags, `align` adds distance, aligned
/// trace and witness, `distance` fills only the distance side.
struct CaseRecord {
    std::string case_id;
    std::optional<bool> untimed;
    std::optional<bool> conforms;
    std::optional<Rational> distance;
    std::optional<TimedTrace> aligned;
    std::optional<MoveSequence> witness;
    std::vector<std::string> warnings;
    std::optional<std::string> error;
};

struct Report {
    std::vector<CaseRecord> records;

    /// Deterministic output order: records sorted by case id.
    void sort_records();
};

/// One benchmark row: trace length, wall-clock seconds for the mixed
/// distance, and the ratio to the previous row.
struct BenchRow {
    std::size_t length = 0;
    double seconds = 0.0;
    std::optional<double> ratio;
};

struct BenchReport {
    std::vector<BenchRow> rows;
};

std::string render_moves(const MoveSequence& run);

std::string render_text(const Report& report);
std::string render_json(const Report& report);
std::string render_csv(const Report& report);

std::string render_text(const BenchReport& report);
std::string render_json(const BenchReport& report);
std::string render_csv(const BenchReport& report);

}  // namespace timealign
