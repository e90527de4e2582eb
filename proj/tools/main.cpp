#include "timealign/align.hpp"
#include "timealign/distance.hpp"
#include "timealign/errors.hpp"
#include "timealign/event_log.hpp"
#include "timealign/oracle.hpp"
#include "timealign/report.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

namespace {

using namespace timealign;

constexpr int kExitUsage = 1;
constexpr int kExitData = 2;
constexpr int kExitNoAlignableCase = 3;

struct OutputOptions {
    std::string format = "text";
    std::string output;
};

void add_output_options(CLI::App* cmd, OutputOptions& opts) {
    cmd->add_option("--format", opts.format, "Output format")
        ->check(CLI::IsMember({"text", "json", "csv"}))
        ->capture_default_str();
    cmd->add_option("--output", opts.output, "Write the report to a file instead of stdout");
}

void emit(const std::string& content, const OutputOptions& opts) {
    if (opts.output.empty()) {
        std::cout << content;
        return;
    }
    std::ofstream out(opts.output);
    if (!out) throw parse_error("cannot open output file " + opts.output);
    out << content;
}

std::string render(const Report& report, const OutputOptions& opts) {
    if (opts.format == "json") return render_json(report);
    if (opts.format == "csv") return render_csv(report);
    return render_text(report);
}

std::string render(const BenchReport& report, const OutputOptions& opts) {
    if (opts.format == "json") return render_json(report);
    if (opts.format == "csv") return render_csv(report);
    return render_text(report);
}

/// Observed inputs are accepted as-is, but oddities are worth a note.
std::vector<std::string> trace_warnings(const TimedTrace& trace) {
    std::vector<std::string> warnings;
    for (std::size_t i = 0; i < trace.size(); ++i) {
        if (trace.stamps[i].sign() < 0) {
            warnings.push_back("negative timestamp at position " + std::to_string(i + 1));
            break;
        }
    }
    for (std::size_t i = 1; i < trace.size(); ++i) {
        if (trace.stamps[i] < trace.stamps[i - 1]) {
            warnings.push_back("timestamps decrease at position " + std::to_string(i + 1));
            break;
        }
    }
    return warnings;
}

int run_check(const std::string& model_path, const std::string& log_path,
              const OutputOptions& opts) {
    SequentialProcessModel model = load_model(model_path);
    EventLog log = load_event_log(log_path);
    Report report;
    for (const LabeledTrace& trace : log.cases) {
        CaseRecord record;
        record.case_id = trace.case_id;
        record.untimed = untimed_match(model, trace);
        if (*record.untimed) {
            record.conforms = membership(model, trace.timestamps());
        }
        record.warnings = trace_warnings(trace.timestamps());
        report.records.push_back(std::move(record));
    }
    report.sort_records();
    emit(render(report, opts), opts);
    return 0;
}

int run_align(const std::string& model_path, const std::string& log_path,
              const OutputOptions& opts) {
    SequentialProcessModel model = load_model(model_path);
    EventLog log = load_event_log(log_path);
    Report report;
    std::size_t aligned_cases = 0;
    for (const LabeledTrace& trace : log.cases) {
        CaseRecord record;
        record.case_id = trace.case_id;
        record.untimed = untimed_match(model, trace);
        record.warnings = trace_warnings(trace.timestamps());
        if (*record.untimed) {
            AlignmentResult result = align(model, trace);
            record.conforms = membership(model, trace.timestamps());
            record.distance = std::move(result.distance);
            record.aligned = std::move(result.aligned);
            record.witness = std::move(result.witness);
            ++aligned_cases;
        } else {
            record.error = "activity sequence does not match the model; cannot align timestamps";
        }
        report.records.push_back(std::move(record));
    }
    report.sort_records();
    emit(render(report, opts), opts);
    if (!log.cases.empty() && aligned_cases == 0) return kExitNoAlignableCase;
    return 0;
}

int run_distance(const std::string& variant, const std::string& a_text, const std::string& b_text,
                 const std::string& log_path, const std::vector<std::string>& pair,
                 const OutputOptions& opts) {
    TimedTrace a;
    TimedTrace b;
    CaseRecord record;
    if (!a_text.empty() || !b_text.empty()) {
        a = parse_trace(a_text);
        b = parse_trace(b_text);
        record.case_id = "inline";
    } else {
        EventLog log = load_event_log(log_path);
        const LabeledTrace* first = log.find(pair[0]);
        const LabeledTrace* second = log.find(pair[1]);
        if (!first || !second) {
            throw parse_error("case '" + (first ? pair[1] : pair[0]) + "' not found in " + log_path);
        }
        if (first->labels() != second->labels()) {
            throw contract_error("cases '" + pair[0] + "' and '" + pair[1] +
                                 "' have different activity sequences");
        }
        a = first->timestamps();
        b = second->timestamps();
        record.case_id = pair[0] + "~" + pair[1];
    }
    DistanceReport result;
    if (variant == "dt") {
        result = stamp_distance(a, b);
    } else if (variant == "dtheta") {
        result = delay_distance(a, b);
    } else {
        result = mixed_distance(a, b);
    }
    record.distance = std::move(result.value);
    if (variant == "dn") record.witness = std::move(result.witness);
    for (std::string& warning : trace_warnings(a)) record.warnings.push_back("a: " + warning);
    for (std::string& warning : trace_warnings(b)) record.warnings.push_back("b: " + warning);
    Report report;
    report.records.push_back(std::move(record));
    emit(render(report, opts), opts);
    return 0;
}

int run_bench(const std::string& lengths_text, std::uint64_t seed, int repeats,
              const OutputOptions& opts) {
    std::vector<std::size_t> lengths;
    for (const Rational& entry : parse_trace(lengths_text).stamps) {
        if (!entry.is_integer() || entry.sign() <= 0) {
            throw CLI::ValidationError("--lengths", "lengths must be positive integers");
        }
        lengths.push_back(static_cast<std::size_t>(entry.numerator().convert_to<long long>()));
    }
    if (lengths.empty()) throw CLI::ValidationError("--lengths", "at least one length required");

    BenchReport report;
    std::uint64_t stream = 0;
    for (std::size_t length : lengths) {
        TimedTrace source = random_timed_trace(length, seed + 2 * stream);
        TimedTrace target = random_timed_trace(length, seed + 2 * stream + 1);
        ++stream;
        double best = 0.0;
        for (int r = 0; r < repeats; ++r) {
            auto start = std::chrono::steady_clock::now();
            DistanceReport result = mixed_distance(source, target);
            auto stop = std::chrono::steady_clock::now();
            (void)result;
            double seconds = std::chrono::duration<double>(stop - start).count();
            if (r == 0 || seconds < best) best = seconds;
        }
        BenchRow row;
        row.length = length;
        row.seconds = best;
        if (!report.rows.empty() && report.rows.back().seconds > 0.0) {
            row.ratio = best / report.rows.back().seconds;
        }
        report.rows.push_back(row);
    }
    emit(render(report, opts), opts);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Timed conformance checking: mixed-move distances between timed traces and "
                 "alignments to sequential process models"};
    app.require_subcommand(1);

    std::string model_path;
    std::string log_path;
    OutputOptions check_opts;
    CLI::App* check_cmd = app.add_subcommand("check", "Untimed and timed conformance per case");
    check_cmd->add_option("--model", model_path, "Model JSON file")->required();
    check_cmd->add_option("--log", log_path, "Event log CSV file")->required();
    add_output_options(check_cmd, check_opts);

    std::string variant = "dn";
    std::string a_text;
    std::string b_text;
    std::string dist_log_path;
    std::vector<std::string> pair;
    OutputOptions dist_opts;
    CLI::App* dist_cmd = app.add_subcommand("distance", "Distance between two timed traces");
    dist_cmd->add_option("--variant", variant, "Distance variant")
        ->check(CLI::IsMember({"dt", "dtheta", "dn"}))
        ->capture_default_str();
    dist_cmd->add_option("--a", a_text, "First trace, comma-separated timestamps");
    dist_cmd->add_option("--b", b_text, "Second trace, comma-separated timestamps");
    dist_cmd->add_option("--log", dist_log_path, "Event log CSV file");
    dist_cmd->add_option("--pair", pair, "Two case ids from the log")->expected(2);
    add_output_options(dist_cmd, dist_opts);

    std::string align_model_path;
    std::string align_log_path;
    OutputOptions align_opts;
    CLI::App* align_cmd = app.add_subcommand("align", "Align every case of a log to the model");
    align_cmd->add_option("--model", align_model_path, "Model JSON file")->required();
    align_cmd->add_option("--log", align_log_path, "Event log CSV file")->required();
    add_output_options(align_cmd, align_opts);

    std::string lengths_text = "10,100,1000,10000,100000,1000000";
    std::uint64_t seed = 42;
    int repeats = 1;
    OutputOptions bench_opts;
    CLI::App* bench_cmd = app.add_subcommand("bench", "Time the mixed distance on random traces");
    bench_cmd->add_option("--lengths", lengths_text, "Comma-separated trace lengths")
        ->capture_default_str();
    bench_cmd->add_option("--seed", seed, "Input generator seed")->capture_default_str();
    bench_cmd->add_option("--repeats", repeats, "Timing repetitions per length (best is kept)")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    add_output_options(bench_cmd, bench_opts);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& err) {
        int code = app.exit(err);
        return code == 0 ? 0 : kExitUsage;
    }

    try {
        if (check_cmd->parsed()) {
            return run_check(model_path, log_path, check_opts);
        }
        if (dist_cmd->parsed()) {
            bool inline_pair = !a_text.empty() && !b_text.empty();
            bool log_pair = !dist_log_path.empty() && pair.size() == 2;
            if (inline_pair == log_pair) {
                std::cerr << "distance: provide either --a and --b, or --log and --pair\n";
                return kExitUsage;
            }
            return run_distance(variant, a_text, b_text, dist_log_path, pair, dist_opts);
        }
        if (align_cmd->parsed()) {
            return run_align(align_model_path, align_log_path, align_opts);
        }
        if (bench_cmd->parsed()) {
            return run_bench(lengths_text, seed, repeats, bench_opts);
        }
    } catch (const CLI::ValidationError& err) {
        std::cerr << err.what() << "\n";
        return kExitUsage;
    } catch (const capacity_error& err) {
        std::cerr << "error: " << err.what() << "\n";
        return kExitData;
    } catch (const contract_error& err) {
        std::cerr << "error: " << err.what() << "\n";
        return kExitData;
    } catch (const parse_error& err) {
        std::cerr << "error: " << err.what() << "\n";
        return kExitData;
    } catch (const std::out_of_range& err) {
        std::cerr << "error: " << err.what() << "\n";
        return kExitData;
    }
    return 0;
}
