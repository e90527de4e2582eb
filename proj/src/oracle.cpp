#include "timealign/oracle.hpp"

#include "timealign/align.hpp"
#include "timealign/distance.hpp"
#include "timealign/errors.hpp"

#include <algorithm>
#include <optional>
#include <random>
#include <set>

namespace timealign {

namespace {

void check_same_length(const TimedTrace& a, const TimedTrace& b, const char* op) {
    if (a.size() != b.size()) {
        throw contract_error(std::string(op) + ": traces have lengths " +
                             std::to_string(a.size()) + " and " + std::to_string(b.size()));
    }
}

/// Exact Gaussian elimination; nullopt when the system is singular.
std::optional<std::vector<Rational>> solve_exact(std::vector<std::vector<Rational>> a,
                                                 std::vector<Rational> rhs) {
    std::size_t m = rhs.size();
    for (std::size_t col = 0; col < m; ++col) {
        std::size_t pivot = col;
        while (pivot < m && a[pivot][col].is_zero()) ++pivot;
        if (pivot == m) return std::nullopt;
        std::swap(a[pivot], a[col]);
        std::swap(rhs[pivot], rhs[col]);
        for (std::size_t row = col + 1; row < m; ++row) {
            if (a[row][col].is_zero()) continue;
            Rational factor = a[row][col] / a[col][col];
            for (std::size_t k = col; k < m; ++k) {
                a[row][k] -= factor * a[col][k];
            }
            rhs[row] -= factor * rhs[col];
        }
    }
    std::vector<Rational> solution(m);
    for (std::size_t row = m; row >= 1; --row) {
        Rational acc = rhs[row - 1];
        for (std::size_t k = row; k < m; ++k) {
            acc -= a[row - 1][k] * solution[k];
        }
        solution[row - 1] = acc / a[row - 1][row - 1];
    }
    return solution;
}

Rational rational_step(std::mt19937_64& rng, long long lo_thousandths, long long hi_thousandths) {
    long long span = hi_thousandths - lo_thousandths + 1;
    long long pick = lo_thousandths + static_cast<long long>(rng() % static_cast<std::uint64_t>(span));
    return Rational(pick, 1000);
}

}  // namespace

StampProgram StampProgram::of(const TimedTrace& source, const TimedTrace& target) {
    check_same_length(source, target, "StampProgram");
    StampProgram program;
    program.errors.reserve(source.size());
    for (std::size_t i = 0; i < source.size(); ++i) {
        program.errors.push_back(target.stamps[i] - source.stamps[i]);
    }
    return program;
}

std::vector<Rational> StampProgram::forced_delays(std::span<const Rational> stamps) const {
    std::size_t n = errors.size();
    if (stamps.size() + 1 != n && !(n == 0 && stamps.empty())) {
        throw contract_error("StampProgram: expected " + std::to_string(n ? n - 1 : 0) +
                             " stamps, got " + std::to_string(stamps.size()));
    }
    std::vector<Rational> delays(n);
    for (std::size_t i = 0; i < n; ++i) {
        Rational gap = i == 0 ? errors[0] : errors[i] - errors[i - 1];
        if (i < stamps.size()) gap -= stamps[i];
        if (i >= 1) gap += stamps[i - 1];
        delays[i] = std::move(gap);
    }
    return delays;
}

MoveSequence StampProgram::run_for(std::span<const Rational> stamps) const {
    std::vector<Rational> delays = forced_delays(stamps);
    MoveSequence run;
    run.reserve(errors.size());
    for (std::size_t i = 0; i < errors.size(); ++i) {
        Rational stamp = i < stamps.size() ? stamps[i] : Rational(0);
        run.emplace_back(std::move(stamp), std::move(delays[i]), i + 1);
    }
    return run;
}

Rational StampProgram::cost_of(std::span<const Rational> stamps) const {
    Rational total;
    for (const Rational& stamp : stamps) total += abs(stamp);
    for (const Rational& delay : forced_delays(stamps)) total += abs(delay);
    return total;
}

Rational oracle_mixed_distance(const TimedTrace& source, const TimedTrace& target) {
    check_same_length(source, target, "oracle_mixed_distance");
    std::size_t n = source.size();
    if (n > 8) {
        throw capacity_error("oracle_mixed_distance: brute force is capped at length 8");
    }
    if (n == 0) return Rational(0);
    StampProgram program = StampProgram::of(source, target);
    std::size_t vars = n - 1;
    if (vars == 0) return abs(program.errors[0]);

    // Breakpoint hyperplanes, each as coefficient row plus right-hand side:
    // s_i = 0, and d_i(s) = 0 written as s_i - s_{i-1} = E_i - E_{i-1}.
    std::vector<std::vector<Rational>> rows;
    std::vector<Rational> rhs;
    for (std::size_t i = 0; i < vars; ++i) {
        std::vector<Rational> row(vars);
        row[i] = Rational(1);
        rows.push_back(std::move(row));
        rhs.emplace_back(0);
    }
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<Rational> row(vars);
        if (i < vars) row[i] = Rational(1);
        if (i >= 1) row[i - 1] = Rational(-1);
        rows.push_back(std::move(row));
        rhs.push_back(i == 0 ? program.errors[0] : program.errors[i] - program.errors[i - 1]);
    }

    // Walk every way to pick vars hyperplanes out of the 2n-1.
    std::vector<std::size_t> pick(vars);
    for (std::size_t i = 0; i < vars; ++i) pick[i] = i;
    std::optional<Rational> best;
    while (true) {
        std::vector<std::vector<Rational>> a;
        std::vector<Rational> b;
        for (std::size_t idx : pick) {
            a.push_back(rows[idx]);
            b.push_back(rhs[idx]);
        }
        if (auto vertex = solve_exact(std::move(a), std::move(b))) {
            Rational value = program.cost_of(*vertex);
            if (!best || value < *best) best = std::move(value);
        }
        // next combination in lexicographic order
        std::size_t total = rows.size();
        std::size_t i = vars;
        while (i > 0 && pick[i - 1] == total - vars + i - 1) --i;
        if (i == 0) break;
        ++pick[i - 1];
        for (std::size_t j = i; j < vars; ++j) pick[j] = pick[j - 1] + 1;
    }
    // The all-stamps-zero subset is always nonsingular, so a value exists.
    return *best;
}

Rational oracle_align_distance(const SequentialProcessModel& model, const TimedTrace& observed,
                               int samples_per_position, std::uint64_t seed) {
    if (model.size() != observed.size()) {
        throw contract_error("oracle_align_distance: trace length " +
                             std::to_string(observed.size()) + " does not match model length " +
                             std::to_string(model.size()));
    }
    std::size_t n = model.size();
    if (n > 6) {
        throw capacity_error("oracle_align_distance: enumeration is capped at length 6");
    }
    if (n == 0) return Rational(0);

    std::mt19937_64 rng(seed);
    FlowVector observed_flow = flow_of(observed);
    std::vector<std::vector<Rational>> candidates(n);
    for (std::size_t i = 0; i < n; ++i) {
        const TimeInterval& interval = model.transitions[i].second;
        Rational clamped = clamp_flow(observed_flow.flows[i], interval);
        std::set<Rational> values{interval.eft, clamped};
        if (interval.bounded()) values.insert(*interval.lft);
        Rational upper = interval.bounded() ? *interval.lft : clamped + Rational(1);
        Rational width = upper - interval.eft;
        for (int k = 0; k < samples_per_position; ++k) {
            Rational fraction(static_cast<long long>(rng() % 1001), 1000);
            values.insert(interval.eft + width * fraction);
        }
        candidates[i].assign(values.begin(), values.end());
    }

    // Odometer over the per-position candidate sets.
    std::vector<std::size_t> index(n, 0);
    std::optional<Rational> best;
    while (true) {
        FlowVector flow;
        flow.flows.reserve(n);
        for (std::size_t i = 0; i < n; ++i) flow.flows.push_back(candidates[i][index[i]]);
        Rational value = mixed_distance_value(trace_of_flow(flow), observed);
        if (!best || value < *best) best = std::move(value);
        std::size_t i = 0;
        while (i < n && ++index[i] == candidates[i].size()) {
            index[i] = 0;
            ++i;
        }
        if (i == n) break;
    }
    return *best;
}

MoveSequence random_aligning_run(const TimedTrace& source, const TimedTrace& target,
                                 std::uint64_t seed) {
    check_same_length(source, target, "random_aligning_run");
    std::size_t n = source.size();
    if (n == 0) return {};
    std::mt19937_64 rng(seed);
    std::vector<Rational> stamps;
    stamps.reserve(n - 1);
    for (std::size_t i = 0; i + 1 < n; ++i) {
        stamps.push_back(rational_step(rng, -3000, 3000));
    }
    MoveSequence run = StampProgram::of(source, target).run_for(stamps);

    MoveSequence expanded;
    for (MixedMove& move : run) {
        if (rng() % 3 == 0) {
            // Split into two moves at the same position; the pieces sum back
            // to the original, so the effect is unchanged.
            Rational stamp_part = move.stamp * Rational(static_cast<long long>(rng() % 9), 8);
            Rational delay_part = move.delay * Rational(static_cast<long long>(rng() % 9), 8);
            expanded.emplace_back(stamp_part, delay_part, move.position);
            expanded.emplace_back(move.stamp - stamp_part, move.delay - delay_part, move.position);
        } else {
            expanded.push_back(std::move(move));
        }
    }
    // Fisher-Yates with explicit engine arithmetic, for seed-stable output.
    for (std::size_t i = expanded.size(); i > 1; --i) {
        std::size_t j = static_cast<std::size_t>(rng() % i);
        std::swap(expanded[i - 1], expanded[j]);
    }
    return expanded;
}

TimedTrace random_timed_trace(std::size_t length, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    FlowVector flow;
    flow.flows.reserve(length);
    for (std::size_t i = 0; i < length; ++i) {
        flow.flows.push_back(rational_step(rng, -10000, 10000));
    }
    return trace_of_flow(flow);
}

}  // namespace timealign
