#include "timealign/distance.hpp"

#include "timealign/errors.hpp"

namespace timealign {

namespace {

void check_same_length(const TimedTrace& a, const TimedTrace& b, const char* op) {
    if (a.size() != b.size()) {
        throw contract_error(std::string(op) + ": traces have lengths " +
                             std::to_string(a.size()) + " and " + std::to_string(b.size()));
    }
}

/// Per-position flow errors target - source; the quantity the mixed sweep
/// drives to zero.
std::vector<Rational> flow_errors(const TimedTrace& source, const TimedTrace& target) {
    std::vector<Rational> errors = flow_of(target).flows;
    FlowVector from = flow_of(source);
    for (std::size_t i = 0; i < errors.size(); ++i) {
        errors[i] -= from.flows[i];
    }
    return errors;
}

/// The backward sweep shared by mixed_distance and mixed_distance_value.
/// When witness stamps/delays are requested, stamps[i]/delays[i] receive the
/// components of the move at position i+1.
Rational mixed_sweep(std::vector<Rational> err, std::vector<Rational>* stamps,
                     std::vector<Rational>* delays) {
    Rational cost;
    std::size_t n = err.size();
    if (n == 0) return cost;
    for (std::size_t pos = n; pos >= 2; --pos) {
        Rational a = err[pos - 1];
        Rational& b = err[pos - 2];
        cost += abs(a);
        if (a.sign() * b.sign() >= 0) {
            // Errors agree (or one is settled): a pure delay finishes this
            // position without disturbing the neighbour.
            if (delays) (*delays)[pos - 1] = a;
        } else if (abs(a) < abs(b)) {
            // A stamp of -a at pos-1 fixes this position for free from the
            // neighbour's point of view: it eats |a| off both errors.
            if (stamps) (*stamps)[pos - 2] = -a;
            b += a;
        } else {
            // The neighbour's whole error fits inside this one: spend the
            // stamp b to zero the neighbour, finish the rest with a delay.
            if (stamps) (*stamps)[pos - 2] = b;
            if (delays) (*delays)[pos - 1] = a + b;
            b = Rational(0);
        }
        err[pos - 1] = Rational(0);
    }
    cost += abs(err[0]);
    if (delays) (*delays)[0] = err[0];
    return cost;
}

}  // namespace

DistanceReport stamp_distance(const TimedTrace& source, const TimedTrace& target) {
    check_same_length(source, target, "stamp_distance");
    DistanceReport report;
    report.variant = DistanceVariant::stamp_only;
    report.witness.reserve(source.size());
    for (std::size_t i = 0; i < source.size(); ++i) {
        Rational gap = target.stamps[i] - source.stamps[i];
        report.value += abs(gap);
        report.witness.emplace_back(std::move(gap), Rational(0), i + 1);
    }
    return report;
}

DistanceReport delay_distance(const TimedTrace& source, const TimedTrace& target) {
    check_same_length(source, target, "delay_distance");
    DistanceReport report;
    report.variant = DistanceVariant::delay_only;
    std::vector<Rational> errors = flow_errors(source, target);
    report.witness.reserve(errors.size());
    for (std::size_t i = 0; i < errors.size(); ++i) {
        report.value += abs(errors[i]);
        report.witness.emplace_back(Rational(0), std::move(errors[i]), i + 1);
    }
    return report;
}

DistanceReport mixed_distance(const TimedTrace& source, const TimedTrace& target) {
    check_same_length(source, target, "mixed_distance");
    DistanceReport report;
    report.variant = DistanceVariant::mixed;
    std::size_t n = source.size();
    std::vector<Rational> stamps(n), delays(n);
    report.value = mixed_sweep(flow_errors(source, target), &stamps, &delays);
    report.witness.reserve(n);
    for (std::size_t pos = n; pos >= 1; --pos) {
        report.witness.emplace_back(std::move(stamps[pos - 1]), std::move(delays[pos - 1]), pos);
    }
    return report;
}

Rational mixed_distance_value(const TimedTrace& source, const TimedTrace& target) {
    check_same_length(source, target, "mixed_distance");
    return mixed_sweep(flow_errors(source, target), nullptr, nullptr);
}

}  // namespace timealign
