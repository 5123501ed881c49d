#include "hamest/metric.hpp"

#include <cmath>
#include <numbers>

namespace hamest {

namespace {

struct Extremes {
    double lo;
    double hi;
};

Extremes eigen_extremes(const HermitianOperator& h) {
    const EigenSystem es = eig_hermitian(h);
    return {es.values(0), es.values(es.values.size() - 1)};
}

} // namespace

double norm0(const HermitianOperator& h) {
    const auto [lo, hi] = eigen_extremes(h);
    return std::max({hi - lo, std::abs(hi), std::abs(lo)});
}

double dist0(const HermitianOperator& h1, const HermitianOperator& h2) {
    if (h1.dim() != h2.dim()) {
        throw DimensionError("dist0: dimension mismatch");
    }
    return norm0(h1 - h2);
}

double spread(const HermitianOperator& h) {
    const auto [lo, hi] = eigen_extremes(h);
    return hi - lo;
}

double min_discrimination_time(const HermitianOperator& h1, const HermitianOperator& h2,
                               bool use_box_extension) {
    if (h1.dim() != h2.dim()) {
        throw DimensionError("min_discrimination_time: dimension mismatch");
    }
    const HermitianOperator diff = h1 - h2;
    const double denom = use_box_extension ? norm0(diff) : spread(diff);
    if (denom <= 0.0) {
        throw DomainError("min_discrimination_time: Hamiltonians are indistinguishable "
                          "(zero distance)");
    }
    return std::numbers::pi / denom;
}

HamiltonianSchedule::HamiltonianSchedule(std::vector<ScheduleSegment> segments)
    : segments_(std::move(segments)) {
    if (segments_.empty()) {
        throw Error("HamiltonianSchedule: at least one segment required");
    }
    const int dim = segments_.front().h1.dim();
    for (const auto& seg : segments_) {
        if (!(seg.duration > 0.0) || !std::isfinite(seg.duration)) {
            throw DomainError("HamiltonianSchedule: segment durations must be positive");
        }
        if (seg.h1.dim() != dim || seg.h2.dim() != dim) {
            throw DimensionError("HamiltonianSchedule: all segments must share one dimension");
        }
    }
}

double HamiltonianSchedule::total_duration() const {
    double total = 0.0;
    for (const auto& seg : segments_) {
        total += seg.duration;
    }
    return total;
}

TimeDependentBound time_dependent_bound(const HamiltonianSchedule& schedule) {
    double integral = 0.0;
    for (const auto& seg : schedule.segments()) {
        integral += seg.duration * dist0(seg.h1, seg.h2);
    }
    return {integral, integral >= std::numbers::pi};
}

AncillaInvariance ancilla_invariance_check(const HermitianOperator& h1,
                                           const HermitianOperator& h2,
                                           const HermitianOperator& h_anc) {
    const double base = dist0(h1, h2);
    const double composite = dist0(add_ancilla_hamiltonian(h1, h_anc),
                                   add_ancilla_hamiltonian(h2, h_anc));
    return {base, composite};
}

} // namespace hamest
