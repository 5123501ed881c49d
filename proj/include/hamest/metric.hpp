#pragma once

#include <vector>

#include "hamest/spectral.hpp"

namespace hamest {

// Operator size measured the way a discrimination experiment can feel it:
// max{E_max - E_min, |E_max|, |E_min|}.  The second and third terms matter
// because amplitude parked outside the box sees energy exactly 0, so even a
// multiple of the identity is "large" once a zero level is available.
double norm0(const HermitianOperator& h);

// Distance norm0(h1 - h2); a genuine metric on Hamiltonians of equal dimension.
double dist0(const HermitianOperator& h1, const HermitianOperator& h2);

// Plain spectral width E_max - E_min (always <= norm0).
double spread(const HermitianOperator& h);

// Shortest time that permits discriminating h1 from h2 with certainty:
// pi / dist0 when a no-box level may be used, pi / spread(h1 - h2) otherwise.
// Errors when the relevant denominator vanishes.
double min_discrimination_time(const HermitianOperator& h1, const HermitianOperator& h2,
                               bool use_box_extension = true);

// Piecewise-constant schedule of hypothesis pairs.
struct ScheduleSegment {
    double duration;
    HermitianOperator h1;
    HermitianOperator h2;
};

class HamiltonianSchedule {
public:
    explicit HamiltonianSchedule(std::vector<ScheduleSegment> segments);

    const std::vector<ScheduleSegment>& segments() const { return segments_; }
    double total_duration() const;

private:
    std::vector<ScheduleSegment> segments_;
};

// Accumulated distinguishability integral dist0(h1(t), h2(t)) dt; certain
// discrimination within the schedule requires the integral to reach pi.
struct TimeDependentBound {
    double integral;
    bool certain_discrimination_possible;
};

TimeDependentBound time_dependent_bound(const HamiltonianSchedule& schedule);

// Attaching a non-interacting ancilla (h_i -> h_i (x) I + I (x) h_anc) must
// not change the distance; both sides are returned for inspection.
struct AncillaInvariance {
    double base_distance;
    double composite_distance;
};

AncillaInvariance ancilla_invariance_check(const HermitianOperator& h1,
                                           const HermitianOperator& h2,
                                           const HermitianOperator& h_anc);

} // namespace hamest
