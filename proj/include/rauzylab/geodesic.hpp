#pragma once

#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "rauzylab/construction.hpp"
#include "rauzylab/rational.hpp"

namespace rauzylab {

// Holonomy data of a saddle connection.  The vertical component is stored
// as a certified upper bound unless exact_vertical is set.
struct Holonomy {
    Rat horizontal;
    Rat vertical;
    bool exact_vertical = false;
};

// Components after time t of the flow (e^t x, e^{-t} y), computed through
// logs of the exact rationals so magnitudes far outside double range survive.
std::pair<double, double> flow(const Holonomy& hol, double t);

// The short saddle connection at block n: horizontal holonomy lambda_n(4)
// exactly, vertical bounded by h_n(4).  Checks that the block word ends in
// the letter that stacks the last rectangle and that the right side of the
// last rectangle carries a singular point.
Holonomy gamma_n(const ConstructionRun& run, int n);

struct TimeWindow {
    int n = 0;
    double s = 0.0;
    double t = 0.0;
};

// Window during which both flowed components of gamma_n are <= 1/log n:
// s = log(v log n), t = -log(lambda log n).  Requires n >= 3 and asserts
// s < t.
TimeWindow window(int n, const Holonomy& hol);

struct OverlapEntry {
    int n = 0;
    double s = 0.0;
    double t = 0.0;
    double overlap_with_next = 0.0;  // t_n - s_{n+1}
};
struct OverlapReport {
    int n0 = -1;  // smallest n with positive overlap through nMax; -1 if none
    std::vector<OverlapEntry> entries;
};

// Consecutive-window overlaps for n in [nMin, nMax]; needs run.N >= nMax+1.
OverlapReport overlap_certificate(const ConstructionRun& run, int nMin, int nMax);
nlohmann::json overlap_to_json(const OverlapReport& report);

struct TrajectoryPoint {
    double t = 0.0;
    double bound = 0.0;  // min over n of e^{-t} v_n + e^t lambda_n
    int active_n = 0;    // minimizing n
    double window_s = 0.0;
    double window_t = 0.0;
};

// Systole-bound series along the flow: at each sampled time the best
// flat-length bound over all saddle connections gamma_n, n in [3, run.N].
std::vector<TrajectoryPoint> systole_bound_trajectory(const ConstructionRun& run,
                                                      double t_start, double t_end,
                                                      int samples);
std::string trajectory_csv(const std::vector<TrajectoryPoint>& points);

}  // namespace rauzylab
