#include "rauzylab/geodesic.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>

#include "rauzylab/errors.hpp"

namespace rauzylab {

namespace {

constexpr double kExpClamp = 700.0;  // beyond this exp() overflows double

double exp_or_inf(double x) {
    return x > kExpClamp ? std::numeric_limits<double>::infinity() : std::exp(x);
}

std::string csv_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return std::string(buf);
}

}  // namespace

std::pair<double, double> flow(const Holonomy& hol, double t) {
    if (sgn(hol.horizontal) <= 0 || sgn(hol.vertical) <= 0)
        throw config_error("holonomy components must be positive");
    return {exp_or_inf(t + log_rat(hol.horizontal)),
            exp_or_inf(-t + log_rat(hol.vertical))};
}

Holonomy gamma_n(const ConstructionRun& run, int n) {
    if (n < 1 || n > run.N) throw config_error("block index outside the computed run");
    const std::string word = block_word(n);
    if (word.back() != 'a')
        throw invariant_error("block word does not end in 'a'");
    const ZeroReport zeros = zero_positions(run.state(n));
    if (!zeros.right_side_zero.back())
        throw invariant_error("right side of the last rectangle carries no singular point");
    Holonomy hol;
    hol.horizontal = run.lambda[n][3];
    hol.vertical = run.h[n][3];
    hol.exact_vertical = false;
    return hol;
}

TimeWindow window(int n, const Holonomy& hol) {
    if (n < 3) throw config_error("windows need n >= 3 so that log n > 1");
    if (sgn(hol.horizontal) <= 0 || sgn(hol.vertical) <= 0)
        throw config_error("holonomy components must be positive");
    const double loglog = std::log(std::log(static_cast<double>(n)));
    TimeWindow w;
    w.n = n;
    w.s = log_rat(hol.vertical) + loglog;
    w.t = -log_rat(hol.horizontal) - loglog;
    if (!(w.s < w.t))
        throw invariant_error("window degenerate at n=" + std::to_string(n) +
                              ": s >= t");
    return w;
}

OverlapReport overlap_certificate(const ConstructionRun& run, int nMin, int nMax) {
    if (nMin < 3) throw config_error("overlap certificate needs nMin >= 3");
    if (nMax < nMin) throw config_error("overlap certificate needs nMax >= nMin");
    if (run.N < nMax + 1)
        throw config_error("run too short: need blocks up to nMax+1");

    std::vector<TimeWindow> w(nMax + 2);
    for (int n = nMin; n <= nMax + 1; ++n) w[n] = window(n, gamma_n(run, n));

    OverlapReport report;
    report.entries.reserve(nMax - nMin + 1);
    for (int n = nMin; n <= nMax; ++n) {
        OverlapEntry e;
        e.n = n;
        e.s = w[n].s;
        e.t = w[n].t;
        e.overlap_with_next = w[n].t - w[n + 1].s;
        report.entries.push_back(e);
    }
    int n0 = -1;
    for (int i = static_cast<int>(report.entries.size()) - 1; i >= 0; --i) {
        if (report.entries[i].overlap_with_next <= 0.0) break;
        n0 = report.entries[i].n;
    }
    report.n0 = n0;
    return report;
}

nlohmann::json overlap_to_json(const OverlapReport& report) {
    nlohmann::json entries = nlohmann::json::array();
    for (const OverlapEntry& e : report.entries) {
        entries.push_back(nlohmann::json{{"n", e.n},
                                         {"s", e.s},
                                         {"t", e.t},
                                         {"overlapWithNext", e.overlap_with_next}});
    }
    return nlohmann::json{{"n0", report.n0}, {"overlaps", entries}};
}

std::vector<TrajectoryPoint> systole_bound_trajectory(const ConstructionRun& run,
                                                      double t_start, double t_end,
                                                      int samples) {
    if (samples < 1) throw config_error("trajectory needs at least one sample");
    if (!(t_start <= t_end)) throw config_error("trajectory needs t_start <= t_end");
    if (run.N < 3) throw config_error("trajectory needs a run with N >= 3");

    const int n_lo = 3, n_hi = run.N;
    std::vector<double> log_v(n_hi + 1), log_l(n_hi + 1);
    std::vector<TimeWindow> w(n_hi + 1);
    for (int n = n_lo; n <= n_hi; ++n) {
        const Holonomy hol = gamma_n(run, n);
        log_v[n] = log_rat(hol.vertical);
        log_l[n] = log_rat(hol.horizontal);
        w[n] = window(n, hol);
    }

    std::vector<TrajectoryPoint> out;
    out.reserve(samples);
    for (int i = 0; i < samples; ++i) {
        const double t =
            samples == 1 ? t_start
                         : t_start + (t_end - t_start) * static_cast<double>(i) /
                               static_cast<double>(samples - 1);
        double best = std::numeric_limits<double>::infinity();
        int best_n = 0;
        for (int n = n_lo; n <= n_hi; ++n) {
            const double e1 = log_v[n] - t;
            const double e2 = log_l[n] + t;
            const double val = (std::max(e1, e2) > kExpClamp)
                                   ? std::numeric_limits<double>::infinity()
                                   : std::exp(e1) + std::exp(e2);
            if (val < best) {
                best = val;
                best_n = n;
            }
        }
        TrajectoryPoint pt;
        pt.t = t;
        pt.bound = best;
        pt.active_n = best_n;
        pt.window_s = best_n >= n_lo ? w[best_n].s : 0.0;
        pt.window_t = best_n >= n_lo ? w[best_n].t : 0.0;
        out.push_back(pt);
    }
    return out;
}

std::string trajectory_csv(const std::vector<TrajectoryPoint>& points) {
    std::string out = "t,bound,activeN,window_s,window_t\n";
    for (const TrajectoryPoint& p : points) {
        out += csv_double(p.t) + "," + csv_double(p.bound) + "," +
               std::to_string(p.active_n) + "," + csv_double(p.window_s) + "," +
               csv_double(p.window_t) + "\n";
    }
    return out;
}

}  // namespace rauzylab
