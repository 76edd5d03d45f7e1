// Acceptance gate: ten criteria, one line each, PASS or FAIL with the
// measured numbers.  Criteria are implemented exactly as stated, including
// the wall-clock budgets; a criterion that does not hold for the real data
// fails here rather than being weakened.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <functional>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "rauzylab/construction.hpp"
#include "rauzylab/errors.hpp"
#include "rauzylab/geodesic.hpp"
#include "rauzylab/hilbert.hpp"
#include "rauzylab/induction.hpp"
#include "rauzylab/interval_exchange.hpp"
#include "rauzylab/marked_permutation.hpp"
#include "rauzylab/matrix.hpp"
#include "rauzylab/rational.hpp"
#include "rauzylab/zippered.hpp"

using namespace rauzylab;

namespace {

struct Outcome {
    bool pass = false;
    std::string detail;
};

std::string fmt(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.4g", v);
    return buf;
}

double median(std::vector<double> v) {
    std::sort(v.begin(), v.end());
    size_t k = v.size() / 2;
    if (v.size() % 2 == 1) return v[k];
    return 0.5 * (v[k - 1] + v[k]);
}

// max <= 2 * median, reported as a ratio
struct SeriesVerdict {
    bool ok = false;
    double max = 0.0;
    double med = 0.0;
};

SeriesVerdict bounded_by_twice_median(const std::vector<double>& v) {
    SeriesVerdict s;
    s.max = *std::max_element(v.begin(), v.end());
    s.med = median(v);
    s.ok = s.max <= 2.0 * s.med;
    return s;
}

int rand_int(std::mt19937_64& rng, int lo, int hi) {
    return lo + static_cast<int>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
}

std::vector<int> rand_names(std::mt19937_64& rng, int m) {
    std::vector<int> v(m);
    for (int i = 0; i < m; ++i) v[i] = i + 1;
    for (int i = m - 1; i > 0; --i) std::swap(v[i], v[rand_int(rng, 0, i)]);
    return v;
}

// ---------------------------------------------------------------------- A1

Outcome a1() {
    std::mt19937_64 rng(101);
    int done = 0;
    while (done < 1000) {
        int m = rand_int(rng, 2, 6);
        MarkedPermutation mp(rand_names(rng, m), rand_names(rng, m));
        if (!irreducible(derived_permutation(mp))) continue;
        QVec lam(m);
        for (auto& v : lam) {
            v = Rat(rand_int(rng, 1, 30), rand_int(rng, 1, 8));
            v.canonicalize();
        }
        InductionStep step;
        try {
            step = induction_step(lam, mp);
        } catch (const config_error&) {
            continue;  // tie between the two candidate names; redraw
        }
        IntervalExchange got =
            first_return(to_positional(lam, mp), rauzy_cut(lam, mp));
        IntervalExchange want = to_positional(step.lambda, step.mp);
        if (!(got.lengths == want.lengths && got.pi == want.pi))
            return {false, "induction step and first-return map differ at " +
                               format_marked_permutation(mp)};
        ++done;
    }
    return {true, "1000 random exchanges: induction step == first-return map exactly"};
}

// ---------------------------------------------------------------------- A2

Outcome a2() {
    for (int n = 1; n <= 100; ++n) {
        std::string word = block_word(n);
        if (word.back() != 'a')
            return {false, "block word " + std::to_string(n) + " does not end in a"};
        auto [end, M] = word_matrix(pi0(), word);
        (void)M;
        if (!(end == pi0()))
            return {false, "block word " + std::to_string(n) +
                               " does not return to the base permutation"};
    }
    return {true, "all 100 block words loop at the base permutation and end in a"};
}

// ---------------------------------------------------------------------- A3

Outcome a3() {
    // Displayed leading terms: degree and coefficient per entry, row-major;
    // degree -1 marks the one entry displayed as 0.
    struct Shown {
        int deg;
        long lead;
    };
    const Shown shownC[16] = {
        {0, 1}, {0, 1}, {0, 1}, {0, 1},  //
        {0, 1}, {1, 2}, {1, 2}, {0, 1},  //
        {1, 1}, {2, 1}, {2, 1}, {-1, 0}, //
        {0, 2}, {1, 1}, {1, 1}, {0, 2},
    };
    const Shown shownCC[16] = {
        {1, 1}, {2, 1}, {2, 1}, {0, 4},  //
        {2, 2}, {3, 2}, {3, 2}, {1, 2},  //
        {3, 1}, {4, 1}, {4, 1}, {2, 1},  //
        {2, 1}, {3, 1}, {3, 1}, {1, 1},
    };

    auto fit_one = [](const std::vector<Int>& series, const Shown& want,
                      const char* tag, int i, int j, std::string& bad) {
        PolyFit fit = leading_term_fit(series);
        bool ok = fit.is_polynomial && fit.degree == want.deg &&
                  (want.deg < 0 || fit.leading == want.lead);
        if (!ok) {
            char buf[160];
            std::snprintf(buf, sizeof buf,
                          "%s(%d,%d) fits degree %d leading %s but is displayed "
                          "as degree %d leading %ld",
                          tag, i + 1, j + 1, fit.degree,
                          fit.leading.get_str().c_str(), want.deg, want.lead);
            if (!bad.empty()) bad += "; ";
            bad += buf;
        }
        return ok;
    };

    std::string bad;
    int okCount = 0, total = 0;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            std::vector<Int> series;
            for (int n = 1; n <= 30; ++n) series.push_back(c_matrix(n).at(i, j));
            ++total;
            okCount += fit_one(series, shownC[i * 4 + j], "C", i, j, bad);
        }
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            std::vector<Int> series;
            for (int n = 1; n <= 30; ++n)
                series.push_back(mul(c_matrix(n), c_matrix(n + 1)).at(i, j));
            ++total;
            okCount += fit_one(series, shownCC[i * 4 + j], "CC", i, j, bad);
        }
    char head[64];
    std::snprintf(head, sizeof head, "%d/%d displayed leading terms reproduced",
                  okCount, total);
    if (okCount == total) return {true, head};
    return {false, std::string(head) + "; " + bad};
}

// ---------------------------------------------------------------------- A4

Outcome a4() {
    std::vector<double> series;
    for (int n = 5; n <= 100; ++n) {
        Rat d = delta(mul(c_matrix(n), c_matrix(n + 1)));
        Rat err = d - Rat(1, 16);
        if (err < 0) err = -err;
        series.push_back(n * to_double(err));
    }
    SeriesVerdict v = bounded_by_twice_median(series);
    std::string msg = "n*|delta(C_n C_{n+1}) - 1/16| over n in [5,100]: max " +
                      fmt(v.max) + ", median " + fmt(v.med) + ", ratio " +
                      fmt(v.max / v.med);
    return {v.ok, msg};
}

// ---------------------------------------------------------------------- A5

Outcome a5() {
    int firstPositive = -1;
    double prev = 0.0;
    int below = -1;
    for (int n = 1; n <= 50; ++n) {
        const IMat& H = h_product(n);
        if (!all_positive(H)) {
            if (firstPositive != -1)
                return {false, "positivity of the prefix product is not monotone"};
            continue;
        }
        double diam = cell_diameter(H).diameter;
        if (firstPositive == -1) {
            firstPositive = n;
        } else if (!(diam < prev)) {
            return {false, "diameter not strictly decreasing at n=" +
                               std::to_string(n)};
        }
        prev = diam;
        if (below == -1 && diam < 1e-6) below = n;
    }
    if (firstPositive == -1) return {false, "no positive prefix product by n=50"};
    if (below == -1) return {false, "diameter never fell below 1e-6 by n=50"};
    return {true, "diameter strictly decreasing from n=" +
                      std::to_string(firstPositive) + ", below 1e-6 at n=" +
                      std::to_string(below)};
}

// ---------------------------------------------------------------------- A6

Outcome a6() {
    ConstructionRun run = construction_run(100);
    for (int n = 0; n <= 100; ++n) {
        if (dot(run.lambda[n], run.h[n]) != 1)
            return {false, "<lambda_n, h_n> != 1 at n=" + std::to_string(n)};
        auto violations = validate(run.state(n));
        if (!violations.empty())
            return {false, "suspension constraints fail at n=" +
                               std::to_string(n) + ": " + violations.front()};
    }
    return {true, "area 1 exactly and all suspension constraints hold at "
                  "every block boundary up to n=100"};
}

// ---------------------------------------------------------------------- A7

Outcome a7() {
    ConstructionRun run = construction_run(101);
    const char* names[9] = {
        "n*lam1/lam3", "n*lam2/lam3", "n*lam4/lam3", "h1/h3", "h2/h3",
        "h4/h3",       "n*|lam3*h3-1|", "n^3*lam4*h4", "n^2*lam4'/lam4",
    };
    std::vector<double> series[9];
    for (int n = 5; n <= 100; ++n) {
        const QVec& lam = run.lambda[n];
        const QVec& h = run.h[n];
        const int idx[3] = {0, 1, 3};  // names 1, 2, 4
        for (int k = 0; k < 3; ++k) {
            series[k].push_back(n * to_double(Rat(lam[idx[k]] / lam[2])));
            series[3 + k].push_back(to_double(Rat(h[idx[k]] / h[2])));
        }
        Rat err = lam[2] * h[2] - 1;
        if (err < 0) err = -err;
        series[6].push_back(n * to_double(err));
        series[7].push_back(static_cast<double>(n) * n * n *
                            to_double(Rat(lam[3] * h[3])));
        series[8].push_back(static_cast<double>(n) * n *
                            to_double(Rat(run.lambda[n + 1][3] / lam[3])));
    }
    std::string good, bad;
    int okCount = 0;
    for (int k = 0; k < 9; ++k) {
        SeriesVerdict v = bounded_by_twice_median(series[k]);
        std::string entry = std::string(names[k]) + " ratio " + fmt(v.max / v.med);
        if (v.ok) {
            ++okCount;
        } else {
            if (!bad.empty()) bad += ", ";
            bad += entry;
        }
    }
    char head[80];
    std::snprintf(head, sizeof head,
                  "%d/9 series bounded by twice their median over n in [5,100]",
                  okCount);
    if (okCount == 9) return {true, head};
    return {false, std::string(head) + "; exceeded by " + bad};
}

// ---------------------------------------------------------------------- A8

Outcome a8() {
    ConstructionRun run = construction_run(201);
    OverlapReport cert = overlap_certificate(run, 3, 200);
    if (cert.n0 == -1 || cert.n0 > 10)
        return {false, "no certified chain start at or below n=10 (n0=" +
                           std::to_string(cert.n0) + ")"};
    for (const auto& e : cert.entries)
        if (e.n >= cert.n0 && e.overlap_with_next <= 0)
            return {false, "window gap at n=" + std::to_string(e.n)};

    double sStart = 0.0, tEnd = 0.0;
    std::map<int, const OverlapEntry*> byN;
    for (const auto& e : cert.entries) byN[e.n] = &e;
    sStart = byN.at(cert.n0)->s;
    tEnd = byN.at(200)->t;

    auto pts = systole_bound_trajectory(run, sStart, tEnd, 1000);
    double prevEnvelope = 1e300;
    int prevActive = 0;
    for (const auto& p : pts) {
        double cap = 2.0 / std::log(static_cast<double>(p.active_n));
        if (!(p.bound <= cap * (1 + 1e-12)))
            return {false, "systole bound exceeds 2/log(n) at t=" + fmt(p.t)};
        if (p.active_n < prevActive)
            return {false, "active window index decreased at t=" + fmt(p.t)};
        prevActive = p.active_n;
        if (cap > prevEnvelope * (1 + 1e-12))
            return {false, "per-window envelope increased at t=" + fmt(p.t)};
        prevEnvelope = std::min(prevEnvelope, cap);
    }

    std::vector<double> gaps;
    for (int n = 10; n <= 100; ++n)
        gaps.push_back(std::abs(byN.at(n + 1)->t - byN.at(n)->t -
                                2.0 * std::log(static_cast<double>(n))));
    SeriesVerdict v = bounded_by_twice_median(gaps);
    std::string msg = "n0=" + std::to_string(cert.n0) +
                      ", 1000 sampled bounds below 2/log(n), envelope "
                      "nonincreasing; |t_{n+1}-t_n-2 log n| max " +
                      fmt(v.max) + ", median " + fmt(v.med) + ", ratio " +
                      fmt(v.max / v.med);
    return {v.ok, msg};
}

// ---------------------------------------------------------------------- A9

Outcome a9() {
    auto measure = [](int depth) {
        LambdaTail lt = lambda_tail(0, depth);
        IntervalExchange T = to_positional(lt.lambda, pi0());
        Rat x = Rat(T.total() * Rat(1, 7));
        return discrepancy(T, x, 1000000, 100);
    };
    double d20 = measure(20);
    double d40 = measure(40);
    std::string msg = "discrepancy from x = |I|/7 over 1e6 steps, 100 bins: " +
                      fmt(d20) + " at depth 20, " + fmt(d40) + " at depth 40";
    if (!(d40 < 0.01)) return {false, msg + "; not below 0.01"};
    if (!(d40 < d20))
        return {false, msg + "; no strict decrease from depth 20 to depth 40"};
    return {true, msg};
}

// --------------------------------------------------------------------- A10

Outcome a10() {
    std::mt19937_64 rng(1010);
    for (int trial = 0; trial < 1000; ++trial) {
        IMat L(4);
        for (auto& e : L.a) e = rand_int(rng, 1, 9);
        QVec x(4), y(4), z(4);
        for (int i = 0; i < 4; ++i) {
            x[i] = Rat(rand_int(rng, 1, 30), rand_int(rng, 1, 9));
            y[i] = Rat(rand_int(rng, 1, 30), rand_int(rng, 1, 9));
            z[i] = Rat(rand_int(rng, 1, 30), rand_int(rng, 1, 9));
            x[i].canonicalize();
            y[i].canonicalize();
            z[i].canonicalize();
        }
        double dxz = distance(x, z), dxy = distance(x, y), dyz = distance(y, z);
        if (!(dxz <= dxy + dyz + 1e-12))
            return {false, "triangle inequality failed at trial " +
                               std::to_string(trial)};
        Rat c(rand_int(rng, 1, 12), rand_int(rng, 1, 12));
        c.canonicalize();
        QVec cx(4);
        for (int i = 0; i < 4; ++i) cx[i] = Rat(c * x[i]);
        if (gamma(cx, y) != gamma(x, y))
            return {false, "projective invariance failed at trial " +
                               std::to_string(trial)};
        ContractionReport rep = contraction_check(L, x, y);
        if (!rep.gamma_ok)
            return {false, "exact cone contraction failed at trial " +
                               std::to_string(trial)};
        if (!rep.distance_ok)
            return {false, "metric contraction failed at trial " +
                               std::to_string(trial)};
    }
    return {true, "1000 random matrices and point triples satisfy all four bounds"};
}

// ----------------------------------------------------------------- driver

struct Criterion {
    const char* name;
    Outcome (*fn)();
    double budget_s;
};

const Criterion kCriteria[] = {
    {"A1", a1, 30},  {"A2", a2, 5},   {"A3", a3, 10}, {"A4", a4, 60},
    {"A5", a5, 60},  {"A6", a6, 60},  {"A7", a7, 120}, {"A8", a8, 60},
    {"A9", a9, 120}, {"A10", a10, 30},
};

int run_one(const Criterion& c) {
    auto start = std::chrono::steady_clock::now();
    Outcome out;
    try {
        out = c.fn();
    } catch (const std::exception& e) {
        out = {false, std::string("threw: ") + e.what()};
    }
    double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
            .count();
    if (out.pass && elapsed > c.budget_s) {
        out.pass = false;
        out.detail += "; over the " + fmt(c.budget_s) + " s budget";
    }
    std::printf("%s %s (%.1f s): %s\n", c.name, out.pass ? "PASS" : "FAIL",
                elapsed, out.detail.c_str());
    std::fflush(stdout);
    return out.pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    if (argc != 2) {
        std::fprintf(stderr, "usage: acceptance <A1..A10|all>\n");
        return 2;
    }
    int failures = 0;
    bool matched = false;
    for (const Criterion& c : kCriteria) {
        if (std::strcmp(argv[1], "all") == 0 || std::strcmp(argv[1], c.name) == 0) {
            matched = true;
            failures += run_one(c);
        }
    }
    if (!matched) {
        std::fprintf(stderr, "unknown criterion: %s\n", argv[1]);
        return 2;
    }
    return failures == 0 ? 0 : 1;
}
