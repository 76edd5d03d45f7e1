#pragma once

#include <cstdint>
#include <vector>

#include "rauzylab/rational.hpp"

namespace rauzylab {

// Interval exchange in position coordinates: lengths[j-1] is the length of
// the j-th subinterval I_j = [beta_{j-1}, beta_j), and pi[j-1] = pi(j) gives
// the rank of I_j's image. The map translates each I_j so that the images
// tile [0, beta_m) in pi-order.
struct IntervalExchange {
    QVec lengths;
    std::vector<int> pi;

    IntervalExchange(QVec lens, std::vector<int> perm);

    int m() const { return static_cast<int>(lengths.size()); }
    const QVec& breakpoints() const { return beta_; }   // beta_0 .. beta_m
    Rat total() const { return beta_.back(); }
    // Translation offset of interval j (1-based): T(x) = x + offset(j) on I_j.
    const Rat& offset(int j) const { return offsets_[j - 1]; }
    // 1-based index j with x in I_j.
    int interval_of(const Rat& x) const;

  private:
    QVec beta_;
    QVec offsets_;
};

Rat evaluate(const IntervalExchange& T, const Rat& x);

// [x, T(x), ..., T^steps(x)], so steps+1 values, all exact.
QVec orbit(const IntervalExchange& T, const Rat& x, std::int64_t steps);

// Brute-force first-return map on [0, cut). Splits [0, cut) into finitely
// many pieces on which the return time is constant; throws config_error
// ("non-return within bound") if the piece worklist exceeds `cap` pops.
IntervalExchange first_return(const IntervalExchange& T, const Rat& cut,
                              std::int64_t cap = 1'000'000);

// Max over `bins` equal subintervals of |visit frequency - 1/bins| along the
// orbit x, T(x), ..., T^{steps-1}(x).
double discrepancy(const IntervalExchange& T, const Rat& x, std::int64_t steps,
                   std::int64_t bins);

// Exact check that the image intervals tile [0, beta_m) without overlap.
bool images_tile(const IntervalExchange& T);

}  // namespace rauzylab
