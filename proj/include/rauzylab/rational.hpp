#pragma once

#include <gmpxx.h>

#include <cmath>
#include <string>
#include <vector>

#include "rauzylab/errors.hpp"

namespace rauzylab {

using Int = mpz_class;
using Rat = mpq_class;
using IVec = std::vector<Int>;
using QVec = std::vector<Rat>;

// Parse "p", "p/q", or a decimal like "0.25" into an exact rational.
Rat rat_from_string(const std::string& s);

// Canonical "p/q" (or "p" when q == 1); round-trips through rat_from_string.
std::string rat_to_string(const Rat& q);

// Natural log of a positive rational whose numerator/denominator may have
// thousands of digits. Splits each integer as d*2^e with d in [0.5, 1).
double log_rat(const Rat& q);

// Natural log of a rational q = 1 + eps known to be near 1. Going through
// the exact eps keeps precision when |eps| is far below DBL_EPSILON, where
// log(to_double(q)) would collapse to 0.
double log_rat_near_one(const Rat& q);

inline double to_double(const Rat& q) { return mpq_get_d(q.get_mpq_t()); }

inline Rat dot(const QVec& x, const QVec& y) {
    Rat s = 0;
    for (size_t i = 0; i < x.size(); ++i) s += x[i] * y[i];
    return s;
}

inline Rat sum(const QVec& x) {
    Rat s = 0;
    for (const Rat& v : x) s += v;
    return s;
}

}  // namespace rauzylab
