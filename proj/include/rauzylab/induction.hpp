#pragma once

#include <string>
#include <vector>

#include "rauzylab/interval_exchange.hpp"
#include "rauzylab/marked_permutation.hpp"
#include "rauzylab/matrix.hpp"
#include "rauzylab/rational.hpp"

namespace rauzylab {

// Length vectors here are name-indexed: lambda[name-1] is the length of the
// interval called `name`, independent of where nu0/nu1 place it.

struct InductionStep {
    QVec lambda;            // shortened lengths (name-indexed)
    MarkedPermutation mp;
    IMat A;                 // elementary matrix with lambda_old = A * lambda_new
    char label = 'a';
};

// The elementary matrix of one induction move at mp: identity plus a single 1
// at name-pair (nu1(m), nu0(m)) for label 'a', (nu0(m), nu1(m)) for 'b'.
IMat elementary_matrix(const MarkedPermutation& mp, char label);

// One Rauzy move. Case a when lambda(nu1(m)) > lambda(nu0(m)): that interval
// is shortened by lambda(nu0(m)) and nu0 is rearranged by op_a. Case b is
// symmetric. Equal lengths are outside the induction domain.
InductionStep induction_step(const QVec& lambda, const MarkedPermutation& mp);

// Product of elementary matrices along the labeled path from `start`.
std::pair<MarkedPermutation, IMat> word_matrix(const MarkedPermutation& start,
                                               const std::string& word);

// k successive induction steps; lambda = A_1 ... A_i lambda_i at every prefix.
std::vector<InductionStep> expansion(const QVec& lambda,
                                     const MarkedPermutation& mp, int k);

// Positional view of a named IET: lengths reordered by nu0, permutation is
// the derived one. This is the coordinate system module iet works in.
IntervalExchange to_positional(const QVec& lambda, const MarkedPermutation& mp);

// The interval the next induction step removes: everything from the cut up.
Rat rauzy_cut(const QVec& lambda, const MarkedPermutation& mp);

}  // namespace rauzylab
