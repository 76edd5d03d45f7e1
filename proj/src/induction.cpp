#include "rauzylab/induction.hpp"

namespace rauzylab {

IMat elementary_matrix(const MarkedPermutation& mp, char label) {
    int last0 = mp.nu0_at(mp.m), last1 = mp.nu1_at(mp.m);
    IMat A = IMat::identity(mp.m);
    if (label == 'a')
        A.at(last1 - 1, last0 - 1) = 1;
    else if (label == 'b')
        A.at(last0 - 1, last1 - 1) = 1;
    else
        throw config_error("edge label must be 'a' or 'b'");
    return A;
}

InductionStep induction_step(const QVec& lambda, const MarkedPermutation& mp) {
    if (static_cast<int>(lambda.size()) != mp.m)
        throw config_error("length vector size does not match m");
    for (const Rat& l : lambda)
        if (sgn(l) <= 0) throw config_error("lengths must be positive");
    int last0 = mp.nu0_at(mp.m), last1 = mp.nu1_at(mp.m);
    const Rat& l0 = lambda[last0 - 1];
    const Rat& l1 = lambda[last1 - 1];
    if (l0 == l1)
        throw config_error("outside induction domain: lambda(nu0(m)) == lambda(nu1(m))");

    InductionStep step;
    step.lambda = lambda;
    if (l1 > l0) {
        step.label = 'a';
        step.lambda[last1 - 1] = l1 - l0;
        step.mp = op_a(mp);
    } else {
        step.label = 'b';
        step.lambda[last0 - 1] = l0 - l1;
        step.mp = op_b(mp);
    }
    step.A = elementary_matrix(mp, step.label);
    return step;
}

std::pair<MarkedPermutation, IMat> word_matrix(const MarkedPermutation& start,
                                               const std::string& word) {
    MarkedPermutation cur = start;
    IMat M = IMat::identity(start.m);
    for (char c : word) {
        M = mul(M, elementary_matrix(cur, c));
        cur = (c == 'a') ? op_a(cur) : (c == 'b') ? op_b(cur)
              : throw config_error("path word may contain only 'a' and 'b'");
    }
    return {cur, M};
}

std::vector<InductionStep> expansion(const QVec& lambda,
                                     const MarkedPermutation& mp, int k) {
    if (k < 0) throw config_error("expansion length must be >= 0");
    std::vector<InductionStep> steps;
    steps.reserve(k);
    QVec cur = lambda;
    MarkedPermutation at = mp;
    for (int i = 0; i < k; ++i) {
        InductionStep s = induction_step(cur, at);
        cur = s.lambda;
        at = s.mp;
        steps.push_back(std::move(s));
    }
    return steps;
}

IntervalExchange to_positional(const QVec& lambda, const MarkedPermutation& mp) {
    QVec pos(mp.m);
    for (int j = 1; j <= mp.m; ++j) pos[j - 1] = lambda[mp.nu0_at(j) - 1];
    return IntervalExchange(std::move(pos), derived_permutation(mp));
}

Rat rauzy_cut(const QVec& lambda, const MarkedPermutation& mp) {
    Rat total = sum(lambda);
    const Rat& l0 = lambda[mp.nu0_at(mp.m) - 1];
    const Rat& l1 = lambda[mp.nu1_at(mp.m) - 1];
    return total - (l0 < l1 ? l0 : l1);
}

}  // namespace rauzylab
