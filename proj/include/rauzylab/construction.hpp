#pragma once

#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "rauzylab/matrix.hpp"
#include "rauzylab/rational.hpp"
#include "rauzylab/zippered.hpp"

namespace rauzylab {

// The base marked permutation on four intervals: nu0 = 1234, nu1 = 4321.
const MarkedPermutation& pi0();

// Loop words through pi0 and their matrices.  Both loops are re-verified to
// end at pi0 every time the matrices are assembled.
std::string a_word(int n);      // "ba" + b^n + "a" + "bb"
std::string b_word(int n);      // "ab" + a^n + "b" + "aa"
std::string block_word(int n);  // a_word(n) + b_word(n)

const IMat& c_matrix(int n);   // cached product over block_word(n)
const IMat& h_product(int N);  // cached prefix product C_1 ... C_N

// The full certified run up to block N: exact length data from a depth-W
// tail product, heights and zipper data carried through every single
// induction step with the suspension constraints checked exactly, the
// designed letter of the word compared against the branch the lengths force,
// and the block recursions for h cross-checked.
//
// Indexing: entries [n] for n = 0..N; block boundaries are at pi0, where
// name and position agree, so the vectors can be read either way.
struct ConstructionRun {
    int N = 0;
    int W = 0;
    std::vector<QVec> lambda;  // lambda_n, scaled so |lambda_0| = 1
    std::vector<QVec> h;       // h_n (area <lambda_n, h_n> = 1 exactly)
    std::vector<QVec> a;       // zipper heights a_n
    long steps_validated = 0;

    ZipperedRectangles state(int n) const;
};

ConstructionRun construction_run(int N, int W = 10);

// Fixed-window approximation of lambda_n: the normalized image of the
// barycenter direction under C_{n+1}...C_{n+W}, scaled so <lambda, h_n> = 1
// with h_n taken from a certified run.  The Hilbert diameter of the window
// product bounds the projective error and is reported alongside.
struct LambdaTail {
    QVec lambda;
    double error_bound = 0.0;
};
LambdaTail lambda_tail(int n, int W = 10);

// Coordinatewise enclosure of the limit direction: min/max over the
// sum-normalized columns of H_N.
std::vector<std::pair<Rat, Rat>> limit_enclosure(int N);

// (h_n, a_n) for n = 0..N from the certified run.
std::vector<std::pair<QVec, QVec>> heights_sequence(int N);

struct AsymptoticRow {
    int n = 0;
    double delta_cc = 0.0;  // delta(C_n C_{n+1})
    double lam1_over_lam3 = 0.0;
    double lam2_over_lam3 = 0.0;
    double lam4_over_lam3 = 0.0;
    double h1_over_h3 = 0.0;
    double h2_over_h3 = 0.0;
    double h4_over_h3 = 0.0;
    double lam3h3 = 0.0;      // lambda_n(3) h_n(3)
    double n3_lam4h4 = 0.0;   // n^3 lambda_n(4) h_n(4)
    double cell_diam = 0.0;   // -log delta(H_n); inf while H_n has zeros
};
std::vector<AsymptoticRow> asymptotics_report(int maxN, int W = 10);
std::string asymptotics_csv(const std::vector<AsymptoticRow>& rows);

// Exact polynomial detection by finite differences.  is_polynomial is set
// when some difference level vanishes identically within the sample; the
// leading coefficient is the top nonzero difference divided by degree!.
struct PolyFit {
    bool is_polynomial = false;
    int degree = -1;  // -1 for the identically zero series
    Rat leading;
};
PolyFit leading_term_fit(const std::vector<Int>& series);

nlohmann::json matrix_to_json(const IMat& M);

}  // namespace rauzylab
