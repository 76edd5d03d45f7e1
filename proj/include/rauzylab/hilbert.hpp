#pragma once

#include "rauzylab/matrix.hpp"
#include "rauzylab/rational.hpp"

namespace rauzylab {

// Projective contraction coefficient Gamma(x, y) = min x_j y_i / (x_i y_j)
// over pairs with x_i, y_j nonzero.  Exact; Gamma <= 1 with equality iff the
// vectors are proportional.  Inputs must be nonnegative and not all zero.
Rat gamma(const QVec& x, const QVec& y);

// Hilbert projective distance -log Gamma(x, y); requires strictly positive
// coordinates.
double distance(const QVec& x, const QVec& y);

// delta(L) = min over index quadruples of L_ir L_js / (L_is L_jr) for a
// strictly positive matrix; 0 < delta <= 1.
Rat delta(const IMat& L);

// Projective diameter of the image cell of the positive simplex under M:
// -log delta(M), together with the largest pairwise distance among the
// column images (the vertex images), which is checked exactly to be a
// lower bound.  A zero entry makes the diameter infinite.
struct CellDiameter {
    bool finite = true;
    double diameter = 0.0;
    double vertex_lower_bound = 0.0;
    Rat delta_value;
};
CellDiameter cell_diameter(const IMat& M);

// Checks both contraction estimates for a positive matrix on positive
// points: the exact cone bound Gamma(Lx, Ly) >= (d + G)/(1 + d G) with
// d = delta(L), G = Gamma(x, y), and the metric bound
// distance(Lx, Ly) <= (1 - delta(L)) * distance(x, y) up to float tolerance.
struct ContractionReport {
    Rat delta_value;
    Rat gamma_before;
    Rat gamma_after;
    Rat gamma_required;   // (delta + gamma_before) / (1 + delta * gamma_before)
    bool gamma_ok = false;
    double d_before = 0.0;
    double d_after = 0.0;
    double d_allowed = 0.0;  // (1 - delta) * d_before
    bool distance_ok = false;
};
ContractionReport contraction_check(const IMat& L, const QVec& x, const QVec& y);

}  // namespace rauzylab
