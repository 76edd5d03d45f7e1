#pragma once

#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "rauzylab/induction.hpp"
#include "rauzylab/marked_permutation.hpp"
#include "rauzylab/rational.hpp"

namespace rauzylab {

// Suspension datum (mp, lambda, h, a) over a marked interval exchange.
// lambda and h are indexed by interval NAME (so matrix updates act on them
// directly); a is indexed by POSITION: a[j-1] is the zipper height a_j of
// the j-th rectangle from the left.  Positional views go through nu0.
struct ZipperedRectangles {
    MarkedPermutation mp;
    QVec lambda;
    QVec h;
    QVec a;

    ZipperedRectangles() = default;
    ZipperedRectangles(MarkedPermutation p, QVec lam, QVec hh, QVec aa)
        : mp(std::move(p)), lambda(std::move(lam)), h(std::move(hh)), a(std::move(aa)) {}

    int m() const { return mp.m; }
    const Rat& lambda_at_position(int j) const { return lambda[mp.nu0_at(j) - 1]; }
    const Rat& h_at_position(int j) const { return h[mp.nu0_at(j) - 1]; }
    const Rat& a_at_position(int j) const { return a[j - 1]; }
};

// Permutation sigma on {0,...,m}: sigma[0] = pi^{-1}(1) - 1,
// sigma[pi^{-1}(m)] = m, otherwise sigma[j] = pi^{-1}(pi(j)+1) - 1,
// where pi is the derived positional permutation of mp.
std::vector<int> sigma(const MarkedPermutation& mp);

// One message per violated suspension constraint; empty iff z is a valid
// zippered rectangle.  Never throws.
std::vector<std::string> validate(const ZipperedRectangles& z);

// Throws config_error listing the violations when z is invalid.
void require_valid(const ZipperedRectangles& z);

enum class GlueKind {
    TopToBase,    // top edge of a rectangle onto part of the base interval
    RightToLeft,  // right side of one rectangle onto the left side of another
};

// One boundary identification z -> z + c.  For TopToBase the ranges are
// x-intervals (source: the top of rectangle `source`; target: its image on
// the base, target = 0).  For RightToLeft they are height ranges on the
// right side of `source` and the left side of `target`.
struct GlueRecord {
    GlueKind kind = GlueKind::RightToLeft;
    int source = 0;
    Rat source_lo, source_hi;
    int target = 0;
    Rat target_lo, target_hi;
};

// Full identification list for the applicable case (a_m = 0, > 0, < 0).
// Asserts that every vertical side is tiled exactly once and that matched
// ranges have equal lengths.
std::vector<GlueRecord> glue_records(const ZipperedRectangles& z);

// Singular points of the flat metric: (0,0) and (beta_j, a_j) for j=1..m,
// plus per-rectangle flags for whether the right side carries one of them.
struct ZeroReport {
    std::vector<std::pair<Rat, Rat>> points;
    std::vector<bool> right_side_zero;  // [j-1]: right side of rectangle j
};
ZeroReport zero_positions(const ZipperedRectangles& z);

struct HeightStep {
    ZipperedRectangles z;
    IMat A;
    char label = '?';
};

// One step of induction carried to the suspension: (lambda', mp') from the
// plain induction step, h' = A^t h, and the zipper heights shifted into
// place.  The result is checked to be valid again.
HeightStep induct_with_heights(const ZipperedRectangles& z);

// Total flat area, sum over rectangles of width * height.
Rat area(const ZipperedRectangles& z);

// Scales h and a by 1/area; the constraints are homogeneous in (h, a).
ZipperedRectangles normalize_area(const ZipperedRectangles& z);

nlohmann::json zipper_to_json(const ZipperedRectangles& z);
nlohmann::json glue_records_to_json(const std::vector<GlueRecord>& records);

}  // namespace rauzylab
