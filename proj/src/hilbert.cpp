#include "rauzylab/hilbert.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "rauzylab/errors.hpp"

namespace rauzylab {

Rat gamma(const QVec& x, const QVec& y) {
    const int n = static_cast<int>(x.size());
    if (n == 0 || static_cast<int>(y.size()) != n)
        throw config_error("gamma needs two vectors of equal nonzero size");
    bool any_x = false, any_y = false;
    for (const Rat& v : x) {
        if (sgn(v) < 0) throw config_error("gamma needs nonnegative coordinates");
        any_x = any_x || sgn(v) > 0;
    }
    for (const Rat& v : y) {
        if (sgn(v) < 0) throw config_error("gamma needs nonnegative coordinates");
        any_y = any_y || sgn(v) > 0;
    }
    if (!any_x || !any_y) throw config_error("gamma needs nonzero vectors");

    bool have = false;
    Rat best;
    for (int i = 0; i < n; ++i) {
        if (sgn(x[i]) == 0) continue;
        for (int j = 0; j < n; ++j) {
            if (sgn(y[j]) == 0) continue;
            Rat r = (x[j] * y[i]) / (x[i] * y[j]);
            if (!have || r < best) {
                best = std::move(r);
                have = true;
            }
        }
    }
    return best;
}

double distance(const QVec& x, const QVec& y) {
    for (const Rat& v : x)
        if (sgn(v) <= 0) throw config_error("distance needs strictly positive coordinates");
    for (const Rat& v : y)
        if (sgn(v) <= 0) throw config_error("distance needs strictly positive coordinates");
    return -log_rat_near_one(gamma(x, y));
}

Rat delta(const IMat& L) {
    const int n = L.n;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (sgn(L.at(i, j)) <= 0)
                throw config_error("delta needs a strictly positive matrix");
    Rat best(1);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int r = 0; r < n; ++r)
                for (int s = 0; s < n; ++s) {
                    Rat v = Rat(L.at(i, r) * L.at(j, s)) / Rat(L.at(i, s) * L.at(j, r));
                    if (v < best) best = std::move(v);
                }
    return best;
}

CellDiameter cell_diameter(const IMat& M) {
    const int n = M.n;
    bool positive = true;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (sgn(M.at(i, j)) < 0)
                throw config_error("cell generator must be nonnegative");
            if (sgn(M.at(i, j)) == 0) positive = false;
        }

    std::vector<QVec> cols(n, QVec(n));
    for (int j = 0; j < n; ++j) {
        bool nonzero = false;
        for (int i = 0; i < n; ++i) {
            cols[j][i] = Rat(M.at(i, j));
            nonzero = nonzero || sgn(M.at(i, j)) > 0;
        }
        if (!nonzero) throw config_error("cell generator has a zero column");
    }

    CellDiameter out;
    bool have = false;
    Rat min_pair_gamma(1);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            Rat g = gamma(cols[i], cols[j]);
            if (!have || g < min_pair_gamma) {
                min_pair_gamma = std::move(g);
                have = true;
            }
        }
    out.vertex_lower_bound =
        (have && sgn(min_pair_gamma) == 0)
            ? std::numeric_limits<double>::infinity()
            : (have ? -log_rat_near_one(min_pair_gamma) : 0.0);

    if (!positive) {
        out.finite = false;
        out.diameter = std::numeric_limits<double>::infinity();
        out.delta_value = Rat(0);
        return out;
    }
    out.delta_value = delta(M);
    out.diameter = -log_rat_near_one(out.delta_value);
    if (have && min_pair_gamma < out.delta_value)
        throw invariant_error("vertex distance exceeds the projective diameter");
    return out;
}

ContractionReport contraction_check(const IMat& L, const QVec& x, const QVec& y) {
    if (static_cast<int>(x.size()) != L.n || static_cast<int>(y.size()) != L.n)
        throw config_error("contraction check needs vectors matching the matrix size");
    ContractionReport rep;
    rep.delta_value = delta(L);
    rep.gamma_before = gamma(x, y);
    const QVec Lx = matvec(L, x);
    const QVec Ly = matvec(L, y);
    rep.gamma_after = gamma(Lx, Ly);
    rep.gamma_required = (rep.delta_value + rep.gamma_before) /
                         (Rat(1) + rep.delta_value * rep.gamma_before);
    rep.gamma_ok = rep.gamma_after >= rep.gamma_required;

    rep.d_before = distance(x, y);
    rep.d_after = distance(Lx, Ly);
    rep.d_allowed = to_double(Rat(1) - rep.delta_value) * rep.d_before;
    rep.distance_ok =
        rep.d_after <= rep.d_allowed + 1e-12 * std::max(1.0, rep.d_allowed);
    return rep;
}

}  // namespace rauzylab
