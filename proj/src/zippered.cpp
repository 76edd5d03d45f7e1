#include "rauzylab/zippered.hpp"

#include <algorithm>

#include "rauzylab/errors.hpp"
#include "rauzylab/interval_exchange.hpp"

namespace rauzylab {

namespace {

int position_of_last_image(const std::vector<int>& pi) {
    int m = static_cast<int>(pi.size());
    for (int j = 1; j <= m; ++j)
        if (pi[j - 1] == m) return j;
    throw invariant_error("derived permutation has no position mapping to m");
}

std::string pos_str(const char* name, int j) {
    return std::string(name) + "_" + std::to_string(j);
}

}  // namespace

std::vector<int> sigma(const MarkedPermutation& mp) {
    require_irreducible(mp);
    const std::vector<int> pi = derived_permutation(mp);
    const int m = mp.m;
    std::vector<int> inv(m + 1, 0);
    for (int j = 1; j <= m; ++j) inv[pi[j - 1]] = j;
    std::vector<int> s(m + 1, 0);
    s[0] = inv[1] - 1;
    for (int j = 1; j <= m; ++j)
        s[j] = (pi[j - 1] == m) ? m : inv[pi[j - 1] + 1] - 1;
    return s;
}

std::vector<std::string> validate(const ZipperedRectangles& z) {
    std::vector<std::string> report;
    const int m = z.mp.m;
    if (m < 2 || static_cast<int>(z.lambda.size()) != m ||
        static_cast<int>(z.h.size()) != m || static_cast<int>(z.a.size()) != m) {
        report.push_back("field sizes do not match the number of intervals");
        return report;
    }
    if (!irreducible(derived_permutation(z.mp))) {
        report.push_back("derived permutation is reducible");
        return report;
    }
    for (int j = 1; j <= m; ++j)
        if (sgn(z.lambda_at_position(j)) <= 0)
            report.push_back(pos_str("lambda", j) + " is not positive");

    // Positional views with the conventions h_0 = h_{m+1} = 0 and a_0 = 0.
    auto hp = [&](int j) { return (j >= 1 && j <= m) ? z.h_at_position(j) : Rat(0); };
    auto ap = [&](int j) { return (j >= 1) ? z.a[j - 1] : Rat(0); };

    const std::vector<int> pi = derived_permutation(z.mp);
    const int p = position_of_last_image(pi);

    for (int j = 1; j <= m; ++j)
        if (sgn(hp(j)) <= 0) report.push_back(pos_str("h", j) + " is not positive");

    for (int j = 1; j <= m - 1; ++j) {
        if (j == p) continue;
        const Rat cap = std::min(hp(j), hp(j + 1));
        if (!(sgn(ap(j)) > 0 && ap(j) <= cap))
            report.push_back(pos_str("a", j) + " violates 0 < a <= min(" +
                             pos_str("h", j) + ", " + pos_str("h", j + 1) + ")");
    }
    if (!(sgn(ap(p)) > 0 && ap(p) <= hp(p + 1)))
        report.push_back(pos_str("a", p) + " violates 0 < a <= " + pos_str("h", p + 1));
    if (!(-hp(p) <= ap(m) && ap(m) <= hp(m)))
        report.push_back(pos_str("a", m) + " violates -" + pos_str("h", p) +
                         " <= a <= " + pos_str("h", m));

    const std::vector<int> s = sigma(z.mp);
    for (int j = 0; j <= m; ++j) {
        if (hp(j) - ap(j) != hp(s[j] + 1) - ap(s[j]))
            report.push_back("balance fails at j=" + std::to_string(j) + ": " +
                             pos_str("h", j) + " - " + pos_str("a", j) + " != " +
                             pos_str("h", s[j] + 1) + " - " + pos_str("a", s[j]));
    }
    return report;
}

void require_valid(const ZipperedRectangles& z) {
    const std::vector<std::string> report = validate(z);
    if (report.empty()) return;
    std::string msg = "invalid zippered rectangles:";
    for (const std::string& line : report) msg += " [" + line + "]";
    throw config_error(msg);
}

std::vector<GlueRecord> glue_records(const ZipperedRectangles& z) {
    require_valid(z);
    const int m = z.mp.m;
    const std::vector<int> s = sigma(z.mp);
    const std::vector<int> pi = derived_permutation(z.mp);
    const int p = position_of_last_image(pi);
    const IntervalExchange T = to_positional(z.lambda, z.mp);
    const QVec& beta = T.breakpoints();

    auto hp = [&](int j) { return (j >= 1 && j <= m) ? z.h_at_position(j) : Rat(0); };
    auto ap = [&](int j) { return (j >= 1) ? z.a[j - 1] : Rat(0); };
    const int am_sign = sgn(ap(m));

    std::vector<GlueRecord> out;

    // The top of each rectangle maps onto the image of its base interval.
    for (int j = 1; j <= m; ++j) {
        GlueRecord r;
        r.kind = GlueKind::TopToBase;
        r.source = j;
        r.source_lo = beta[j - 1];
        r.source_hi = beta[j];
        r.target = 0;
        r.target_lo = beta[j - 1] + T.offset(j);
        r.target_hi = r.target_lo + z.lambda_at_position(j);
        out.push_back(std::move(r));
    }

    auto side = [](int src, Rat slo, Rat shi, int dst, Rat dlo, Rat dhi) {
        GlueRecord r;
        r.kind = GlueKind::RightToLeft;
        r.source = src;
        r.source_lo = std::move(slo);
        r.source_hi = std::move(shi);
        r.target = dst;
        r.target_lo = std::move(dlo);
        r.target_hi = std::move(dhi);
        return r;
    };

    // Lower identifications: right of R_j onto left of R_{j+1} up to a_j.
    for (int j = 1; j <= m - 1; ++j) {
        if (am_sign > 0 && j == p) {
            // The whole right side of R_p continues into R_{p+1}; the zipper
            // past h_p comes from the bottom of the last rectangle.
            out.push_back(side(p, Rat(0), hp(p), p + 1, Rat(0), hp(p)));
            out.push_back(side(m, Rat(0), ap(m), p + 1, hp(p), ap(p)));
        } else {
            out.push_back(side(j, Rat(0), ap(j), j + 1, Rat(0), ap(j)));
        }
    }

    // Upper identifications: right of R_j above a_j onto the left side of
    // the rectangle sigma(j)+1.  The slot j = p is never emitted directly:
    // its literal target would be the fictitious rectangle m+1, and its
    // range is empty (a_m = 0), inverted (a_m > 0), or rerouted (a_m < 0).
    for (int j = 1; j <= m; ++j) {
        if (j == p) continue;
        if (am_sign < 0 && j == m) {
            // The top of the last right side continues across two pieces of
            // the left side of rectangle sigma(m)+1.
            const int k = s[m] + 1;
            out.push_back(side(p, ap(p), hp(p), k, ap(s[m]), hp(k) - hp(m)));
            out.push_back(side(m, Rat(0), hp(m), k, hp(k) - hp(m), hp(k)));
            continue;
        }
        if (ap(j) == hp(j)) continue;  // empty range; the target range is empty too
        out.push_back(side(j, ap(j), hp(j), s[j] + 1, ap(s[j]), hp(s[j] + 1)));
    }

    // Every record must match an equal length on both sides, and the records
    // must tile each vertical side exactly once.
    std::vector<std::vector<std::pair<Rat, Rat>>> right(m + 1), left(m + 1);
    for (const GlueRecord& r : out) {
        if (r.source_hi - r.source_lo != r.target_hi - r.target_lo)
            throw invariant_error("glue record ranges have unequal lengths");
        if (r.kind != GlueKind::RightToLeft) continue;
        if (r.source_hi <= r.source_lo)
            throw invariant_error("glue record with empty or inverted range");
        right[r.source].emplace_back(r.source_lo, r.source_hi);
        left[r.target].emplace_back(r.target_lo, r.target_hi);
    }
    auto check_tiling = [&](std::vector<std::pair<Rat, Rat>>& ranges, int j,
                            const char* which) {
        std::sort(ranges.begin(), ranges.end());
        Rat at(0);
        for (const auto& [lo, hi] : ranges) {
            if (lo != at)
                throw invariant_error(std::string("gap or overlap on the ") + which +
                                      " side of rectangle " + std::to_string(j));
            at = hi;
        }
        if (at != hp(j))
            throw invariant_error(std::string(which) + " side of rectangle " +
                                  std::to_string(j) + " is not fully glued");
    };
    for (int j = 1; j <= m; ++j) {
        check_tiling(right[j], j, "right");
        check_tiling(left[j], j, "left");
    }
    return out;
}

ZeroReport zero_positions(const ZipperedRectangles& z) {
    require_valid(z);
    const int m = z.mp.m;
    const std::vector<int> pi = derived_permutation(z.mp);
    const int p = position_of_last_image(pi);
    const int am_sign = sgn(z.a[m - 1]);

    ZeroReport report;
    report.points.emplace_back(Rat(0), Rat(0));
    Rat beta(0);
    for (int j = 1; j <= m; ++j) {
        beta += z.lambda_at_position(j);
        report.points.emplace_back(beta, z.a[j - 1]);
    }
    report.right_side_zero.assign(m, true);
    if (am_sign < 0) report.right_side_zero[m - 1] = false;
    if (am_sign > 0) report.right_side_zero[p - 1] = false;
    return report;
}

HeightStep induct_with_heights(const ZipperedRectangles& z) {
    require_valid(z);
    const int m = z.mp.m;
    const std::vector<int> pi = derived_permutation(z.mp);
    const int p = position_of_last_image(pi);

    const InductionStep step = induction_step(z.lambda, z.mp);

    HeightStep result;
    result.label = step.label;
    result.A = step.A;
    result.z.mp = step.mp;
    result.z.lambda = step.lambda;
    result.z.h = matvec(transpose(step.A), z.h);

    // Zipper heights use the positional data of the step being applied.
    auto hp = [&](int j) { return z.h_at_position(j); };
    auto ap = [&](int j) { return (j >= 1) ? z.a[j - 1] : Rat(0); };
    QVec na(m);
    if (step.label == 'a') {
        for (int j = 1; j < p; ++j) na[j - 1] = ap(j);
        na[p - 1] = hp(p) + ap(m - 1);
        for (int j = p + 1; j <= m; ++j) na[j - 1] = ap(j - 1);
    } else {
        for (int j = 1; j < m; ++j) na[j - 1] = ap(j);
        na[m - 1] = -(hp(p) - ap(p - 1));
    }
    result.z.a = std::move(na);

    const std::vector<std::string> report = validate(result.z);
    if (!report.empty()) {
        std::string msg = "induction produced invalid zippered rectangles:";
        for (const std::string& line : report) msg += " [" + line + "]";
        throw invariant_error(msg);
    }
    return result;
}

Rat area(const ZipperedRectangles& z) {
    require_valid(z);
    return dot(z.lambda, z.h);
}

ZipperedRectangles normalize_area(const ZipperedRectangles& z) {
    const Rat s = area(z);
    ZipperedRectangles out = z;
    for (Rat& v : out.h) v /= s;
    for (Rat& v : out.a) v /= s;
    return out;
}

nlohmann::json zipper_to_json(const ZipperedRectangles& z) {
    auto vec = [](const QVec& v) {
        nlohmann::json arr = nlohmann::json::array();
        for (const Rat& x : v) arr.push_back(rat_to_string(x));
        return arr;
    };
    return nlohmann::json{{"nu0", z.mp.nu0},
                          {"nu1", z.mp.nu1},
                          {"lambda_by_name", vec(z.lambda)},
                          {"h_by_name", vec(z.h)},
                          {"a_by_position", vec(z.a)}};
}

nlohmann::json glue_records_to_json(const std::vector<GlueRecord>& records) {
    nlohmann::json arr = nlohmann::json::array();
    for (const GlueRecord& r : records) {
        arr.push_back(nlohmann::json{
            {"kind", r.kind == GlueKind::TopToBase ? "top-to-base" : "right-to-left"},
            {"source", r.source},
            {"source_range", {rat_to_string(r.source_lo), rat_to_string(r.source_hi)}},
            {"target", r.target},
            {"target_range", {rat_to_string(r.target_lo), rat_to_string(r.target_hi)}},
        });
    }
    return arr;
}

}  // namespace rauzylab
