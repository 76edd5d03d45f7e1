#include "rauzylab/interval_exchange.hpp"

#include <algorithm>

namespace rauzylab {

IntervalExchange::IntervalExchange(QVec lens, std::vector<int> perm)
    : lengths(std::move(lens)), pi(std::move(perm)) {
    int m = static_cast<int>(lengths.size());
    if (m < 1) throw config_error("interval exchange needs at least one interval");
    if (static_cast<int>(pi.size()) != m)
        throw config_error("length vector and permutation sizes differ");
    std::vector<bool> seen(m + 1, false);
    for (int p : pi) {
        if (p < 1 || p > m || seen[p])
            throw config_error("pi is not a permutation of {1..m}");
        seen[p] = true;
    }
    for (const Rat& l : lengths)
        if (sgn(l) <= 0) throw config_error("interval lengths must be positive");

    beta_.assign(m + 1, Rat(0));
    for (int j = 1; j <= m; ++j) beta_[j] = beta_[j - 1] + lengths[j - 1];
    offsets_.assign(m, Rat(0));
    for (int j = 1; j <= m; ++j) {
        Rat image_start = 0;
        for (int k = 1; k <= m; ++k)
            if (pi[k - 1] < pi[j - 1]) image_start += lengths[k - 1];
        offsets_[j - 1] = image_start - beta_[j - 1];
    }
}

int IntervalExchange::interval_of(const Rat& x) const {
    if (sgn(x) < 0 || x >= beta_.back())
        throw config_error("point outside [0, beta_m): " + rat_to_string(x));
    // binary search over breakpoints
    int lo = 1, hi = m();
    while (lo < hi) {
        int mid = (lo + hi) / 2;
        if (x < beta_[mid]) hi = mid; else lo = mid + 1;
    }
    return lo;
}

Rat evaluate(const IntervalExchange& T, const Rat& x) {
    return x + T.offset(T.interval_of(x));
}

QVec orbit(const IntervalExchange& T, const Rat& x, std::int64_t steps) {
    if (steps < 0) throw config_error("orbit steps must be >= 0");
    QVec out;
    out.reserve(static_cast<size_t>(steps) + 1);
    Rat cur = x;
    out.push_back(cur);
    for (std::int64_t i = 0; i < steps; ++i) {
        cur = evaluate(T, cur);
        out.push_back(cur);
    }
    return out;
}

IntervalExchange first_return(const IntervalExchange& T, const Rat& cut,
                              std::int64_t cap) {
    if (sgn(cut) <= 0 || cut > T.total())
        throw config_error("cut must lie in (0, beta_m]");

    struct Piece {
        Rat u, v;     // subinterval [u, v) of [0, cut)
        Rat shift;    // current image is [u+shift, v+shift)
        std::int64_t time;
    };
    const QVec& beta = T.breakpoints();

    std::vector<Piece> work;
    {
        QVec cuts{Rat(0), cut};
        for (const Rat& b : beta)
            if (sgn(b) > 0 && b < cut) cuts.push_back(b);
        std::sort(cuts.begin(), cuts.end());
        for (size_t i = 0; i + 1 < cuts.size(); ++i)
            work.push_back({cuts[i], cuts[i + 1], Rat(0), 0});
    }

    std::vector<Piece> done;
    std::int64_t pops = 0;
    while (!work.empty()) {
        if (++pops > cap) throw config_error("non-return within bound");
        Piece p = work.back();
        work.pop_back();
        Rat lo = p.u + p.shift, hi = p.v + p.shift;
        if (p.time > 0) {
            if (hi <= cut) {
                done.push_back(p);
                continue;
            }
            if (lo < cut && cut < hi) {
                work.push_back({p.u, cut - p.shift, p.shift, p.time});
                work.push_back({cut - p.shift, p.v, p.shift, p.time});
                continue;
            }
        }
        // Apply T: first split at any interior breakpoint of T's partition.
        bool split = false;
        for (const Rat& b : beta)
            if (lo < b && b < hi) {
                work.push_back({p.u, b - p.shift, p.shift, p.time});
                work.push_back({b - p.shift, p.v, p.shift, p.time});
                split = true;
                break;
            }
        if (split) continue;
        int j = T.interval_of(lo);
        work.push_back({p.u, p.v, p.shift + T.offset(j), p.time + 1});
    }

    std::sort(done.begin(), done.end(),
              [](const Piece& a, const Piece& b) { return a.u < b.u; });
    int k = static_cast<int>(done.size());
    QVec lens;
    lens.reserve(k);
    for (const Piece& p : done) lens.push_back(p.v - p.u);
    // rank the image start points to recover the induced permutation
    std::vector<int> order(k);
    for (int i = 0; i < k; ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        return done[a].u + done[a].shift < done[b].u + done[b].shift;
    });
    std::vector<int> perm(k);
    for (int rank = 0; rank < k; ++rank) perm[order[rank]] = rank + 1;
    return IntervalExchange(std::move(lens), std::move(perm));
}

double discrepancy(const IntervalExchange& T, const Rat& x, std::int64_t steps,
                   std::int64_t bins) {
    if (steps < 1) throw config_error("discrepancy needs steps >= 1");
    if (bins < 1) throw config_error("discrepancy needs bins >= 1");
    if (sgn(x) < 0 || x >= T.total())
        throw config_error("discrepancy start point outside domain");

    // Rescale to integers: multiply every length and x by the lcm of their
    // denominators, so the orbit becomes integer additions and the bin index
    // an integer division.
    int m = T.m();
    Int denom_lcm = x.get_den();
    for (const Rat& l : T.lengths)
        mpz_lcm(denom_lcm.get_mpz_t(), denom_lcm.get_mpz_t(),
                l.get_den().get_mpz_t());

    IVec beta(m + 1, Int(0));
    for (int j = 1; j <= m; ++j) {
        Rat scaled = T.lengths[j - 1] * Rat(denom_lcm);
        beta[j] = beta[j - 1] + scaled.get_num();
    }
    IVec offs(m);
    for (int j = 1; j <= m; ++j) {
        Int image_start = 0;
        for (int k = 1; k <= m; ++k)
            if (T.pi[k - 1] < T.pi[j - 1]) image_start += beta[k] - beta[k - 1];
        offs[j - 1] = image_start - beta[j - 1];
    }
    Rat x_scaled = x * Rat(denom_lcm);
    Int cur = x_scaled.get_num();
    const Int& total = beta[m];

    std::vector<std::int64_t> counts(static_cast<size_t>(bins), 0);
    Int bin_idx, tmp;
    for (std::int64_t s = 0; s < steps; ++s) {
        tmp = cur * bins;
        mpz_fdiv_q(bin_idx.get_mpz_t(), tmp.get_mpz_t(), total.get_mpz_t());
        ++counts[bin_idx.get_ui()];
        int lo = 1, hi = m;
        while (lo < hi) {
            int mid = (lo + hi) / 2;
            if (cur < beta[mid]) hi = mid; else lo = mid + 1;
        }
        cur += offs[lo - 1];
    }
    double worst = 0.0;
    for (std::int64_t c : counts)
        worst = std::max(worst, std::fabs(static_cast<double>(c) / steps -
                                          1.0 / static_cast<double>(bins)));
    return worst;
}

bool images_tile(const IntervalExchange& T) {
    int m = T.m();
    std::vector<std::pair<Rat, Rat>> images;
    images.reserve(m);
    const QVec& beta = T.breakpoints();
    for (int j = 1; j <= m; ++j)
        images.emplace_back(beta[j - 1] + T.offset(j), beta[j] + T.offset(j));
    std::sort(images.begin(), images.end());
    Rat edge = 0;
    for (auto& [lo, hi] : images) {
        if (lo != edge) return false;
        edge = hi;
    }
    return edge == T.total();
}

}  // namespace rauzylab
