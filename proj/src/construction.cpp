#include "rauzylab/construction.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <deque>
#include <map>
#include <mutex>

#include "rauzylab/errors.hpp"
#include "rauzylab/hilbert.hpp"
#include "rauzylab/induction.hpp"

namespace rauzylab {

namespace {

std::mutex c_mutex;
std::mutex h_mutex;

QVec ones_vector(int m) { return QVec(m, Rat(1)); }

std::string csv_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return std::string(buf);
}

}  // namespace

const MarkedPermutation& pi0() {
    static const MarkedPermutation p({1, 2, 3, 4}, {4, 3, 2, 1});
    return p;
}

std::string a_word(int n) {
    if (n < 1) throw config_error("block index must be >= 1");
    return "ba" + std::string(n, 'b') + "a" + "bb";
}

std::string b_word(int n) {
    if (n < 1) throw config_error("block index must be >= 1");
    return "ab" + std::string(n, 'a') + "b" + "aa";
}

std::string block_word(int n) { return a_word(n) + b_word(n); }

const IMat& c_matrix(int n) {
    if (n < 1) throw config_error("block index must be >= 1");
    std::lock_guard<std::mutex> lock(c_mutex);
    static std::map<int, IMat> cache;
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;

    auto [endA, A] = word_matrix(pi0(), a_word(n));
    if (!(endA == pi0()))
        throw invariant_error("first loop word does not return to the base permutation");
    auto [endB, B] = word_matrix(pi0(), b_word(n));
    if (!(endB == pi0()))
        throw invariant_error("second loop word does not return to the base permutation");
    return cache.emplace(n, mul(A, B)).first->second;
}

const IMat& h_product(int N) {
    if (N < 1) throw config_error("prefix product needs N >= 1");
    for (int k = 1; k <= N; ++k) (void)c_matrix(k);
    std::lock_guard<std::mutex> lock(h_mutex);
    static std::deque<IMat> cache;  // cache[k-1] = C_1 ... C_k; stable references
    while (static_cast<int>(cache.size()) < N) {
        const int k = static_cast<int>(cache.size()) + 1;
        const IMat& Ck = c_matrix(k);
        cache.push_back(k == 1 ? Ck : mul(cache.back(), Ck));
    }
    return cache[N - 1];
}

ZipperedRectangles ConstructionRun::state(int n) const {
    if (n < 0 || n > N) throw config_error("block index out of range");
    return ZipperedRectangles(pi0(), lambda[n], h[n], a[n]);
}

ConstructionRun construction_run(int N, int W) {
    if (N < 0) throw config_error("block count must be >= 0");
    if (W < 1) throw config_error("tail window must be >= 1");

    ConstructionRun run;
    run.N = N;
    run.W = W;
    const int top = N + W;

    // Exact length data: u_n = C_{n+1} ... C_top * (1,1,1,1)^t, normalized by
    // the total length of u_0 so |lambda_0| = 1.
    std::vector<IVec> u(top + 1);
    u[top] = IVec(4, Int(1));
    for (int n = top - 1; n >= 0; --n) u[n] = matvec(c_matrix(n + 1), u[n + 1]);
    Int total0(0);
    for (const Int& x : u[0]) total0 += x;

    run.lambda.resize(N + 1);
    for (int n = 0; n <= N; ++n) {
        QVec lam(4);
        for (int i = 0; i < 4; ++i) lam[i] = Rat(u[n][i]) / Rat(total0);
        run.lambda[n] = std::move(lam);
    }

    // Heights seed: the valid suspension datum (1,3,3,2)/(2,2,2,1) for pi0,
    // scaled to unit area against lambda_0.
    const QVec h_raw = {Rat(1), Rat(3), Rat(3), Rat(2)};
    const QVec a_raw = {Rat(2), Rat(2), Rat(2), Rat(1)};
    const Rat scale = Rat(1) / dot(run.lambda[0], h_raw);
    QVec h0(4), a0(4);
    for (int i = 0; i < 4; ++i) {
        h0[i] = h_raw[i] * scale;
        a0[i] = a_raw[i] * scale;
    }

    run.h.resize(N + 1);
    run.a.resize(N + 1);
    run.h[0] = h0;
    run.a[0] = a0;

    ZipperedRectangles z(pi0(), run.lambda[0], h0, a0);
    require_valid(z);

    for (int n = 1; n <= N; ++n) {
        const std::string word = block_word(n);
        for (std::size_t k = 0; k < word.size(); ++k) {
            HeightStep step = induct_with_heights(z);
            if (step.label != word[k])
                throw invariant_error(
                    "designed letter does not match the induced branch at block " +
                    std::to_string(n) + ", step " + std::to_string(k + 1));
            z = std::move(step.z);
            ++run.steps_validated;
        }
        if (!(z.mp == pi0()))
            throw invariant_error("block " + std::to_string(n) +
                                  " does not return to the base permutation");
        if (z.lambda != run.lambda[n])
            throw invariant_error("length vector after block " + std::to_string(n) +
                                  " disagrees with the tail product");
        if (dot(z.lambda, z.h) != Rat(1))
            throw invariant_error("area drifted from 1 at block " + std::to_string(n));
        if (z.h != matvec(transpose(c_matrix(n)), run.h[n - 1]))
            throw invariant_error("one-block height recursion fails at block " +
                                  std::to_string(n));
        if (n >= 2 &&
            z.h != matvec(transpose(mul(c_matrix(n - 1), c_matrix(n))), run.h[n - 2]))
            throw invariant_error("two-block height recursion fails at block " +
                                  std::to_string(n));
        run.h[n] = z.h;
        run.a[n] = z.a;
    }

    // The prefix product must reproduce lambda_0 from lambda_N exactly.
    if (N >= 1) {
        const QVec back = matvec(h_product(N), run.lambda[N]);
        if (back != run.lambda[0])
            throw invariant_error("prefix product does not recover the initial lengths");
    }
    return run;
}

LambdaTail lambda_tail(int n, int W) {
    if (n < 0 || W < 1) throw config_error("lambda_tail needs n >= 0 and W >= 1");
    IMat tail = c_matrix(n + 1);
    for (int k = 2; k <= W; ++k) tail = mul(tail, c_matrix(n + k));

    const ConstructionRun run = construction_run(n);
    const QVec v = matvec(tail, ones_vector(4));
    const Rat s = dot(v, run.h[n]);

    LambdaTail out;
    out.lambda.resize(4);
    for (int i = 0; i < 4; ++i) out.lambda[i] = v[i] / s;
    out.error_bound = cell_diameter(tail).diameter;
    return out;
}

std::vector<std::pair<Rat, Rat>> limit_enclosure(int N) {
    const IMat& H = h_product(N);
    std::vector<std::pair<Rat, Rat>> out(4);
    for (int i = 0; i < 4; ++i) {
        bool first = true;
        for (int j = 0; j < 4; ++j) {
            Int colsum(0);
            for (int r = 0; r < 4; ++r) colsum += H.at(r, j);
            if (sgn(colsum) == 0) throw invariant_error("prefix product has a zero column");
            Rat v = Rat(H.at(i, j)) / Rat(colsum);
            if (first || v < out[i].first) out[i].first = v;
            if (first || v > out[i].second) out[i].second = v;
            first = false;
        }
    }
    return out;
}

std::vector<std::pair<QVec, QVec>> heights_sequence(int N) {
    const ConstructionRun run = construction_run(N);
    std::vector<std::pair<QVec, QVec>> out;
    out.reserve(N + 1);
    for (int n = 0; n <= N; ++n) out.emplace_back(run.h[n], run.a[n]);
    return out;
}

std::vector<AsymptoticRow> asymptotics_report(int maxN, int W) {
    if (maxN < 5) throw config_error("asymptotics needs maxN >= 5");
    const ConstructionRun run = construction_run(maxN, W);

    std::vector<AsymptoticRow> rows;
    rows.reserve(maxN);
    for (int n = 1; n <= maxN; ++n) {
        AsymptoticRow row;
        row.n = n;
        row.delta_cc = to_double(delta(mul(c_matrix(n), c_matrix(n + 1))));
        const QVec& lam = run.lambda[n];
        const QVec& hn = run.h[n];
        row.lam1_over_lam3 = to_double(lam[0] / lam[2]);
        row.lam2_over_lam3 = to_double(lam[1] / lam[2]);
        row.lam4_over_lam3 = to_double(lam[3] / lam[2]);
        row.h1_over_h3 = to_double(hn[0] / hn[2]);
        row.h2_over_h3 = to_double(hn[1] / hn[2]);
        row.h4_over_h3 = to_double(hn[3] / hn[2]);
        row.lam3h3 = to_double(lam[2] * hn[2]);
        row.n3_lam4h4 = to_double(Rat(Int(n) * Int(n) * Int(n)) * lam[3] * hn[3]);
        row.cell_diam = cell_diameter(h_product(n)).diameter;
        rows.push_back(row);
    }
    return rows;
}

std::string asymptotics_csv(const std::vector<AsymptoticRow>& rows) {
    std::string out =
        "n,delta_cc,lam1_over_lam3,lam2_over_lam3,lam4_over_lam3,"
        "h1_over_h3,h2_over_h3,h4_over_h3,lam3h3,n3_lam4h4,cell_diam\n";
    for (const AsymptoticRow& r : rows) {
        out += std::to_string(r.n);
        for (double v : {r.delta_cc, r.lam1_over_lam3, r.lam2_over_lam3,
                         r.lam4_over_lam3, r.h1_over_h3, r.h2_over_h3, r.h4_over_h3,
                         r.lam3h3, r.n3_lam4h4, r.cell_diam})
            out += "," + csv_double(v);
        out += "\n";
    }
    return out;
}

PolyFit leading_term_fit(const std::vector<Int>& series) {
    if (series.size() < 2) throw config_error("fit needs at least two samples");
    std::vector<std::vector<Int>> levels{series};
    while (true) {
        const std::vector<Int>& level = levels.back();
        const bool all_zero =
            std::all_of(level.begin(), level.end(), [](const Int& v) { return sgn(v) == 0; });
        if (all_zero) {
            PolyFit fit;
            fit.is_polynomial = true;
            fit.degree = static_cast<int>(levels.size()) - 2;
            if (fit.degree < 0) {
                fit.leading = Rat(0);
            } else {
                Int fact(1);
                for (int k = 2; k <= fit.degree; ++k) fact *= k;
                fit.leading = Rat(levels[fit.degree][0]) / Rat(fact);
            }
            return fit;
        }
        if (level.size() == 1) return PolyFit{};  // cannot certify within the sample
        std::vector<Int> next(level.size() - 1);
        for (std::size_t i = 0; i + 1 < level.size(); ++i) next[i] = level[i + 1] - level[i];
        levels.push_back(std::move(next));
    }
}

nlohmann::json matrix_to_json(const IMat& M) {
    nlohmann::json rows = nlohmann::json::array();
    for (int i = 0; i < M.n; ++i) {
        nlohmann::json row = nlohmann::json::array();
        for (int j = 0; j < M.n; ++j) row.push_back(M.at(i, j).get_str());
        rows.push_back(std::move(row));
    }
    return nlohmann::json{{"size", M.n}, {"rows", rows}};
}

}  // namespace rauzylab
