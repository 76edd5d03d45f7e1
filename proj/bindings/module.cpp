// Python bindings.  Rationals cross the boundary as canonical "p/q" strings
// so exactness survives; callers convert to Fraction as needed.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <vector>

#include "rauzylab/construction.hpp"
#include "rauzylab/errors.hpp"
#include "rauzylab/geodesic.hpp"
#include "rauzylab/hilbert.hpp"
#include "rauzylab/induction.hpp"
#include "rauzylab/interval_exchange.hpp"
#include "rauzylab/marked_permutation.hpp"
#include "rauzylab/matrix.hpp"
#include "rauzylab/rational.hpp"
#include "rauzylab/zippered.hpp"

namespace py = pybind11;
using namespace rauzylab;

namespace {

QVec to_qvec(const std::vector<std::string>& v) {
    QVec out;
    out.reserve(v.size());
    for (const auto& s : v) out.push_back(rat_from_string(s));
    return out;
}

std::vector<std::string> from_qvec(const QVec& v) {
    std::vector<std::string> out;
    out.reserve(v.size());
    for (const auto& q : v) out.push_back(rat_to_string(q));
    return out;
}

IntervalExchange make_iet(const std::vector<std::string>& lengths,
                          const std::vector<int>& pi) {
    return IntervalExchange(to_qvec(lengths), pi);
}

ZipperedRectangles make_zipper(const std::string& perm,
                               const std::vector<std::string>& lambda,
                               const std::vector<std::string>& h,
                               const std::vector<std::string>& a) {
    return ZipperedRectangles(parse_marked_permutation(perm), to_qvec(lambda),
                              to_qvec(h), to_qvec(a));
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "exact Rauzy induction, zippered rectangles, and slow-divergence data";

    py::register_exception<config_error>(m, "ConfigError", PyExc_ValueError);
    py::register_exception<invariant_error>(m, "InvariantError", PyExc_RuntimeError);

    // ----- marked permutations and the diagram
    m.def("derived_permutation", [](const std::string& perm) {
        return derived_permutation(parse_marked_permutation(perm));
    });
    m.def("is_irreducible", [](const std::string& perm) {
        return irreducible(derived_permutation(parse_marked_permutation(perm)));
    });
    m.def("apply_op", [](const std::string& perm, const std::string& label) {
        MarkedPermutation mp = parse_marked_permutation(perm);
        if (label == "a") return format_marked_permutation(op_a(mp));
        if (label == "b") return format_marked_permutation(op_b(mp));
        throw config_error("label must be \"a\" or \"b\"");
    });
    m.def("rauzy_class", [](const std::string& perm) {
        RauzyDiagram d = extended_rauzy_class(parse_marked_permutation(perm));
        std::vector<std::string> vertices;
        for (const auto& v : d.vertices) vertices.push_back(format_marked_permutation(v));
        std::vector<std::tuple<int, std::string, int>> edges;
        for (const auto& e : d.edges)
            edges.emplace_back(e.source, std::string(1, e.label), e.target);
        py::dict out;
        out["vertices"] = vertices;
        out["edges"] = edges;
        return out;
    });
    m.def("diagram_dot", [](const std::string& perm) {
        return diagram_to_dot(extended_rauzy_class(parse_marked_permutation(perm)));
    });
    m.def("diagram_json", [](const std::string& perm) {
        return diagram_to_json(extended_rauzy_class(parse_marked_permutation(perm)));
    });

    // ----- interval exchanges
    m.def("evaluate",
          [](const std::vector<std::string>& lengths, const std::vector<int>& pi,
             const std::string& x) {
              return rat_to_string(evaluate(make_iet(lengths, pi), rat_from_string(x)));
          });
    m.def("orbit",
          [](const std::vector<std::string>& lengths, const std::vector<int>& pi,
             const std::string& x, std::int64_t steps) {
              return from_qvec(orbit(make_iet(lengths, pi), rat_from_string(x), steps));
          });
    m.def("first_return",
          [](const std::vector<std::string>& lengths, const std::vector<int>& pi,
             const std::string& cut) {
              IntervalExchange R =
                  first_return(make_iet(lengths, pi), rat_from_string(cut));
              return py::make_tuple(from_qvec(R.lengths), R.pi);
          });
    m.def("discrepancy",
          [](const std::vector<std::string>& lengths, const std::vector<int>& pi,
             const std::string& x, std::int64_t steps, std::int64_t bins) {
              return discrepancy(make_iet(lengths, pi), rat_from_string(x), steps, bins);
          });

    // ----- induction
    m.def("induction_step",
          [](const std::vector<std::string>& lambda, const std::string& perm) {
              InductionStep s = induction_step(to_qvec(lambda),
                                               parse_marked_permutation(perm));
              py::dict out;
              out["lambda"] = from_qvec(s.lambda);
              out["perm"] = format_marked_permutation(s.mp);
              out["label"] = std::string(1, s.label);
              out["matrix"] = to_strings(s.A);
              return out;
          });
    m.def("expansion_labels",
          [](const std::vector<std::string>& lambda, const std::string& perm, int k) {
              std::string labels;
              for (const auto& s :
                   expansion(to_qvec(lambda), parse_marked_permutation(perm), k))
                  labels.push_back(s.label);
              return labels;
          });

    // ----- zippered rectangles
    m.def("zipper_validate",
          [](const std::string& perm, const std::vector<std::string>& lambda,
             const std::vector<std::string>& h, const std::vector<std::string>& a) {
              return validate(make_zipper(perm, lambda, h, a));
          });
    m.def("zipper_glue_json",
          [](const std::string& perm, const std::vector<std::string>& lambda,
             const std::vector<std::string>& h, const std::vector<std::string>& a) {
              return glue_records_to_json(
                         glue_records(make_zipper(perm, lambda, h, a)))
                  .dump();
          });
    m.def("zipper_induct",
          [](const std::string& perm, const std::vector<std::string>& lambda,
             const std::vector<std::string>& h, const std::vector<std::string>& a) {
              HeightStep s = induct_with_heights(make_zipper(perm, lambda, h, a));
              py::dict out;
              out["perm"] = format_marked_permutation(s.z.mp);
              out["lambda"] = from_qvec(s.z.lambda);
              out["h"] = from_qvec(s.z.h);
              out["a"] = from_qvec(s.z.a);
              out["label"] = std::string(1, s.label);
              return out;
          });

    // ----- Hilbert metric
    m.def("gamma", [](const std::vector<std::string>& x,
                      const std::vector<std::string>& y) {
        return rat_to_string(gamma(to_qvec(x), to_qvec(y)));
    });
    m.def("hilbert_distance", [](const std::vector<std::string>& x,
                                 const std::vector<std::string>& y) {
        return distance(to_qvec(x), to_qvec(y));
    });
    m.def("contraction_delta", [](const std::vector<std::vector<long>>& rows) {
        int n = static_cast<int>(rows.size());
        IMat L(n);
        for (int i = 0; i < n; ++i) {
            if (static_cast<int>(rows[i].size()) != n)
                throw config_error("matrix must be square");
            for (int j = 0; j < n; ++j) L.at(i, j) = rows[i][j];
        }
        return rat_to_string(delta(L));
    });

    // ----- the explicit construction
    m.def("block_word", &block_word);
    m.def("block_matrix", [](int n) { return to_strings(c_matrix(n)); });
    m.def("prefix_product", [](int n) { return to_strings(h_product(n)); });
    m.def("lambda_tail", [](int n, int w) {
        LambdaTail lt = lambda_tail(n, w);
        py::dict out;
        out["lambda"] = from_qvec(lt.lambda);
        out["error_bound"] = lt.error_bound;
        return out;
    }, py::arg("n"), py::arg("w") = 10);
    m.def("limit_enclosure", [](int n) {
        std::vector<std::pair<std::string, std::string>> out;
        for (const auto& [lo, hi] : limit_enclosure(n))
            out.emplace_back(rat_to_string(lo), rat_to_string(hi));
        return out;
    });
    m.def("asymptotics_csv", [](int maxN, int w) {
        return asymptotics_csv(asymptotics_report(maxN, w));
    }, py::arg("max_n"), py::arg("w") = 10);

    // ----- geodesic data
    m.def("overlap_json", [](int nMin, int nMax) {
        ConstructionRun run = construction_run(nMax + 1);
        return overlap_to_json(overlap_certificate(run, nMin, nMax)).dump();
    });
    m.def("trajectory_csv", [](int maxN, int samples) {
        ConstructionRun run = construction_run(maxN);
        double t0 = window(3, gamma_n(run, 3)).s;
        double t1 = window(maxN, gamma_n(run, maxN)).t;
        return trajectory_csv(systole_bound_trajectory(run, t0, t1, samples));
    }, py::arg("max_n"), py::arg("samples") = 100);
}
