#include <doctest.h>

#include <cmath>
#include <random>

#include "rauzylab/errors.hpp"
#include "rauzylab/hilbert.hpp"
#include "rauzylab/matrix.hpp"

using namespace rauzylab;

namespace {
IMat from_rows(int n, std::initializer_list<long> entries) {
    IMat M(n);
    int i = 0;
    for (long e : entries) M.a[i++] = e;
    return M;
}
}  // namespace

TEST_CASE("projective cross ratio on the positive cone") {
    QVec x = {Rat(1), Rat(2)}, y = {Rat(2), Rat(1)};
    CHECK(gamma(x, y) == Rat(1, 4));
    CHECK(gamma(x, x) == 1);
    // scale invariance, exactly
    QVec x3 = {Rat(3), Rat(6)};
    CHECK(gamma(x3, y) == gamma(x, y));
    CHECK(std::abs(distance(x, y) - std::log(4.0)) < 1e-14);
    CHECK(distance(x, y) == distance(y, x));
    CHECK(distance(x, x3) == 0.0);
}

TEST_CASE("cross ratio rejects bad input") {
    CHECK_THROWS_AS(gamma({Rat(1)}, {Rat(1), Rat(1)}), config_error);
    CHECK_THROWS_AS(gamma({Rat(-1), Rat(1)}, {Rat(1), Rat(1)}), config_error);
    CHECK_THROWS_AS(gamma({Rat(0), Rat(0)}, {Rat(1), Rat(1)}), config_error);
    CHECK_THROWS_AS(distance({Rat(0), Rat(1)}, {Rat(1), Rat(1)}), config_error);
}

TEST_CASE("contraction coefficient of small matrices") {
    CHECK(delta(from_rows(2, {2, 1, 1, 2})) == Rat(1, 4));
    // proportional columns: the image is a single ray
    CHECK(delta(from_rows(2, {1, 2, 2, 4})) == 1);
    CHECK_THROWS_AS(delta(from_rows(2, {1, 0, 1, 1})), config_error);
}

TEST_CASE("cell diameter of a positive matrix") {
    IMat L = from_rows(2, {2, 1, 1, 2});
    CellDiameter cd = cell_diameter(L);
    CHECK(cd.finite);
    CHECK(std::abs(cd.diameter - std::log(4.0)) < 1e-14);
    CHECK(cd.delta_value == Rat(1, 4));
    // both columns realize the diameter here, so the bounds coincide
    CHECK(std::abs(cd.vertex_lower_bound - cd.diameter) < 1e-14);

    IMat rank1 = from_rows(2, {1, 2, 2, 4});
    CHECK(cell_diameter(rank1).diameter == 0.0);
}

TEST_CASE("cell diameter is infinite with a zero entry") {
    CellDiameter cd = cell_diameter(from_rows(2, {1, 1, 0, 1}));
    CHECK_FALSE(cd.finite);
    CHECK(std::isinf(cd.diameter));
    CHECK_THROWS_AS(cell_diameter(from_rows(2, {1, -1, 1, 1})), config_error);
}

TEST_CASE("column distances never exceed the diameter") {
    std::mt19937_64 rng(4242);
    for (int trial = 0; trial < 200; ++trial) {
        int n = 2 + static_cast<int>(rng() % 3);
        IMat L(n);
        for (auto& e : L.a) e = 1 + static_cast<long>(rng() % 9);
        CellDiameter cd = cell_diameter(L);
        REQUIRE(cd.finite);
        double worst = 0.0;
        for (int r = 0; r < n; ++r)
            for (int s = r + 1; s < n; ++s) {
                QVec cr(n), cs(n);
                for (int i = 0; i < n; ++i) {
                    cr[i] = Rat(L.at(i, r));
                    cs[i] = Rat(L.at(i, s));
                }
                worst = std::max(worst, distance(cr, cs));
            }
        // the two pairwise-column quantities are the same rational family
        REQUIRE(std::abs(worst - cd.diameter) <= 1e-12 * (1.0 + cd.diameter));
        REQUIRE(cd.vertex_lower_bound <= cd.diameter + 1e-12);
    }
}

TEST_CASE("one application contracts the cross ratio as promised") {
    std::mt19937_64 rng(999);
    for (int trial = 0; trial < 300; ++trial) {
        int n = 2 + static_cast<int>(rng() % 3);
        IMat L(n);
        for (auto& e : L.a) e = 1 + static_cast<long>(rng() % 9);
        QVec x(n), y(n);
        for (int i = 0; i < n; ++i) {
            x[i] = Rat(1 + static_cast<long>(rng() % 30),
                       1 + static_cast<long>(rng() % 9));
            y[i] = Rat(1 + static_cast<long>(rng() % 30),
                       1 + static_cast<long>(rng() % 9));
            x[i].canonicalize();
            y[i].canonicalize();
        }
        ContractionReport rep = contraction_check(L, x, y);
        REQUIRE(rep.gamma_ok);       // exact rational inequality
        REQUIRE(rep.distance_ok);    // float comparison with pinned tolerance
        REQUIRE(rep.gamma_after >= rep.gamma_before);
        REQUIRE(rep.d_after <= rep.d_before + 1e-12);
    }
}
