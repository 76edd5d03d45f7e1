#include <doctest.h>

#include <algorithm>
#include <set>

#include "rauzylab/errors.hpp"
#include "rauzylab/marked_permutation.hpp"

using namespace rauzylab;

TEST_CASE("parse and format round trip") {
    for (const char* s : {"1234|4321", "12|21", "1423|4312", "132|321"}) {
        MarkedPermutation mp = parse_marked_permutation(s);
        CHECK(format_marked_permutation(mp) == s);
    }
}

TEST_CASE("parse rejects malformed input") {
    CHECK_THROWS_AS(parse_marked_permutation(""), config_error);
    CHECK_THROWS_AS(parse_marked_permutation("1234"), config_error);
    CHECK_THROWS_AS(parse_marked_permutation("123|4321"), config_error);
    CHECK_THROWS_AS(parse_marked_permutation("1224|4321"), config_error);
    CHECK_THROWS_AS(parse_marked_permutation("12a4|4321"), config_error);
    CHECK_THROWS_AS(parse_marked_permutation("1234|43210"), config_error);
}

TEST_CASE("derived permutation") {
    CHECK(derived_permutation(parse_marked_permutation("1234|4321")) ==
          std::vector<int>{4, 3, 2, 1});
    // pi(j) = nu1^{-1}(nu0(j))
    CHECK(derived_permutation(parse_marked_permutation("1234|4132")) ==
          std::vector<int>{2, 4, 3, 1});
    CHECK(derived_permutation(parse_marked_permutation("1423|4321")) ==
          std::vector<int>{4, 1, 3, 2});
}

TEST_CASE("irreducibility") {
    CHECK(irreducible({4, 3, 2, 1}));
    CHECK(irreducible({2, 1}));
    CHECK_FALSE(irreducible({1, 2}));
    CHECK_FALSE(irreducible({2, 1, 3}));
    CHECK_FALSE(irreducible({3, 2, 1, 4}));
    CHECK_THROWS_AS(require_irreducible(parse_marked_permutation("12|12")),
                    config_error);
}

TEST_CASE("induction moves on the marked pair") {
    MarkedPermutation start = parse_marked_permutation("1234|4321");
    CHECK(format_marked_permutation(op_a(start)) == "1423|4321");
    CHECK(format_marked_permutation(op_b(start)) == "1234|4132");

    // op_a rearranges the top row only; op_b the bottom row only.
    CHECK(op_a(start).nu1 == start.nu1);
    CHECK(op_b(start).nu0 == start.nu0);
}

TEST_CASE("class adjacency is stable") {
    // Frozen transition table for the class of 1234|4321.
    const char* table[][3] = {
        {"1234|4132", "1243|4132", "1234|4213"},
        {"1234|4213", "1234|4213", "1234|4321"},
        {"1234|4321", "1423|4321", "1234|4132"},
        {"1243|4132", "1234|4132", "1243|4132"},
        {"1342|4321", "1234|4321", "1342|4321"},
        {"1423|4312", "1423|4312", "1423|4321"},
        {"1423|4321", "1342|4321", "1423|4312"},
    };
    for (const auto& row : table) {
        MarkedPermutation v = parse_marked_permutation(row[0]);
        CHECK(format_marked_permutation(op_a(v)) == row[1]);
        CHECK(format_marked_permutation(op_b(v)) == row[2]);
    }
}

TEST_CASE("misindexed variant diverges exactly where the shortcut lies") {
    // The shortcut k = nu1^{-1}(m) only matches the verbal rule at some
    // vertices; these four are the ones in the class where it does not.
    std::set<std::string> divergent = {"1234|4132", "1234|4213", "1243|4132",
                                       "1423|4312"};
    RauzyDiagram d = extended_rauzy_class(parse_marked_permutation("1234|4321"));
    for (const auto& v : d.vertices) {
        bool same = op_a_misindexed(v) == op_a(v);
        CHECK(same == (divergent.count(format_marked_permutation(v)) == 0));
    }
    CHECK(format_marked_permutation(
              op_a_misindexed(parse_marked_permutation("1234|4132"))) ==
          "1423|4132");
}

TEST_CASE("extended class of the order-reversing start") {
    RauzyDiagram d = extended_rauzy_class(parse_marked_permutation("1234|4321"));
    CHECK(d.vertices.size() == 7);
    CHECK(d.edges.size() == 14);

    // Closed under both moves, and every vertex stays irreducible.
    std::set<MarkedPermutation> seen(d.vertices.begin(), d.vertices.end());
    for (const auto& v : d.vertices) {
        CHECK(irreducible(derived_permutation(v)));
        CHECK(seen.count(op_a(v)) == 1);
        CHECK(seen.count(op_b(v)) == 1);
    }
}

TEST_CASE("two-interval class is a single vertex") {
    RauzyDiagram d = extended_rauzy_class(parse_marked_permutation("12|21"));
    CHECK(d.vertices.size() == 1);
    CHECK(d.edges.size() == 2);
}

TEST_CASE("diagram serializations") {
    RauzyDiagram d = extended_rauzy_class(parse_marked_permutation("1234|4321"));
    std::string dot = diagram_to_dot(d);
    CHECK(dot.find("digraph") != std::string::npos);
    CHECK(dot.find("1234|4321") != std::string::npos);
    CHECK(std::count(dot.begin(), dot.end(), '>') >= 14);

    std::string js = diagram_to_json(d);
    CHECK(js.find("\"vertices\"") != std::string::npos);
    CHECK(js.find("\"edges\"") != std::string::npos);
}
