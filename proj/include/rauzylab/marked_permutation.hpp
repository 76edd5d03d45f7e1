#pragma once

#include <string>
#include <vector>

#include "rauzylab/errors.hpp"

namespace rauzylab {

// A marked permutation is a pair of bijections position -> name on {1..m}:
// nu0 names the intervals in domain order, nu1 in image order.
// Storage is 0-based by position: nu0[p-1] is the name at position p.
struct MarkedPermutation {
    int m = 0;
    std::vector<int> nu0;
    std::vector<int> nu1;

    MarkedPermutation() = default;
    MarkedPermutation(std::vector<int> v0, std::vector<int> v1);

    int nu0_at(int pos) const { return nu0[pos - 1]; }   // pos in 1..m
    int nu1_at(int pos) const { return nu1[pos - 1]; }
    int nu0_pos_of(int name) const;                      // inverse of nu0
    int nu1_pos_of(int name) const;

    bool operator==(const MarkedPermutation& o) const {
        return nu0 == o.nu0 && nu1 == o.nu1;
    }
    bool operator<(const MarkedPermutation& o) const {
        if (nu0 != o.nu0) return nu0 < o.nu0;
        return nu1 < o.nu1;
    }
};

// pi with nu1 = nu0 o pi^{-1}, i.e. pi(j) = nu1^{-1}(nu0(j)).
// Returned vector is 0-based by position: pi[j-1] = pi(j).
std::vector<int> derived_permutation(const MarkedPermutation& mp);

// pi{1..k} != {1..k} for all 1 <= k < m.
bool irreducible(const std::vector<int>& pi);

// Throws config_error when the derived permutation is reducible.
void require_irreducible(const MarkedPermutation& mp);

// Rauzy operation a: nu1 unchanged; the name nu0(m) is removed from the nu0
// ordering and reinserted immediately after the name nu1(m).
MarkedPermutation op_a(const MarkedPermutation& mp);

// Rauzy operation b: nu0 unchanged; the name nu1(m) is removed from the nu1
// ordering and reinserted immediately after the name nu0(m).
MarkedPermutation op_b(const MarkedPermutation& mp);

// Deliberately wrong variant of op_a that reinserts after the position given
// by the last name's index in nu1 instead of locating the name nu1(m) in nu0.
// Exists only as a fault-injection hook for the verify command: the two
// variants differ on some vertices, and the first-return oracle must detect
// the difference. Never used by the library itself.
MarkedPermutation op_a_misindexed(const MarkedPermutation& mp);

struct RauzyEdge {
    int source = 0;      // index into RauzyDiagram::vertices
    char label = 'a';    // 'a' or 'b'
    int target = 0;
};

struct RauzyDiagram {
    std::vector<MarkedPermutation> vertices;  // sorted lexicographically
    std::vector<RauzyEdge> edges;             // sorted by (source, label)
};

// Breadth-first closure of {start} under op_a and op_b, then canonically
// ordered. Every vertex gets exactly one outgoing a-edge and one b-edge.
RauzyDiagram extended_rauzy_class(const MarkedPermutation& start);

// "nu0 digits|nu1 digits", e.g. "1234|4321"; only m <= 9.
MarkedPermutation parse_marked_permutation(const std::string& text);
std::string format_marked_permutation(const MarkedPermutation& mp);

std::string diagram_to_dot(const RauzyDiagram& d);
std::string diagram_to_json(const RauzyDiagram& d);

}  // namespace rauzylab
