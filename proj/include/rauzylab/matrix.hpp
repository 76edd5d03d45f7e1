#pragma once

#include <string>
#include <vector>

#include "rauzylab/rational.hpp"

namespace rauzylab {

// Dense square matrix of arbitrary-precision integers, row-major.
// Indices are 0-based here; callers that speak in interval names (1-based)
// subtract 1 at the boundary.
struct IMat {
    int n = 0;
    IVec a;

    IMat() = default;
    explicit IMat(int size) : n(size), a(static_cast<size_t>(size) * size, Int(0)) {}

    Int& at(int i, int j) { return a[static_cast<size_t>(i) * n + j]; }
    const Int& at(int i, int j) const { return a[static_cast<size_t>(i) * n + j]; }

    static IMat identity(int size);
    bool operator==(const IMat& o) const { return n == o.n && a == o.a; }
};

IMat mul(const IMat& A, const IMat& B);
IMat transpose(const IMat& A);
IVec matvec(const IMat& A, const IVec& x);
QVec matvec(const IMat& A, const QVec& x);

// Exact determinant via fraction-free (Bareiss) elimination.
Int det(const IMat& A);

bool all_positive(const IMat& A);
bool all_nonnegative(const IMat& A);

// Entries as decimal strings, row-major rows; exact round-trip.
std::vector<std::vector<std::string>> to_strings(const IMat& A);

}  // namespace rauzylab
