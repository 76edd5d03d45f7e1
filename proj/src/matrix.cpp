#include "rauzylab/matrix.hpp"

namespace rauzylab {

IMat IMat::identity(int size) {
    IMat I(size);
    for (int i = 0; i < size; ++i) I.at(i, i) = 1;
    return I;
}

IMat mul(const IMat& A, const IMat& B) {
    if (A.n != B.n) throw config_error("matrix size mismatch in mul");
    IMat C(A.n);
    for (int i = 0; i < A.n; ++i)
        for (int k = 0; k < A.n; ++k) {
            const Int& aik = A.at(i, k);
            if (aik == 0) continue;
            for (int j = 0; j < A.n; ++j) C.at(i, j) += aik * B.at(k, j);
        }
    return C;
}

IMat transpose(const IMat& A) {
    IMat T(A.n);
    for (int i = 0; i < A.n; ++i)
        for (int j = 0; j < A.n; ++j) T.at(j, i) = A.at(i, j);
    return T;
}

IVec matvec(const IMat& A, const IVec& x) {
    if (static_cast<int>(x.size()) != A.n) throw config_error("matvec size mismatch");
    IVec y(A.n, Int(0));
    for (int i = 0; i < A.n; ++i)
        for (int j = 0; j < A.n; ++j) y[i] += A.at(i, j) * x[j];
    return y;
}

QVec matvec(const IMat& A, const QVec& x) {
    if (static_cast<int>(x.size()) != A.n) throw config_error("matvec size mismatch");
    QVec y(A.n, Rat(0));
    for (int i = 0; i < A.n; ++i)
        for (int j = 0; j < A.n; ++j) y[i] += Rat(A.at(i, j)) * x[j];
    return y;
}

Int det(const IMat& A) {
    int n = A.n;
    if (n == 0) return 1;
    IMat M = A;
    Int sign = 1, prev = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (M.at(k, k) == 0) {
            int p = -1;
            for (int i = k + 1; i < n; ++i)
                if (M.at(i, k) != 0) { p = i; break; }
            if (p < 0) return 0;
            for (int j = 0; j < n; ++j) std::swap(M.at(k, j), M.at(p, j));
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j) {
                Int t = M.at(i, j) * M.at(k, k) - M.at(i, k) * M.at(k, j);
                mpz_divexact(M.at(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
        prev = M.at(k, k);
    }
    return sign * M.at(n - 1, n - 1);
}

bool all_positive(const IMat& A) {
    for (const Int& v : A.a)
        if (v <= 0) return false;
    return true;
}

bool all_nonnegative(const IMat& A) {
    for (const Int& v : A.a)
        if (v < 0) return false;
    return true;
}

std::vector<std::vector<std::string>> to_strings(const IMat& A) {
    std::vector<std::vector<std::string>> rows(A.n);
    for (int i = 0; i < A.n; ++i) {
        rows[i].reserve(A.n);
        for (int j = 0; j < A.n; ++j) rows[i].push_back(A.at(i, j).get_str());
    }
    return rows;
}

}  // namespace rauzylab
