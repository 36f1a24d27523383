// Dense matrices over an exact scalar type, plus field linear algebra
// (rref, rank, kernel, solve, inverse, determinant) over Scalar. Rows and
// columns are 0-indexed; storage is row-major.
#pragma once

#include "tamecurve/errors.hpp"
#include "tamecurve/field.hpp"

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

namespace tamecurve {

template <class T>
struct Mat {
    size_t rows = 0, cols = 0;
    std::vector<T> a;

    Mat() = default;
    Mat(size_t r, size_t c, T zero) : rows(r), cols(c), a(r * c, zero) {}

    T& at(size_t i, size_t j) {
        if (i >= rows || j >= cols) throw DimensionMismatch("matrix index out of range");
        return a[i * cols + j];
    }
    const T& at(size_t i, size_t j) const {
        if (i >= rows || j >= cols) throw DimensionMismatch("matrix index out of range");
        return a[i * cols + j];
    }
    bool operator==(const Mat&) const = default;
};

using SMat = Mat<Scalar>;

SMat smat_zero(const Field& f, size_t r, size_t c);
SMat smat_identity(const Field& f, size_t n);
SMat smat_add(const SMat& x, const SMat& y);
SMat smat_sub(const SMat& x, const SMat& y);
SMat smat_neg(const SMat& x);
SMat smat_mul(const SMat& x, const SMat& y);
SMat smat_scale(const Scalar& c, const SMat& x);
SMat smat_transpose(const SMat& x);
bool smat_is_zero(const SMat& x);
SMat smat_hstack(const SMat& x, const SMat& y);
SMat smat_vstack(const SMat& x, const SMat& y);
// Block diagonal of two matrices (either may be 0 x 0).
SMat smat_blockdiag(const Field& f, const SMat& x, const SMat& y);
SMat smat_submatrix(const SMat& x, size_t r0, size_t c0, size_t r, size_t c);

// Reduced row echelon form in place; returns pivot column indices.
std::vector<size_t> smat_rref(SMat& x);
size_t smat_rank(SMat x);
// Basis of the right kernel {v : x v = 0}, columns of the result.
SMat smat_kernel(const SMat& x);
// One solution of x v = b (b a column matrix); throws Inconsistent.
SMat smat_solve(const SMat& x, const SMat& b);
// Solve x V = B column by column for a matrix right-hand side.
SMat smat_solve_matrix(const SMat& x, const SMat& B);
SMat smat_inverse(const SMat& x); // throws Inconsistent if singular
Scalar smat_det(SMat x);

// Rows of `candidates` that are in the row span of `basis`? Instead:
// true iff every row of sub lies in the row space of sup.
bool smat_rowspace_contains(const SMat& sup, const SMat& sub);
bool smat_same_rowspace(const SMat& x, const SMat& y);

std::string smat_to_string(const SMat& x);

} // namespace tamecurve
