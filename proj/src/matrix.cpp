#include "tamecurve/matrix.hpp"

#include <sstream>

namespace tamecurve {

namespace {

const Field& field_of(const SMat& x) {
    for (const auto& v : x.a)
        if (v.valid()) return v.field();
    throw FieldMismatch("matrix has no field (empty or uninitialized)");
}

void check_same_shape(const SMat& x, const SMat& y) {
    if (x.rows != y.rows || x.cols != y.cols)
        throw DimensionMismatch("shape " + std::to_string(x.rows) + "x" +
                                std::to_string(x.cols) + " vs " + std::to_string(y.rows) +
                                "x" + std::to_string(y.cols));
}

} // namespace

SMat smat_zero(const Field& f, size_t r, size_t c) { return SMat(r, c, scalar_zero(f)); }

SMat smat_identity(const Field& f, size_t n) {
    SMat m = smat_zero(f, n, n);
    for (size_t i = 0; i < n; ++i) m.at(i, i) = scalar_one(f);
    return m;
}

SMat smat_add(const SMat& x, const SMat& y) {
    check_same_shape(x, y);
    SMat r(x);
    for (size_t i = 0; i < r.a.size(); ++i) r.a[i] += y.a[i];
    return r;
}

SMat smat_neg(const SMat& x) {
    SMat r(x);
    for (auto& v : r.a) v = -v;
    return r;
}

SMat smat_sub(const SMat& x, const SMat& y) { return smat_add(x, smat_neg(y)); }

SMat smat_mul(const SMat& x, const SMat& y) {
    if (x.cols != y.rows)
        throw DimensionMismatch("matrix mul: " + std::to_string(x.cols) + " vs " +
                                std::to_string(y.rows));
    const Field& f = x.a.empty() ? field_of(y) : field_of(x);
    SMat r = smat_zero(f, x.rows, y.cols);
    for (size_t i = 0; i < x.rows; ++i)
        for (size_t k = 0; k < x.cols; ++k) {
            const Scalar& xik = x.at(i, k);
            if (xik.is_zero()) continue;
            for (size_t j = 0; j < y.cols; ++j)
                r.at(i, j) += xik * y.at(k, j);
        }
    return r;
}

SMat smat_scale(const Scalar& c, const SMat& x) {
    SMat r(x);
    for (auto& v : r.a) v = c * v;
    return r;
}

SMat smat_transpose(const SMat& x) {
    SMat r(x.cols, x.rows, x.a.empty() ? Scalar{} : x.a[0]);
    for (size_t i = 0; i < x.rows; ++i)
        for (size_t j = 0; j < x.cols; ++j) r.at(j, i) = x.at(i, j);
    return r;
}

bool smat_is_zero(const SMat& x) {
    for (const auto& v : x.a)
        if (!v.is_zero()) return false;
    return true;
}

SMat smat_hstack(const SMat& x, const SMat& y) {
    if (x.rows != y.rows) throw DimensionMismatch("hstack row counts differ");
    SMat r(x.rows, x.cols + y.cols, x.a.empty() ? (y.a.empty() ? Scalar{} : y.a[0]) : x.a[0]);
    for (size_t i = 0; i < x.rows; ++i) {
        for (size_t j = 0; j < x.cols; ++j) r.at(i, j) = x.at(i, j);
        for (size_t j = 0; j < y.cols; ++j) r.at(i, x.cols + j) = y.at(i, j);
    }
    return r;
}

SMat smat_vstack(const SMat& x, const SMat& y) {
    if (x.cols != y.cols) throw DimensionMismatch("vstack column counts differ");
    SMat r(x.rows + y.rows, x.cols, x.a.empty() ? (y.a.empty() ? Scalar{} : y.a[0]) : x.a[0]);
    for (size_t i = 0; i < x.rows; ++i)
        for (size_t j = 0; j < x.cols; ++j) r.at(i, j) = x.at(i, j);
    for (size_t i = 0; i < y.rows; ++i)
        for (size_t j = 0; j < y.cols; ++j) r.at(x.rows + i, j) = y.at(i, j);
    return r;
}

SMat smat_blockdiag(const Field& f, const SMat& x, const SMat& y) {
    SMat r = smat_zero(f, x.rows + y.rows, x.cols + y.cols);
    for (size_t i = 0; i < x.rows; ++i)
        for (size_t j = 0; j < x.cols; ++j) r.at(i, j) = x.at(i, j);
    for (size_t i = 0; i < y.rows; ++i)
        for (size_t j = 0; j < y.cols; ++j) r.at(x.rows + i, x.cols + j) = y.at(i, j);
    return r;
}

SMat smat_submatrix(const SMat& x, size_t r0, size_t c0, size_t r, size_t c) {
    if (r0 + r > x.rows || c0 + c > x.cols) throw DimensionMismatch("submatrix out of range");
    SMat s(r, c, x.a.empty() ? Scalar{} : x.a[0]);
    for (size_t i = 0; i < r; ++i)
        for (size_t j = 0; j < c; ++j) s.at(i, j) = x.at(r0 + i, c0 + j);
    return s;
}

std::vector<size_t> smat_rref(SMat& x) {
    std::vector<size_t> pivots;
    size_t row = 0;
    for (size_t col = 0; col < x.cols && row < x.rows; ++col) {
        size_t piv = row;
        while (piv < x.rows && x.at(piv, col).is_zero()) ++piv;
        if (piv == x.rows) continue;
        for (size_t j = 0; j < x.cols; ++j) std::swap(x.a[row * x.cols + j], x.a[piv * x.cols + j]);
        Scalar inv = x.at(row, col).inv();
        for (size_t j = col; j < x.cols; ++j) x.at(row, j) = inv * x.at(row, j);
        for (size_t i = 0; i < x.rows; ++i) {
            if (i == row) continue;
            Scalar c = x.at(i, col);
            if (c.is_zero()) continue;
            for (size_t j = col; j < x.cols; ++j)
                x.at(i, j) = x.at(i, j) - c * x.at(row, j);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

size_t smat_rank(SMat x) { return smat_rref(x).size(); }

SMat smat_kernel(const SMat& x) {
    const Field& f = field_of(x);
    SMat r(x);
    std::vector<size_t> pivots = smat_rref(r);
    std::vector<bool> is_pivot(x.cols, false);
    for (size_t c : pivots) is_pivot[c] = true;
    std::vector<size_t> free_cols;
    for (size_t c = 0; c < x.cols; ++c)
        if (!is_pivot[c]) free_cols.push_back(c);
    SMat k = smat_zero(f, x.cols, free_cols.size());
    for (size_t fi = 0; fi < free_cols.size(); ++fi) {
        size_t fc = free_cols[fi];
        k.at(fc, fi) = scalar_one(f);
        for (size_t pi = 0; pi < pivots.size(); ++pi)
            k.at(pivots[pi], fi) = -r.at(pi, fc);
    }
    return k;
}

SMat smat_solve(const SMat& x, const SMat& b) {
    if (b.cols != 1 || b.rows != x.rows) throw DimensionMismatch("solve rhs shape");
    const Field& f = x.a.empty() ? field_of(b) : field_of(x);
    SMat aug = smat_hstack(x, b);
    std::vector<size_t> pivots = smat_rref(aug);
    if (!pivots.empty() && pivots.back() == x.cols)
        throw Inconsistent("linear system has no solution");
    SMat v = smat_zero(f, x.cols, 1);
    for (size_t pi = 0; pi < pivots.size(); ++pi) v.at(pivots[pi], 0) = aug.at(pi, x.cols);
    return v;
}

SMat smat_solve_matrix(const SMat& x, const SMat& B) {
    if (B.rows != x.rows) throw DimensionMismatch("solve rhs shape");
    const Field& f = x.a.empty() ? field_of(B) : field_of(x);
    SMat aug = smat_hstack(x, B);
    std::vector<size_t> pivots = smat_rref(aug);
    for (size_t c : pivots)
        if (c >= x.cols) throw Inconsistent("linear system has no solution");
    SMat V = smat_zero(f, x.cols, B.cols);
    for (size_t pi = 0; pi < pivots.size(); ++pi)
        for (size_t j = 0; j < B.cols; ++j)
            V.at(pivots[pi], j) = aug.at(pi, x.cols + j);
    return V;
}

SMat smat_inverse(const SMat& x) {
    if (x.rows != x.cols) throw DimensionMismatch("inverse of non-square matrix");
    const Field& f = field_of(x);
    SMat aug = smat_hstack(x, smat_identity(f, x.rows));
    std::vector<size_t> pivots = smat_rref(aug);
    if (pivots.size() != x.rows || (x.rows && pivots.back() != x.rows - 1))
        throw Inconsistent("matrix is singular");
    return smat_submatrix(aug, 0, x.cols, x.rows, x.cols);
}

Scalar smat_det(SMat x) {
    if (x.rows != x.cols) throw DimensionMismatch("determinant of non-square matrix");
    const Field& f = field_of(x);
    Scalar det = scalar_one(f);
    size_t n = x.rows;
    for (size_t col = 0; col < n; ++col) {
        size_t piv = col;
        while (piv < n && x.at(piv, col).is_zero()) ++piv;
        if (piv == n) return scalar_zero(f);
        if (piv != col) {
            for (size_t j = 0; j < n; ++j) std::swap(x.a[col * n + j], x.a[piv * n + j]);
            det = -det;
        }
        det = det * x.at(col, col);
        Scalar inv = x.at(col, col).inv();
        for (size_t i = col + 1; i < n; ++i) {
            Scalar c = x.at(i, col) * inv;
            if (c.is_zero()) continue;
            for (size_t j = col; j < n; ++j) x.at(i, j) = x.at(i, j) - c * x.at(col, j);
        }
    }
    return det;
}

bool smat_rowspace_contains(const SMat& sup, const SMat& sub) {
    if (sup.cols != sub.cols) throw DimensionMismatch("rowspace comparison widths");
    size_t r = smat_rank(sup);
    return smat_rank(smat_vstack(sup, sub)) == r;
}

bool smat_same_rowspace(const SMat& x, const SMat& y) {
    return smat_rowspace_contains(x, y) && smat_rowspace_contains(y, x);
}

std::string smat_to_string(const SMat& x) {
    std::ostringstream os;
    for (size_t i = 0; i < x.rows; ++i) {
        os << "[";
        for (size_t j = 0; j < x.cols; ++j) {
            if (j) os << ", ";
            os << scalar_to_string(x.at(i, j));
        }
        os << "]";
        if (i + 1 < x.rows) os << "\n";
    }
    return os.str();
}

} // namespace tamecurve
