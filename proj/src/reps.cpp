#include "tamecurve/reps.hpp"

#include <json.hpp>

#include <algorithm>
#include <sstream>

namespace tamecurve {

// ---------------------------------------------------------------------------
// Matrices over F.

namespace {

void fmat_check_same(const FMat& x, const FMat& y) {
    if (x.rows != y.rows || x.cols != y.cols)
        throw DimensionMismatch("F-matrix dimensions differ");
}

const AlgebraRef& fmat_algebra(const FMat& x) {
    if (x.a.empty()) throw DimensionMismatch("empty F-matrix has no algebra");
    return x.a[0].A;
}

} // namespace

FMat fmat_zero(const AlgebraRef& F, size_t r, size_t c) {
    return FMat(r, c, alg_zero(F));
}

FMat fmat_identity(const AlgebraRef& F, size_t n) {
    FMat m = fmat_zero(F, n, n);
    for (size_t i = 0; i < n; ++i) m.at(i, i) = alg_one(F);
    return m;
}

FMat fmat_add(const FMat& x, const FMat& y) {
    fmat_check_same(x, y);
    FMat r = x;
    for (size_t i = 0; i < r.a.size(); ++i) r.a[i] = r.a[i] + y.a[i];
    return r;
}

FMat fmat_sub(const FMat& x, const FMat& y) {
    fmat_check_same(x, y);
    FMat r = x;
    for (size_t i = 0; i < r.a.size(); ++i) r.a[i] = r.a[i] - y.a[i];
    return r;
}

FMat fmat_neg(const FMat& x) {
    FMat r = x;
    for (auto& e : r.a) e = -e;
    return r;
}

FMat fmat_mul(const FMat& x, const FMat& y) {
    return fmat_mul(x.a.empty() ? fmat_algebra(y) : fmat_algebra(x), x, y);
}

FMat fmat_mul(const AlgebraRef& F, const FMat& x, const FMat& y) {
    if (x.cols != y.rows) throw DimensionMismatch("F-matrix product shape mismatch");
    FMat r = fmat_zero(F, x.rows, y.cols);
    for (size_t i = 0; i < x.rows; ++i)
        for (size_t t = 0; t < x.cols; ++t) {
            if (x.at(i, t).is_zero()) continue;
            for (size_t j = 0; j < y.cols; ++j)
                r.at(i, j) = r.at(i, j) + x.at(i, t) * y.at(t, j);
        }
    return r;
}

FMat fmat_scale(const AlgElem& c, const FMat& x) {
    FMat r = x;
    for (auto& e : r.a) e = c * e;
    return r;
}

bool fmat_is_zero(const FMat& x) {
    return std::all_of(x.a.begin(), x.a.end(), [](const AlgElem& e) { return e.is_zero(); });
}

FMat fmat_hstack(const FMat& x, const FMat& y) {
    if (x.rows != y.rows) throw DimensionMismatch("hstack row mismatch");
    if (x.a.empty() && y.a.empty()) {
        FMat r;
        r.rows = x.rows;
        r.cols = x.cols + y.cols;
        return r;
    }
    FMat r = fmat_zero(fmat_algebra(x.a.empty() ? y : x), x.rows, x.cols + y.cols);
    for (size_t i = 0; i < x.rows; ++i) {
        for (size_t j = 0; j < x.cols; ++j) r.at(i, j) = x.at(i, j);
        for (size_t j = 0; j < y.cols; ++j) r.at(i, x.cols + j) = y.at(i, j);
    }
    return r;
}

FMat fmat_vstack(const FMat& x, const FMat& y) {
    if (x.cols != y.cols) throw DimensionMismatch("vstack column mismatch");
    FMat r = fmat_zero(fmat_algebra(x.a.empty() ? y : x), x.rows + y.rows, x.cols);
    for (size_t i = 0; i < x.rows; ++i)
        for (size_t j = 0; j < x.cols; ++j) r.at(i, j) = x.at(i, j);
    for (size_t i = 0; i < y.rows; ++i)
        for (size_t j = 0; j < y.cols; ++j) r.at(x.rows + i, j) = y.at(i, j);
    return r;
}

FMat fmat_blockdiag(const AlgebraRef& F, const FMat& x, const FMat& y) {
    FMat r = fmat_zero(F, x.rows + y.rows, x.cols + y.cols);
    for (size_t i = 0; i < x.rows; ++i)
        for (size_t j = 0; j < x.cols; ++j) r.at(i, j) = x.at(i, j);
    for (size_t i = 0; i < y.rows; ++i)
        for (size_t j = 0; j < y.cols; ++j) r.at(x.rows + i, x.cols + j) = y.at(i, j);
    return r;
}

FMat fmat_from_k(const AlgebraRef& F, const SMat& m) {
    FMat r = fmat_zero(F, m.rows, m.cols);
    for (size_t i = 0; i < m.rows; ++i)
        for (size_t j = 0; j < m.cols; ++j) r.at(i, j) = alg_from_scalar(F, m.at(i, j));
    return r;
}

std::string fmat_to_string(const FMat& x) {
    std::ostringstream os;
    for (size_t i = 0; i < x.rows; ++i) {
        os << "[";
        for (size_t j = 0; j < x.cols; ++j) {
            if (j) os << ", ";
            os << alg_to_string(x.at(i, j));
        }
        os << "]\n";
    }
    return os.str();
}

namespace {

// Row echelon with unit pivots, left row operations only (safe over
// noncommutative F). Returns pivot columns; x becomes reduced echelon.
std::vector<size_t> fmat_rref_units(FMat& x) {
    std::vector<size_t> pivots;
    size_t row = 0;
    for (size_t col = 0; col < x.cols && row < x.rows; ++col) {
        // Find a row at or below with a unit entry in this column.
        size_t sel = x.rows;
        bool nonzero_seen = false;
        for (size_t i = row; i < x.rows; ++i) {
            if (x.at(i, col).is_zero()) continue;
            nonzero_seen = true;
            if (alg_inv(x.at(i, col))) { sel = i; break; }
        }
        if (sel == x.rows) {
            if (nonzero_seen)
                throw UnsupportedShape("elimination over F stuck: nonzero column without unit pivot");
            continue;
        }
        for (size_t j = 0; j < x.cols; ++j) std::swap(x.at(row, j), x.at(sel, j));
        AlgElem inv = *alg_inv(x.at(row, col));
        for (size_t j = 0; j < x.cols; ++j) x.at(row, j) = inv * x.at(row, j);
        for (size_t i = 0; i < x.rows; ++i) {
            if (i == row || x.at(i, col).is_zero()) continue;
            AlgElem f = x.at(i, col);
            for (size_t j = 0; j < x.cols; ++j)
                x.at(i, j) = x.at(i, j) - f * x.at(row, j);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

// Column echelon with unit pivots, right column operations only; used for
// left annihilators.
std::vector<size_t> fmat_cref_units(FMat& x) {
    std::vector<size_t> pivots;
    size_t col = 0;
    for (size_t row = 0; row < x.rows && col < x.cols; ++row) {
        size_t sel = x.cols;
        bool nonzero_seen = false;
        for (size_t j = col; j < x.cols; ++j) {
            if (x.at(row, j).is_zero()) continue;
            nonzero_seen = true;
            if (alg_inv(x.at(row, j))) { sel = j; break; }
        }
        if (sel == x.cols) {
            if (nonzero_seen)
                throw UnsupportedShape("elimination over F stuck: nonzero row without unit pivot");
            continue;
        }
        for (size_t i = 0; i < x.rows; ++i) std::swap(x.at(i, col), x.at(i, sel));
        AlgElem inv = *alg_inv(x.at(row, col));
        for (size_t i = 0; i < x.rows; ++i) x.at(i, col) = x.at(i, col) * inv;
        for (size_t j = 0; j < x.cols; ++j) {
            if (j == col || x.at(row, j).is_zero()) continue;
            AlgElem f = x.at(row, j);
            for (size_t i = 0; i < x.rows; ++i)
                x.at(i, j) = x.at(i, j) - x.at(i, col) * f;
        }
        pivots.push_back(row);
        ++col;
    }
    return pivots;
}

} // namespace

size_t fmat_rank(const FMat& x) {
    if (x.a.empty()) return 0;
    FMat t = x;
    return fmat_rref_units(t).size();
}

FMat fmat_right_kernel(const AlgebraRef& F, const FMat& x) {
    if (x.rows == 0) return fmat_identity(F, x.cols);
    FMat t = x;
    std::vector<size_t> pivots = fmat_rref_units(t);
    std::vector<size_t> free_cols;
    for (size_t j = 0; j < x.cols; ++j)
        if (std::find(pivots.begin(), pivots.end(), j) == pivots.end())
            free_cols.push_back(j);
    FMat ker = fmat_zero(F, x.cols, free_cols.size());
    for (size_t idx = 0; idx < free_cols.size(); ++idx) {
        size_t f = free_cols[idx];
        ker.at(f, idx) = alg_one(F);
        for (size_t p = 0; p < pivots.size(); ++p)
            ker.at(pivots[p], idx) = -t.at(p, f);
    }
    return ker;
}

FMat fmat_left_kernel(const AlgebraRef& F, const FMat& x) {
    if (x.cols == 0) return fmat_identity(F, x.rows);
    FMat t = x;
    std::vector<size_t> pivots = fmat_cref_units(t);
    std::vector<size_t> free_rows;
    for (size_t i = 0; i < x.rows; ++i)
        if (std::find(pivots.begin(), pivots.end(), i) == pivots.end())
            free_rows.push_back(i);
    FMat ker = fmat_zero(F, free_rows.size(), x.rows);
    for (size_t idx = 0; idx < free_rows.size(); ++idx) {
        size_t f = free_rows[idx];
        ker.at(idx, f) = alg_one(F);
        for (size_t p = 0; p < pivots.size(); ++p)
            ker.at(idx, pivots[p]) = -t.at(f, p);
    }
    return ker;
}

FMat fmat_solve(const AlgebraRef& F, const FMat& x, const FMat& b) {
    if (x.rows != b.rows) throw DimensionMismatch("solve: row mismatch");
    FMat aug = fmat_hstack(x, b);
    std::vector<size_t> pivots = fmat_rref_units(aug);
    for (size_t p : pivots)
        if (p >= x.cols) throw Inconsistent("no solution over F");
    FMat sol = fmat_zero(F, x.cols, b.cols);
    for (size_t p = 0; p < pivots.size(); ++p)
        for (size_t j = 0; j < b.cols; ++j)
            sol.at(pivots[p], j) = aug.at(p, x.cols + j);
    return sol;
}

// ---------------------------------------------------------------------------
// Representations and morphisms.

Rep make_rep(const AlgebraRef& F, size_t m, size_t n, FMat C) {
    if (C.rows != n || C.cols != m) throw DimensionMismatch("structure matrix must be n x m");
    for (const AlgElem& e : C.a)
        if (e.A != F) throw FieldMismatch("structure matrix entry in the wrong algebra");
    return Rep{F, m, n, std::move(C)};
}

Rep structure_rep(const AlgebraRef& F) {
    FMat C = fmat_zero(F, 1, 1);
    C.at(0, 0) = alg_one(F);
    return make_rep(F, 1, 1, std::move(C));
}

Rep simple_regular(const AlgElem& lambda) {
    if (alg_in_base(lambda)) throw ElementInBase("simple regular module needs lambda outside k");
    const AlgebraRef& F = lambda.A;
    FMat C = fmat_zero(F, 1, 2);
    C.at(0, 0) = alg_one(F);
    C.at(0, 1) = lambda;
    return make_rep(F, 2, 1, std::move(C));
}

uint64_t rep_dim_k(const Rep& P) { return P.m + 4 * P.n; }

std::string rep_to_json_string(const Rep& P) {
    nlohmann::json entries = nlohmann::json::array();
    for (size_t i = 0; i < P.n; ++i)
        for (size_t j = 0; j < P.m; ++j) {
            nlohmann::json coords = nlohmann::json::array();
            for (size_t t = 0; t < 4; ++t)
                coords.push_back(scalar_to_string(P.C.at(i, j).c[t]));
            entries.push_back(coords);
        }
    nlohmann::json out = {{"m", P.m}, {"n", P.n}, {"C", entries}};
    return out.dump();
}

Morphism make_morphism(const Rep& P, const Rep& Q, SMat A, FMat B) {
    if (A.rows != Q.m || A.cols != P.m || B.rows != Q.n || B.cols != P.n)
        throw DimensionMismatch("morphism component shapes do not match the representations");
    Morphism f{P, Q, std::move(A), std::move(B)};
    FMat lhs = fmat_mul(P.F, f.B, P.C);
    FMat rhs = fmat_mul(P.F, Q.C, fmat_from_k(P.F, f.A));
    if (!(lhs == rhs)) throw Inconsistent("commuting square fails: B C != C' A");
    return f;
}

Morphism identity_morphism(const Rep& P) {
    return Morphism{P, P, smat_identity(P.F->k, P.m), fmat_identity(P.F, P.n)};
}

Morphism zero_morphism(const Rep& P, const Rep& Q) {
    return Morphism{P, Q, smat_zero(P.F->k, Q.m, P.m), fmat_zero(P.F, Q.n, P.n)};
}

bool morphism_is_zero(const Morphism& f) {
    return smat_is_zero(f.A) && fmat_is_zero(f.B);
}

Morphism compose(const Morphism& g, const Morphism& f) {
    if (!(f.target == g.source)) throw DimensionMismatch("composition: inner objects differ");
    return Morphism{f.source, g.target, smat_mul(g.A, f.A), fmat_mul(g.B, f.B)};
}

Morphism morphism_add(const Morphism& f, const Morphism& g) {
    if (!(f.source == g.source) || !(f.target == g.target))
        throw DimensionMismatch("morphism sum: objects differ");
    return Morphism{f.source, f.target, smat_add(f.A, g.A), fmat_add(f.B, g.B)};
}

Morphism morphism_scale(const Scalar& c, const Morphism& f) {
    return Morphism{f.source, f.target, smat_scale(c, f.A),
                    fmat_scale(alg_from_scalar(f.source.F, c), f.B)};
}

SMat morphism_coords(const Morphism& f) {
    const Field& k = f.source.F->k;
    size_t na = f.A.rows * f.A.cols, nb = f.B.rows * f.B.cols;
    SMat v = smat_zero(k, na + 4 * nb, 1);
    for (size_t i = 0; i < na; ++i) v.at(i, 0) = f.A.a[i];
    for (size_t i = 0; i < nb; ++i)
        for (size_t t = 0; t < 4; ++t) v.at(na + 4 * i + t, 0) = f.B.a[i].c[t];
    return v;
}

bool morphism_is_iso(const Morphism& f) {
    if (f.source.m != f.target.m || f.source.n != f.target.n) return false;
    if (smat_rank(f.A) != f.A.rows) return false;
    return fmat_rank(f.B) == f.B.rows;
}

// ---------------------------------------------------------------------------
// Hom spaces: one k-linear system from the commuting square.

std::vector<Morphism> hom_basis(const Rep& P, const Rep& Q) {
    if (P.F != Q.F) throw FieldMismatch("representations live over different bimodules");
    const AlgebraRef& F = P.F;
    const Field& k = F->k;
    size_t na = Q.m * P.m;            // entries of A
    size_t nb = Q.n * P.n;            // entries of B, 4 coordinates each
    size_t cols = na + 4 * nb;
    size_t rows = 4 * Q.n * P.m;      // one F-equation per (i, j)
    SMat sys = smat_zero(k, rows, cols);
    auto idxA = [&](size_t s, size_t j) { return s * P.m + j; };
    auto idxB = [&](size_t i, size_t t, size_t c) { return na + 4 * (i * P.n + t) + c; };
    for (size_t i = 0; i < Q.n; ++i)
        for (size_t j = 0; j < P.m; ++j) {
            size_t eq = 4 * (i * P.m + j);
            // (B C_P)_{ij}: B_{it} multiplied on the right by (C_P)_{tj}.
            for (size_t t = 0; t < P.n; ++t) {
                SMat rm = right_mult_matrix(P.C.at(t, j));
                for (size_t r = 0; r < 4; ++r)
                    for (size_t c = 0; c < 4; ++c)
                        sys.at(eq + r, idxB(i, t, c)) =
                            sys.at(eq + r, idxB(i, t, c)) + rm.at(r, c);
            }
            // -(C_Q A)_{ij}: scalar A_{sj} times the coordinates of (C_Q)_{is}.
            for (size_t s = 0; s < Q.m; ++s) {
                const AlgElem& cq = Q.C.at(i, s);
                for (size_t r = 0; r < 4; ++r)
                    sys.at(eq + r, idxA(s, j)) = sys.at(eq + r, idxA(s, j)) - cq.c[r];
            }
        }
    SMat ker = smat_kernel(sys);
    std::vector<Morphism> basis;
    for (size_t v = 0; v < ker.cols; ++v) {
        SMat A = smat_zero(k, Q.m, P.m);
        for (size_t s = 0; s < Q.m; ++s)
            for (size_t j = 0; j < P.m; ++j) A.at(s, j) = ker.at(idxA(s, j), v);
        FMat B = fmat_zero(F, Q.n, P.n);
        for (size_t i = 0; i < Q.n; ++i)
            for (size_t t = 0; t < P.n; ++t) {
                std::vector<Scalar> coords;
                for (size_t c = 0; c < 4; ++c) coords.push_back(ker.at(idxB(i, t, c), v));
                B.at(i, t) = alg_from_coords(F, std::move(coords));
            }
        basis.push_back(make_morphism(P, Q, std::move(A), std::move(B)));
    }
    return basis;
}

SMat solve_k_matrix(const FMat& C, const FMat& R) {
    if (C.rows != R.rows) throw DimensionMismatch("solve_k_matrix: row mismatch");
    const Field& k = fmat_algebra(C)->k;
    // Unknown A is C.cols x R.cols; each column of R gives an independent
    // system in the corresponding column of A.
    SMat A = smat_zero(k, C.cols, R.cols);
    SMat lhs = smat_zero(k, 4 * C.rows, C.cols);
    for (size_t i = 0; i < C.rows; ++i)
        for (size_t s = 0; s < C.cols; ++s)
            for (size_t r = 0; r < 4; ++r) lhs.at(4 * i + r, s) = C.at(i, s).c[r];
    for (size_t j = 0; j < R.cols; ++j) {
        SMat rhs = smat_zero(k, 4 * C.rows, 1);
        for (size_t i = 0; i < C.rows; ++i)
            for (size_t r = 0; r < 4; ++r) rhs.at(4 * i + r, 0) = R.at(i, j).c[r];
        SMat col = smat_solve(lhs, rhs);
        for (size_t s = 0; s < C.cols; ++s) A.at(s, j) = col.at(s, 0);
    }
    return A;
}

// ---------------------------------------------------------------------------
// Endomorphism rings.

EndRing end_ring(const Rep& P) {
    if (P.m == 0 && P.n == 0) throw DimensionMismatch("endomorphisms of the zero representation");
    EndRing R;
    R.basis = hom_basis(P, P);
    R.dim = R.basis.size();
    const Field& k = P.F->k;
    // Coordinates of the basis, for expressing products.
    size_t len = P.m * P.m + 4 * P.n * P.n;
    SMat G = smat_zero(k, len, R.dim);
    for (size_t j = 0; j < R.dim; ++j) {
        SMat cj = morphism_coords(R.basis[j]);
        for (size_t i = 0; i < len; ++i) G.at(i, j) = cj.at(i, 0);
    }
    auto express = [&](const Morphism& f) {
        return smat_solve(G, morphism_coords(f)); // R.dim x 1
    };
    for (size_t i = 0; i < R.dim; ++i) {
        SMat ti = smat_zero(k, R.dim, R.dim);
        for (size_t j = 0; j < R.dim; ++j) {
            SMat c = express(compose(R.basis[i], R.basis[j]));
            for (size_t l = 0; l < R.dim; ++l) ti.at(j, l) = c.at(l, 0);
        }
        R.table.push_back(std::move(ti));
    }
    if (R.dim == 1) {
        R.recognition = "k";
        return R;
    }
    if (R.dim == 2) {
        // Pick z in the basis independent of the identity, then read off
        // z^2 = t1 z + t0 from the structure constants. The identity is
        // proportional to basis[0] exactly when its second coordinate is 0.
        SMat idc = express(identity_morphism(P));
        size_t zi = idc.at(1, 0).is_zero() ? 1 : 0;
        const Morphism& z = R.basis[zi];
        Morphism z2 = compose(z, z);
        // z2 = a * id + b * z.
        SMat M = smat_zero(k, R.dim, 2);
        SMat zc = express(z);
        for (size_t i = 0; i < R.dim; ++i) {
            M.at(i, 0) = idc.at(i, 0);
            M.at(i, 1) = zc.at(i, 0);
        }
        SMat ab = smat_solve(M, express(z2));
        Scalar t0 = ab.at(0, 0), t1 = ab.at(1, 0);
        R.minpoly = std::make_pair(t1, t0);
        if (quadratic_irreducible(t1, t0))
            R.recognition = "k(z) with z^2 = " + scalar_to_string(t1) + " z + " +
                            scalar_to_string(t0);
        else
            R.recognition = "split quadratic";
        return R;
    }
    R.recognition = "dimension " + std::to_string(R.dim);
    return R;
}

// ---------------------------------------------------------------------------
// Kernels and cokernels.

KernelCokernel kernel_cokernel(const Morphism& f) {
    const Rep& P = f.source;
    const Rep& Q = f.target;
    const AlgebraRef& F = P.F;
    const Field& k = F->k;

    // Kernel: restrict along the kernels of both components.
    SMat KA = smat_kernel(f.A);                 // P.m x r over k
    FMat KB = fmat_right_kernel(F, f.B);        // P.n x s over F
    FMat rhs = fmat_mul(F, P.C, fmat_from_k(F, KA));
    if (KB.cols == 0 && !fmat_is_zero(rhs))
        throw ExactnessFailure("kernel on the k-side maps outside the F-side kernel");
    FMat Cker = fmat_solve(F, KB, rhs);
    Rep ker = make_rep(F, KA.cols, KB.cols, std::move(Cker));
    Morphism incl = make_morphism(ker, P, std::move(KA), std::move(KB));

    // Cokernel: project both components.
    SMat PAt = smat_kernel(smat_transpose(f.A)); // m_Q x r: columns span left-kernel^T
    SMat PA = smat_transpose(PAt);               // r x m_Q with PA A = 0
    FMat PB = fmat_left_kernel(F, f.B);          // s x n_Q with PB B = 0
    // Section SA of PA (PA SA = I), to transport C_Q to the quotient.
    SMat SA = PA.rows == 0 ? smat_zero(k, Q.m, 0)
                           : smat_solve_matrix(PA, smat_identity(k, PA.rows));
    FMat Ccok = fmat_mul(F, fmat_mul(F, PB, Q.C), fmat_from_k(F, SA));
    if (!(fmat_mul(F, Ccok, fmat_from_k(F, PA)) == fmat_mul(F, PB, Q.C)))
        throw ExactnessFailure("cokernel structure matrix does not descend");
    Rep cok = make_rep(F, PA.rows, PB.rows, std::move(Ccok));
    Morphism proj = make_morphism(Q, cok, std::move(PA), std::move(PB));

    return KernelCokernel{{std::move(ker), std::move(incl)},
                          {std::move(cok), std::move(proj)}};
}

// ---------------------------------------------------------------------------
// Point invariants.

PointData index_multiplicity(const Rep& S, const Rep& L) {
    const uint64_t epsilon = 2;
    uint64_t h = hom_basis(L, S).size();
    EndRing end = end_ring(S);
    if (h == 0 || h % epsilon != 0)
        throw NonIntegralInvariant("Hom(L, S) dimension is not a positive multiple of epsilon");
    if (h % end.dim != 0)
        throw NonIntegralInvariant("Hom(L, S) dimension is not divisible by dim End(S)");
    PointData pd{S, h / epsilon, h / end.dim, std::move(end)};
    return pd;
}

std::pair<long long, long long> defect_rank(const Rep& P) {
    long long m = static_cast<long long>(P.m), n = static_cast<long long>(P.n);
    return {m - 2 * n, 2 * n - m};
}

} // namespace tamecurve
