// Representations of the (1,4) tame bimodule attached to a 4-dimensional
// algebra F over k: objects are pairs (k^m tensor F -> F^n) encoded by an
// n x m structure matrix over F, morphisms are commuting squares (A over k,
// B over F). Provides Hom bases, endomorphism rings, simple regular
// modules, kernels/cokernels, and the defect/index/multiplicity invariants.
#pragma once

#include "tamecurve/algebra.hpp"
#include "tamecurve/matrix.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace tamecurve {

using FMat = Mat<AlgElem>;

FMat fmat_zero(const AlgebraRef& F, size_t r, size_t c);
FMat fmat_identity(const AlgebraRef& F, size_t n);
FMat fmat_add(const FMat& x, const FMat& y);
FMat fmat_sub(const FMat& x, const FMat& y);
FMat fmat_neg(const FMat& x);
FMat fmat_mul(const FMat& x, const FMat& y);
// Overload for products where both factors may have a zero dimension.
FMat fmat_mul(const AlgebraRef& F, const FMat& x, const FMat& y);
FMat fmat_scale(const AlgElem& c, const FMat& x); // left scaling c * x_ij
bool fmat_is_zero(const FMat& x);
FMat fmat_hstack(const FMat& x, const FMat& y);
FMat fmat_vstack(const FMat& x, const FMat& y);
FMat fmat_blockdiag(const AlgebraRef& F, const FMat& x, const FMat& y);
// Entry-wise embedding of a k-matrix along k -> F.
FMat fmat_from_k(const AlgebraRef& F, const SMat& m);
std::string fmat_to_string(const FMat& x);

// Elimination over F restricted to unit pivots (left row operations).
// Works over division algebras and over the split characteristic-2
// quaternion shapes appearing here, where every pivot met is a unit;
// throws UnsupportedShape when a nonzero column offers no unit pivot.
size_t fmat_rank(const FMat& x);
// Columns spanning the right kernel {v : x v = 0} (a free right module).
FMat fmat_right_kernel(const AlgebraRef& F, const FMat& x);
// Rows spanning the left annihilator {w : w x = 0}.
FMat fmat_left_kernel(const AlgebraRef& F, const FMat& x);
// One solution of x V = B over F; throws Inconsistent.
FMat fmat_solve(const AlgebraRef& F, const FMat& x, const FMat& b);

struct Rep {
    AlgebraRef F;
    size_t m = 0, n = 0;
    FMat C; // n x m over F: (v tensor f) maps to C v f

    bool operator==(const Rep& o) const { return m == o.m && n == o.n && C == o.C; }
};

// Validates dimensions and that every entry lives in F.
Rep make_rep(const AlgebraRef& F, size_t m, size_t n, FMat C);
// L: the rank-one representation (k tensor F -> F) with C = (1).
Rep structure_rep(const AlgebraRef& F);
// S_lambda = (k^2 tensor F -> F) with C = (1, lambda); ElementInBase if
// lambda lies in k.
Rep simple_regular(const AlgElem& lambda);
uint64_t rep_dim_k(const Rep& P); // m + 4n
std::string rep_to_json_string(const Rep& P);

struct Morphism {
    Rep source, target;
    SMat A; // target.m x source.m over k
    FMat B; // target.n x source.n over F
};

// Checks the commuting square B C_source = C_target A over F.
Morphism make_morphism(const Rep& P, const Rep& Q, SMat A, FMat B);
Morphism identity_morphism(const Rep& P);
Morphism zero_morphism(const Rep& P, const Rep& Q);
bool morphism_is_zero(const Morphism& f);
Morphism compose(const Morphism& g, const Morphism& f); // g after f
Morphism morphism_add(const Morphism& f, const Morphism& g);
Morphism morphism_scale(const Scalar& c, const Morphism& f);
// Flattened k-coordinates (entries of A, then coordinates of B), as one
// column; basis-independent tests and span membership work through this.
SMat morphism_coords(const Morphism& f);
// Invertibility of both components (an isomorphism of representations).
bool morphism_is_iso(const Morphism& f);

// k-basis of Hom(P, Q), deterministic echelon order.
std::vector<Morphism> hom_basis(const Rep& P, const Rep& Q);

// Solve C A = R for a matrix A over k, where C and R live over F; the
// entry-wise k-linear system of all four coordinates. Inconsistent when
// no k-matrix satisfies the equation.
SMat solve_k_matrix(const FMat& C, const FMat& R);

struct EndRing {
    size_t dim = 0;
    std::vector<Morphism> basis;
    // table[i].at(j, l) = coefficient of basis_l in basis_i o basis_j.
    std::vector<SMat> table;
    // "k", "k(z) with z^2 = t1 z + t0", "split quadratic", or
    // "dimension d" for dim > 2.
    std::string recognition;
    std::optional<std::pair<Scalar, Scalar>> minpoly; // (t1, t0) when quadratic
};
EndRing end_ring(const Rep& P);

struct SubquotientData {
    Rep rep;
    Morphism map; // inclusion into the source / projection from the target
};
struct KernelCokernel {
    SubquotientData kernel;   // map: Ker -> source of f
    SubquotientData cokernel; // map: target of f -> Coker
};
KernelCokernel kernel_cokernel(const Morphism& f);

struct PointData {
    Rep S;
    uint64_t f = 0; // index: dim_k Hom(L,S) / epsilon
    uint64_t e = 0; // multiplicity: dim_k Hom(L,S) / dim_k End(S)
    EndRing end;
};
// epsilon = 2 throughout: these matrix representations realize the
// (1,4) shape only (the (2,2) case is handled at the algebra level).
PointData index_multiplicity(const Rep& S, const Rep& L);

// defect = m - 2n (so structure_rep has defect -1, simple regulars 0);
// rank = 2n - m (regular composition rank, 1 on the preprojective family).
std::pair<long long, long long> defect_rank(const Rep& P);

} // namespace tamecurve
