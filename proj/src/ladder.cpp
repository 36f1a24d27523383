// Preprojective ladder: explicit rung and step matrices, relation checks,
// and the universal-extension certificate.
#include "tamecurve/ladder.hpp"

#include <string>

namespace tamecurve {

namespace {

// (c+1) x c, ones on the subdiagonal: e_j -> e_{j+1}.
SMat shift_down(const Field& k, size_t c) {
    SMat m = smat_zero(k, c + 1, c);
    for (size_t j = 0; j < c; ++j) m.at(j + 1, j) = scalar_one(k);
    return m;
}

// (c+1) x c, ones on the diagonal: e_j -> e_j.
SMat embed_top(const Field& k, size_t c) {
    SMat m = smat_zero(k, c + 1, c);
    for (size_t j = 0; j < c; ++j) m.at(j, j) = scalar_one(k);
    return m;
}

// The F-side Z-staircase, (n+1) x n. Column j carries x at (j,j) and y at
// (j+1,j); for comm_ext the signs alternate so the xy-component of
// Z(e_j x + e_{j+1} y) cancels, with a constant -a1 at (j+2,j) absorbing
// the y^2 cross term, and the clean column sits last so nothing overflows
// the bottom row. The skew variants cancel inside the algebra instead and
// take the all-plus staircase.
FMat z_staircase(const AlgebraRef& F, size_t n) {
    FMat Z = fmat_zero(F, n + 1, n);
    AlgElem xg = alg_basis(F, 1), yg = alg_basis(F, 2);
    for (size_t j = 0; j < n; ++j) {
        bool plus = F->variant != BimoduleVariant::comm_ext || (n - 1 - j) % 2 == 0;
        if (plus) {
            Z.at(j, j) = xg;
            Z.at(j + 1, j) = yg;
        } else {
            Z.at(j, j) = -xg;
            Z.at(j + 1, j) = -yg;
            Z.at(j + 2, j) = alg_from_scalar(F, -F->par.a1);
        }
    }
    return Z;
}

Morphism combine(const Morphism& f, const Scalar& c, const Morphism& g) {
    return morphism_add(f, morphism_scale(c, g));
}

} // namespace

Ladder make_ladder(const AlgebraRef& F) {
    if (F->variant == BimoduleVariant::comm_ext &&
        !(F->par.c1.is_zero() && F->par.d1.is_zero()))
        throw UnsupportedShape(
            "ladder needs the x^2 = c0, y^2 = a0 + a1 x tower shape (c1 = d1 = 0)");
    return Ladder{F, {}, {}};
}

const Rep& build_P(Ladder& lad, size_t n) {
    if (n < 1) throw NotDefined("ladder rungs start at n = 1");
    auto it = lad.rungs.find(n);
    if (it != lad.rungs.end()) return it->second;
    const AlgebraRef& F = lad.F;
    FMat C = fmat_zero(F, n, 2 * n - 1);
    for (size_t j = 0; j < n; ++j) C.at(j, j) = alg_one(F);
    for (size_t j = 0; j + 1 < n; ++j) {
        C.at(j, n + j) = alg_basis(F, 1);
        C.at(j + 1, n + j) = alg_basis(F, 2);
    }
    return lad.rungs.emplace(n, make_rep(F, 2 * n - 1, n, std::move(C))).first->second;
}

const LadderStep& build_XYZ(Ladder& lad, size_t n) {
    if (n < 1) throw NotDefined("ladder steps start at n = 1");
    auto it = lad.steps.find(n);
    if (it != lad.steps.end()) return it->second;
    const AlgebraRef& F = lad.F;
    const Field& k = F->k;
    Rep Pn = build_P(lad, n);
    Rep Pn1 = build_P(lad, n + 1);

    // k-side blocks act separately on the identity and x/y column groups.
    SMat AX = smat_blockdiag(k, shift_down(k, n), shift_down(k, n - 1));
    SMat AY = smat_blockdiag(k, embed_top(k, n), embed_top(k, n - 1));
    Morphism X = make_morphism(Pn, Pn1, AX, fmat_from_k(F, shift_down(k, n)));
    Morphism Y = make_morphism(Pn, Pn1, AY, fmat_from_k(F, embed_top(k, n)));

    // Z's k-side is determined by its F-side staircase: the structure
    // matrix columns are k-independent, so C_{n+1} A = Z'' C_n pins A.
    FMat ZB = z_staircase(F, n);
    SMat AZ = solve_k_matrix(Pn1.C, fmat_mul(F, ZB, Pn.C));
    Morphism Z = make_morphism(Pn, Pn1, std::move(AZ), std::move(ZB));

    return lad.steps
        .emplace(n, LadderStep{std::move(X), std::move(Y), std::move(Z)})
        .first->second;
}

Rep ladder_simple_x(const Ladder& lad) { return simple_regular(alg_basis(lad.F, 1)); }

StepRelations verify_step_relations(Ladder& lad, size_t n) {
    const LadderStep lo = build_XYZ(lad, n);
    const LadderStep hi = build_XYZ(lad, n + 1);
    const TowerParams& p = lad.F->par;
    const Field& k = lad.F->k;
    Morphism XX = compose(hi.X, lo.X), XY = compose(hi.X, lo.Y), YX = compose(hi.Y, lo.X);
    Morphism XZ = compose(hi.X, lo.Z), ZX = compose(hi.Z, lo.X);
    Morphism YY = compose(hi.Y, lo.Y), YZ = compose(hi.Y, lo.Z), ZY = compose(hi.Z, lo.Y);
    Morphism ZZ = compose(hi.Z, lo.Z);
    Scalar minus1 = scalar_from_int(k, -1);

    StepRelations r;
    r.commute_xy = morphism_is_zero(combine(XY, minus1, YX));
    r.commute_xz = morphism_is_zero(combine(XZ, minus1, ZX));
    switch (lad.F->variant) {
    case BimoduleVariant::comm_ext:
        r.mixed_yz = morphism_is_zero(morphism_add(ZY, combine(YZ, p.a1, XX)));
        r.square_z = morphism_is_zero(combine(combine(ZZ, p.c0, YY), -p.a0, XX));
        break;
    case BimoduleVariant::skew_ext:
        r.mixed_yz = morphism_is_zero(combine(ZY, minus1, YZ));
        r.square_z = morphism_is_zero(combine(combine(ZZ, -p.c0, YY), -p.a0, XX));
        break;
    case BimoduleVariant::quat_char2:
        r.mixed_yz = morphism_is_zero(combine(ZY, minus1, YZ));
        r.square_z = morphism_is_zero(morphism_add(
            combine(combine(ZZ, p.c0, YY), p.a0, XX), YZ));
        break;
    }
    return r;
}

ExactnessReport verify_universal_extension(Ladder& lad, size_t n) {
    const LadderStep& st = build_XYZ(lad, n);
    KernelCokernel kc = kernel_cokernel(st.X);
    if (kc.kernel.rep.m != 0 || kc.kernel.rep.n != 0)
        throw ExactnessFailure("X_" + std::to_string(n) + " has kernel of dimension pair (" +
                               std::to_string(kc.kernel.rep.m) + ", " +
                               std::to_string(kc.kernel.rep.n) + ")");
    uint64_t dn = rep_dim_k(build_P(lad, n)), dn1 = rep_dim_k(build_P(lad, n + 1));
    uint64_t dc = rep_dim_k(kc.cokernel.rep);
    if (dn + dc != dn1)
        throw ExactnessFailure("dimension bookkeeping " + std::to_string(dn) + " + " +
                               std::to_string(dc) + " != " + std::to_string(dn1));
    Rep Sx = ladder_simple_x(lad);
    std::vector<Morphism> homs = hom_basis(kc.cokernel.rep, Sx);
    // A nonzero morphism between simple regular representations is an
    // isomorphism, so the first basis vector decides.
    for (const Morphism& h : homs)
        if (morphism_is_iso(h)) return ExactnessReport{std::move(kc), h};
    throw ExactnessFailure("cokernel of X_" + std::to_string(n) +
                           " is not isomorphic to the simple regular at x");
}

} // namespace tamecurve
