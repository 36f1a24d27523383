// Oracle tests for the bimodule representation layer: Hom bases,
// endomorphism rings, kernels/cokernels, and the point invariants.
// P2 below is hand-built as (k^3 tensor F -> F^2) with C = [I | (x, y)^T].
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "tamecurve/reps.hpp"

using namespace tamecurve;

namespace {

AlgebraRef f3_tower() {
    Field k = make_prime_field(3);
    return make_tower(k, scalar_from_int(k, 0), scalar_from_int(k, 2),
                      scalar_from_int(k, 0), scalar_from_int(k, 1), scalar_from_int(k, 1));
}

// The second rung of the preprojective family: C = [1 0 x; 0 1 y].
Rep build_p2(const AlgebraRef& F) {
    FMat C = fmat_zero(F, 2, 3);
    C.at(0, 0) = alg_one(F);
    C.at(1, 1) = alg_one(F);
    C.at(0, 2) = alg_basis(F, 1);
    C.at(1, 2) = alg_basis(F, 2);
    return make_rep(F, 3, 2, std::move(C));
}

} // namespace

TEST_CASE("structure representation has endomorphism ring k") {
    AlgebraRef F = f3_tower();
    EndRing e = end_ring(structure_rep(F));
    CHECK(e.dim == 1);
    CHECK(e.recognition == "k");
}

TEST_CASE("simple regular S_x has endomorphism ring k(x)") {
    AlgebraRef F = f3_tower();
    Rep S = simple_regular(alg_basis(F, 1));
    EndRing e = end_ring(S);
    REQUIRE(e.dim == 2);
    REQUIRE(e.minpoly.has_value());
    // z^2 = c1 z + c0 = 0 z + 2: the inner quadratic layer.
    CHECK(e.minpoly->first == scalar_from_int(F->k, 0));
    CHECK(e.minpoly->second == scalar_from_int(F->k, 2));
    CHECK(e.recognition.substr(0, 4) == "k(z)");
}

TEST_CASE("simple regular for a primitive element has endomorphism ring k") {
    AlgebraRef F = f3_tower();
    // y generates the whole quartic field, so only k commutes.
    Rep S = simple_regular(alg_basis(F, 2));
    EndRing e = end_ring(S);
    CHECK(e.dim == 1);
    CHECK(e.recognition == "k");
}

TEST_CASE("simple regular rejects base elements") {
    AlgebraRef F = f3_tower();
    CHECK_THROWS_AS(simple_regular(alg_from_scalar(F, scalar_from_int(F->k, 2))),
                    ElementInBase);
}

TEST_CASE("hom dimensions: End(P2) = k, Hom(P1, P2) = 3, Hom(S, P) = 0") {
    AlgebraRef F = f3_tower();
    Rep L = structure_rep(F);
    Rep P2 = build_p2(F);
    CHECK(hom_basis(L, P2).size() == 3);
    EndRing e = end_ring(P2);
    CHECK(e.dim == 1);
    CHECK(e.recognition == "k");

    Rep Sx = simple_regular(alg_basis(F, 1));
    Rep Sy = simple_regular(alg_basis(F, 2));
    CHECK(hom_basis(Sx, P2).empty());
    CHECK(hom_basis(Sy, P2).empty());
    CHECK(hom_basis(Sx, L).empty());
    // Hom(L, S) is 2-dimensional for every simple regular here.
    CHECK(hom_basis(L, Sx).size() == 2);
    CHECK(hom_basis(L, Sy).size() == 2);
}

TEST_CASE("hom dimensions are stable under twisting by an automorphism") {
    AlgebraRef F = f3_tower();
    GaloisGroup g = galois_group(F);
    Rep L = structure_rep(F);
    AlgElem x = alg_basis(F, 1);
    for (const SMat& m : g.elements) {
        Rep S = simple_regular(apply_matrix(F, m, x));
        CHECK(hom_basis(L, S).size() == 2);
        CHECK(end_ring(S).dim == 2);
    }
}

TEST_CASE("short exact sequence 0 -> L -> P2 -> S_y -> 0") {
    AlgebraRef F = f3_tower();
    Rep L = structure_rep(F);
    Rep P2 = build_p2(F);
    // The inclusion with A = e_0, B = e_0.
    SMat A = smat_zero(F->k, 3, 1);
    A.at(0, 0) = scalar_one(F->k);
    FMat B = fmat_zero(F, 2, 1);
    B.at(0, 0) = alg_one(F);
    Morphism incl = make_morphism(L, P2, A, B);

    KernelCokernel kc = kernel_cokernel(incl);
    CHECK(kc.kernel.rep.m == 0);
    CHECK(kc.kernel.rep.n == 0);
    // Cokernel is literally S_y in this presentation.
    Rep Sy = simple_regular(alg_basis(F, 2));
    CHECK(kc.cokernel.rep == Sy);

    // Dimension bookkeeping of the sequence.
    CHECK(rep_dim_k(L) + rep_dim_k(kc.cokernel.rep) == rep_dim_k(P2));

    // The kernel of the projection recovers L together with the inclusion.
    KernelCokernel kc2 = kernel_cokernel(kc.cokernel.map);
    CHECK(kc2.kernel.rep == L);
    CHECK(kc2.kernel.map.A == incl.A);
    CHECK(kc2.kernel.map.B == incl.B);
    // And its cokernel is zero: the projection is onto.
    CHECK(kc2.cokernel.rep.m == 0);
    CHECK(kc2.cokernel.rep.n == 0);
}

TEST_CASE("kernel and cokernel of an identity are zero") {
    AlgebraRef F = f3_tower();
    Rep L = structure_rep(F);
    KernelCokernel kc = kernel_cokernel(identity_morphism(L));
    CHECK(kc.kernel.rep.m == 0);
    CHECK(kc.kernel.rep.n == 0);
    CHECK(kc.cokernel.rep.m == 0);
    CHECK(kc.cokernel.rep.n == 0);
}

TEST_CASE("index and multiplicity of simple regular modules") {
    AlgebraRef F = f3_tower();
    Rep L = structure_rep(F);

    PointData px = index_multiplicity(simple_regular(alg_basis(F, 1)), L);
    CHECK(px.f == 1);
    CHECK(px.e == 1);
    CHECK(px.end.dim == 2);

    PointData py = index_multiplicity(simple_regular(alg_basis(F, 2)), L);
    CHECK(py.f == 1);
    CHECK(py.e == 2);
    CHECK(py.end.dim == 1);

    // e * dim End(S) = epsilon * f in both cases.
    CHECK(px.e * px.end.dim == 2 * px.f);
    CHECK(py.e * py.end.dim == 2 * py.f);

    // A non-regular input has odd Hom dimension and must be rejected.
    CHECK_THROWS_AS(index_multiplicity(build_p2(F), L), NonIntegralInvariant);
}

TEST_CASE("defect and rank") {
    AlgebraRef F = f3_tower();
    CHECK(defect_rank(structure_rep(F)) == std::make_pair(-1LL, 1LL));
    CHECK(defect_rank(simple_regular(alg_basis(F, 1))) == std::make_pair(0LL, 0LL));
    CHECK(defect_rank(build_p2(F)) == std::make_pair(-1LL, 1LL));
}

TEST_CASE("composition is bilinear and lands in the Hom span") {
    AlgebraRef F = f3_tower();
    Rep L = structure_rep(F);
    Rep P2 = build_p2(F);
    std::vector<Morphism> in = hom_basis(L, P2);
    // Projection P2 ->> S_y from the exact-sequence test.
    SMat A = smat_zero(F->k, 3, 1);
    A.at(0, 0) = scalar_one(F->k);
    FMat B = fmat_zero(F, 2, 1);
    B.at(0, 0) = alg_one(F);
    Morphism proj = kernel_cokernel(make_morphism(L, P2, A, B)).cokernel.map;

    std::vector<Morphism> homLS = hom_basis(L, proj.target);
    REQUIRE(homLS.size() == 2);
    const Field& k = F->k;
    SMat G = smat_zero(k, morphism_coords(homLS[0]).rows, homLS.size());
    for (size_t j = 0; j < homLS.size(); ++j) {
        SMat cj = morphism_coords(homLS[j]);
        for (size_t i = 0; i < G.rows; ++i) G.at(i, j) = cj.at(i, 0);
    }
    for (const Morphism& f : in) {
        Morphism c = compose(proj, f);
        CHECK_NOTHROW(smat_solve(G, morphism_coords(c))); // lies in the span
    }
    // Bilinearity on the first two basis vectors.
    Morphism s = morphism_add(in[0], in[1]);
    SMat lhs = morphism_coords(compose(proj, s));
    SMat rhs = smat_add(morphism_coords(compose(proj, in[0])),
                        morphism_coords(compose(proj, in[1])));
    CHECK(lhs == rhs);
}

TEST_CASE("hom computation works over noncommutative algebras") {
    Field q = make_rationals();
    AlgebraRef H = make_quaternion(q, scalar_from_int(q, -1), scalar_from_int(q, -1));
    Rep L = structure_rep(H);
    CHECK(end_ring(L).dim == 1);
    Rep Si = simple_regular(alg_basis(H, 1));
    EndRing e = end_ring(Si);
    REQUIRE(e.dim == 2);
    REQUIRE(e.minpoly.has_value());
    CHECK(e.minpoly->first == scalar_zero(q));
    CHECK(e.minpoly->second == scalar_from_int(q, -1));
    CHECK(hom_basis(L, Si).size() == 2);
}

TEST_CASE("unit-pivot elimination accepts units and refuses nilpotent pivots") {
    Field k2 = make_prime_field(2);
    AlgebraRef Q2 = make_quaternion_char2(k2, scalar_one(k2), scalar_one(k2));
    // y is a unit (y^2 = 1); y + 1 squares to zero.
    FMat unit_col = fmat_zero(Q2, 1, 1);
    unit_col.at(0, 0) = alg_basis(Q2, 2);
    CHECK(fmat_rank(unit_col) == 1);
    FMat nil_col = fmat_zero(Q2, 1, 1);
    nil_col.at(0, 0) = alg_basis(Q2, 2) + alg_one(Q2);
    CHECK_THROWS_AS(fmat_rank(nil_col), UnsupportedShape);
}

TEST_CASE("solve_k_matrix inverts scalar extension and detects impossibility") {
    AlgebraRef F = f3_tower();
    Rep P2 = build_p2(F);
    SMat A = smat_zero(F->k, 3, 2);
    int vals[3][2] = {{1, 2}, {0, 1}, {2, 2}};
    for (size_t i = 0; i < 3; ++i)
        for (size_t j = 0; j < 2; ++j) A.at(i, j) = scalar_from_int(F->k, vals[i][j]);
    FMat R = fmat_mul(P2.C, fmat_from_k(F, A));
    CHECK(solve_k_matrix(P2.C, R) == A);

    FMat bad = fmat_zero(F, 1, 1);
    bad.at(0, 0) = alg_basis(F, 2); // y is not reachable from C = (1) over k
    FMat C1 = fmat_zero(F, 1, 1);
    C1.at(0, 0) = alg_one(F);
    CHECK_THROWS_AS(solve_k_matrix(C1, bad), Inconsistent);
}

TEST_CASE("representations serialize to JSON with coordinate entries") {
    AlgebraRef F = f3_tower();
    std::string js = rep_to_json_string(simple_regular(alg_basis(F, 1)));
    CHECK(js.find("\"m\":2") != std::string::npos);
    CHECK(js.find("\"n\":1") != std::string::npos);
    CHECK(js.find("\"C\"") != std::string::npos);
}
