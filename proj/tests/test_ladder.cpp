// Oracle tests for the preprojective ladder: frozen rung and step
// matrices, the four degree-2 relations across all variants, Hom
// dimension counts, and universal-extension exactness.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "tamecurve/ladder.hpp"

using namespace tamecurve;

namespace {

// F9/F3 tower continued to F81: x^2 = 2, y^2 = x + 1.
AlgebraRef f3_tower() {
    Field k = make_prime_field(3);
    return make_tower(k, scalar_from_int(k, 0), scalar_from_int(k, 2),
                      scalar_from_int(k, 0), scalar_from_int(k, 1), scalar_from_int(k, 1));
}

// Q(sqrt 3, sqrt 2): x^2 = 3, y^2 = 2 (a1 = 0 kills the staircase shim).
AlgebraRef biquadratic_q() {
    Field q = make_rationals();
    return make_tower(q, scalar_from_int(q, 0), scalar_from_int(q, 3),
                      scalar_from_int(q, 0), scalar_from_int(q, 2), scalar_from_int(q, 0));
}

AlgebraRef hamilton() {
    Field q = make_rationals();
    return make_quaternion(q, scalar_from_int(q, -1), scalar_from_int(q, -1));
}

AlgebraRef quat_char2_f2() {
    Field k = make_prime_field(2);
    return make_quaternion_char2(k, scalar_one(k), scalar_one(k));
}

} // namespace

TEST_CASE("first rung is the structure representation") {
    Ladder lad = make_ladder(f3_tower());
    CHECK(build_P(lad, 1) == structure_rep(lad.F));
    CHECK_THROWS_AS(build_P(lad, 0), NotDefined);
}

TEST_CASE("third rung matrix is [I | bidiagonal x/y block]") {
    Ladder lad = make_ladder(f3_tower());
    const Rep& P3 = build_P(lad, 3);
    REQUIRE(P3.m == 5);
    REQUIRE(P3.n == 3);
    AlgebraRef F = lad.F;
    FMat want = fmat_zero(F, 3, 5);
    for (size_t j = 0; j < 3; ++j) want.at(j, j) = alg_one(F);
    want.at(0, 3) = alg_basis(F, 1);
    want.at(1, 3) = alg_basis(F, 2);
    want.at(1, 4) = alg_basis(F, 1);
    want.at(2, 4) = alg_basis(F, 2);
    CHECK(P3.C == want);
}

TEST_CASE("Z staircase signs alternate with the clean column last") {
    Ladder lad = make_ladder(f3_tower());
    AlgebraRef F = lad.F;
    const LadderStep& s1 = build_XYZ(lad, 1);
    // n = 1: single clean column (x, y)^T; its k-side picks the pair column.
    FMat zb1 = fmat_zero(F, 2, 1);
    zb1.at(0, 0) = alg_basis(F, 1);
    zb1.at(1, 0) = alg_basis(F, 2);
    CHECK(s1.Z.B == zb1);
    SMat za1 = smat_zero(F->k, 3, 1);
    za1.at(2, 0) = scalar_one(F->k);
    CHECK(s1.Z.A == za1);

    // n = 2: column 0 flips sign and carries the -a1 = 2 shim below.
    const LadderStep& s2 = build_XYZ(lad, 2);
    FMat zb2 = fmat_zero(F, 3, 2);
    zb2.at(0, 0) = -alg_basis(F, 1);
    zb2.at(1, 0) = -alg_basis(F, 2);
    zb2.at(2, 0) = alg_from_scalar(F, scalar_from_int(F->k, 2));
    zb2.at(1, 1) = alg_basis(F, 1);
    zb2.at(2, 1) = alg_basis(F, 2);
    CHECK(s2.Z.B == zb2);

    // The solved k-side of Z_2, checked entry by entry.
    int za2[5][3] = {{0, 0, 1}, {0, 0, 0}, {2, 0, 1}, {2, 0, 0}, {0, 1, 0}};
    REQUIRE(s2.Z.A.rows == 5);
    REQUIRE(s2.Z.A.cols == 3);
    for (size_t i = 0; i < 5; ++i)
        for (size_t j = 0; j < 3; ++j)
            CHECK(s2.Z.A.at(i, j) == scalar_from_int(F->k, za2[i][j]));
}

TEST_CASE("four ladder relations hold for n <= 6 in all variants") {
    for (AlgebraRef F : {f3_tower(), biquadratic_q(), hamilton(), quat_char2_f2()}) {
        CAPTURE(F->name());
        Ladder lad = make_ladder(F);
        for (size_t n = 1; n <= 6; ++n) {
            CAPTURE(n);
            StepRelations r = verify_step_relations(lad, n);
            CHECK(r.commute_xy);
            CHECK(r.commute_xz);
            CHECK(r.mixed_yz);
            CHECK(r.square_z);
            CHECK(r.all());
        }
    }
}

TEST_CASE("X Z composites commute while the Z Y pairing differs") {
    Ladder lad = make_ladder(f3_tower());
    const LadderStep lo = build_XYZ(lad, 2);
    const LadderStep hi = build_XYZ(lad, 3);
    Morphism xz = compose(hi.X, lo.Z);
    Morphism zx = compose(hi.Z, lo.X);
    Morphism zy = compose(hi.Z, lo.Y);
    CHECK(xz.A == zx.A);
    CHECK(xz.B == zx.B);
    // The commuting partner of X Z is Z X, not Z Y.
    CHECK_FALSE(xz.B == zy.B);
    CHECK_FALSE(xz.A == zy.A);
}

TEST_CASE("step triples are bases of three-dimensional Hom spaces") {
    for (AlgebraRef F : {f3_tower(), quat_char2_f2()}) {
        CAPTURE(F->name());
        Ladder lad = make_ladder(F);
        for (size_t n = 1; n <= 6; ++n) {
            CAPTURE(n);
            CHECK(hom_basis(build_P(lad, n), build_P(lad, n + 1)).size() == 3);
            const LadderStep& st = build_XYZ(lad, n);
            SMat coords = smat_hstack(
                smat_hstack(morphism_coords(st.X), morphism_coords(st.Y)),
                morphism_coords(st.Z));
            CHECK(smat_rank(coords) == 3);
        }
    }
}

TEST_CASE("rungs are bricks and the simple regular at x sees none of them") {
    Ladder lad = make_ladder(f3_tower());
    Rep Sx = ladder_simple_x(lad);
    for (size_t n = 1; n <= 6; ++n) {
        CAPTURE(n);
        EndRing e = end_ring(build_P(lad, n));
        CHECK(e.dim == 1);
        CHECK(e.recognition == "k");
        CHECK(hom_basis(Sx, build_P(lad, n)).empty());
        auto [defect, rank] = defect_rank(build_P(lad, n));
        CHECK(defect == -1);
        CHECK(rank == 1);
    }
}

TEST_CASE("Hom(P_n, P_{n+t}) has dimension 2t + 1") {
    Ladder lad = make_ladder(f3_tower());
    for (size_t n = 1; n <= 3; ++n)
        for (size_t t = 0; t <= 4; ++t) {
            CAPTURE(n);
            CAPTURE(t);
            CHECK(hom_basis(build_P(lad, n), build_P(lad, n + t)).size() == 2 * t + 1);
        }
}

TEST_CASE("universal extension is exact with cokernel the simple at x") {
    Ladder lad = make_ladder(f3_tower());
    Rep Sx = ladder_simple_x(lad);
    for (size_t n = 1; n <= 6; ++n) {
        CAPTURE(n);
        ExactnessReport rep = verify_universal_extension(lad, n);
        CHECK(rep.pieces.kernel.rep.m == 0);
        CHECK(rep.pieces.kernel.rep.n == 0);
        CHECK(rep.pieces.cokernel.rep.m == 2);
        CHECK(rep.pieces.cokernel.rep.n == 1);
        CHECK(rep.iso.target == Sx);
        CHECK(morphism_is_iso(rep.iso));
        CHECK(rep_dim_k(rep.pieces.cokernel.rep) == rep_dim_k(Sx));
    }
}

TEST_CASE("universal extension holds in the skew variants") {
    Ladder ham = make_ladder(hamilton());
    ExactnessReport r4 = verify_universal_extension(ham, 4);
    CHECK(r4.pieces.cokernel.rep.m == 2);
    CHECK(morphism_is_iso(r4.iso));

    Ladder q2 = make_ladder(quat_char2_f2());
    for (size_t n = 1; n <= 3; ++n) {
        CAPTURE(n);
        ExactnessReport r = verify_universal_extension(q2, n);
        CHECK(morphism_is_iso(r.iso));
        CHECK(r.pieces.kernel.rep.m == 0);
    }
}

TEST_CASE("towers with linear terms in x or y are rejected") {
    // F4(u) over F2(u^2): x^2 = x + 1 breaks the x^2 = c0 ladder shape.
    Field k = make_ratfunc(2, {"u^2"});
    Scalar u2 = parse_scalar(k, "u^2");
    AlgebraRef mixed = make_tower(k, scalar_one(k), scalar_one(k), scalar_from_int(k, 0),
                                  u2, scalar_from_int(k, 0));
    CHECK_THROWS_AS(make_ladder(mixed), UnsupportedShape);
}
