// Oracle tests for curve geometry: the F3 point census with frozen
// (f, e) data, ladder evaluation of noncommutative polynomials, the
// commutativity classifier golden set, and the efficient-shift search.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "tamecurve/geometry.hpp"

#include <random>

using namespace tamecurve;

namespace {

AlgebraRef f3_tower() {
    Field k = make_prime_field(3);
    return make_tower(k, scalar_from_int(k, 0), scalar_from_int(k, 2),
                      scalar_from_int(k, 0), scalar_from_int(k, 1), scalar_from_int(k, 1));
}

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

// F2(u, v) over F2(u^2, v^2): the purely inseparable biquadratic tower.
AlgebraRef biquadratic_f2() {
    Field k = make_ratfunc(2, {"u^2", "v^2"});
    Scalar z = scalar_zero(k);
    return make_tower(k, z, parse_scalar(k, "u^2"), z, parse_scalar(k, "v^2"), z);
}

// F2(u) over F2(u^4): x = u^2, y = u, so x^2 = u^4, y^2 = x.
AlgebraRef u4_tower() {
    Field k = make_ratfunc(2, {"u^4"});
    Scalar z = scalar_zero(k);
    return make_tower(k, z, parse_scalar(k, "u^4"), z, z, scalar_one(k));
}

// F4(u) over F2(u^2): x = u, y a cube root of unity with y^2 = y + 1.
// The only tower shape here has a linear term, so no dehomogenized
// function-field display exists; the extension is simple, hence the
// curve is noncommutative.
AlgebraRef f4_over_f2u2() {
    Field k = make_ratfunc(2, {"u^2"});
    Scalar z = scalar_zero(k);
    return make_tower(k, z, parse_scalar(k, "u^2"), scalar_one(k), scalar_one(k), z);
}

// Random valid tame tower over F_p: rejection-sample the x^2 = c0,
// y^2 = a0 + a1 x shape until both irreducibility checks pass.
AlgebraRef random_tower(uint64_t p, std::mt19937_64& rng) {
    Field k = make_prime_field(p);
    Scalar z = scalar_zero(k);
    for (;;) {
        Scalar c0 = scalar_from_int(k, static_cast<long long>(rng() % p));
        Scalar a0 = scalar_from_int(k, static_cast<long long>(rng() % p));
        Scalar a1 = scalar_from_int(k, static_cast<long long>(rng() % p));
        try {
            return make_tower(k, z, c0, z, a0, a1);
        } catch (const ReduciblePolynomial&) {
            continue;
        }
    }
}

} // namespace

TEST_CASE("F3 point census of degree <= 2") {
    AlgebraRef t = f3_tower();
    std::vector<CurvePoint> pts = enumerate_points(t, 2);
    REQUIRE(pts.size() == 4);
    CHECK(nc_to_string(pts[0].prime) == "X");
    CHECK(nc_to_string(pts[1].prime) == "Y^2");
    CHECK(nc_to_string(pts[2].prime) == "Y^2 + 2*X^2");
    CHECK(nc_to_string(pts[3].prime) == "Y^2 + X^2");
    CHECK(pts[0].degree == 1);
    for (size_t i = 1; i < 4; ++i) CHECK(pts[i].degree == 2);
    // Index 1 at every point; the degree-1 point is unirational, the
    // degree-2 points have multiplicity 2 with End(S) = k.
    for (const CurvePoint& pt : pts) CHECK(pt.f == 1);
    CHECK(pts[0].e == 1);
    CHECK(pts[0].end_ring == "k(z) with z^2 = 0 z + 2");
    for (size_t i = 1; i < 4; ++i) {
        CHECK(pts[i].e == 2);
        CHECK(pts[i].end_ring == "k");
        CHECK(pts[i].simple.m == 2);
        CHECK(pts[i].simple.n == 1);
        CHECK(pts[i].cokernel.m == 4);
        CHECK(pts[i].cokernel.n == 2);
        CHECK(end_ring(pts[i].cokernel).dim == 4);
    }
    CHECK(pts[0].simple.m == 2);
    CHECK(pts[0].cokernel.m == 2);
}

TEST_CASE("census bookkeeping invariants") {
    AlgebraRef t = f3_tower();
    std::vector<CurvePoint> pts = enumerate_points(t, 2);
    for (const CurvePoint& pt : pts) {
        CHECK(pt.f * pt.e == pt.degree);
        CHECK(rep_dim_k(pt.cokernel) == pt.e * rep_dim_k(pt.simple));
        CHECK(end_ring(pt.cokernel).dim == pt.e * pt.e * end_ring(pt.simple).dim);
    }
    // Distinct primes stay non-associated: all are monic in the leading
    // word, so a unit multiple relation would force equal term maps.
    for (size_t i = 0; i < pts.size(); ++i)
        for (size_t j = i + 1; j < pts.size(); ++j)
            CHECK(!(pts[i].prime == pts[j].prime));
}

TEST_CASE("degree bounds and field preconditions") {
    AlgebraRef t = f3_tower();
    CHECK(enumerate_points(t, 1).size() == 1);
    // Odd degrees above 1 carry no primes, so degree 3 adds nothing.
    CHECK(enumerate_points(t, 3).size() == 4);
    CHECK_THROWS_AS(enumerate_points(t, 4), DegreeBoundExceeded);
    CHECK_THROWS_AS(enumerate_points(biquadratic_q(), 2), InfiniteField);
    CHECK_THROWS_AS(enumerate_points(hamilton(), 2), UnsupportedShape);
}

TEST_CASE("ladder evaluation of homogeneous polynomials") {
    AlgebraRef t = f3_tower();
    Field k = t->k;
    Ladder lad = make_ladder(t);
    Scalar one = scalar_one(k);
    Morphism mx = evaluate_through_ladder(lad, nc_term(k, "X", one));
    CHECK(morphism_coords(mx) == morphism_coords(build_XYZ(lad, 1).X));
    // Leftmost letter on the highest rung: YX evaluates as Y_2 X_1.
    Morphism myx = evaluate_through_ladder(lad, nc_term(k, "YX", one));
    Morphism ref = compose(build_XYZ(lad, 2).Y, build_XYZ(lad, 1).X);
    CHECK(morphism_coords(myx) == morphism_coords(ref));
    NCPoly mix = nc_add(nc_term(k, "XX", one), nc_term(k, "YY", one));
    CHECK(evaluate_through_ladder(lad, mix).target.n == 3);
    NCPoly bad = nc_add(nc_term(k, "X", one), nc_term(k, "YY", one));
    CHECK_THROWS_AS(evaluate_through_ladder(lad, bad), UnsupportedShape);
    CHECK_THROWS_AS(evaluate_through_ladder(lad, nc_zero(k)), UnsupportedShape);
    CHECK_THROWS_AS(evaluate_through_ladder(lad, nc_term(k, "", one)), UnsupportedShape);
}

TEST_CASE("classifier golden set") {
    // Kronecker over F5: the projective line.
    Field f5 = make_prime_field(5);
    CurveDescriptor kr = classify_kronecker(f5);
    CHECK(kr.verdict == CurveVerdict::commutative);
    CHECK(kr.brauer_severi);
    CHECK(kr.function_field.field == "F5(T)");
    CHECK(kr.function_field.s == 1);

    // Hamilton quaternions: a commutative Brauer-Severi conic.
    CurveDescriptor ham = classify_commutative(hamilton());
    CHECK(ham.verdict == CurveVerdict::commutative);
    CHECK(ham.brauer_severi);
    CHECK(ham.function_field.field == "quotient field of Q[U, V]/(V^2 + U^2 + 1)");

    // Purely inseparable biquadratic: commutative but not Brauer-Severi.
    CurveDescriptor biq = classify_commutative(biquadratic_f2());
    CHECK(biq.verdict == CurveVerdict::commutative);
    CHECK(!biq.brauer_severi);
    CHECK(biq.function_field.field ==
          "quotient field of F2(u^2, v^2)[U, V]/(u^2*V^2 + v^2*U^2 + 1)");

    // Simple inseparable extension F2(u)/F2(u^4): noncommutative.
    CurveDescriptor u4 = classify_commutative(u4_tower());
    CHECK(u4.verdict == CurveVerdict::noncommutative);
    CHECK(u4.function_field.s == 2);
    CHECK(u4.function_field.field ==
          "quotient division ring of F2(u^4)<U, V>/(V*U + U*V + 1, V^2 + u^4*U^2)");

    // Simple extension F4(u)/F2(u^2): noncommutative, no display shape.
    CurveDescriptor f4 = classify_commutative(f4_over_f2u2());
    CHECK(f4.verdict == CurveVerdict::noncommutative);
    CHECK(f4.function_field.s == 2);
    CHECK(f4.function_field.field.empty());
}

TEST_CASE("classifier cross-checks against ring commutativity and e-values") {
    AlgebraRef t = f3_tower();
    CurveDescriptor d = classify_commutative(t);
    CHECK(d.verdict == CurveVerdict::noncommutative);
    CHECK(d.function_field.s == 2);
    // Noncommutative verdict comes with a point of multiplicity > 1.
    std::vector<CurvePoint> pts = enumerate_points(t, 2);
    bool some_e2 = false;
    for (const CurvePoint& pt : pts) some_e2 = some_e2 || pt.e > 1;
    CHECK(some_e2);
    // s = 1 exactly when the verdict is commutative, on the golden set.
    CHECK(classify_commutative(biquadratic_f2()).function_field.s == 1);
    CHECK(classify_commutative(biquadratic_q()).verdict == CurveVerdict::noncommutative);
}

TEST_CASE("classifier for finite skew polynomial data") {
    CurveDescriptor triv = classify_commutative(make_skew_poly(3, 1, 1));
    CHECK(triv.verdict == CurveVerdict::commutative);
    CHECK(triv.brauer_severi);
    CurveDescriptor c2 = classify_commutative(make_skew_poly(3, 1, 2));
    CHECK(c2.verdict == CurveVerdict::noncommutative);
    CHECK(c2.function_field.s == 2);
    CHECK(c2.function_field.centre == "F3(T^2)");
}

TEST_CASE("efficient shift via the unirational inner-subfield point") {
    ShiftReport r = has_efficient_tubular_shift(f3_tower());
    REQUIRE(r.verdict == Tri::yes);
    REQUIRE(r.witness.has_value());
    CHECK(nc_to_string(r.witness->prime) == "X");
    CHECK(r.witness->f == 1);
    CHECK(r.witness->e == 1);

    // Infinite base fields reach the same witness through k(x).
    ShiftReport rq = has_efficient_tubular_shift(biquadratic_q());
    CHECK(rq.verdict == Tri::yes);
    REQUIRE(rq.witness.has_value());
    CHECK(rq.witness->f == 1);
    CHECK(rq.witness->e == 1);
    CHECK(has_efficient_tubular_shift(u4_tower()).verdict == Tri::yes);
    CHECK(has_efficient_tubular_shift(hamilton()).verdict == Tri::yes);

    // Wedderburn: a quaternion algebra over a finite field always splits.
    CHECK_THROWS_AS(has_efficient_tubular_shift(quat_char2_f2()), UnsupportedShape);

    // Finite (2,2) data: decided by the finite base field.
    CHECK(has_efficient_tubular_shift(make_skew_poly(3, 1, 2)).verdict == Tri::yes);
}

TEST_CASE("efficient shift on random finite towers") {
    std::mt19937_64 rng(20260816);
    for (uint64_t p : {3ull, 5ull, 7ull}) {
        AlgebraRef t = random_tower(p, rng);
        ShiftReport r = has_efficient_tubular_shift(t);
        CHECK(r.verdict == Tri::yes);
        REQUIRE(r.witness.has_value());
        CHECK(r.witness->f == 1);
        CHECK(r.witness->e == 1);
    }
}
