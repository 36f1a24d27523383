// Unit tests for the scalar layer: modular arithmetic, polynomial gcds,
// canonical fractions, the four field kinds, parsing, square roots, and the
// exact linear algebra on top. Expected values were computed by hand or by
// independent elementary arguments and are frozen here.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "tamecurve/field.hpp"
#include "tamecurve/matrix.hpp"

#include <random>

using namespace tamecurve;

TEST_CASE("modular arithmetic basics") {
    CHECK(mod_pow(3, 5, 7) == 5); // 243 = 34*7 + 5
    CHECK(mod_inv(3, 7) == 5);    // 3*5 = 15 = 2*7 + 1
    CHECK(mod_mul(mod_inv(12345, 65537), 12345, 65537) == 1);
    auto s = mod_sqrt(2, 7); // 3^2 = 9 = 2 mod 7
    REQUIRE(s.has_value());
    CHECK(mod_mul(*s, *s, 7) == 2);
    CHECK(!mod_sqrt(3, 7).has_value()); // 3 is a non-residue mod 7
}

TEST_CASE("integer factorization and squares") {
    Factorization f = factor_trial(BigInt(2 * 2 * 3 * 49 * 11));
    REQUIRE(f.complete());
    REQUIRE(f.primes.size() == 4);
    CHECK(f.primes[0] == std::make_pair(BigInt(2), 2u));
    CHECK(f.primes[3] == std::make_pair(BigInt(11), 1u));
    CHECK(is_perfect_square(BigInt(144)));
    CHECK(!is_perfect_square(BigInt(145)));
}

TEST_CASE("Hilbert symbols: Hamilton ramifies exactly at 2 and infinity") {
    BigRat m1(-1);
    CHECK(hilbert_symbol(m1, m1, BigInt(0)) == -1);
    CHECK(hilbert_symbol(m1, m1, BigInt(2)) == -1);
    CHECK(hilbert_symbol(m1, m1, BigInt(3)) == 1);
    CHECK(hilbert_symbol(m1, m1, BigInt(5)) == 1);
    // (2,3): product over all places is 1 (reciprocity sanity check).
    int prod = 1;
    auto places = hilbert_places(BigRat(2), BigRat(3));
    REQUIRE(places.has_value());
    for (const auto& p : *places) prod *= hilbert_symbol(BigRat(2), BigRat(3), p);
    CHECK(prod == 1);
}

TEST_CASE("F_p polynomial arithmetic") {
    uint64_t p = 7;
    FpPoly a = {6, 0, 1}; // x^2 - 1
    FpPoly b = {1, 2, 1}; // (x+1)^2
    CHECK(fp_gcd(a, b, p) == FpPoly{1, 1});
    auto [q, r] = fp_divmod(fp_mul(a, b, p), a, p);
    CHECK(q == b);
    CHECK(r.empty());
    CHECK(fp_irreducible({1, 0, 1}, 3));  // x^2 + 1 over F_3
    CHECK(!fp_irreducible({1, 0, 1}, 5)); // 2^2 = -1 mod 5
    CHECK(fp_find_irreducible(2, 2) == FpPoly{1, 1, 1});
    FpExtGcd e = fp_ext_gcd({1, 1}, {1, 0, 1}, 3);
    CHECK(e.g == FpPoly{1});
    CHECK(fp_mod(fp_add(fp_mul(e.u, {1, 1}, 3), fp_mul(e.v, {1, 0, 1}, 3), 3), {1, 0, 1}, 3) ==
          FpPoly{1});
}

TEST_CASE("bivariate gcd and exact division") {
    uint64_t p = 3;
    MPoly u = mp_var(p, 0), v = mp_var(p, 1);
    MPoly upv = mp_add(u, v);
    MPoly a = mp_mul(mp_mul(upv, upv), u); // (u+v)^2 u
    MPoly b = mp_mul(upv, v);              // (u+v) v
    MPoly g = mp_gcd(a, b);
    CHECK(mp_equal(g, upv));
    CHECK(mp_equal(mp_div_exact(a, g), mp_mul(upv, u)));
    // gcd of univariates in different variables is 1.
    CHECK(mp_gcd(u, v).is_constant());
    // Content in the second variable is found too.
    MPoly c = mp_mul(v, mp_add(mp_mul(u, u), v));
    CHECK(mp_equal(mp_gcd(mp_mul(c, u), mp_mul(c, upv)), c));
}

TEST_CASE("canonical fractions") {
    Field k = make_ratfunc(3, {"u", "v"});
    // (u^2 - 1)/(u - 1) reduces to u + 1. Over F_3, -1 = 2.
    Scalar num = parse_scalar(k, "u^2 + 2");
    Scalar den = parse_scalar(k, "u + 2");
    Scalar q = num / den;
    CHECK(q == parse_scalar(k, "u + 1"));
    CHECK(scalar_to_string(q) == "u + 1");
    // Denominators are normalized monic: 1/(2u) = 2/u over F_3.
    Scalar r = scalar_one(k) / parse_scalar(k, "2*u");
    CHECK(scalar_to_string(r) == "2/(u)");
}

TEST_CASE("rational scalars") {
    Field q = make_rationals();
    Scalar a = parse_scalar(q, "3/2 + 1/6");
    CHECK(a == parse_scalar(q, "5/3"));
    CHECK(scalar_to_string(a) == "5/3");
    CHECK(scalar_to_string(parse_scalar(q, "-4/6")) == "-2/3");
    CHECK(parse_scalar(q, "2^10") == scalar_from_int(q, 1024));
    CHECK((-scalar_from_int(q, 5)).pow(-2) == parse_scalar(q, "1/25"));
}

TEST_CASE("finite field F_9 arithmetic") {
    Field f9 = make_finite_field(3, 2, {1, 0, 1}); // t^2 = -1
    Scalar t = parse_scalar(f9, "t");
    CHECK((t + scalar_one(f9)) * (t + scalar_one(f9)) == parse_scalar(f9, "2*t"));
    CHECK(t.inv() == parse_scalar(f9, "2*t"));
    CHECK(frobenius(t) == parse_scalar(f9, "2*t")); // t^3 = -t
    CHECK(t.pow(8) == scalar_one(f9));              // multiplicative order divides 8
    CHECK(t.pow(4) == scalar_one(f9));              // t has order 4 here
}

TEST_CASE("square roots per field kind") {
    Field q = make_rationals();
    CHECK(scalar_sqrt(parse_scalar(q, "4/9")) == parse_scalar(q, "2/3"));
    CHECK(!scalar_sqrt(parse_scalar(q, "2")).has_value());
    CHECK(!scalar_sqrt(parse_scalar(q, "-4")).has_value());

    Field k2 = make_ratfunc(2, {"u", "v"});
    Scalar s = parse_scalar(k2, "u^2*v^2 + u^4");
    CHECK(scalar_sqrt(s) == parse_scalar(k2, "u*v + u^2"));
    CHECK(!scalar_sqrt(parse_scalar(k2, "u")).has_value());

    Field k3 = make_ratfunc(3, {"u"});
    CHECK(scalar_sqrt(parse_scalar(k3, "u^2 + 2*u + 1")) == parse_scalar(k3, "u + 1"));
    CHECK(!scalar_sqrt(parse_scalar(k3, "u")).has_value());

    Field f9 = make_finite_field(3, 2, {1, 0, 1});
    Scalar m1 = -scalar_one(f9);
    auto r = scalar_sqrt(m1); // t^2 = -1
    REQUIRE(r.has_value());
    CHECK((*r) * (*r) == m1);

    Field f4 = make_finite_field(2, 2);
    for (const Scalar& x : enumerate_field(f4)) {
        auto rx = scalar_sqrt(x);
        REQUIRE(rx.has_value()); // squaring is bijective in characteristic 2
        CHECK((*rx) * (*rx) == x);
    }
}

TEST_CASE("quadratic roots in the base field") {
    Field f3 = make_prime_field(3);
    CHECK(quadratic_roots_in_field(parse_scalar(f3, "1"), parse_scalar(f3, "1")).empty());
    CHECK(quadratic_irreducible(parse_scalar(f3, "1"), parse_scalar(f3, "1")));

    Field q = make_rationals();
    auto roots = quadratic_roots_in_field(scalar_zero(q), parse_scalar(q, "4"));
    REQUIRE(roots.size() == 2); // t^2 = 4
    CHECK((roots[0] == parse_scalar(q, "2") || roots[1] == parse_scalar(q, "2")));
    CHECK(quadratic_roots_in_field(scalar_zero(q), parse_scalar(q, "2")).empty());

    // Characteristic 2 Artin-Schreier over F_2(u): t^2 + t = u^4 + u^2 has
    // roots u^2 and u^2 + 1; t^2 + t = 1 and t^2 + t = u^2 have none.
    Field k2 = make_ratfunc(2, {"u"});
    Scalar one = scalar_one(k2);
    auto as = quadratic_roots_in_field(one, parse_scalar(k2, "u^4 + u^2"));
    REQUIRE(as.size() == 2);
    for (const auto& t : as) CHECK(t * t - t - parse_scalar(k2, "u^4 + u^2") == scalar_zero(k2));
    CHECK(quadratic_roots_in_field(one, one).empty());
    CHECK(quadratic_roots_in_field(one, parse_scalar(k2, "u^2")).empty());
    // Pure inseparable: t^2 = u^2 has the single root u.
    auto insep = quadratic_roots_in_field(scalar_zero(k2), parse_scalar(k2, "u^2"));
    REQUIRE(insep.size() == 1);
    CHECK(insep[0] == parse_scalar(k2, "u"));
}

TEST_CASE("declared variable names may contain carets") {
    Field k = make_ratfunc(2, {"u^2", "v^2"});
    Scalar a = parse_scalar(k, "u^2 + v^2");
    CHECK(scalar_to_string(a) == "u^2 + v^2");
    Scalar b = parse_scalar(k, "(u^2)^2");
    CHECK(scalar_to_string(b) == "u^2^2"); // printed exponent of the named variable
    CHECK_THROWS_AS(parse_scalar(k, "u"), ParseError);
}

TEST_CASE("parse/print round trip on random scalars") {
    std::mt19937_64 rng(12345);
    std::vector<Field> fields = {make_prime_field(5), make_finite_field(3, 2, {1, 0, 1}),
                                 make_rationals(), make_ratfunc(2, {"u", "v"}),
                                 make_ratfunc(7, {"s"})};
    for (const Field& f : fields)
        for (int i = 0; i < 40; ++i) {
            Scalar x = random_scalar(f, rng);
            if (i % 3 == 0) {
                Scalar d = random_scalar(f, rng);
                if (!d.is_zero()) x = x / d;
            }
            CHECK(parse_scalar(f, scalar_to_string(x)) == x);
        }
}

TEST_CASE("field enumeration and embeddings") {
    Field f8 = make_finite_field(2, 3);
    auto all = enumerate_field(f8);
    CHECK(all.size() == 8);
    // Nonzero elements satisfy x^7 = 1.
    for (const auto& x : all)
        if (!x.is_zero()) CHECK(x.pow(7) == scalar_one(f8));
    CHECK_THROWS_AS(enumerate_field(make_rationals()), InfiniteField);

    Field f9 = make_finite_field(3, 2, {1, 0, 1});
    Field f81 = make_finite_field(3, 4);
    FieldEmbedding emb = embed_finite_field(f9, f81);
    Scalar t = parse_scalar(f9, "t");
    Scalar img = emb(t);
    CHECK(img * img == -scalar_one(f81)); // image still squares to -1
    CHECK(emb(t + scalar_one(f9)) == img + scalar_one(f81));
    CHECK(emb(t * t) == img * img);
}

TEST_CASE("matrix algebra over Q") {
    Field q = make_rationals();
    SMat m = smat_zero(q, 2, 2);
    m.at(0, 0) = parse_scalar(q, "1");
    m.at(0, 1) = parse_scalar(q, "2");
    m.at(1, 0) = parse_scalar(q, "3");
    m.at(1, 1) = parse_scalar(q, "4");
    CHECK(smat_det(m) == parse_scalar(q, "-2"));
    SMat inv = smat_inverse(m);
    CHECK(inv.at(0, 0) == parse_scalar(q, "-2"));
    CHECK(inv.at(1, 0) == parse_scalar(q, "3/2"));
    CHECK(smat_mul(m, inv) == smat_identity(q, 2));

    SMat a = smat_zero(q, 2, 3);
    long long vals[2][3] = {{1, 2, 3}, {4, 5, 6}};
    for (size_t i = 0; i < 2; ++i)
        for (size_t j = 0; j < 3; ++j) a.at(i, j) = scalar_from_int(q, vals[i][j]);
    SMat ker = smat_kernel(a);
    REQUIRE(ker.cols == 1);
    CHECK(smat_is_zero(smat_mul(a, ker)));
    // Kernel vector is proportional to (1, -2, 1).
    Scalar c = ker.at(0, 0);
    CHECK(ker.at(1, 0) == c * parse_scalar(q, "-2"));
    CHECK(ker.at(2, 0) == c);

    SMat b = smat_zero(q, 2, 1);
    b.at(0, 0) = scalar_from_int(q, 1);
    b.at(1, 0) = scalar_from_int(q, 2);
    SMat sol = smat_solve(a, b);
    CHECK(smat_mul(a, sol) == b);

    // Inconsistent system: x + y = 1, x + y = 2.
    SMat bad = smat_zero(q, 2, 2);
    bad.at(0, 0) = bad.at(0, 1) = bad.at(1, 0) = bad.at(1, 1) = scalar_one(q);
    SMat rhs = smat_zero(q, 2, 1);
    rhs.at(0, 0) = scalar_from_int(q, 1);
    rhs.at(1, 0) = scalar_from_int(q, 2);
    CHECK_THROWS_AS(smat_solve(bad, rhs), Inconsistent);
}

TEST_CASE("matrix algebra over small fields, randomized properties") {
    std::mt19937_64 rng(777);
    for (const Field& f : {make_prime_field(5), make_finite_field(2, 2)}) {
        for (int trial = 0; trial < 25; ++trial) {
            size_t n = 1 + rng() % 4;
            SMat m = smat_zero(f, n, n);
            for (auto& v : m.a) v = random_scalar(f, rng);
            Scalar d = smat_det(m);
            if (d.is_zero()) {
                CHECK_THROWS_AS(smat_inverse(m), Inconsistent);
                CHECK(smat_rank(m) < n);
            } else {
                SMat inv = smat_inverse(m);
                CHECK(smat_mul(m, inv) == smat_identity(f, n));
                CHECK(smat_rank(m) == n);
            }
            // rank + kernel dimension = column count.
            SMat r = smat_zero(f, n, n + 1);
            for (auto& v : r.a) v = random_scalar(f, rng);
            CHECK(smat_rank(r) + smat_kernel(r).cols == n + 1);
        }
    }
}

TEST_CASE("rowspace comparisons") {
    Field f5 = make_prime_field(5);
    SMat x = smat_zero(f5, 2, 3);
    x.at(0, 0) = scalar_one(f5);
    x.at(1, 1) = scalar_one(f5);
    SMat y = smat_zero(f5, 1, 3);
    y.at(0, 0) = scalar_from_int(f5, 2);
    y.at(0, 1) = scalar_from_int(f5, 3);
    CHECK(smat_rowspace_contains(x, y));
    SMat z = smat_zero(f5, 1, 3);
    z.at(0, 2) = scalar_one(f5);
    CHECK(!smat_rowspace_contains(x, z));
    CHECK(smat_same_rowspace(x, x));
}
