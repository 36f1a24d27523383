// Exact base-field arithmetic behind a single Scalar value type. Supported
// fields: F_p (p < 2^31), F_{p^m} given by a monic irreducible modulus, Q,
// and rational function fields F_p(v0) / F_p(v0, v1). Every scalar is kept
// in a canonical form so equality is representational.
#pragma once

#include "tamecurve/errors.hpp"
#include "tamecurve/fppoly.hpp"
#include "tamecurve/int_util.hpp"
#include "tamecurve/mpoly.hpp"

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <random>
#include <string>
#include <variant>
#include <vector>

namespace tamecurve {

enum class FieldKind { prime, finite, rationals, ratfunc };

struct FieldData {
    FieldKind kind;
    uint64_t p = 0;       // characteristic; 0 for Q
    unsigned ext_deg = 1; // finite fields: m with q = p^m
    FpPoly modulus;       // finite fields: monic irreducible, degree m
    std::string gen_name = "t";    // finite fields: printed generator name
    std::vector<std::string> vars; // ratfunc: declared variable names (1 or 2)

    std::string name() const;
};

using Field = std::shared_ptr<const FieldData>;

Field make_prime_field(uint64_t p);
// modulus empty means "pick one"; gen is the printed generator name.
Field make_finite_field(uint64_t p, unsigned m, FpPoly modulus = {},
                        std::string gen = "t");
Field make_rationals();
Field make_ratfunc(uint64_t p, std::vector<std::string> vars);

bool same_field(const Field& a, const Field& b);
uint64_t field_char(const Field& f);
// p^m for prime/finite fields, nullopt otherwise.
std::optional<uint64_t> field_size(const Field& f);

// Canonical reduced fraction of bivariate polynomials: den has lex-leading
// coefficient 1, gcd(num, den) = 1, zero is 0/1.
struct Frac {
    MPoly num, den;
    bool operator==(const Frac&) const = default;
};
Frac frac_make(const MPoly& num, const MPoly& den);

class Scalar {
public:
    Scalar() = default; // unusable placeholder (no field)
    Scalar(Field f, std::variant<uint64_t, FpPoly, BigRat, Frac> v)
        : field_(std::move(f)), v_(std::move(v)) {}

    const Field& field() const { return field_; }
    bool valid() const { return field_ != nullptr; }

    bool is_zero() const;
    bool is_one() const;
    bool operator==(const Scalar& o) const;

    Scalar operator+(const Scalar& o) const;
    Scalar operator-(const Scalar& o) const;
    Scalar operator*(const Scalar& o) const;
    Scalar operator/(const Scalar& o) const;
    Scalar operator-() const;
    Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
    Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
    Scalar& operator*=(const Scalar& o) { return *this = *this * o; }

    Scalar inv() const;
    Scalar pow(long long e) const;

    // Raw payload accessors (checked).
    uint64_t as_prime() const;
    const FpPoly& as_finite() const;
    const BigRat& as_rat() const;
    const Frac& as_frac() const;

private:
    Field field_;
    std::variant<uint64_t, FpPoly, BigRat, Frac> v_;
};

Scalar scalar_zero(const Field& f);
Scalar scalar_one(const Field& f);
Scalar scalar_from_int(const Field& f, long long n);
Scalar scalar_from_rat(const Field& f, const BigRat& q); // Q only
// Finite field element from generator-power coordinates (low to high).
Scalar scalar_from_coords(const Field& f, const FpPoly& coords);
// Ratfunc scalar from a polynomial in the declared variables.
Scalar scalar_from_poly(const Field& f, const MPoly& num);

std::string scalar_to_string(const Scalar& a);

// Recursive-descent parser for the documented scalar grammar. Declared
// variable names (ratfunc vars, finite-field generator) may contain '^' and
// are matched longest-first.
Scalar parse_scalar(const Field& f, const std::string& text);

// x -> x^p (characteristic p fields only).
Scalar frobenius(const Scalar& a);

// Square root if one exists in the field. Complete for prime/finite fields,
// Q, char-2 ratfunc, and odd-char univariate ratfunc; throws
// UnsupportedField for odd-char bivariate ratfunc.
std::optional<Scalar> scalar_sqrt(const Scalar& a);

// All roots in the base field of t^2 - b*t - c. Complete for the same
// field/shape combinations as scalar_sqrt; char-2 Artin-Schreier equations
// over function fields are decided only for constant right-hand sides.
std::vector<Scalar> quadratic_roots_in_field(const Scalar& b, const Scalar& c);

// t^2 - b*t - c irreducible over the base field (no root).
bool quadratic_irreducible(const Scalar& b, const Scalar& c);

// Characteristic-2 fields are k^2-vector spaces with a monomial basis
// (1 for perfect fields; 1, u / 1, u, v, uv for function fields). Every a
// decomposes uniquely as a = sum d_i^2 * basis_i; this powers the linear
// solves behind characteristic-2 square roots in towers.
std::vector<Scalar> char2_square_basis(const Field& f);
std::vector<Scalar> char2_square_decompose(const Scalar& a);

// Uniform-ish random scalar for property tests and randomized searches.
// `size` bounds numerator/denominator magnitude or polynomial degree.
Scalar random_scalar(const Field& f, std::mt19937_64& rng, unsigned size = 3);

// Enumeration of a finite field; throws InfiniteField otherwise.
class FieldEnumerator {
public:
    explicit FieldEnumerator(Field f);
    bool next(Scalar& out); // false when exhausted
    uint64_t size() const { return total_; }

private:
    Field f_;
    uint64_t total_, i_ = 0;
};
std::vector<Scalar> enumerate_field(const Field& f, uint64_t limit = 1u << 20);

// k-linear embedding of a finite field into an extension finite field with
// compatible characteristic, sending generator to a root of the small
// modulus. Deterministic (first root in enumeration order).
struct FieldEmbedding {
    Field src, dst;
    std::vector<Scalar> gen_power_images; // images of 1, g, g^2, ...
    Scalar operator()(const Scalar& a) const;
};
FieldEmbedding embed_finite_field(const Field& src, const Field& dst);

} // namespace tamecurve
