// The 4-dimensional k-algebras F behind the (1,4) bimodules: commutative
// quartic towers k(x, y), quaternion algebras in characteristic != 2, and
// the characteristic-2 quaternion shape. Multiplication tables are derived
// from the defining rewriting rules and associativity is verified on all
// basis triples at construction.
#pragma once

#include "tamecurve/field.hpp"
#include "tamecurve/matrix.hpp"
#include "tamecurve/quadext.hpp"

#include <array>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace tamecurve {

enum class BimoduleVariant { comm_ext, skew_ext, quat_char2 };

std::string_view variant_name(BimoduleVariant v);

// x^2 = c1*x + c0, y^2 = d1*y + a0 + a1*x. The skew variants pin c1, d1, a1
// to their defining values (skew_ext: 0,0,0; quat_char2: 1,0,0).
struct TowerParams {
    Scalar c1, c0, d1, a0, a1;
};

class Algebra {
public:
    Field k;
    BimoduleVariant variant;
    TowerParams par;
    bool commutative;
    // table[i][j] = coordinates of e_i * e_j in the basis (1, x, y, xy).
    std::array<std::array<std::array<Scalar, 4>, 4>, 4> table;

    std::string name() const;
    static constexpr std::array<const char*, 4> basis_names = {"1", "x", "y", "xy"};
};

using AlgebraRef = std::shared_ptr<const Algebra>;

// Commutative quartic tower; checks both irreducibility invariants.
AlgebraRef make_tower(const Field& k, const Scalar& c1, const Scalar& c0,
                      const Scalar& d1, const Scalar& a0, const Scalar& a1);
// Quaternions (a, b / k), char != 2: x^2 = a, y^2 = b, yx = -xy.
AlgebraRef make_quaternion(const Field& k, const Scalar& a, const Scalar& b);
// Characteristic 2: x^2 = c0 + x, y^2 = a0 != 0, xy = y + yx.
AlgebraRef make_quaternion_char2(const Field& k, const Scalar& c0, const Scalar& a0);

// The quadratic inner layer K = k(x) of a tower.
QuadExt inner_quadratic(const Algebra& A);

struct AlgElem {
    AlgebraRef A;
    std::vector<Scalar> c; // 4 coordinates over k

    bool is_zero() const;
    bool operator==(const AlgElem& o) const;
    AlgElem operator+(const AlgElem& o) const;
    AlgElem operator-(const AlgElem& o) const;
    AlgElem operator*(const AlgElem& o) const;
    AlgElem operator-() const;
};

AlgElem alg_zero(const AlgebraRef& A);
AlgElem alg_one(const AlgebraRef& A);
AlgElem alg_basis(const AlgebraRef& A, size_t i);
AlgElem alg_from_scalar(const AlgebraRef& A, const Scalar& s);
AlgElem alg_from_coords(const AlgebraRef& A, std::vector<Scalar> coords);
AlgElem alg_scale(const Scalar& s, const AlgElem& v);
bool alg_in_base(const AlgElem& v); // lies in k*1
// Matrix of left multiplication b -> a*b on coordinate columns.
SMat left_mult_matrix(const AlgElem& a);
SMat right_mult_matrix(const AlgElem& a);
std::optional<AlgElem> alg_inv(const AlgElem& a); // nullopt for non-units
std::string alg_to_string(const AlgElem& a);
AlgElem random_alg_elem(const AlgebraRef& A, std::mt19937_64& rng, unsigned size = 3);
// All elements when k is finite (guarded); throws InfiniteField otherwise.
std::vector<AlgElem> enumerate_algebra(const AlgebraRef& A, uint64_t limit = 1u << 20);

// Square roots / quadratic roots inside a commutative tower. Complete for
// finite k, characteristic != 2, and characteristic 2 with scalar linear
// coefficient (via k^2-descent); throws UnsupportedField otherwise.
std::vector<AlgElem> alg_sqrt(const AlgElem& D);
// Roots of t^2 - B*t - C, B a base scalar, C any element.
std::vector<AlgElem> alg_quadratic_roots(const Scalar& B, const AlgElem& C);

struct DivisionVerdict {
    Tri verdict;
    std::string method;
    // A pair (u, v) of nonzero elements with u*v = 0 when verdict is "no".
    std::optional<std::pair<AlgElem, AlgElem>> zero_divisors;
};
DivisionVerdict is_division_algebra(const AlgebraRef& A, uint64_t search_bound = 10000,
                                    uint64_t seed = 1);

struct GaloisGroup {
    std::vector<SMat> elements; // 4x4 matrices over k, columns = basis images
    std::string structure;     // "trivial", "C2", "C4", "V4"
};
GaloisGroup galois_group(const AlgebraRef& A);
// The images of x and y under an automorphism matrix.
AlgElem automorphism_x_image(const AlgebraRef& A, const SMat& m);
AlgElem automorphism_y_image(const AlgebraRef& A, const SMat& m);
AlgElem apply_matrix(const AlgebraRef& A, const SMat& m, const AlgElem& v);

struct PrimitiveElementResult {
    Tri exists;
    std::optional<AlgElem> witness;
    std::string reason;
};
PrimitiveElementResult primitive_element_exists(const AlgebraRef& A);

struct QuadraticSubfield {
    AlgElem generator; // z with z^2 = t1*z + t0, z not in k
    Scalar t1, t0;
};
std::vector<QuadraticSubfield> intermediate_quadratic_fields(const AlgebraRef& A);

} // namespace tamecurve
