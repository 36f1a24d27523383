// Arithmetic in a quadratic field extension K = k[x]/(x^2 - c1*x - c0),
// with square roots and quadratic root-finding inside K. This is the inner
// layer of the degree-4 towers: roots of quadratics over K reduce to square
// roots in k, which keeps the tower solvers non-circular.
#pragma once

#include "tamecurve/field.hpp"

#include <optional>
#include <vector>

namespace tamecurve {

struct QuadExt {
    Field k;
    Scalar c1, c0; // x^2 = c1*x + c0; irreducibility is the caller's duty

    bool operator==(const QuadExt&) const = default;
};

// Element a + b*x of K.
struct QE {
    Scalar a, b;
    bool operator==(const QE&) const = default;
};

QE qe_zero(const QuadExt& K);
QE qe_one(const QuadExt& K);
QE qe_x(const QuadExt& K);
QE qe_scalar(const QuadExt& K, const Scalar& a);
bool qe_is_zero(const QE& v);
bool qe_in_base(const QE& v); // b = 0

QE qe_add(const QuadExt& K, const QE& u, const QE& v);
QE qe_sub(const QuadExt& K, const QE& u, const QE& v);
QE qe_neg(const QuadExt& K, const QE& u);
QE qe_mul(const QuadExt& K, const QE& u, const QE& v);
QE qe_inv(const QuadExt& K, const QE& u); // throws DivisionByZero
QE qe_pow(const QuadExt& K, QE u, long long e);

Scalar qe_norm(const QuadExt& K, const QE& u);  // u * conj(u)
Scalar qe_trace(const QuadExt& K, const QE& u); // u + conj(u)
QE qe_conj(const QuadExt& K, const QE& u);      // x -> c1 - x

// All square roots of v in K. Complete for: finite k; characteristic != 2;
// characteristic 2 (via k^2-descent). May return 1 root (char 2) or 0/2.
std::vector<QE> qe_sqrt(const QuadExt& K, const QE& v);

// All roots in K of t^2 - B*t - C with B, C in K. Complete for finite k,
// char != 2, and char 2 with B = 0 or Artin-Schreier right-hand sides that
// are polynomial after the standard substitution; otherwise throws
// UnsupportedField.
std::vector<QE> qe_quadratic_roots(const QuadExt& K, const QE& B, const QE& C);

std::string qe_to_string(const QuadExt& K, const QE& v, const std::string& xname = "x");

} // namespace tamecurve
