// Dense univariate polynomial arithmetic over a prime field F_p with
// machine-word coefficients. Used inside finite-field elements and as the
// coefficient ring for bivariate gcd computations. Polynomials are
// coefficient vectors, index = degree, normalized so back() != 0.
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace tamecurve {

using FpPoly = std::vector<uint64_t>;

void fp_normalize(FpPoly& a);
inline int fp_deg(const FpPoly& a) { return static_cast<int>(a.size()) - 1; }
inline bool fp_is_zero(const FpPoly& a) { return a.empty(); }

FpPoly fp_add(const FpPoly& a, const FpPoly& b, uint64_t p);
FpPoly fp_sub(const FpPoly& a, const FpPoly& b, uint64_t p);
FpPoly fp_neg(const FpPoly& a, uint64_t p);
FpPoly fp_mul(const FpPoly& a, const FpPoly& b, uint64_t p);
FpPoly fp_scale(const FpPoly& a, uint64_t c, uint64_t p);

// Division with remainder by a nonzero divisor.
std::pair<FpPoly, FpPoly> fp_divmod(const FpPoly& a, const FpPoly& b, uint64_t p);
FpPoly fp_mod(const FpPoly& a, const FpPoly& b, uint64_t p);
FpPoly fp_div_exact(const FpPoly& a, const FpPoly& b, uint64_t p);

FpPoly fp_gcd(FpPoly a, FpPoly b, uint64_t p); // monic (or zero)
// g = gcd(a, b) together with u, v such that u*a + v*b = g.
struct FpExtGcd {
    FpPoly g, u, v;
};
FpExtGcd fp_ext_gcd(const FpPoly& a, const FpPoly& b, uint64_t p);

FpPoly fp_monic(const FpPoly& a, uint64_t p);
FpPoly fp_derivative(const FpPoly& a, uint64_t p);
uint64_t fp_eval(const FpPoly& a, uint64_t x, uint64_t p);
FpPoly fp_powmod(FpPoly base, uint64_t exp, const FpPoly& mod, uint64_t p);

// Monic irreducibility over F_p via the Rabin test (x^{p^d} fixed-point
// criteria); sizes here are tiny so no sparse modular tricks are needed.
bool fp_irreducible(const FpPoly& a, uint64_t p);

// Some monic irreducible of degree d over F_p (exists for every d >= 1).
FpPoly fp_find_irreducible(unsigned d, uint64_t p);

std::string fp_to_string(const FpPoly& a, const std::string& var);

} // namespace tamecurve
