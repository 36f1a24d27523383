// Sparse polynomials in one or two variables over a prime field F_p,
// the numerator/denominator type for rational function field scalars.
// Terms are kept in lex order on exponent pairs (var0 before var1).
#pragma once

#include "tamecurve/fppoly.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace tamecurve {

struct Exp2 {
    uint32_t a = 0, b = 0; // exponents of var0, var1
    auto operator<=>(const Exp2&) const = default;
};

struct MPoly {
    uint64_t p = 0;
    std::map<Exp2, uint64_t> t; // nonzero coefficients only

    bool operator==(const MPoly&) const = default;

    bool is_zero() const { return t.empty(); }
    bool is_constant() const { return t.empty() || (t.size() == 1 && t.begin()->first == Exp2{}); }
    uint64_t constant_value() const { return t.empty() ? 0 : t.begin()->second; }
    uint32_t deg(int var) const; // -0 on zero polynomial; degree in one variable
    Exp2 lead_exp() const;       // lex-leading exponent (throws on zero)
    uint64_t lead_coeff() const;
};

MPoly mp_const(uint64_t p, uint64_t c);
MPoly mp_var(uint64_t p, int var); // the monomial var0 or var1
MPoly mp_monomial(uint64_t p, Exp2 e, uint64_t c);

MPoly mp_add(const MPoly& a, const MPoly& b);
MPoly mp_sub(const MPoly& a, const MPoly& b);
MPoly mp_neg(const MPoly& a);
MPoly mp_mul(const MPoly& a, const MPoly& b);
MPoly mp_scale(const MPoly& a, uint64_t c);
bool mp_equal(const MPoly& a, const MPoly& b);

// Exact division; throws Inconsistent if b does not divide a.
MPoly mp_div_exact(const MPoly& a, const MPoly& b);

// gcd, normalized so the lex-leading coefficient is 1 (zero if both zero).
MPoly mp_gcd(const MPoly& a, const MPoly& b);

// Substitute var -> value of the other generators? Only full evaluation at
// field points is needed; univariate view helpers cover the rest.
FpPoly mp_to_univariate(const MPoly& a, int var); // throws if other var occurs
MPoly mp_from_univariate(uint64_t p, const FpPoly& f, int var);

std::string mp_to_string(const MPoly& a, const std::vector<std::string>& vars);

} // namespace tamecurve
