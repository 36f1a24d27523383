#include "tamecurve/mpoly.hpp"
#include "tamecurve/errors.hpp"
#include "tamecurve/int_util.hpp"

#include <algorithm>

namespace tamecurve {

uint32_t MPoly::deg(int var) const {
    uint32_t d = 0;
    for (const auto& [e, c] : t) d = std::max(d, var == 0 ? e.a : e.b);
    return d;
}

Exp2 MPoly::lead_exp() const {
    if (t.empty()) throw NotDefined("leading exponent of zero polynomial");
    return t.rbegin()->first;
}

uint64_t MPoly::lead_coeff() const {
    if (t.empty()) throw NotDefined("leading coefficient of zero polynomial");
    return t.rbegin()->second;
}

MPoly mp_const(uint64_t p, uint64_t c) {
    MPoly r;
    r.p = p;
    c %= p;
    if (c) r.t[{0, 0}] = c;
    return r;
}

MPoly mp_var(uint64_t p, int var) {
    MPoly r;
    r.p = p;
    r.t[var == 0 ? Exp2{1, 0} : Exp2{0, 1}] = 1;
    return r;
}

MPoly mp_monomial(uint64_t p, Exp2 e, uint64_t c) {
    MPoly r;
    r.p = p;
    c %= p;
    if (c) r.t[e] = c;
    return r;
}

MPoly mp_add(const MPoly& a, const MPoly& b) {
    MPoly r(a);
    for (const auto& [e, c] : b.t) {
        uint64_t v = mod_add(r.t.count(e) ? r.t[e] : 0, c, a.p);
        if (v)
            r.t[e] = v;
        else
            r.t.erase(e);
    }
    return r;
}

MPoly mp_neg(const MPoly& a) {
    MPoly r(a);
    for (auto& [e, c] : r.t) c = mod_neg(c, a.p);
    return r;
}

MPoly mp_sub(const MPoly& a, const MPoly& b) { return mp_add(a, mp_neg(b)); }

MPoly mp_mul(const MPoly& a, const MPoly& b) {
    MPoly r;
    r.p = a.p;
    for (const auto& [ea, ca] : a.t)
        for (const auto& [eb, cb] : b.t) {
            Exp2 e{ea.a + eb.a, ea.b + eb.b};
            uint64_t v = mod_add(r.t.count(e) ? r.t[e] : 0, mod_mul(ca, cb, a.p), a.p);
            if (v)
                r.t[e] = v;
            else
                r.t.erase(e);
        }
    return r;
}

MPoly mp_scale(const MPoly& a, uint64_t c) {
    MPoly r;
    r.p = a.p;
    c %= a.p;
    if (!c) return r;
    for (const auto& [e, v] : a.t) r.t[e] = mod_mul(v, c, a.p);
    return r;
}

bool mp_equal(const MPoly& a, const MPoly& b) { return a.t == b.t; }

MPoly mp_div_exact(const MPoly& a, const MPoly& b) {
    if (b.is_zero()) throw DivisionByZero("polynomial division by zero");
    MPoly rem(a), quot;
    quot.p = a.p;
    Exp2 lb = b.lead_exp();
    uint64_t linv = mod_inv(b.lead_coeff(), a.p);
    while (!rem.is_zero()) {
        Exp2 la = rem.lead_exp();
        if (la.a < lb.a || la.b < lb.b)
            throw Inconsistent("inexact polynomial division");
        MPoly m = mp_monomial(a.p, {la.a - lb.a, la.b - lb.b},
                              mod_mul(rem.lead_coeff(), linv, a.p));
        quot = mp_add(quot, m);
        rem = mp_sub(rem, mp_mul(m, b));
    }
    return quot;
}

FpPoly mp_to_univariate(const MPoly& a, int var) {
    FpPoly f;
    for (const auto& [e, c] : a.t) {
        uint32_t other = var == 0 ? e.b : e.a;
        if (other != 0) throw NotDefined("polynomial is not univariate in requested variable");
        uint32_t d = var == 0 ? e.a : e.b;
        if (f.size() <= d) f.resize(d + 1, 0);
        f[d] = c;
    }
    fp_normalize(f);
    return f;
}

MPoly mp_from_univariate(uint64_t p, const FpPoly& f, int var) {
    MPoly r;
    r.p = p;
    for (size_t i = 0; i < f.size(); ++i)
        if (f[i]) r.t[var == 0 ? Exp2{static_cast<uint32_t>(i), 0}
                               : Exp2{0, static_cast<uint32_t>(i)}] = f[i];
    return r;
}

namespace {

// View of a bivariate polynomial as a univariate in var0 with FpPoly
// coefficients in var1.
std::vector<FpPoly> to_tower(const MPoly& a) {
    std::vector<FpPoly> c(a.deg(0) + 1);
    for (const auto& [e, v] : a.t) {
        if (c[e.a].size() <= e.b) c[e.a].resize(e.b + 1, 0);
        c[e.a][e.b] = v;
    }
    for (auto& f : c) fp_normalize(f);
    while (!c.empty() && c.back().empty()) c.pop_back();
    return c;
}

MPoly from_tower(uint64_t p, const std::vector<FpPoly>& c) {
    MPoly r;
    r.p = p;
    for (size_t i = 0; i < c.size(); ++i)
        for (size_t j = 0; j < c[i].size(); ++j)
            if (c[i][j]) r.t[{static_cast<uint32_t>(i), static_cast<uint32_t>(j)}] = c[i][j];
    return r;
}

FpPoly tower_content(const std::vector<FpPoly>& c, uint64_t p) {
    FpPoly g;
    for (const auto& f : c) g = fp_gcd(g, f, p);
    return g;
}

std::vector<FpPoly> tower_div_content(const std::vector<FpPoly>& c, const FpPoly& g,
                                      uint64_t p) {
    std::vector<FpPoly> r(c.size());
    for (size_t i = 0; i < c.size(); ++i)
        r[i] = c[i].empty() ? FpPoly{} : fp_div_exact(c[i], g, p);
    return r;
}

// Pseudo-remainder of a by b as univariates in var0 over F_p[var1].
std::vector<FpPoly> tower_prem(std::vector<FpPoly> a, const std::vector<FpPoly>& b,
                               uint64_t p) {
    const FpPoly& lb = b.back();
    while (a.size() >= b.size() && !a.empty()) {
        size_t shift = a.size() - b.size();
        FpPoly la = a.back();
        // a <- lb * a - la * x^shift * b ; kills the leading term.
        for (auto& f : a) f = fp_mul(f, lb, p);
        for (size_t i = 0; i < b.size(); ++i)
            a[shift + i] = fp_sub(a[shift + i], fp_mul(la, b[i], p), p);
        while (!a.empty() && a.back().empty()) a.pop_back();
    }
    return a;
}

MPoly normalize_lead(const MPoly& a) {
    if (a.is_zero()) return a;
    return mp_scale(a, mod_inv(a.lead_coeff(), a.p));
}

} // namespace

MPoly mp_gcd(const MPoly& a, const MPoly& b) {
    uint64_t p = a.p ? a.p : b.p;
    if (a.is_zero()) return normalize_lead(b);
    if (b.is_zero()) return normalize_lead(a);
    if (a.deg(0) == 0 && b.deg(0) == 0)
        return normalize_lead(mp_from_univariate(
            p, fp_gcd(mp_to_univariate(a, 1), mp_to_univariate(b, 1), p), 1));
    if (a.deg(1) == 0 && b.deg(1) == 0)
        return normalize_lead(mp_from_univariate(
            p, fp_gcd(mp_to_univariate(a, 0), mp_to_univariate(b, 0), p), 0));
    // Primitive PRS in var0 with coefficients in F_p[var1].
    auto ta = to_tower(a), tb = to_tower(b);
    FpPoly ca = tower_content(ta, p), cb = tower_content(tb, p);
    FpPoly cg = fp_gcd(ca, cb, p);
    auto r0 = tower_div_content(ta, ca, p);
    auto r1 = tower_div_content(tb, cb, p);
    if (r0.size() < r1.size()) std::swap(r0, r1);
    while (!r1.empty()) {
        auto r2 = tower_prem(r0, r1, p);
        if (!r2.empty()) {
            FpPoly c = tower_content(r2, p);
            r2 = tower_div_content(r2, c, p);
        }
        r0 = std::move(r1);
        r1 = std::move(r2);
    }
    MPoly g = mp_mul(from_tower(p, r0), mp_from_univariate(p, cg, 1));
    return normalize_lead(g);
}

std::string mp_to_string(const MPoly& a, const std::vector<std::string>& vars) {
    if (a.is_zero()) return "0";
    std::string s;
    // Print highest lex term first.
    for (auto it = a.t.rbegin(); it != a.t.rend(); ++it) {
        const auto& [e, c] = *it;
        if (!s.empty()) s += " + ";
        std::string mono;
        auto append_var = [&](uint32_t exp, int var) {
            if (exp == 0) return;
            if (!mono.empty()) mono += "*";
            mono += vars.at(var);
            if (exp > 1) mono += "^" + std::to_string(exp);
        };
        append_var(e.a, 0);
        append_var(e.b, 1);
        if (mono.empty())
            s += std::to_string(c);
        else if (c == 1)
            s += mono;
        else
            s += std::to_string(c) + "*" + mono;
    }
    return s;
}

} // namespace tamecurve
