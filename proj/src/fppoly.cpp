#include "tamecurve/fppoly.hpp"
#include "tamecurve/errors.hpp"
#include "tamecurve/int_util.hpp"

#include <numeric>

namespace tamecurve {

void fp_normalize(FpPoly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

FpPoly fp_add(const FpPoly& a, const FpPoly& b, uint64_t p) {
    FpPoly r(std::max(a.size(), b.size()), 0);
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i];
    for (size_t i = 0; i < b.size(); ++i) r[i] = mod_add(r[i], b[i], p);
    fp_normalize(r);
    return r;
}

FpPoly fp_neg(const FpPoly& a, uint64_t p) {
    FpPoly r(a);
    for (auto& c : r) c = mod_neg(c, p);
    return r;
}

FpPoly fp_sub(const FpPoly& a, const FpPoly& b, uint64_t p) {
    return fp_add(a, fp_neg(b, p), p);
}

FpPoly fp_mul(const FpPoly& a, const FpPoly& b, uint64_t p) {
    if (a.empty() || b.empty()) return {};
    FpPoly r(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j)
            r[i + j] = mod_add(r[i + j], mod_mul(a[i], b[j], p), p);
    fp_normalize(r);
    return r;
}

FpPoly fp_scale(const FpPoly& a, uint64_t c, uint64_t p) {
    FpPoly r(a);
    for (auto& x : r) x = mod_mul(x, c, p);
    fp_normalize(r);
    return r;
}

std::pair<FpPoly, FpPoly> fp_divmod(const FpPoly& a, const FpPoly& b, uint64_t p) {
    if (b.empty()) throw DivisionByZero("polynomial division by zero");
    FpPoly rem(a), quot;
    if (fp_deg(rem) >= fp_deg(b)) quot.assign(rem.size() - b.size() + 1, 0);
    uint64_t lead_inv = mod_inv(b.back(), p);
    while (fp_deg(rem) >= fp_deg(b)) {
        size_t shift = rem.size() - b.size();
        uint64_t c = mod_mul(rem.back(), lead_inv, p);
        quot[shift] = c;
        for (size_t i = 0; i < b.size(); ++i)
            rem[shift + i] = mod_sub(rem[shift + i], mod_mul(c, b[i], p), p);
        fp_normalize(rem);
    }
    fp_normalize(quot);
    return {quot, rem};
}

FpPoly fp_mod(const FpPoly& a, const FpPoly& b, uint64_t p) {
    return fp_divmod(a, b, p).second;
}

FpPoly fp_div_exact(const FpPoly& a, const FpPoly& b, uint64_t p) {
    auto [q, r] = fp_divmod(a, b, p);
    if (!r.empty()) throw Inconsistent("inexact polynomial division");
    return q;
}

FpPoly fp_monic(const FpPoly& a, uint64_t p) {
    if (a.empty()) return a;
    return fp_scale(a, mod_inv(a.back(), p), p);
}

FpPoly fp_gcd(FpPoly a, FpPoly b, uint64_t p) {
    while (!b.empty()) {
        FpPoly r = fp_mod(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    return fp_monic(a, p);
}

FpExtGcd fp_ext_gcd(const FpPoly& a, const FpPoly& b, uint64_t p) {
    FpPoly r0 = a, r1 = b;
    FpPoly u0 = {1}, u1, v0, v1 = {1};
    fp_normalize(r0);
    fp_normalize(r1);
    while (!r1.empty()) {
        auto [q, r] = fp_divmod(r0, r1, p);
        r0 = std::move(r1);
        r1 = std::move(r);
        FpPoly u2 = fp_sub(u0, fp_mul(q, u1, p), p);
        u0 = std::move(u1);
        u1 = std::move(u2);
        FpPoly v2 = fp_sub(v0, fp_mul(q, v1, p), p);
        v0 = std::move(v1);
        v1 = std::move(v2);
    }
    if (!r0.empty()) {
        uint64_t c = mod_inv(r0.back(), p);
        r0 = fp_scale(r0, c, p);
        u0 = fp_scale(u0, c, p);
        v0 = fp_scale(v0, c, p);
    }
    return {r0, u0, v0};
}

FpPoly fp_derivative(const FpPoly& a, uint64_t p) {
    if (a.size() <= 1) return {};
    FpPoly r(a.size() - 1);
    for (size_t i = 1; i < a.size(); ++i) r[i - 1] = mod_mul(a[i], i % p, p);
    fp_normalize(r);
    return r;
}

uint64_t fp_eval(const FpPoly& a, uint64_t x, uint64_t p) {
    uint64_t r = 0;
    for (size_t i = a.size(); i-- > 0;) r = mod_add(mod_mul(r, x, p), a[i], p);
    return r;
}

FpPoly fp_powmod(FpPoly base, uint64_t exp, const FpPoly& mod, uint64_t p) {
    FpPoly r = {1};
    base = fp_mod(base, mod, p);
    while (exp) {
        if (exp & 1) r = fp_mod(fp_mul(r, base, p), mod, p);
        base = fp_mod(fp_mul(base, base, p), mod, p);
        exp >>= 1;
    }
    return r;
}

bool fp_irreducible(const FpPoly& a, uint64_t p) {
    int d = fp_deg(a);
    if (d <= 0) return false;
    if (d == 1) return true;
    // Rabin: x^{p^d} = x mod a, and gcd(x^{p^{d/q}} - x, a) = 1 for prime q | d.
    FpPoly x = {0, 1};
    auto frob_iter = [&](unsigned k) {
        // x^{p^k} mod a by repeated p-th powering.
        FpPoly t = x;
        for (unsigned i = 0; i < k; ++i) t = fp_powmod(t, p, a, p);
        return t;
    };
    FpPoly xd = frob_iter(static_cast<unsigned>(d));
    if (fp_sub(xd, x, p) != FpPoly{}) return false;
    for (unsigned q = 2; q <= static_cast<unsigned>(d); ++q) {
        if (d % q) continue;
        bool prime = true;
        for (unsigned r = 2; r * r <= q; ++r)
            if (q % r == 0) prime = false;
        if (!prime) continue;
        FpPoly t = fp_sub(frob_iter(static_cast<unsigned>(d) / q), x, p);
        if (fp_deg(fp_gcd(t, a, p)) != 0) return false;
    }
    return true;
}

FpPoly fp_find_irreducible(unsigned d, uint64_t p) {
    // Odometer over the p^d monic candidates; tiny sizes only.
    FpPoly a(d + 1, 0);
    a[d] = 1;
    while (true) {
        if (fp_irreducible(a, p)) return a;
        size_t i = 0;
        while (i < d && a[i] == p - 1) a[i++] = 0;
        if (i == d) throw Inconsistent("no irreducible found (unreachable)");
        ++a[i];
    }
}

std::string fp_to_string(const FpPoly& a, const std::string& var) {
    if (a.empty()) return "0";
    std::string s;
    for (size_t i = a.size(); i-- > 0;) {
        if (a[i] == 0) continue;
        if (!s.empty()) s += " + ";
        if (i == 0 || a[i] != 1) s += std::to_string(a[i]);
        if (i > 0) {
            if (a[i] != 1) s += "*";
            s += var;
            if (i > 1) s += "^" + std::to_string(i);
        }
    }
    return s;
}

} // namespace tamecurve
