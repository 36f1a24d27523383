#include "tamecurve/int_util.hpp"
#include "tamecurve/errors.hpp"

#include <boost/multiprecision/cpp_int.hpp>

namespace tamecurve {

uint64_t mod_pow(uint64_t base, uint64_t exp, uint64_t p) {
    uint64_t r = 1 % p;
    base %= p;
    while (exp) {
        if (exp & 1) r = mod_mul(r, base, p);
        base = mod_mul(base, base, p);
        exp >>= 1;
    }
    return r;
}

uint64_t mod_inv(uint64_t a, uint64_t p) {
    a %= p;
    if (a == 0) throw DivisionByZero("inverse of 0 mod " + std::to_string(p));
    // Extended Euclid on signed words; p < 2^31 keeps everything in range.
    int64_t t = 0, new_t = 1;
    int64_t r = static_cast<int64_t>(p), new_r = static_cast<int64_t>(a);
    while (new_r != 0) {
        int64_t q = r / new_r;
        t -= q * new_t;
        std::swap(t, new_t);
        r -= q * new_r;
        std::swap(r, new_r);
    }
    if (r != 1) throw DivisionByZero("non-unit mod " + std::to_string(p));
    if (t < 0) t += static_cast<int64_t>(p);
    return static_cast<uint64_t>(t);
}

uint64_t mod_reduce(const BigInt& a, uint64_t p) {
    BigInt r = a % BigInt(p);
    if (r < 0) r += p;
    return r.convert_to<uint64_t>();
}

std::optional<uint64_t> mod_sqrt(uint64_t a, uint64_t p) {
    a %= p;
    if (a == 0) return 0;
    if (p == 2) return a;
    if (mod_pow(a, (p - 1) / 2, p) != 1) return std::nullopt;
    if (p % 4 == 3) return mod_pow(a, (p + 1) / 4, p);
    // Tonelli-Shanks: p - 1 = q * 2^s with q odd.
    uint64_t q = p - 1, s = 0;
    while (q % 2 == 0) { q /= 2; ++s; }
    uint64_t z = 2;
    while (mod_pow(z, (p - 1) / 2, p) == 1) ++z;
    uint64_t m = s, c = mod_pow(z, q, p);
    uint64_t t = mod_pow(a, q, p), r = mod_pow(a, (q + 1) / 2, p);
    while (t != 1) {
        uint64_t i = 0, tt = t;
        while (tt != 1) { tt = mod_mul(tt, tt, p); ++i; }
        uint64_t b = mod_pow(c, uint64_t(1) << (m - i - 1), p);
        m = i;
        c = mod_mul(b, b, p);
        t = mod_mul(t, c, p);
        r = mod_mul(r, b, p);
    }
    return r;
}

int legendre(const BigInt& a, const BigInt& p) {
    BigInt r = a % p;
    if (r < 0) r += p;
    if (r == 0) return 0;
    uint64_t pp = p.convert_to<uint64_t>();
    uint64_t v = mod_pow(r.convert_to<uint64_t>(), (pp - 1) / 2, pp);
    return v == 1 ? 1 : -1;
}

Factorization factor_trial(BigInt n, uint64_t bound) {
    Factorization f;
    if (n < 0) n = -n;
    if (n == 0) { f.cofactor = 0; return f; }
    auto push = [&](const BigInt& p) {
        unsigned e = 0;
        while (n % p == 0) { n /= p; ++e; }
        if (e) f.primes.emplace_back(p, e);
    };
    push(2);
    push(3);
    for (BigInt d = 5; d * d <= n && d <= bound; d += 6) {
        push(d);
        push(d + 2);
    }
    if (n > 1) {
        // n is prime if no divisor up to sqrt(n) was missed by the bound.
        BigInt b(bound);
        if (b * b >= n)
            f.primes.emplace_back(n, 1);
        else
            f.cofactor = n;
    }
    return f;
}

std::optional<BigInt> exact_sqrt(const BigInt& n) {
    if (n < 0) return std::nullopt;
    BigInt r = boost::multiprecision::sqrt(n);
    if (r * r == n) return r;
    return std::nullopt;
}

bool is_perfect_square(const BigInt& n) { return exact_sqrt(n).has_value(); }

namespace {

// Writes x = p^e * u with u coprime to p; returns e.
int strip_valuation(BigInt& x, const BigInt& p) {
    int e = 0;
    while (x % p == 0) { x /= p; ++e; }
    return e;
}

int hilbert_symbol_int(BigInt a, BigInt b, const BigInt& p) {
    if (a == 0 || b == 0) throw NotDefined("hilbert symbol needs nonzero arguments");
    if (p == 0) // real place: -1 iff both negative
        return (a < 0 && b < 0) ? -1 : 1;
    if (p == 2) {
        int alpha = strip_valuation(a, 2), beta = strip_valuation(b, 2);
        auto eps = [](const BigInt& u) { return mod_reduce(u, 8) % 8; };
        uint64_t ua = eps(a), ub = eps(b);
        // (2-adic) formula: (-1)^{e(a)e(b) + alpha*w(b) + beta*w(a)} where
        // e(u) = (u-1)/2 mod 2 and w(u) = (u^2-1)/8 mod 2 on odd units.
        auto e2 = [](uint64_t u) { return (u - 1) / 2 % 2; };
        auto w2 = [](uint64_t u) { return (u * u - 1) / 8 % 2; };
        unsigned s = e2(ua) * e2(ub) + unsigned(alpha % 2) * w2(ub) + unsigned(beta % 2) * w2(ua);
        return s % 2 ? -1 : 1;
    }
    int alpha = strip_valuation(a, p), beta = strip_valuation(b, p);
    // (a,b)_p = (-1)^{alpha*beta*e(p)} (u|p)^beta (v|p)^alpha for odd p,
    // u, v the unit parts.
    int s = 1;
    if ((alpha % 2) && (beta % 2) && mod_reduce(p, 4) == 3) s = -s;
    if (beta % 2) s *= legendre(a, p);
    if (alpha % 2) s *= legendre(b, p);
    return s;
}

} // namespace

int hilbert_symbol(const BigRat& a, const BigRat& b, const BigInt& p) {
    // (a,b) depends on a, b only mod squares; clear denominators.
    BigRat aa(a), bb(b);
    BigInt an = numerator(aa) * denominator(aa);
    BigInt bn = numerator(bb) * denominator(bb);
    return hilbert_symbol_int(an, bn, p);
}

std::optional<std::vector<BigInt>> hilbert_places(const BigRat& a, const BigRat& b,
                                                  uint64_t bound) {
    BigRat aa(a), bb(b);
    BigInt an = numerator(aa) * denominator(aa);
    BigInt bn = numerator(bb) * denominator(bb);
    Factorization fa = factor_trial(an, bound), fb = factor_trial(bn, bound);
    if (!fa.complete() || !fb.complete()) return std::nullopt;
    std::vector<BigInt> places{0, 2};
    auto add = [&](const Factorization& f) {
        for (const auto& [q, e] : f.primes)
            if (q != 2 && std::find(places.begin(), places.end(), q) == places.end())
                places.push_back(q);
    };
    add(fa);
    add(fb);
    return places;
}

} // namespace tamecurve
