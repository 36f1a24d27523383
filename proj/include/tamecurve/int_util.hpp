// Exact integer helpers: modular arithmetic on machine words, bounded
// factorization, quadratic residues, and Hilbert symbols over Q.
#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <optional>
#include <vector>

namespace tamecurve {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

// All mod-p arithmetic below assumes p < 2^31 so products fit in 64 bits.
inline uint64_t mod_add(uint64_t a, uint64_t b, uint64_t p) { return (a + b) % p; }
inline uint64_t mod_sub(uint64_t a, uint64_t b, uint64_t p) { return (a + p - b % p) % p; }
inline uint64_t mod_mul(uint64_t a, uint64_t b, uint64_t p) { return (a % p) * (b % p) % p; }
inline uint64_t mod_neg(uint64_t a, uint64_t p) { return a % p == 0 ? 0 : p - a % p; }

uint64_t mod_pow(uint64_t base, uint64_t exp, uint64_t p);
uint64_t mod_inv(uint64_t a, uint64_t p); // throws DivisionByZero on a = 0 mod p

// Euclidean reduction of a BigInt into [0, p).
uint64_t mod_reduce(const BigInt& a, uint64_t p);

// Square root in F_p (p prime), if it exists. Tonelli-Shanks.
std::optional<uint64_t> mod_sqrt(uint64_t a, uint64_t p);

// Legendre symbol (a|p) for odd prime p: returns -1, 0, or 1.
int legendre(const BigInt& a, const BigInt& p);

// Trial-division factorization of |n| up to `bound`; returns (prime, exp)
// pairs and the remaining unfactored cofactor (1 if complete).
struct Factorization {
    std::vector<std::pair<BigInt, unsigned>> primes;
    BigInt cofactor = 1;
    bool complete() const { return cofactor == 1; }
};
Factorization factor_trial(BigInt n, uint64_t bound = 1u << 20);

bool is_perfect_square(const BigInt& n);
std::optional<BigInt> exact_sqrt(const BigInt& n);

// Hilbert symbol (a, b)_p over Q_p (p = 0 means the real place).
// a, b nonzero rationals; p = 0 or a prime. Returns +1 or -1.
int hilbert_symbol(const BigRat& a, const BigRat& b, const BigInt& p);

// Primes to check for (a, b): 2, infinity, and odd primes dividing the
// squarefree-reduced numerators/denominators. Needs complete factorization;
// returns nullopt if trial division up to `bound` cannot finish.
std::optional<std::vector<BigInt>> hilbert_places(const BigRat& a, const BigRat& b,
                                                  uint64_t bound = 1u << 20);

} // namespace tamecurve
