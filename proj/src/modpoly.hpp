#pragma once

// Polynomial arithmetic over F_p (word-size p) and Z/MZ (big M) used by the
// factorization routines. Coefficient vectors are low degree first and
// trimmed of leading zeros.

#include <gmpxx.h>

#include <cstdint>
#include <random>
#include <utility>
#include <vector>

namespace polyexp::modp {

using Fp = std::vector<std::uint64_t>;

void trim(Fp& a);
std::uint64_t inv(std::uint64_t a, std::uint64_t p);
Fp add(const Fp& a, const Fp& b, std::uint64_t p);
Fp sub(const Fp& a, const Fp& b, std::uint64_t p);
Fp mul(const Fp& a, const Fp& b, std::uint64_t p);
Fp scale(const Fp& a, std::uint64_t s, std::uint64_t p);
std::pair<Fp, Fp> divrem(const Fp& a, const Fp& b, std::uint64_t p);
Fp rem(const Fp& a, const Fp& b, std::uint64_t p);
Fp monic(const Fp& a, std::uint64_t p);
Fp gcd(Fp a, Fp b, std::uint64_t p);
/// Returns monic g and s, t with s*a + t*b = g.
void xgcd(const Fp& a, const Fp& b, std::uint64_t p, Fp& g, Fp& s, Fp& t);
Fp derivative(const Fp& a, std::uint64_t p);
Fp powmod(const Fp& base, const mpz_class& e, const Fp& m, std::uint64_t p);

Fp reduce(const std::vector<mpz_class>& a, std::uint64_t p);

/// Irreducible monic factors of a square-free monic polynomial, odd p.
std::vector<Fp> factor_squarefree(const Fp& f, std::uint64_t p, std::mt19937_64& rng);

}  // namespace polyexp::modp

namespace polyexp::modm {

using Zm = std::vector<mpz_class>;

void trim(Zm& a);
Zm reduce(const Zm& a, const mpz_class& m);
/// Coefficients in (-m/2, m/2].
Zm symmetric(const Zm& a, const mpz_class& m);
Zm add(const Zm& a, const Zm& b, const mpz_class& m);
Zm sub(const Zm& a, const Zm& b, const mpz_class& m);
Zm mul(const Zm& a, const Zm& b, const mpz_class& m);
/// Division by a monic divisor.
std::pair<Zm, Zm> divrem_monic(const Zm& a, const Zm& b, const mpz_class& m);

}  // namespace polyexp::modm
