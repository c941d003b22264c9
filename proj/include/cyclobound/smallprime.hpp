#pragma once

#include <cstdint>
#include <vector>

#include <gmpxx.h>

namespace cyclobound {

/// 64-bit modular arithmetic and primality helpers used throughout the
/// search and certificate code. All routines are deterministic.

std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t m);
std::uint64_t powmod_u64(std::uint64_t a, std::uint64_t e, std::uint64_t m);

/// Deterministic Miller-Rabin, exact for every 64-bit input.
bool is_prime_u64(std::uint64_t n);

/// Exact primality for arbitrary-precision values. Values that fit in 64
/// bits use the deterministic test; larger values fall back to GMP's
/// Baillie-PSW based test (no counterexample is known; all values reached
/// by the bundled pipelines fit in 64 bits).
bool is_prime(const mpz_class& n);

/// Full factorization of n into ascending prime factors (with
/// multiplicity) via trial division + Pollard-Brent rho.
std::vector<std::uint64_t> factor_u64(std::uint64_t n);

/// All primes q <= limit with q ≡ ±1 (mod p), ascending.
std::vector<std::uint64_t> sieve_split_targets(std::uint64_t p, std::uint64_t limit);

/// Deterministic sequence of primes q ≡ 1 (mod p) just below 2^62,
/// together with, for each, an element w of multiplicative order p.
/// index selects the i-th member of the sequence.
struct SplitModulus {
  std::uint64_t q;
  std::uint64_t w;
};
SplitModulus split_modulus(std::uint64_t p, std::size_t index);

}  // namespace cyclobound
