#include "cyclobound/smallprime.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace cyclobound {

std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

std::uint64_t powmod_u64(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  a %= m;
  while (e > 0) {
    if (e & 1) r = mulmod_u64(r, a, m);
    a = mulmod_u64(a, a, m);
    e >>= 1;
  }
  return r;
}

namespace {

// Strong-probable-prime test to base a.
bool sprp(std::uint64_t n, std::uint64_t a, std::uint64_t d, int s) {
  std::uint64_t x = powmod_u64(a % n, d, n);
  if (x == 1 || x == n - 1) return true;
  for (int i = 1; i < s; ++i) {
    x = mulmod_u64(x, x, n);
    if (x == n - 1) return true;
  }
  return false;
}

}  // namespace

bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    if (n % p == 0) return n == p;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // This base set is exact for all n < 3.3 * 10^24, hence for all 64-bit n.
  for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    if (!sprp(n, a, d, s)) return false;
  }
  return true;
}

bool is_prime(const mpz_class& n) {
  if (n <= 0) return false;
  if (n.fits_ulong_p()) return is_prime_u64(n.get_ui());
  if (mpz_sizeinbase(n.get_mpz_t(), 2) <= 64) {
    std::uint64_t v = mpz_get_ui(n.get_mpz_t());  // low 64 bits == value here
    return is_prime_u64(v);
  }
  return mpz_probab_prime_p(n.get_mpz_t(), 40) > 0;
}

namespace {

std::uint64_t rho_brent(std::uint64_t n) {
  // n odd composite, no factor below 1000.
  for (std::uint64_t c = 1;; ++c) {
    std::uint64_t x = 2, y = 2, d = 1, q = 1, ys = 0;
    const std::uint64_t m = 128;
    std::uint64_t r = 1;
    auto f = [n, c](std::uint64_t v) { return (mulmod_u64(v, v, n) + c) % n; };
    while (d == 1) {
      x = y;
      for (std::uint64_t i = 0; i < r; ++i) y = f(y);
      for (std::uint64_t k = 0; k < r && d == 1; k += m) {
        ys = y;
        for (std::uint64_t i = 0; i < std::min(m, r - k); ++i) {
          y = f(y);
          q = mulmod_u64(q, x > y ? x - y : y - x, n);
        }
        d = std::gcd(q, n);
      }
      r <<= 1;
    }
    if (d == n) {
      d = 1;
      do {
        ys = f(ys);
        d = std::gcd(x > ys ? x - ys : ys - x, n);
      } while (d == 1);
    }
    if (d != n) return d;
  }
}

void factor_rec(std::uint64_t n, std::vector<std::uint64_t>& out) {
  if (n == 1) return;
  if (is_prime_u64(n)) {
    out.push_back(n);
    return;
  }
  std::uint64_t d = rho_brent(n);
  factor_rec(d, out);
  factor_rec(n / d, out);
}

}  // namespace

std::vector<std::uint64_t> factor_u64(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  if (n == 0) throw std::invalid_argument("factor_u64: n must be positive");
  for (std::uint64_t p = 2; p < 1000 && p * p <= n; p = (p == 2 ? 3 : p + 2)) {
    while (n % p == 0) {
      out.push_back(p);
      n /= p;
    }
  }
  factor_rec(n, out);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::uint64_t> sieve_split_targets(std::uint64_t p, std::uint64_t limit) {
  std::vector<std::uint64_t> out;
  if (limit < 2) return out;
  std::vector<std::uint8_t> comp(limit + 1, 0);
  for (std::uint64_t i = 2; i * i <= limit; ++i) {
    if (comp[i]) continue;
    for (std::uint64_t j = i * i; j <= limit; j += i) comp[j] = 1;
  }
  for (std::uint64_t q = 2; q <= limit; ++q) {
    if (comp[q] || q == p) continue;
    std::uint64_t r = q % p;
    if (r == 1 || r == p - 1) out.push_back(q);
  }
  return out;
}

SplitModulus split_modulus(std::uint64_t p, std::size_t index) {
  // Walk q = k*p + 1 upward from just below 2^62; deterministic for (p, index).
  std::uint64_t k = ((1ull << 62) - 1) / p;
  if (k % 2 == 1) ++k;  // keep q = k*p + 1 odd (p is odd)
  std::size_t seen = 0;
  for (;; k += 2) {
    std::uint64_t q = k * p + 1;
    if (!is_prime_u64(q)) continue;
    if (seen++ < index) continue;
    std::uint64_t exp = (q - 1) / p;
    for (std::uint64_t a = 2;; ++a) {
      std::uint64_t w = powmod_u64(a, exp, q);
      if (w != 1) return {q, w};
    }
  }
}

}  // namespace cyclobound
