#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "cyclobound/hp.hpp"

namespace cyclobound {

using Int = mpz_class;

/// A prime q ≡ 1 (mod p) together with the values of ζ^m + ζ^-m mod q,
/// where ζ is an element of order p mod q. Norms are computed as products
/// of conjugate values modulo several of these primes and reassembled by CRT.
struct CrtPrime {
  std::uint64_t q = 0;
  std::vector<std::uint64_t> bval;  // size p, bval[m] = (w^m + w^{p-m}) mod q
};

/// Everything derived from a prime conductor p for the field Q(ζ_p + ζ_p^-1):
/// degree n = (p-1)/2, the minimal polynomial of 2cos(2π/p), index folding,
/// embedding tables in double and high precision, and CRT norm moduli.
///
/// Immutable after construction; safe for concurrent reads.
class FieldContext {
 public:
  /// Throws std::invalid_argument unless p is a prime >= 5.
  explicit FieldContext(long p, int precision_bits = 192);

  long p() const { return p_; }
  int n() const { return n_; }
  int precision_bits() const { return bits_; }

  /// Minimal polynomial of b_1 = 2cos(2π/p), ascending coefficients, monic of degree n.
  const std::vector<Int>& psi() const { return psi_; }

  /// Residues mod p fold onto basis-index classes 0..n (class n is outside
  /// the basis and is eliminated via b_n = -1 - b_1 - ... - b_{n-1}).
  int fold(long r) const { return fold_[((r % p_) + p_) % p_]; }

  /// 2cos(2π m / p) at context precision, 0 <= m <= n.
  const Real& cos_b(int m) const { return cos_b_[m]; }

  /// Value of basis element b_j at real place i (1-based, i = 1..n), as double.
  double emb(int place, int j) const {
    return j == 0 ? 1.0 : bcol_[j][place - 1];
  }
  /// Column of doubles for b_j over all places (j >= 1), length n.
  std::span<const double> b_column(int j) const { return bcol_[j]; }

  std::size_t crt_count() const { return crt_.size(); }
  const CrtPrime& crt_prime(std::size_t i) const { return crt_[i]; }
  /// Deterministic i-th CRT modulus; i >= crt_count() is built on the fly.
  CrtPrime make_crt_prime(std::size_t i) const;

 private:
  long p_;
  int n_;
  int bits_;
  std::vector<Int> psi_;
  std::vector<int> fold_;
  std::vector<Real> cos_b_;
  std::vector<std::vector<double>> bcol_;  // bcol_[j][i-1], j = 1..n-1
  std::vector<CrtPrime> crt_;
};

FieldContext make_context(long p, int precision_bits = 192);

/// An algebraic integer of Z[ζ_p + ζ_p^-1] as integer coefficients over the
/// integral basis {b_0 = 1, b_1, ..., b_{n-1}}, b_j = 2cos(2πj/p).
struct FieldElement {
  std::vector<Int> coeffs;

  static FieldElement zero(const FieldContext& ctx) {
    return FieldElement{std::vector<Int>(ctx.n())};
  }
  /// b_j as an element.
  static FieldElement basis(const FieldContext& ctx, int j);
  /// From sparse (index, coefficient) pairs in the b-basis.
  static FieldElement from_sparse(const FieldContext& ctx,
                                  std::span<const std::pair<int, long>> terms);

  bool is_zero() const;
  bool operator==(const FieldElement&) const = default;
  std::string str() const;  // e.g. "b0 + b1 - b6"
};

/// Exact product in the canonical basis. Throws on size mismatch.
FieldElement mul(const FieldContext& ctx, const FieldElement& x, const FieldElement& y);

/// σ_k(x) where σ_k sends b_j to b_{fold(jk mod p)}; k in [1, n].
FieldElement galois_apply(const FieldContext& ctx, int k, const FieldElement& x);

/// |Π_σ σ(x)| computed exactly (CRT resultant evaluation; never approximated).
Int norm(const FieldContext& ctx, const FieldElement& x);

/// Converts coefficients over the alternative basis c_k = Σ_{j<=k} b_j to the b-basis.
FieldElement c_to_b(const FieldContext& ctx, std::span<const Int> ccoeffs);
std::vector<Int> b_to_c(const FieldContext& ctx, const FieldElement& x);

/// Exact quotient x / y if y divides x in the ring of integers, else nullopt.
/// The decision is exact: x · Π_{k != 1} σ_k(y) must have every coefficient
/// divisible by the (signed) constant y · Π_{k != 1} σ_k(y).
std::optional<FieldElement> try_divide(const FieldContext& ctx, const FieldElement& x,
                                       const FieldElement& y);

struct ConjugateQuotient {
  int k = 0;                  // Galois index used
  bool conj_of_element = false;  // true: quotient = σ_k(x)/y, false: x/σ_k(y)
  FieldElement quotient;
};

/// First k (in 1..n) such that x / σ_k(y) is integral; if none, also tries
/// σ_k(x) / y. Returns nullopt when no conjugate quotient is integral.
std::optional<ConjugateQuotient> divide_by_some_conjugate(const FieldContext& ctx,
                                                          const FieldElement& x,
                                                          const FieldElement& y);

/// Numeric conjugate values: entry i-1 is x evaluated at place i.
std::vector<Real> embed(const FieldContext& ctx, const FieldElement& x);
std::vector<double> embed_d(const FieldContext& ctx, const FieldElement& x);

/// The canonical element of norm p, 2·b_0 - b_1.
FieldElement norm_p_element(const FieldContext& ctx);

namespace detail {

/// Product of all conjugate values of the element mod cp.q; coefficients
/// are reduced mod q.
std::uint64_t norm_mod_dense(const FieldContext& ctx, const CrtPrime& cp,
                             std::span<const Int> coeffs);

/// Same, for a small-coefficient sparse element: a0 + Σ terms[t].second * b_{terms[t].first}.
std::uint64_t norm_mod_sparse(const FieldContext& ctx, const CrtPrime& cp, long a0,
                              std::span<const std::pair<int, long>> terms);

/// CRT combine residues r_i mod q_i into the symmetric representative.
Int crt_signed(std::span<const std::uint64_t> residues, std::span<const std::uint64_t> moduli);

/// Number of CRT moduli needed to cover |N(x)| given Σ|a_j| weights.
std::size_t crt_count_for(const FieldContext& ctx, const Int& coeff_weight);

}  // namespace detail

}  // namespace cyclobound
