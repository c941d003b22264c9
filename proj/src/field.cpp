#include "cyclobound/field.hpp"

#include <sstream>
#include <stdexcept>

#include "cyclobound/smallprime.hpp"

namespace cyclobound {

namespace {

// Ψ_p(t) with Φ_p(z) = z^n Ψ_p(z + 1/z): since z^-n Φ_p(z) = Σ_{k=-n}^n z^k,
// Ψ_p = 1 + Σ_{k=1}^n u_k where u_0 = 2, u_1 = t, u_{k+1} = t u_k - u_{k-1}.
std::vector<Int> min_poly(int n) {
  std::vector<Int> psi(n + 1), prev{2}, cur{0, 1};
  psi[0] = 1;
  for (std::size_t i = 0; i < cur.size(); ++i) psi[i] += cur[i];
  for (int k = 2; k <= n; ++k) {
    std::vector<Int> next(k + 1);
    for (std::size_t i = 0; i < cur.size(); ++i) next[i + 1] = cur[i];
    for (std::size_t i = 0; i < prev.size(); ++i) next[i] -= prev[i];
    for (std::size_t i = 0; i < next.size(); ++i) psi[i] += next[i];
    prev = std::move(cur);
    cur = std::move(next);
  }
  return psi;
}

constexpr std::size_t kPrecomputedCrt = 24;

}  // namespace

FieldContext::FieldContext(long p, int precision_bits) : p_(p), bits_(precision_bits) {
  if (p < 5 || !is_prime_u64(static_cast<std::uint64_t>(p)))
    throw std::invalid_argument("FieldContext: conductor must be a prime >= 5");
  if (bits_ < 128) bits_ = 128;
  n_ = static_cast<int>((p - 1) / 2);

  fold_.resize(p_);
  for (long r = 0; r < p_; ++r) fold_[r] = static_cast<int>(std::min(r, p_ - r));

  psi_ = min_poly(n_);

  cos_b_.reserve(n_ + 1);
  const int work = bits_ + 32;
  Real two_pi = Real::pi(work);
  two_pi.mul_si(2);
  for (int m = 0; m <= n_; ++m) {
    Real t = two_pi;
    t.mul_si(m);
    t.div_ui(static_cast<unsigned long>(p_));
    Real c = cos(t);
    c.mul_si(2);
    Real out(bits_);
    mpfr_set(out.raw(), c.raw(), MPFR_RNDN);
    cos_b_.push_back(std::move(out));
  }

  bcol_.resize(n_);
  for (int j = 1; j < n_; ++j) {
    bcol_[j].resize(n_);
    for (int i = 1; i <= n_; ++i)
      bcol_[j][i - 1] = cos_b_[fold(static_cast<long>(i) * j)].to_double();
  }

  crt_.reserve(kPrecomputedCrt);
  for (std::size_t i = 0; i < kPrecomputedCrt; ++i) crt_.push_back(make_crt_prime(i));
}

CrtPrime FieldContext::make_crt_prime(std::size_t i) const {
  if (i < crt_.size()) return crt_[i];
  SplitModulus sm = split_modulus(static_cast<std::uint64_t>(p_), i);
  CrtPrime cp;
  cp.q = sm.q;
  cp.bval.resize(p_);
  std::vector<std::uint64_t> pw(p_);
  pw[0] = 1;
  for (long m = 1; m < p_; ++m) pw[m] = mulmod_u64(pw[m - 1], sm.w, sm.q);
  for (long m = 0; m < p_; ++m) {
    std::uint64_t s = pw[m] + pw[(p_ - m) % p_];
    if (s >= sm.q) s -= sm.q;
    cp.bval[m] = s;
  }
  return cp;
}

FieldContext make_context(long p, int precision_bits) { return FieldContext(p, precision_bits); }

FieldElement FieldElement::basis(const FieldContext& ctx, int j) {
  if (j < 0 || j >= ctx.n()) throw std::invalid_argument("basis index out of range");
  FieldElement e = zero(ctx);
  e.coeffs[j] = 1;
  return e;
}

FieldElement FieldElement::from_sparse(const FieldContext& ctx,
                                       std::span<const std::pair<int, long>> terms) {
  FieldElement e = zero(ctx);
  for (auto& [j, c] : terms) {
    if (j < 0 || j >= ctx.n()) throw std::invalid_argument("sparse index out of range");
    e.coeffs[j] += c;
  }
  return e;
}

bool FieldElement::is_zero() const {
  for (const Int& c : coeffs)
    if (c != 0) return false;
  return true;
}

std::string FieldElement::str() const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t j = 0; j < coeffs.size(); ++j) {
    if (coeffs[j] == 0) continue;
    Int a = coeffs[j];
    if (first) {
      if (a < 0) os << "-";
    } else {
      os << (a < 0 ? " - " : " + ");
    }
    Int mag = abs(a);
    if (mag != 1) os << mag.get_str() << "*";
    os << "b" << j;
    first = false;
  }
  if (first) os << "0";
  return os.str();
}

namespace {

void check_size(const FieldContext& ctx, const FieldElement& x, const char* where) {
  if (static_cast<int>(x.coeffs.size()) != ctx.n())
    throw std::invalid_argument(std::string(where) + ": element does not belong to this context");
}

}  // namespace

FieldElement mul(const FieldContext& ctx, const FieldElement& x, const FieldElement& y) {
  check_size(ctx, x, "mul");
  check_size(ctx, y, "mul");
  const int n = ctx.n();
  const long p = ctx.p();
  // Products of b_i b_j (i,j >= 1) land on residue classes of ζ^m + ζ^-m;
  // class 0 means the constant 2 and class n is folded back into the basis.
  std::vector<Int> acc(n + 1);
  for (int i = 1; i < n; ++i) {
    const Int& a = x.coeffs[i];
    if (a == 0) continue;
    for (int j = 1; j < n; ++j) {
      const Int& c = y.coeffs[j];
      if (c == 0) continue;
      int s = ctx.fold((i + j) % p);
      int d = ctx.fold(i - j + p);
      mpz_addmul(acc[s].get_mpz_t(), a.get_mpz_t(), c.get_mpz_t());
      mpz_addmul(acc[d].get_mpz_t(), a.get_mpz_t(), c.get_mpz_t());
    }
  }
  FieldElement r = FieldElement::zero(ctx);
  r.coeffs[0] = x.coeffs[0] * y.coeffs[0] + 2 * acc[0] - acc[n];
  for (int j = 1; j < n; ++j) {
    r.coeffs[j] = acc[j] - acc[n];
    mpz_addmul(r.coeffs[j].get_mpz_t(), x.coeffs[0].get_mpz_t(), y.coeffs[j].get_mpz_t());
    mpz_addmul(r.coeffs[j].get_mpz_t(), y.coeffs[0].get_mpz_t(), x.coeffs[j].get_mpz_t());
  }
  return r;
}

FieldElement galois_apply(const FieldContext& ctx, int k, const FieldElement& x) {
  check_size(ctx, x, "galois_apply");
  if (k < 1 || k > ctx.n()) throw std::invalid_argument("galois_apply: k out of range");
  const int n = ctx.n();
  const long p = ctx.p();
  FieldElement r = FieldElement::zero(ctx);
  Int accn;
  long idx = 0;
  for (int j = 1; j < n; ++j) {
    idx += k;
    if (idx >= p) idx -= p;
    const Int& a = x.coeffs[j];
    if (a == 0) continue;
    int m = ctx.fold(idx);
    if (m == n)
      accn += a;
    else
      r.coeffs[m] += a;
  }
  r.coeffs[0] += x.coeffs[0];
  if (accn != 0)
    for (int j = 0; j < n; ++j) r.coeffs[j] -= accn;
  return r;
}

FieldElement c_to_b(const FieldContext& ctx, std::span<const Int> ccoeffs) {
  if (static_cast<int>(ccoeffs.size()) != ctx.n())
    throw std::invalid_argument("c_to_b: need exactly n coefficients");
  FieldElement r = FieldElement::zero(ctx);
  Int suffix;
  for (int j = ctx.n() - 1; j >= 0; --j) {
    suffix += ccoeffs[j];
    r.coeffs[j] = suffix;
  }
  return r;
}

std::vector<Int> b_to_c(const FieldContext& ctx, const FieldElement& x) {
  check_size(ctx, x, "b_to_c");
  const int n = ctx.n();
  std::vector<Int> c(n);
  for (int j = 0; j < n; ++j) c[j] = x.coeffs[j] - (j + 1 < n ? x.coeffs[j + 1] : Int(0));
  return c;
}

std::vector<Real> embed(const FieldContext& ctx, const FieldElement& x) {
  check_size(ctx, x, "embed");
  const int n = ctx.n();
  std::vector<Real> out;
  out.reserve(n);
  for (int i = 1; i <= n; ++i) {
    Real s = Real::from(x.coeffs[0], ctx.precision_bits());
    for (int j = 1; j < n; ++j) {
      if (x.coeffs[j] == 0) continue;
      s.addmul(ctx.cos_b(ctx.fold(static_cast<long>(i) * j)), x.coeffs[j]);
    }
    out.push_back(std::move(s));
  }
  return out;
}

std::vector<double> embed_d(const FieldContext& ctx, const FieldElement& x) {
  std::vector<Real> hp = embed(ctx, x);
  std::vector<double> out(hp.size());
  for (std::size_t i = 0; i < hp.size(); ++i) out[i] = hp[i].to_double();
  return out;
}

namespace detail {

std::uint64_t norm_mod_dense(const FieldContext& ctx, const CrtPrime& cp,
                             std::span<const Int> coeffs) {
  const int n = ctx.n();
  const long p = ctx.p();
  const std::uint64_t q = cp.q;
  std::vector<std::uint64_t> c(n);
  for (int j = 0; j < n; ++j) c[j] = mpz_fdiv_ui(coeffs[j].get_mpz_t(), q);
  std::uint64_t prod = 1;
  for (int k = 1; k <= n; ++k) {
    std::uint64_t e = c[0];
    long idx = 0;
    for (int j = 1; j < n; ++j) {
      idx += k;
      if (idx >= p) idx -= p;
      if (c[j] == 0) continue;
      e += mulmod_u64(c[j], cp.bval[idx], q);
      if (e >= q) e -= q;
    }
    prod = mulmod_u64(prod, e, q);
  }
  return prod;
}

std::uint64_t norm_mod_sparse(const FieldContext& ctx, const CrtPrime& cp, long a0,
                              std::span<const std::pair<int, long>> terms) {
  const int n = ctx.n();
  const long p = ctx.p();
  const std::uint64_t q = cp.q;
  const std::uint64_t a0m = static_cast<std::uint64_t>(((a0 % static_cast<long>(q)) + q) % q);
  std::size_t nt = terms.size();
  std::uint64_t cm[64];
  long pos[64];
  long step[64];
  if (nt > 64) throw std::invalid_argument("norm_mod_sparse: too many terms");
  for (std::size_t t = 0; t < nt; ++t) {
    long cval = terms[t].second % static_cast<long>(q);
    cm[t] = static_cast<std::uint64_t>((cval + static_cast<long>(q)) % static_cast<long>(q));
    step[t] = terms[t].first % p;
    pos[t] = 0;
  }
  std::uint64_t prod = 1;
  for (int k = 1; k <= n; ++k) {
    std::uint64_t e = a0m;
    for (std::size_t t = 0; t < nt; ++t) {
      pos[t] += step[t];
      if (pos[t] >= p) pos[t] -= p;
      e += mulmod_u64(cm[t], cp.bval[pos[t]], q);
      if (e >= q) e -= q;
    }
    prod = mulmod_u64(prod, e, q);
  }
  return prod;
}

Int crt_signed(std::span<const std::uint64_t> residues, std::span<const std::uint64_t> moduli) {
  Int r = 0, m = 1;
  for (std::size_t i = 0; i < residues.size(); ++i) {
    const std::uint64_t q = moduli[i];
    std::uint64_t mi = mpz_fdiv_ui(m.get_mpz_t(), q);
    std::uint64_t ri = mpz_fdiv_ui(r.get_mpz_t(), q);
    std::uint64_t delta = residues[i] >= ri ? residues[i] - ri : residues[i] + q - ri;
    std::uint64_t t = mulmod_u64(delta, powmod_u64(mi, q - 2, q), q);
    Int add = m;
    mpz_mul_ui(add.get_mpz_t(), add.get_mpz_t(), t);
    r += add;
    mpz_mul_ui(m.get_mpz_t(), m.get_mpz_t(), q);
  }
  Int half = m >> 1;
  if (r > half) r -= m;
  return r;
}

std::size_t crt_count_for(const FieldContext& ctx, const Int& coeff_weight) {
  // |N(x)| <= (|a_0| + 2 Σ_{j>=1} |a_j|)^n; moduli sit just below 2^62.
  std::size_t wbits = mpz_sizeinbase(coeff_weight.get_mpz_t(), 2);
  std::size_t total = static_cast<std::size_t>(ctx.n()) * wbits + 8;
  return total / 61 + 1;
}

}  // namespace detail

Int norm(const FieldContext& ctx, const FieldElement& x) {
  check_size(ctx, x, "norm");
  Int weight = abs(x.coeffs[0]);
  for (int j = 1; j < ctx.n(); ++j) weight += 2 * abs(x.coeffs[j]);
  if (weight == 0) return 0;
  std::size_t count = detail::crt_count_for(ctx, weight);
  std::vector<std::uint64_t> res(count), mod(count);
  for (std::size_t i = 0; i < count; ++i) {
    CrtPrime cp = ctx.make_crt_prime(i);
    mod[i] = cp.q;
    res[i] = detail::norm_mod_dense(ctx, cp, x.coeffs);
  }
  return abs(detail::crt_signed(res, mod));
}

namespace {

// Π_{k=2..n} σ_k(y)
FieldElement adjoint(const FieldContext& ctx, const FieldElement& y) {
  FieldElement acc = FieldElement::zero(ctx);
  acc.coeffs[0] = 1;
  for (int k = 2; k <= ctx.n(); ++k) acc = mul(ctx, acc, galois_apply(ctx, k, y));
  return acc;
}

std::optional<FieldElement> divide_exact(const FieldContext& ctx, const FieldElement& z,
                                         const Int& d) {
  FieldElement q = FieldElement::zero(ctx);
  for (int j = 0; j < ctx.n(); ++j) {
    if (!mpz_divisible_p(z.coeffs[j].get_mpz_t(), d.get_mpz_t())) return std::nullopt;
    mpz_divexact(q.coeffs[j].get_mpz_t(), z.coeffs[j].get_mpz_t(), d.get_mpz_t());
  }
  return q;
}

}  // namespace

std::optional<FieldElement> try_divide(const FieldContext& ctx, const FieldElement& x,
                                       const FieldElement& y) {
  check_size(ctx, x, "try_divide");
  check_size(ctx, y, "try_divide");
  if (y.is_zero()) throw std::invalid_argument("try_divide: divisor is zero");
  if (x.is_zero()) return FieldElement::zero(ctx);
  FieldElement adj = adjoint(ctx, y);
  FieldElement dd = mul(ctx, y, adj);
  for (int j = 1; j < ctx.n(); ++j)
    if (dd.coeffs[j] != 0) throw std::logic_error("try_divide: adjoint product not rational");
  const Int& d = dd.coeffs[0];
  auto q = divide_exact(ctx, mul(ctx, x, adj), d);
  if (!q) return std::nullopt;
  if (mul(ctx, *q, y) != x) throw std::logic_error("try_divide: verification failed");
  return q;
}

std::optional<ConjugateQuotient> divide_by_some_conjugate(const FieldContext& ctx,
                                                          const FieldElement& x,
                                                          const FieldElement& y) {
  check_size(ctx, x, "divide_by_some_conjugate");
  check_size(ctx, y, "divide_by_some_conjugate");
  if (y.is_zero()) throw std::invalid_argument("divide_by_some_conjugate: divisor is zero");
  FieldElement adj1 = adjoint(ctx, y);
  FieldElement dd = mul(ctx, y, adj1);
  const Int& d = dd.coeffs[0];
  for (int k = 1; k <= ctx.n(); ++k) {
    FieldElement adjk = galois_apply(ctx, k, adj1);
    auto q = divide_exact(ctx, mul(ctx, x, adjk), d);
    if (q) {
      if (mul(ctx, *q, galois_apply(ctx, k, y)) != x)
        throw std::logic_error("divide_by_some_conjugate: verification failed");
      return ConjugateQuotient{k, false, std::move(*q)};
    }
  }
  // Mirror pass: divide conjugates of x by y itself.
  for (int k = 1; k <= ctx.n(); ++k) {
    FieldElement xk = galois_apply(ctx, k, x);
    auto q = divide_exact(ctx, mul(ctx, xk, adj1), d);
    if (q) {
      if (mul(ctx, *q, y) != xk)
        throw std::logic_error("divide_by_some_conjugate: verification failed");
      return ConjugateQuotient{k, true, std::move(*q)};
    }
  }
  return std::nullopt;
}

FieldElement norm_p_element(const FieldContext& ctx) {
  FieldElement e = FieldElement::zero(ctx);
  e.coeffs[0] = 2;
  e.coeffs[1] = -1;
  return e;
}

}  // namespace cyclobound
