#pragma once

// Test-only oracles, deliberately independent of the library's production
// paths: the minimal polynomial via direct root-product expansion and the
// norm via a high-precision product over the real embeddings.

#include <utility>
#include <vector>

#include "cyclobound/field.hpp"
#include "cyclobound/hp.hpp"

namespace oracle {

using cyclobound::Int;
using cyclobound::Real;

// Π_{j=1..n} (x - 2cos(2πj/p)) expanded at high precision, coefficients
// rounded to the nearest integer.
inline std::vector<Int> psi_brute(long p, int bits = 256) {
  int n = static_cast<int>((p - 1) / 2);
  Real two_pi = Real::pi(bits);
  two_pi.mul_si(2);
  std::vector<Real> poly{Real::from(1.0, bits)};
  for (int j = 1; j <= n; ++j) {
    Real t = two_pi;
    t.mul_si(j);
    t.div_ui(static_cast<unsigned long>(p));
    Real root = cos(t);
    root.mul_si(2);
    std::vector<Real> next(poly.size() + 1, Real(bits));
    for (std::size_t i = 0; i < poly.size(); ++i) {
      next[i + 1] += poly[i];
      next[i] -= poly[i] * root;
    }
    poly = std::move(next);
  }
  std::vector<Int> out;
  out.reserve(poly.size());
  for (const Real& c : poly) out.push_back(c.round_to_int());
  return out;
}

// |Π_i x(place_i)| at the context's precision, rounded to nearest integer.
inline Int norm_brute(const cyclobound::FieldContext& ctx, const cyclobound::FieldElement& x) {
  std::vector<Real> emb = cyclobound::embed(ctx, x);
  Real prod = Real::from(1.0, ctx.precision_bits());
  for (const Real& v : emb) prod *= v;
  return abs(Real(prod)).round_to_int();
}

}  // namespace oracle
