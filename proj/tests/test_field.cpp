#include "cyclobound/field.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <vector>

#include "doctest.h"
#include "oracle.hpp"

using namespace cyclobound;

namespace {

FieldElement sparse(const FieldContext& ctx, std::initializer_list<std::pair<int, long>> terms) {
  std::vector<std::pair<int, long>> t(terms);
  return FieldElement::from_sparse(ctx, t);
}

FieldElement random_element(const FieldContext& ctx, std::mt19937_64& rng, long lo, long hi) {
  std::uniform_int_distribution<long> dist(lo, hi);
  FieldElement e = FieldElement::zero(ctx);
  for (int j = 0; j < ctx.n(); ++j) e.coeffs[j] = dist(rng);
  return e;
}

}  // namespace

TEST_CASE("context construction and minimal polynomial") {
  FieldContext c5 = make_context(5);
  CHECK(c5.n() == 2);
  CHECK(c5.psi() == std::vector<Int>{-1, 1, 1});

  FieldContext c7 = make_context(7);
  CHECK(c7.psi() == std::vector<Int>{-1, -2, 1, 1});

  CHECK(make_context(71).n() == 35);

  CHECK_THROWS_AS(make_context(9), std::invalid_argument);
  CHECK_THROWS_AS(make_context(4), std::invalid_argument);
  CHECK_THROWS_AS(make_context(3), std::invalid_argument);

  for (long p : {5L, 7L, 11L, 13L, 31L, 71L}) {
    CAPTURE(p);
    CHECK(make_context(p).psi() == oracle::psi_brute(p));
  }
}

TEST_CASE("psi vanishes at every embedding of b_1") {
  for (long p : {7L, 13L, 71L}) {
    FieldContext ctx = make_context(p);
    for (int i = 1; i <= ctx.n(); ++i) {
      double t = ctx.cos_b(ctx.fold(i)).to_double();
      double v = 0;
      for (int d = ctx.n(); d >= 0; --d) v = v * t + ctx.psi()[d].get_d();
      CHECK(std::abs(v) < 1e-9 * std::pow(2.0, ctx.n()));
    }
  }
}

TEST_CASE("conjugates of b_1 sum to -1") {
  for (long p : {5L, 7L, 71L, 197L}) {
    FieldContext ctx = make_context(p);
    double s = 0;
    for (int m = 1; m <= ctx.n(); ++m) s += ctx.cos_b(m).to_double();
    CHECK(s == doctest::Approx(-1.0).epsilon(1e-12));
  }
}

TEST_CASE("multiplication basics") {
  FieldContext c11 = make_context(11);
  FieldElement b1 = FieldElement::basis(c11, 1);
  CHECK(mul(c11, b1, b1) == sparse(c11, {{0, 2}, {2, 1}}));

  FieldContext c7 = make_context(7);
  FieldElement r = mul(c7, FieldElement::basis(c7, 1), FieldElement::basis(c7, 2));
  CHECK(r == sparse(c7, {{0, -1}, {2, -1}}));

  std::mt19937_64 rng(7);
  FieldElement x = random_element(c11, rng, -5, 5);
  CHECK(mul(c11, x, FieldElement::basis(c11, 0)) == x);

  FieldElement wrong = FieldElement::zero(make_context(13));
  CHECK_THROWS_AS(mul(c11, x, wrong), std::invalid_argument);
}

TEST_CASE("multiplication is commutative and associative") {
  FieldContext ctx = make_context(13);
  std::mt19937_64 rng(13);
  for (int it = 0; it < 50; ++it) {
    FieldElement x = random_element(ctx, rng, -4, 4);
    FieldElement y = random_element(ctx, rng, -4, 4);
    FieldElement z = random_element(ctx, rng, -4, 4);
    CHECK(mul(ctx, x, y) == mul(ctx, y, x));
    CHECK(mul(ctx, mul(ctx, x, y), z) == mul(ctx, x, mul(ctx, y, z)));
  }
}

TEST_CASE("galois action") {
  FieldContext c7 = make_context(7);
  std::mt19937_64 rng(3);
  FieldElement x = random_element(c7, rng, -3, 3);
  CHECK(galois_apply(c7, 1, x) == x);
  CHECK(galois_apply(c7, 2, FieldElement::basis(c7, 1)) == FieldElement::basis(c7, 2));
  CHECK(galois_apply(c7, 2, FieldElement::basis(c7, 2)) ==
        sparse(c7, {{0, -1}, {1, -1}, {2, -1}}));
  CHECK_THROWS_AS(galois_apply(c7, 0, x), std::invalid_argument);
  CHECK_THROWS_AS(galois_apply(c7, 4, x), std::invalid_argument);
}

TEST_CASE("galois composition: sigma_k . sigma_m = sigma_fold(km)") {
  for (long p : {11L, 23L}) {
    FieldContext ctx = make_context(p);
    std::mt19937_64 rng(p);
    FieldElement x = random_element(ctx, rng, -3, 3);
    for (int k = 1; k <= ctx.n(); ++k)
      for (int m = 1; m <= ctx.n(); ++m) {
        int km = ctx.fold(static_cast<long>(k) * m);
        CHECK(galois_apply(ctx, k, galois_apply(ctx, m, x)) == galois_apply(ctx, km, x));
      }
  }
}

TEST_CASE("sigma_k permutes the embeddings") {
  FieldContext ctx = make_context(23);
  std::mt19937_64 rng(23);
  FieldElement x = random_element(ctx, rng, -3, 3);
  std::vector<double> ex = embed_d(ctx, x);
  std::sort(ex.begin(), ex.end());
  for (int k = 2; k <= ctx.n(); ++k) {
    std::vector<double> ek = embed_d(ctx, galois_apply(ctx, k, x));
    std::sort(ek.begin(), ek.end());
    for (std::size_t i = 0; i < ek.size(); ++i)
      CHECK(ek[i] == doctest::Approx(ex[i]).epsilon(1e-10));
  }
}

TEST_CASE("norm: published elements") {
  FieldContext c71 = make_context(71);
  CHECK(norm(c71, sparse(c71, {{0, 1}, {1, 1}, {6, -1}})) == 283);
  CHECK(norm(c71, FieldElement::basis(c71, 0)) == 1);
  CHECK(norm(c71, FieldElement::zero(c71)) == 0);

  for (long p : {5L, 7L, 71L, 131L}) {
    FieldContext ctx = make_context(p);
    CHECK(norm(ctx, norm_p_element(ctx)) == p);
  }

  FieldContext c197 = make_context(197);
  CHECK(norm(c197, sparse(c197, {{0, 1}, {1, 1}, {2, 1}, {10, -1}, {33, 1}, {70, -1}, {83, -1}})) ==
        1181);
}

TEST_CASE("norm: brute-force oracle over small fields") {
  for (long p : {5L, 7L, 11L, 13L}) {
    FieldContext ctx = make_context(p, 200);
    const int n = ctx.n();
    long total = 1;
    for (int j = 0; j < n; ++j) total *= 3;
    for (long code = 0; code < total; ++code) {
      FieldElement x = FieldElement::zero(ctx);
      long c = code;
      for (int j = 0; j < n; ++j) {
        x.coeffs[j] = (c % 3) - 1;
        c /= 3;
      }
      CHECK(norm(ctx, x) == oracle::norm_brute(ctx, x));
    }
  }
}

TEST_CASE("norm is multiplicative and Galois invariant") {
  for (long p : {13L, 31L, 71L}) {
    FieldContext ctx = make_context(p);
    std::mt19937_64 rng(p * 17);
    for (int it = 0; it < 40; ++it) {
      FieldElement x = random_element(ctx, rng, -2, 2);
      FieldElement y = random_element(ctx, rng, -2, 2);
      Int nx = norm(ctx, x);
      CHECK(norm(ctx, mul(ctx, x, y)) == nx * norm(ctx, y));
      int k = 1 + static_cast<int>(rng() % ctx.n());
      CHECK(norm(ctx, galois_apply(ctx, k, x)) == nx);
    }
  }
}

TEST_CASE("basis elements are units") {
  for (long p : {7L, 11L, 71L, 197L}) {
    FieldContext ctx = make_context(p);
    for (int j = 1; j < ctx.n(); ++j) CHECK(norm(ctx, FieldElement::basis(ctx, j)) == 1);
  }
}

TEST_CASE("c-basis conversion") {
  FieldContext ctx = make_context(13);
  std::vector<Int> c0(ctx.n());
  c0[0] = 1;
  CHECK(c_to_b(ctx, c0) == FieldElement::basis(ctx, 0));

  std::vector<Int> c2(ctx.n());
  c2[2] = 1;
  CHECK(c_to_b(ctx, c2) == sparse(ctx, {{0, 1}, {1, 1}, {2, 1}}));

  std::mt19937_64 rng(99);
  for (int it = 0; it < 30; ++it) {
    FieldElement x = random_element(ctx, rng, -6, 6);
    CHECK(c_to_b(ctx, b_to_c(ctx, x)) == x);
    std::vector<Int> cc(ctx.n());
    std::uniform_int_distribution<long> dist(-6, 6);
    for (auto& v : cc) v = dist(rng);
    CHECK(b_to_c(ctx, c_to_b(ctx, cc)) == cc);
  }
}

TEST_CASE("norm of a published c-basis element") {
  FieldContext ctx = make_context(223);
  std::vector<Int> cc(ctx.n());
  cc[0] = 1;
  cc[6] = -1;
  cc[26] = -1;
  cc[77] = -1;
  cc[99] = 1;
  CHECK(norm(ctx, c_to_b(ctx, cc)) == Int(6689) * Int(42284369));
}

TEST_CASE("try_divide") {
  FieldContext ctx = make_context(13);
  std::mt19937_64 rng(5);
  for (int it = 0; it < 25; ++it) {
    FieldElement x = random_element(ctx, rng, -3, 3);
    FieldElement y = random_element(ctx, rng, -3, 3);
    if (y.is_zero()) continue;
    auto q = try_divide(ctx, mul(ctx, x, y), y);
    REQUIRE(q.has_value());
    CHECK(*q == x);
  }

  FieldContext c7 = make_context(7);
  FieldElement b0 = FieldElement::basis(c7, 0);
  FieldElement b1 = FieldElement::basis(c7, 1);
  auto inv = try_divide(c7, b0, b1);
  REQUIRE(inv.has_value());
  CHECK(mul(c7, *inv, b1) == b0);

  CHECK_THROWS_AS(try_divide(c7, b0, FieldElement::zero(c7)), std::invalid_argument);
  // 2 does not divide b_1.
  FieldElement two = sparse(c7, {{0, 2}});
  CHECK(!try_divide(c7, b1, two).has_value());
}

TEST_CASE("conjugate quotient reproduces the published norm-6689 element") {
  FieldContext ctx = make_context(223);
  std::vector<Int> ac(ctx.n());
  ac[0] = 1;
  ac[6] = -1;
  ac[26] = -1;
  ac[77] = -1;
  ac[99] = 1;
  FieldElement alpha = c_to_b(ctx, ac);
  FieldElement beta = sparse(ctx, {{1, 1}, {11, 1}, {30, 1}, {95, 1}});
  REQUIRE(norm(ctx, beta) == 42284369);
  auto q = divide_by_some_conjugate(ctx, alpha, beta);
  REQUIRE(q.has_value());
  CHECK(norm(ctx, q->quotient) == 6689);
}

TEST_CASE("embeddings") {
  FieldContext c7 = make_context(7);
  std::vector<double> e0 = embed_d(c7, FieldElement::basis(c7, 0));
  for (double v : e0) CHECK(v == doctest::Approx(1.0));

  std::vector<double> e1 = embed_d(c7, FieldElement::basis(c7, 1));
  const double pi = 3.14159265358979323846;
  CHECK(e1[0] == doctest::Approx(2 * std::cos(2 * pi / 7)).epsilon(1e-14));
  CHECK(e1[1] == doctest::Approx(2 * std::cos(4 * pi / 7)).epsilon(1e-14));
  CHECK(e1[2] == doctest::Approx(2 * std::cos(6 * pi / 7)).epsilon(1e-14));

  for (long p : {71L, 241L}) {
    FieldContext ctx = make_context(p);
    std::mt19937_64 rng(p + 1);
    for (int it = 0; it < 10; ++it) {
      FieldElement x = random_element(ctx, rng, -1, 1);
      Int n = norm(ctx, x);
      if (n == 0) continue;
      std::vector<Real> emb = embed(ctx, x);
      Real prod = Real::from(1.0, ctx.precision_bits());
      for (const Real& v : emb) prod *= v;
      Real err = (abs(prod) - Real::from(n, ctx.precision_bits())) / Real::from(n, ctx.precision_bits());
      CHECK(std::abs(err.to_double()) < 1e-9);
    }
  }
}
