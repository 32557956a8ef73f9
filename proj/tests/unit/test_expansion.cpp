#include "doctest.h"
#include "helpers.hpp"
#include "qv/error.hpp"
#include "qv/expansion.hpp"
#include "qv/reference.hpp"

using namespace qv;
using namespace qv::test;

namespace {

Rational factorial(int k) {
  Rational r = 1;
  for (int i = 2; i <= k; ++i) r *= i;
  return r;
}

Rational power(const Rational& x, int k) {
  Rational r = 1;
  for (int i = 0; i < k; ++i) r *= x;
  return r;
}

std::vector<Rational> truncated_product(const std::vector<Rational>& x, const std::vector<Rational>& y) {
  std::vector<Rational> out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i)
    for (std::size_t j = 0; i + j < x.size(); ++j) out[i + j] += x[i] * y[j];
  return out;
}

// exp(a c hbar e^{b j hbar}) = sum_{m,k} (a c)^m (m b j)^k hbar^{m+k} / (m! k!), one factor per monomial.
std::vector<Rational> oracle_expand(const GroupRingElement& g, std::int64_t a, std::int64_t b, int D) {
  std::vector<Rational> total(D + 1);
  for (const auto& term : g.terms()) {
    std::vector<Rational> acc(D + 1);
    acc[0] = 1;
    for (const auto& [j, c] : term.lift.terms()) {
      std::vector<Rational> factor(D + 1);
      for (int m = 0; m <= D; ++m)
        for (int k = 0; m + k <= D; ++k)
          factor[m + k] += power(Rational(a * c), m) * power(Rational(m * b * j), k) / (factorial(m) * factorial(k));
      acc = truncated_product(acc, factor);
    }
    for (int d = 0; d <= D; ++d) total[d] += acc[d] * term.coeff;
  }
  return total;
}

// reference coefficients of hbar^0..hbar^7 as polynomials in n
std::vector<Rational> reference110(int n) {
  Rational N = n;
  return {9,
          0,
          Rational(20) * N / 3,
          Rational(10) * N / 3,
          Rational(22) * N / 9 + Rational(292) * N * N / 9,
          Rational(5) * N / 18 + Rational(76) * N * N / 3,
          (Rational(-45) * N + 10194 * N * N + 13808 * N * N * N) / 162,
          (Rational(-35) * N + 4524 * N * N + 11568 * N * N * N) / 108};
}

std::vector<Rational> reference111(int n) {
  Rational N = n;
  return {16,
          0,
          48 * N,
          92 * N,
          120 * N + 100 * N * N,
          Rational(356) * N / 3 + 384 * N * N,
          Rational(472) * N / 5 + Rational(2620) * N * N / 3 + 144 * N * N * N,
          Rational(2824) * N / 45 + 1472 * N * N + 824 * N * N * N};
}

std::vector<Rational> head(const HbarSeries& s, int k) { return {s.coeffs().begin(), s.coeffs().begin() + k}; }

}  // namespace

TEST_CASE("series arithmetic") {
  HbarSeries x(4), y(4);
  x[1] = 1;
  y[2] = Rational(1, 2);
  auto ex = x.exp();
  for (int k = 0; k <= 4; ++k) CHECK(ex[k] == Rational(1) / factorial(k));
  CHECK((x + y).exp() == x.exp() * y.exp());
  CHECK((x - x).exp() == [] {
    HbarSeries one(4);
    one[0] = 1;
    return one;
  }());
  CHECK((x * x)[2] == 1);
  CHECK((x * x)[3] == 0);
  CHECK(x.scaled(3)[1] == 3);
  CHECK(ex.to_string() == "1 + h + (1/2)*h^2 + (1/6)*h^3 + (1/24)*h^4 + O(h^5)");
}

TEST_CASE("exp is a homomorphism on random series") {
  std::uniform_int_distribution<int> num(-9, 9), den(1, 6);
  for (int trial = 0; trial < 20; ++trial) {
    HbarSeries x(7), y(7);
    for (int k = 1; k <= 7; ++k) {
      x[k] = Rational(num(rng()), den(rng()));
      y[k] = Rational(num(rng()), den(rng()));
    }
    CHECK((x + y).exp() == x.exp() * y.exp());
  }
}

TEST_CASE("substitution validation") {
  CHECK_NOTHROW(validate_substitution(example110(3).params));
  CHECK_NOTHROW(validate_substitution(example111(3).params));
  CHECK(relation_residual(example111(3).params) < 1e-9);
  try {
    validate_substitution({f4(), 1, 1, 8});
    FAIL("accepted a relation that does not vanish");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::RelationNotAnnihilated);
  }
  try {
    validate_substitution({f4(), 0, 1, 8});
    FAIL("accepted a = 0");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::InvalidArgument);
  }
}

TEST_CASE("expansion agrees with the closed-form product") {
  for (int n : {3, 6, 9}) {
    for (const auto& ex : {example110(n), example111(n)}) {
      auto s = expand(ex.display, ex.params);
      CHECK(s.coeffs() == oracle_expand(ex.display, ex.params.a, ex.params.b, ex.params.D));
      auto relifted = relift_default(ex.display);
      CHECK(expand(relifted, ex.params).coeffs() == oracle_expand(relifted, ex.params.a, ex.params.b, ex.params.D));
    }
  }
}

TEST_CASE("reference displays reproduce the reference expansions") {
  for (int n : {3, 6, 9}) {
    CAPTURE(n);
    auto e110 = example110(n);
    CHECK(head(expand(e110.display, e110.params), 8) == reference110(n));
    auto e111 = example111(n);
    CHECK(head(expand(e111.display, e111.params), 8) == reference111(n));
  }
  auto s = expand(example111(3).display, example111(3).params);
  CHECK(s[6] == Rational(60156, 5));
  CHECK(s[7] == Rational(535264, 15));
}

TEST_CASE("Vassiliev residues of the reference displays") {
  const std::int64_t expected[] = {1, 2, 0};
  for (int i = 0; i < 3; ++i) {
    const int n = 3 * (i + 1);
    auto ex = example110(n);
    auto r = vassiliev_coeffs(expand(ex.display, ex.params), 3);
    CHECK(r.residues[0] == 0);
    CHECK(r.residues[2] == expected[i]);
    CHECK_FALSE(r.non_p_integral[2]);
    auto r2 = vassiliev_coeffs(expand(example111(n).display, example111(n).params), 2);
    CHECK(r2.residues[0] == 0);
    CHECK(r2.residues[2] == 0);
  }
  auto ex = example110(3);
  auto r = vassiliev_coeffs(expand(ex.display, ex.params), 3);
  CHECK(r.lowest_nonzero() == 2);
  CHECK(r.table(expand(ex.display, ex.params)).rfind("d | u_d | d!*u_d mod 3 | flags", 0) == 0);
}

TEST_CASE("non-p-integral coefficients are flagged") {
  HbarSeries s(3);
  s[1] = Rational(1, 3);
  s[2] = Rational(1, 2);
  auto r = vassiliev_coeffs(s, 3);
  CHECK(r.non_p_integral[1]);
  CHECK(r.residues[1] == 0);
  CHECK_FALSE(r.non_p_integral[2]);
  CHECK(r.residues[2] == 1);
  CHECK(r.lowest_nonzero() == 1);
}

TEST_CASE("shifting a lift by p leaves the residues unchanged") {
  std::uniform_int_distribution<int> shift(-3, 3);
  for (const auto& ex : {example110(3), example110(6), example111(3), example111(6)}) {
    const std::int64_t p = ex.params.ring.p();
    auto base = vassiliev_coeffs(expand(ex.display, ex.params), p);
    const std::size_t nterms = ex.display.terms().size();
    std::uniform_int_distribution<std::size_t> pick(0, nterms - 1);
    for (int trial = 0; trial < 20; ++trial) {
      auto shifted = shift_lift(ex.display, pick(rng()), shift(rng()) | 1);
      CHECK(shifted == ex.display);
      auto r = vassiliev_coeffs(expand(shifted, ex.params), p);
      CHECK(r.residues == base.residues);
      CHECK(r.non_p_integral == base.non_p_integral);
    }
  }
  CHECK_THROWS_AS(shift_lift(example111(3).display, 99, 1), Error);
}

TEST_CASE("relifting keeps classes and coefficients") {
  auto ex = example110(3);
  auto g = relift_default(ex.display);
  CHECK(g == ex.display);
  for (const auto& t : g.terms()) CHECK(t.lift == default_lift(ex.params.ring, t.exponent));
}

TEST_CASE("singular words vanish below their number of double points") {
  auto ex = example111(3);
  for (auto text : {"2 ; 1 1 s1", "2 ; s1", "2 ; 1 s1 s1", "2 ; s1 s1 s1", "3 ; 1 2 s1 s2 s1", "3 ; s1 2 s1 -2"}) {
    auto b = parse_braid(text);
    CAPTURE(text);
    auto r = vassiliev_coeffs(singular_vassiliev(b, ex.config, ex.params), 2);
    for (int d = 0; d < b.singular_count(); ++d) {
      CHECK(r.residues[d] == 0);
      CHECK_FALSE(r.non_p_integral[d]);
    }
  }
  auto nonsingular = parse_braid("2 ; 1 1 1");
  CHECK(singular_vassiliev(nonsingular, ex.config, ex.params) ==
        expand(compute_invariant(nonsingular, ex.config), ex.params));

  auto e110 = example110(3);
  try {
    singular_vassiliev(parse_braid("2 ; 1 1 s1"), e110.config, e110.params);
    FAIL("accepted a non-cocycle");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::NotACocycle);
  }
}
