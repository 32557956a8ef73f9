#include "doctest.h"
#include "helpers.hpp"
#include "qv/error.hpp"
#include "qv/expr.hpp"

using namespace qv;
using namespace qv::test;

namespace {

Errc code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error thrown");
  return Errc::InvalidArgument;
}

std::vector<GroundRing> small_rings() {
  return {f4(),
          f9(),
          s9(),
          GroundRing::create(3, {1, 1}),
          GroundRing::create(5, {2, 1}),
          GroundRing::create(2, {1, 1, 0, 1}),
          GroundRing::create(2, {1, 1, 0, 0, 1}),
          GroundRing::create(2, {1, 0, 0, 0, 1})};
}

}  // namespace

TEST_CASE("ring creation") {
  auto F = f4();
  CHECK(F.order() == 4);
  CHECK(F.is_field());
  auto S = s9();
  CHECK(S.order() == 9);
  CHECK_FALSE(S.is_field());
  auto D = GroundRing::create(3, {1, 1});
  CHECK(D.order() == 3);
  CHECK(D.generator() == D.from_int(-1));

  CHECK(code_of([] { GroundRing::create(4, {1, 1}); }) == Errc::NonPrime);
  CHECK(code_of([] { GroundRing::create(3, {1, 1, 2}); }) == Errc::NonMonic);
  CHECK(code_of([] { GroundRing::create(3, {0, 1}); }) == Errc::OmegaNotUnit);
}

TEST_CASE("enumeration order is lexicographic on coefficients") {
  auto F = f4();
  auto e = F.elements();
  REQUIRE(e.size() == 4);
  CHECK(F.coeffs(e[0]) == std::vector<std::int64_t>{0, 0});
  CHECK(F.coeffs(e[1]) == std::vector<std::int64_t>{0, 1});
  CHECK(F.coeffs(e[2]) == std::vector<std::int64_t>{1, 0});
  CHECK(F.coeffs(e[3]) == std::vector<std::int64_t>{1, 1});
}

TEST_CASE("ring arithmetic") {
  auto F = f4();
  const auto w = F.generator();
  CHECK(F.mul(w, w) == F.parse("w+1"));
  auto S = s9();
  const auto v = S.generator();
  CHECK(S.mul(v, v) == S.parse("w+2"));
  const auto v1 = S.add(v, S.one());
  CHECK(S.mul(v1, v1) == S.zero());
  CHECK(S.arith(RingOp::Sub, v, v) == S.zero());
}

TEST_CASE("inversion") {
  auto F = f4();
  CHECK(F.invert(F.generator()) == F.parse("w+1"));
  auto S = s9();
  CHECK(S.invert(S.generator()) == S.parse("1+2*w"));
  CHECK(code_of([&] { S.invert(S.parse("w+1")); }) == Errc::NotAUnit);
  CHECK_FALSE(S.try_invert(S.parse("w+1")).has_value());
  CHECK(code_of([&] { F.invert(F.zero()); }) == Errc::NotAUnit);
}

TEST_CASE("reduction of Laurent polynomials") {
  auto F = f4();
  CHECK(F.reduce(parse_laurent("w^2-1")) == F.generator());
  CHECK(F.reduce(Laurent(0)) == F.zero());
  auto S = s9();
  CHECK(S.reduce(parse_laurent("w^3")) == S.from_int(2));
  CHECK(S.reduce(parse_laurent("w^-1")) == S.invert(S.generator()));
  CHECK(S.reduce(parse_laurent("w^-1").reduced_mod(3)) == S.invert(S.generator()));
}

TEST_CASE("normalized lift") {
  auto F = f4();
  const IntLaurent E = F.normalized_lift(F.generator());
  CHECK(F.reduce(E) == F.generator());
  CHECK(mod_floor(E.augmentation(), 2) == 0);
  CHECK(E == parse_laurent("w^2+2*w+1"));
  CHECK(F.normalized_lift(F.zero()).is_zero());

  auto S = s9();
  CHECK(S.normalized_lift(S.from_int(2)) == parse_laurent("w^2-w+3"));

  auto bad = GroundRing::create(3, {2, 1});
  CHECK_FALSE(bad.augmentation_invertible());
  CHECK(code_of([&] { bad.normalized_lift(bad.one()); }) == Errc::AugmentationSingular);
}

TEST_CASE("ring axioms hold exhaustively on small rings") {
  for (const auto& R : small_rings()) {
    if (R.order() > 16) continue;
    CAPTURE(R.describe());
    auto el = R.elements();
    for (auto x : el)
      for (auto y : el) {
        CHECK(R.add(x, y) == R.add(y, x));
        CHECK(R.mul(x, y) == R.mul(y, x));
        for (auto z : el) {
          CHECK(R.mul(R.mul(x, y), z) == R.mul(x, R.mul(y, z)));
          CHECK(R.add(R.add(x, y), z) == R.add(x, R.add(y, z)));
          CHECK(R.mul(x, R.add(y, z)) == R.add(R.mul(x, y), R.mul(x, z)));
        }
      }
  }
}

TEST_CASE("inverses, lifts and reductions are consistent") {
  for (const auto& R : small_rings()) {
    CAPTURE(R.describe());
    for (auto x : R.elements()) {
      if (auto inv = R.try_invert(x)) CHECK(R.mul(x, *inv) == R.one());
      CHECK(R.reduce(R.canonical_lift(x)) == x);
      if (R.augmentation_invertible()) {
        const IntLaurent E = R.normalized_lift(x);
        CHECK(R.reduce(E) == x);
        CHECK(mod_floor(E.augmentation(), R.p()) == 0);
      }
      CHECK(R.parse(R.format(x)) == x);
    }
  }
}

TEST_CASE("randomized ring identities on larger rings") {
  auto R = GroundRing::create(3, {2, 1, 0, 0, 1});  // order 81
  auto el = R.elements();
  std::uniform_int_distribution<std::size_t> pick(0, el.size() - 1);
  for (int i = 0; i < 500; ++i) {
    auto x = el[pick(rng())], y = el[pick(rng())], z = el[pick(rng())];
    CHECK(R.mul(R.mul(x, y), z) == R.mul(x, R.mul(y, z)));
    CHECK(R.mul(x, R.add(y, z)) == R.add(R.mul(x, y), R.mul(x, z)));
    if (auto inv = R.try_invert(x)) CHECK(R.mul(*inv, x) == R.one());
  }
}
