#include "doctest.h"
#include "helpers.hpp"
#include "qv/error.hpp"

using namespace qv;
using namespace qv::test;

TEST_CASE("quandle creation") {
  auto F = f4();
  auto Q = AlexanderQuandle::create(F, F.generator());
  CHECK(Q.order() == 4);
  CHECK(Q.omega_inv() == F.parse("w+1"));
  auto R = r3();
  CHECK(R.op(RingElement{0}, RingElement{1}) == RingElement{2});
  CHECK_THROWS_AS(AlexanderQuandle::create(F, F.zero()), Error);
  try {
    AlexanderQuandle::create(F, F.zero());
  } catch (const Error& e) {
    CHECK(e.code() == Errc::NotAUnit);
  }
}

TEST_CASE("symbolic operation keeps w unreduced") {
  auto Q = AlexanderQuandle::with_generator(f4());
  auto r = Q.op(LaurentPoly::constant(0, 2), LaurentPoly::constant(1, 2));
  CHECK(r == LaurentPoly::from_coeffs({1, 1}, 2));  // 1 - w = 1 + w mod 2
  auto S = AlexanderQuandle::with_generator(s9());
  auto s = S.op(LaurentPoly::monomial(1, 1, 3), LaurentPoly::constant(0, 3));
  CHECK(s == LaurentPoly::monomial(1, 2, 3));
}

TEST_CASE("op and unop are mutually inverse") {
  for (const auto& R : {f4(), f9(), s9(), GroundRing::create(2, {1, 1, 0, 0, 1})}) {
    for (auto w : R.elements()) {
      if (!R.is_unit(w)) continue;
      auto Q = AlexanderQuandle::create(R, w);
      for (auto x : R.elements())
        for (auto y : R.elements()) {
          CHECK(Q.unop(Q.op(x, y), y) == x);
          CHECK(Q.op(Q.unop(x, y), y) == x);
        }
    }
  }
}

TEST_CASE("axioms hold for every unit parameter up to order 81") {
  std::vector<GroundRing> rings{f4(), f9(), s9(), GroundRing::create(3, {2, 1, 0, 0, 1}),
                                GroundRing::create(2, {1, 1, 0, 1}), GroundRing::create(5, {2, 0, 1})};
  for (const auto& R : rings) {
    for (auto w : R.elements()) {
      if (!R.is_unit(w)) continue;
      if (R.order() > 27 && w != R.generator()) continue;
      auto Q = AlexanderQuandle::create(R, w);
      CAPTURE(Q.describe());
      CHECK(check_axioms(Q).passed);
    }
  }
}

TEST_CASE("corrupted operation table is caught") {
  auto Q = AlexanderQuandle::with_generator(f4());
  auto table = OperationTable::from(Q);
  auto base = table.op;
  table.op = [base](std::uint32_t a, std::uint32_t b) { return (a == 1 && b == 2) ? 3u : base(a, b); };
  auto report = check_axioms(table);
  CHECK_FALSE(report.passed);
  CHECK_FALSE(report.witness.empty());

  OperationTable not_idempotent{3, [](std::uint32_t a, std::uint32_t) { return (a + 1) % 3; }};
  auto r2 = check_axioms(not_idempotent);
  CHECK_FALSE(r2.passed);
  CHECK(r2.failed_axiom == "idempotence");
}
