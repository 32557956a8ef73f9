#include "doctest.h"
#include "helpers.hpp"
#include "qv/coloring.hpp"
#include "qv/error.hpp"

using namespace qv;
using namespace qv::test;

namespace {

std::size_t count(const BraidWord& b, const AlexanderQuandle& Q, const ColoringPolicy& policy = ColoringPolicy::sum_all()) {
  return enumerate_colorings(b, Q, policy).size();
}

std::size_t oracle_count(const BraidWord& b, const AlexanderQuandle& Q) {
  return oracle::count_colorings(oracle_quandle(Q), b.strands, oracle_word(b));
}

const char* kWords[] = {"2 ; 1",       "2 ; 1 1 1",      "2 ; 1 1 1 1",    "2 ; 1 1 1 1 1 1", "2 ; -1 -1 -1",
                        "2 ; 1 -1",    "3 ; 2 1 1 1 -2", "3 ; 1 1 1 2",    "3 ; 1 -2 1 -2",   "3 ; 1 2 1 2 1 2",
                        "2 ; 1 1 1 1 1", "2 ; "};

}  // namespace

TEST_CASE("coloring counts") {
  auto R = r3();
  CHECK(count(torus_braid(3), R) == 9);
  CHECK(count(torus_braid(4), R) == 3);
  auto F = AlexanderQuandle::with_generator(f4());
  for (int n : {3, 6, 9}) CHECK(count(torus_braid(n), F) == 16);
  auto S = AlexanderQuandle::with_generator(s9());
  for (int n : {3, 6, 9}) CHECK(count(torus_braid(n), S, ColoringPolicy::fix_arc(0, S.ring().zero())) == 9);
  CHECK(count(torus_braid(3), S) == 81);
}

TEST_CASE("counts agree with the independent brute force") {
  std::vector<AlexanderQuandle> qs{r3(), AlexanderQuandle::with_generator(f4()), AlexanderQuandle::with_generator(s9()),
                                   AlexanderQuandle::with_generator(f9())};
  for (const auto& Q : qs)
    for (auto text : kWords) {
      auto b = parse_braid(text);
      if (b.strands == 3 && Q.order() > 4) continue;
      CAPTURE(text);
      CAPTURE(Q.describe());
      CHECK(count(b, Q) == oracle_count(b, Q));
    }
}

TEST_CASE("every coloring satisfies the crossing rule and the symbolic record reduces to it") {
  auto Q = AlexanderQuandle::with_generator(s9());
  for (auto text : {"2 ; 1 1 1", "3 ; 2 1 1 1 -2", "2 ; 1 -1 1"}) {
    auto b = parse_braid(text);
    auto d = closure_diagram(b);
    for (const auto& c : enumerate_colorings(b, d, Q, ColoringPolicy::sum_all())) {
      CHECK(satisfies_crossings(d, c.arcs, Q));
      REQUIRE(c.symbolic_arcs.size() == c.arcs.size());
      for (std::size_t a = 0; a < c.arcs.size(); ++a) CHECK(Q.ring().reduce(c.symbolic_arcs[a]) == c.arcs[a]);
    }
  }
}

TEST_CASE("parallel enumeration matches serial") {
  auto Q = AlexanderQuandle::with_generator(f9());
  auto b = parse_braid("3 ; 1 2 1 2 1 2");
  auto serial = enumerate_colorings(b, Q, ColoringPolicy::sum_all());
  auto parallel = enumerate_colorings(b, Q, ColoringPolicy::sum_all(), {true, 4});
  REQUIRE(serial.size() == parallel.size());
  for (std::size_t i = 0; i < serial.size(); ++i) CHECK(serial[i].arcs == parallel[i].arcs);
}

TEST_CASE("conjugation preserves the coloring count") {
  for (const auto& Q : {r3(), AlexanderQuandle::with_generator(f4())}) {
    CHECK(count(parse_braid("3 ; 1 1 1"), Q) == count(parse_braid("3 ; 2 1 1 1 -2"), Q));
    CHECK(count(parse_braid("2 ; 1 1 1"), Q) == count(parse_braid("3 ; 1 1 1 2"), Q));
  }
}

TEST_CASE("shadow extension") {
  auto Q = AlexanderQuandle::with_generator(s9());
  const GroundRing& R = Q.ring();
  auto b = torus_braid(3);
  auto d = closure_diagram(b);
  auto colorings = enumerate_colorings(b, d, Q, ColoringPolicy::sum_all());

  // all-zero coloring with base 0 stays 0
  for (const auto& c : colorings) {
    bool zero = std::all_of(c.arcs.begin(), c.arcs.end(), [](RingElement x) { return x.index == 0; });
    if (!zero) continue;
    auto s = shadow_extend(d, c, R.zero(), Q);
    for (auto r : s.regions) CHECK(r == R.zero());
  }

  // two propagation orders give the same extension, for every coloring and base
  for (const auto& c : colorings)
    for (auto base : R.elements()) {
      auto a = shadow_extend(d, c, base, Q, {false, true, {}});
      auto b2 = shadow_extend(d, c, base, Q, {true, false, {}});
      CHECK(a.regions == b2.regions);
      CHECK(a.regions[d.unbounded_region] == base);
      for (std::size_t r = 0; r < a.regions.size(); ++r) CHECK(R.reduce(a.symbolic_regions[r]) == a.regions[r]);
    }
}

TEST_CASE("shadow extension on two unlinked loops") {
  auto Q = AlexanderQuandle::with_generator(f4());
  auto b = parse_braid("2 ; ");
  auto d = closure_diagram(b);
  for (const auto& c : enumerate_colorings(b, d, Q, ColoringPolicy::sum_all())) {
    auto s = shadow_extend(d, c, Q.ring().one(), Q);
    for (const auto& seg : d.segments) CHECK(Q.op(s.regions[seg.right_region], c.arcs[seg.arc]) == s.regions[seg.left_region]);
  }
}

TEST_CASE("policies") {
  auto R = f4();
  CHECK(parse_policy("sum-all", R).kind == ColoringPolicy::Kind::SumAll);
  auto p = parse_policy("fix-arc:0=w+1", R);
  CHECK(p.kind == ColoringPolicy::Kind::FixArc);
  CHECK(p.arc_color == R.parse("w+1"));
  CHECK(p.to_string(R) == "fix-arc:0=w+1");
  auto q = parse_policy("fix-arc-region:2=1,w", R);
  CHECK(q.kind == ColoringPolicy::Kind::FixArcAndRegion);
  CHECK(q.arc == 2);
  CHECK(q.region_color == R.generator());
  for (auto bad : {"fix-arc", "fix-arc:=1", "fix-arc:a=1", "fix-arc-region:0=1", "sum", "fix-arc:0=v"}) {
    CAPTURE(bad);
    try {
      parse_policy(bad, R);
      FAIL("accepted");
    } catch (const Error& e) {
      CHECK(e.code() == Errc::PolicyInvalid);
    }
  }
  auto Q = AlexanderQuandle::with_generator(R);
  CHECK_THROWS_AS(enumerate_colorings(torus_braid(3), Q, ColoringPolicy::fix_arc(7, R.zero())), Error);
}
