#include "qv/reference.hpp"

#include "qv/error.hpp"
#include "qv/expr.hpp"

namespace qv {

namespace {

void check_n(int n) {
  if (n <= 0 || n % 3 != 0) throw Error(Errc::InvalidArgument, "n must be a positive multiple of 3");
}

GroupRingElement display(const GroundRing& ring, int n, std::int64_t constant,
                         std::initializer_list<std::pair<std::int64_t, const char*>> terms) {
  GroupRingElement g(ring);
  g.add_term(constant, IntLaurent::constant(0));
  for (const auto& [c, text] : terms) g.add_term(c, parse_laurent(text).scaled(n / 3));
  return g;
}

}  // namespace

ReferenceExample example110(int n) {
  check_n(n);
  GroundRing ring = GroundRing::create(3, {1, -1, 1});
  AlexanderQuandle q = AlexanderQuandle::with_generator(ring);
  InvariantConfig config{3, mochizuki_cocycle(q), q, ColoringPolicy::fix_arc_and_region(0, ring.zero(), ring.zero()), {}};
  return {"example110",
          n,
          torus_braid(n),
          std::move(config),
          {ring, 2, 1, 8},
          display(ring, n, 3,
                  {{2, "(1-w)*w^-2"}, {1, "-2+w^-1+w"}, {2, "2-w^-1-2*w+2*w^2-w^3"}, {1, "-2-2*w^-2+w+2*w^2+w^3"}})};
}

ReferenceExample example111(int n) {
  check_n(n);
  GroundRing ring = GroundRing::create(2, {1, 1, 1});
  AlexanderQuandle q = AlexanderQuandle::with_generator(ring);
  InvariantConfig config{2, example111_cocycle(2), q, ColoringPolicy::sum_all(), {}};
  return {"example111", n, torus_braid(n), std::move(config), {ring, 3, 2, 8},
          display(ring, n, 4, {{10, "w^2-1"}, {1, "w^2+w-2"}, {1, "w-1"}})};
}

}  // namespace qv
