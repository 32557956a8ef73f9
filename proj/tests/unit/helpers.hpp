#pragma once

#include <random>

#include "brute_oracle.hpp"
#include "qv/arith.hpp"
#include "qv/diagram.hpp"
#include "qv/quandle.hpp"

namespace qv::test {

inline GroundRing f4() { return GroundRing::create(2, {1, 1, 1}); }
inline GroundRing f9() { return GroundRing::create(3, {1, 0, 1}); }
// F_3[w]/(w^2-w+1) = F_3[w]/((w+1)^2), not a field
inline GroundRing s9() { return GroundRing::create(3, {1, -1, 1}); }
inline AlexanderQuandle r3() { return AlexanderQuandle::create(GroundRing::create(3, {1, 1}), RingElement{2}); }

inline oracle::Field oracle_field(const GroundRing& ring) {
  std::vector<std::int64_t> h = ring.reduced_modulus();
  return {ring.p(), h};
}

inline oracle::Alex oracle_quandle(const AlexanderQuandle& q) {
  return {oracle_field(q.ring()), q.ring().coeffs(q.omega())};
}

inline std::vector<oracle::Letter> oracle_word(const BraidWord& b) {
  std::vector<oracle::Letter> out;
  for (const auto& l : b.letters) out.push_back({l.index, l.kind == LetterKind::Positive});
  return out;
}

inline std::mt19937_64& rng() {
  static std::mt19937_64 gen(20240611);
  return gen;
}

}  // namespace qv::test
