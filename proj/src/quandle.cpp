#include "qv/quandle.hpp"

#include <sstream>

#include "qv/error.hpp"

namespace qv {

AlexanderQuandle::AlexanderQuandle(GroundRing ring, RingElement omega, RingElement omega_inv)
    : ring_(std::move(ring)), omega_(omega), omega_inv_(omega_inv) {
  const std::int64_t p = ring_.p();
  one_minus_omega_ = ring_.sub(ring_.one(), omega_);
  if (omega_is_generator()) {
    omega_sym_ = LaurentPoly::monomial(1, 1, p);
    omega_inv_sym_ = LaurentPoly::monomial(1, -1, p);
  } else {
    omega_sym_ = ring_.canonical_lift(omega_).reduced_mod(p);
    omega_inv_sym_ = ring_.canonical_lift(omega_inv_).reduced_mod(p);
  }
  one_minus_omega_sym_ = LaurentPoly::constant(1, p) - omega_sym_;
}

AlexanderQuandle AlexanderQuandle::create(GroundRing ring, RingElement omega) {
  auto inv = ring.try_invert(omega);
  if (!inv) throw Error(Errc::NotAUnit, "quandle parameter " + ring.format(omega) + " is not a unit");
  return AlexanderQuandle(std::move(ring), omega, *inv);
}

AlexanderQuandle AlexanderQuandle::with_generator(GroundRing ring) {
  RingElement w = ring.generator();
  return create(std::move(ring), w);
}

RingElement AlexanderQuandle::op(RingElement x, RingElement y) const {
  return ring_.add(ring_.mul(omega_, x), ring_.mul(one_minus_omega_, y));
}

RingElement AlexanderQuandle::unop(RingElement a, RingElement b) const {
  return ring_.mul(omega_inv_, ring_.sub(a, ring_.mul(one_minus_omega_, b)));
}

LaurentPoly AlexanderQuandle::op(const LaurentPoly& x, const LaurentPoly& y) const {
  return omega_sym_ * x + one_minus_omega_sym_ * y;
}

LaurentPoly AlexanderQuandle::unop(const LaurentPoly& a, const LaurentPoly& b) const {
  return omega_inv_sym_ * (a - one_minus_omega_sym_ * b);
}

std::string AlexanderQuandle::describe() const {
  std::ostringstream os;
  os << ring_.describe() << " --w " << ring_.format(omega_);
  return os.str();
}

OperationTable OperationTable::from(const AlexanderQuandle& q) {
  return OperationTable{q.order(), [q](std::uint32_t a, std::uint32_t b) {
                          return q.op(RingElement{a}, RingElement{b}).index;
                        }};
}

std::string AxiomReport::to_string() const {
  if (passed) return "pass";
  std::ostringstream os;
  os << "fail: " << failed_axiom << " at (";
  for (std::size_t i = 0; i < witness.size(); ++i) os << (i ? "," : "") << witness[i];
  os << ")";
  return os.str();
}

AxiomReport check_axioms(const OperationTable& table) {
  const std::uint32_t n = table.size;
  std::vector<std::uint32_t> t(std::size_t{n} * n);
  for (std::uint32_t a = 0; a < n; ++a)
    for (std::uint32_t b = 0; b < n; ++b) t[std::size_t{a} * n + b] = table.op(a, b);
  auto at = [&](std::uint32_t a, std::uint32_t b) { return t[std::size_t{a} * n + b]; };

  for (std::uint32_t a = 0; a < n; ++a)
    if (at(a, a) != a) return {false, "idempotence", {a}};

  // For each b the map c -> c*b must be a bijection.
  std::vector<std::uint32_t> seen(n);
  for (std::uint32_t b = 0; b < n; ++b) {
    std::fill(seen.begin(), seen.end(), n);
    for (std::uint32_t c = 0; c < n; ++c) {
      std::uint32_t a = at(c, b);
      if (seen[a] != n) return {false, "right-invertibility", {a, b}};
      seen[a] = c;
    }
  }

  for (std::uint32_t a = 0; a < n; ++a)
    for (std::uint32_t b = 0; b < n; ++b)
      for (std::uint32_t c = 0; c < n; ++c)
        if (at(at(a, b), c) != at(at(a, c), at(b, c))) return {false, "self-distributivity", {a, b, c}};
  return {};
}

AxiomReport check_axioms(const AlexanderQuandle& q) { return check_axioms(OperationTable::from(q)); }

}  // namespace qv
