#pragma once

#include <functional>
#include <optional>
#include <string>

#include "qv/arith.hpp"

namespace qv {

/// Alexander quandle on S with x * y = w x + (1 - w) y.
///
/// Besides the element `omega` of S the quandle carries symbolic stand-ins for
/// omega and its inverse in F_p[w^{±1}]: `w` and `w^-1` when omega is the class of
/// the ring generator, otherwise the canonical lifts of omega and omega^{-1}.
class AlexanderQuandle {
 public:
  /// Throws NotAUnit when omega is not invertible.
  static AlexanderQuandle create(GroundRing ring, RingElement omega);
  /// Quandle with omega equal to the ring generator `w`.
  static AlexanderQuandle with_generator(GroundRing ring);

  const GroundRing& ring() const noexcept { return ring_; }
  RingElement omega() const noexcept { return omega_; }
  RingElement omega_inv() const noexcept { return omega_inv_; }
  std::uint32_t order() const noexcept { return ring_.order(); }
  bool omega_is_generator() const noexcept { return omega_ == ring_.generator(); }
  bool is_trivial() const noexcept { return omega_ == ring_.one(); }

  const LaurentPoly& omega_symbolic() const noexcept { return omega_sym_; }
  const LaurentPoly& omega_inv_symbolic() const noexcept { return omega_inv_sym_; }

  RingElement op(RingElement x, RingElement y) const;
  /// The unique c with op(c, b) = a.
  RingElement unop(RingElement a, RingElement b) const;

  /// Symbolic versions; no reduction by h is performed.
  LaurentPoly op(const LaurentPoly& x, const LaurentPoly& y) const;
  LaurentPoly unop(const LaurentPoly& a, const LaurentPoly& b) const;

  std::string describe() const;

 private:
  AlexanderQuandle(GroundRing ring, RingElement omega, RingElement omega_inv);

  GroundRing ring_;
  RingElement omega_;
  RingElement omega_inv_;
  RingElement one_minus_omega_;
  LaurentPoly omega_sym_;
  LaurentPoly omega_inv_sym_;
  LaurentPoly one_minus_omega_sym_;
};

/// A binary operation on {0, ..., n-1} given by a function; used to check the axioms
/// on operation tables that need not come from an Alexander quandle.
struct OperationTable {
  std::uint32_t size = 0;
  std::function<std::uint32_t(std::uint32_t, std::uint32_t)> op;

  static OperationTable from(const AlexanderQuandle& q);
};

struct AxiomReport {
  bool passed = true;
  /// Which axiom failed: "idempotence", "right-invertibility" or "self-distributivity".
  std::string failed_axiom;
  std::vector<std::uint32_t> witness;

  std::string to_string() const;
};

/// Exhaustively checks a*a = a, unique right division, and (a*b)*c = (a*c)*(b*c).
AxiomReport check_axioms(const OperationTable& table);
AxiomReport check_axioms(const AlexanderQuandle& q);

}  // namespace qv
