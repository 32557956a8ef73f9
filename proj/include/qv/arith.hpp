#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qv/laurent.hpp"

namespace qv {

/// An element of the ground ring S, identified by its position in the ring's
/// enumeration order (lexicographic on the coefficient vector c0, c1, ..., c_{m-1}).
struct RingElement {
  std::uint32_t index = 0;
  friend auto operator<=>(const RingElement&, const RingElement&) = default;
};

enum class RingOp { Add, Sub, Mul };

/// The finite ring S = F_p[w]/(h(w)) with h monic mod p and h(0) a unit.
///
/// GroundRing is a cheap-to-copy handle onto immutable shared state (addition and
/// multiplication tables), so values can be passed around freely and used
/// concurrently.
class GroundRing {
 public:
  /// Orders beyond this are rejected; tables are q*q.
  static constexpr std::uint32_t kMaxOrder = 1024;

  /// Throws NonPrime, NonMonic, OmegaNotUnit, TooLarge.
  static GroundRing create(std::int64_t p, std::vector<std::int64_t> h_coeffs);

  std::int64_t p() const noexcept;
  int degree() const noexcept;
  std::uint32_t order() const noexcept;
  /// h exactly as supplied (integer lift used by normalized_lift), constant-first.
  const std::vector<std::int64_t>& modulus() const noexcept;
  /// h reduced mod p, constant-first.
  const std::vector<std::int64_t>& reduced_modulus() const noexcept;
  bool is_field() const noexcept;

  RingElement zero() const noexcept { return RingElement{0}; }
  RingElement one() const;
  RingElement generator() const;
  RingElement from_int(std::int64_t c) const;
  RingElement from_coeffs(const std::vector<std::int64_t>& coeffs) const;
  std::vector<std::int64_t> coeffs(RingElement x) const;
  std::vector<RingElement> elements() const;

  RingElement add(RingElement x, RingElement y) const;
  RingElement sub(RingElement x, RingElement y) const;
  RingElement mul(RingElement x, RingElement y) const;
  RingElement neg(RingElement x) const;
  RingElement arith(RingOp op, RingElement x, RingElement y) const;
  RingElement pow(RingElement x, std::int64_t e) const;

  /// Inverse via extended gcd of the lift of x with h over F_p. Throws NotAUnit.
  RingElement invert(RingElement x) const;
  std::optional<RingElement> try_invert(RingElement x) const;
  bool is_unit(RingElement x) const;

  /// Image of f under F_p[w^{±1}] -> S (integer Laurent polynomials are reduced mod p first).
  RingElement reduce(const Laurent& f) const;
  /// Integer lift with coefficients in [0, p) and degree < m.
  IntLaurent canonical_lift(RingElement x) const;
  /// Canonical lift plus k*h, k in [0, p), so that the value at w = 1 is 0 mod p.
  /// Throws AugmentationSingular when h(1) = 0 mod p.
  IntLaurent normalized_lift(RingElement x) const;
  bool augmentation_invertible() const;

  /// Parses an expression in `w` (e.g. `1+2*w`) and reduces it into S.
  RingElement parse(std::string_view text) const;
  std::string format(RingElement x) const;
  /// `--p 3 --h 1,2,1` style description.
  std::string describe() const;

  bool same_ring(const GroundRing& other) const noexcept;

 private:
  struct Impl;
  explicit GroundRing(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}
  std::shared_ptr<const Impl> impl_;
};

bool is_prime(std::int64_t n);

}  // namespace qv
