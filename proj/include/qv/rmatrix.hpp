#pragma once

#include <cstdint>
#include <vector>

#include "qv/cochain.hpp"
#include "qv/diagram.hpp"
#include "qv/invariant.hpp"
#include "qv/quandle.hpp"

namespace qv {

/// Monomial matrix on V (x) V, V with basis S: column c = (x, y) has its single
/// entry t^{exponent[c]} in row target[c]. Basis index of (x, y) is x*q + y.
class RMatrix {
 public:
  /// Throws InvalidArgument unless target is a permutation of size q^2.
  static RMatrix from_arrays(GroundRing ring, std::vector<std::uint32_t> target, std::vector<RingElement> exponent);
  static RMatrix identity(const GroundRing& ring);

  const GroundRing& ring() const noexcept { return ring_; }
  std::uint32_t q() const noexcept { return q_; }
  std::uint32_t dimension() const noexcept { return q_ * q_; }
  std::uint32_t target(std::uint32_t col) const { return target_[col]; }
  RingElement exponent(std::uint32_t col) const { return exponent_[col]; }
  RMatrix inverse() const;

  friend bool operator==(const RMatrix& a, const RMatrix& b) {
    return a.q_ == b.q_ && a.target_ == b.target_ && a.exponent_ == b.exponent_;
  }

 private:
  RMatrix(GroundRing ring, std::uint32_t q, std::vector<std::uint32_t> target, std::vector<RingElement> exponent)
      : ring_(std::move(ring)), q_(q), target_(std::move(target)), exponent_(std::move(exponent)) {}

  GroundRing ring_;
  std::uint32_t q_;
  std::vector<std::uint32_t> target_;
  std::vector<RingElement> exponent_;
};

/// (x, y) -> (y, x*y) with entry t^{f(x,y)}. Throws NotACocycle when verify is set.
RMatrix build_r_matrix(const CochainPoly& f, const AlexanderQuandle& q, bool verify = true);

/// (R (x) 1)(1 (x) R)(R (x) 1) = (1 (x) R)(R (x) 1)(1 (x) R), exactly.
bool check_yang_baxter(const RMatrix& r);

/// An integer q x q matrix, row-major.
struct Endomorphism {
  std::uint32_t q = 0;
  std::vector<std::int64_t> entries;

  static Endomorphism identity(std::uint32_t q);
  static Endomorphism zero(std::uint32_t q);
  std::int64_t at(std::uint32_t row, std::uint32_t col) const { return entries[std::size_t{row} * q + col]; }
};

struct MarkovReport {
  bool trace_positive = false;  // trace_2((1 (x) h) R) = id
  bool trace_negative = false;  // trace_2((1 (x) h) R^{-1}) = id
  bool commutes = false;        // R (h (x) h) = (h (x) h) R
  bool passed() const { return trace_positive && trace_negative && commutes; }
};

MarkovReport markov_report(const RMatrix& r, const Endomorphism& h);
bool markov_conditions(const RMatrix& r);
bool markov_conditions(const RMatrix& r, const Endomorphism& h);

/// trace(psi_n(b)) with h = identity. Letters act in reading order. Throws SingularPresent.
GroupRingElement operator_invariant(const BraidWord& b, const RMatrix& r);

}  // namespace qv
