#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "qv/arith.hpp"
#include "qv/cochain.hpp"
#include "qv/coloring.hpp"
#include "qv/diagram.hpp"

namespace qv {

struct GroupRingTerm {
  std::int64_t coeff = 0;
  RingElement exponent;
  IntLaurent lift;
};

/// Element of Z[S] written as a sum of c * t^e. Each term also carries an integer
/// Laurent lift of its exponent; terms are keyed by (class, lift), so two lifts of
/// one class stay separate until collapsed.
class GroupRingElement {
 public:
  explicit GroupRingElement(GroundRing ring);

  static GroupRingElement monomial(const GroundRing& ring, RingElement e, std::int64_t coeff = 1);

  const GroundRing& ring() const noexcept { return ring_; }

  /// Uses the augmentation-normalized lift (canonical lift when h(1) = 0 mod p).
  void add_term(std::int64_t coeff, RingElement e);
  /// Lift as given; its class is its reduction.
  void add_term(std::int64_t coeff, const IntLaurent& lift);
  /// Throws InvalidArgument when the lift does not reduce to e.
  void add_term(std::int64_t coeff, RingElement e, const IntLaurent& lift);

  std::vector<GroupRingTerm> terms() const;
  std::map<RingElement, std::int64_t> collapsed() const;
  bool is_zero() const { return collapsed().empty(); }
  std::int64_t eval_t1() const;

  /// Same ring and same class -> coefficient map.
  friend bool operator==(const GroupRingElement& a, const GroupRingElement& b);
  /// Equal including the lifts of every term.
  bool identical(const GroupRingElement& other) const;

  GroupRingElement& operator+=(const GroupRingElement& other);
  friend GroupRingElement operator+(GroupRingElement a, const GroupRingElement& b) { return a += b; }
  friend GroupRingElement operator*(const GroupRingElement& a, const GroupRingElement& b);
  GroupRingElement scaled(std::int64_t c) const;

  /// e.g. `4 + 12*t^(w)`; classes printed by their canonical lift.
  std::string to_string() const;

 private:
  GroundRing ring_;
  std::map<std::pair<std::uint32_t, IntLaurent>, std::int64_t> terms_;
};

std::int64_t groupring_eval_t1(const GroupRingElement& g);

/// Augmentation-normalized lift, or the canonical lift when h(1) = 0 mod p.
IntLaurent default_lift(const GroundRing& ring, RingElement e);

/// YAML text with keys p, h, terms: [{coeff, exp_in_S, lift}].
std::string emit_groupring(const GroupRingElement& g);
void emit_groupring(const GroupRingElement& g, const std::string& path);
/// Throws ParseError (with line and column) on malformed input or unknown fields.
GroupRingElement parse_groupring(const std::string& text);
GroupRingElement read_groupring(const std::string& path);

struct StateSumOptions {
  bool verify_cocycle = true;
  bool diagnostics = false;
  unsigned threads = 1;
};

struct ColoringWeight {
  std::vector<RingElement> arcs;
  RingElement base;  // unbounded-region color (state_sum_3 only)
  RingElement weight;
  LaurentPoly symbolic_weight;
};

struct StateSumResult {
  GroupRingElement value;
  std::vector<ColoringWeight> colorings;  // filled when diagnostics are on
};

/// Sum over colorings of t^{sum of signed f(x, y)}, x the under arc on the right of over arc y.
/// Throws NotACocycle, PolicyInvalid, ArityMismatch.
StateSumResult state_sum_2(const BraidWord& b, const CochainPoly& f, const AlexanderQuandle& q, const ColoringPolicy& policy,
                           const StateSumOptions& options = {});
/// Shadow version with weights phi(z, x, y), z the region west of the crossing. The
/// unbounded region ranges over S unless the policy fixes it.
StateSumResult state_sum_3(const BraidWord& b, const CochainPoly& phi, const AlexanderQuandle& q, const ColoringPolicy& policy,
                           const StateSumOptions& options = {});

/// Everything needed to evaluate one of the two invariants.
struct InvariantConfig {
  int degree = 2;
  CochainPoly cocycle{2, Coords::X, 2};
  AlexanderQuandle quandle;
  ColoringPolicy policy;
  StateSumOptions options;
};

GroupRingElement compute_invariant(const BraidWord& b, const InvariantConfig& config);

}  // namespace qv
