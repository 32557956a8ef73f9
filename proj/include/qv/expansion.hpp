#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qv/diagram.hpp"
#include "qv/invariant.hpp"

namespace qv {

using Rational = boost::multiprecision::cpp_rational;

/// t = e^{a hbar}, w = e^{b hbar}, series truncated after hbar^D.
struct SubstitutionParams {
  GroundRing ring;
  std::int64_t a = 1;
  std::int64_t b = 1;
  int D = 8;
};

/// Numeric check at chi = 1: some integer lift of h (as given, then the balanced
/// one with coefficients in (-p/2, p/2]) vanishes at exp(2 pi i b / (a p)).
/// Throws RelationNotAnnihilated, InvalidArgument (a, b < 1 or D < 0).
void validate_substitution(const SubstitutionParams& params);
/// |h(zeta)| for the lift that came closest.
double relation_residual(const SubstitutionParams& params);

/// Truncated power series in hbar with exact rational coefficients, indices 0..D.
class HbarSeries {
 public:
  explicit HbarSeries(int degree) : coeffs_(static_cast<std::size_t>(degree) + 1) {}

  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  const Rational& operator[](int k) const { return coeffs_.at(k); }
  Rational& operator[](int k) { return coeffs_.at(k); }
  const std::vector<Rational>& coeffs() const noexcept { return coeffs_; }

  HbarSeries& operator+=(const HbarSeries& other);
  HbarSeries& operator-=(const HbarSeries& other);
  friend HbarSeries operator+(HbarSeries a, const HbarSeries& b) { return a += b; }
  friend HbarSeries operator-(HbarSeries a, const HbarSeries& b) { return a -= b; }
  friend HbarSeries operator*(const HbarSeries& a, const HbarSeries& b);
  HbarSeries scaled(const Rational& c) const;
  friend bool operator==(const HbarSeries&, const HbarSeries&) = default;

  /// exp of a series with zero constant term.
  HbarSeries exp() const;

  /// `16 + 144*h^2 + 276*h^3 + ...`
  std::string to_string() const;

 private:
  std::vector<Rational> coeffs_;
};

/// sum over terms of coeff * exp(a hbar E(e^{b hbar})), E the stored lift of each term.
HbarSeries expand(const GroupRingElement& g, const SubstitutionParams& params);

struct VassilievReport {
  std::int64_t p = 2;
  std::vector<Rational> scaled;            // d! * s_d
  std::vector<std::int64_t> residues;      // d! * s_d mod p, 0 where flagged
  std::vector<bool> non_p_integral;        // denominator divisible by p
  /// Lowest degree with a nonzero or flagged residue; nullopt when all vanish.
  std::optional<int> lowest_nonzero() const;
  /// Table `d | u_d | d!*u_d mod p | flags`.
  std::string table(const HbarSeries& s) const;
};

VassilievReport vassiliev_coeffs(const HbarSeries& s, std::int64_t p);

/// Same classes and coefficients, every lift replaced by default_lift.
GroupRingElement relift_default(const GroupRingElement& g);
/// Term `index` (in terms() order) gets lift E + p*c.
GroupRingElement shift_lift(const GroupRingElement& g, std::size_t index, std::int64_t c);

/// sum over resolve_singulars of sign * expand(invariant of the resolved word).
HbarSeries singular_vassiliev(const BraidWord& b, const InvariantConfig& config, const SubstitutionParams& params);

}  // namespace qv
