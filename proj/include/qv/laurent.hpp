#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace qv {

/// Sparse Laurent polynomial in the symbol `w`.
///
/// With modulus 0 the coefficients are integers (an element of Z[w^{±1}]); with a
/// prime modulus p they are residues in [0, p) (an element of F_p[w^{±1}]).
/// Zero coefficients are never stored. Mixing moduli in arithmetic throws.
class Laurent {
 public:
  using Terms = std::map<int, std::int64_t>;

  Laurent() = default;
  explicit Laurent(std::int64_t modulus);

  static Laurent constant(std::int64_t c, std::int64_t modulus = 0);
  static Laurent monomial(std::int64_t c, int exponent, std::int64_t modulus = 0);
  /// Coefficients listed constant-first: coeffs[i] multiplies w^i.
  static Laurent from_coeffs(const std::vector<std::int64_t>& coeffs, std::int64_t modulus = 0);

  std::int64_t modulus() const noexcept { return modulus_; }
  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::int64_t coeff(int exponent) const;
  int min_exponent() const;
  int max_exponent() const;

  /// Value at w = 1 (the augmentation); reduced mod p when the modulus is p.
  std::int64_t augmentation() const;
  /// Formal derivative evaluated at w = 1, i.e. sum_j j*c_j.
  std::int64_t derivative_at_one() const;

  /// Same coefficients reinterpreted: mod p (reducing) or over Z (lifting residues as-is).
  Laurent reduced_mod(std::int64_t p) const;
  Laurent as_integer() const;

  Laurent operator-() const;
  Laurent& operator+=(const Laurent& other);
  Laurent& operator-=(const Laurent& other);
  Laurent& operator*=(const Laurent& other);
  Laurent scaled(std::int64_t c) const;
  Laurent shifted(int exponent) const;
  Laurent pow(unsigned exponent) const;

  friend Laurent operator+(Laurent a, const Laurent& b) { return a += b; }
  friend Laurent operator-(Laurent a, const Laurent& b) { return a -= b; }
  friend Laurent operator*(Laurent a, const Laurent& b) { return a *= b; }

  friend bool operator==(const Laurent&, const Laurent&) = default;
  friend std::strong_ordering operator<=>(const Laurent& a, const Laurent& b);

  /// Text form in the symbol `w`, highest power first, e.g. `2*w^2-w+1`, `w^-2`.
  std::string to_string() const;

 private:
  std::int64_t normalize(std::int64_t c) const;
  void add_term(int exponent, std::int64_t c);

  std::int64_t modulus_ = 0;
  Terms terms_;
};

/// Element of F_p[w^{±1}].
using LaurentPoly = Laurent;
/// Element of Z[w^{±1}].
using IntLaurent = Laurent;

std::int64_t mod_floor(std::int64_t a, std::int64_t m);
std::int64_t mod_inverse(std::int64_t a, std::int64_t p);

}  // namespace qv
