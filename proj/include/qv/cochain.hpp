#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "qv/arith.hpp"
#include "qv/expr.hpp"
#include "qv/quandle.hpp"

namespace qv {

/// Which variables a cochain polynomial is written in: the colors x_1..x_n, or
/// U_1 = x_1 - x_2, ..., U_{n-1} = x_{n-1} - x_n, U_n = x_n.
enum class Coords { X, U };

/// A quandle n-cochain as a polynomial in n variables with coefficients in
/// F_p[w^{±1}] (or Z[w^{±1}] when the modulus is 0).
class CochainPoly {
 public:
  using Monomial = std::vector<int>;
  using Terms = std::map<Monomial, Laurent>;

  CochainPoly(int nvars, Coords coords, std::int64_t modulus);

  static CochainPoly constant(const Laurent& c, int nvars, Coords coords);
  static CochainPoly variable(int index, int nvars, Coords coords, std::int64_t modulus);
  static CochainPoly monomial(const Laurent& c, Monomial exps, Coords coords);

  int nvars() const noexcept { return nvars_; }
  Coords coords() const noexcept { return coords_; }
  std::int64_t modulus() const noexcept { return modulus_; }
  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  int max_exponent() const;

  void add_term(const Monomial& exps, const Laurent& c);

  CochainPoly operator-() const;
  CochainPoly& operator+=(const CochainPoly& other);
  CochainPoly& operator-=(const CochainPoly& other);
  CochainPoly& operator*=(const CochainPoly& other);
  CochainPoly scaled(const Laurent& c) const;
  CochainPoly pow(unsigned e) const;

  friend CochainPoly operator+(CochainPoly a, const CochainPoly& b) { return a += b; }
  friend CochainPoly operator-(CochainPoly a, const CochainPoly& b) { return a -= b; }
  friend CochainPoly operator*(CochainPoly a, const CochainPoly& b) { return a *= b; }
  friend bool operator==(const CochainPoly&, const CochainPoly&) = default;

  /// Substitutes subs[i] for variable i. All substitutes share a variable count and
  /// coordinate system, which the result inherits.
  CochainPoly compose(const std::vector<CochainPoly>& subs) const;

  CochainPoly to_u() const;
  CochainPoly to_x() const;

  CochainPoly reduced_mod(std::int64_t p) const;
  /// Exact division of every integer coefficient. Throws NotDivisibleByP.
  CochainPoly divided_by(std::int64_t d) const;

  /// Graded-lexicographic text form, e.g. `U1*U2^2` or `(w+1)*x*y`.
  std::string to_string() const;

 private:
  int nvars_;
  Coords coords_;
  std::int64_t modulus_;
  Terms terms_;
};

std::string variable_name(Coords coords, int nvars, int index);

/// Reads a polynomial in x,y,z (X coordinates) or U1,U2,... (U coordinates) with
/// coefficients in w. The variable count defaults to the largest variable used
/// (at least 2); pass `nvars` to force it.
CochainPoly parse_cochain(std::string_view text, std::int64_t p, int nvars = 0);

/// Symbolic evaluation at colors x_1..x_n (U coordinates are derived from them).
LaurentPoly evaluate(const CochainPoly& f, std::span<const LaurentPoly> colors);
/// Evaluation at colors in S.
RingElement evaluate(const CochainPoly& f, const GroundRing& ring, std::span<const RingElement> colors);

/// A cochain specialised to a ring for repeated evaluation.
class CompiledCochain {
 public:
  CompiledCochain(const CochainPoly& f, const GroundRing& ring);
  int nvars() const noexcept { return nvars_; }
  RingElement operator()(std::span<const RingElement> colors) const;

 private:
  GroundRing ring_;
  int nvars_;
  bool ucoords_;
  int max_exp_;
  std::vector<std::pair<RingElement, std::vector<int>>> terms_;
};

/// All q^n values of f, indexed in mixed radix with x_1 most significant.
std::vector<RingElement> tabulate(const CochainPoly& f, const GroundRing& ring);

/// The coboundary in U coordinates:
///   sum_{i=1}^{n} (-1)^{i-1} ( f(wU1,..,wU_{i-1}, wU_i+U_{i+1}, U_{i+2},..) - f(U1,..,U_{i-1}, U_i+U_{i+1}, U_{i+2},..) ).
/// As a function of the colors this is minus the x-coordinate coboundary.
CochainPoly coboundary(const CochainPoly& f, const LaurentPoly& omega);
CochainPoly coboundary(const CochainPoly& f);

struct CocycleReport {
  bool cocycle = true;
  std::string reason;
};

/// Brute force over S^n and S^{n+1}: degeneracy and vanishing of the x-coordinate coboundary.
CocycleReport check_cocycle(const CochainPoly& f, const AlexanderQuandle& q);
bool is_cocycle(const CochainPoly& f, const AlexanderQuandle& q);

/// chi(U1, U2) = sum_{j=1}^{p-1} (-1)^{j-1} j^{-1} U1^{p-j} U2^j over F_p.
CochainPoly chi(std::int64_t p);

struct BasisElement {
  std::string family;        // "H2", "I0", "I1", "I2", "I3", "I4-1", ..., "I4-5"
  std::vector<int> indices;  // family-specific (v,u[,t[,s]])
  CochainPoly poly;

  std::string label() const;
};

/// Basis of H^2_Q(X; F_q): U1^{p^v} U2^{p^u} with w^{p^v+p^u} = 1, 0 <= v < u < m.
/// Throws NotAField, OmegaTrivial.
std::vector<BasisElement> basis_h2(const AlexanderQuandle& q);
/// Basis of H^3_Q(X; F_q) from the families I0, I1, I2, I3, I4-1..I4-5.
std::vector<BasisElement> basis_h3(const AlexanderQuandle& q);

/// (x-y) * (1/p) * (y^p - z^p - (y - z + w^{-1} z)^p + (w^{-1} z)^p), reduced mod p.
/// Throws InvalidArgument for p = 2, NotDivisibleByP on an expansion defect.
CochainPoly mochizuki_cocycle(const AlexanderQuandle& q);
/// (x-y) y^2 in X coordinates.
CochainPoly example111_cocycle(std::int64_t p);

struct NamedCocycle {
  std::string name;
  int degree = 0;
  CochainPoly poly;
};

/// Resolves `mochizuki-p3`, `example111`, `basis2:v,u`, `basis3:<family>:<indices>`.
/// Throws UnknownCocycle.
NamedCocycle named_cocycle(std::string_view name, const AlexanderQuandle& q);

}  // namespace qv
