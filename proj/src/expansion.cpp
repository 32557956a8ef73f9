#include "qv/expansion.hpp"

#include <cmath>
#include <complex>
#include <numbers>
#include <sstream>

#include "qv/error.hpp"

namespace qv {

namespace {

using Complex = std::complex<long double>;

long double residual(const std::vector<std::int64_t>& h, Complex zeta) {
  Complex acc = 0;
  for (auto it = h.rbegin(); it != h.rend(); ++it) acc = acc * zeta + static_cast<long double>(*it);
  return std::abs(acc);
}

std::vector<std::int64_t> balanced(const std::vector<std::int64_t>& h, std::int64_t p) {
  std::vector<std::int64_t> out;
  for (auto c : h) {
    std::int64_t r = mod_floor(c, p);
    if (2 * r > p) r -= p;
    out.push_back(r);
  }
  return out;
}

Rational mod_p_rational(const Rational& r, std::int64_t p, bool& ok) {
  using boost::multiprecision::cpp_int;
  const cpp_int num = boost::multiprecision::numerator(r), den = boost::multiprecision::denominator(r);
  const std::int64_t d = static_cast<std::int64_t>(den % p);
  if (d == 0) {
    ok = false;
    return 0;
  }
  ok = true;
  cpp_int n = num % p;
  if (n < 0) n += p;
  return Rational(static_cast<std::int64_t>(n) * mod_inverse(d, p) % p);
}

}  // namespace

double relation_residual(const SubstitutionParams& params) {
  const std::int64_t p = params.ring.p();
  const long double angle = 2 * std::numbers::pi_v<long double> * params.b / (static_cast<long double>(params.a) * p);
  const Complex zeta = std::polar(1.0L, angle);
  return static_cast<double>(std::min(residual(params.ring.modulus(), zeta), residual(balanced(params.ring.modulus(), p), zeta)));
}

void validate_substitution(const SubstitutionParams& params) {
  if (params.a < 1 || params.b < 1) throw Error(Errc::InvalidArgument, "a and b must be positive integers");
  if (params.D < 0) throw Error(Errc::InvalidArgument, "truncation degree must be >= 0");
  const double r = relation_residual(params);
  if (!(r < 1e-9)) {
    std::ostringstream msg;
    msg << "h(exp(2 pi i * " << params.b << "/(" << params.a << "*" << params.ring.p() << "))) has modulus " << r;
    throw Error(Errc::RelationNotAnnihilated, msg.str());
  }
}

HbarSeries& HbarSeries::operator+=(const HbarSeries& other) {
  if (other.degree() != degree()) throw Error(Errc::InvalidArgument, "series truncation degrees differ");
  for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] += other.coeffs_[k];
  return *this;
}

HbarSeries& HbarSeries::operator-=(const HbarSeries& other) {
  if (other.degree() != degree()) throw Error(Errc::InvalidArgument, "series truncation degrees differ");
  for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] -= other.coeffs_[k];
  return *this;
}

HbarSeries operator*(const HbarSeries& a, const HbarSeries& b) {
  if (a.degree() != b.degree()) throw Error(Errc::InvalidArgument, "series truncation degrees differ");
  HbarSeries out(a.degree());
  for (int i = 0; i <= a.degree(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (int j = 0; i + j <= a.degree(); ++j) out.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return out;
}

HbarSeries HbarSeries::scaled(const Rational& c) const {
  HbarSeries out = *this;
  for (auto& x : out.coeffs_) x *= c;
  return out;
}

HbarSeries HbarSeries::exp() const {
  if (coeffs_[0] != 0) throw Error(Errc::InvalidArgument, "exp needs a zero constant term");
  // y' = x' y, so n y_n = sum_k k x_k y_{n-k}
  HbarSeries y(degree());
  y.coeffs_[0] = 1;
  for (int n = 1; n <= degree(); ++n) {
    Rational acc = 0;
    for (int k = 1; k <= n; ++k)
      if (coeffs_[k] != 0) acc += Rational(k) * coeffs_[k] * y.coeffs_[n - k];
    y.coeffs_[n] = acc / n;
  }
  return y;
}

std::string HbarSeries::to_string() const {
  std::ostringstream out;
  bool first = true;
  for (int k = 0; k <= degree(); ++k) {
    const Rational& c = coeffs_[k];
    if (c == 0) continue;
    Rational mag = c < 0 ? Rational(-c) : c;
    if (!first) out << (c < 0 ? " - " : " + ");
    else if (c < 0) out << "-";
    first = false;
    const bool unit = mag == 1 && k > 0;
    if (!unit) {
      if (boost::multiprecision::denominator(mag) != 1 && k > 0) out << "(" << mag << ")";
      else out << mag;
    }
    if (k > 0) out << (unit ? "" : "*") << "h" << (k > 1 ? "^" + std::to_string(k) : "");
  }
  if (first) out << "0";
  out << " + O(h^" << degree() + 1 << ")";
  return out.str();
}

HbarSeries expand(const GroupRingElement& g, const SubstitutionParams& params) {
  const int D = params.D;
  HbarSeries total(D);
  for (const auto& term : g.terms()) {
    // X = a hbar sum_j E_j e^{b j hbar}; [hbar^{k+1}] X = a sum_j E_j (b j)^k / k!
    HbarSeries x(D);
    Rational factorial = 1;
    for (int k = 0; k + 1 <= D; ++k) {
      if (k > 0) factorial *= k;
      Rational acc = 0;
      for (const auto& [j, e] : term.lift.terms()) {
        boost::multiprecision::cpp_int power = 1;
        for (int i = 0; i < k; ++i) power *= params.b * j;
        acc += Rational(e) * Rational(power);
      }
      x[k + 1] = Rational(params.a) * acc / factorial;
    }
    total += x.exp().scaled(Rational(term.coeff));
  }
  return total;
}

std::optional<int> VassilievReport::lowest_nonzero() const {
  for (std::size_t d = 0; d < residues.size(); ++d)
    if (residues[d] != 0 || non_p_integral[d]) return static_cast<int>(d);
  return std::nullopt;
}

std::string VassilievReport::table(const HbarSeries& s) const {
  std::ostringstream out;
  out << "d | u_d | d!*u_d mod " << p << " | flags\n";
  for (std::size_t d = 0; d < residues.size(); ++d) {
    out << d << " | " << s[static_cast<int>(d)] << " | ";
    if (non_p_integral[d]) out << "- | NonPIntegral\n";
    else out << residues[d] << " |\n";
  }
  return out.str();
}

VassilievReport vassiliev_coeffs(const HbarSeries& s, std::int64_t p) {
  VassilievReport rep;
  rep.p = p;
  Rational factorial = 1;
  for (int d = 0; d <= s.degree(); ++d) {
    if (d > 0) factorial *= d;
    Rational v = factorial * s[d];
    bool ok = true;
    Rational r = mod_p_rational(v, p, ok);
    rep.scaled.push_back(v);
    rep.residues.push_back(ok ? static_cast<std::int64_t>(boost::multiprecision::numerator(r)) : 0);
    rep.non_p_integral.push_back(!ok);
  }
  return rep;
}

GroupRingElement relift_default(const GroupRingElement& g) {
  GroupRingElement out(g.ring());
  for (const auto& t : g.terms()) out.add_term(t.coeff, t.exponent);
  return out;
}

GroupRingElement shift_lift(const GroupRingElement& g, std::size_t index, std::int64_t c) {
  auto terms = g.terms();
  if (index >= terms.size()) throw Error(Errc::InvalidArgument, "term index out of range");
  GroupRingElement out(g.ring());
  for (std::size_t i = 0; i < terms.size(); ++i) {
    IntLaurent lift = terms[i].lift;
    if (i == index) lift += IntLaurent::constant(g.ring().p() * c);
    out.add_term(terms[i].coeff, terms[i].exponent, lift);
  }
  return out;
}

HbarSeries singular_vassiliev(const BraidWord& b, const InvariantConfig& config, const SubstitutionParams& params) {
  validate_substitution(params);
  HbarSeries total(params.D);
  for (const auto& [sign, word] : resolve_singulars(b)) {
    HbarSeries s = expand(compute_invariant(word, config), params);
    if (sign > 0) total += s;
    else total -= s;
  }
  return total;
}

}  // namespace qv
