#include "qv/laurent.hpp"

#include <sstream>
#include <vector>

#include "qv/error.hpp"

namespace qv {

std::int64_t mod_floor(std::int64_t a, std::int64_t m) {
  std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}

std::int64_t mod_inverse(std::int64_t a, std::int64_t p) {
  std::int64_t r0 = p, r1 = mod_floor(a, p);
  std::int64_t s0 = 0, s1 = 1;
  while (r1 != 0) {
    std::int64_t q = r0 / r1;
    std::int64_t t = r0 - q * r1;
    r0 = r1;
    r1 = t;
    t = s0 - q * s1;
    s0 = s1;
    s1 = t;
  }
  if (r0 != 1) throw Error(Errc::NotAUnit, std::to_string(a) + " has no inverse mod " + std::to_string(p));
  return mod_floor(s0, p);
}

Laurent::Laurent(std::int64_t modulus) : modulus_(modulus) {
  if (modulus < 0) throw Error(Errc::InvalidArgument, "negative modulus");
}

Laurent Laurent::constant(std::int64_t c, std::int64_t modulus) { return monomial(c, 0, modulus); }

Laurent Laurent::monomial(std::int64_t c, int exponent, std::int64_t modulus) {
  Laurent out(modulus);
  out.add_term(exponent, c);
  return out;
}

Laurent Laurent::from_coeffs(const std::vector<std::int64_t>& coeffs, std::int64_t modulus) {
  Laurent out(modulus);
  for (std::size_t i = 0; i < coeffs.size(); ++i) out.add_term(static_cast<int>(i), coeffs[i]);
  return out;
}

std::int64_t Laurent::normalize(std::int64_t c) const { return modulus_ == 0 ? c : mod_floor(c, modulus_); }

void Laurent::add_term(int exponent, std::int64_t c) {
  c = normalize(c);
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(exponent, c);
  if (!inserted) {
    it->second = normalize(it->second + c);
    if (it->second == 0) terms_.erase(it);
  }
}

std::int64_t Laurent::coeff(int exponent) const {
  auto it = terms_.find(exponent);
  return it == terms_.end() ? 0 : it->second;
}

int Laurent::min_exponent() const { return terms_.empty() ? 0 : terms_.begin()->first; }
int Laurent::max_exponent() const { return terms_.empty() ? 0 : terms_.rbegin()->first; }

std::int64_t Laurent::augmentation() const {
  std::int64_t s = 0;
  for (const auto& [e, c] : terms_) s = normalize(s + c);
  return s;
}

std::int64_t Laurent::derivative_at_one() const {
  std::int64_t s = 0;
  for (const auto& [e, c] : terms_) s = normalize(s + normalize(e) * c);
  return s;
}

Laurent Laurent::reduced_mod(std::int64_t p) const {
  Laurent out(p);
  for (const auto& [e, c] : terms_) out.add_term(e, c);
  return out;
}

Laurent Laurent::as_integer() const {
  Laurent out(0);
  out.terms_ = terms_;
  return out;
}

Laurent Laurent::operator-() const {
  Laurent out(modulus_);
  for (const auto& [e, c] : terms_) out.add_term(e, -c);
  return out;
}

static void check_same(const Laurent& a, const Laurent& b) {
  if (a.modulus() != b.modulus())
    throw Error(Errc::InvalidArgument, "Laurent arithmetic with mismatched moduli " + std::to_string(a.modulus()) +
                                           " and " + std::to_string(b.modulus()));
}

Laurent& Laurent::operator+=(const Laurent& other) {
  check_same(*this, other);
  for (const auto& [e, c] : other.terms_) add_term(e, c);
  return *this;
}

Laurent& Laurent::operator-=(const Laurent& other) {
  check_same(*this, other);
  for (const auto& [e, c] : other.terms_) add_term(e, -c);
  return *this;
}

Laurent& Laurent::operator*=(const Laurent& other) {
  check_same(*this, other);
  Laurent out(modulus_);
  for (const auto& [e1, c1] : terms_)
    for (const auto& [e2, c2] : other.terms_) out.add_term(e1 + e2, normalize(c1 * c2));
  *this = std::move(out);
  return *this;
}

Laurent Laurent::scaled(std::int64_t c) const {
  Laurent out(modulus_);
  c = normalize(c);
  for (const auto& [e, v] : terms_) out.add_term(e, normalize(v * c));
  return out;
}

Laurent Laurent::shifted(int exponent) const {
  Laurent out(modulus_);
  for (const auto& [e, v] : terms_) out.terms_.emplace(e + exponent, v);
  return out;
}

Laurent Laurent::pow(unsigned exponent) const {
  Laurent result = constant(1, modulus_);
  Laurent base = *this;
  while (exponent > 0) {
    if (exponent & 1u) result *= base;
    exponent >>= 1u;
    if (exponent > 0) base *= base;
  }
  return result;
}

std::strong_ordering operator<=>(const Laurent& a, const Laurent& b) {
  if (auto c = a.modulus_ <=> b.modulus_; c != 0) return c;
  return std::lexicographical_compare_three_way(a.terms_.begin(), a.terms_.end(), b.terms_.begin(), b.terms_.end());
}

std::string Laurent::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    auto [e, c] = *it;
    if (c < 0) {
      os << '-';
      c = -c;
    } else if (!first) {
      os << '+';
    }
    first = false;
    if (e == 0) {
      os << c;
      continue;
    }
    if (c != 1) os << c << '*';
    os << 'w';
    if (e != 1) os << '^' << e;
  }
  return os.str();
}

}  // namespace qv
