#include "qv/arith.hpp"

#include <sstream>

#include "qv/error.hpp"
#include "qv/expr.hpp"

namespace qv {
namespace {

using Poly = std::vector<std::int64_t>;  // constant-first, over F_p

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

Poly poly_sub(Poly a, const Poly& b, std::int64_t p) {
  if (a.size() < b.size()) a.resize(b.size(), 0);
  for (std::size_t i = 0; i < b.size(); ++i) a[i] = mod_floor(a[i] - b[i], p);
  trim(a);
  return a;
}

Poly poly_mul(const Poly& a, const Poly& b, std::int64_t p) {
  if (a.empty() || b.empty()) return {};
  Poly out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] = (out[i + j] + a[i] * b[j]) % p;
  trim(out);
  return out;
}

// Quotient and remainder of a by b (b nonzero) over F_p.
std::pair<Poly, Poly> poly_divmod(Poly a, const Poly& b, std::int64_t p) {
  trim(a);
  if (a.size() < b.size()) return {{}, a};
  Poly q(a.size() - b.size() + 1, 0);
  std::int64_t lead_inv = mod_inverse(b.back(), p);
  while (!a.empty() && a.size() >= b.size()) {
    std::size_t shift = a.size() - b.size();
    std::int64_t c = (a.back() * lead_inv) % p;
    q[shift] = c;
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] = mod_floor(a[shift + i] - c * b[i], p);
    trim(a);
  }
  trim(q);
  return {q, a};
}

}  // namespace

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

struct GroundRing::Impl {
  std::int64_t p = 0;
  int m = 0;
  std::uint32_t q = 0;
  Poly h_given;
  Poly h;  // reduced, monic
  std::vector<std::uint32_t> add, mul;
  std::vector<std::uint32_t> neg;
  std::vector<std::int64_t> inv;  // -1 when not a unit
  bool field = false;

  std::uint32_t encode(const Poly& c) const {
    std::uint32_t idx = 0;
    for (int i = 0; i < m; ++i) idx = idx * static_cast<std::uint32_t>(p) + static_cast<std::uint32_t>(i < static_cast<int>(c.size()) ? c[i] : 0);
    return idx;
  }

  Poly decode(std::uint32_t idx) const {
    Poly c(m, 0);
    for (int i = m - 1; i >= 0; --i) {
      c[i] = idx % p;
      idx /= static_cast<std::uint32_t>(p);
    }
    return c;
  }

  // Reduce an arbitrary F_p polynomial modulo h.
  Poly reduce_poly(Poly a) const { return poly_divmod(std::move(a), h, p).second; }
};

GroundRing GroundRing::create(std::int64_t p, std::vector<std::int64_t> h_coeffs) {
  if (!is_prime(p)) throw Error(Errc::NonPrime, std::to_string(p) + " is not prime");
  if (h_coeffs.size() < 2) throw Error(Errc::NonMonic, "modulus must have degree >= 1");
  Poly h(h_coeffs.size());
  for (std::size_t i = 0; i < h.size(); ++i) h[i] = mod_floor(h_coeffs[i], p);
  if (h.back() != 1) throw Error(Errc::NonMonic, "leading coefficient of h is not 1 mod p");
  if (h.front() == 0) throw Error(Errc::OmegaNotUnit, "h(0) = 0 mod p, so w is not invertible");
  const int m = static_cast<int>(h.size()) - 1;
  std::uint64_t q = 1;
  for (int i = 0; i < m; ++i) {
    q *= static_cast<std::uint64_t>(p);
    if (q > kMaxOrder) throw Error(Errc::TooLarge, "ring order exceeds " + std::to_string(kMaxOrder));
  }

  auto impl = std::make_shared<Impl>();
  impl->p = p;
  impl->m = m;
  impl->q = static_cast<std::uint32_t>(q);
  impl->h_given = std::move(h_coeffs);
  impl->h = h;
  const std::uint32_t n = impl->q;
  impl->add.resize(std::size_t{n} * n);
  impl->mul.resize(std::size_t{n} * n);
  impl->neg.resize(n);
  std::vector<Poly> decoded(n);
  for (std::uint32_t i = 0; i < n; ++i) decoded[i] = impl->decode(i);
  for (std::uint32_t i = 0; i < n; ++i) {
    Poly ng(m);
    for (int k = 0; k < m; ++k) ng[k] = mod_floor(-decoded[i][k], p);
    impl->neg[i] = impl->encode(ng);
    for (std::uint32_t j = 0; j < n; ++j) {
      Poly s(m);
      for (int k = 0; k < m; ++k) s[k] = (decoded[i][k] + decoded[j][k]) % p;
      impl->add[std::size_t{i} * n + j] = impl->encode(s);
      Poly prod = impl->reduce_poly(poly_mul(decoded[i], decoded[j], p));
      impl->mul[std::size_t{i} * n + j] = impl->encode(prod);
    }
  }

  // Inverses by extended Euclid against h.
  impl->inv.assign(n, -1);
  bool field = true;
  for (std::uint32_t i = 1; i < n; ++i) {
    Poly r0 = h, r1 = decoded[i];
    trim(r1);
    Poly s0{}, s1{1};
    while (!r1.empty()) {
      auto [quot, rem] = poly_divmod(r0, r1, p);
      Poly s2 = poly_sub(s0, poly_mul(quot, s1, p), p);
      r0 = std::move(r1);
      r1 = std::move(rem);
      s0 = std::move(s1);
      s1 = std::move(s2);
    }
    if (r0.size() == 1) {
      std::int64_t c = mod_inverse(r0[0], p);
      Poly inv = s0;
      for (auto& v : inv) v = (v * c) % p;
      impl->inv[i] = impl->encode(impl->reduce_poly(inv));
    } else {
      field = false;
    }
  }
  impl->field = field;
  return GroundRing(std::move(impl));
}

std::int64_t GroundRing::p() const noexcept { return impl_->p; }
int GroundRing::degree() const noexcept { return impl_->m; }
std::uint32_t GroundRing::order() const noexcept { return impl_->q; }
const std::vector<std::int64_t>& GroundRing::modulus() const noexcept { return impl_->h_given; }
const std::vector<std::int64_t>& GroundRing::reduced_modulus() const noexcept { return impl_->h; }
bool GroundRing::is_field() const noexcept { return impl_->field; }

RingElement GroundRing::one() const { return from_int(1); }

RingElement GroundRing::generator() const {
  Poly w{0, 1};
  return RingElement{impl_->encode(impl_->reduce_poly(w))};
}

RingElement GroundRing::from_int(std::int64_t c) const { return from_coeffs({c}); }

RingElement GroundRing::from_coeffs(const std::vector<std::int64_t>& coeffs) const {
  Poly c(coeffs.size());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = mod_floor(coeffs[i], impl_->p);
  trim(c);
  return RingElement{impl_->encode(impl_->reduce_poly(c))};
}

std::vector<std::int64_t> GroundRing::coeffs(RingElement x) const { return impl_->decode(x.index); }

std::vector<RingElement> GroundRing::elements() const {
  std::vector<RingElement> out(impl_->q);
  for (std::uint32_t i = 0; i < impl_->q; ++i) out[i] = RingElement{i};
  return out;
}

RingElement GroundRing::add(RingElement x, RingElement y) const {
  return RingElement{impl_->add[std::size_t{x.index} * impl_->q + y.index]};
}

RingElement GroundRing::sub(RingElement x, RingElement y) const { return add(x, neg(y)); }

RingElement GroundRing::mul(RingElement x, RingElement y) const {
  return RingElement{impl_->mul[std::size_t{x.index} * impl_->q + y.index]};
}

RingElement GroundRing::neg(RingElement x) const { return RingElement{impl_->neg[x.index]}; }

RingElement GroundRing::arith(RingOp op, RingElement x, RingElement y) const {
  switch (op) {
    case RingOp::Add: return add(x, y);
    case RingOp::Sub: return sub(x, y);
    case RingOp::Mul: return mul(x, y);
  }
  return zero();
}

RingElement GroundRing::pow(RingElement x, std::int64_t e) const {
  if (e < 0) {
    x = invert(x);
    e = -e;
  }
  RingElement result = one();
  while (e > 0) {
    if (e & 1) result = mul(result, x);
    e >>= 1;
    if (e > 0) x = mul(x, x);
  }
  return result;
}

std::optional<RingElement> GroundRing::try_invert(RingElement x) const {
  std::int64_t v = impl_->inv[x.index];
  if (v < 0) return std::nullopt;
  return RingElement{static_cast<std::uint32_t>(v)};
}

RingElement GroundRing::invert(RingElement x) const {
  auto inv = try_invert(x);
  if (!inv) throw Error(Errc::NotAUnit, format(x) + " is not a unit in " + describe());
  return *inv;
}

bool GroundRing::is_unit(RingElement x) const { return impl_->inv[x.index] >= 0; }

RingElement GroundRing::reduce(const Laurent& f) const {
  if (f.modulus() != 0 && f.modulus() != impl_->p)
    throw Error(Errc::InvalidArgument, "Laurent polynomial mod " + std::to_string(f.modulus()) + " reduced into ring mod " +
                                           std::to_string(impl_->p));
  RingElement acc = zero();
  if (f.is_zero()) return acc;
  const RingElement w = generator();
  // Shift by w^{-lo} so all exponents are non-negative, then multiply back.
  const int lo = std::min(0, f.min_exponent());
  Poly c(static_cast<std::size_t>(f.max_exponent() - lo + 1), 0);
  for (const auto& [e, v] : f.terms()) c[e - lo] = mod_floor(v, impl_->p);
  trim(c);
  acc = RingElement{impl_->encode(impl_->reduce_poly(c))};
  if (lo < 0) acc = mul(acc, pow(invert(w), -lo));
  return acc;
}

IntLaurent GroundRing::canonical_lift(RingElement x) const { return IntLaurent::from_coeffs(coeffs(x)); }

bool GroundRing::augmentation_invertible() const {
  std::int64_t h1 = 0;
  for (auto c : impl_->h_given) h1 = mod_floor(h1 + c, impl_->p);
  return h1 != 0;
}

IntLaurent GroundRing::normalized_lift(RingElement x) const {
  const std::int64_t p = impl_->p;
  std::int64_t h1 = 0;
  for (auto c : impl_->h_given) h1 = mod_floor(h1 + c, p);
  if (h1 == 0) throw Error(Errc::AugmentationSingular, "h(1) = 0 mod p for " + describe());
  IntLaurent e0 = canonical_lift(x);
  const std::int64_t k = mod_floor(-e0.augmentation() * mod_inverse(h1, p), p);
  if (k == 0) return e0;
  return e0 + IntLaurent::from_coeffs(impl_->h_given).scaled(k);
}

RingElement GroundRing::parse(std::string_view text) const { return reduce(parse_laurent(text)); }

std::string GroundRing::format(RingElement x) const { return canonical_lift(x).to_string(); }

std::string GroundRing::describe() const {
  std::ostringstream os;
  os << "--p " << impl_->p << " --h ";
  for (std::size_t i = 0; i < impl_->h_given.size(); ++i) os << (i ? "," : "") << impl_->h_given[i];
  return os.str();
}

bool GroundRing::same_ring(const GroundRing& other) const noexcept {
  return impl_ == other.impl_ || (impl_->p == other.impl_->p && impl_->h == other.impl_->h);
}

}  // namespace qv
