#include "qv/cochain.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "qv/error.hpp"

namespace qv {

CochainPoly::CochainPoly(int nvars, Coords coords, std::int64_t modulus)
    : nvars_(nvars), coords_(coords), modulus_(modulus) {
  if (nvars < 0) throw Error(Errc::InvalidArgument, "negative variable count");
}

CochainPoly CochainPoly::constant(const Laurent& c, int nvars, Coords coords) {
  CochainPoly out(nvars, coords, c.modulus());
  out.add_term(Monomial(nvars, 0), c);
  return out;
}

CochainPoly CochainPoly::variable(int index, int nvars, Coords coords, std::int64_t modulus) {
  if (index < 0 || index >= nvars) throw Error(Errc::IndexOutOfRange, "variable index " + std::to_string(index));
  Monomial e(nvars, 0);
  e[index] = 1;
  CochainPoly out(nvars, coords, modulus);
  out.add_term(e, Laurent::constant(1, modulus));
  return out;
}

CochainPoly CochainPoly::monomial(const Laurent& c, Monomial exps, Coords coords) {
  CochainPoly out(static_cast<int>(exps.size()), coords, c.modulus());
  out.add_term(exps, c);
  return out;
}

int CochainPoly::max_exponent() const {
  int m = 0;
  for (const auto& [e, c] : terms_)
    for (int x : e) m = std::max(m, x);
  return m;
}

void CochainPoly::add_term(const Monomial& exps, const Laurent& c) {
  if (static_cast<int>(exps.size()) != nvars_) throw Error(Errc::ArityMismatch, "monomial has wrong arity");
  if (c.is_zero()) return;
  if (c.modulus() != modulus_) throw Error(Errc::InvalidArgument, "coefficient modulus mismatch");
  auto it = terms_.find(exps);
  if (it == terms_.end()) {
    terms_.emplace(exps, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

namespace {

void check_compatible(const CochainPoly& a, const CochainPoly& b) {
  if (a.nvars() != b.nvars() || a.coords() != b.coords() || a.modulus() != b.modulus())
    throw Error(Errc::ArityMismatch, "incompatible cochain polynomials");
}

}  // namespace

CochainPoly CochainPoly::operator-() const {
  CochainPoly out(nvars_, coords_, modulus_);
  for (const auto& [e, c] : terms_) out.terms_.emplace(e, -c);
  return out;
}

CochainPoly& CochainPoly::operator+=(const CochainPoly& other) {
  check_compatible(*this, other);
  for (const auto& [e, c] : other.terms_) add_term(e, c);
  return *this;
}

CochainPoly& CochainPoly::operator-=(const CochainPoly& other) {
  check_compatible(*this, other);
  for (const auto& [e, c] : other.terms_) add_term(e, -c);
  return *this;
}

CochainPoly& CochainPoly::operator*=(const CochainPoly& other) {
  check_compatible(*this, other);
  CochainPoly out(nvars_, coords_, modulus_);
  Monomial e(nvars_);
  for (const auto& [e1, c1] : terms_)
    for (const auto& [e2, c2] : other.terms_) {
      for (int i = 0; i < nvars_; ++i) e[i] = e1[i] + e2[i];
      out.add_term(e, c1 * c2);
    }
  *this = std::move(out);
  return *this;
}

CochainPoly CochainPoly::scaled(const Laurent& c) const {
  CochainPoly out(nvars_, coords_, modulus_);
  for (const auto& [e, v] : terms_) out.add_term(e, v * c);
  return out;
}

CochainPoly CochainPoly::pow(unsigned e) const {
  CochainPoly result = constant(Laurent::constant(1, modulus_), nvars_, coords_);
  CochainPoly base = *this;
  while (e > 0) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e > 0) base *= base;
  }
  return result;
}

CochainPoly CochainPoly::compose(const std::vector<CochainPoly>& subs) const {
  if (static_cast<int>(subs.size()) != nvars_) throw Error(Errc::ArityMismatch, "compose needs one substitute per variable");
  if (subs.empty()) return *this;
  const int n = subs.front().nvars();
  const Coords coords = subs.front().coords();
  for (const auto& s : subs) {
    if (s.nvars() != n || s.coords() != coords || s.modulus() != modulus_)
      throw Error(Errc::ArityMismatch, "substitutes are incompatible");
  }
  std::vector<std::vector<CochainPoly>> powers(nvars_);
  for (int i = 0; i < nvars_; ++i) powers[i].push_back(constant(Laurent::constant(1, modulus_), n, coords));
  auto power_of = [&](int i, int k) -> const CochainPoly& {
    while (static_cast<int>(powers[i].size()) <= k) powers[i].push_back(powers[i].back() * subs[i]);
    return powers[i][k];
  };
  CochainPoly out(n, coords, modulus_);
  for (const auto& [e, c] : terms_) {
    CochainPoly term = constant(c, n, coords);
    for (int i = 0; i < nvars_; ++i)
      if (e[i] > 0) term *= power_of(i, e[i]);
    out += term;
  }
  return out;
}

CochainPoly CochainPoly::to_u() const {
  if (coords_ == Coords::U) return *this;
  // x_i = U_i + U_{i+1} + ... + U_n
  std::vector<CochainPoly> subs;
  for (int i = 0; i < nvars_; ++i) {
    CochainPoly s(nvars_, Coords::U, modulus_);
    for (int j = i; j < nvars_; ++j) s += variable(j, nvars_, Coords::U, modulus_);
    subs.push_back(std::move(s));
  }
  if (subs.empty()) {
    CochainPoly out = *this;
    out.coords_ = Coords::U;
    return out;
  }
  return compose(subs);
}

CochainPoly CochainPoly::to_x() const {
  if (coords_ == Coords::X) return *this;
  std::vector<CochainPoly> subs;
  for (int i = 0; i < nvars_; ++i) {
    CochainPoly s = variable(i, nvars_, Coords::X, modulus_);
    if (i + 1 < nvars_) s -= variable(i + 1, nvars_, Coords::X, modulus_);
    subs.push_back(std::move(s));
  }
  if (subs.empty()) {
    CochainPoly out = *this;
    out.coords_ = Coords::X;
    return out;
  }
  return compose(subs);
}

CochainPoly CochainPoly::reduced_mod(std::int64_t p) const {
  CochainPoly out(nvars_, coords_, p);
  for (const auto& [e, c] : terms_) out.add_term(e, c.reduced_mod(p));
  return out;
}

CochainPoly CochainPoly::divided_by(std::int64_t d) const {
  if (modulus_ != 0) throw Error(Errc::InvalidArgument, "exact division needs integer coefficients");
  CochainPoly out(nvars_, coords_, 0);
  for (const auto& [e, c] : terms_) {
    Laurent q(0);
    for (const auto& [k, v] : c.terms()) {
      if (v % d != 0) throw Error(Errc::NotDivisibleByP, "coefficient " + std::to_string(v) + " not divisible by " + std::to_string(d));
      q += Laurent::monomial(v / d, k);
    }
    out.add_term(e, q);
  }
  return out;
}

std::string variable_name(Coords coords, int nvars, int index) {
  if (coords == Coords::U) return "U" + std::to_string(index + 1);
  if (nvars <= 3) return std::string(1, "xyz"[index]);
  return "x" + std::to_string(index + 1);
}

std::string CochainPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::vector<const Terms::value_type*> order;
  for (const auto& t : terms_) order.push_back(&t);
  std::sort(order.begin(), order.end(), [](auto* a, auto* b) {
    int da = std::accumulate(a->first.begin(), a->first.end(), 0);
    int db = std::accumulate(b->first.begin(), b->first.end(), 0);
    if (da != db) return da > db;
    return a->first > b->first;
  });
  std::ostringstream os;
  bool first = true;
  for (const auto* t : order) {
    const auto& [e, c] = *t;
    std::string mono;
    for (int i = 0; i < nvars_; ++i) {
      if (e[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += variable_name(coords_, nvars_, i);
      if (e[i] > 1) mono += "^" + std::to_string(e[i]);
    }
    std::string coeff = c.to_string();
    std::string text;
    if (mono.empty()) {
      text = c.terms().size() > 1 ? "(" + coeff + ")" : coeff;
    } else if (c == Laurent::constant(1, modulus_)) {
      text = mono;
    } else if (c.terms().size() > 1) {
      text = "(" + coeff + ")*" + mono;
    } else {
      text = coeff + "*" + mono;
    }
    if (!first) os << " + ";
    os << text;
    first = false;
  }
  return os.str();
}

CochainPoly parse_cochain(std::string_view text, std::int64_t p, int nvars) {
  const bool ucoords = text.find('U') != std::string_view::npos;
  std::vector<std::string> vars;
  int nv = 0;
  if (ucoords) {
    for (int i = 1; i <= 9; ++i) vars.push_back("U" + std::to_string(i));
    nv = 9;
  } else {
    vars = {"x", "y", "z"};
    nv = 3;
  }
  vars.push_back("w");
  ParsedPoly parsed = parse_polynomial(text, vars);
  int used = 0;
  for (const auto& [e, c] : parsed.terms)
    for (int i = 0; i < nv; ++i)
      if (e[i] != 0) used = std::max(used, i + 1);
  if (nvars == 0) nvars = std::max(2, used);
  if (used > nvars) throw Error(Errc::ArityMismatch, "cochain uses " + std::to_string(used) + " variables, expected " + std::to_string(nvars));
  CochainPoly out(nvars, ucoords ? Coords::U : Coords::X, p);
  for (const auto& [e, c] : parsed.terms) {
    CochainPoly::Monomial m(e.begin(), e.begin() + nvars);
    out.add_term(m, Laurent::monomial(c, e[nv], p));
  }
  return out;
}

namespace {

std::vector<LaurentPoly> argument_values(const CochainPoly& f, std::span<const LaurentPoly> colors) {
  std::vector<LaurentPoly> vals(colors.begin(), colors.end());
  if (f.coords() == Coords::U)
    for (std::size_t i = 0; i + 1 < vals.size(); ++i) vals[i] = colors[i] - colors[i + 1];
  return vals;
}

}  // namespace

LaurentPoly evaluate(const CochainPoly& f, std::span<const LaurentPoly> colors) {
  if (static_cast<int>(colors.size()) != f.nvars())
    throw Error(Errc::ArityMismatch, "expected " + std::to_string(f.nvars()) + " colors, got " + std::to_string(colors.size()));
  for (const auto& c : colors)
    if (c.modulus() != f.modulus()) throw Error(Errc::InvalidArgument, "color modulus mismatch");
  std::vector<LaurentPoly> vals = argument_values(f, colors);
  std::vector<std::vector<LaurentPoly>> powers(vals.size());
  for (std::size_t i = 0; i < vals.size(); ++i) powers[i].push_back(Laurent::constant(1, f.modulus()));
  LaurentPoly acc(f.modulus());
  for (const auto& [e, c] : f.terms()) {
    LaurentPoly term = c;
    for (std::size_t i = 0; i < e.size(); ++i) {
      while (static_cast<int>(powers[i].size()) <= e[i]) powers[i].push_back(powers[i].back() * vals[i]);
      if (e[i] > 0) term *= powers[i][e[i]];
    }
    acc += term;
  }
  return acc;
}

RingElement evaluate(const CochainPoly& f, const GroundRing& ring, std::span<const RingElement> colors) {
  if (static_cast<int>(colors.size()) != f.nvars())
    throw Error(Errc::ArityMismatch, "expected " + std::to_string(f.nvars()) + " colors, got " + std::to_string(colors.size()));
  return CompiledCochain(f, ring)(colors);
}

CompiledCochain::CompiledCochain(const CochainPoly& f, const GroundRing& ring)
    : ring_(ring), nvars_(f.nvars()), ucoords_(f.coords() == Coords::U), max_exp_(f.max_exponent()) {
  for (const auto& [e, c] : f.terms()) {
    RingElement r = ring.reduce(c);
    if (r != ring.zero()) terms_.emplace_back(r, e);
  }
}

RingElement CompiledCochain::operator()(std::span<const RingElement> colors) const {
  if (static_cast<int>(colors.size()) != nvars_) throw Error(Errc::ArityMismatch, "wrong number of colors");
  const std::size_t stride = static_cast<std::size_t>(max_exp_) + 1;
  std::vector<RingElement> powers(static_cast<std::size_t>(nvars_) * stride);
  for (int i = 0; i < nvars_; ++i) {
    RingElement v = colors[i];
    if (ucoords_ && i + 1 < nvars_) v = ring_.sub(colors[i], colors[i + 1]);
    RingElement* row = &powers[i * stride];
    row[0] = ring_.one();
    for (int k = 1; k <= max_exp_; ++k) row[k] = ring_.mul(row[k - 1], v);
  }
  RingElement acc = ring_.zero();
  for (const auto& [c, e] : terms_) {
    RingElement t = c;
    for (int i = 0; i < nvars_; ++i)
      if (e[i]) t = ring_.mul(t, powers[i * stride + e[i]]);
    acc = ring_.add(acc, t);
  }
  return acc;
}

std::vector<RingElement> tabulate(const CochainPoly& f, const GroundRing& ring) {
  const std::uint32_t q = ring.order();
  const int n = f.nvars();
  std::size_t total = 1;
  for (int i = 0; i < n; ++i) total *= q;
  CompiledCochain eval(f, ring);
  std::vector<RingElement> out(total);
  std::vector<RingElement> args(n);
  for (std::size_t idx = 0; idx < total; ++idx) {
    std::size_t r = idx;
    for (int i = n - 1; i >= 0; --i) {
      args[i] = RingElement{static_cast<std::uint32_t>(r % q)};
      r /= q;
    }
    out[idx] = eval(args);
  }
  return out;
}

CochainPoly coboundary(const CochainPoly& f_in, const LaurentPoly& omega) {
  const CochainPoly f = f_in.to_u();
  const int n = f.nvars();
  const std::int64_t mod = f.modulus();
  const LaurentPoly w = mod == omega.modulus() ? omega : omega.reduced_mod(mod);
  CochainPoly out(n + 1, Coords::U, mod);
  auto var = [&](int j) { return CochainPoly::variable(j, n + 1, Coords::U, mod); };
  for (int i = 0; i < n; ++i) {
    std::vector<CochainPoly> with_w, without_w;
    for (int j = 0; j < n; ++j) {
      if (j < i) {
        with_w.push_back(var(j).scaled(w));
        without_w.push_back(var(j));
      } else if (j == i) {
        with_w.push_back(var(j).scaled(w) + var(j + 1));
        without_w.push_back(var(j) + var(j + 1));
      } else {
        with_w.push_back(var(j + 1));
        without_w.push_back(var(j + 1));
      }
    }
    CochainPoly diff = f.compose(with_w) - f.compose(without_w);
    if (i % 2 == 0) out += diff;
    else out -= diff;
  }
  return out;
}

CochainPoly coboundary(const CochainPoly& f) {
  const std::int64_t mod = f.modulus();
  return coboundary(f, Laurent::monomial(1, 1, mod));
}

CocycleReport check_cocycle(const CochainPoly& f, const AlexanderQuandle& q) {
  const GroundRing& ring = q.ring();
  const std::uint32_t order = ring.order();
  const int n = f.nvars();
  std::vector<RingElement> table = tabulate(f, ring);
  auto format_tuple = [&](const std::vector<std::uint32_t>& xs) {
    std::string s = "(";
    for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? "," : "") + ring.format(RingElement{xs[i]});
    return s + ")";
  };

  std::vector<std::uint32_t> xs(n);
  for (std::size_t idx = 0; idx < table.size(); ++idx) {
    std::size_t r = idx;
    for (int i = n - 1; i >= 0; --i) {
      xs[i] = static_cast<std::uint32_t>(r % order);
      r /= order;
    }
    if (table[idx] == ring.zero()) continue;
    for (int i = 0; i + 1 < n; ++i)
      if (xs[i] == xs[i + 1]) return {false, "not degenerate-free: nonzero at " + format_tuple(xs)};
  }

  // x-coordinate coboundary: sum_{i=2}^{n+1} (-1)^i (f(.., x_i omitted, ..) - f(x_1*x_i, .., x_{i-1}*x_i, x_{i+1}, ..)).
  std::vector<std::uint32_t> op(std::size_t{order} * order);
  for (std::uint32_t a = 0; a < order; ++a)
    for (std::uint32_t b = 0; b < order; ++b) op[std::size_t{a} * order + b] = q.op(RingElement{a}, RingElement{b}).index;

  std::size_t total = table.size() * order;
  std::vector<std::uint32_t> ys(n + 1);
  for (std::size_t idx = 0; idx < total; ++idx) {
    std::size_t r = idx;
    for (int i = n; i >= 0; --i) {
      ys[i] = static_cast<std::uint32_t>(r % order);
      r /= order;
    }
    RingElement acc = ring.zero();
    for (int i = 1; i <= n; ++i) {
      std::size_t omitted = 0, acted = 0;
      for (int j = 0; j <= n; ++j) {
        if (j == i) continue;
        omitted = omitted * order + ys[j];
        std::uint32_t v = j < i ? op[std::size_t{ys[j]} * order + ys[i]] : ys[j];
        acted = acted * order + v;
      }
      RingElement term = ring.sub(table[omitted], table[acted]);
      acc = (i % 2 == 1) ? ring.add(acc, term) : ring.sub(acc, term);
    }
    if (acc != ring.zero()) return {false, "coboundary nonzero at " + format_tuple(ys)};
  }
  return {};
}

bool is_cocycle(const CochainPoly& f, const AlexanderQuandle& q) { return check_cocycle(f, q).cocycle; }

CochainPoly chi(std::int64_t p) {
  if (!is_prime(p)) throw Error(Errc::NonPrime, std::to_string(p) + " is not prime");
  CochainPoly out(2, Coords::U, p);
  for (std::int64_t j = 1; j < p; ++j) {
    std::int64_t c = mod_inverse(j, p);
    if (j % 2 == 0) c = p - c;
    out.add_term({static_cast<int>(p - j), static_cast<int>(j)}, Laurent::constant(c, p));
  }
  return out;
}

std::string BasisElement::label() const {
  std::string s = family == "H2" ? "" : family + ":";
  for (std::size_t i = 0; i < indices.size(); ++i) s += (i ? "," : "") + std::to_string(indices[i]);
  return s;
}

namespace {

void require_basis_preconditions(const AlexanderQuandle& q) {
  if (!q.ring().is_field()) throw Error(Errc::NotAField, q.ring().describe() + " is not a field");
  if (q.is_trivial()) throw Error(Errc::OmegaTrivial, "quandle parameter must differ from 0 and 1");
}

std::int64_t ipow(std::int64_t b, int e) {
  std::int64_t r = 1;
  while (e-- > 0) r *= b;
  return r;
}

// Frobenius x -> x^{p^k} on a polynomial with F_p[w^{±1}] coefficients.
CochainPoly frobenius(const CochainPoly& f, int k) {
  const std::int64_t pk = ipow(f.modulus(), k);
  CochainPoly out(f.nvars(), f.coords(), f.modulus());
  for (const auto& [e, c] : f.terms()) {
    CochainPoly::Monomial m = e;
    for (auto& x : m) x = static_cast<int>(x * pk);
    Laurent coeff(f.modulus());
    for (const auto& [k2, v] : c.terms()) coeff += Laurent::monomial(v, static_cast<int>(k2 * pk), f.modulus());
    out.add_term(m, coeff);
  }
  return out;
}

CochainPoly umono(std::int64_t p, std::vector<int> exps) {
  return CochainPoly::monomial(Laurent::constant(1, p), std::move(exps), Coords::U);
}

}  // namespace

std::vector<BasisElement> basis_h2(const AlexanderQuandle& q) {
  require_basis_preconditions(q);
  const GroundRing& ring = q.ring();
  const std::int64_t p = ring.p();
  const int m = ring.degree();
  auto one = [&](std::int64_t e) { return ring.pow(q.omega(), e) == ring.one(); };
  std::vector<BasisElement> out;
  for (int v = 0; v < m; ++v)
    for (int u = v + 1; u < m; ++u)
      if (one(ipow(p, v) + ipow(p, u)))
        out.push_back({"H2", {v, u}, umono(p, {static_cast<int>(ipow(p, v)), static_cast<int>(ipow(p, u))})});
  return out;
}

std::vector<BasisElement> basis_h3(const AlexanderQuandle& q) {
  require_basis_preconditions(q);
  const GroundRing& ring = q.ring();
  const std::int64_t p = ring.p();
  const int m = ring.degree();
  const RingElement w = q.omega();
  auto P = [&](int k) { return ipow(p, k); };
  auto I = [&](int k) { return static_cast<int>(ipow(p, k)); };
  auto wpow = [&](std::int64_t e) { return ring.pow(w, e); };
  auto one = [&](std::int64_t e) { return wpow(e) == ring.one(); };
  auto lift = [&](RingElement x) { return ring.canonical_lift(x).reduced_mod(p); };
  auto frac = [&](RingElement num, RingElement den) {
    auto inv = ring.try_invert(den);
    if (!inv) throw Error(Errc::DivisionByZero, "vanishing denominator in basis coefficient");
    return ring.mul(num, *inv);
  };

  std::vector<BasisElement> out;

  // I1
  for (int v = 0; v < m; ++v)
    for (int u = v + 1; u < m; ++u)
      for (int t = u + 1; t < m; ++t)
        if (one(P(v) + P(u) + P(t))) out.push_back({"I1", {v, u, t}, umono(p, {I(v), I(u), I(t)})});

  // I2, I3 use chi composed with w U1 / w^{-1} U3.
  const CochainPoly chi2 = chi(p);
  auto var3 = [&](int j) { return CochainPoly::variable(j, 3, Coords::U, p); };
  const CochainPoly chi_w12 = chi2.compose({var3(0).scaled(q.omega_symbolic()), var3(1)});
  const CochainPoly chi_12 = chi2.compose({var3(0), var3(1)});
  const CochainPoly chi_23 = chi2.compose({var3(1), var3(2)});
  const CochainPoly chi_23w = chi2.compose({var3(1), var3(2).scaled(q.omega_inv_symbolic())});
  for (int u = 0; u < m; ++u)
    for (int t = u + 1; t < m; ++t)
      if (one(P(u + 1) + P(t)))
        out.push_back({"I2", {u, t}, frobenius(chi_w12 - chi_12, u) * umono(p, {0, 0, I(t)})});
  for (int v = 0; v < m; ++v)
    for (int t = v; t < m; ++t)
      if (one(P(v) + P(t + 1)))
        out.push_back({"I3", {v, t}, umono(p, {I(v), 0, 0}) * frobenius(chi_23 - chi_23w, t)});

  // I4 families under condition (v, u, t, s).
  for (int v = 0; v < m; ++v)
    for (int u = 0; u < m; ++u)
      for (int t = 0; t < m; ++t)
        for (int s = 0; s < m; ++s) {
          if (!(u <= t && v < t && u < s)) continue;
          if (!one(P(v) + P(t)) || !one(P(u) + P(s))) continue;
          const bool vu_one = one(P(v) + P(u));
          const std::vector<int> idx{v, u, t, s};
          const CochainPoly base = umono(p, {I(v), I(u) + I(t), I(s)});
          if (vu_one) {
            out.push_back({"I4-1", idx, base});
            continue;
          }
          if (t > s) {
            RingElement c = frac(ring.sub(ring.one(), wpow(P(v) + P(u))), ring.sub(wpow(P(u)), ring.one()));
            CochainPoly f = base - umono(p, {I(u), I(v) + I(s), I(t)}) -
                            (umono(p, {I(v), I(u), I(t) + I(s)}) - umono(p, {I(v) + I(u), I(s), I(t)})).scaled(lift(c));
            out.push_back({"I4-2", idx, f});
          }
          if (p != 2 && t == s) {
            // The coefficient 2^{-1}(1 - w^{-p^t}) does not give a cocycle; the sign
            // below is the one that does (checked against brute force for p = 3, 5, 7, 11).
            RingElement c = ring.mul(ring.invert(ring.from_int(2)), ring.add(ring.one(), wpow(-P(t))));
            out.push_back({"I4-3", idx, base + umono(p, {I(v), I(u), I(t) + I(s)}).scaled(lift(c))});
          }
          const bool tail = v < t && t < s && wpow(P(v)) == wpow(P(u));
          const bool four = p != 2 && u <= v && tail;
          const bool five = p == 2 && u < v && tail;
          if (four || five) {
            RingElement c = frac(ring.sub(ring.one(), wpow(2 * P(v))), ring.sub(wpow(P(v)), ring.one()));
            CochainPoly f = base + umono(p, {I(u), I(v) + I(t), I(s)}) - umono(p, {I(v) + I(u), I(t), I(s)}).scaled(lift(c));
            out.push_back({four ? "I4-4" : "I4-5", idx, f});
          }
        }

  // I0
  for (const auto& e : basis_h2(q)) {
    CochainPoly f(3, Coords::U, p);
    for (const auto& [mono, c] : e.poly.terms()) f.add_term({mono[0], mono[1], 0}, c);
    out.push_back({"I0", e.indices, f});
  }
  return out;
}

CochainPoly mochizuki_cocycle(const AlexanderQuandle& q) {
  const std::int64_t p = q.ring().p();
  if (p == 2) throw Error(Errc::InvalidArgument, "the Mochizuki cocycle needs an odd prime");
  const unsigned up = static_cast<unsigned>(p);
  auto var = [&](int j) { return CochainPoly::variable(j, 3, Coords::X, 0); };
  const IntLaurent winv = q.omega_inv_symbolic().as_integer();
  const CochainPoly x = var(0), y = var(1), z = var(2);
  const CochainPoly wz = z.scaled(winv);
  CochainPoly bracket = y.pow(up) - z.pow(up) - (y - z + wz).pow(up) + wz.pow(up);
  return ((x - y) * bracket.divided_by(p)).reduced_mod(p);
}

CochainPoly example111_cocycle(std::int64_t p) {
  CochainPoly x = CochainPoly::variable(0, 2, Coords::X, p);
  CochainPoly y = CochainPoly::variable(1, 2, Coords::X, p);
  return (x - y) * y * y;
}

namespace {

std::vector<int> parse_indices(std::string_view text) {
  std::vector<int> out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find(',', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string piece(text.substr(pos, end - pos));
    if (piece.empty() || piece.find_first_not_of("0123456789") != std::string::npos)
      throw Error(Errc::UnknownCocycle, "bad index list '" + std::string(text) + "'");
    out.push_back(std::stoi(piece));
    pos = end + 1;
  }
  return out;
}

}  // namespace

NamedCocycle named_cocycle(std::string_view name, const AlexanderQuandle& q) {
  const std::string n(name);
  if (n == "mochizuki-p3") return {n, 3, mochizuki_cocycle(q)};
  if (n == "example111") return {n, 2, example111_cocycle(q.ring().p())};
  if (n.rfind("basis2:", 0) == 0) {
    auto idx = parse_indices(name.substr(7));
    for (auto& e : basis_h2(q))
      if (e.indices == idx) return {n, 2, e.poly};
    throw Error(Errc::UnknownCocycle, "no H2 basis element " + n + " for " + q.describe());
  }
  if (n.rfind("basis3:", 0) == 0) {
    std::string_view rest = name.substr(7);
    auto colon = rest.find(':');
    if (colon == std::string_view::npos) throw Error(Errc::UnknownCocycle, "expected basis3:<family>:<indices>");
    std::string family(rest.substr(0, colon));
    auto idx = parse_indices(rest.substr(colon + 1));
    for (auto& e : basis_h3(q))
      if (e.family == family && e.indices == idx) return {n, 3, e.poly};
    throw Error(Errc::UnknownCocycle, "no H3 basis element " + n + " for " + q.describe());
  }
  throw Error(Errc::UnknownCocycle, "unknown cocycle '" + n + "'");
}

}  // namespace qv
