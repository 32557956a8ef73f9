#include "qv/rmatrix.hpp"

#include <map>

#include "qv/error.hpp"

namespace qv {

RMatrix RMatrix::from_arrays(GroundRing ring, std::vector<std::uint32_t> target, std::vector<RingElement> exponent) {
  const std::uint32_t q = ring.order();
  const std::size_t dim = std::size_t{q} * q;
  if (target.size() != dim || exponent.size() != dim) throw Error(Errc::InvalidArgument, "R-matrix arrays must have size q^2");
  std::vector<bool> hit(dim, false);
  for (auto t : target) {
    if (t >= dim || hit[t]) throw Error(Errc::InvalidArgument, "R-matrix target is not a permutation");
    hit[t] = true;
  }
  return RMatrix(std::move(ring), q, std::move(target), std::move(exponent));
}

RMatrix RMatrix::identity(const GroundRing& ring) {
  const std::uint32_t dim = ring.order() * ring.order();
  std::vector<std::uint32_t> target(dim);
  for (std::uint32_t i = 0; i < dim; ++i) target[i] = i;
  return from_arrays(ring, std::move(target), std::vector<RingElement>(dim, ring.zero()));
}

RMatrix RMatrix::inverse() const {
  std::vector<std::uint32_t> target(target_.size());
  std::vector<RingElement> exponent(exponent_.size());
  for (std::uint32_t c = 0; c < target_.size(); ++c) {
    target[target_[c]] = c;
    exponent[target_[c]] = ring_.neg(exponent_[c]);
  }
  return RMatrix(ring_, q_, std::move(target), std::move(exponent));
}

RMatrix build_r_matrix(const CochainPoly& f, const AlexanderQuandle& q, bool verify) {
  if (f.nvars() != 2) throw Error(Errc::ArityMismatch, "R-matrix needs a 2-cochain");
  if (verify) {
    auto report = check_cocycle(f, q);
    if (!report.cocycle) throw Error(Errc::NotACocycle, f.to_string() + " over " + q.describe() + ": " + report.reason);
  }
  const GroundRing& ring = q.ring();
  const std::uint32_t n = q.order();
  auto values = tabulate(f, ring);
  std::vector<std::uint32_t> target(std::size_t{n} * n);
  std::vector<RingElement> exponent(target.size());
  for (std::uint32_t x = 0; x < n; ++x)
    for (std::uint32_t y = 0; y < n; ++y) {
      const std::uint32_t col = x * n + y;
      target[col] = y * n + q.op(RingElement{x}, RingElement{y}).index;
      exponent[col] = values[col];
    }
  return RMatrix::from_arrays(ring, std::move(target), std::move(exponent));
}

namespace {

struct State {
  std::uint32_t a, b, c;
  RingElement e;
};

// Applies R to the factors (first, second) of a basis triple.
void apply(const RMatrix& r, State& s, bool left) {
  const std::uint32_t q = r.q();
  std::uint32_t& u = left ? s.a : s.b;
  std::uint32_t& v = left ? s.b : s.c;
  const std::uint32_t col = u * q + v;
  const std::uint32_t row = r.target(col);
  s.e = r.ring().add(s.e, r.exponent(col));
  u = row / q;
  v = row % q;
}

}  // namespace

bool check_yang_baxter(const RMatrix& r) {
  const std::uint32_t q = r.q();
  for (std::uint32_t a = 0; a < q; ++a)
    for (std::uint32_t b = 0; b < q; ++b)
      for (std::uint32_t c = 0; c < q; ++c) {
        State lhs{a, b, c, r.ring().zero()}, rhs = lhs;
        // rightmost factor acts first
        apply(r, lhs, true);
        apply(r, lhs, false);
        apply(r, lhs, true);
        apply(r, rhs, false);
        apply(r, rhs, true);
        apply(r, rhs, false);
        if (lhs.a != rhs.a || lhs.b != rhs.b || lhs.c != rhs.c || lhs.e != rhs.e) return false;
      }
  return true;
}

Endomorphism Endomorphism::identity(std::uint32_t q) {
  Endomorphism h{q, std::vector<std::int64_t>(std::size_t{q} * q, 0)};
  for (std::uint32_t i = 0; i < q; ++i) h.entries[std::size_t{i} * q + i] = 1;
  return h;
}

Endomorphism Endomorphism::zero(std::uint32_t q) { return {q, std::vector<std::int64_t>(std::size_t{q} * q, 0)}; }

namespace {

using Entry = std::map<std::uint32_t, std::int64_t>;  // group-ring element, class -> coefficient

void add_to(Entry& e, RingElement cls, std::int64_t c) {
  if (c == 0) return;
  auto& slot = e[cls.index];
  slot += c;
  if (slot == 0) e.erase(cls.index);
}

bool partial_trace_is_identity(const RMatrix& m, const Endomorphism& h) {
  const std::uint32_t q = m.q();
  // T[a', a] = sum_y h[y, y'] t^{e} where (a', y') = target(a, y).
  std::vector<Entry> t(std::size_t{q} * q);
  for (std::uint32_t a = 0; a < q; ++a)
    for (std::uint32_t y = 0; y < q; ++y) {
      const std::uint32_t col = a * q + y;
      const std::uint32_t row = m.target(col);
      add_to(t[std::size_t{row / q} * q + a], m.exponent(col), h.at(y, row % q));
    }
  for (std::uint32_t i = 0; i < q; ++i)
    for (std::uint32_t j = 0; j < q; ++j) {
      const Entry& e = t[std::size_t{i} * q + j];
      if (i == j) {
        if (e.size() != 1 || e.begin()->first != m.ring().zero().index || e.begin()->second != 1) return false;
      } else if (!e.empty()) {
        return false;
      }
    }
  return true;
}

}  // namespace

MarkovReport markov_report(const RMatrix& r, const Endomorphism& h) {
  if (h.q != r.q() || h.entries.size() != std::size_t{h.q} * h.q)
    throw Error(Errc::ArityMismatch, "h must be a q x q matrix");
  MarkovReport rep;
  rep.trace_positive = partial_trace_is_identity(r, h);
  rep.trace_negative = partial_trace_is_identity(r.inverse(), h);

  // R (h (x) h) and (h (x) h) R, entrywise. (h (x) h)[(i,j),(k,l)] = h[i,k] h[j,l].
  const std::uint32_t q = r.q(), dim = r.dimension();
  const RMatrix rinv = r.inverse();
  rep.commutes = true;
  for (std::uint32_t row = 0; row < dim && rep.commutes; ++row) {
    const std::uint32_t src = rinv.target(row);  // column of R landing in `row`
    const RingElement e_src = r.exponent(src);
    for (std::uint32_t col = 0; col < dim; ++col) {
      // [R (h(x)h)][row, col] = t^{e_src} hh[src, col]
      const std::int64_t left = h.at(src / q, col / q) * h.at(src % q, col % q);
      // [(h(x)h) R][row, col] = hh[row, target(col)] t^{e(col)}
      const std::uint32_t tc = r.target(col);
      const std::int64_t right = h.at(row / q, tc / q) * h.at(row % q, tc % q);
      if (left == 0 && right == 0) continue;
      if (left != right || e_src != r.exponent(col)) {
        rep.commutes = false;
        break;
      }
    }
  }
  return rep;
}

bool markov_conditions(const RMatrix& r, const Endomorphism& h) { return markov_report(r, h).passed(); }

bool markov_conditions(const RMatrix& r) { return markov_conditions(r, Endomorphism::identity(r.q())); }

GroupRingElement operator_invariant(const BraidWord& b, const RMatrix& r) {
  if (b.has_singular()) throw Error(Errc::SingularPresent, "resolve singular letters before computing the operator invariant");
  const GroundRing& ring = r.ring();
  const std::uint32_t q = r.q();
  const RMatrix rinv = r.inverse();
  const int n = b.strands;
  std::size_t total = 1;
  for (int i = 0; i < n; ++i) {
    total *= q;
    if (total > (std::size_t{1} << 32)) throw Error(Errc::TooLarge, "state space too large");
  }
  std::map<RingElement, std::int64_t> counts;
  std::vector<std::uint32_t> start(n), state(n);
  for (std::size_t idx = 0; idx < total; ++idx) {
    std::size_t rem = idx;
    for (int j = n - 1; j >= 0; --j) {
      start[j] = static_cast<std::uint32_t>(rem % q);
      rem /= q;
    }
    state = start;
    RingElement e = ring.zero();
    for (const auto& l : b.letters) {
      const RMatrix& m = l.kind == LetterKind::Positive ? r : rinv;
      const int i = l.index - 1;
      const std::uint32_t col = state[i] * q + state[i + 1];
      const std::uint32_t row = m.target(col);
      e = ring.add(e, m.exponent(col));
      state[i] = row / q;
      state[i + 1] = row % q;
    }
    if (state == start) ++counts[e];
  }
  GroupRingElement g(ring);
  for (const auto& [e, c] : counts) g.add_term(c, e);
  return g;
}

}  // namespace qv
