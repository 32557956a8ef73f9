#pragma once

// Dense linear algebra over a finite field S, used to compute quandle cohomology
// dimensions directly from the x-coordinate coboundary on non-degenerate cochains.

#include <cstdint>
#include <vector>

#include "qv/arith.hpp"
#include "qv/quandle.hpp"

namespace qv::oracle {

using Row = std::vector<std::uint32_t>;

// Row-reduces in place; returns the rank.
inline std::size_t rank(std::vector<Row> rows, const GroundRing& ring) {
  if (rows.empty()) return 0;
  const std::size_t cols = rows.front().size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
    std::size_t piv = r;
    while (piv < rows.size() && rows[piv][c] == 0) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[piv], rows[r]);
    const RingElement inv = ring.invert(RingElement{rows[r][c]});
    for (auto& v : rows[r]) v = ring.mul(RingElement{v}, inv).index;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][c] == 0) continue;
      const RingElement f{rows[i][c]};
      for (std::size_t k = c; k < cols; ++k)
        if (rows[r][k]) rows[i][k] = ring.sub(RingElement{rows[i][k]}, ring.mul(f, RingElement{rows[r][k]})).index;
    }
    ++r;
  }
  return r;
}

// Non-degenerate n-tuples (x_i != x_{i+1}) in mixed radix order.
inline std::vector<std::vector<std::uint32_t>> nondegenerate(std::uint32_t q, int n) {
  std::vector<std::vector<std::uint32_t>> out;
  std::vector<std::uint32_t> t(n, 0);
  while (true) {
    bool ok = true;
    for (int i = 0; i + 1 < n; ++i) ok = ok && t[i] != t[i + 1];
    if (ok) out.push_back(t);
    int k = n - 1;
    while (k >= 0 && ++t[k] == q) t[k--] = 0;
    if (k < 0) break;
  }
  return out;
}

inline std::size_t tuple_index(const std::vector<std::uint32_t>& t, std::uint32_t q) {
  std::size_t idx = 0;
  for (auto v : t) idx = idx * q + v;
  return idx;
}

// Transposed coboundary delta_n: one row per non-degenerate n-tuple (basis cochain),
// one column per non-degenerate (n+1)-tuple. Rank is the same as delta_n.
inline std::vector<Row> coboundary_rows(const AlexanderQuandle& Q, int n) {
  const GroundRing& ring = Q.ring();
  const std::uint32_t q = Q.order();
  auto src = nondegenerate(q, n);
  auto dst = nondegenerate(q, n + 1);
  std::size_t full = 1;
  for (int i = 0; i < n; ++i) full *= q;
  std::vector<std::int64_t> pos(full, -1);
  for (std::size_t i = 0; i < src.size(); ++i) pos[tuple_index(src[i], q)] = static_cast<std::int64_t>(i);
  std::vector<Row> rows(src.size(), Row(dst.size(), 0));
  const RingElement one = ring.one();
  for (std::size_t c = 0; c < dst.size(); ++c) {
    const auto& y = dst[c];
    for (int i = 1; i <= n; ++i) {
      std::vector<std::uint32_t> omitted, acted;
      for (int j = 0; j <= n; ++j) {
        if (j == i) continue;
        omitted.push_back(y[j]);
        acted.push_back(j < i ? Q.op(RingElement{y[j]}, RingElement{y[i]}).index : y[j]);
      }
      const RingElement s = (i % 2 == 0) ? one : ring.neg(one);
      // delta f(y) = sum (-1)^i (f(omitted) - f(acted))
      if (auto p = pos[tuple_index(omitted, q)]; p >= 0) rows[p][c] = ring.add(RingElement{rows[p][c]}, s).index;
      if (auto p = pos[tuple_index(acted, q)]; p >= 0) rows[p][c] = ring.sub(RingElement{rows[p][c]}, s).index;
    }
  }
  return rows;
}

inline std::size_t cochain_dim(std::uint32_t q, int n) {
  std::size_t d = q;
  for (int i = 1; i < n; ++i) d *= q - 1;
  return d;
}

// dim H^n_Q(X; S) = dim C^n - rank delta_n - rank delta_{n-1}.
inline std::size_t cohomology_dim(const AlexanderQuandle& Q, int n) {
  const GroundRing& ring = Q.ring();
  std::size_t r_n = rank(coboundary_rows(Q, n), ring);
  std::size_t r_prev = n > 1 ? rank(coboundary_rows(Q, n - 1), ring) : 0;
  return cochain_dim(Q.order(), n) - r_n - r_prev;
}

// Values of a cochain on the non-degenerate n-tuples.
inline Row restrict(const std::vector<RingElement>& table, std::uint32_t q, int n) {
  Row out;
  for (const auto& t : nondegenerate(q, n)) out.push_back(table[tuple_index(t, q)].index);
  return out;
}

// Image of delta_{n-1} as row vectors indexed by non-degenerate n-tuples.
inline std::vector<Row> image_rows(const AlexanderQuandle& Q, int n) {
  if (n <= 1) return {};
  return coboundary_rows(Q, n - 1);
}

}  // namespace qv::oracle
