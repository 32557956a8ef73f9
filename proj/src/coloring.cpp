#include "qv/coloring.hpp"

#include <algorithm>
#include <thread>

#include "qv/error.hpp"

namespace qv {

void ColoringPolicy::validate(const LinkDiagram& d) const {
  if (kind == Kind::SumAll) return;
  if (arc < 0 || arc >= d.num_arcs)
    throw Error(Errc::PolicyInvalid, "arc " + std::to_string(arc) + " does not exist (diagram has " + std::to_string(d.num_arcs) + " arcs)");
}

std::string ColoringPolicy::to_string(const GroundRing& ring) const {
  switch (kind) {
    case Kind::SumAll: return "sum-all";
    case Kind::FixArc: return "fix-arc:" + std::to_string(arc) + "=" + ring.format(arc_color);
    case Kind::FixArcAndRegion:
      return "fix-arc-region:" + std::to_string(arc) + "=" + ring.format(arc_color) + "," + ring.format(region_color);
  }
  return "";
}

ColoringPolicy parse_policy(std::string_view text, const GroundRing& ring) {
  auto fail = [&](const std::string& why) -> ColoringPolicy {
    throw Error(Errc::PolicyInvalid, "policy '" + std::string(text) + "': " + why);
  };
  if (text == "sum-all") return ColoringPolicy::sum_all();
  auto colon = text.find(':');
  if (colon == std::string_view::npos) return fail("expected sum-all, fix-arc:<id>=<expr> or fix-arc-region:<id>=<expr>,<expr>");
  std::string_view head = text.substr(0, colon), rest = text.substr(colon + 1);
  auto eq = rest.find('=');
  if (eq == std::string_view::npos) return fail("missing '='");
  std::string id(rest.substr(0, eq));
  if (id.empty() || id.size() > 6 || id.find_first_not_of("0123456789") != std::string::npos) return fail("bad arc id");
  const int arc = std::stoi(id);
  std::string_view value = rest.substr(eq + 1);
  try {
    if (head == "fix-arc") return ColoringPolicy::fix_arc(arc, ring.parse(value));
    if (head == "fix-arc-region") {
      auto comma = value.find(',');
      if (comma == std::string_view::npos) return fail("expected <expr>,<expr>");
      return ColoringPolicy::fix_arc_and_region(arc, ring.parse(value.substr(0, comma)), ring.parse(value.substr(comma + 1)));
    }
  } catch (const Error& e) {
    if (e.code() == Errc::PolicyInvalid) throw;
    return fail(e.what());
  }
  return fail("unknown policy kind '" + std::string(head) + "'");
}

bool satisfies_crossings(const LinkDiagram& d, const std::vector<RingElement>& arc_colors, const AlexanderQuandle& q) {
  for (const auto& c : d.crossings)
    if (q.op(arc_colors[c.right_under()], arc_colors[c.over_arc]) != arc_colors[c.left_under()]) return false;
  return true;
}

namespace {

// Colors each seed in [begin, end) and appends the closed ones.
void color_range(const BraidWord& b, const LinkDiagram& d, const AlexanderQuandle& q, const ColoringPolicy& policy,
                 bool symbolic, std::size_t begin, std::size_t end, std::vector<ArcColoring>& out) {
  const GroundRing& ring = q.ring();
  const std::uint32_t order = q.order();
  const int n = b.strands;
  const int L = static_cast<int>(b.letters.size());
  std::vector<RingElement> seed(n), state(n);
  std::vector<LaurentPoly> sym(n);
  std::vector<RingElement> seg(static_cast<std::size_t>(std::max(L, 1)) * n);
  std::vector<LaurentPoly> seg_sym(symbolic ? seg.size() : 0);

  for (std::size_t idx = begin; idx < end; ++idx) {
    std::size_t r = idx;
    for (int j = n - 1; j >= 0; --j) {
      seed[j] = RingElement{static_cast<std::uint32_t>(r % order)};
      r /= order;
    }
    state = seed;
    if (symbolic)
      for (int j = 0; j < n; ++j) sym[j] = ring.canonical_lift(seed[j]).reduced_mod(ring.p());
    for (int k = 0; k < std::max(L, 1); ++k) {
      for (int j = 0; j < n; ++j) {
        seg[static_cast<std::size_t>(k) * n + j] = state[j];
        if (symbolic) seg_sym[static_cast<std::size_t>(k) * n + j] = sym[j];
      }
      if (L == 0) break;
      const BraidLetter& l = b.letters[k];
      const int i = l.index - 1;
      if (l.kind == LetterKind::Positive) {
        RingElement x = state[i], y = state[i + 1];
        state[i] = y;
        state[i + 1] = q.op(x, y);
        if (symbolic) {
          LaurentPoly sx = sym[i];
          sym[i] = sym[i + 1];
          sym[i + 1] = q.op(sx, sym[i]);
        }
      } else {
        RingElement u = state[i], v = state[i + 1];
        state[i] = q.unop(v, u);
        state[i + 1] = u;
        if (symbolic) {
          LaurentPoly su = sym[i];
          sym[i] = q.unop(sym[i + 1], su);
          sym[i + 1] = su;
        }
      }
    }
    if (state != seed) continue;

    ArcColoring c;
    c.seed = seed;
    c.arcs.assign(d.num_arcs, RingElement{});
    std::vector<bool> set(d.num_arcs, false);
    if (symbolic) c.symbolic_arcs.assign(d.num_arcs, LaurentPoly(ring.p()));
    for (std::size_t s = 0; s < d.segments.size(); ++s) {
      const int a = d.segments[s].arc;
      if (set[a]) continue;
      set[a] = true;
      c.arcs[a] = seg[s];
      if (symbolic) c.symbolic_arcs[a] = seg_sym[s];
    }
    if (policy.kind != ColoringPolicy::Kind::SumAll && c.arcs[policy.arc] != policy.arc_color) continue;
    out.push_back(std::move(c));
  }
}

}  // namespace

std::vector<ArcColoring> enumerate_colorings(const BraidWord& b, const LinkDiagram& d, const AlexanderQuandle& q,
                                             const ColoringPolicy& policy, const EnumerateOptions& options) {
  policy.validate(d);
  std::size_t total = 1;
  for (int j = 0; j < b.strands; ++j) {
    total *= q.order();
    if (total > (std::size_t{1} << 32)) throw Error(Errc::TooLarge, "too many seeds to enumerate");
  }
  unsigned threads = options.threads == 0 ? std::max(1u, std::thread::hardware_concurrency()) : options.threads;
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, total));
  if (threads <= 1) {
    std::vector<ArcColoring> out;
    color_range(b, d, q, policy, options.symbolic, 0, total, out);
    return out;
  }
  std::vector<std::vector<ArcColoring>> parts(threads);
  std::vector<std::thread> pool;
  const std::size_t chunk = (total + threads - 1) / threads;
  for (unsigned t = 0; t < threads; ++t) {
    const std::size_t lo = t * chunk, hi = std::min(total, lo + chunk);
    pool.emplace_back([&, t, lo, hi] { color_range(b, d, q, policy, options.symbolic, lo, hi, parts[t]); });
  }
  for (auto& th : pool) th.join();
  std::vector<ArcColoring> out;
  for (auto& part : parts)
    for (auto& c : part) out.push_back(std::move(c));
  return out;
}

std::vector<ArcColoring> enumerate_colorings(const BraidWord& b, const AlexanderQuandle& q, const ColoringPolicy& policy,
                                             const EnumerateOptions& options) {
  return enumerate_colorings(b, closure_diagram(b), q, policy, options);
}

ShadowColoring shadow_extend(const LinkDiagram& d, const ArcColoring& c, RingElement base, const AlexanderQuandle& q,
                             const ShadowOptions& options) {
  const GroundRing& ring = q.ring();
  const bool symbolic = options.symbolic && c.symbolic_arcs.size() == c.arcs.size();
  ShadowColoring out;
  out.arcs = c;
  std::vector<bool> known(d.num_regions, false);
  out.regions.assign(d.num_regions, RingElement{});
  if (symbolic) out.symbolic_regions.assign(d.num_regions, LaurentPoly(ring.p()));
  out.regions[d.unbounded_region] = base;
  known[d.unbounded_region] = true;
  if (symbolic)
    out.symbolic_regions[d.unbounded_region] =
        options.symbolic_base.modulus() == ring.p() ? options.symbolic_base : ring.canonical_lift(base).reduced_mod(ring.p());

  std::vector<std::size_t> order(d.segments.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = options.reverse_order ? order.size() - 1 - i : i;

  // Propagate until no new region is reached; each pass visits edges in `order`.
  bool progress = true;
  while (progress) {
    progress = false;
    for (std::size_t idx : order) {
      const Segment& s = d.segments[idx];
      const RingElement x = c.arcs[s.arc];
      if (known[s.right_region] && !known[s.left_region]) {
        out.regions[s.left_region] = q.op(out.regions[s.right_region], x);
        if (symbolic) out.symbolic_regions[s.left_region] = q.op(out.symbolic_regions[s.right_region], c.symbolic_arcs[s.arc]);
        known[s.left_region] = true;
        progress = true;
      } else if (known[s.left_region] && !known[s.right_region]) {
        out.regions[s.right_region] = q.unop(out.regions[s.left_region], x);
        if (symbolic) out.symbolic_regions[s.right_region] = q.unop(out.symbolic_regions[s.left_region], c.symbolic_arcs[s.arc]);
        known[s.right_region] = true;
        progress = true;
      }
    }
  }
  for (int r = 0; r < d.num_regions; ++r)
    if (!known[r]) throw Error(Errc::InconsistentColoring, "region " + std::to_string(r) + " unreachable");
  for (const auto& s : d.segments)
    if (q.op(out.regions[s.right_region], c.arcs[s.arc]) != out.regions[s.left_region])
      throw Error(Errc::InconsistentColoring, "region colors disagree across arc " + std::to_string(s.arc) + " at level " +
                                                  std::to_string(s.level) + ", position " + std::to_string(s.position));
  return out;
}

}  // namespace qv
