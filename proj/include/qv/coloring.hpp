#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qv/diagram.hpp"
#include "qv/quandle.hpp"

namespace qv {

/// Which colorings a state sum ranges over.
struct ColoringPolicy {
  enum class Kind { SumAll, FixArc, FixArcAndRegion };
  Kind kind = Kind::SumAll;
  int arc = 0;
  RingElement arc_color{};
  RingElement region_color{};  // color of the unbounded region

  static ColoringPolicy sum_all() { return {}; }
  static ColoringPolicy fix_arc(int arc, RingElement color) { return {Kind::FixArc, arc, color, {}}; }
  static ColoringPolicy fix_arc_and_region(int arc, RingElement color, RingElement region) {
    return {Kind::FixArcAndRegion, arc, color, region};
  }

  /// Throws PolicyInvalid when the arc does not exist.
  void validate(const LinkDiagram& d) const;
  std::string to_string(const GroundRing& ring) const;
};

/// `sum-all`, `fix-arc:<id>=<expr>`, `fix-arc-region:<id>=<expr>,<expr>`. Throws PolicyInvalid.
ColoringPolicy parse_policy(std::string_view text, const GroundRing& ring);

struct ArcColoring {
  std::vector<RingElement> seed;                 // top colors, position order
  std::vector<RingElement> arcs;                 // by arc id
  std::vector<LaurentPoly> symbolic_arcs;        // canonical seed lifts pushed through the braid, unreduced
};

struct ShadowColoring {
  ArcColoring arcs;
  std::vector<RingElement> regions;              // by region id
  std::vector<LaurentPoly> symbolic_regions;     // empty unless requested
};

struct EnumerateOptions {
  bool symbolic = true;
  /// Split the seed range over this many threads (0 = hardware concurrency).
  unsigned threads = 1;
};

/// All colorings of the closure of b allowed by the policy (region part ignored),
/// in lexicographic seed order.
std::vector<ArcColoring> enumerate_colorings(const BraidWord& b, const AlexanderQuandle& q, const ColoringPolicy& policy,
                                             const EnumerateOptions& options = {});
std::vector<ArcColoring> enumerate_colorings(const BraidWord& b, const LinkDiagram& d, const AlexanderQuandle& q,
                                             const ColoringPolicy& policy, const EnumerateOptions& options = {});

/// True when every crossing satisfies color(gamma_1) * color(over) = color(gamma_3).
bool satisfies_crossings(const LinkDiagram& d, const std::vector<RingElement>& arc_colors, const AlexanderQuandle& q);

struct ShadowOptions {
  /// Visit region edges in reverse segment order (gives a different spanning tree).
  bool reverse_order = false;
  bool symbolic = false;
  LaurentPoly symbolic_base;  // used when symbolic; defaults to the canonical lift of base
};

/// Region colors with the unbounded region colored `base` and, across every
/// segment, left = right * x. Throws InconsistentColoring.
ShadowColoring shadow_extend(const LinkDiagram& d, const ArcColoring& c, RingElement base, const AlexanderQuandle& q,
                             const ShadowOptions& options = {});

}  // namespace qv
