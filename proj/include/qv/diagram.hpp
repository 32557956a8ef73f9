#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace qv {

enum class LetterKind { Positive, Negative, Singular };

struct BraidLetter {
  int index = 1;  // sigma_index, 1-based
  LetterKind kind = LetterKind::Positive;
  friend bool operator==(const BraidLetter&, const BraidLetter&) = default;
};

struct BraidWord {
  int strands = 2;
  std::vector<BraidLetter> letters;

  bool has_singular() const;
  int singular_count() const;
  /// Canonical text, e.g. `2 ; 1 1 -1 s1`.
  std::string to_string() const;
  friend bool operator==(const BraidWord&, const BraidWord&) = default;
};

/// Parses `<n> ; <tok> ...` with tokens `k`, `-k`, `sk`. Throws BadToken,
/// IndexOutOfRange, TooFewStrands.
BraidWord parse_braid(std::string_view text);
/// sigma_1^n on two strands.
BraidWord torus_braid(int n);

/// Expands singular letters into (positive - negative). The first singular letter
/// varies slowest; positive before negative.
std::vector<std::pair<int, BraidWord>> resolve_singulars(const BraidWord& b);

/// A piece of strand at a given level of the braid (between letters level-1 and
/// level) and position. Facing down the braid, the right side is the west gap.
struct Segment {
  int level = 0;
  int position = 0;
  int arc = 0;
  int left_region = 0;
  int right_region = 0;
};

struct Crossing {
  int letter = 0;    // index into the braid word
  int position = 0;  // 0-based position of the left strand
  int sign = 1;
  int over_arc = 0;
  int under_in = 0;
  int under_out = 0;
  int west_region = 0;
  int east_region = 0;
  int north_region = 0;
  int south_region = 0;

  /// Under arc on the right of the over arc (gamma_1) and on its left (gamma_3):
  /// color(gamma_1) * color(over) = color(gamma_3).
  int right_under() const { return sign > 0 ? under_in : under_out; }
  int left_under() const { return sign > 0 ? under_out : under_in; }
};

/// Planar diagram of a braid closure. Braids run top to bottom; a positive letter
/// sigma_i crosses positions i-1 and i with the strand from the upper right passing
/// over. The closing strands return on the east side, so the gap west of the first
/// strand is the unbounded region (id 0).
struct LinkDiagram {
  int strands = 0;
  int levels = 0;  // number of letters
  int num_arcs = 0;
  int num_regions = 0;
  int unbounded_region = 0;
  int components = 0;
  int pieces = 0;  // connected pieces of the planar projection
  std::vector<Crossing> crossings;
  std::vector<Segment> segments;  // level-major, positions within a level

  const Segment& segment(int level, int position) const;
  /// Region on each side of the gap cells: region_at(level, gap), gap in [0, strands].
  int region_at(int level, int gap) const;
  /// Structured text listing of arcs, crossings and regions.
  std::string dump() const;

  std::vector<int> region_grid;  // (levels + 1) x (strands + 1)
};

/// Throws SingularPresent.
LinkDiagram closure_diagram(const BraidWord& b);

}  // namespace qv
