#include "qv/diagram.hpp"

#include <cctype>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "qv/error.hpp"

namespace qv {

bool BraidWord::has_singular() const { return singular_count() > 0; }

int BraidWord::singular_count() const {
  int k = 0;
  for (const auto& l : letters) k += l.kind == LetterKind::Singular;
  return k;
}

std::string BraidWord::to_string() const {
  std::ostringstream os;
  os << strands << " ;";
  for (const auto& l : letters) {
    os << ' ';
    if (l.kind == LetterKind::Negative) os << '-';
    if (l.kind == LetterKind::Singular) os << 's';
    os << l.index;
  }
  return os.str();
}

BraidWord parse_braid(std::string_view text) {
  auto semi = text.find(';');
  if (semi == std::string_view::npos) throw Error(Errc::BadToken, "expected '<strands> ; <letters>' in \"" + std::string(text) + "\"");
  std::istringstream head{std::string(text.substr(0, semi))};
  std::string count, extra;
  if (!(head >> count) || (head >> extra) || count.find_first_not_of("0123456789") != std::string::npos)
    throw Error(Errc::BadToken, "bad strand count in \"" + std::string(text) + "\"");
  BraidWord b;
  if (count.size() > 6) throw Error(Errc::BadToken, "strand count too large");
  b.strands = std::stoi(count);
  if (b.strands < 2) throw Error(Errc::TooFewStrands, "a braid needs at least 2 strands, got " + count);

  std::istringstream body{std::string(text.substr(semi + 1))};
  std::string tok;
  while (body >> tok) {
    BraidLetter letter;
    std::string digits = tok;
    if (tok[0] == '-') {
      letter.kind = LetterKind::Negative;
      digits = tok.substr(1);
    } else if (tok[0] == 's') {
      letter.kind = LetterKind::Singular;
      digits = tok.substr(1);
    }
    if (digits.empty() || digits.size() > 6 || digits.find_first_not_of("0123456789") != std::string::npos)
      throw Error(Errc::BadToken, "bad braid token '" + tok + "'");
    letter.index = std::stoi(digits);
    if (letter.index < 1 || letter.index > b.strands - 1)
      throw Error(Errc::IndexOutOfRange, "letter '" + tok + "' outside 1.." + std::to_string(b.strands - 1));
    b.letters.push_back(letter);
  }
  return b;
}

BraidWord torus_braid(int n) {
  if (n < 0) throw Error(Errc::InvalidArgument, "torus braid exponent must be >= 0");
  BraidWord b;
  b.strands = 2;
  b.letters.assign(static_cast<std::size_t>(n), BraidLetter{1, LetterKind::Positive});
  return b;
}

std::vector<std::pair<int, BraidWord>> resolve_singulars(const BraidWord& b) {
  std::vector<std::size_t> where;
  for (std::size_t i = 0; i < b.letters.size(); ++i)
    if (b.letters[i].kind == LetterKind::Singular) where.push_back(i);
  const std::size_t k = where.size();
  std::vector<std::pair<int, BraidWord>> out;
  for (std::size_t mask = 0; mask < (std::size_t{1} << k); ++mask) {
    BraidWord w = b;
    int sign = 1;
    for (std::size_t j = 0; j < k; ++j) {
      // bit for the first singular letter is the most significant
      bool negative = (mask >> (k - 1 - j)) & 1;
      w.letters[where[j]].kind = negative ? LetterKind::Negative : LetterKind::Positive;
      if (negative) sign = -sign;
    }
    out.emplace_back(sign, std::move(w));
  }
  return out;
}

namespace {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

}  // namespace

const Segment& LinkDiagram::segment(int level, int position) const {
  const int nlev = std::max(levels, 1);
  level = ((level % nlev) + nlev) % nlev;
  return segments.at(static_cast<std::size_t>(level) * strands + position);
}

int LinkDiagram::region_at(int level, int gap) const {
  const int nlev = std::max(levels, 1);
  level = ((level % nlev) + nlev) % nlev;
  return region_grid.at(static_cast<std::size_t>(level) * (strands + 1) + gap);
}

LinkDiagram closure_diagram(const BraidWord& b) {
  if (b.has_singular()) throw Error(Errc::SingularPresent, "resolve singular letters before building a diagram");
  if (b.strands < 2) throw Error(Errc::TooFewStrands, "a braid needs at least 2 strands");
  const int n = b.strands;
  const int L = static_cast<int>(b.letters.size());
  const int nlev = std::max(L, 1);
  auto seg_id = [&](int level, int pos) { return (level % nlev) * n + pos; };

  LinkDiagram d;
  d.strands = n;
  d.levels = L;

  // Strand connectivity (components) and arc connectivity (broken at under-passes).
  UnionFind strand(nlev * n), arcs(nlev * n);
  for (int k = 0; k < nlev; ++k) {
    for (int j = 0; j < n; ++j) {
      if (L == 0) continue;
      const BraidLetter& l = b.letters[k];
      const int i = l.index - 1;
      if (j == i || j == i + 1) continue;
      strand.unite(seg_id(k, j), seg_id(k + 1, j));
      arcs.unite(seg_id(k, j), seg_id(k + 1, j));
    }
    if (L == 0) continue;
    const BraidLetter& l = b.letters[k];
    const int i = l.index - 1;
    strand.unite(seg_id(k, i), seg_id(k + 1, i + 1));
    strand.unite(seg_id(k, i + 1), seg_id(k + 1, i));
    if (l.kind == LetterKind::Positive) arcs.unite(seg_id(k, i + 1), seg_id(k + 1, i));
    else arcs.unite(seg_id(k, i), seg_id(k + 1, i + 1));
  }

  // Ids in scan order: levels top to bottom, positions left to right.
  std::map<int, int> arc_ids, comp_ids;
  d.segments.resize(static_cast<std::size_t>(nlev) * n);
  for (int k = 0; k < nlev; ++k)
    for (int j = 0; j < n; ++j) {
      int root = arcs.find(seg_id(k, j));
      auto [it, inserted] = arc_ids.emplace(root, static_cast<int>(arc_ids.size()));
      comp_ids.emplace(strand.find(seg_id(k, j)), static_cast<int>(comp_ids.size()));
      Segment& s = d.segments[seg_id(k, j)];
      s.level = k;
      s.position = j;
      s.arc = it->second;
    }
  d.num_arcs = static_cast<int>(arc_ids.size());
  d.components = static_cast<int>(comp_ids.size());

  // Regions: gap 0 is unbounded, gap n is one region, gap g in (0, n) is cut
  // cyclically by the letters with index g.
  std::vector<int> letters_in_gap(n + 1, 0);
  for (const auto& l : b.letters) ++letters_in_gap[l.index];
  d.region_grid.assign(static_cast<std::size_t>(nlev) * (n + 1), -1);
  std::map<std::pair<int, int>, int> cell_ids;  // (gap, cell) -> id
  std::vector<int> seen(n + 1, 0);
  for (int k = 0; k < nlev; ++k) {
    for (int g = 0; g <= n; ++g) {
      int cell = 0;
      if (g > 0 && g < n && letters_in_gap[g] > 0) cell = seen[g] % letters_in_gap[g];
      auto [it, inserted] = cell_ids.emplace(std::make_pair(g, cell), static_cast<int>(cell_ids.size()));
      d.region_grid[static_cast<std::size_t>(k) * (n + 1) + g] = it->second;
    }
    if (L > 0) ++seen[b.letters[k].index];
  }
  d.num_regions = static_cast<int>(cell_ids.size());
  d.unbounded_region = d.region_at(0, 0);

  for (auto& s : d.segments) {
    s.right_region = d.region_at(s.level, s.position);
    s.left_region = d.region_at(s.level, s.position + 1);
  }

  UnionFind pieces(nlev * n);
  for (int k = 0; k < nlev * n; ++k) pieces.unite(k, strand.find(k));
  for (int k = 0; k < L; ++k) {
    const BraidLetter& l = b.letters[k];
    const int i = l.index - 1;
    Crossing c;
    c.letter = k;
    c.position = i;
    c.sign = l.kind == LetterKind::Positive ? 1 : -1;
    if (c.sign > 0) {
      c.over_arc = d.segment(k, i + 1).arc;
      c.under_in = d.segment(k, i).arc;
      c.under_out = d.segment(k + 1, i + 1).arc;
    } else {
      c.over_arc = d.segment(k, i).arc;
      c.under_in = d.segment(k, i + 1).arc;
      c.under_out = d.segment(k + 1, i).arc;
    }
    c.west_region = d.region_at(k, i);
    c.east_region = d.region_at(k, i + 2);
    c.north_region = d.region_at(k, i + 1);
    c.south_region = d.region_at(k + 1, i + 1);
    pieces.unite(seg_id(k, i), seg_id(k, i + 1));
    d.crossings.push_back(c);
  }
  std::map<int, int> piece_ids;
  for (int k = 0; k < nlev * n; ++k) piece_ids.emplace(pieces.find(k), 0);
  d.pieces = static_cast<int>(piece_ids.size());

  if (d.num_regions != L + 1 + d.pieces)
    throw std::logic_error("Euler check failed: " + std::to_string(d.num_regions) + " regions for " + std::to_string(L) +
                           " crossings and " + std::to_string(d.pieces) + " pieces");
  return d;
}

std::string LinkDiagram::dump() const {
  std::ostringstream os;
  os << "strands: " << strands << "\n";
  os << "arcs: " << num_arcs << "\n";
  os << "regions: " << num_regions << "\n";
  os << "unbounded_region: " << unbounded_region << "\n";
  os << "components: " << components << "\n";
  os << "crossings:\n";
  for (const auto& c : crossings)
    os << "  - {letter: " << c.letter << ", sign: " << (c.sign > 0 ? "+1" : "-1") << ", over: " << c.over_arc
       << ", under_in: " << c.under_in << ", under_out: " << c.under_out << ", west: " << c.west_region
       << ", east: " << c.east_region << ", north: " << c.north_region << ", south: " << c.south_region << "}\n";
  os << "segments:\n";
  for (const auto& s : segments)
    os << "  - {level: " << s.level << ", position: " << s.position << ", arc: " << s.arc << ", left: " << s.left_region
       << ", right: " << s.right_region << "}\n";
  return os.str();
}

}  // namespace qv
