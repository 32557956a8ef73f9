#include "qv/invariant.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include <yaml-cpp/yaml.h>

#include "qv/error.hpp"

namespace qv {

IntLaurent default_lift(const GroundRing& ring, RingElement e) {
  return ring.augmentation_invertible() ? ring.normalized_lift(e) : ring.canonical_lift(e);
}

GroupRingElement::GroupRingElement(GroundRing ring) : ring_(std::move(ring)) {}

GroupRingElement GroupRingElement::monomial(const GroundRing& ring, RingElement e, std::int64_t coeff) {
  GroupRingElement g(ring);
  g.add_term(coeff, e);
  return g;
}

void GroupRingElement::add_term(std::int64_t coeff, RingElement e) { add_term(coeff, e, default_lift(ring_, e)); }

void GroupRingElement::add_term(std::int64_t coeff, const IntLaurent& lift) { add_term(coeff, ring_.reduce(lift), lift); }

void GroupRingElement::add_term(std::int64_t coeff, RingElement e, const IntLaurent& lift) {
  if (ring_.reduce(lift) != e)
    throw Error(Errc::InvalidArgument, "lift " + lift.to_string() + " does not reduce to " + ring_.format(e));
  if (coeff == 0) return;
  const IntLaurent key = lift.modulus() == 0 ? lift : lift.as_integer();
  auto& slot = terms_[{e.index, key}];
  slot += coeff;
  if (slot == 0) terms_.erase({e.index, key});
}

std::vector<GroupRingTerm> GroupRingElement::terms() const {
  std::vector<GroupRingTerm> out;
  for (const auto& [k, c] : terms_) out.push_back({c, RingElement{k.first}, k.second});
  return out;
}

std::map<RingElement, std::int64_t> GroupRingElement::collapsed() const {
  std::map<RingElement, std::int64_t> out;
  for (const auto& [k, c] : terms_) out[RingElement{k.first}] += c;
  for (auto it = out.begin(); it != out.end();) it = it->second == 0 ? out.erase(it) : std::next(it);
  return out;
}

std::int64_t GroupRingElement::eval_t1() const {
  std::int64_t s = 0;
  for (const auto& [k, c] : terms_) s += c;
  return s;
}

bool operator==(const GroupRingElement& a, const GroupRingElement& b) {
  return a.ring_.same_ring(b.ring_) && a.collapsed() == b.collapsed();
}

bool GroupRingElement::identical(const GroupRingElement& other) const {
  return ring_.same_ring(other.ring_) && terms_ == other.terms_;
}

GroupRingElement& GroupRingElement::operator+=(const GroupRingElement& other) {
  if (!ring_.same_ring(other.ring_)) throw Error(Errc::InvalidArgument, "group ring elements over different rings");
  for (const auto& [k, c] : other.terms_) add_term(c, RingElement{k.first}, k.second);
  return *this;
}

GroupRingElement operator*(const GroupRingElement& a, const GroupRingElement& b) {
  if (!a.ring_.same_ring(b.ring_)) throw Error(Errc::InvalidArgument, "group ring elements over different rings");
  GroupRingElement out(a.ring_);
  for (const auto& [ka, ca] : a.terms_)
    for (const auto& [kb, cb] : b.terms_)
      out.add_term(ca * cb, a.ring_.add(RingElement{ka.first}, RingElement{kb.first}), ka.second + kb.second);
  return out;
}

GroupRingElement GroupRingElement::scaled(std::int64_t c) const {
  GroupRingElement out(ring_);
  for (const auto& [k, v] : terms_) out.add_term(v * c, RingElement{k.first}, k.second);
  return out;
}

std::string GroupRingElement::to_string() const {
  auto coll = collapsed();
  if (coll.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : coll) {
    std::int64_t mag = c < 0 ? -c : c;
    if (first) os << (c < 0 ? "-" : "");
    else os << (c < 0 ? " - " : " + ");
    first = false;
    if (e == ring_.zero()) {
      os << mag;
      continue;
    }
    if (mag != 1) os << mag << "*";
    os << "t^(" << ring_.format(e) << ")";
  }
  return os.str();
}

std::int64_t groupring_eval_t1(const GroupRingElement& g) { return g.eval_t1(); }

std::string emit_groupring(const GroupRingElement& g) {
  const GroundRing& ring = g.ring();
  std::ostringstream os;
  os << "p: " << ring.p() << "\n";
  os << "h: [";
  for (std::size_t i = 0; i < ring.modulus().size(); ++i) os << (i ? ", " : "") << ring.modulus()[i];
  os << "]\n";
  auto terms = g.terms();
  if (terms.empty()) {
    os << "terms: []\n";
    return os.str();
  }
  os << "terms:\n";
  for (const auto& t : terms)
    os << "  - {coeff: " << t.coeff << ", exp_in_S: \"" << ring.format(t.exponent) << "\", lift: \"" << t.lift.to_string()
       << "\"}\n";
  return os.str();
}

void emit_groupring(const GroupRingElement& g, const std::string& path) {
  std::ofstream f(path);
  if (!f) throw Error(Errc::InvalidArgument, "cannot write " + path);
  f << emit_groupring(g);
}

namespace {

[[noreturn]] void parse_fail(const YAML::Mark& mark, const std::string& msg) {
  if (mark.is_null()) throw Error(Errc::ParseError, msg);
  throw Error(Errc::ParseError, "line " + std::to_string(mark.line + 1) + ", column " + std::to_string(mark.column + 1) + ": " + msg);
}

void check_keys(const YAML::Node& node, const std::set<std::string>& allowed, const std::set<std::string>& required) {
  if (!node.IsMap()) parse_fail(node.Mark(), "expected a mapping");
  std::set<std::string> seen;
  for (const auto& kv : node) {
    const std::string key = kv.first.as<std::string>();
    if (!allowed.count(key)) parse_fail(kv.first.Mark(), "unknown field '" + key + "'");
    seen.insert(key);
  }
  for (const auto& r : required)
    if (!seen.count(r)) parse_fail(node.Mark(), "missing field '" + r + "'");
}

template <typename T>
T scalar(const YAML::Node& node, const std::string& what) {
  if (!node.IsScalar()) parse_fail(node.Mark(), what + " must be a scalar");
  try {
    return node.as<T>();
  } catch (const YAML::Exception&) {
    parse_fail(node.Mark(), "bad value for " + what);
  }
}

}  // namespace

GroupRingElement parse_groupring(const std::string& text) {
  YAML::Node root;
  try {
    root = YAML::Load(text);
  } catch (const YAML::ParserException& e) {
    parse_fail(e.mark, e.msg);
  }
  check_keys(root, {"p", "h", "terms"}, {"p", "h", "terms"});
  const auto p = scalar<std::int64_t>(root["p"], "p");
  const YAML::Node hn = root["h"];
  if (!hn.IsSequence()) parse_fail(hn.Mark(), "h must be a list of integers");
  std::vector<std::int64_t> h;
  for (const auto& c : hn) h.push_back(scalar<std::int64_t>(c, "h coefficient"));
  GroundRing ring = [&] {
    try {
      return GroundRing::create(p, h);
    } catch (const Error& e) {
      parse_fail(root["p"].Mark(), e.what());
    }
  }();
  GroupRingElement g(ring);
  const YAML::Node terms = root["terms"];
  if (!terms.IsSequence()) parse_fail(terms.Mark(), "terms must be a list");
  for (const auto& t : terms) {
    check_keys(t, {"coeff", "exp_in_S", "lift"}, {"coeff", "exp_in_S"});
    const auto coeff = scalar<std::int64_t>(t["coeff"], "coeff");
    RingElement e;
    try {
      e = ring.parse(scalar<std::string>(t["exp_in_S"], "exp_in_S"));
    } catch (const Error& err) {
      parse_fail(t["exp_in_S"].Mark(), err.what());
    }
    if (!t["lift"]) {
      g.add_term(coeff, e);
      continue;
    }
    IntLaurent lift;
    try {
      lift = parse_laurent(scalar<std::string>(t["lift"], "lift"));
    } catch (const Error& err) {
      parse_fail(t["lift"].Mark(), err.what());
    }
    if (ring.reduce(lift) != e) parse_fail(t["lift"].Mark(), "lift does not reduce to exp_in_S");
    g.add_term(coeff, e, lift);
  }
  return g;
}

GroupRingElement read_groupring(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw Error(Errc::InvalidArgument, "cannot read " + path);
  std::stringstream ss;
  ss << f.rdbuf();
  return parse_groupring(ss.str());
}

namespace {

void require_cocycle(const CochainPoly& f, const AlexanderQuandle& q, int degree, const StateSumOptions& options) {
  if (f.nvars() != degree)
    throw Error(Errc::ArityMismatch, "expected a " + std::to_string(degree) + "-cochain, got " + std::to_string(f.nvars()) + " variables");
  if (!options.verify_cocycle) return;
  auto report = check_cocycle(f, q);
  if (!report.cocycle) throw Error(Errc::NotACocycle, f.to_string() + " over " + q.describe() + ": " + report.reason);
}

}  // namespace

StateSumResult state_sum_2(const BraidWord& b, const CochainPoly& f, const AlexanderQuandle& q, const ColoringPolicy& policy,
                           const StateSumOptions& options) {
  require_cocycle(f, q, 2, options);
  const GroundRing& ring = q.ring();
  const LinkDiagram d = closure_diagram(b);
  auto colorings = enumerate_colorings(b, d, q, policy, {options.diagnostics, options.threads});
  CompiledCochain eval(f, ring);
  StateSumResult result{GroupRingElement(ring), {}};
  for (const auto& c : colorings) {
    RingElement w = ring.zero();
    LaurentPoly sw(ring.p());
    for (const auto& x : d.crossings) {
      const RingElement args[2] = {c.arcs[x.right_under()], c.arcs[x.over_arc]};
      RingElement v = eval(args);
      w = x.sign > 0 ? ring.add(w, v) : ring.sub(w, v);
      if (options.diagnostics) {
        const LaurentPoly sargs[2] = {c.symbolic_arcs[x.right_under()], c.symbolic_arcs[x.over_arc]};
        LaurentPoly sv = evaluate(f, sargs);
        sw = x.sign > 0 ? sw + sv : sw - sv;
      }
    }
    result.value.add_term(1, w);
    if (options.diagnostics) result.colorings.push_back({c.arcs, ring.zero(), w, sw});
  }
  return result;
}

StateSumResult state_sum_3(const BraidWord& b, const CochainPoly& phi, const AlexanderQuandle& q, const ColoringPolicy& policy,
                           const StateSumOptions& options) {
  require_cocycle(phi, q, 3, options);
  const GroundRing& ring = q.ring();
  const LinkDiagram d = closure_diagram(b);
  auto colorings = enumerate_colorings(b, d, q, policy, {options.diagnostics, options.threads});
  std::vector<RingElement> bases;
  if (policy.kind == ColoringPolicy::Kind::FixArcAndRegion) bases.push_back(policy.region_color);
  else bases = ring.elements();
  CompiledCochain eval(phi, ring);
  StateSumResult result{GroupRingElement(ring), {}};
  ShadowOptions so;
  so.symbolic = options.diagnostics;
  for (const auto& c : colorings)
    for (RingElement z0 : bases) {
      ShadowColoring s = shadow_extend(d, c, z0, q, so);
      RingElement w = ring.zero();
      LaurentPoly sw(ring.p());
      for (const auto& x : d.crossings) {
        const RingElement args[3] = {s.regions[x.west_region], c.arcs[x.right_under()], c.arcs[x.over_arc]};
        RingElement v = eval(args);
        w = x.sign > 0 ? ring.add(w, v) : ring.sub(w, v);
        if (options.diagnostics) {
          const LaurentPoly sargs[3] = {s.symbolic_regions[x.west_region], c.symbolic_arcs[x.right_under()],
                                        c.symbolic_arcs[x.over_arc]};
          LaurentPoly sv = evaluate(phi, sargs);
          sw = x.sign > 0 ? sw + sv : sw - sv;
        }
      }
      result.value.add_term(1, w);
      if (options.diagnostics) result.colorings.push_back({c.arcs, z0, w, sw});
    }
  return result;
}

GroupRingElement compute_invariant(const BraidWord& b, const InvariantConfig& config) {
  if (config.degree == 2) return state_sum_2(b, config.cocycle, config.quandle, config.policy, config.options).value;
  if (config.degree == 3) return state_sum_3(b, config.cocycle, config.quandle, config.policy, config.options).value;
  throw Error(Errc::InvalidArgument, "invariant degree must be 2 or 3");
}

}  // namespace qv
