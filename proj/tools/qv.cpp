#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "qv/error.hpp"
#include "qv/expansion.hpp"
#include "qv/reference.hpp"
#include "qv/rmatrix.hpp"

namespace {

using namespace qv;

struct RunConfig {
  std::int64_t p = 0;
  std::string h;
  std::string w = "w";
  std::string braid;
  int deg = 2;
  std::string cocycle;
  std::string policy = "sum-all";
  std::int64_t a = 1, b = 1;
  int D = 8;
  std::string out;
  std::string in;
  bool diag = false;
  bool no_verify = false;
  unsigned threads = 1;
  std::string example;
  int n = 3;
};

std::vector<std::int64_t> parse_coeffs(const std::string& text) {
  std::vector<std::int64_t> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoll(item, &used));
      if (item.find_first_not_of(" \t", used) != std::string::npos) throw std::invalid_argument(item);
    } catch (const std::logic_error&) {
      throw CLI::ValidationError("--h", "expected comma-separated integers, got '" + text + "'");
    }
  }
  if (out.empty()) throw CLI::ValidationError("--h", "modulus must not be empty");
  return out;
}

GroundRing make_ring(const RunConfig& c) { return GroundRing::create(c.p, parse_coeffs(c.h)); }

AlexanderQuandle make_quandle(const RunConfig& c) {
  GroundRing ring = make_ring(c);
  return AlexanderQuandle::create(ring, ring.parse(c.w));
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::InvalidArgument, "cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// A cocycle file holds one polynomial; its lines are summed, `#` starts a comment.
NamedCocycle load_cocycle(const std::string& selector, const AlexanderQuandle& q, int nvars) {
  if (!std::filesystem::is_regular_file(selector)) return named_cocycle(selector, q);
  std::stringstream lines(slurp(selector));
  std::string line, text;
  while (std::getline(lines, line)) {
    line = line.substr(0, line.find('#'));
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    text += (text.empty() ? "(" : "+(") + line + ")";
  }
  if (text.empty()) throw Error(Errc::ParseError, selector + ": no polynomial found");
  CochainPoly f = parse_cochain(text, q.ring().p(), nvars);
  return {selector, f.nvars(), std::move(f)};
}

void write_out(const RunConfig& c, const std::string& text) {
  if (c.out.empty()) return;
  std::ofstream o(c.out);
  if (!o) throw Error(Errc::InvalidArgument, "cannot write " + c.out);
  o << text;
}

int cmd_axioms(const RunConfig& c) {
  auto q = make_quandle(c);
  auto report = check_axioms(q);
  std::cout << q.describe() << "\n" << report.to_string() << "\n";
  return report.passed ? 0 : 1;
}

int cmd_basis(const RunConfig& c) {
  auto q = make_quandle(c);
  if (c.deg != 2 && c.deg != 3) throw CLI::ValidationError("--deg", "must be 2 or 3");
  auto basis = c.deg == 2 ? basis_h2(q) : basis_h3(q);
  std::cout << "# H^" << c.deg << " basis over " << q.describe() << ": " << basis.size() << " elements\n";
  for (const auto& e : basis) std::cout << e.label() << "\t" << e.poly.to_string() << "\n";
  return 0;
}

int cmd_cocycle_check(const RunConfig& c) {
  auto q = make_quandle(c);
  auto named = load_cocycle(c.cocycle, q, 0);
  auto report = check_cocycle(named.poly, q);
  std::cout << named.poly.to_string() << "\n";
  std::cout << "cocycle: " << (report.cocycle ? "true" : "false");
  if (!report.cocycle) std::cout << " (" << report.reason << ")";
  std::cout << "\n";
  return report.cocycle ? 0 : 1;
}

int cmd_color(const RunConfig& c) {
  auto q = make_quandle(c);
  auto b = parse_braid(c.braid);
  auto d = closure_diagram(b);
  auto policy = parse_policy(c.policy, q.ring());
  auto colorings = enumerate_colorings(b, d, q, policy, {c.diag, c.threads});
  std::cout << colorings.size() << "\n";
  if (c.diag) {
    for (const auto& col : colorings) {
      for (std::size_t a = 0; a < col.arcs.size(); ++a)
        std::cout << (a ? " " : "") << a << "=" << q.ring().format(col.arcs[a]) << " [" << col.symbolic_arcs[a].to_string()
                  << "]";
      std::cout << "\n";
    }
  }
  return 0;
}

InvariantConfig make_config(const RunConfig& c) {
  auto q = make_quandle(c);
  auto named = load_cocycle(c.cocycle, q, c.deg);
  if (named.degree != c.deg)
    throw Error(Errc::ArityMismatch, "cocycle '" + c.cocycle + "' has " + std::to_string(named.degree) + " variables, --deg is " +
                                         std::to_string(c.deg));
  InvariantConfig config{c.deg, named.poly, q, parse_policy(c.policy, q.ring()), {}};
  config.options.verify_cocycle = !c.no_verify;
  config.options.diagnostics = c.diag;
  config.options.threads = c.threads;
  return config;
}

int cmd_invariant(const RunConfig& c) {
  auto config = make_config(c);
  auto b = parse_braid(c.braid);
  const GroundRing& ring = config.quandle.ring();
  StateSumResult result = config.degree == 2
                              ? state_sum_2(b, config.cocycle, config.quandle, config.policy, config.options)
                              : state_sum_3(b, config.cocycle, config.quandle, config.policy, config.options);
  const std::string yaml = emit_groupring(result.value);
  std::cout << "# " << result.value.to_string() << "\n" << yaml;
  write_out(c, yaml);
  for (const auto& w : result.colorings) {
    std::cout << "#";
    if (config.degree == 3) std::cout << " base=" << ring.format(w.base);
    for (std::size_t a = 0; a < w.arcs.size(); ++a) std::cout << " " << a << "=" << ring.format(w.arcs[a]);
    std::cout << " weight=" << ring.format(w.weight) << " [" << w.symbolic_weight.to_string() << "]\n";
  }
  return 0;
}

int cmd_operator(const RunConfig& c) {
  auto q = make_quandle(c);
  auto named = load_cocycle(c.cocycle, q, 2);
  auto r = build_r_matrix(named.poly, q, !c.no_verify);
  auto g = operator_invariant(parse_braid(c.braid), r);
  const std::string yaml = emit_groupring(g);
  std::cout << "# " << g.to_string() << "\n" << yaml;
  write_out(c, yaml);
  return 0;
}

int cmd_ybe(const RunConfig& c) {
  auto q = make_quandle(c);
  auto named = load_cocycle(c.cocycle, q, 2);
  auto r = build_r_matrix(named.poly, q, !c.no_verify);
  const bool ybe = check_yang_baxter(r);
  auto markov = markov_report(r, Endomorphism::identity(q.order()));
  auto mark = [](bool ok) { return ok ? "pass" : "FAIL"; };
  std::cout << "yang-baxter: " << mark(ybe) << "\n";
  std::cout << "markov trace (h=id, R): " << mark(markov.trace_positive) << "\n";
  std::cout << "markov trace (h=id, R^-1): " << mark(markov.trace_negative) << "\n";
  std::cout << "R(h x h) = (h x h)R: " << mark(markov.commutes) << "\n";
  return ybe && markov.passed() ? 0 : 1;
}

void print_series(const HbarSeries& s, std::int64_t p) {
  std::cout << s.to_string() << "\n" << vassiliev_coeffs(s, p).table(s);
}

int cmd_expand(const RunConfig& c) {
  auto g = read_groupring(c.in);
  SubstitutionParams params{g.ring(), c.a, c.b, c.D};
  validate_substitution(params);
  print_series(expand(g, params), g.ring().p());
  return 0;
}

int cmd_vassiliev(const RunConfig& c) {
  auto config = make_config(c);
  auto b = parse_braid(c.braid);
  SubstitutionParams params{config.quandle.ring(), c.a, c.b, c.D};
  auto s = singular_vassiliev(b, config, params);
  print_series(s, params.ring.p());
  auto low = vassiliev_coeffs(s, params.ring.p()).lowest_nonzero();
  std::cout << "double points: " << b.singular_count() << "\n";
  std::cout << "lowest nonzero residue: " << (low ? std::to_string(*low) : std::string("none")) << "\n";
  return 0;
}

int cmd_diagram(const RunConfig& c) {
  std::cout << closure_diagram(parse_braid(c.braid)).dump();
  return 0;
}

int cmd_repro(const RunConfig& c) {
  if (c.example != "example110" && c.example != "example111")
    throw CLI::ValidationError("example", "expected example110 or example111");
  ReferenceExample ex = c.example == "example110" ? example110(c.n) : example111(c.n);
  const std::int64_t p = ex.params.ring.p();
  std::cout << ex.name << ", n = " << c.n << ", braid " << ex.braid.to_string() << "\n";
  std::cout << "ring " << ex.config.quandle.describe() << ", cocycle " << ex.config.cocycle.to_string() << "\n";
  std::cout << "policy " << ex.config.policy.to_string(ex.params.ring) << ", t = e^{" << ex.params.a << "h}, w = e^{"
            << ex.params.b << "h}\n";
  validate_substitution(ex.params);

  std::cout << "\n[reference display, exponents kept as given]\n" << ex.display.to_string() << "\n";
  print_series(expand(ex.display, ex.params), p);

  std::cout << "\n[computed]\n";
  InvariantConfig config = ex.config;
  config.options.verify_cocycle = !c.no_verify;
  config.options.threads = c.threads;
  GroupRingElement g = compute_invariant(ex.braid, config);
  if (c.no_verify && !is_cocycle(config.cocycle, config.quandle)) std::cout << "# warning: not a cocycle over this ring\n";
  std::cout << g.to_string() << "\n";
  std::cout << "t=1: " << g.eval_t1() << "\n";
  std::cout << "equals reference display in Z[S]: " << (g == ex.display ? "yes" : "no") << "\n";
  print_series(expand(g, ex.params), p);
  write_out(c, emit_groupring(g));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Quandle cocycle invariants of braid closures and their Vassiliev residues"};
  app.set_help_flag("--help", "print this help and exit");
  app.require_subcommand(1);
  RunConfig c;

  auto ring_flags = [&](CLI::App* s) {
    s->add_option("--p", c.p, "prime modulus")->required();
    s->add_option("--h", c.h, "modulus polynomial coefficients, constant first (e.g. 1,1,1)")->required();
    s->add_option("--w", c.w, "quandle parameter omega as an expression in w")->capture_default_str();
  };
  auto threads_flag = [&](CLI::App* s) {
    s->add_option("--threads", c.threads, "worker threads (0 = all cores)")->capture_default_str();
  };
  auto invariant_flags = [&](CLI::App* s) {
    ring_flags(s);
    s->add_option("--braid", c.braid, "braid word, e.g. \"2 ; 1 1 1\"")->required();
    s->add_option("--deg", c.deg, "2 or 3")->check(CLI::IsMember({2, 3}))->capture_default_str();
    s->add_option("--cocycle", c.cocycle, "cocycle file or name")->required();
    s->add_option("--policy", c.policy, "sum-all | fix-arc:<id>=<expr> | fix-arc-region:<id>=<expr>,<expr>")
        ->capture_default_str();
    s->add_flag("--no-verify", c.no_verify, "skip the cocycle check");
    threads_flag(s);
  };
  auto series_flags = [&](CLI::App* s) {
    s->add_option("--a", c.a, "t = e^{a hbar}")->required();
    s->add_option("--b", c.b, "w = e^{b hbar}")->required();
    s->add_option("--D", c.D, "truncation degree")->capture_default_str();
  };

  std::map<CLI::App*, int (*)(const RunConfig&)> handlers;

  auto* axioms = app.add_subcommand("axioms", "check the quandle axioms exhaustively");
  ring_flags(axioms);
  handlers[axioms] = cmd_axioms;

  auto* basis = app.add_subcommand("basis", "list the cohomology basis");
  ring_flags(basis);
  basis->add_option("--deg", c.deg, "2 or 3")->check(CLI::IsMember({2, 3}))->capture_default_str();
  handlers[basis] = cmd_basis;

  auto* check = app.add_subcommand("cocycle-check", "brute-force cocycle check");
  ring_flags(check);
  check->add_option("--cocycle", c.cocycle, "cocycle file or name")->required();
  handlers[check] = cmd_cocycle_check;

  auto* color = app.add_subcommand("color", "count colorings of a braid closure");
  ring_flags(color);
  color->add_option("--braid", c.braid, "braid word")->required();
  color->add_option("--policy", c.policy, "coloring policy")->capture_default_str();
  color->add_flag("--diag", c.diag, "list every coloring with its symbolic record");
  threads_flag(color);
  handlers[color] = cmd_color;

  auto* inv = app.add_subcommand("invariant", "state-sum invariant");
  invariant_flags(inv);
  inv->add_option("--out", c.out, "write the group-ring element here");
  inv->add_flag("--diag", c.diag, "per-coloring weights and symbolic lifts");
  handlers[inv] = cmd_invariant;

  auto* op = app.add_subcommand("operator", "braid-trace operator invariant");
  ring_flags(op);
  op->add_option("--braid", c.braid, "braid word")->required();
  op->add_option("--cocycle", c.cocycle, "2-cocycle file or name")->required();
  op->add_option("--out", c.out, "write the group-ring element here");
  op->add_flag("--no-verify", c.no_verify, "skip the cocycle check");
  handlers[op] = cmd_operator;

  auto* ybe = app.add_subcommand("ybe", "Yang-Baxter and Markov checks of the R-matrix");
  ring_flags(ybe);
  ybe->add_option("--cocycle", c.cocycle, "2-cocycle file or name")->required();
  ybe->add_flag("--no-verify", c.no_verify, "skip the cocycle check");
  handlers[ybe] = cmd_ybe;

  auto* exp = app.add_subcommand("expand", "hbar expansion of a group-ring file");
  exp->add_option("--in", c.in, "group-ring YAML file")->required()->check(CLI::ExistingFile);
  series_flags(exp);
  handlers[exp] = cmd_expand;

  auto* vas = app.add_subcommand("vassiliev", "residues d!u_d mod p, singular letters resolved");
  invariant_flags(vas);
  series_flags(vas);
  handlers[vas] = cmd_vassiliev;

  auto* diagram = app.add_subcommand("diagram", "dump arcs, crossings and regions");
  diagram->add_option("--braid", c.braid, "braid word")->required();
  handlers[diagram] = cmd_diagram;

  auto* repro = app.add_subcommand("repro", "reproduce a worked torus-link example");
  repro->add_option("example", c.example, "example110 | example111")->required()->check(
      CLI::IsMember({"example110", "example111"}));
  repro->add_option("--n", c.n, "torus link parameter, a multiple of 3")->capture_default_str();
  repro->add_option("--out", c.out, "write the computed group-ring element here");
  repro->add_flag("--no-verify", c.no_verify, "compute even if the cocycle check fails");
  threads_flag(repro);
  handlers[repro] = cmd_repro;

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    for (auto* sub : app.get_subcommands()) return handlers.at(sub)(c);
  } catch (const CLI::Error& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    std::cout.flush();
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cout.flush();
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
