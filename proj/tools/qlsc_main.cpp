#include "qlsc/macdonald.hpp"
#include "qlsc/qbg.hpp"
#include "qlsc/qls.hpp"
#include "qlsc/sib.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

using namespace qlsc;
using nlohmann::ordered_json;

namespace {

constexpr int kMaxCliRank = 6;

struct RunConfig {
  int n = 0;
  std::vector<long long> lambda;
  std::vector<long long> mu;
  std::string variant = "c2";
  std::string b;
  int box_radius = 2;
  std::string format = "text";
  bool count = false;
  bool dot = false;
  bool lift = false;
};

// Thrown for inputs that violate a documented precondition; maps to exit code 2.
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void add_common(CLI::App* sub, RunConfig& cfg, bool needs_lambda) {
  sub->add_option("--n", cfg.n, "Rank of B_n")->required()->check(CLI::Range(2, kMaxCliRank));
  auto* lam = sub->add_option("--lambda", cfg.lambda, "Dominant weight in e-coordinates, e.g. 2,1")->delimiter(',');
  if (needs_lambda) lam->required();
  sub->add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"text", "json", "dot"}));
}

Weight lambda_of(const RunConfig& cfg) {
  if (static_cast<int>(cfg.lambda.size()) != cfg.n) {
    throw InputError("--lambda must have exactly n = " + std::to_string(cfg.n) + " entries");
  }
  Weight w = Weight::from_ints(cfg.lambda);
  if (!w.is_dominant()) throw InputError("--lambda must be weakly decreasing and nonnegative");
  return w;
}

Variant variant_of(const RunConfig& cfg) {
  if (cfg.variant == "c2") return Variant::TwistedA2n2;
  if (cfg.variant == "dual") return Variant::DualUntwisted;
  throw InputError("--variant must be c2 or dual");
}

std::optional<Rational> b_of(const RunConfig& cfg) {
  if (cfg.b.empty()) return std::nullopt;
  Rational b;
  try {
    b = parse_rational(cfg.b);
  } catch (const std::exception&) {
    throw InputError("--b must be a rational p/q");
  }
  if (b < 0 || b > 1) throw InputError("--b must lie in [0,1]");
  return b;
}

std::optional<Weight> mu_of(const RunConfig& cfg, const Weight& lambda) {
  if (cfg.mu.empty()) return std::nullopt;
  if (static_cast<int>(cfg.mu.size()) != cfg.n) throw InputError("--mu must have exactly n entries");
  Weight mu = Weight::from_ints(cfg.mu);
  auto orbit = weyl_orbit(lambda);
  if (std::find(orbit.begin(), orbit.end(), mu) == orbit.end()) throw InputError("--mu must lie in the W-orbit of --lambda");
  return mu;
}

std::string format_of(const RunConfig& cfg) { return cfg.dot ? "dot" : cfg.format; }

ordered_json edge_json(const QbgEdge& e) {
  return ordered_json{{"source", e.source_elt.window_vector()},
                      {"target", e.target_elt.window_vector()},
                      {"label", coroot_of(e.label).coords},
                      {"kind", e.kind == EdgeKind::Quantum ? "quantum" : "bruhat"}};
}

int run_qbg(const RunConfig& cfg) {
  IndexSet S;
  std::optional<SubgraphFilter> filter;
  if (!cfg.lambda.empty()) {
    Weight lambda = lambda_of(cfg);
    S = RootSystem(cfg.n).stabilizer(lambda);
    if (auto b = b_of(cfg)) filter = SubgraphFilter{lambda, *b, variant_of(cfg)};
  } else if (!cfg.b.empty()) {
    throw InputError("--b requires --lambda");
  }
  QbgGraph g(cfg.n, S);
  std::string fmt = format_of(cfg);
  if (fmt == "dot") {
    std::cout << to_dot(g, filter ? &*filter : nullptr);
    return 0;
  }
  std::vector<QbgEdge> edges;
  for (const auto& e : g.edges()) {
    if (!filter || edge_admitted(e, *filter)) edges.push_back(e);
  }
  if (cfg.count) {
    std::cout << g.size() << " vertices, " << edges.size() << " edges\n";
    return 0;
  }
  if (fmt == "json") {
    ordered_json j;
    j["vertices"] = ordered_json::array();
    for (const auto& v : g.vertices()) j["vertices"].push_back(v.window_vector());
    j["edges"] = ordered_json::array();
    for (const auto& e : edges) j["edges"].push_back(edge_json(e));
    std::cout << j.dump(2) << "\n";
    return 0;
  }
  for (const auto& e : edges) {
    std::cout << to_string(e.source_elt) << " -> " << to_string(e.target_elt) << "  " << to_string(coroot_of(e.label))
              << (e.kind == EdgeKind::Quantum ? "  quantum" : "  bruhat") << "\n";
  }
  return 0;
}

int run_qls(const RunConfig& cfg) {
  QlsModel model(lambda_of(cfg), variant_of(cfg));
  auto paths = model.enumerate();
  if (cfg.count) {
    std::cout << paths.size() << "\n";
    return 0;
  }
  if (format_of(cfg) == "json") {
    ordered_json j = ordered_json::array();
    for (const auto& eta : paths) j.push_back(ordered_json::parse(to_json(eta)));
    std::cout << j.dump(2) << "\n";
    return 0;
  }
  for (const auto& eta : paths) {
    std::cout << to_string(eta) << "  wt=" << to_string(model.wt(eta)) << "  deg=" << to_string(model.deg(eta)) << "\n";
  }
  return 0;
}

int run_crystal(const RunConfig& cfg) {
  QlsModel model(lambda_of(cfg), variant_of(cfg));
  CrystalGraph g = crystal_graph(model);
  if (format_of(cfg) == "dot") {
    std::cout << to_dot(g);
    return 0;
  }
  if (format_of(cfg) == "json") {
    ordered_json j{{"vertices", g.vertices.size()},
                   {"arrows", g.arrows.size()},
                   {"closed", g.closed},
                   {"connected", g.connected},
                   {"all_reach_highest", g.all_reach_highest}};
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "vertices " << g.vertices.size() << "\narrows " << g.arrows.size() << "\nclosed " << g.closed
              << "\nconnected " << g.connected << "\nall_reach_highest " << g.all_reach_highest << "\n";
  }
  return g.closed && g.connected && g.all_reach_highest ? 0 : 1;
}

void print_character(const GradedCharacter& ch, const std::string& fmt) {
  if (fmt == "json") {
    std::cout << to_json(ch) << "\n";
  } else {
    std::cout << to_text(ch);
  }
}

int run_gch(const RunConfig& cfg) {
  QlsModel model(lambda_of(cfg), variant_of(cfg));
  Weight lambda = model.lambda();
  if (auto mu = mu_of(cfg, lambda)) {
    print_character(nonsymmetric_filtered_character(model, *mu), format_of(cfg));
  } else {
    print_character(model.graded_character(), format_of(cfg));
  }
  return 0;
}

int run_macdonald(const RunConfig& cfg) {
  AlcoveModel os(lambda_of(cfg));
  Weight mu = mu_of(cfg, os.lambda()).value_or(os.lambda_minus());
  if (cfg.count) {
    std::cout << os.enumerate_qb(mu).size() << "\n";
    return 0;
  }
  print_character(os.alcove_character(mu), format_of(cfg));
  return 0;
}

int run_compare(const RunConfig& cfg) {
  Weight lambda = lambda_of(cfg);
  QlsModel model(lambda);
  AlcoveModel os(lambda);
  auto mu = mu_of(cfg, lambda);
  GradedCharacter left = mu ? nonsymmetric_filtered_character(model, *mu) : model.graded_character();
  GradedCharacter right = os.alcove_character(mu.value_or(os.lambda_minus()));
  auto d = first_difference(left, right);
  if (cfg.format == "json") {
    ordered_json j{{"equal", !d}, {"terms", left.size()}, {"dimension", left.dimension()}};
    if (d) j["first_difference"] = *d;
    std::cout << j.dump(2) << "\n";
  } else if (d) {
    std::cout << "unequal: first difference " << *d << "\n";
  } else {
    std::cout << "equal (" << left.size() << " terms, dimension " << left.dimension() << ")\n";
  }
  return d ? 1 : 0;
}

int run_xi(const RunConfig& cfg) {
  Weight lambda = lambda_of(cfg);
  QlsModel model(lambda);
  AlcoveModel os(lambda);
  int failures = 0;
  auto alcove = os.enumerate_qb();
  for (const auto& p : alcove) {
    QlsPath eta = xi_map(os, model, p);
    bool ok = model.is_valid(eta) && model.wt(eta) == Weight::from_ints(p.end().wt()) &&
              model.deg(eta) == Rational(p.qwt_dg()) && xi_inverse(os, model, eta) == p;
    if (!ok) ++failures;
    if (cfg.format == "text" && !cfg.count) std::cout << to_string(p) << "  ->  " << to_string(eta) << (ok ? "" : "  FAILED") << "\n";
  }
  auto qls = model.enumerate();
  for (const auto& eta : qls) {
    if (!(xi_map(os, model, xi_inverse(os, model, eta)) == eta)) ++failures;
  }
  if (cfg.format == "json") {
    ordered_json j{{"alcove_paths", alcove.size()}, {"qls_paths", qls.size()}, {"failures", failures}};
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << alcove.size() << " alcove paths, " << qls.size() << " QLS paths, " << failures << " failures\n";
  }
  return failures == 0 && alcove.size() == qls.size() ? 0 : 1;
}

int run_sib(const RunConfig& cfg) {
  Weight lambda = lambda_of(cfg);
  if (!lambda.is_integral()) throw InputError("--lambda must have integer entries");
  if (cfg.box_radius < 1) throw InputError("--box-radius must be at least 1");
  Rational b = b_of(cfg).value_or(Rational(0));
  if (cfg.lift) {
    QlsModel model(lambda);
    int failures = 0;
    for (const auto& eta : model.enumerate()) {
      Lift l = lift(model, eta, cfg.box_radius);
      bool ok = cl_project(l.path).dirs == eta.dirs && cl_project(l.path).times == eta.times;
      if (!ok) ++failures;
      std::cout << to_string(eta) << "  ->  " << to_string(l.path) << (ok ? "" : "  FAILED") << "\n";
    }
    return failures == 0 ? 0 : 1;
  }
  SibGraph g = sib_edges(lambda, b, cfg.box_radius);
  if (g.boundary_edges > 0) {
    std::cerr << "warning: " << g.boundary_edges << " edges leave the box of radius " << cfg.box_radius << "\n";
  }
  std::string fmt = format_of(cfg);
  if (fmt == "dot") {
    std::cout << to_dot(g);
    return 0;
  }
  if (cfg.count) {
    std::cout << g.vertices.size() << " vertices, " << g.edges.size() << " edges\n";
    return 0;
  }
  if (fmt == "json") {
    ordered_json j;
    j["vertices"] = ordered_json::array();
    for (const auto& x : g.vertices) {
      j["vertices"].push_back(ordered_json{{"w", x.w.window_vector()},
                                           {"z", x.z.window_vector()},
                                           {"mu", x.mu},
                                           {"si_length", si_length(x)}});
    }
    j["edges"] = ordered_json::array();
    for (const auto& e : g.edges) {
      j["edges"].push_back(ordered_json{{"source", e.source}, {"target", e.target}, {"label", to_string(e.label)}});
    }
    std::cout << j.dump(2) << "\n";
    return 0;
  }
  for (const auto& e : g.edges) {
    std::cout << to_string(g.vertices[e.source]) << " -> " << to_string(e.target_elt) << "  " << to_string(e.label)
              << (e.target < 0 ? "  (outside box)" : "") << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Quantum LS paths of type A_{2n}^{(2)} and the matching Macdonald specializations"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto* qbg = app.add_subcommand("qbg", "Quantum Bruhat graph, optionally parabolic and filtered");
  add_common(qbg, cfg, false);
  qbg->add_option("--b", cfg.b, "Filter time p/q (requires --lambda)");
  qbg->add_option("--variant", cfg.variant, "c2 or dual");
  qbg->add_flag("--count", cfg.count, "Print vertex and edge counts");
  qbg->add_flag("--dot", cfg.dot, "Emit DOT");

  auto* qls = app.add_subcommand("qls", "Enumerate quantum LS paths");
  add_common(qls, cfg, true);
  qls->add_option("--variant", cfg.variant, "c2 or dual");
  qls->add_flag("--count", cfg.count, "Print the number of paths");

  auto* crystal = app.add_subcommand("crystal", "Crystal graph and connectedness report");
  add_common(crystal, cfg, true);
  crystal->add_option("--variant", cfg.variant, "c2 or dual");
  crystal->add_flag("--dot", cfg.dot, "Emit DOT");

  auto* gch = app.add_subcommand("gch", "Graded character of the QLS model");
  add_common(gch, cfg, true);
  gch->add_option("--mu", cfg.mu, "Restrict to paths with initial direction below v(mu)")->delimiter(',');

  auto* mac = app.add_subcommand("macdonald", "Alcove-path character E_mu(q,0); P_lambda(q,0) by default");
  add_common(mac, cfg, true);
  mac->add_option("--mu", cfg.mu, "Weight in the orbit of lambda")->delimiter(',');
  mac->add_flag("--count", cfg.count, "Print the number of alcove paths");

  auto* cmp = app.add_subcommand("compare", "Compare the QLS character with the alcove-path character");
  add_common(cmp, cfg, true);
  cmp->add_option("--mu", cfg.mu, "Compare the nonsymmetric characters for this mu")->delimiter(',');

  auto* sib = app.add_subcommand("sib", "Semi-infinite Bruhat graph in a translation box");
  add_common(sib, cfg, true);
  sib->add_option("--b", cfg.b, "Filter time p/q");
  sib->add_option("--box-radius", cfg.box_radius, "Bound on |mu|_inf");
  sib->add_flag("--count", cfg.count, "Print vertex and edge counts");
  sib->add_flag("--dot", cfg.dot, "Emit DOT");
  sib->add_flag("--lift", cfg.lift, "Lift every QLS path and check the projection");

  auto* xi = app.add_subcommand("xi", "Check the alcove-path to QLS bijection element-wise");
  add_common(xi, cfg, true);
  xi->add_flag("--count", cfg.count, "Print only the summary line");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*qbg) return run_qbg(cfg);
    if (*qls) return run_qls(cfg);
    if (*crystal) return run_crystal(cfg);
    if (*gch) return run_gch(cfg);
    if (*mac) return run_macdonald(cfg);
    if (*cmp) return run_compare(cfg);
    if (*sib) return run_sib(cfg);
    if (*xi) return run_xi(cfg);
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
