#include "sgg/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <fstream>
#include <functional>
#include <map>
#include <nlohmann/json.hpp>
#include <optional>
#include <sstream>

#include "sgg/bounds.hpp"
#include "sgg/genus.hpp"
#include "sgg/group_spec.hpp"
#include "sgg/lattice.hpp"
#include "sgg/number_theory.hpp"
#include "sgg/omega.hpp"

namespace sgg {

namespace {

using RangeMap = std::map<std::string, std::vector<std::uint64_t>>;

// "p=3..23,t=3" -> {p: [3..23], t: [3]}
RangeMap parse_ranges(const std::string& text) {
  RangeMap out;
  std::stringstream ss(text);
  std::string item;
  auto number = [&](const std::string& s) -> std::uint64_t {
    if (s.empty() || !std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; }))
      throw ParseError(0, {"integer"}, "bad range bound '" + s + "' in '" + text + "'");
    return std::stoull(s);
  };
  while (std::getline(ss, item, ',')) {
    item.erase(std::remove_if(item.begin(), item.end(), ::isspace), item.end());
    const auto eq = item.find('=');
    if (eq == std::string::npos || eq == 0)
      throw ParseError(0, {"key=lo..hi"}, "bad range item '" + item + "'");
    const std::string key = item.substr(0, eq), value = item.substr(eq + 1);
    const auto dots = value.find("..");
    std::uint64_t lo, hi;
    if (dots == std::string::npos) {
      lo = hi = number(value);
    } else {
      lo = number(value.substr(0, dots));
      hi = number(value.substr(dots + 2));
    }
    if (lo > hi) throw ParseError(0, {"lo <= hi"}, "empty range for " + key);
    if (hi - lo > 1'000'000) throw ParseError(0, {"shorter range"}, "range for " + key + " is too long");
    auto& v = out[key];
    for (std::uint64_t x = lo; x <= hi; ++x) v.push_back(x);
  }
  return out;
}

std::vector<std::uint64_t> range_or(const RangeMap& r, const std::string& key,
                                    std::vector<std::uint64_t> fallback) {
  auto it = r.find(key);
  return it == r.end() ? fallback : it->second;
}

const char* flag(bool b) { return b ? "true" : "false"; }

SimpleGraph read_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorKind::InvalidArgument, "cannot open graph file " + path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(0, {"JSON"}, "graph file " + path + ": " + e.what());
  }
  return graph_from_json(j);
}

struct Common {
  std::size_t order_cap = kDefaultOrderCap;
  double timeout = 300;

  EnumerationOptions enumeration() const {
    return {order_cap, std::chrono::milliseconds(static_cast<std::int64_t>(timeout * 1000))};
  }
};

std::string bound_text(const SimpleGraph& g) {
  if (!is_triangle_free(g)) return "euler_raw=n/a euler_bound=n/a (not triangle-free)";
  const auto b = euler_lower_bound(g);
  return "euler_raw=" + b.raw.str() + " euler_bound=" + b.integer.str();
}

struct Row {
  bool passed;
  std::string text;
};

int report(std::ostream& out, const std::string& title, const std::vector<Row>& rows) {
  std::size_t ok = 0;
  for (const auto& r : rows) {
    out << (r.passed ? "PASS  " : "FAIL  ") << r.text << "\n";
    ok += r.passed ? 1 : 0;
  }
  out << title << ": " << ok << "/" << rows.size() << " passed\n";
  return ok == rows.size() ? kExitOk : kExitVerificationFailed;
}

std::string failed_names(const std::vector<InvariantCheck>& checks) {
  std::string s;
  for (const auto& c : checks)
    if (!c.passed) s += (s.empty() ? "" : "; ") + c.name + (c.detail.empty() ? "" : " [" + c.detail + "]");
  return s;
}

bool all_passed(const std::vector<InvariantCheck>& checks) {
  return std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.passed; });
}

// Pairs (p, t), t >= 2, whose rank-layer family fits under the cap.
std::vector<std::pair<std::uint64_t, unsigned>> constructible_layers(
    const std::vector<std::uint64_t>& ps, const std::vector<std::uint64_t>& ts, std::size_t cap) {
  std::vector<std::pair<std::uint64_t, unsigned>> out;
  for (auto p : ps) {
    if (!is_prime(p)) continue;
    for (auto t : ts) {
      if (t < 2 || t > 63) continue;
      std::uint64_t order = 1;
      bool fits = true;
      for (std::uint64_t i = 0; i < t && fits; ++i) {
        order *= p;
        fits = order <= cap;
      }
      if (fits) out.emplace_back(p, static_cast<unsigned>(t));
    }
  }
  return out;
}

struct NamedGraph {
  std::string name;
  SimpleGraph graph;
};

std::vector<NamedGraph> ineq_corpus(const Common& common) {
  std::vector<NamedGraph> c;
  for (std::size_t n = 4; n <= 8; ++n) c.push_back({"cycle " + std::to_string(n), cycle_graph(n)});
  for (std::size_t n = 2; n <= 6; ++n)
    c.push_back({"K(2," + std::to_string(n) + ")", complete_bipartite(2, n)});
  c.push_back({"K(3,3)", complete_bipartite(3, 3)});
  c.push_back({"K(3,4)", complete_bipartite(3, 4)});
  c.push_back({"K(4,4)", complete_bipartite(4, 4)});
  c.push_back({"Q3", hypercube(3)});
  c.push_back({"Q4", hypercube(4)});
  c.push_back({"grid 3x3", grid_graph(3, 3)});
  c.push_back({"grid 3x4", grid_graph(3, 4)});
  c.push_back({"path 6", path_graph(6)});
  for (auto spec : {"C(6)", "C(12)", "C(30)", "A(2,2)", "A(3,2)", "D(3)", "D(4)", "D(5)", "A(2,3)"}) {
    const auto l = all_subgroups(build_group(spec, common.order_cap), common.enumeration());
    c.push_back({std::string("L(") + spec + ")", hasse_graph(l)});
  }
  return c;
}

int cmd_verify_ineq(std::ostream& out, const Common& common, const GenusBudget& budget) {
  std::vector<Row> rows;
  for (const auto& [name, g] : ineq_corpus(common)) {
    const auto bound = euler_lower_bound(g);
    const auto result = exact_genus(g, budget);
    const bool planar = is_planar(g);
    std::ostringstream text;
    text << name << "  V=" << g.vertex_count() << " E=" << g.edge_count()
         << " euler_raw=" << bound.raw << " euler_bound=" << bound.integer << " genus=";
    bool ok = true;
    if (result.genus) {
      text << *result.genus;
      ok = bound.integer <= *result.genus && planar == (*result.genus == 0);
    } else {
      text << "unknown";
      ok = !planar;
    }
    text << " planar=" << flag(planar);
    rows.push_back({ok, text.str()});
  }
  return report(out, "verify-lemma ineq", rows);
}

int cmd_verify_ciclo(std::ostream& out, const Common& common, const RangeMap& ranges,
                     const std::vector<std::string>& groups) {
  std::vector<Row> rows;
  for (auto t : range_or(ranges, "t", [] {
         std::vector<std::uint64_t> v;
         for (std::uint64_t i = 1; i <= 30; ++i) v.push_back(i);
         return v;
       }())) {
    if (t < 1) continue;
    const auto exact = ciclo_exact_euler(static_cast<unsigned>(t)),
               closed = ciclo_bound(static_cast<unsigned>(t));
    rows.push_back({exact >= closed, "t=" + std::to_string(t) + "  exact_euler=" + exact.str() +
                                         " >= closed_form=" + closed.str()});
  }
  for (const auto& spec : groups) {
    const auto fam = sylow_hypercube(build_group(spec, common.order_cap), common.enumeration());
    const auto checks = check_family_invariants(fam);
    const auto b = family_bounds(fam);
    std::ostringstream text;
    text << spec << "  t=" << fam.parameter("t") << " V=" << b.vertices << " E=" << b.edges
         << " euler_raw=" << b.euler_raw;
    if (!all_passed(checks)) text << "  failed: " << failed_names(checks);
    rows.push_back({all_passed(checks), text.str()});
  }
  return report(out, "verify-lemma ciclo", rows);
}

int cmd_verify_rango(std::ostream& out, const Common& common, const RangeMap& ranges) {
  std::vector<Row> rows;
  std::vector<std::pair<std::uint64_t, unsigned>> pairs;
  if (ranges.empty()) {
    for (auto pt : constructible_layer_parameters(common.order_cap))
      if (pt.first <= 7) pairs.push_back(pt);
  } else {
    pairs = constructible_layers(range_or(ranges, "p", {2, 3, 5, 7}),
                                 range_or(ranges, "t", {2, 3, 4}), common.order_cap);
  }
  for (auto [p, t] : pairs) {
    const auto fam = rank_layer_family(p, t, common.order_cap);
    const auto checks = check_family_invariants(fam);
    const auto b = family_bounds(fam);
    std::ostringstream text;
    text << "p=" << p << " t=" << t << "  V=" << b.vertices << " E=" << b.edges
         << " euler_raw=" << b.euler_raw << " rango_bound=" << b.closed_form;
    if (!all_passed(checks)) text << "  failed: " << failed_names(checks);
    rows.push_back({all_passed(checks), text.str()});
  }
  // The identity [t 1] = [t 2](p^2-1)/(p^(t-1)-1) behind the closed form.
  for (auto p : range_or(ranges, "p", {2, 3, 5, 7})) {
    if (!is_prime(p)) continue;
    for (auto t : range_or(ranges, "t", {2, 3, 4, 5, 6})) {
      if (t < 2 || t > 64) continue;
      const auto ti = static_cast<std::int64_t>(t);
      BigInt pw = 1;
      for (std::int64_t i = 0; i + 1 < ti; ++i) pw *= p;
      const Rational lhs(qbin(ti, 1, p));
      const Rational rhs = Rational(qbin(ti, 2, p)) * Rational(BigInt(p * p - 1), pw - 1);
      rows.push_back({lhs == rhs, "p=" + std::to_string(p) + " t=" + std::to_string(t) +
                                      "  [t 1]=" + lhs.str() + " [t 2](p^2-1)/(p^(t-1)-1)=" +
                                      rhs.str()});
    }
  }
  return report(out, "verify-lemma rango", rows);
}

int cmd_verify_pls(std::ostream& out, const Common& common, const RangeMap& ranges) {
  std::vector<Row> rows;
  for (auto q : range_or(ranges, "q", {11, 13, 19, 23, 25, 27, 29, 31})) {
    std::optional<PslParameters> params;
    try {
      params = select_pls_parameters(q);
    } catch (const Error& e) {
      if (e.kind() == ErrorKind::ExcludedQ || e.kind() == ErrorKind::NotAPrimePower) continue;
      throw;
    }
    const auto fam = psl_dihedral_family(q, common.order_cap);
    const auto checks = check_family_invariants(fam);
    const auto b = family_bounds(fam);
    std::ostringstream text;
    text << "q=" << q << "  n=" << params->n << " a=" << params->a << " b=" << params->b
         << " v=" << b.vertices << " e=" << b.edges << " euler_raw=" << b.euler_raw
         << " n/24=" << Rational(static_cast<std::int64_t>(params->n), 24);
    if (!all_passed(checks)) text << "  failed: " << failed_names(checks);
    rows.push_back({all_passed(checks), text.str()});

    // Every coprime split n = a*b, not only the default one.
    const std::uint64_t n = params->n;
    for (auto a : divisors(n)) {
      const std::uint64_t bb = n / a;
      if (a < 2 || bb < 2 || std::gcd(a, bb) != 1) continue;
      const auto alt = dihedral_omega_family(n, a, bb, common.order_cap);
      const auto alt_checks = check_family_invariants(alt);
      std::ostringstream t2;
      t2 << "q=" << q << "  n=" << n << " split a=" << a << " b=" << bb;
      if (!all_passed(alt_checks)) t2 << "  failed: " << failed_names(alt_checks);
      rows.push_back({all_passed(alt_checks), t2.str()});
    }

    if (q <= 13) {
      const auto v = verify_psl_family(q, common.enumeration());
      std::ostringstream t3;
      t3 << "q=" << q << "  inside PSL(2," << q << "): subgroups=" << v.lattice_size
         << " D_a=" << v.dihedral_a_count << " D_b=" << v.dihedral_b_count
         << " involutions=" << v.involution_count << " v=" << v.vertices << " e=" << v.edges;
      rows.push_back({v.passed, t3.str()});
    }
  }
  return report(out, "verify-lemma pls", rows);
}

int cmd_trend_rango(std::ostream& out, const RangeMap& ranges) {
  out << "p,t,vertices,edges,rango_bound,euler_raw,genus_lower_bound\n";
  for (auto p : range_or(ranges, "p", {3, 5, 7, 11, 13, 17, 19, 23})) {
    if (!is_prime(p)) continue;
    for (auto t : range_or(ranges, "t", {3})) {
      if (t < 2 || t > 64) continue;
      const auto ti = static_cast<unsigned>(t);
      const auto c = rango_counts(p, ti);
      const auto raw = rango_euler(p, ti);
      const BigInt lb = raw > 0 ? raw.ceil() : BigInt(0);
      out << p << "," << t << "," << c.vertices << "," << c.edges << "," << rango_bound(p, ti)
          << "," << raw << "," << lb << "\n";
    }
  }
  return kExitOk;
}

int cmd_trend_pls(std::ostream& out, const RangeMap& ranges) {
  out << "q,n,a,b,vertices,edges,euler_raw,n_over_24,genus_lower_bound\n";
  std::vector<std::uint64_t> fallback;
  for (std::uint64_t q = 3; q <= 200; ++q) fallback.push_back(q);
  for (auto q : range_or(ranges, "q", fallback)) {
    std::optional<PlsBound> b;
    try {
      b = pls_bound(q);
    } catch (const Error& e) {
      if (e.kind() == ErrorKind::ExcludedQ || e.kind() == ErrorKind::NotAPrimePower) continue;
      throw;
    }
    const auto c = pls_counts(b->params.n, b->params.a, b->params.b);
    out << q << "," << b->params.n << "," << b->params.a << "," << b->params.b << ","
        << c.vertices << "," << c.edges << "," << b->raw << "," << b->floor_bound << ","
        << b->raw.ceil() << "\n";
  }
  return kExitOk;
}

void print_family(std::ostream& out, const OmegaFamily& fam, bool json) {
  const auto checks = check_family_invariants(fam);
  const auto b = family_bounds(fam);
  if (json) {
    nlohmann::json j = to_json(fam);
    j["bounds"] = {{"vertices", b.vertices},
                   {"edges", b.edges},
                   {"euler_raw", b.euler_raw.str()},
                   {"euler_bound", b.euler_integer.str()},
                   {"closed_form", b.has_closed_form ? nlohmann::json(b.closed_form.str()) : nlohmann::json()}};
    nlohmann::json inv = nlohmann::json::array();
    for (const auto& c : checks) inv.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
    j["invariants"] = std::move(inv);
    out << j.dump(2) << "\n";
    return;
  }
  out << "kind=" << to_string(fam.kind());
  for (const auto& [k, v] : fam.parameters()) out << " " << k << "=" << v;
  out << "\n";
  out << "v=" << b.vertices << " e=" << b.edges << " euler_raw=" << b.euler_raw
      << " bound=" << b.euler_integer << " closed_form=" << (b.has_closed_form ? b.closed_form.str() : "none")
      << " invariants=" << (all_passed(checks) ? "pass" : "fail") << "\n";
  for (const auto& c : checks)
    if (!c.passed) out << "failed: " << c.name << (c.detail.empty() ? "" : " [" + c.detail + "]") << "\n";
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Subgroup lattices, subgroup graphs and genus bounds", "sgg"};
  app.require_subcommand(1);
  app.fallthrough();
  Common common;
  app.add_option("--order-cap", common.order_cap, "Largest group order to build")->capture_default_str();
  app.add_option("--timeout", common.timeout, "Lattice enumeration budget in seconds")->capture_default_str();

  std::string spec, graph_file, range_text, kind;
  bool json = false, dot = false, exact = false;
  std::uint64_t budget_nodes = GenusBudget{}.max_nodes;
  double time_limit = 60;
  std::uint64_t p = 0, t = 0, q = 0;
  std::vector<std::string> groups{"C(2)", "C(6)", "C(30)", "D(3)", "D(15)", "S(4)"};

  auto* lattice = app.add_subcommand("lattice", "Enumerate subgroups and count them by order");
  lattice->add_option("spec", spec, "Group spec, e.g. \"A(2,3) x C(5)\"")->required();
  lattice->add_flag("--json", json, "Emit the lattice as JSON");

  auto* hasse = app.add_subcommand("hasse", "Build the subgroup graph L(G)");
  hasse->add_option("spec", spec)->required();
  auto* hasse_dot = hasse->add_flag("--dot", dot, "Emit DOT");
  hasse->add_flag("--json", json, "Emit graph JSON")->excludes(hasse_dot);

  auto* planar = app.add_subcommand("planar", "Planarity of L(G) or of a graph file");
  auto* planar_spec = planar->add_option("spec", spec);
  planar->add_option("--graph", graph_file, "Graph JSON file")->excludes(planar_spec);

  auto* genus = app.add_subcommand("genus", "Euler lower bound and optionally exact genus");
  auto* genus_spec = genus->add_option("spec", spec);
  genus->add_option("--graph", graph_file, "Graph JSON file")->excludes(genus_spec);
  genus->add_option("--budget", budget_nodes, "Search node budget per component")->capture_default_str();
  genus->add_option("--time-limit", time_limit, "Search seconds per component")->capture_default_str();
  genus->add_flag("--exact", exact, "Run the exact rotation-system search");

  auto* omega = app.add_subcommand("omega", "Build an omega family and its bounds");
  omega->require_subcommand(1);
  auto* ciclo = omega->add_subcommand("ciclo", "Sylow-basis hypercube family of a soluble group");
  ciclo->add_option("spec", spec)->required();
  auto* rango = omega->add_subcommand("rango", "Order p and p^2 subgroups of A(p,t)");
  rango->add_option("p", p)->required();
  rango->add_option("t", t)->required();
  auto* pls = omega->add_subcommand("pls", "Dihedral family for PSL(2,q)");
  pls->add_option("q", q)->required();
  for (auto* sub : {ciclo, rango, pls}) sub->add_flag("--json", json, "Emit JSON");

  auto* verify = app.add_subcommand("verify-lemma", "Invariant sweep; exit 1 on any failure");
  verify->add_option("sweep", kind, "ineq | ciclo | rango | pls")
      ->required()
      ->check(CLI::IsMember({"ineq", "ciclo", "rango", "pls"}));
  verify->add_option("--range", range_text, "e.g. p=2..7,t=2..4 or q=11..29");
  verify->add_option("--group", groups, "Groups for the ciclo sweep");
  verify->add_option("--budget", budget_nodes, "Genus search node budget")->capture_default_str();

  auto* trend = app.add_subcommand("trend", "CSV of lower bounds over a parameter range");
  trend->add_option("family", kind, "rango | pls")->required()->check(CLI::IsMember({"rango", "pls"}));
  trend->add_option("--range", range_text, "e.g. p=3..23,t=3 or q=11..199");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    const GenusBudget budget{budget_nodes,
                             std::chrono::milliseconds(static_cast<std::int64_t>(time_limit * 1000)),
                             true};
    auto subject_graph = [&]() -> SimpleGraph {
      if (!graph_file.empty()) return read_graph_file(graph_file);
      if (spec.empty()) throw ParseError(0, {"spec", "--graph"}, "a group spec or --graph file is required");
      return hasse_graph(all_subgroups(build_group(spec, common.order_cap), common.enumeration()));
    };

    if (*lattice) {
      const auto g = build_group(spec, common.order_cap);
      const auto l = all_subgroups(g, common.enumeration());
      if (json) {
        out << to_json(l).dump() << "\n";
        return kExitOk;
      }
      out << "group=" << g->name() << " order=" << g->order() << " subgroups=" << l.size() << "\n";
      out << "order count\n";
      for (const auto& [order, count] : subgroup_census(l)) out << order << " " << count << "\n";
      return kExitOk;
    }
    if (*hasse) {
      const auto g = build_group(spec, common.order_cap);
      const auto h = hasse_graph(all_subgroups(g, common.enumeration()));
      if (dot) {
        out << to_dot(h, "L(" + g->name() + ")");
      } else if (json) {
        out << to_json(h).dump() << "\n";
      } else {
        out << "|V|=" << h.vertex_count() << " |E|=" << h.edge_count()
            << " triangle-free=" << flag(is_triangle_free(h)) << " bipartite=" << flag(is_bipartite(h))
            << "\n";
      }
      return kExitOk;
    }
    if (*planar) {
      const auto g = subject_graph();
      out << "planar=" << flag(is_planar(g)) << "\n";
      return kExitOk;
    }
    if (*genus) {
      const auto g = subject_graph();
      out << "|V|=" << g.vertex_count() << " |E|=" << g.edge_count() << " " << bound_text(g) << "\n";
      if (exact) {
        const auto r = exact_genus(g, budget);
        out << "genus=" << (r.genus ? std::to_string(*r.genus) : "unknown") << "\n";
      }
      return kExitOk;
    }
    if (*omega) {
      std::optional<OmegaFamily> fam;
      if (*ciclo) fam = sylow_hypercube(build_group(spec, common.order_cap), common.enumeration());
      if (*rango) {
        if (t > 64) fail(ErrorKind::InvalidArgument, "t is too large");
        fam = rank_layer_family(p, static_cast<unsigned>(t), common.order_cap);
      }
      if (*pls) fam = psl_dihedral_family(q, common.order_cap);
      print_family(out, *fam, json);
      return all_passed(check_family_invariants(*fam)) ? kExitOk : kExitVerificationFailed;
    }
    if (*verify) {
      const RangeMap ranges = parse_ranges(range_text);
      if (kind == "ineq") return cmd_verify_ineq(out, common, budget);
      if (kind == "ciclo") return cmd_verify_ciclo(out, common, ranges, groups);
      if (kind == "rango") return cmd_verify_rango(out, common, ranges);
      return cmd_verify_pls(out, common, ranges);
    }
    if (*trend) {
      const RangeMap ranges = parse_ranges(range_text);
      return kind == "rango" ? cmd_trend_rango(out, ranges) : cmd_trend_pls(out, ranges);
    }
  } catch (const Error& e) {
    err << "error [" << to_string(e.kind()) << "]: " << e.what() << "\n";
    if (e.is_resource_limit()) return kExitResourceLimit;
    if (e.kind() == ErrorKind::Internal || e.kind() == ErrorKind::FamilyNotFound)
      return kExitVerificationFailed;
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace sgg
