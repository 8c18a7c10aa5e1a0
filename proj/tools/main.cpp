// tcplex command-line frontend.
//
// Exit codes: 0 computed (and, where applicable, verified); 1 input
// error; 2 budget exhausted before the answer was certified; 3
// verification failure (also used for internal soundness violations,
// which indicate a bug rather than bad input).

#include <cstdlib>
#include <iostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "tcplex/io.hpp"
#include "tcplex/motion_plan.hpp"

namespace {

using namespace tcplex;

struct Options {
  std::string input;      // positional input file
  std::string pair_path;  // --pair alternative
  std::string cert_path;  // --certificate
  std::string out_path;   // -o for gen
  std::string format = "text";
  uint64_t budget = 0;
  int jobs = 1;
  long seed = 0;  // reserved for the randomized test harness
  bool with_upper_bound = false;
};

uint64_t env_budget() {
  if (const char* env = std::getenv("TCPLEX_BUDGET")) {
    try {
      size_t pos = 0;
      uint64_t v = std::stoull(env, &pos);
      if (pos != std::string(env).size() || v == 0) throw std::exception();
      return v;
    } catch (...) {
      throw InputError(std::string("TCPLEX_BUDGET is not a positive integer: '") +
                       env + "'");
    }
  }
  return kDefaultBudget;
}

std::string default_cert_path(const std::string& input) {
  auto slash = input.find_last_of('/');
  auto dot = input.find_last_of('.');
  bool has_ext =
      dot != std::string::npos && (slash == std::string::npos || dot > slash);
  return (has_ext ? input.substr(0, dot) : input) + ".cert.json";
}

ParsedPair load_input(const Options& o, bool need_sub, const std::string& cmd) {
  const std::string& path = o.pair_path.empty() ? o.input : o.pair_path;
  if (path.empty())
    throw InputError(cmd + ": no input file (pass a path or --pair <file>)");
  ParsedPair p = parse_pair_file(path);
  if (need_sub && !p.L)
    throw InputError(path + ": '" + cmd + "' needs a 'subcomplex' block");
  return p;
}

TcOptions tc_options(const Options& o) {
  return TcOptions{o.budget, o.jobs, o.with_upper_bound};
}

int run_product(const Options& o) {
  ParsedPair p = load_input(o, false, "product");
  ComplexPtr R = p.L ? p.L->complex() : p.K;
  ComplexPtr P = categorical_product(p.K, R);
  if (o.format == "json") {
    std::cout << "{\"name\": \"" << P->name() << "\", \"vertices\": "
              << P->vertex_count() << ", \"facets\": " << P->facet_count()
              << "}\n";
  } else {
    std::cout << serialize_pair(P);
  }
  return 0;
}

int run_core(const Options& o) {
  ParsedPair p = load_input(o, false, "core");
  CollapseTrace t = core_of(p.K);
  if (o.format == "json") {
    std::cout << core_json(t);
    return 0;
  }
  for (const auto& s : t.steps)
    std::cout << "delete " << s.removed << "  (dominated by " << s.dominator
              << ")\n";
  std::cout << "core of '" << p.K->name() << "': " << t.core->vertex_count()
            << " vertices, " << t.core->facet_count() << " facets\n";
  return 0;
}

int run_collapsible(const Options& o) {
  ParsedPair p = load_input(o, false, "collapsible");
  bool yes = is_strongly_collapsible(p.K);
  if (o.format == "json")
    std::cout << "{\"strongly_collapsible\": " << (yes ? "true" : "false")
              << "}\n";
  else
    std::cout << "'" << p.K->name() << "' is "
              << (yes ? "strongly collapsible" : "not strongly collapsible")
              << "\n";
  return 0;
}

int run_categorical(const Options& o) {
  ParsedPair p = load_input(o, true, "categorical");
  CategoricalOutcome out = is_categorical(p.K, *p.L, o.budget, o.jobs);
  if (out.status == SearchStatus::Exhausted) {
    std::cerr << "undecided: state budget exhausted after " << out.visited
              << " states\n";
    return 2;
  }
  bool yes = out.status == SearchStatus::Found;
  if (o.format == "json") {
    std::cout << "{\"categorical\": " << (yes ? "true" : "false");
    if (yes)
      std::cout << ", \"vertex\": \"" << p.K->label(out.witness->vertex)
                << "\", \"chain_length\": " << out.witness->chain.maps.size();
    std::cout << ", \"visited\": " << out.visited << "}\n";
  } else if (yes) {
    std::cout << "'" << p.L->name() << "' is categorical in '" << p.K->name()
              << "' (chain of " << out.witness->chain.maps.size()
              << " maps down to constant '" << p.K->label(out.witness->vertex)
              << "')\n";
  } else {
    std::cout << "'" << p.L->name() << "' is not categorical in '"
              << p.K->name() << "'\n";
  }
  return 0;
}

int run_scat(const Options& o) {
  ParsedPair p = load_input(o, false, "scat");
  ScatResult r = scat(p.K, o.budget, o.jobs);
  std::string cert_path = o.cert_path.empty()
                              ? default_cert_path(o.pair_path.empty()
                                                      ? o.input
                                                      : o.pair_path)
                              : o.cert_path;
  std::string json =
      certificate_json(r.cert, r.value, BoundsReport{}, r.visited, r.notes);
  write_text_file(cert_path, json);
  if (o.format == "json") {
    std::cout << json;
  } else {
    std::cout << "scat(" << p.K->name() << ") = " << r.value << "\n"
              << "pieces: " << r.cert.pieces.size() << "\n"
              << "visited states: " << r.visited << "\n"
              << "certificate: " << cert_path << "\n";
  }
  return 0;
}

int run_tc(const Options& o, bool require_sub) {
  ParsedPair p = load_input(o, require_sub, require_sub ? "tctarget" : "tc");
  bool targeted = bool(p.L);
  ComplexityResult r = targeted ? tc_targeted(p.K, *p.L, tc_options(o))
                                : tc_discrete(p.K, tc_options(o));
  std::string head = targeted
                         ? "TC(" + p.K->name() + ", " + p.L->name() + ")"
                         : "TC(" + p.K->name() + ")";

  if (r.value < 0) {
    std::cout << head << " = infinity\n";
    for (const auto& n : r.notes) std::cout << "note: " << n << "\n";
    return 0;
  }

  std::string cert_path = o.cert_path.empty()
                              ? default_cert_path(o.pair_path.empty()
                                                      ? o.input
                                                      : o.pair_path)
                              : o.cert_path;
  std::string json =
      certificate_json(r.cert, r.value, r.bounds, r.visited, r.notes);
  write_text_file(cert_path, json);
  if (o.format == "json") {
    std::cout << json;
    return 0;
  }
  std::cout << head << " = " << r.value << "\n";
  if (r.bounds.scat_K >= 0)
    std::cout << "scat(" << p.K->name() << ") = " << r.bounds.scat_K << "\n";
  if (r.bounds.scat_KK >= 0)
    std::cout << "scat(" << p.K->name() << " x " << p.K->name()
              << ") = " << r.bounds.scat_KK << "\n";
  std::cout << "pieces: " << r.cert.pieces.size() << "\n"
            << "visited states: " << r.visited << "\n"
            << "certificate: " << cert_path << "\n";
  for (const auto& n : r.notes) std::cout << "note: " << n << "\n";
  return 0;
}

int run_bounds(const Options& o) {
  ParsedPair p = load_input(o, false, "bounds");
  Subcomplex L = p.L ? *p.L : Subcomplex::whole(p.K);
  BoundsCheck bc = check_bounds(p.K, L, tc_options(o));
  if (o.format == "json")
    std::cout << bounds_json(bc);
  else
    for (const auto& line : bc.lines) std::cout << line << "\n";
  if (!bc.ok) {
    std::cerr << "bounds check FAILED: a theorem-backed inequality is "
                 "violated; this is a solver bug\n";
    return 3;
  }
  return 0;
}

int run_verify(const Options& o) {
  if (o.input.empty()) throw InputError("verify: no certificate file");
  CoverCertificate cert = load_certificate_file(o.input);
  std::string why;
  if (!verify_cover(cert, &why)) {
    std::cerr << "verification FAILED: " << why << "\n";
    return 3;
  }
  std::cout << "certificate verifies: " << cert.pieces.size()
            << " pieces covering '" << cert.target->name() << "' (value "
            << cert.pieces.size() - 1 << ")\n";
  return 0;
}

int run_plan(const Options& o, const std::string& x_label,
             const std::string& y_label) {
  if (o.input.empty()) throw InputError("plan: no certificate file");
  CoverCertificate cert = load_certificate_file(o.input);
  std::string why;
  if (!verify_cover(cert, &why)) {
    std::cerr << "verification FAILED: " << why << "\n";
    return 3;
  }
  MotionPlan plan = motion_plan(cert, cert.K->vertex_checked(x_label),
                                cert.K->vertex_checked(y_label));
  if (o.format == "json") {
    std::cout << plan_json(cert, plan);
    return 0;
  }
  std::cout << "piece: " << plan.piece_index << " ('"
            << cert.pieces[size_t(plan.piece_index)].piece.name() << "')\n"
            << "points:";
  for (VertexId v : plan.points) std::cout << " " << cert.K->label(v);
  std::cout << "\ntail_start: " << plan.tail_start << "\n";
  return 0;
}

int run_gen(const Options& o, const std::string& family,
            const std::vector<int>& params, int with_sub, bool has_sub) {
  ComplexPtr K;
  std::optional<Subcomplex> L;

  auto need = [&](size_t n) {
    if (params.size() != n)
      throw InputError("gen " + family + ": expected " + std::to_string(n) +
                       " parameter(s)");
  };

  if (family == "simplex") {
    need(1);
    K = gen_simplex(params[0]);
  } else if (family == "boundary") {
    need(1);
    K = gen_boundary(params[0]);
  } else if (family == "circle") {
    need(1);
    K = gen_circle(params[0]);
  } else if (family == "interval") {
    need(1);
    K = gen_interval(params[0]);
  } else if (family == "wedge") {
    if (params.empty()) throw InputError("gen wedge: needs cycle sizes");
    K = gen_wedge(params);
  } else {
    throw InputError("gen: unknown family '" + family +
                     "' (simplex, boundary, circle, interval, wedge)");
  }

  if (has_sub) {
    if (family == "wedge") {
      // The sub-wedge is one cycle: the first one of the requested size.
      int which = -1;
      for (size_t i = 0; i < params.size() && which < 0; ++i)
        if (params[i] == with_sub) which = int(i);
      if (which < 0)
        throw InputError("gen wedge: no cycle of size " +
                         std::to_string(with_sub) + " to use as subcomplex");
      std::vector<std::vector<std::string>> gens;
      std::string c = "c" + std::to_string(which + 1) + "_";
      int m = params[size_t(which)];
      std::vector<std::string> ring = {"w"};
      for (int j = 1; j < m; ++j) ring.push_back(c + std::to_string(j));
      for (int j = 0; j < m; ++j)
        gens.push_back({ring[size_t(j)], ring[size_t((j + 1) % m)]});
      L = Subcomplex::from_labels(K, "circle" + std::to_string(with_sub),
                                  gens);
    } else {
      // A single vertex v<n>.
      std::string lab = "v" + std::to_string(with_sub);
      K->vertex_checked(lab);
      L = Subcomplex::from_labels(K, "vertex", {{lab}});
    }
  }

  std::string text = serialize_pair(K, L ? &*L : nullptr);
  if (o.out_path.empty())
    std::cout << text;
  else
    write_text_file(o.out_path, text);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact solver for contiguity-based motion-planning "
               "invariants of finite simplicial complexes"};
  app.require_subcommand(1);

  Options o;
  app.add_option("--budget", o.budget,
                 "state budget per contiguity scan (default: TCPLEX_BUDGET "
                 "or 5000000)");
  app.add_option("--jobs", o.jobs, "worker threads for the scans")
      ->check(CLI::PositiveNumber);
  app.add_option("--format", o.format, "output format")
      ->check(CLI::IsMember({"text", "json"}));
  app.add_option("--seed", o.seed, "seed for randomized harness runs");

  auto add_input = [&](CLI::App* sub, bool with_cert) {
    sub->add_option("input", o.input, "complex / pair file");
    sub->add_option("--pair", o.pair_path, "pair file (same as the positional)");
    if (with_cert)
      sub->add_option("--certificate", o.cert_path,
                      "where to write the certificate (default: "
                      "<input>.cert.json)");
    sub->fallthrough();
  };

  add_input(app.add_subcommand("product", "categorical product of the pair"),
            false);
  add_input(app.add_subcommand("core", "iterated strong collapse"), false);
  add_input(app.add_subcommand("collapsible",
                               "is the complex strongly collapsible?"),
            false);
  add_input(app.add_subcommand(
                "categorical",
                "is the subcomplex categorical in the complex?"),
            false);
  add_input(app.add_subcommand("scat", "simplicial LS-category"), true);

  CLI::App* tc = app.add_subcommand(
      "tc", "topological complexity (targeted when a subcomplex is given)");
  add_input(tc, true);
  tc->add_flag("--with-upper-bound", o.with_upper_bound,
               "also compute scat(K x K)");

  CLI::App* tct = app.add_subcommand(
      "tctarget", "targeted complexity (subcomplex required)");
  add_input(tct, true);
  tct->add_flag("--with-upper-bound", o.with_upper_bound,
                "also compute scat(K x K)");

  CLI::App* bounds = app.add_subcommand(
      "bounds", "audit the theorem-backed inequality chain");
  add_input(bounds, false);
  bounds->add_flag("--with-upper-bound", o.with_upper_bound,
                   "also compute scat(K x K)");

  CLI::App* verify =
      app.add_subcommand("verify", "re-check a certificate (no search)");
  verify->add_option("certificate", o.input, "certificate file")->required();
  verify->fallthrough();

  std::string x_label, y_label;
  CLI::App* plan = app.add_subcommand("plan", "motion plan for one query");
  plan->add_option("certificate", o.input, "certificate file")->required();
  plan->add_option("x", x_label, "start vertex label")->required();
  plan->add_option("y", y_label, "goal vertex label (in L)")->required();
  plan->fallthrough();

  std::string family;
  std::vector<int> params;
  int with_sub = 0;
  CLI::App* gen = app.add_subcommand("gen", "generate a complex / pair file");
  gen->add_option("family", family, "simplex|boundary|circle|interval|wedge")
      ->required();
  gen->add_option("params", params, "family parameters");
  CLI::Option* ws = gen->add_option(
      "--with-sub", with_sub,
      "emit a subcomplex too (wedge: the cycle of this size)");
  gen->add_option("-o,--output", o.out_path, "write here instead of stdout");
  gen->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    app.exit(e);
    return 1;
  }

  try {
    if (o.budget == 0) o.budget = env_budget();

    if (app.got_subcommand("product")) return run_product(o);
    if (app.got_subcommand("core")) return run_core(o);
    if (app.got_subcommand("collapsible")) return run_collapsible(o);
    if (app.got_subcommand("categorical")) return run_categorical(o);
    if (app.got_subcommand("scat")) return run_scat(o);
    if (app.got_subcommand("tc")) return run_tc(o, false);
    if (app.got_subcommand("tctarget")) return run_tc(o, true);
    if (app.got_subcommand("bounds")) return run_bounds(o);
    if (app.got_subcommand("verify")) return run_verify(o);
    if (app.got_subcommand("plan")) return run_plan(o, x_label, y_label);
    if (app.got_subcommand("gen"))
      return run_gen(o, family, params, with_sub, ws->count() > 0);
    return 1;
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const ExhaustedError& e) {
    std::cerr << "exhausted: " << e.what() << "\n";
    if (e.incumbent_value >= 0)
      std::cerr << "best cover found so far gives an upper bound of "
                << e.incumbent_value << "\n";
    return 2;
  } catch (const std::logic_error& e) {
    std::cerr << "soundness violation (bug): " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
