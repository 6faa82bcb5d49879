#include "cli.hpp"

#include <algorithm>
#include <functional>
#include <optional>

#include <CLI11.hpp>
#include <json.hpp>

#include "t3lab/bounds.hpp"
#include "t3lab/constructions.hpp"
#include "t3lab/errors.hpp"
#include "t3lab/hypercore.hpp"
#include "t3lab/io.hpp"
#include "t3lab/linegraph.hpp"
#include "t3lab/structure.hpp"
#include "t3lab/topology.hpp"

namespace t3lab::cli {

namespace {

using Json = nlohmann::ordered_json;

struct Streams {
  std::ostream& out;
  std::ostream& err;
};

void summarize(std::ostream& err, const BoundReport& rep) {
  err << rep.name << ": " << (rep.pass ? "pass" : "FAIL") << " (" << to_string(rep.lhs)
      << " >= " << to_string(rep.rhs) << ")" << (rep.vacuous ? " vacuous" : "") << "\n";
}

int max_class_size(const Tripartite3Graph& h) {
  return std::max({h.class_size(0), h.class_size(1), h.class_size(2)});
}

// ---------------------------------------------------------------------------
// analyze

struct AnalyzeArgs {
  std::string path;
  std::optional<int> r;
};

int cmd_analyze(const AnalyzeArgs& a, Streams s) {
  const auto h = io::load_t3g(a.path);
  const int r = a.r.value_or(h.max_degree());
  const int nu = nu_exact(h).size;
  const int tau = tau_exact(h).size;
  const int n = max_class_size(h);

  Json j;
  j["nu"] = nu;
  j["tau"] = tau;
  j["epsilon"] = to_string(derived_epsilon(nu, n));
  j["r"] = r;
  j["n"] = n;
  j["classes"] = h.class_sizes();
  j["regular"] = r >= 1 && is_regular(h, r);
  Json c4_counts = Json::array();
  for (int c = 0; c < 3; ++c) {
    c4_counts.push_back(r >= 1 ? find_link_c4s(h, c, r).size() : 0);
  }
  j["c4_counts"] = std::move(c4_counts);
  const auto fano = r >= 1 ? find_fano_components(h, r) : FanoScan{};
  j["fano_count"] = fano.reports.size();
  if (fano.warning) j["warnings"] = Json::array({*fano.warning});

  std::vector<BoundReport> reports;
  auto attempt = [&](const std::function<BoundReport()>& check) {
    try {
      reports.push_back(check());
    } catch (const InputError&) {
      // Preconditions not met; the bound does not apply.
    }
  };
  attempt([&] { return check_thm_1_3(h); });
  attempt([&] { return check_thm_1_2(h, r); });
  attempt([&] { return check_thm_4_1(h, r); });
  attempt([&] { return check_thm_4_2(h, r); });
  attempt([&] { return check_lemma_4_2(h, r); });
  if (r >= 2 && h.max_degree() <= r) {
    attempt([&] { return check_lemma_4_3(h, r); });
    attempt([&] { return check_lemma_4_5(h, r); });
    attempt([&] { return check_lemma_4_6(h, r); });
  }
  Json reps = Json::array();
  for (const auto& rep : reports) {
    reps.push_back(to_json(rep));
    summarize(s.err, rep);
  }
  j["reports"] = std::move(reps);
  const bool pass = all_pass(reports);
  j["pass"] = pass;
  s.out << j.dump() << "\n";
  s.err << "nu=" << nu << " tau=" << tau << " fano=" << fano.reports.size() << "\n";
  return pass ? kExitPass : kExitBoundFailure;
}

// ---------------------------------------------------------------------------
// eta

struct EtaArgs {
  std::string path;
  std::string coeff = "q";
  int cap = 8;
};

int cmd_eta(const EtaArgs& a, Streams s) {
  const auto g = io::load_bmg(a.path);
  if (a.cap < 1) throw InputError("--cap must be >= 1");
  EtaOptions options;
  options.coeff = parse_coefficients(a.coeff);
  options.cap = a.cap;
  const auto line = full_line(g).to_simple_graph();
  const auto value = eta(line, options);

  Json j;
  j["eta"] = to_json(value);
  j["coefficients"] = to_string(options.coeff);
  j["cap"] = a.cap;
  j["line_graph"] = {{"vertices", line.order()}, {"edges", line.edge_count()}};
  if (line.order() <= options.max_vertices) {
    j["homology"] = to_json(reduced_homology(line, options.coeff, a.cap - 2));
  } else {
    j["homology"] = nullptr;
  }
  s.out << j.dump() << "\n";
  s.err << "eta = " << to_string(value) << "\n";
  return kExitPass;
}

// ---------------------------------------------------------------------------
// verify

struct VerifyArgs {
  std::string name;
  std::string path;
  std::optional<int> r;
  int cls = 0;
  std::string coeff = "q";
  int cap = 8;
};

int cmd_verify(const VerifyArgs& a, Streams s) {
  EtaOptions options;
  options.coeff = parse_coefficients(a.coeff);
  options.cap = a.cap;
  EtaEvaluator evaluator(options);
  const EtaFn eta_fn = evaluator.as_fn();

  static const std::vector<std::string> kBipartite{"thm3.1", "cor3.8"};
  static const std::vector<std::string> kTripartite{"thm1.2", "thm1.3", "thm4.1", "thm4.2",
                                                    "lem4.2", "lem4.3", "lem4.5", "lem4.6",
                                                    "thm2.2"};
  std::optional<BoundReport> rep;
  if (std::ranges::find(kBipartite, a.name) != kBipartite.end()) {
    const auto g = io::load_bmg(a.path);
    const int r = a.r.value_or(std::max(2, g.max_degree()));
    if (a.name == "thm3.1") {
      rep = check_thm_3_1(g, full_line(g), r, eta_fn);
    } else {
      rep = check_cor_3_8(g, r, eta_fn);
    }
  } else if (std::ranges::find(kTripartite, a.name) != kTripartite.end()) {
    const auto h = io::load_t3g(a.path);
    const int r = a.r.value_or(h.max_degree());
    if (a.name == "thm1.2") rep = check_thm_1_2(h, r);
    if (a.name == "thm1.3") rep = check_thm_1_3(h);
    if (a.name == "thm4.1") rep = check_thm_4_1(h, r);
    if (a.name == "thm4.2") rep = check_thm_4_2(h, r);
    if (a.name == "lem4.2") rep = check_lemma_4_2(h, r);
    if (a.name == "lem4.3") rep = check_lemma_4_3(h, r);
    if (a.name == "lem4.5") rep = check_lemma_4_5(h, r);
    if (a.name == "lem4.6") rep = check_lemma_4_6(h, r);
    if (a.name == "thm2.2") rep = check_thm_2_2(h, a.cls, eta_fn);
  } else {
    throw InputError("unknown verifier '" + a.name + "'");
  }
  s.out << to_json(*rep).dump() << "\n";
  summarize(s.err, *rep);
  return rep->pass ? kExitPass : kExitBoundFailure;
}

// ---------------------------------------------------------------------------
// construct

struct ConstructArgs {
  std::string family;
  std::optional<int> r;
  std::optional<int> n;
  int s = 1;
  std::uint64_t seed = 0;
  std::string out;
};

GadgetSpec spec_of(const ConstructArgs& a) {
  auto need = [&](const std::optional<int>& v, const char* flag) {
    if (!v) throw InputError(a.family + " needs " + flag);
    return *v;
  };
  GadgetSpec spec;
  if (a.family == "fano") {
    spec.family = family::Fano{};
  } else if (a.family == "scaled-fano") {
    spec.family = family::ScaledFano{a.s};
  } else if (a.family == "extremal") {
    spec.family = family::Extremal{need(a.r, "--r"), need(a.n, "--n")};
  } else if (a.family == "thm53-even") {
    spec.family = family::Thm53Even{need(a.r, "--r")};
  } else if (a.family == "thm53-odd") {
    spec.family = family::Thm53Odd{need(a.r, "--r")};
  } else if (a.family == "parallel-triple") {
    spec.family = family::ParallelTriple{need(a.r, "--r")};
  } else if (a.family == "random-regular") {
    spec.family = family::RandomRegular{need(a.r, "--r"), need(a.n, "--n"), a.seed};
  } else {
    throw InputError("unknown family '" + a.family + "'");
  }
  spec.check();
  return spec;
}

int cmd_construct(const ConstructArgs& a, Streams s) {
  const auto spec = spec_of(a);
  const auto h = build(spec);
  const auto text = io::dump_t3g(h);
  if (a.out.empty()) {
    s.out << text;
  } else {
    io::save_text(a.out, text);
    Json j;
    j["spec"] = to_json(spec);
    j["out"] = a.out;
    j["edges"] = h.edge_count();
    s.out << j.dump() << "\n";
  }
  s.err << spec.name() << ": " << h.edge_count() << " edges, classes " << h.class_size(0) << "/"
        << h.class_size(1) << "/" << h.class_size(2) << "\n";
  return kExitPass;
}

// ---------------------------------------------------------------------------
// search

struct SearchArgs {
  int r = 2;
  int n = 2;
  std::uint64_t seed = 0;
  int iters = 100;
  std::string target = "min-nu";
  bool simple = false;
  std::string out;
};

int cmd_search(const SearchArgs& a, Streams s) {
  if (a.target != "min-nu" && a.target != "akz-counterexample") {
    throw InputError("--target must be min-nu or akz-counterexample");
  }
  if (a.iters < 0) throw InputError("--iters must be >= 0");
  const bool simple_only = a.simple || a.target == "akz-counterexample";
  // nu >= ceil((r-1) n / r) for simple instances.
  const auto akz_floor = ceil(Rational((a.r - 1) * a.n, a.r));

  struct Best {
    int nu;
    std::uint64_t seed;
  };
  std::optional<Best> best;
  Json candidates = Json::array();
  int rejected = 0;
  for (int i = 0; i < a.iters; ++i) {
    const std::uint64_t seed = a.seed + static_cast<std::uint64_t>(i);
    GadgetSpec spec{family::RandomRegular{a.r, a.n, seed}};
    const auto h = build(spec);
    const bool simple = is_simple(h);
    if (simple_only && !simple) {
      ++rejected;
      continue;
    }
    const auto m = nu_exact(h);
    Json line;
    line["seed"] = seed;
    line["nu"] = m.size;
    line["simple"] = simple;
    s.out << line.dump() << "\n";
    if (!best || m.size < best->nu) best = Best{m.size, seed};
    if (a.target == "akz-counterexample" && m.size < akz_floor) {
      Json c;
      c["spec"] = to_json(spec);
      c["instance"] = io::to_json(h);
      c["nu"] = m.size;
      c["matching"] = m.edge_ids;
      c["floor"] = akz_floor;
      candidates.push_back(std::move(c));
    }
  }
  Json summary;
  summary["target"] = a.target;
  summary["iterations"] = a.iters;
  summary["rejected"] = rejected;
  if (best) {
    summary["best"] = {{"seed", best->seed}, {"nu", best->nu}};
    if (!a.out.empty()) {
      io::save_text(a.out, io::dump_t3g(build(GadgetSpec{family::RandomRegular{a.r, a.n, best->seed}})));
    }
  } else {
    summary["best"] = nullptr;
  }
  if (a.target == "akz-counterexample") summary["candidates"] = std::move(candidates);
  if (a.iters > 0) s.out << summary.dump() << "\n";
  s.err << "search: " << a.iters << " iterations";
  if (best) s.err << ", best nu " << best->nu << " at seed " << best->seed;
  s.err << "\n";
  return kExitPass;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Matching, cover and connectedness checks for tripartite 3-graphs", "t3lab"};
  app.require_subcommand(1);

  AnalyzeArgs analyze;
  auto* analyze_cmd = app.add_subcommand("analyze", "Matching, cover, structure and bounds of a t3g file");
  analyze_cmd->add_option("path", analyze.path)->required();
  analyze_cmd->add_option("--r", analyze.r, "Degree parameter (default: max degree)");

  EtaArgs eta_args;
  auto* eta_cmd = app.add_subcommand("eta", "Connectedness of the line graph of a bmg file");
  eta_cmd->add_option("path", eta_args.path)->required();
  eta_cmd->add_option("--coeff", eta_args.coeff, "q, f2 or z");
  eta_cmd->add_option("--cap", eta_args.cap, "Stop once eta is known to be at least this");

  VerifyArgs verify;
  auto* verify_cmd = app.add_subcommand("verify", "Run one bound check");
  verify_cmd
      ->add_option("name", verify.name,
                   "t3g checks: thm1.2 thm1.3 thm2.2 thm4.1 thm4.2 lem4.2 lem4.3 lem4.5 lem4.6; "
                   "bmg checks: thm3.1 cor3.8")
      ->required();
  verify_cmd->add_option("path", verify.path)->required();
  verify_cmd->add_option("--r", verify.r);
  verify_cmd->add_option("--cls", verify.cls, "Vertex class for the Hall-type check");
  verify_cmd->add_option("--coeff", verify.coeff);
  verify_cmd->add_option("--cap", verify.cap);

  ConstructArgs construct;
  auto* construct_cmd = app.add_subcommand("construct", "Write a named instance");
  construct_cmd
      ->add_option("family", construct.family,
                   "fano, scaled-fano (--s), extremal (--r --n), thm53-even (--r), thm53-odd (--r), "
                   "parallel-triple (--r), random-regular (--r --n --seed)")
      ->required();
  construct_cmd->add_option("--r", construct.r);
  construct_cmd->add_option("--n", construct.n);
  construct_cmd->add_option("--s", construct.s);
  construct_cmd->add_option("--seed", construct.seed);
  construct_cmd->add_option("--out", construct.out);

  SearchArgs search;
  auto* search_cmd = app.add_subcommand("search", "Random regular instances scored by matching number");
  search_cmd->add_option("--r", search.r);
  search_cmd->add_option("--n", search.n);
  search_cmd->add_option("--seed", search.seed);
  search_cmd->add_option("--iters", search.iters);
  search_cmd->add_option("--target", search.target);
  search_cmd->add_flag("--simple", search.simple, "Reject instances with parallel edges");
  search_cmd->add_option("--out", search.out);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitPass;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return kExitInput;
  }

  const Streams s{out, err};
  try {
    if (*analyze_cmd) return cmd_analyze(analyze, s);
    if (*eta_cmd) return cmd_eta(eta_args, s);
    if (*verify_cmd) return cmd_verify(verify, s);
    if (*construct_cmd) return cmd_construct(construct, s);
    if (*search_cmd) return cmd_search(search, s);
  } catch (const InputError& e) {
    err << "input error: " << e.what() << "\n";
    return kExitInput;
  } catch (const ResourceError& e) {
    err << "resource limit: " << e.what() << "\n";
    return kExitResource;
  } catch (const TheoryDiscrepancy& e) {
    err << "bound violated: " << e.what() << "\n";
    return kExitBoundFailure;
  }
  return kExitInput;
}

}  // namespace t3lab::cli
