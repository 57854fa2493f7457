// Copyright 2026 The linforest Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cli.hpp"

#include <cmath>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <iterator>
#include <limits>
#include <memory>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "linforest/corpus.hpp"
#include "linforest/decomposition.hpp"
#include "linforest/generators.hpp"
#include "linforest/oracle.hpp"
#include "linforest/optimizer.hpp"
#include "linforest/rng.hpp"
#include "linforest/tour.hpp"

namespace linforest::cli {

namespace {

using Json = nlohmann::ordered_json;

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Raised after a report has been written when some check failed.
class CheckFailed : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Globals {
  std::uint64_t seed = 1;
  std::size_t budget = kDefaultMaxStates;
  std::size_t rounds = 1'000'000;
  std::size_t trials = 100;
  std::string format;
  std::string out;
};

constexpr const char* kPrng = "mt19937_64";
constexpr const char* kDerivation = "child = mix64(parent ^ mix64(index + 1)) with mix64 the splitmix64 finalizer";

std::string fmt(double x) {
  if (std::isinf(x)) return "inf";
  std::ostringstream s;
  s << std::setprecision(6) << x;
  return s.str();
}

Json meta(const Globals& gl) {
  return Json{{"prng", kPrng}, {"seed", gl.seed}, {"seed_derivation", kDerivation}};
}

std::string csv_meta(const Globals& gl) {
  return std::string("# prng=") + kPrng + " seed=" + std::to_string(gl.seed) + " derivation: " + kDerivation + "\n";
}

std::string read_all(std::istream& in) {
  return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
}

Graph read_graph(const std::string& path, std::istream& in) {
  std::string text;
  if (path.empty() || path == "-") {
    text = read_all(in);
  } else {
    std::ifstream file(path);
    if (!file) throw IoError("cannot open " + path);
    text = read_all(file);
  }
  return load_graph(text);
}

std::string read_file(const std::string& path) {
  std::ifstream file(path);
  if (!file) throw IoError("cannot open " + path);
  return read_all(file);
}

std::string pick_format(const Globals& gl, const std::string& command, std::initializer_list<const char*> allowed) {
  if (gl.format.empty()) return *allowed.begin();
  for (const char* a : allowed) {
    if (gl.format == a) return gl.format;
  }
  throw UsageError("--format " + gl.format + " is not supported by " + command);
}

OptimizerParams params(const Globals& gl) {
  OptimizerParams p;
  p.rotation_budget = gl.budget;
  p.max_rounds = gl.rounds;
  p.seed = gl.seed;
  return p;
}

Json edges_json(const std::vector<Edge>& edges) {
  Json arr = Json::array();
  for (const Edge& e : edges) arr.push_back({e.u, e.v});
  return arr;
}

Json stats_json(const DecompositionStats& s) {
  Json iters = Json::array();
  for (const auto& r : s.iterations) {
    iters.push_back({{"i", r.i},
                     {"host_n", r.host_n},
                     {"auxiliary_added", r.auxiliary_added},
                     {"paths", r.paths},
                     {"endpoints", r.endpoints},
                     {"original_endpoints", r.original_endpoints},
                     {"e_edges", r.e_edges},
                     {"budget_minimal", r.budget_minimal}});
  }
  return Json{{"d_bound", s.d_bound},
              {"max_d_bound", s.max_d_bound},
              {"leftover_max_degree", s.leftover_max_degree},
              {"iterations", iters}};
}

// ---- subcommands ---------------------------------------------------------

struct GenArgs {
  std::string family = "regular";
  Vertex n = 0;
  int d = 0;
  int k = 1;
};

void cmd_gen(const Globals& gl, const GenArgs& a, std::ostream& out) {
  Graph g;
  if (a.family == "regular") {
    g = random_regular(a.n, a.d, gl.seed);
  } else if (a.family == "connected") {
    g = random_connected_regular(a.n, a.d, gl.seed);
  } else if (a.family == "bipartite") {
    g = random_bipartite_regular(a.n, a.d, gl.seed);
  } else if (a.family == "cliques") {
    g = disjoint_cliques(a.k, a.d);
  } else {
    throw UsageError("unknown family " + a.family);
  }
  out << save_graph(g);
}

struct MinforestArgs {
  std::string graph;
  bool bipartite = false;
  bool trivial_start = false;
};

void cmd_minforest(const Globals& gl, const MinforestArgs& a, std::istream& in, std::ostream& out) {
  const std::string format = pick_format(gl, "minforest", {"text", "json"});
  const Graph g = read_graph(a.graph, in);
  OptimizerParams p = params(gl);
  p.bipartite_mode = a.bipartite;
  const LinearForest start = a.trivial_start ? trivial_forest(g) : greedy_path_cover(g, derive_seed(gl.seed, 0));
  const OptimizeResult r = minimize_forest(start, p);
  if (format == "json") {
    out << Json{{"paths", r.forest.path_count()},
                {"forest", r.forest.paths()},
                {"budget_minimal", r.budget_minimal},
                {"exhaustive", r.exhaustive},
                {"certified_minimum", r.certified_minimum},
                {"merges", r.merges},
                {"meta", meta(gl)}}
               .dump(2)
        << '\n';
    return;
  }
  out << "paths: " << r.forest.path_count() << '\n' << format_forest(r.forest);
}

void cmd_sample(const Globals& gl, const std::string& graph, std::istream& in, std::ostream& out) {
  const std::string format = pick_format(gl, "sample", {"csv", "json"});
  const Graph g = read_graph(graph, in);
  OptimizerParams p = params(gl);
  const EndpointTable t = estimate_endpoint_probs(g, gl.trials, gl.seed, p);
  if (format == "json") {
    out << Json{{"trials", t.trials},
                {"frequency", t.frequency},
                {"stderr", t.stderr_},
                {"mean_multiplicity", t.mean_multiplicity},
                {"bound", 16.0 / (g.max_degree() + 1)},
                {"meta", meta(gl)}}
               .dump(2)
        << '\n';
    return;
  }
  out << csv_meta(gl) << "vertex,frequency,stderr\n";
  for (std::size_t v = 0; v < t.frequency.size(); ++v) {
    out << v << ',' << fmt(t.frequency[v]) << ',' << fmt(t.stderr_[v]) << '\n';
  }
}

OptimizerParams pipeline(const Globals& gl, bool budget_given) {
  OptimizerParams p = pipeline_params(gl.seed);
  if (budget_given) p.rotation_budget = gl.budget;
  p.max_rounds = gl.rounds;
  return p;
}

void cmd_decompose(const Globals& gl, bool budget_given, const std::string& graph, std::istream& in,
                   std::ostream& out) {
  const std::string format = pick_format(gl, "decompose", {"json", "text"});
  const Graph g = read_graph(graph, in);
  const DecompositionRun run = decompose_linear_arboricity(g, gl.seed, pipeline(gl, budget_given));
  const Decomposition& d = run.decomposition;
  if (format == "text") {
    out << "forests: " << d.forests.size() << '\n'
        << "leftover_colors: " << d.leftover_coloring.num_colors << '\n'
        << "total_parts: " << d.total_parts << '\n'
        << "leftover_max_degree: " << run.stats.leftover_max_degree << '\n';
    return;
  }
  Json forests = Json::array();
  for (const auto& f : d.forests) forests.push_back(edges_json(f));
  Json colors = Json::object();
  const auto classes = d.leftover_coloring.classes();
  for (std::size_t c = 0; c < classes.size(); ++c) colors[std::to_string(c)] = edges_json(classes[c]);
  out << Json{{"forests", forests},
              {"leftover_colors", colors},
              {"total_parts", d.total_parts},
              {"stats", stats_json(run.stats)},
              {"meta", meta(gl)}}
             .dump(2)
      << '\n';
}

void cmd_fractional(const Globals& gl, bool budget_given, const std::string& graph, int c, std::istream& in,
                    std::ostream& out) {
  const std::string format = pick_format(gl, "fractional", {"text", "json"});
  const Graph g = read_graph(graph, in);
  const int threshold = c > 0 ? c : default_fractional_threshold(g.max_degree());
  const FractionalEstimate e = estimate_fractional(g, gl.trials, gl.seed, threshold, pipeline(gl, budget_given));
  if (format == "json") {
    out << Json{{"threshold", threshold},
                {"runs", e.runs},
                {"min_coverage", e.min_coverage},
                {"implied_bound", std::isinf(e.implied_bound) ? Json("inf") : Json(e.implied_bound)},
                {"max_dropped_fraction", e.max_dropped_fraction},
                {"max_family_size", e.max_family_size},
                {"smallest_clean_threshold", e.smallest_clean_threshold},
                {"coverage", e.coverage},
                {"meta", meta(gl)}}
               .dump(2)
        << '\n';
    return;
  }
  out << "threshold: " << threshold << '\n'
      << "runs: " << e.runs << '\n'
      << "min_coverage: " << fmt(e.min_coverage) << '\n'
      << "implied_bound: " << fmt(e.implied_bound) << '\n'
      << "max_dropped_fraction: " << fmt(e.max_dropped_fraction) << '\n'
      << "max_family_size: " << e.max_family_size << '\n'
      << "smallest_clean_threshold: " << e.smallest_clean_threshold << '\n';
}

void cmd_tour(const Globals& gl, const std::string& graph, std::istream& in, std::ostream& out) {
  const std::string format = pick_format(gl, "tour", {"text", "json"});
  const Graph g = read_graph(graph, in);
  const TourReport r = tour_length_report(g, params(gl), gl.seed);
  if (!is_valid_tour(g, r.tour)) throw InternalError("tour: produced walk is not a valid tour");
  if (format == "json") {
    out << Json{{"tour", r.tour.walk}, {"length", r.tour.length()}, {"ratio", r.ratio}, {"meta", meta(gl)}}.dump(2)
        << '\n';
    return;
  }
  for (std::size_t i = 0; i < r.tour.walk.size(); ++i) out << (i ? " " : "") << r.tour.walk[i];
  out << '\n' << "length: " << r.tour.length() << '\n' << "ratio: " << fmt(r.ratio) << '\n';
}

struct VerifyArgs {
  std::string corpus;
  std::string graph;
  std::string forest;
  std::vector<Vertex> fixed;
};

std::string quantities(const CheckReport& rep) {
  std::string s;
  for (const auto& [k, v] : rep.values) s += (s.empty() ? "" : ";") + k + "=" + std::to_string(v);
  return s;
}

void cmd_verify(const Globals& gl, const VerifyArgs& a, std::istream& in, std::ostream& out) {
  const std::string format = pick_format(gl, "verify", {"csv", "json"});
  std::size_t checks = 0;
  std::size_t failures = 0;
  std::ostringstream rows;
  auto emit = [&](const std::string& graph, const CheckReport& rep) {
    ++checks;
    failures += rep.pass ? 0 : 1;
    rows << graph << ',' << rep.lemma << ',' << quantities(rep) << ',' << (rep.pass ? "pass" : "fail") << '\n';
  };
  if (!a.corpus.empty()) {
    if (a.corpus != "small") throw UsageError("unknown corpus " + a.corpus);
    std::vector<CorpusGraph> graphs = small_corpus(8);
    for (auto& fx : named_fixtures()) graphs.push_back(std::move(fx));
    lemma_sweep(graphs, gl.seed, [&](const SweepRow& r) { emit(r.graph, r.report); });
    OptimizerParams p = params(gl);
    p.rotation_budget = std::numeric_limits<std::size_t>::max();
    for (const CorpusGraph& cg : graphs) {
      CheckReport rep;
      rep.lemma = "minimize_equivalence";
      const auto got = static_cast<long long>(minimize_forest(trivial_forest(cg.graph), p).forest.path_count());
      const auto want = static_cast<long long>(brute_min_path_cover(cg.graph));
      rep.pass = got == want;
      rep.values = {{"paths", got}, {"brute", want}};
      emit(cg.name, rep);
    }
  } else {
    if (a.forest.empty()) throw UsageError("verify needs --corpus or a graph with --forest");
    const Graph g = read_graph(a.graph, in);
    const LinearForest f = parse_forest(g, read_file(a.forest));
    const FixedEndpoints x(g.n(), a.fixed);
    require_fixed_subset(f, x);
    const std::string name = a.graph.empty() ? "stdin" : a.graph;
    emit(name, check_component_bound(f, x));
    emit(name, check_b0_and_doublecount(f, x));
    RotationComponent comp = component_exact(f, x);
    classify_boundary(f, comp);
    for (Vertex v = 0; v < g.n(); ++v) {
      if (f.endpoint_multiplicity(v) <= x.count(v)) continue;
      for (Vertex u : g.neighbors(v)) {
        const auto& b1 = comp.boundary_classes[1];
        if (std::binary_search(b1.begin(), b1.end(), u)) emit(name, check_fix_shrinkage(f, x, v, u));
      }
    }
  }
  if (format == "json") {
    out << Json{{"checks", checks}, {"failures", failures}, {"meta", meta(gl)}}.dump(2) << '\n';
  } else {
    out << csv_meta(gl) << "graph,lemma,quantities,result\n" << rows.str();
    out << "# checks=" << checks << " failures=" << failures << '\n';
  }
  if (failures > 0) throw CheckFailed(std::to_string(failures) + " of " + std::to_string(checks) + " checks failed");
}

struct BenchArgs {
  std::vector<Vertex> n{50, 200};
  std::vector<int> d{3, 5};
  std::size_t seeds = 3;
  std::vector<std::string> what{"paths", "bipartite", "decompose", "tour"};
};

void cmd_bench(const Globals& gl, bool budget_given, const BenchArgs& a, std::ostream& out) {
  pick_format(gl, "bench", {"csv"});
  auto wants = [&](const char* w) { return std::find(a.what.begin(), a.what.end(), w) != a.what.end(); };
  out << csv_meta(gl)
      << "n,d,seed,paths,bound_2n_over_d1,bipartite_paths,bound_n_over_d1,total_parts,delta_half,"
         "delta_half_plus_ln_n,tour_length,tour_ratio\n";
  const OptimizerParams p = params(gl);
  for (Vertex n : a.n) {
    for (int d : a.d) {
      for (std::size_t s = 0; s < a.seeds; ++s) {
        const std::uint64_t seed = derive_seed(gl.seed, s);
        const Graph g = random_regular(n, d, seed);
        std::string paths;
        std::string bip;
        std::string parts;
        std::string tour_len;
        std::string ratio;
        if (wants("paths")) {
          paths = std::to_string(minimize_forest(greedy_path_cover(g, derive_seed(seed, 1)), p).forest.path_count());
        }
        if (wants("bipartite") && n % 2 == 0 && 2 * d <= n) {
          const Graph b = random_bipartite_regular(n, d, derive_seed(seed, 2));
          OptimizerParams q = p;
          q.bipartite_mode = true;
          bip = std::to_string(minimize_forest(greedy_path_cover(b, derive_seed(seed, 3)), q).forest.path_count());
        }
        if (wants("decompose")) {
          parts = std::to_string(
              decompose_linear_arboricity(g, derive_seed(seed, 4), pipeline(gl, budget_given)).decomposition.total_parts);
        }
        if (wants("tour")) {
          const Graph c = random_connected_regular(n, d, derive_seed(seed, 5));
          const TourReport r = tour_length_report(c, p, derive_seed(seed, 6));
          tour_len = std::to_string(r.tour.length());
          ratio = fmt(r.ratio);
        }
        out << n << ',' << d << ',' << s << ',' << paths << ',' << fmt(2.0 * n / (d + 1)) << ',' << bip << ','
            << fmt(static_cast<double>(n) / (d + 1)) << ',' << parts << ',' << fmt(d / 2.0) << ','
            << fmt(d / 2.0 + std::log(static_cast<double>(n))) << ',' << tour_len << ',' << ratio << '\n';
      }
    }
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Rotation-based spanning linear forests, decompositions and tours"};
  app.require_subcommand(1);
  app.fallthrough();
  app.footer(
      "CSV schemas:\n"
      "  sample:  vertex,frequency,stderr\n"
      "  verify:  graph,lemma,quantities,result   (quantities are key=value;...)\n"
      "  bench:   n,d,seed,paths,bound_2n_over_d1,bipartite_paths,bound_n_over_d1,total_parts,\n"
      "           delta_half,delta_half_plus_ln_n,tour_length,tour_ratio\n"
      "CSV output starts with a '# prng=...' metadata line.\n"
      "Exit codes: 0 ok, 1 I/O or parse error, 2 usage error, 3 internal error or failed check.");

  Globals gl;
  app.add_option("--seed", gl.seed, "PRNG seed");
  auto* budget_opt = app.add_option("--budget", gl.budget, "Rotation states per search");
  app.add_option("--rounds", gl.rounds, "Cap on merge searches");
  app.add_option("--trials", gl.trials, "Samples or runs for estimators");
  app.add_option("--format", gl.format, "Output format")->check(CLI::IsMember({"text", "json", "csv"}));
  app.add_option("--out", gl.out, "Write results to FILE");

  GenArgs gen;
  auto* gen_cmd = app.add_subcommand("gen", "Generate a graph in edge-list format");
  gen_cmd->add_option("--family", gen.family, "regular | connected | bipartite | cliques")
      ->check(CLI::IsMember({"regular", "connected", "bipartite", "cliques"}));
  gen_cmd->add_option("--n", gen.n, "Vertex count");
  gen_cmd->add_option("--d", gen.d, "Degree")->required();
  gen_cmd->add_option("--k", gen.k, "Clique count");

  MinforestArgs mf;
  auto* mf_cmd = app.add_subcommand("minforest", "Linear forest with few paths");
  mf_cmd->add_option("graph", mf.graph, "Edge-list file (default stdin)");
  mf_cmd->add_flag("--bipartite", mf.bipartite, "Pin one side's endpoints first");
  mf_cmd->add_flag("--trivial-start", mf.trivial_start, "Start from the all-isolated forest");

  std::string graph_path;
  auto* sample_cmd = app.add_subcommand("sample", "Endpoint frequency table of the forest sampler");
  sample_cmd->add_option("graph", graph_path, "Edge-list file (default stdin)");

  auto* dec_cmd = app.add_subcommand("decompose", "Decompose into linear forests plus a colored leftover");
  dec_cmd->add_option("graph", graph_path, "Edge-list file (default stdin)");

  int threshold = 0;
  auto* frac_cmd = app.add_subcommand("fractional", "Fractional family and edge coverage estimate");
  frac_cmd->add_option("graph", graph_path, "Edge-list file (default stdin)");
  frac_cmd->add_option("--c", threshold, "Leftover degree threshold (default ceil(8(ln(D+2)+1)))");

  auto* tour_cmd = app.add_subcommand("tour", "Closed covering walk");
  tour_cmd->add_option("graph", graph_path, "Edge-list file (default stdin)");

  VerifyArgs ver;
  auto* ver_cmd = app.add_subcommand("verify", "Lemma checks on the small corpus or one instance");
  ver_cmd->add_option("--corpus", ver.corpus, "Corpus name (small)");
  ver_cmd->add_option("graph", ver.graph, "Edge-list file (default stdin)");
  ver_cmd->add_option("--forest", ver.forest, "Forest file (\"path v1 v2 ...\" lines)");
  ver_cmd->add_option("--fixed", ver.fixed, "Fixed endpoints, with repetition");

  BenchArgs bench;
  auto* bench_cmd = app.add_subcommand("bench", "Sweep random regular graphs and emit CSV");
  bench_cmd->add_option("--n", bench.n, "Vertex counts")->delimiter(',');
  bench_cmd->add_option("--d", bench.d, "Degrees")->delimiter(',');
  bench_cmd->add_option("--seeds", bench.seeds, "Seeds per cell");
  bench_cmd->add_option("--what", bench.what, "paths,bipartite,decompose,tour")
      ->delimiter(',')
      ->check(CLI::IsMember({"paths", "bipartite", "decompose", "tour"}));

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  }

  std::ofstream file;
  std::ostream* sink = &out;
  if (!gl.out.empty()) {
    file.open(gl.out);
    if (!file) {
      err << "io error: cannot write " << gl.out << '\n';
      return kExitIo;
    }
    sink = &file;
  }
  const bool budget_given = budget_opt->count() > 0;
  std::ostringstream buffer;
  try {
    if (*gen_cmd) {
      cmd_gen(gl, gen, buffer);
    } else if (*mf_cmd) {
      cmd_minforest(gl, mf, in, buffer);
    } else if (*sample_cmd) {
      cmd_sample(gl, graph_path, in, buffer);
    } else if (*dec_cmd) {
      cmd_decompose(gl, budget_given, graph_path, in, buffer);
    } else if (*frac_cmd) {
      cmd_fractional(gl, budget_given, graph_path, threshold, in, buffer);
    } else if (*tour_cmd) {
      cmd_tour(gl, graph_path, in, buffer);
    } else if (*ver_cmd) {
      cmd_verify(gl, ver, in, buffer);
    } else if (*bench_cmd) {
      cmd_bench(gl, budget_given, bench, buffer);
    }
  } catch (const CheckFailed& e) {
    *sink << buffer.str();
    err << "check failure: " << e.what() << '\n';
    return kExitInternal;
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const InvalidArgument& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const IoError& e) {
    err << "io error: " << e.what() << '\n';
    return kExitIo;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kExitIo;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kExitInternal;
  }
  *sink << buffer.str();
  sink->flush();
  if (!*sink) {
    err << "io error: write failed\n";
    return kExitIo;
  }
  return kExitOk;
}

}  // namespace linforest::cli
