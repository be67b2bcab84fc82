#include <chrono>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "plabic/plabic.hpp"

using namespace plabic;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitInputError = 2;

std::string read_input(const std::string& path) {
  if (path.empty() || path == "-") {
    return std::string(std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>());
  }
  std::ifstream in(path, std::ios::binary);
  require(static_cast<bool>(in), ErrorCode::IO, "cannot open '" + path + "'");
  return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
}

void emit_text(const std::string& text, const std::string& out) {
  if (out.empty() || out == "-") std::cout << text;
  else write_text_file(out, text);
}

void emit(const Json& j, const std::string& out) { emit_text(j.dump(2) + "\n", out); }

/// "3,4,5,1,2" plus optional fixed-point colors "2=1,5=0".
DecoratedPermutation parse_perm_flag(const std::string& perm, const std::string& colors) {
  std::vector<int> images;
  std::stringstream ss(perm);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      images.push_back(std::stoi(item, &used));
      require(used == item.size() || item.find_first_not_of(' ', used) == std::string::npos, ErrorCode::ParseError,
              "bad permutation entry '" + item + "'");
    } catch (const std::logic_error&) {
      fail(ErrorCode::ParseError, "bad permutation entry '" + item + "'");
    }
  }
  std::map<int, int> fixed;
  std::stringstream cs(colors);
  while (std::getline(cs, item, ',')) {
    const auto eq = item.find('=');
    require(eq != std::string::npos, ErrorCode::ParseError, "colors are given as point=color");
    try {
      fixed[std::stoi(item.substr(0, eq))] = std::stoi(item.substr(eq + 1));
    } catch (const std::logic_error&) {
      fail(ErrorCode::ParseError, "bad color entry '" + item + "'");
    }
  }
  return DecoratedPermutation(images, fixed);
}

GrassmannianGraph load_graph(const std::string& path) { return graph_from_json(parse_json(read_input(path))); }

Json strands_json(const GrassmannianGraph& g) {
  Json list = Json::array();
  for (const auto& s : strands(g)) {
    Json steps = Json::array();
    for (int h : s.steps) steps.push_back(h);
    if (s.closed) list.push_back({{"closed", true}, {"half_edges", steps}});
    else list.push_back({{"closed", false}, {"source", s.source}, {"sink", s.sink}, {"half_edges", steps}});
  }
  Json out{{"strands", list}};
  try {
    out["permutation"] = to_json(strand_permutation(g));
  } catch (const Error& e) {
    out["permutation"] = error_json(e);
  }
  return out;
}

Json reduced_json(const GrassmannianGraph& g) {
  const auto cert = is_reduced(g);
  Json out{{"reduced", cert.reduced}};
  if (!cert.reduced) {
    out["condition"] = cert.condition;
    out["strands"] = cert.strands;
    out["vertices"] = cert.vertices;
    out["detail"] = cert.detail;
  }
  return out;
}

Json faces_json(const GrassmannianGraph& g) {
  const auto faces = g.faces();
  const auto labels = face_labels(g);
  Json list = Json::array();
  for (int f = 0; f < faces.count; ++f)
    list.push_back({{"face", f}, {"label", labels[f].label()}, {"boundary", faces.is_boundary_face(f)}});
  return Json{{"count", faces.count}, {"faces", list}};
}

Json flipgraph_json(const FlipGraph& fg) {
  Json nodes = Json::array();
  for (std::size_t i = 0; i < fg.nodes.size(); ++i) nodes.push_back({{"id", i}, {"canonical", fg.keys[i]}});
  Json edges = Json::array();
  for (const auto& e : fg.edges) edges.push_back({{"from", e.from}, {"to", e.to}, {"move", to_string(e.kind)}});
  return Json{{"k", fg.k},
              {"n", fg.n},
              {"node_count", fg.nodes.size()},
              {"edge_count", fg.edges.size()},
              {"connected", fg.connected()},
              {"diameter", fg.diameter()},
              {"nodes", nodes},
              {"edges", edges}};
}

// ---- verification suites ------------------------------------------------------

struct Report {
  Json checks = Json::array();
  Json failures = Json::array();

  void check(const std::string& name, long long count) { checks.push_back({{"check", name}, {"count", count}}); }
  void failure(const std::string& what) {
    if (failures.size() < 50) failures.push_back(what);
    else if (failures.size() == 50) failures.push_back("...");
  }
};

void verify_bijections(int max_n, Report& r) {
  for (int n = 1; n <= max_n; ++n) {
    long long count = 0;
    for (const auto& w : all_decorated_permutations(n)) {
      ++count;
      const auto J = necklace_from_permutation(w);
      const auto m = positroid_from_necklace(J);
      if (!is_positroid(m)) r.failure("not a positroid for w = " + to_json(w).dump());
      const auto J2 = necklace_from_positroid(m);
      if (!(J2 == J)) r.failure("necklace round trip failed for w = " + to_json(w).dump());
      if (!(permutation_from_necklace(J2) == w)) r.failure("permutation round trip failed for w = " + to_json(w).dump());
    }
    r.check("round trips n=" + std::to_string(n), count);
  }
}

void verify_graphs(int max_n, Report& r) {
  for (int n = 1; n <= max_n; ++n) {
    long long graphs = 0, orientations = 0;
    for (const auto& w : all_decorated_permutations(n)) {
      ++graphs;
      const auto g = build_reduced_plabic(w);
      const int k = helicity(w);
      if (!(strand_permutation(g) == w)) r.failure("strand permutation differs for w = " + to_json(w).dump());
      if (!is_reduced(g)) r.failure("graph not reduced for w = " + to_json(w).dump());
      Positroid m{k, n, {}};
      for_each_perfect_orientation(g, [&](const PerfectOrientation& o) {
        ++orientations;
        const Subset I = boundary_sources(g, o);
        if (I.size() != k) r.failure("helicity not conserved for w = " + to_json(w).dump());
        m.bases.push_back(I);
      });
      m = make_collection(n, m.bases);
      m.k = k;
      if (!(m.bases == positroid_from_necklace(necklace_from_permutation(w)).bases))
        r.failure("M(G) differs from the necklace positroid for w = " + to_json(w).dump());
    }
    r.check("graphs n=" + std::to_string(n), graphs);
    r.check("orientations n=" + std::to_string(n), orientations);
  }
}

void verify_measure(int max_n, Report& r) {
  for (int n = 1; n <= max_n; ++n) {
    long long samples = 0;
    for (const auto& w : all_decorated_permutations(n)) {
      const auto g = build_reduced_plabic(w);
      const auto m = positroid_from_necklace(necklace_from_permutation(w));
      for (std::uint64_t seed = 1; seed <= 2; ++seed) {
        ++samples;
        const auto p = boundary_measurement(g, sample_vertex_data(g, seed));
        if (!validate_plucker(p)) r.failure("Plücker relations fail for w = " + to_json(w).dump());
        if (p.support() != m.bases) r.failure("support differs from M(G) for w = " + to_json(w).dump());
        for (Subset I : p.support())
          if (p.at(I) <= 0) r.failure("non-positive coordinate for w = " + to_json(w).dump());
      }
    }
    r.check("measurements n=" + std::to_string(n), samples);
  }
}

void verify_tilings(int max_n, Report& r) {
  for (int n = 3; n <= max_n; ++n) {
    for (int k = 1; k <= n - 1; ++k) {
      const CyclicProjection pi(n);
      const auto fg = flip_graph(k, n);
      long long count = 0;
      for (std::size_t i = 0; i < fg.nodes.size(); ++i) {
        ++count;
        const auto t = tiling_from_graph(fg.nodes[i], pi);
        const auto report = validate_subdivision(t, pi);
        if (!report.valid)
          r.failure("invalid subdivision for (" + std::to_string(k) + "," + std::to_string(n) + ") node " +
                    std::to_string(i));
        if (graph_from_tiling(t).canonical_form() != fg.keys[i])
          r.failure("dual graph round trip failed for (" + std::to_string(k) + "," + std::to_string(n) + ") node " +
                    std::to_string(i));
      }
      r.check("tilings (" + std::to_string(k) + "," + std::to_string(n) + ")", count);
    }
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Positroid and plabic graph toolkit"};
  app.require_subcommand(1);

  std::string in_path, out_path, from, to, perm, colors, suite, format = "svg", as = "graph";
  int k = 0, n = 0, max_n = 5, bound = kDefaultFlipBound;
  std::uint64_t seed = 1;
  bool longest = false;

  auto* convert = app.add_subcommand("convert", "Convert between permutations, necklaces and positroids");
  convert->add_option("--from", from, "Input kind")->required()->check(CLI::IsMember({"perm", "necklace", "positroid"}));
  convert->add_option("--to", to, "Output kind")->required()->check(CLI::IsMember({"perm", "necklace", "positroid"}));
  convert->add_option("--in", in_path, "Input JSON file (default stdin)");
  convert->add_option("--out", out_path, "Output file (default stdout)");

  auto* verify = app.add_subcommand("verify", "Run an oracle suite");
  verify->add_option("--suite", suite, "Suite name")
      ->required()
      ->check(CLI::IsMember({"bijections", "graphs", "measure", "tilings"}));
  verify->add_option("--max-n", max_n, "Largest n")->check(CLI::Range(1, 7));

  auto* graph = app.add_subcommand("graph", "Graph operations");
  graph->require_subcommand(1);
  auto* build = graph->add_subcommand("build", "Reduced plabic graph for a decorated permutation");
  build->add_option("--perm", perm, "Images, comma separated, e.g. 3,4,5,1,2");
  build->add_option("--colors", colors, "Fixed-point colors, e.g. 2=1,5=0");
  build->add_option("--in", in_path, "Permutation JSON (used when --perm is absent)");
  build->add_option("--out", out_path, "Output file");
  auto graph_op = [&](const char* name, const char* help) {
    auto* sub = graph->add_subcommand(name, help);
    sub->add_option("--in", in_path, "Graph JSON (default stdin)");
    sub->add_option("--out", out_path, "Output file");
    return sub;
  };
  auto* reduce_check = graph_op("reduce-check", "Reducedness certificate");
  auto* strands_cmd = graph_op("strands", "Strands and strand permutation");
  auto* faces_cmd = graph_op("faces", "Face labels");
  auto* gmeasure = graph_op("measure", "Boundary measurement of seeded vertex data");
  gmeasure->add_option("--seed", seed, "Sampling seed");
  auto* tile = graph_op("tile", "Dual tiling under the cyclic projection");
  auto* membrane = graph_op("membrane", "Membrane of a reduced graph");
  auto* positroid_cmd = graph_op("positroid", "Positroid from perfect orientations");

  auto* flip = app.add_subcommand("flipgraph", "Flip graph of complete reduced plabic graphs");
  flip->add_option("--k", k)->required();
  flip->add_option("--n", n)->required();
  flip->add_option("--bound", bound, "Largest allowed n");
  flip->add_option("--out", out_path, "Output file");

  auto* wsc = app.add_subcommand("wsc", "Weakly separated collections");
  wsc->require_subcommand(1);
  auto* enumerate = wsc->add_subcommand("enumerate", "All maximal weakly separated collections");
  enumerate->add_option("--k", k)->required();
  enumerate->add_option("--n", n)->required();
  enumerate->add_option("--out", out_path, "Output file");

  auto* measure = app.add_subcommand("measure", "Boundary measurement of seeded vertex data");
  measure->add_option("--graph", in_path, "Graph JSON")->required();
  measure->add_option("--seed", seed, "Sampling seed");
  measure->add_option("--out", out_path, "Output file");

  auto* paths = app.add_subcommand("paths", "Monotone path counts");
  paths->add_option("--k", k)->required();
  paths->add_option("--n", n)->required();
  paths->add_flag("--longest", longest, "Also count paths of maximal length");

  auto* render = app.add_subcommand("render", "Draw a graph, its tiling or its membrane");
  render->add_option("--in", in_path, "Graph JSON (default stdin)");
  render->add_option("--as", as, "What to draw")->check(CLI::IsMember({"graph", "tiling", "membrane"}));
  render->add_option("--format", format, "Output format")->check(CLI::IsMember({"svg", "dot"}));
  render->add_option("--out", out_path, "Output file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    std::cout << Json{{"error", "ParseError"}, {"detail", e.what()}}.dump() << "\n";
    return kExitInputError;
  }

  try {
    if (*convert) {
      const Json input = parse_json(read_input(in_path));
      DecoratedPermutation w;
      if (from == "perm") w = permutation_from_json(input);
      else if (from == "necklace") w = permutation_from_necklace(necklace_from_json(input));
      else {
        const auto m = positroid_from_json(input);
        require(is_positroid(m), ErrorCode::NotPositroid, "bases do not form a positroid");
        w = permutation_from_necklace(necklace_from_positroid(m));
      }
      if (to == "perm") emit(to_json(w), out_path);
      else if (to == "necklace") emit(to_json(necklace_from_permutation(w)), out_path);
      else emit(to_json(positroid_from_necklace(necklace_from_permutation(w))), out_path);
    } else if (*verify) {
      Report report;
      const auto start = std::chrono::steady_clock::now();
      if (suite == "bijections") verify_bijections(max_n, report);
      else if (suite == "graphs") verify_graphs(max_n, report);
      else if (suite == "measure") verify_measure(max_n, report);
      else verify_tilings(max_n, report);
      const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
      const bool passed = report.failures.empty();
      std::cout << Json{{"suite", suite},
                        {"max_n", max_n},
                        {"passed", passed},
                        {"checks", report.checks},
                        {"failures", report.failures},
                        {"seconds", seconds}}
                       .dump(2)
                << "\n";
      return passed ? kExitOk : kExitVerifyFailed;
    } else if (*build) {
      const auto w = !perm.empty() ? parse_perm_flag(perm, colors) : permutation_from_json(parse_json(read_input(in_path)));
      emit(to_json(build_reduced_plabic(w)), out_path);
    } else if (*reduce_check) {
      const auto g = load_graph(in_path);
      const Json result = reduced_json(g);
      emit(result, out_path);
      return result["reduced"].get<bool>() ? kExitOk : kExitVerifyFailed;
    } else if (*strands_cmd) {
      emit(strands_json(load_graph(in_path)), out_path);
    } else if (*faces_cmd) {
      emit(faces_json(load_graph(in_path)), out_path);
    } else if (*gmeasure || *measure) {
      const auto g = load_graph(in_path);
      emit(to_json(boundary_measurement(g, sample_vertex_data(g, seed))), out_path);
    } else if (*tile) {
      const auto g = load_graph(in_path);
      const CyclicProjection pi(g.n());
      emit(to_json(tiling_from_graph(g, pi), pi), out_path);
    } else if (*membrane) {
      emit(to_json(membrane_from_graph(load_graph(in_path))), out_path);
    } else if (*positroid_cmd) {
      emit(to_json(positroid_of_graph(load_graph(in_path))), out_path);
    } else if (*flip) {
      emit(flipgraph_json(flip_graph(k, n, bound)), out_path);
    } else if (*enumerate) {
      Json list = Json::array();
      for (const auto& c : maximal_ws_collections(k, n)) {
        Json sets = Json::array();
        for (Subset s : c) sets.push_back(s.label());
        list.push_back(sets);
      }
      emit(Json{{"k", k}, {"n", n}, {"count", list.size()}, {"collections", list}}, out_path);
    } else if (*paths) {
      const auto stats = monotone_path_stats(k, n);
      Json out{{"k", k}, {"n", n}, {"paths", stats.total.str()}, {"shortest", stats.shortest}, {"longest", stats.longest}};
      if (longest) {
        out["longest_count"] = stats.longest_count.str();
        if (k < n) out["hook_length"] = hook_length_count(k, n).str();
      }
      emit(out, out_path);
    } else if (*render) {
      const auto g = load_graph(in_path);
      require(format == "svg" || as == "graph", ErrorCode::InvalidInput, "DOT output is only available for graphs");
      if (format == "dot") {
        emit_text(dot_of_graph(g), out_path);
      } else if (as == "graph") {
        emit_text(svg_of_graph(g), out_path);
      } else {
        const CyclicProjection pi(g.n());
        if (as == "tiling") emit_text(svg_of_tiling(tiling_from_graph(g, pi), pi), out_path);
        else emit_text(svg_of_membrane(membrane_from_graph(g), pi), out_path);
      }
    }
  } catch (const Error& e) {
    std::cout << error_json(e).dump() << "\n";
    return kExitInputError;
  } catch (const std::exception& e) {
    std::cout << Json{{"error", "Internal"}, {"detail", e.what()}}.dump() << "\n";
    return kExitVerifyFailed;
  }
  return kExitOk;
}
