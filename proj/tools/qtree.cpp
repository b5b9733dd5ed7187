// qtree: quantum automorphism groups of trees from the command line.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "qtree/canon.hpp"
#include "qtree/census.hpp"
#include "qtree/center.hpp"
#include "qtree/decompose.hpp"
#include "qtree/oracle.hpp"
#include "qtree/refine.hpp"

namespace {

using json = nlohmann::ordered_json;
using namespace qtree;

enum class Format { Human, Structured };

std::string read_input(const std::string& path) {
  if (path == "-") {
    return std::string(std::istreambuf_iterator<char>(std::cin), {});
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::EmptyInput, "cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

Graph load_graph(const std::string& path) { return parse_edge_list(read_input(path)); }

Vertex lookup_label(const Graph& g, const std::string& label) {
  for (Vertex v = 0; v < g.vertex_count(); ++v)
    if (g.label(v) == label) return v;
  throw Error(ErrorCode::InvalidVertex, "no vertex labelled \"" + label + "\"");
}

json labels_of(const Graph& g, const VertexSet& s) {
  json out = json::array();
  for (Vertex v : s) out.push_back(g.label(v));
  return out;
}

std::string join_labels(const Graph& g, const VertexSet& s) {
  std::string out;
  for (Vertex v : s) {
    if (!out.empty()) out += ' ';
    out += g.label(v);
  }
  return out;
}

json classes_json(const Graph& g, const Partition& p) {
  json out = json::array();
  for (const auto& cls : p.classes) out.push_back(labels_of(g, cls));
  return out;
}

std::string classes_text(const Graph& g, const Partition& p) {
  std::string out;
  for (const auto& cls : p.classes) {
    if (!out.empty()) out += ' ';
    out += "{" + join_labels(g, cls) + "}";
  }
  return out;
}

struct ComputeArgs {
  std::string file;
  std::string root;
  Format format = Format::Human;
  bool verify = false;
};

// Brute-force |Aut| when the input is small enough, as a decimal string.
std::optional<std::string> brute_order(const ColoredGraph& x) {
  int cap = brute_limit_from_env();
  if (x.vertex_count() > cap) return std::nullopt;
  return std::to_string(count_automorphisms(x, cap));
}

int run_compute(const ComputeArgs& args) {
  Graph g = load_graph(args.file);
  TreeReport report = analyze(g);
  std::optional<Vertex> root;
  if (!args.root.empty()) root = lookup_label(g, args.root);

  GroupExpr expr = report.qut;
  BigInt order = report.classical_order;
  Partition orbits = report.refinement_partition;
  ColoredGraph checked = ColoredGraph::uncolored(g);
  if (root) {
    RootedTree rt(g, *root);
    expr = qut_rooted(rt);
    order = classical_order(expr);
    checked = rt.colored();
    orbits = color_refinement(checked);
  }
  bool quantum = !is_classical(expr);

  std::optional<std::string> brute;
  if (args.verify) {
    brute = brute_order(checked);
    if (brute && *brute != order.str())
      throw Error(ErrorCode::TooLarge, "verification failed: brute-force |Aut| = " + *brute +
                                           " but the expression has order " + order.str());
  }

  const auto& rootification = report.rootification;
  if (args.format == Format::Structured) {
    json out;
    out["input"] = {{"vertices", report.vertex_count}, {"edges", report.edge_count}};
    if (root) out["root"] = g.label(*root);
    out["center"] = labels_of(g, report.center.center);
    out["radius"] = report.center.radius;
    out["rootified"] = !root && rootification.subdivided;
    out["expr"] = expr.text();
    out["expr_tree"] = to_json(expr);
    out["aut_order"] = order.str();
    out["quantum_symmetry"] = quantum;
    out["orbits"] = classes_json(g, orbits);
    if (args.verify) out["brute_aut_order"] = brute ? json(*brute) : json(nullptr);
    std::cout << out.dump() << '\n';
    return 0;
  }

  std::cout << "vertices: " << report.vertex_count << '\n'
            << "edges: " << report.edge_count << '\n'
            << "radius: " << report.center.radius << '\n'
            << "center: " << join_labels(g, report.center.center) << '\n';
  if (root) {
    std::cout << "root: " << g.label(*root) << '\n'
              << "orbits (root fixed): " << classes_text(g, orbits) << '\n'
              << "|Aut_r| = " << order << '\n';
  } else {
    if (rootification.subdivided) {
      const auto& z = rootification.original_center;
      std::cout << "rootification: subdivide central edge " << g.label(z[0]) << "-" << g.label(z[1])
                << '\n';
    } else {
      std::cout << "rootification: root at " << g.label(rootification.rooted.root()) << '\n';
    }
    std::cout << "orbits: " << classes_text(g, orbits) << '\n' << "|Aut| = " << order << '\n';
  }
  if (args.verify)
    std::cout << "brute-force |Aut|: "
              << (brute ? *brute + " (agrees)" : std::string("skipped, above QTREE_MAX_BRUTE"))
              << '\n';
  std::cout << (root ? "Qut_r = " : "Qut = ") << expr.text() << '\n'
            << "quantum symmetry: " << (quantum ? "yes" : "no") << '\n';
  return 0;
}

int run_center(const std::string& file, Format format) {
  Graph g = load_graph(file);
  CenterResult c = center_by_eccentricity(g);
  LeafLayers layers = leaf_stripping_layers(g);
  if (format == Format::Structured) {
    json out;
    out["radius"] = c.radius;
    out["center"] = labels_of(g, c.center);
    json ecc = json::object();
    for (Vertex v = 0; v < g.vertex_count(); ++v) ecc[g.label(v)] = c.eccentricities[v];
    out["eccentricities"] = std::move(ecc);
    json ls = json::array();
    for (const auto& layer : layers.layers) ls.push_back(labels_of(g, layer));
    out["layers"] = std::move(ls);
    std::cout << out.dump() << '\n';
    return 0;
  }
  std::cout << "radius: " << c.radius << '\n' << "center: " << join_labels(g, c.center) << '\n';
  for (std::size_t k = 0; k < layers.layers.size(); ++k)
    std::cout << "layer " << k << ": " << join_labels(g, layers.layers[k]) << '\n';
  return 0;
}

int run_canon(const std::string& file, const std::string& root_label, Format format) {
  Graph g = load_graph(file);
  json out;
  std::string text;
  if (!root_label.empty()) {
    RootedTree rt(g, lookup_label(g, root_label));
    text = ahu_code(rt).code;
    out["root"] = root_label;
    out["code"] = text;
  } else {
    FreeTreeKey key = free_tree_key(g);
    text = key.to_string();
    out["code"] = key.code.code;
    out["subdivided"] = key.subdivided;
  }
  if (format == Format::Structured)
    std::cout << out.dump() << '\n';
  else
    std::cout << text << '\n';
  return 0;
}

int run_orbits(const std::string& file, Format format) {
  Graph g = load_graph(file);
  Partition p = color_refinement(ColoredGraph::uncolored(g));
  if (format == Format::Structured) {
    std::cout << json{{"orbits", classes_json(g, p)}}.dump() << '\n';
    return 0;
  }
  for (const auto& cls : p.classes) std::cout << join_labels(g, cls) << '\n';
  return 0;
}

int run_iso(const std::string& a, const std::string& b) {
  Graph ga = load_graph(a);
  Graph gb = load_graph(b);
  std::cout << (tree_isomorphic(ga, gb) ? "isomorphic" : "not isomorphic") << '\n';
  return 0;
}

int run_gen(int n, bool rooted, bool random, std::uint64_t seed) {
  if (random) {
    std::mt19937_64 rng(seed);
    std::cout << to_edge_list(random_tree(n, rng));
    return 0;
  }
  bool first = true;
  auto emit = [&](const Graph& g) {
    if (!first) std::cout << '\n';
    first = false;
    if (rooted) std::cout << "# root 0\n";
    std::cout << to_edge_list(g);
  };
  if (rooted) {
    RootedTreeStream stream(n);
    while (auto t = stream.next()) emit(t->tree());
  } else {
    FreeTreeStream stream(n);
    while (auto t = stream.next()) emit(*t);
  }
  return 0;
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::InvalidVertex, "cannot write " + path);
  out << content;
}

int run_census_cmd(int max_n, const std::string& details, const std::string& out_path,
                   int workers) {
  CensusOptions options;
  options.workers = workers;
  options.keep_details = !details.empty();
  CensusTable table = run_census(max_n, options);
  for (const auto& w : table.warnings) std::cerr << "warning: " << w << '\n';
  if (!details.empty()) write_file(details, details_tsv(table));
  if (out_path.empty())
    std::cout << to_tsv(table);
  else
    write_file(out_path, to_tsv(table));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Quantum automorphism groups of trees"};
  app.require_subcommand(1);

  const std::map<std::string, Format> formats{{"human", Format::Human},
                                              {"structured", Format::Structured}};
  auto add_format = [&](CLI::App* cmd, Format& target) {
    cmd->add_option("--format", target, "Output format: human or structured (JSON)")
        ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
  };

  ComputeArgs compute;
  auto* compute_cmd = app.add_subcommand(
      "compute", "Compute Qut of a tree (or of a rooted tree with --root) as a group expression");
  compute_cmd->add_option("file", compute.file, "Edge-list file ('-' for stdin)")->required();
  compute_cmd->add_option("--root", compute.root, "Vertex label to fix as root");
  compute_cmd->add_flag("--verify", compute.verify,
                        "Cross-check |Aut| by brute force (up to QTREE_MAX_BRUTE vertices)");
  add_format(compute_cmd, compute.format);

  std::string center_file;
  Format center_format = Format::Human;
  auto* center_cmd =
      app.add_subcommand("center", "Print radius, Jordan center and leaf-stripping layers");
  center_cmd->add_option("file", center_file, "Edge-list file")->required();
  add_format(center_cmd, center_format);

  std::string canon_file, canon_root;
  Format canon_format = Format::Human;
  auto* canon_cmd = app.add_subcommand(
      "canon", "Print the canonical code (rootification code; '~' marks a subdivided center)");
  canon_cmd->add_option("file", canon_file, "Edge-list file")->required();
  canon_cmd->add_option("--root", canon_root, "Vertex label to root at instead of the center");
  add_format(canon_cmd, canon_format);

  std::string orbits_file;
  Format orbits_format = Format::Human;
  auto* orbits_cmd = app.add_subcommand(
      "orbits", "Print the stable color-refinement partition, one class per line");
  orbits_cmd->add_option("file", orbits_file, "Edge-list file")->required();
  add_format(orbits_cmd, orbits_format);

  std::string iso_a, iso_b;
  auto* iso_cmd = app.add_subcommand(
      "iso",
      "Decide whether two trees are isomorphic; for trees this also decides quantum isomorphism");
  iso_cmd->add_option("a", iso_a, "First edge-list file")->required();
  iso_cmd->add_option("b", iso_b, "Second edge-list file")->required();

  int gen_n = 0;
  bool gen_rooted = false, gen_random = false;
  std::uint64_t gen_seed = 1;
  auto* gen_cmd = app.add_subcommand(
      "gen", "Emit every tree on n vertices as edge lists separated by blank lines");
  gen_cmd->add_option("--n", gen_n, "Number of vertices")->required()->check(CLI::Range(1, 100000));
  gen_cmd->add_flag("--rooted", gen_rooted, "Enumerate rooted trees (root is vertex 0)");
  gen_cmd->add_flag("--random", gen_random, "Emit one uniform random labeled tree instead");
  gen_cmd->add_option("--seed", gen_seed, "Seed for --random");

  int census_max_n = 0;
  std::string census_details, census_out;
  int census_workers = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
  auto* census_cmd =
      app.add_subcommand("census", "Quantum-symmetry statistics over all trees up to max-n");
  census_cmd->add_option("--max-n", census_max_n, "Largest tree size (1..18)")->required();
  census_cmd->add_option("--details", census_details, "Write per-tree TSV to this path");
  census_cmd->add_option("--out", census_out, "Write the summary TSV here instead of stdout");
  census_cmd->add_option("--workers", census_workers, "Worker threads")->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*compute_cmd) return run_compute(compute);
    if (*center_cmd) return run_center(center_file, center_format);
    if (*canon_cmd) return run_canon(canon_file, canon_root, canon_format);
    if (*orbits_cmd) return run_orbits(orbits_file, orbits_format);
    if (*iso_cmd) return run_iso(iso_a, iso_b);
    if (*gen_cmd) {
      if (!gen_random && gen_n > 18) {
        std::cerr << "error: exhaustive generation supports n <= 18\n";
        return 1;
      }
      return run_gen(gen_n, gen_rooted, gen_random, gen_seed);
    }
    if (*census_cmd) return run_census_cmd(census_max_n, census_details, census_out, census_workers);
  } catch (const qtree::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 2;
}
