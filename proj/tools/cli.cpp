#include "cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <utility>

#include "CLI11.hpp"

#include "sgcanon/bench.hpp"
#include "sgcanon/encode.hpp"
#include "sgcanon/enumerate.hpp"
#include "sgcanon/error.hpp"
#include "sgcanon/generators.hpp"
#include "sgcanon/labelling.hpp"
#include "sgcanon/oracle.hpp"
#include "sgcanon/refine.hpp"
#include "sgcanon/serialise.hpp"

namespace sgcanon {

namespace {

std::string read_stream(std::istream& in) {
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

std::string read_input(const std::string& path, std::istream& in) {
  if (path == "-") return read_stream(in);
  std::ifstream file(path);
  if (!file) throw Error("cannot open file: " + path);
  return read_stream(file);
}

json parse_document(const std::string& text, const std::string& path) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error("invalid JSON in " + (path == "-" ? "stdin" : path) + ": " +
                e.what());
  }
}

// A graph plus, when the input was a site-graph document, its site form.
struct LoadedGraph {
  ColouredGraph coloured;
  std::optional<SiteGraph> site;
};

LoadedGraph load_graph(const std::string& path, const std::string& format,
                       std::istream& in) {
  const json doc = parse_document(read_input(path, in), path);
  std::string kind = format;
  if (kind == "auto") {
    if (doc.is_object() && doc.contains("agents")) {
      kind = "site";
    } else if (doc.is_object() && doc.contains("n")) {
      kind = "coloured";
    } else {
      throw Error(
          "cannot detect the document format: expected an object with "
          "\"agents\" (site graph) or \"n\" (coloured graph)");
    }
  }
  if (kind == "site") {
    SiteGraph s = site_graph_from_json(doc);
    ColouredGraph g = encode(s);  // rejects ill-formed site graphs
    return {std::move(g), std::move(s)};
  }
  return {coloured_graph_from_json(doc), std::nullopt};
}

void print_json(std::ostream& out, const json& doc) {
  out << doc.dump(2) << "\n";
}

json witness_to_json(const Permutation& p) {
  json arr = json::array();
  for (int image : p.images()) arr.push_back(image);
  return arr;
}

int default_oracle_limit() {
  if (const char* env = std::getenv("SGCANON_ORACLE_LIMIT")) {
    try {
      return std::stoi(env);
    } catch (const std::exception&) {
      throw Error("SGCANON_ORACLE_LIMIT must be an integer, got \"" +
                  std::string(env) + "\"");
    }
  }
  return 200;
}

}  // namespace

int cli_run(const std::vector<std::string>& args, std::istream& in,
            std::ostream& out, std::ostream& err) {
  CLI::App app{"Canonical labelling of site graphs via rigid edge-coloured "
               "digraphs"};
  app.require_subcommand(1);

  std::string format = "auto";
  const auto add_format = [&format](CLI::App* cmd) {
    cmd->add_option("--format", format,
                    "Input document format (default: auto-detect)")
        ->check(CLI::IsMember({"auto", "site", "coloured"}));
  };

  // canon
  auto* canon = app.add_subcommand(
      "canon", "Print the canonical form and digest of a graph");
  std::string canon_input = "-";
  std::string alg = "pairwise";
  std::string inner = "parallel";
  bool with_witness = false;
  canon->add_option("input", canon_input, "Input file, or - for stdin");
  canon->add_option("--alg", alg, "Labelling algorithm")
      ->check(CLI::IsMember({"pairwise", "parallel", "refined", "race"}));
  canon->add_option("--inner", inner,
                    "Inner labeller for --alg refined")
      ->check(CLI::IsMember({"pairwise", "parallel"}));
  canon->add_flag("--witness", with_witness,
                  "Also print the relabelling used (for race, the winner's)");
  add_format(canon);

  // iso
  auto* iso = app.add_subcommand(
      "iso", "Decide whether two graphs are isomorphic (exit 0/1)");
  std::string iso_a;
  std::string iso_b;
  iso->add_option("first", iso_a, "First input file, or - for stdin")
      ->required();
  iso->add_option("second", iso_b, "Second input file, or - for stdin")
      ->required();
  add_format(iso);

  // classes
  auto* classes = app.add_subcommand(
      "classes", "Print the refinement classes over the graph's vertices");
  std::string classes_input = "-";
  classes->add_option("input", classes_input, "Input file, or - for stdin");
  add_format(classes);

  // orbits
  auto* orbits = app.add_subcommand(
      "orbits", "Print vertex orbits under the automorphism group");
  std::string orbits_input = "-";
  int orbit_limit = -1;
  orbits->add_option("input", orbits_input, "Input file, or - for stdin");
  orbits->add_option("--limit", orbit_limit,
                     "Largest vertex count accepted (default 200, or "
                     "SGCANON_ORACLE_LIMIT)");
  add_format(orbits);

  // gen
  auto* gen = app.add_subcommand("gen", "Generate an example graph");
  std::string kind;
  int gen_n = 8;
  std::uint64_t gen_seed = 1;
  int gen_colours = 1;
  int gen_proteins = 2;
  int gen_sites = 3;
  gen->add_option("--kind", kind, "Which graph to generate")
      ->required()
      ->check(CLI::IsMember(
          {"fig1", "fig4a", "fig4b", "cycle", "chain", "tree", "random"}));
  gen->add_option("--n", gen_n, "Vertex count (cycle, chain, tree, random)");
  gen->add_option("--seed", gen_seed, "Random seed (tree, random)");
  gen->add_option("--colours", gen_colours, "Colour count (cycle)");
  gen->add_option("--proteins", gen_proteins, "Protein count (random)");
  gen->add_option("--sites", gen_sites, "Sites per vertex (random)");

  // bench
  auto* bench = app.add_subcommand(
      "bench", "Time the labellers on generated graph families");
  std::string suite = "trees";
  int max_n = 64;
  std::size_t bench_runs = 5;
  bench->add_option("--suite", suite, "Graph family")
      ->check(CLI::IsMember({"symmetric", "asymmetric", "trees"}));
  bench->add_option("--max-n", max_n, "Largest size (sizes double from 8)");
  bench->add_option("--runs", bench_runs, "Timed runs per configuration");

  // enum
  auto* enumerate = app.add_subcommand(
      "enum", "Print the breadth-first edge enumeration from a start vertex");
  std::string enum_input = "-";
  int enum_from = 1;
  enumerate->add_option("input", enum_input, "Input file, or - for stdin");
  enumerate->add_option("--from", enum_from, "Start vertex")->required();
  add_format(enumerate);

  std::vector<const char*> argv;
  argv.push_back("sgcanon");
  for (const std::string& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (*canon) {
      const LoadedGraph g = load_graph(canon_input, format, in);
      CanonicalForm form;
      if (alg == "pairwise") {
        form = canon_pairwise(g.coloured);
      } else if (alg == "parallel") {
        form = canon_parallel(g.coloured);
      } else if (alg == "refined") {
        form = canon_combined(g.coloured, inner == "pairwise"
                                              ? InnerLabeller::kPairwise
                                              : InnerLabeller::kParallel);
      } else {
        form = canon_race(g.coloured);
      }
      json doc = json::object();
      doc["canonical"] = coloured_graph_to_json(form.graph);
      // Canonical forms of encoded site graphs stay decodable (the encoded
      // shape is preserved by renaming), so site inputs round-trip.
      if (g.site) doc["canonical_site"] = site_graph_to_json(decode(form.graph));
      doc["digest"] = form.digest_hex();
      if (with_witness) doc["witness"] = witness_to_json(form.witness);
      print_json(out, doc);
      return 0;
    }

    if (*iso) {
      if (iso_a == "-" && iso_b == "-") {
        throw Error("only one of the two inputs can be stdin");
      }
      const LoadedGraph a = load_graph(iso_a, format, in);
      const LoadedGraph b = load_graph(iso_b, format, in);
      json doc = json::object();
      if (a.coloured.vertex_count() != b.coloured.vertex_count()) {
        doc["isomorphic"] = false;
        print_json(out, doc);
        return 1;
      }
      const CanonicalForm fa = canon_pairwise(a.coloured);
      const CanonicalForm fb = canon_pairwise(b.coloured);
      if (fa.digest != fb.digest) {
        doc["isomorphic"] = false;
        print_json(out, doc);
        return 1;
      }
      const Permutation witness =
          compose(fb.witness.inverse(), fa.witness);
      if (!is_isomorphism(a.coloured, b.coloured, witness)) {
        throw Error("internal error: derived witness failed verification");
      }
      doc["isomorphic"] = true;
      doc["witness"] = witness_to_json(witness);
      print_json(out, doc);
      return 0;
    }

    if (*classes) {
      const LoadedGraph g = load_graph(classes_input, format, in);
      const StatePartition partition = hopcroft_extended(g.coloured);
      const int n = g.coloured.vertex_count();
      std::vector<std::pair<std::vector<int>, bool>> real;
      for (std::size_t i = 0; i < partition.classes.size(); ++i) {
        const auto& cls = partition.classes[i];
        if (!cls.empty() && cls.front() <= n) {
          real.emplace_back(cls, partition.least &&
                                     static_cast<std::size_t>(
                                         *partition.least) == i);
        }
      }
      std::sort(real.begin(), real.end(),
                [](const auto& a, const auto& b) {
                  if (a.first.size() != b.first.size()) {
                    return a.first.size() < b.first.size();
                  }
                  return a.first.front() < b.first.front();
                });
      json doc = json::object();
      json list = json::array();
      for (const auto& [members, is_start] : real) {
        json cls = json::object();
        cls["members"] = members;
        cls["start_class"] = is_start;
        list.push_back(std::move(cls));
      }
      doc["classes"] = std::move(list);
      print_json(out, doc);
      return 0;
    }

    if (*orbits) {
      const LoadedGraph g = load_graph(orbits_input, format, in);
      const int limit = orbit_limit > 0 ? orbit_limit : default_oracle_limit();
      const OrbitPartition partition = orbits_bruteforce(g.coloured, limit);
      json doc = json::object();
      doc["orbits"] = partition.orbits;
      doc["automorphism_count"] = partition.automorphism_count;
      print_json(out, doc);
      return 0;
    }

    if (*gen) {
      if (kind == "fig1") {
        print_json(out, site_graph_to_json(make_fig1()));
      } else if (kind == "fig4a") {
        print_json(out, coloured_graph_to_json(make_fig4a()));
      } else if (kind == "fig4b") {
        print_json(out, coloured_graph_to_json(make_fig4b()));
      } else if (kind == "cycle") {
        print_json(out, coloured_graph_to_json(make_cycle(gen_n, gen_colours)));
      } else if (kind == "chain") {
        print_json(out, coloured_graph_to_json(make_chain(gen_n)));
      } else if (kind == "tree") {
        print_json(out, coloured_graph_to_json(make_tree(gen_n, gen_seed)));
      } else {
        print_json(out, site_graph_to_json(make_random_site_graph(
                            gen_n, gen_proteins, gen_sites, gen_seed)));
      }
      return 0;
    }

    if (*bench) {
      const BenchReport report = run_bench_suite(suite, max_n, bench_runs);
      print_json(out, report.to_json());
      return 0;
    }

    if (*enumerate) {
      const LoadedGraph g = load_graph(enum_input, format, in);
      const EdgeEnumeration e = bfs_enumerate(g.coloured, enum_from);
      json doc = json::object();
      doc["start"] = enum_from;
      doc["order"] = e.order;
      doc["renaming"] = witness_to_json(e.renaming);
      doc["edges_examined"] = e.edges_examined;
      json seq = json::array();
      for (const AnnotatedEdge& edge :
           converted_sequence(g.coloured, e)) {
        seq.push_back({{"source", edge.source},
                       {"target", edge.target},
                       {"colour", describe(edge.colour)}});
      }
      doc["sequence"] = std::move(seq);
      print_json(out, doc);
      return 0;
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}

}  // namespace sgcanon
