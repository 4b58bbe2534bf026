#include "sgcanon/bench.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <utility>

#include "sgcanon/error.hpp"
#include "sgcanon/generators.hpp"

namespace sgcanon {

namespace {

struct TimedRun {
  double wall_ms = 0.0;
  LabelStats stats;
};

BenchEntry measure(const std::string& generator, int n,
                   const std::string& algorithm, const ColouredGraph& g,
                   std::size_t runs) {
  std::vector<TimedRun> samples(runs);
  for (TimedRun& sample : samples) {
    const auto begin = std::chrono::steady_clock::now();
    if (algorithm == "pairwise") {
      canon_pairwise(g, {}, &sample.stats);
    } else if (algorithm == "parallel") {
      canon_parallel(g, {}, &sample.stats);
    } else if (algorithm == "refined") {
      canon_combined(g, InnerLabeller::kParallel, &sample.stats);
    } else {
      canon_race(g);
    }
    const auto end = std::chrono::steady_clock::now();
    sample.wall_ms =
        std::chrono::duration<double, std::milli>(end - begin).count();
  }
  std::sort(samples.begin(), samples.end(),
            [](const TimedRun& a, const TimedRun& b) {
              return a.wall_ms < b.wall_ms;
            });
  const TimedRun& median = samples[samples.size() / 2];
  return {generator, n, algorithm, median.wall_ms, runs, median.stats};
}

}  // namespace

json BenchReport::to_json() const {
  json doc = json::object();
  doc["suite"] = suite;
  json list = json::array();
  for (const BenchEntry& e : entries) {
    list.push_back({{"generator", e.generator},
                    {"n", e.n},
                    {"algorithm", e.algorithm},
                    {"wall_ms", e.wall_ms},
                    {"runs", e.runs},
                    {"outer_iterations", e.stats.outer_iterations},
                    {"parallel_rounds", e.stats.parallel_rounds},
                    {"rounds_to_unique", e.stats.rounds_to_unique},
                    {"refine_class_count", e.stats.refine_class_count},
                    {"least_class_size", e.stats.least_class_size}});
  }
  doc["entries"] = std::move(list);
  return doc;
}

BenchReport run_bench_suite(const std::string& suite, int max_n,
                            std::size_t runs) {
  if (max_n < 8) throw Error("the benchmark suites start at 8 vertices");
  if (runs < 1) throw Error("at least one run per configuration is needed");

  std::vector<std::pair<std::string, std::function<ColouredGraph(int)>>>
      generators;
  if (suite == "symmetric") {
    generators.emplace_back("cycle",
                            [](int n) { return make_cycle(n, 1); });
  } else if (suite == "asymmetric") {
    generators.emplace_back("chain", [](int n) { return make_chain(n); });
    generators.emplace_back("cycle3",
                            [](int n) { return make_cycle(n, 3); });
  } else if (suite == "trees") {
    generators.emplace_back("tree", [](int n) {
      return make_tree(n, static_cast<std::uint64_t>(n));
    });
  } else {
    throw Error("unknown suite \"" + suite +
                "\"; expected symmetric, asymmetric or trees");
  }

  BenchReport report;
  report.suite = suite;
  for (int n = 8; n <= max_n; n *= 2) {
    for (const auto& [name, gen] : generators) {
      const ColouredGraph g = gen(n);
      for (const char* algorithm :
           {"pairwise", "parallel", "refined", "race"}) {
        report.entries.push_back(measure(name, n, algorithm, g, runs));
      }
    }
  }
  return report;
}

}  // namespace sgcanon
