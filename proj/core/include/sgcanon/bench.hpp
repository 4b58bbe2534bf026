#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "sgcanon/labelling.hpp"
#include "sgcanon/serialise.hpp"

namespace sgcanon {

// One measured configuration: median wall time of `runs` labelling calls on
// one generated graph, plus the labeller's counters from the median run.
struct BenchEntry {
  std::string generator;
  int n = 0;
  std::string algorithm;
  double wall_ms = 0.0;
  std::size_t runs = 0;
  LabelStats stats;
};

struct BenchReport {
  std::string suite;
  std::vector<BenchEntry> entries;

  json to_json() const;
};

// Built-in suites over the generators:
//  - "symmetric":  directed cycles (maximal automorphism group),
//  - "asymmetric": chains and multi-coloured cycles (trivial group),
//  - "trees":      random rigid trees (combined labeller's best case).
// Each runs every labeller on sizes doubling up to max_n, `runs` times.
BenchReport run_bench_suite(const std::string& suite, int max_n,
                            std::size_t runs = 5);

}  // namespace sgcanon
