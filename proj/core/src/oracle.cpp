#include "sgcanon/oracle.hpp"

#include <algorithm>
#include <numeric>
#include <string>
#include <tuple>
#include <utility>

#include "sgcanon/error.hpp"

namespace sgcanon {

namespace {

void require_small(const ColouredGraph& g, int limit, const char* what) {
  if (g.vertex_count() > limit) {
    throw Error(std::string(what) + " is limited to " + std::to_string(limit) +
                " vertices; got " + std::to_string(g.vertex_count()));
  }
}

// The renamed edge list as sorted (from, to, colour-id) triples; colour ids
// are stable under renaming because the colour set is.
void renamed_triples(const ColouredGraph& g, const std::vector<int>& images,
                     std::vector<std::tuple<int, int, int>>& out) {
  const std::vector<int>& ids = g.edge_colour_ids();
  out.clear();
  out.reserve(g.edges().size());
  for (std::size_t i = 0; i < g.edges().size(); ++i) {
    const ColouredEdge& e = g.edges()[i];
    out.emplace_back(images[static_cast<std::size_t>(e.from - 1)],
                     images[static_cast<std::size_t>(e.to - 1)], ids[i]);
  }
  std::sort(out.begin(), out.end());
}

OrbitPartition orbits_from(int n, const std::vector<Permutation>& autos) {
  std::vector<int> root(static_cast<std::size_t>(n + 1));
  std::iota(root.begin(), root.end(), 0);
  const auto find = [&root](int v) {
    while (root[static_cast<std::size_t>(v)] != v) {
      v = root[static_cast<std::size_t>(v)] =
          root[static_cast<std::size_t>(root[static_cast<std::size_t>(v)])];
    }
    return v;
  };
  for (const Permutation& a : autos) {
    for (int v = 1; v <= n; ++v) {
      const int x = find(v);
      const int y = find(a(v));
      if (x != y) root[static_cast<std::size_t>(std::max(x, y))] =
          std::min(x, y);
    }
  }
  std::vector<std::vector<int>> buckets(static_cast<std::size_t>(n + 1));
  for (int v = 1; v <= n; ++v) {
    buckets[static_cast<std::size_t>(find(v))].push_back(v);
  }
  OrbitPartition out;
  for (auto& b : buckets) {
    if (!b.empty()) out.orbits.push_back(std::move(b));
  }
  out.automorphism_count = static_cast<long long>(autos.size());
  return out;
}

// Extends the map 1 -> target across g by following edge colours; exact on
// rigid connected graphs.  Returns the permutation when the propagated map
// is a colour-preserving bijection onto h.
std::optional<Permutation> propagate(const ColouredGraph& g,
                                     const ColouredGraph& h, int target) {
  const int n = g.vertex_count();
  std::vector<int> image(static_cast<std::size_t>(n + 1), 0);
  std::vector<char> used(static_cast<std::size_t>(n + 1), 0);
  image[1] = target;
  used[static_cast<std::size_t>(target)] = 1;
  std::vector<int> stack = {1};

  const auto match = [&](int v, int forced) {
    if (image[static_cast<std::size_t>(v)] == 0) {
      if (used[static_cast<std::size_t>(forced)]) return false;
      image[static_cast<std::size_t>(v)] = forced;
      used[static_cast<std::size_t>(forced)] = 1;
      stack.push_back(v);
      return true;
    }
    return image[static_cast<std::size_t>(v)] == forced;
  };

  while (!stack.empty()) {
    const int v = stack.back();
    stack.pop_back();
    const int mapped = image[static_cast<std::size_t>(v)];
    for (int id : g.out_edges(v)) {
      const ColouredEdge& e = g.edges()[static_cast<std::size_t>(id)];
      // The image must leave `mapped` on the same colour; rigidity makes
      // that edge unique in h.
      int forced = 0;
      for (int hid : h.out_edges(mapped)) {
        const ColouredEdge& he = h.edges()[static_cast<std::size_t>(hid)];
        if (he.colour == e.colour) {
          forced = he.to;
          break;
        }
      }
      if (forced == 0 || !match(e.to, forced)) return std::nullopt;
    }
    for (int id : g.in_edges(v)) {
      const ColouredEdge& e = g.edges()[static_cast<std::size_t>(id)];
      int forced = 0;
      for (int hid : h.in_edges(mapped)) {
        const ColouredEdge& he = h.edges()[static_cast<std::size_t>(hid)];
        if (he.colour == e.colour) {
          forced = he.from;
          break;
        }
      }
      if (forced == 0 || !match(e.from, forced)) return std::nullopt;
    }
  }

  for (int v = 1; v <= n; ++v) {
    if (image[static_cast<std::size_t>(v)] == 0) return std::nullopt;
  }
  Permutation alpha(std::vector<int>(image.begin() + 1, image.end()));
  if (!is_isomorphism(g, h, alpha)) return std::nullopt;
  return alpha;
}

void require_rigid_connected(const ColouredGraph& g, const char* what) {
  if (!is_connected(g)) {
    throw Error(std::string(what) + " requires a connected graph");
  }
  if (!is_rigid(g)) {
    throw Error(std::string(what) + " requires a rigid graph");
  }
}

}  // namespace

ColouredGraph canon_bruteforce(const ColouredGraph& g, int limit) {
  require_small(g, limit, "the exhaustive canonical form");
  const int n = g.vertex_count();
  std::vector<int> images(static_cast<std::size_t>(n));
  std::iota(images.begin(), images.end(), 1);

  std::vector<int> best_images = images;
  std::vector<std::tuple<int, int, int>> best;
  std::vector<std::tuple<int, int, int>> triples;
  renamed_triples(g, images, best);
  while (std::next_permutation(images.begin(), images.end())) {
    renamed_triples(g, images, triples);
    if (triples < best) {
      std::swap(best, triples);
      best_images = images;
    }
  }
  return apply_renaming(g, Permutation(std::move(best_images)));
}

std::optional<Permutation> iso_bruteforce(const ColouredGraph& g,
                                          const ColouredGraph& h, int limit) {
  if (g.vertex_count() != h.vertex_count() ||
      g.edges().size() != h.edges().size()) {
    return std::nullopt;
  }
  require_small(g, limit, "the exhaustive isomorphism search");
  const int n = g.vertex_count();
  std::vector<int> images(static_cast<std::size_t>(n));
  std::iota(images.begin(), images.end(), 1);
  do {
    Permutation alpha(images);
    if (is_isomorphism(g, h, alpha)) return alpha;
  } while (std::next_permutation(images.begin(), images.end()));
  return std::nullopt;
}

std::optional<Permutation> iso_pruned(const ColouredGraph& g,
                                      const ColouredGraph& h, int limit) {
  require_rigid_connected(g, "the pruned isomorphism search");
  require_rigid_connected(h, "the pruned isomorphism search");
  require_small(g, limit, "the pruned isomorphism search");
  if (g.vertex_count() != h.vertex_count() ||
      g.edges().size() != h.edges().size()) {
    return std::nullopt;
  }
  for (int target = 1; target <= h.vertex_count(); ++target) {
    if (auto alpha = propagate(g, h, target)) return alpha;
  }
  return std::nullopt;
}

std::vector<Permutation> automorphisms_pruned(const ColouredGraph& g,
                                              int limit) {
  require_rigid_connected(g, "the automorphism search");
  require_small(g, limit, "the automorphism search");
  std::vector<Permutation> out;
  for (int target = 1; target <= g.vertex_count(); ++target) {
    if (auto alpha = propagate(g, g, target)) out.push_back(std::move(*alpha));
  }
  return out;
}

OrbitPartition orbits_bruteforce(const ColouredGraph& g, int limit) {
  return orbits_from(g.vertex_count(), automorphisms_pruned(g, limit));
}

OrbitPartition orbits_naive(const ColouredGraph& g, int limit) {
  require_small(g, limit, "the exhaustive orbit computation");
  const int n = g.vertex_count();
  std::vector<int> images(static_cast<std::size_t>(n));
  std::iota(images.begin(), images.end(), 1);
  std::vector<Permutation> autos;
  do {
    Permutation alpha(images);
    if (is_isomorphism(g, g, alpha)) autos.push_back(std::move(alpha));
  } while (std::next_permutation(images.begin(), images.end()));
  return orbits_from(n, autos);
}

}  // namespace sgcanon
