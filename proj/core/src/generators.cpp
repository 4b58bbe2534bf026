#include "sgcanon/generators.hpp"

#include <algorithm>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "sgcanon/error.hpp"

namespace sgcanon {

namespace {

Colour named(const std::string& name) {
  return Colour::protein(ProteinName(name));
}

SiteName site(const std::string& name) { return SiteName(name); }

}  // namespace

SiteGraph make_fig1() {
  std::vector<ProteinName> naming = {ProteinName("blue"), ProteinName("red"),
                                     ProteinName("blue")};
  std::vector<Bond> bonds = {
      Bond({1, site("c")}, {2, site("c")}),
      Bond({2, site("a")}, {3, site("b")}),
      Bond({2, site("beta")}, {3, site("alpha")}),
  };
  return SiteGraph(3, std::move(naming), std::move(bonds));
}

ColouredGraph make_fig4a() {
  const Colour blue = named("blue");
  const Colour red = named("red");
  std::vector<ColouredEdge> edges = {
      {1, 2, blue}, {2, 4, blue}, {4, 3, blue}, {3, 1, blue},
      {1, 2, red},  {2, 1, red},  {3, 4, red},  {4, 3, red},
  };
  return ColouredGraph(4, std::move(edges));
}

ColouredGraph make_fig4b() {
  // Four blue 4-cycles laid out as the corners of a 4x4 grid
  //   a b | e f        1  2 |  5  6
  //   d c | h g   =    4  3 |  8  7
  //   ----+----        -----+-----
  //   i j | m n        9 10 | 13 14
  //   l k | p o       12 11 | 16 15
  // stitched by red bidirectional pairs between neighbouring corners.
  const Colour blue = named("blue");
  const Colour red = named("red");
  std::vector<ColouredEdge> edges;
  for (int base : {1, 5, 9, 13}) {
    for (int i = 0; i < 4; ++i) {
      edges.push_back({base + i, base + (i + 1) % 4, blue});
    }
  }
  const std::pair<int, int> pairs[] = {{2, 6},  {4, 5},  {10, 13}, {12, 14},
                                       {7, 15}, {8, 16}, {1, 11},  {3, 9}};
  for (const auto& [u, v] : pairs) {
    edges.push_back({u, v, red});
    edges.push_back({v, u, red});
  }
  return ColouredGraph(16, std::move(edges));
}

ColouredGraph make_cycle(int n, int colour_count) {
  if (n < 1) throw Error("a cycle needs at least one vertex");
  if (colour_count < 1) throw Error("a cycle needs at least one colour");
  std::vector<ColouredEdge> edges;
  edges.reserve(static_cast<std::size_t>(n));
  for (int v = 1; v <= n; ++v) {
    edges.push_back(
        {v, v % n + 1, named("c" + std::to_string((v - 1) % colour_count))});
  }
  return ColouredGraph(n, std::move(edges));
}

ColouredGraph make_chain(int n) {
  if (n < 1) throw Error("a chain needs at least one vertex");
  std::vector<ColouredEdge> edges;
  edges.reserve(static_cast<std::size_t>(n - 1));
  for (int v = 1; v < n; ++v) edges.push_back({v, v + 1, named("c0")});
  return ColouredGraph(n, std::move(edges));
}

ColouredGraph make_tree(int n, std::uint64_t seed, int max_children) {
  if (n < 1) throw Error("a tree needs at least one vertex");
  if (max_children < 1) throw Error("a tree needs max_children >= 1");
  std::mt19937_64 rng(seed);
  const int palette = 4;
  std::vector<Colour> colours;
  for (int c = 0; c < palette; ++c) colours.push_back(named("t" + std::to_string(c)));

  std::vector<int> child_count(static_cast<std::size_t>(n + 1), 0);
  // Colour usage per vertex and direction, indexed [vertex][colour].
  std::vector<std::vector<char>> out_used(static_cast<std::size_t>(n + 1),
                                          std::vector<char>(palette, 0));
  std::vector<std::vector<char>> in_used = out_used;

  std::vector<ColouredEdge> edges;
  edges.reserve(static_cast<std::size_t>(n - 1));
  for (int v = 2; v <= n; ++v) {
    // Pick a parent with spare child capacity.
    int parent = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(v - 1));
    while (child_count[static_cast<std::size_t>(parent)] >= max_children) {
      parent = parent % (v - 1) + 1;
    }
    ++child_count[static_cast<std::size_t>(parent)];

    bool down = (rng() & 1) != 0;  // parent -> v, else v -> parent
    const auto eligible = [&](bool d) {
      std::vector<int> out;
      const auto& used = d ? out_used[static_cast<std::size_t>(parent)]
                           : in_used[static_cast<std::size_t>(parent)];
      for (int c = 0; c < palette; ++c) {
        if (!used[static_cast<std::size_t>(c)]) out.push_back(c);
      }
      return out;
    };
    std::vector<int> options = eligible(down);
    if (options.empty()) {
      down = !down;  // the parent cannot have 4 colours used both ways
      options = eligible(down);
    }
    const int colour =
        options[rng() % static_cast<std::uint64_t>(options.size())];
    if (down) {
      out_used[static_cast<std::size_t>(parent)]
              [static_cast<std::size_t>(colour)] = 1;
      in_used[static_cast<std::size_t>(v)][static_cast<std::size_t>(colour)] =
          1;
      edges.push_back({parent, v, colours[static_cast<std::size_t>(colour)]});
    } else {
      in_used[static_cast<std::size_t>(parent)]
             [static_cast<std::size_t>(colour)] = 1;
      out_used[static_cast<std::size_t>(v)][static_cast<std::size_t>(colour)] =
          1;
      edges.push_back({v, parent, colours[static_cast<std::size_t>(colour)]});
    }
  }
  return ColouredGraph(n, std::move(edges));
}

SiteGraph make_random_site_graph(int n, int protein_count, int site_count,
                                 std::uint64_t seed) {
  if (n < 1) throw Error("a random site graph needs at least one vertex");
  if (protein_count < 1 || site_count < 1) {
    throw Error("a random site graph needs proteins and sites to draw from");
  }
  std::mt19937_64 rng(seed);

  std::vector<ProteinName> naming;
  naming.reserve(static_cast<std::size_t>(n));
  for (int v = 1; v <= n; ++v) {
    naming.emplace_back(
        "P" + std::to_string(rng() % static_cast<std::uint64_t>(protein_count)));
  }

  // Free sites per vertex; each site carries at most one bond.
  std::vector<std::vector<int>> free_sites(static_cast<std::size_t>(n + 1));
  for (int v = 1; v <= n; ++v) {
    auto& f = free_sites[static_cast<std::size_t>(v)];
    for (int s = 0; s < site_count; ++s) f.push_back(s);
  }
  const auto take_site = [&](int v) {
    auto& f = free_sites[static_cast<std::size_t>(v)];
    const std::size_t i = rng() % f.size();
    const int s = f[i];
    f.erase(f.begin() + static_cast<std::vector<int>::difference_type>(i));
    return SiteName("s" + std::to_string(s));
  };

  std::vector<Bond> bonds;
  for (int v = 2; v <= n; ++v) {
    // Spanning bond to keep the graph connected.
    int partner = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(v - 1));
    int scanned = 0;
    while (free_sites[static_cast<std::size_t>(partner)].empty() &&
           scanned++ < v - 1) {
      partner = partner % (v - 1) + 1;
    }
    if (free_sites[static_cast<std::size_t>(partner)].empty() ||
        free_sites[static_cast<std::size_t>(v)].empty()) {
      throw Error("not enough sites for a connected site graph of this size");
    }
    bonds.emplace_back(SiteEndpoint{partner, take_site(partner)},
                       SiteEndpoint{v, take_site(v)});
  }
  // Extra bonds between leftover free sites, possibly within one vertex.
  const std::uint64_t extras = n > 1 ? rng() % static_cast<std::uint64_t>(n) : 0;
  for (std::uint64_t i = 0; i < extras; ++i) {
    const int u = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(n));
    const int w = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(n));
    auto& fu = free_sites[static_cast<std::size_t>(u)];
    auto& fw = free_sites[static_cast<std::size_t>(w)];
    if (u == w ? fu.size() < 2 : (fu.empty() || fw.empty())) continue;
    bonds.emplace_back(SiteEndpoint{u, take_site(u)},
                       SiteEndpoint{w, take_site(w)});
  }
  return SiteGraph(n, std::move(naming), std::move(bonds));
}

}  // namespace sgcanon
