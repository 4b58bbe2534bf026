#include "sgcanon/colgraph.hpp"

#include <algorithm>
#include <string>
#include <utility>

namespace sgcanon {

namespace {

bool edge_less(const ColouredEdge& a, const ColouredEdge& b) {
  if (a.from != b.from) return a.from < b.from;
  if (a.to != b.to) return a.to < b.to;
  return colour_less(a.colour, b.colour);
}

std::string edge_str(const ColouredEdge& e) {
  return "(" + std::to_string(e.from) + " -> " + std::to_string(e.to) + ", " +
         describe(e.colour) + ")";
}

}  // namespace

ColouredGraph::ColouredGraph(int vertex_count, std::vector<ColouredEdge> edges)
    : vertex_count_(vertex_count), edges_(std::move(edges)) {
  if (vertex_count_ < 0) throw Error("vertex count must be non-negative");
  for (const ColouredEdge& e : edges_) {
    if (e.from < 1 || e.from > vertex_count_ || e.to < 1 ||
        e.to > vertex_count_) {
      throw Error("edge " + edge_str(e) + " has an endpoint outside 1.." +
                  std::to_string(vertex_count_));
    }
  }
  std::sort(edges_.begin(), edges_.end(), edge_less);
  for (std::size_t i = 1; i < edges_.size(); ++i) {
    if (edges_[i] == edges_[i - 1]) {
      throw Error("duplicate edge " + edge_str(edges_[i]));
    }
  }

  colours_.reserve(edges_.size());
  for (const ColouredEdge& e : edges_) colours_.push_back(e.colour);
  std::sort(colours_.begin(), colours_.end(), colour_less);
  colours_.erase(std::unique(colours_.begin(), colours_.end()),
                 colours_.end());
  edge_colour_ids_.reserve(edges_.size());
  for (const ColouredEdge& e : edges_) {
    edge_colour_ids_.push_back(colour_id(e.colour));
  }

  out_.assign(static_cast<std::size_t>(vertex_count_ + 1), {});
  in_.assign(static_cast<std::size_t>(vertex_count_ + 1), {});
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    const ColouredEdge& e = edges_[i];
    out_[static_cast<std::size_t>(e.from)].push_back(static_cast<int>(i));
    if (e.to != e.from) {
      in_[static_cast<std::size_t>(e.to)].push_back(static_cast<int>(i));
    }
  }
  // Colour alone, not endpoints: list order must survive vertex renamings.
  // Stable so that equal colours (non-rigid graphs) keep a fixed order.
  auto by_colour = [this](int a, int b) {
    return edge_colour_ids_[static_cast<std::size_t>(a)] <
           edge_colour_ids_[static_cast<std::size_t>(b)];
  };
  for (auto& list : out_) std::stable_sort(list.begin(), list.end(), by_colour);
  for (auto& list : in_) std::stable_sort(list.begin(), list.end(), by_colour);
}

const std::vector<int>& ColouredGraph::out_edges(int v) const {
  if (v < 1 || v > vertex_count_) {
    throw Error("vertex " + std::to_string(v) + " is outside 1.." +
                std::to_string(vertex_count_));
  }
  return out_[static_cast<std::size_t>(v)];
}

const std::vector<int>& ColouredGraph::in_edges(int v) const {
  if (v < 1 || v > vertex_count_) {
    throw Error("vertex " + std::to_string(v) + " is outside 1.." +
                std::to_string(vertex_count_));
  }
  return in_[static_cast<std::size_t>(v)];
}

int ColouredGraph::colour_id(const Colour& c) const {
  auto it = std::lower_bound(colours_.begin(), colours_.end(), c, colour_less);
  if (it == colours_.end() || !(*it == c)) return -1;
  return static_cast<int>(it - colours_.begin());
}

std::vector<Violation> check_rigidity(const ColouredGraph& g) {
  std::vector<Violation> out;
  // A self-loop is both an out-edge and an in-edge of its vertex, so its
  // colour participates in both injectivity checks.
  const auto report = [&out, &g](int v, const char* side,
                                 const std::vector<int>& edge_ids) {
    for (std::size_t i = 1; i < edge_ids.size(); ++i) {
      const Colour& prev =
          g.edges()[static_cast<std::size_t>(edge_ids[i - 1])].colour;
      const Colour& cur =
          g.edges()[static_cast<std::size_t>(edge_ids[i])].colour;
      if (prev == cur) {
        out.push_back({"vertex " + std::to_string(v) + " has two " + side +
                       "-edges coloured " + describe(cur)});
      }
    }
  };
  for (int v = 1; v <= g.vertex_count(); ++v) {
    report(v, "out", g.out_edges(v));
    std::vector<int> in = g.in_edges(v);
    for (int id : g.out_edges(v)) {
      if (g.edges()[static_cast<std::size_t>(id)].to == v) in.push_back(id);
    }
    std::sort(in.begin(), in.end(), [&g](int a, int b) {
      return colour_less(g.edges()[static_cast<std::size_t>(a)].colour,
                         g.edges()[static_cast<std::size_t>(b)].colour);
    });
    report(v, "in", in);
  }
  return out;
}

bool is_rigid(const ColouredGraph& g) {
  const std::vector<int>& ids = g.edge_colour_ids();
  const auto id_of = [&ids](int e) {
    return ids[static_cast<std::size_t>(e)];
  };
  for (int v = 1; v <= g.vertex_count(); ++v) {
    // Adjacency lists are colour-sorted, so duplicates sit side by side.
    const std::vector<int>& out = g.out_edges(v);
    for (std::size_t i = 1; i < out.size(); ++i) {
      if (id_of(out[i - 1]) == id_of(out[i])) return false;
    }
    const std::vector<int>& in = g.in_edges(v);
    for (std::size_t i = 1; i < in.size(); ++i) {
      if (id_of(in[i - 1]) == id_of(in[i])) return false;
    }
    // Self-loops live only in the out list but colour the in side as well.
    // Two same-coloured loops were already caught by the out scan above.
    for (int e : out) {
      if (g.edges()[static_cast<std::size_t>(e)].to != v) continue;
      const auto hit = std::lower_bound(
          in.begin(), in.end(), id_of(e),
          [&id_of](int lhs, int id) { return id_of(lhs) < id; });
      if (hit != in.end() && id_of(*hit) == id_of(e)) return false;
    }
  }
  return true;
}

bool is_connected(const ColouredGraph& g) {
  const int n = g.vertex_count();
  if (n == 0) return false;
  std::vector<int> root(static_cast<std::size_t>(n + 1));
  for (int v = 0; v <= n; ++v) root[static_cast<std::size_t>(v)] = v;
  const auto find = [&root](int v) {
    while (root[static_cast<std::size_t>(v)] != v) {
      v = root[static_cast<std::size_t>(v)] =
          root[static_cast<std::size_t>(root[static_cast<std::size_t>(v)])];
    }
    return v;
  };
  for (const ColouredEdge& e : g.edges()) {
    if (e.from != e.to) {
      const int a = find(e.from);
      const int b = find(e.to);
      if (a != b) root[static_cast<std::size_t>(std::max(a, b))] =
          std::min(a, b);
    }
  }
  for (int v = 2; v <= n; ++v) {
    if (find(v) != find(1)) return false;
  }
  return true;
}

ColouredGraph apply_renaming(const ColouredGraph& g, const Permutation& alpha) {
  if (alpha.size() != g.vertex_count()) {
    throw Error("permutation size " + std::to_string(alpha.size()) +
                " does not match vertex count " +
                std::to_string(g.vertex_count()));
  }
  std::vector<ColouredEdge> edges;
  edges.reserve(g.edges().size());
  for (const ColouredEdge& e : g.edges()) {
    edges.push_back({alpha(e.from), alpha(e.to), e.colour});
  }
  return ColouredGraph(g.vertex_count(), std::move(edges));
}

bool is_isomorphism(const ColouredGraph& g, const ColouredGraph& h,
                    const Permutation& alpha) {
  if (alpha.size() != g.vertex_count()) {
    throw Error("permutation size " + std::to_string(alpha.size()) +
                " does not match vertex count " +
                std::to_string(g.vertex_count()));
  }
  return apply_renaming(g, alpha) == h;
}

}  // namespace sgcanon
