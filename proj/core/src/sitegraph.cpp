#include "sgcanon/sitegraph.hpp"

#include <algorithm>
#include <map>
#include <string>
#include <utility>

namespace sgcanon {

namespace {

std::string endpoint_str(const SiteEndpoint& e) {
  return "(" + std::to_string(e.vertex) + ", " + e.site.value() + ")";
}

std::string bond_str(const Bond& b) {
  return "{" + endpoint_str(b.a) + ", " + endpoint_str(b.b) + "}";
}

}  // namespace

Bond::Bond(SiteEndpoint x, SiteEndpoint y) {
  if (y < x) std::swap(x, y);
  a = std::move(x);
  b = std::move(y);
}

SiteGraph::SiteGraph(int vertex_count, std::vector<ProteinName> naming,
                     std::vector<Bond> bonds)
    : vertex_count_(vertex_count),
      naming_(std::move(naming)),
      bonds_(std::move(bonds)) {
  if (vertex_count_ < 0) throw Error("vertex count must be non-negative");
  if (static_cast<int>(naming_.size()) != vertex_count_) {
    throw Error("naming lists " + std::to_string(naming_.size()) +
                " proteins for " + std::to_string(vertex_count_) + " vertices");
  }
  std::sort(bonds_.begin(), bonds_.end());
  bonds_.erase(std::unique(bonds_.begin(), bonds_.end()), bonds_.end());
}

const ProteinName& SiteGraph::protein(int v) const {
  if (v < 1 || v > vertex_count_) {
    throw Error("vertex " + std::to_string(v) + " is outside 1.." +
                std::to_string(vertex_count_));
  }
  return naming_[static_cast<std::size_t>(v - 1)];
}

std::vector<Violation> validate(const SiteGraph& s) {
  std::vector<Violation> out;
  const int n = s.vertex_count();
  // Site-disjointness: each (vertex, site) endpoint belongs to at most one
  // bond.  A symmetric bond uses the same site twice but counts once.
  std::map<SiteEndpoint, const Bond*> owner;
  for (const Bond& b : s.bonds()) {
    bool in_range = true;
    for (const SiteEndpoint* e : {&b.a, &b.b}) {
      if (e->vertex < 1 || e->vertex > n) {
        out.push_back({"bond " + bond_str(b) + " endpoint " +
                       endpoint_str(*e) + " is outside 1.." +
                       std::to_string(n)});
        in_range = false;
      }
    }
    if (!in_range) continue;
    if (b.a == b.b) {
      out.push_back({"bond " + bond_str(b) +
                     " connects a site to itself; endpoints must differ"});
      continue;
    }
    for (const SiteEndpoint* e : {&b.a, &b.b}) {
      auto [it, inserted] = owner.emplace(*e, &b);
      if (!inserted) {
        out.push_back({"site " + endpoint_str(*e) + " is used by bonds " +
                       bond_str(*it->second) + " and " + bond_str(b)});
      }
    }
  }
  return out;
}

bool is_connected(const SiteGraph& s) {
  const int n = s.vertex_count();
  if (n == 0) return false;
  std::vector<std::vector<int>> adj(static_cast<std::size_t>(n + 1));
  for (const Bond& b : s.bonds()) {
    if (b.a.vertex != b.b.vertex) {
      adj[static_cast<std::size_t>(b.a.vertex)].push_back(b.b.vertex);
      adj[static_cast<std::size_t>(b.b.vertex)].push_back(b.a.vertex);
    }
  }
  std::vector<char> seen(static_cast<std::size_t>(n + 1), 0);
  std::vector<int> stack = {1};
  seen[1] = 1;
  int reached = 1;
  while (!stack.empty()) {
    const int v = stack.back();
    stack.pop_back();
    for (int w : adj[static_cast<std::size_t>(v)]) {
      if (!seen[static_cast<std::size_t>(w)]) {
        seen[static_cast<std::size_t>(w)] = 1;
        ++reached;
        stack.push_back(w);
      }
    }
  }
  return reached == n;
}

SiteGraph apply_site_permutation(const SiteGraph& s, const Permutation& iota) {
  if (iota.size() != s.vertex_count()) {
    throw Error("permutation size " + std::to_string(iota.size()) +
                " does not match vertex count " +
                std::to_string(s.vertex_count()));
  }
  std::vector<ProteinName> naming(static_cast<std::size_t>(s.vertex_count()));
  for (int v = 1; v <= s.vertex_count(); ++v) {
    naming[static_cast<std::size_t>(iota(v) - 1)] = s.protein(v);
  }
  std::vector<Bond> bonds;
  bonds.reserve(s.bonds().size());
  for (const Bond& b : s.bonds()) {
    bonds.emplace_back(SiteEndpoint{iota(b.a.vertex), b.a.site},
                       SiteEndpoint{iota(b.b.vertex), b.b.site});
  }
  return SiteGraph(s.vertex_count(), std::move(naming), std::move(bonds));
}

bool is_site_isomorphism(const SiteGraph& s, const SiteGraph& t,
                         const Permutation& iota) {
  if (s.vertex_count() != t.vertex_count()) {
    throw Error("site graphs have different vertex counts " +
                std::to_string(s.vertex_count()) + " and " +
                std::to_string(t.vertex_count()));
  }
  if (iota.size() != s.vertex_count()) {
    throw Error("permutation size " + std::to_string(iota.size()) +
                " does not match vertex count " +
                std::to_string(s.vertex_count()));
  }
  return apply_site_permutation(s, iota) == t;
}

}  // namespace sgcanon
