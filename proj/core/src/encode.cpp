#include "sgcanon/encode.hpp"

#include <algorithm>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "sgcanon/error.hpp"

namespace sgcanon {

namespace {

std::string join_messages(const std::vector<Violation>& violations) {
  std::string out;
  for (const Violation& v : violations) {
    if (!out.empty()) out += "; ";
    out += v.message;
  }
  return out;
}

}  // namespace

ColouredGraph encode(const SiteGraph& s) {
  if (auto violations = validate(s); !violations.empty()) {
    throw Error("cannot encode ill-formed site graph: " +
                join_messages(violations));
  }

  // Self-loop pair sets: the symmetric closure of same-vertex bond pairs.
  std::vector<std::vector<SitePair>> loop_pairs(
      static_cast<std::size_t>(s.vertex_count() + 1));
  // Inter-vertex pair sets per ordered vertex pair.
  std::map<std::pair<int, int>, std::vector<SitePair>> directed;
  for (const Bond& b : s.bonds()) {
    if (b.a.vertex == b.b.vertex) {
      auto& pairs = loop_pairs[static_cast<std::size_t>(b.a.vertex)];
      pairs.emplace_back(b.a.site, b.b.site);
      pairs.emplace_back(b.b.site, b.a.site);
    } else {
      directed[{b.a.vertex, b.b.vertex}].emplace_back(b.a.site, b.b.site);
      directed[{b.b.vertex, b.a.vertex}].emplace_back(b.b.site, b.a.site);
    }
  }

  std::vector<ColouredEdge> edges;
  for (int v = 1; v <= s.vertex_count(); ++v) {
    edges.push_back({v, v,
                     Colour::self_loop(s.protein(v),
                                       loop_pairs[static_cast<std::size_t>(v)])});
  }
  // For each unordered vertex pair, the orientation owning the minimum site
  // pair (over both orientations) carries an edge; a symmetric minimum is
  // owned by both orientations, which then both carry an edge.
  for (const auto& [key, pairs] : directed) {
    const auto [u, v] = key;
    if (u > v) continue;
    const auto& forward = pairs;
    const auto& backward = directed.at({v, u});
    const SitePair min_fwd = *std::min_element(forward.begin(), forward.end());
    const SitePair min_bwd =
        *std::min_element(backward.begin(), backward.end());
    if (min_fwd <= min_bwd) {
      edges.push_back({u, v, Colour::site_pairs(forward)});
    }
    if (min_bwd <= min_fwd) {
      edges.push_back({v, u, Colour::site_pairs(backward)});
    }
  }
  return ColouredGraph(s.vertex_count(), std::move(edges));
}

SiteGraph decode(const ColouredGraph& g) {
  const int n = g.vertex_count();
  std::vector<ProteinName> naming(static_cast<std::size_t>(n));
  std::vector<Bond> bonds;

  std::vector<char> has_loop(static_cast<std::size_t>(n + 1), 0);
  for (const ColouredEdge& e : g.edges()) {
    if (e.from == e.to) {
      const int v = e.from;
      if (has_loop[static_cast<std::size_t>(v)]) {
        throw Error("not an encoding: vertex " + std::to_string(v) +
                    " has more than one self-loop");
      }
      has_loop[static_cast<std::size_t>(v)] = 1;
      if (!e.colour.has_protein()) {
        throw Error("not an encoding: self-loop on vertex " +
                    std::to_string(v) + " carries no protein name");
      }
      naming[static_cast<std::size_t>(v - 1)] = e.colour.protein_name();
      for (const SitePair& p : e.colour.pairs()) {
        if (p.first == p.second) {
          throw Error("not an encoding: self-loop on vertex " +
                      std::to_string(v) + " pairs site " + p.first.value() +
                      " with itself");
        }
        if (p.first < p.second) {
          bonds.emplace_back(SiteEndpoint{v, p.first},
                             SiteEndpoint{v, p.second});
        }
        // The mirrored pair is regenerated by encode; its presence is
        // confirmed by the final re-encode check.
      }
    } else {
      if (e.colour.has_protein()) {
        throw Error("not an encoding: edge " + std::to_string(e.from) +
                    " -> " + std::to_string(e.to) +
                    " between distinct vertices carries protein name " +
                    e.colour.protein_name().value());
      }
      for (const SitePair& p : e.colour.pairs()) {
        bonds.emplace_back(SiteEndpoint{e.from, p.first},
                           SiteEndpoint{e.to, p.second});
      }
    }
  }
  for (int v = 1; v <= n; ++v) {
    if (!has_loop[static_cast<std::size_t>(v)]) {
      throw Error("not an encoding: vertex " + std::to_string(v) +
                  " has no self-loop");
    }
  }

  SiteGraph s(n, std::move(naming), std::move(bonds));
  if (auto violations = validate(s); !violations.empty()) {
    throw Error("not an encoding: reconstructed site graph is ill-formed: " +
                join_messages(violations));
  }

  // Authority check: the reconstruction must encode back to exactly g.  This
  // catches wrong edge directions, missing mirrored pairs and stray edges.
  const ColouredGraph back = encode(s);
  if (!(back == g)) {
    for (const ColouredEdge& e : g.edges()) {
      if (std::find(back.edges().begin(), back.edges().end(), e) ==
          back.edges().end()) {
        throw Error("not an encoding: edge " + std::to_string(e.from) +
                    " -> " + std::to_string(e.to) + " coloured " +
                    describe(e.colour) +
                    " is inconsistent with the encoding of its bonds");
      }
    }
    for (const ColouredEdge& e : back.edges()) {
      if (std::find(g.edges().begin(), g.edges().end(), e) ==
          g.edges().end()) {
        throw Error("not an encoding: the bonds decoded require edge " +
                    std::to_string(e.from) + " -> " + std::to_string(e.to) +
                    " coloured " + describe(e.colour) +
                    ", which is missing");
      }
    }
    throw Error("not an encoding of a site graph");
  }
  return s;
}

}  // namespace sgcanon
