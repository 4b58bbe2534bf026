#include "sgcanon/serialise.hpp"

#include <charconv>
#include <string>
#include <utility>
#include <vector>

#include "sgcanon/error.hpp"

namespace sgcanon {

namespace {

const json& require_key(const json& doc, const char* key,
                        const std::string& where) {
  if (!doc.is_object() || !doc.contains(key)) {
    throw Error(where + " must be an object with a \"" + key + "\" field");
  }
  return doc.at(key);
}

int require_int(const json& value, const std::string& where) {
  if (!value.is_number_integer()) throw Error(where + " must be an integer");
  return value.get<int>();
}

std::string require_string(const json& value, const std::string& where) {
  if (!value.is_string()) throw Error(where + " must be a string");
  return value.get<std::string>();
}

const json& require_array(const json& value, const std::string& where) {
  if (!value.is_array()) throw Error(where + " must be an array");
  return value;
}

SitePair parse_site_pair(const json& value, const std::string& where) {
  const json& arr = require_array(value, where);
  if (arr.size() != 2) throw Error(where + " must have exactly two entries");
  return {SiteName(require_string(arr[0], where + "[0]")),
          SiteName(require_string(arr[1], where + "[1]"))};
}

json pairs_to_json(const std::vector<SitePair>& pairs) {
  json arr = json::array();
  for (const SitePair& p : pairs) {
    arr.push_back(json::array({p.first.value(), p.second.value()}));
  }
  return arr;
}

json colour_to_json(const Colour& c) {
  json out = json::object();
  if (c.has_protein()) {
    out["kind"] = "protein";
    out["name"] = c.protein_name().value();
    if (!c.pairs().empty()) out["pairs"] = pairs_to_json(c.pairs());
  } else {
    out["kind"] = "pairs";
    out["pairs"] = pairs_to_json(c.pairs());
  }
  return out;
}

Colour colour_from_json(const json& value, const std::string& where) {
  const std::string kind =
      require_string(require_key(value, "kind", where), where + ".kind");
  std::vector<SitePair> pairs;
  if (value.contains("pairs")) {
    const json& arr = require_array(value.at("pairs"), where + ".pairs");
    if (arr.empty()) {
      throw Error(where + ".pairs must be non-empty when present");
    }
    for (std::size_t i = 0; i < arr.size(); ++i) {
      pairs.push_back(parse_site_pair(
          arr[i], where + ".pairs[" + std::to_string(i) + "]"));
    }
  }
  if (kind == "protein") {
    ProteinName name(
        require_string(require_key(value, "name", where), where + ".name"));
    if (pairs.empty()) return Colour::protein(std::move(name));
    return Colour::self_loop(std::move(name), std::move(pairs));
  }
  if (kind == "pairs") {
    if (pairs.empty()) {
      throw Error(where + " of kind \"pairs\" needs a \"pairs\" array");
    }
    return Colour::site_pairs(std::move(pairs));
  }
  throw Error(where + ".kind must be \"protein\" or \"pairs\", got \"" + kind +
              "\"");
}

}  // namespace

json site_graph_to_json(const SiteGraph& s) {
  json doc = json::object();
  json agents = json::array();
  for (int v = 1; v <= s.vertex_count(); ++v) {
    agents.push_back({{"id", v}, {"name", s.protein(v).value()}});
  }
  doc["agents"] = std::move(agents);
  json bonds = json::array();
  for (const Bond& b : s.bonds()) {
    bonds.push_back(
        json::array({json::array({b.a.vertex, b.a.site.value()}),
                     json::array({b.b.vertex, b.b.site.value()})}));
  }
  doc["bonds"] = std::move(bonds);
  return doc;
}

SiteGraph site_graph_from_json(const json& doc) {
  const json& agents = require_array(require_key(doc, "agents", "document"),
                                     "\"agents\"");
  const int n = static_cast<int>(agents.size());
  std::vector<ProteinName> naming(static_cast<std::size_t>(n));
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  for (std::size_t i = 0; i < agents.size(); ++i) {
    const std::string where = "agents[" + std::to_string(i) + "]";
    const int id = require_int(require_key(agents[i], "id", where),
                               where + ".id");
    if (id < 1 || id > n) {
      throw Error(where + ".id is " + std::to_string(id) +
                  "; ids must cover 1.." + std::to_string(n));
    }
    if (seen[static_cast<std::size_t>(id - 1)]) {
      throw Error(where + ".id " + std::to_string(id) + " appears twice");
    }
    seen[static_cast<std::size_t>(id - 1)] = 1;
    naming[static_cast<std::size_t>(id - 1)] = ProteinName(
        require_string(require_key(agents[i], "name", where), where + ".name"));
  }

  std::vector<Bond> bonds;
  const json& bond_docs = require_array(require_key(doc, "bonds", "document"),
                                        "\"bonds\"");
  for (std::size_t i = 0; i < bond_docs.size(); ++i) {
    const std::string where = "bonds[" + std::to_string(i) + "]";
    const json& pair = require_array(bond_docs[i], where);
    if (pair.size() != 2) {
      throw Error(where + " must list exactly two endpoints");
    }
    SiteEndpoint ends[2];
    for (int j = 0; j < 2; ++j) {
      const std::string ep_where = where + "[" + std::to_string(j) + "]";
      const json& ep = require_array(pair[static_cast<std::size_t>(j)],
                                     ep_where);
      if (ep.size() != 2) {
        throw Error(ep_where + " must be a [vertex, site] pair");
      }
      ends[j].vertex = require_int(ep[0], ep_where + "[0]");
      ends[j].site = SiteName(require_string(ep[1], ep_where + "[1]"));
    }
    bonds.emplace_back(ends[0], ends[1]);
  }
  return SiteGraph(n, std::move(naming), std::move(bonds));
}

json coloured_graph_to_json(const ColouredGraph& g) {
  json doc = json::object();
  doc["n"] = g.vertex_count();
  json edges = json::array();
  for (const ColouredEdge& e : g.edges()) {
    edges.push_back({{"from", e.from},
                     {"to", e.to},
                     {"colour", colour_to_json(e.colour)}});
  }
  doc["edges"] = std::move(edges);
  return doc;
}

ColouredGraph coloured_graph_from_json(const json& doc) {
  const int n = require_int(require_key(doc, "n", "document"), "\"n\"");
  if (n < 0) throw Error("\"n\" must be non-negative");
  const json& edge_docs = require_array(require_key(doc, "edges", "document"),
                                        "\"edges\"");
  std::vector<ColouredEdge> edges;
  edges.reserve(edge_docs.size());
  for (std::size_t i = 0; i < edge_docs.size(); ++i) {
    const std::string where = "edges[" + std::to_string(i) + "]";
    const int from = require_int(require_key(edge_docs[i], "from", where),
                                 where + ".from");
    const int to =
        require_int(require_key(edge_docs[i], "to", where), where + ".to");
    edges.push_back(
        {from, to,
         colour_from_json(require_key(edge_docs[i], "colour", where),
                          where + ".colour")});
  }
  return ColouredGraph(n, std::move(edges));
}

namespace {

// Digesting serialises every canonical form, so the byte string is built
// directly instead of through a document tree.  The output is byte-identical
// to coloured_graph_to_json(g).dump(); names that would need JSON escaping
// (rare) fall back to that path.
bool plain_json_string(const std::string& s) {
  for (const unsigned char ch : s) {
    if (ch < 0x20 || ch >= 0x7F || ch == '"' || ch == '\\') return false;
  }
  return true;
}

void append_int(std::string& out, int v) {
  char buf[16];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  out.append(buf, res.ptr);
}

bool append_pairs(std::string& out, const std::vector<SitePair>& pairs) {
  out += "[";
  bool first = true;
  for (const SitePair& p : pairs) {
    if (!plain_json_string(p.first.value()) ||
        !plain_json_string(p.second.value())) {
      return false;
    }
    if (!first) out += ",";
    first = false;
    out += "[\"";
    out += p.first.value();
    out += "\",\"";
    out += p.second.value();
    out += "\"]";
  }
  out += "]";
  return true;
}

bool append_colour(std::string& out, const Colour& c) {
  if (c.has_protein()) {
    if (!plain_json_string(c.protein_name().value())) return false;
    out += "{\"kind\":\"protein\",\"name\":\"";
    out += c.protein_name().value();
    out += "\"";
    if (!c.pairs().empty()) {
      out += ",\"pairs\":";
      if (!append_pairs(out, c.pairs())) return false;
    }
    out += "}";
  } else {
    out += "{\"kind\":\"pairs\",\"pairs\":";
    if (!append_pairs(out, c.pairs())) return false;
    out += "}";
  }
  return true;
}

}  // namespace

std::string coloured_graph_bytes(const ColouredGraph& g) {
  std::string out;
  out.reserve(32 + 56 * g.edges().size());
  out += "{\"n\":";
  append_int(out, g.vertex_count());
  out += ",\"edges\":[";
  bool first = true;
  for (const ColouredEdge& e : g.edges()) {
    if (!first) out += ",";
    first = false;
    out += "{\"from\":";
    append_int(out, e.from);
    out += ",\"to\":";
    append_int(out, e.to);
    out += ",\"colour\":";
    if (!append_colour(out, e.colour)) {
      return coloured_graph_to_json(g).dump();
    }
    out += "}";
  }
  out += "]}";
  return out;
}

}  // namespace sgcanon
