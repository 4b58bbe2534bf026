#include <algorithm>
#include <random>
#include <string>
#include <vector>

#include "doctest.h"

#include "sgcanon/colgraph.hpp"
#include "sgcanon/colour.hpp"
#include "sgcanon/digest.hpp"
#include "sgcanon/encode.hpp"
#include "sgcanon/generators.hpp"
#include "sgcanon/serialise.hpp"

using namespace sgcanon;

namespace {

Colour pairs(std::vector<std::pair<const char*, const char*>> ps) {
  std::vector<SitePair> out;
  for (const auto& [a, b] : ps) out.emplace_back(SiteName(a), SiteName(b));
  return Colour::site_pairs(std::move(out));
}

Colour named(const char* n) { return Colour::protein(ProteinName(n)); }

Permutation random_permutation(int n, std::mt19937_64& rng) {
  std::vector<int> images(static_cast<std::size_t>(n));
  for (int v = 1; v <= n; ++v) images[static_cast<std::size_t>(v - 1)] = v;
  std::shuffle(images.begin(), images.end(), rng);
  return Permutation(std::move(images));
}

}  // namespace

TEST_CASE("colours order protein-first, then pair sets") {
  const Colour blue = named("blue");
  const Colour red = named("red");
  const Colour ab = pairs({{"a", "b"}});
  const Colour cc = pairs({{"c", "c"}});

  CHECK(colour_less(blue, red));          // by protein name
  CHECK(colour_less(red, ab));            // protein colours before pure pairs
  CHECK(colour_less(ab, cc));             // pairs lexicographically
  CHECK(colour_compare(ab, ab) == std::strong_ordering::equal);

  // Same protein, pairs break the tie; missing pairs sort first.
  const Colour blue_x = Colour::self_loop(ProteinName("blue"),
                                          {{SiteName("x"), SiteName("y")}});
  CHECK(colour_less(blue, blue_x));
  CHECK(colour_less(blue_x, red));

  // Pair lists compare byte-wise on names: (a,b) < (alpha,a) < (b,a).
  CHECK(colour_less(pairs({{"a", "b"}}), pairs({{"alpha", "a"}})));
  CHECK(colour_less(pairs({{"alpha", "a"}}), pairs({{"b", "a"}})));
  // A strict prefix of a longer pair list sorts first.
  CHECK(colour_less(pairs({{"a", "b"}}), pairs({{"a", "b"}, {"c", "c"}})));
}

TEST_CASE("colour construction normalises and validates") {
  CHECK_THROWS_AS(Colour::site_pairs({}), Error);  // must carry something

  const Colour c = pairs({{"b", "a"}, {"a", "b"}, {"b", "a"}});
  REQUIRE(c.pairs().size() == 2);  // sorted, duplicate-free
  CHECK(c.pairs()[0] == SitePair(SiteName("a"), SiteName("b")));
  CHECK(c.pairs()[1] == SitePair(SiteName("b"), SiteName("a")));

  CHECK_FALSE(c.has_protein());
  CHECK_THROWS_AS(c.protein_name(), Error);
  CHECK(named("A").has_protein());
  CHECK(named("A").pairs().empty());

  const Colour loop = Colour::self_loop(ProteinName("A"), {});
  CHECK(loop == named("A"));

  CHECK(describe(named("B")) == "B");
  CHECK(describe(pairs({{"c", "c"}})) == "{(c,c)}");
  CHECK(describe(Colour::self_loop(ProteinName("B"),
                                   {{SiteName("a"), SiteName("b")}})) ==
        "B{(a,b)}");
}

TEST_CASE("coloured graphs sort edges and reject bad input") {
  ColouredGraph g(3, {{2, 3, named("x")}, {1, 2, named("x")},
                      {1, 2, named("w")}});
  REQUIRE(g.edges().size() == 3);
  CHECK(g.edges()[0].from == 1);
  CHECK(g.edges()[0].colour == named("w"));  // (1,2,w) before (1,2,x)
  CHECK(g.edges()[1].colour == named("x"));
  CHECK(g.edges()[2].from == 2);

  CHECK_THROWS_AS(ColouredGraph(2, {{1, 3, named("x")}}), Error);
  CHECK_THROWS_AS(ColouredGraph(2, {{0, 1, named("x")}}), Error);
  CHECK_THROWS_AS(
      ColouredGraph(2, {{1, 2, named("x")}, {1, 2, named("x")}}), Error);
  CHECK_NOTHROW(ColouredGraph(0, {}));
}

TEST_CASE("adjacency lists are colour-sorted; self-loops live out only") {
  const ColouredGraph g(2, {{1, 1, named("p")}, {1, 2, pairs({{"a", "a"}})},
                            {1, 2, named("q")}, {2, 1, pairs({{"b", "b"}})}});
  const auto& out1 = g.out_edges(1);
  REQUIRE(out1.size() == 3);
  // Protein colours precede pair colours: p, q, then {(a,a)}.
  CHECK(g.edges()[static_cast<std::size_t>(out1[0])].colour == named("p"));
  CHECK(g.edges()[static_cast<std::size_t>(out1[1])].colour == named("q"));
  CHECK(g.edges()[static_cast<std::size_t>(out1[2])].colour ==
        pairs({{"a", "a"}}));
  // The self-loop does not repeat in 1's in-list.
  REQUIRE(g.in_edges(1).size() == 1);
  CHECK(g.edges()[static_cast<std::size_t>(g.in_edges(1)[0])].from == 2);
  CHECK(g.in_edges(2).size() == 2);
  CHECK_THROWS_AS(g.out_edges(0), Error);
  CHECK_THROWS_AS(g.in_edges(3), Error);
}

TEST_CASE("colour ids index the sorted interned palette") {
  const ColouredGraph g(2, {{1, 2, pairs({{"a", "a"}})}, {2, 1, named("B")},
                            {1, 1, named("A")}});
  REQUIRE(g.colours().size() == 3);
  CHECK(g.colour_id(named("A")) == 0);
  CHECK(g.colour_id(named("B")) == 1);
  CHECK(g.colour_id(pairs({{"a", "a"}})) == 2);
  CHECK(g.colour_id(named("missing")) == -1);
}

TEST_CASE("rigidity: no repeated colour among a vertex's out or in edges") {
  CHECK(is_rigid(make_fig4a()));
  CHECK(is_rigid(make_cycle(5)));

  // Two out-edges of one colour.
  CHECK_FALSE(is_rigid(
      ColouredGraph(3, {{1, 2, named("x")}, {1, 3, named("x")}})));
  // Two in-edges of one colour.
  CHECK_FALSE(is_rigid(
      ColouredGraph(3, {{1, 3, named("x")}, {2, 3, named("x")}})));
  // Same colour out of 1 and into 1 is fine.
  CHECK(is_rigid(ColouredGraph(3, {{1, 2, named("x")}, {3, 1, named("x")}})));

  // A self-loop occupies its colour in both directions.
  CHECK_FALSE(is_rigid(
      ColouredGraph(2, {{1, 1, named("x")}, {1, 2, named("x")}})));
  CHECK_FALSE(is_rigid(
      ColouredGraph(2, {{1, 1, named("x")}, {2, 1, named("x")}})));
  CHECK(check_rigidity(
            ColouredGraph(2, {{1, 1, named("x")}, {1, 2, named("x")},
                              {2, 1, named("x")}}))
            .size() == 2);
}

TEST_CASE("connectivity ignores edge direction; empty graph is disconnected") {
  CHECK_FALSE(is_connected(ColouredGraph(0, {})));
  CHECK(is_connected(ColouredGraph(1, {})));
  CHECK_FALSE(is_connected(ColouredGraph(2, {})));
  CHECK(is_connected(ColouredGraph(2, {{2, 1, named("x")}})));
  CHECK_FALSE(is_connected(
      ColouredGraph(4, {{1, 2, named("x")}, {3, 4, named("x")}})));
  CHECK(is_connected(make_fig4b()));
}

TEST_CASE("renaming moves endpoints and keeps colours") {
  const ColouredGraph g = make_fig4a();

  // (1 4)(2 3) is the graph's automorphism: renaming along it changes
  // nothing.
  CHECK(apply_renaming(g, Permutation({4, 3, 2, 1})) == g);

  const Permutation alpha({2, 1, 3, 4});  // not an automorphism
  const ColouredGraph h = apply_renaming(g, alpha);
  CHECK(h != g);
  CHECK(is_isomorphism(g, h, alpha));
  CHECK_FALSE(is_isomorphism(g, h, Permutation::identity(4)));
  CHECK(apply_renaming(h, alpha.inverse()) == g);
  CHECK_THROWS_AS(apply_renaming(g, Permutation::identity(3)), Error);
}

TEST_CASE("worked example encodes to the expected six edges") {
  const ColouredGraph g = encode(make_fig1());
  const ColouredGraph expected(
      3, {{1, 1, named("blue")},
          {1, 2, pairs({{"c", "c"}})},
          {2, 1, pairs({{"c", "c"}})},
          {2, 2, named("red")},
          {2, 3, pairs({{"a", "b"}, {"beta", "alpha"}})},
          {3, 3, named("blue")}});
  CHECK(g == expected);
  CHECK(is_rigid(g));
  CHECK(is_connected(g));
  CHECK(decode(g) == make_fig1());
}

TEST_CASE("encoding direction follows the minimum site pair") {
  const std::vector<ProteinName> names = {ProteinName("A"), ProteinName("A")};

  // Pairs (x,y) from 1 and (y,x) from 2; minimum (x,y) belongs to 1 -> 2.
  const SiteGraph s(2, names, {Bond({1, SiteName("x")}, {2, SiteName("y")})});
  const ColouredGraph g = encode(s);
  REQUIRE(g.edges().size() == 3);
  CHECK(g.edges()[1] == ColouredEdge{1, 2, pairs({{"x", "y"}})});

  // A symmetric minimum pair produces both directions.
  const SiteGraph sym(2, names, {Bond({1, SiteName("x")}, {2, SiteName("x")}),
                                 Bond({1, SiteName("y")}, {2, SiteName("z")})});
  const ColouredGraph h = encode(sym);
  REQUIRE(h.edges().size() == 4);
  CHECK(h.edges()[1] == ColouredEdge{1, 2, pairs({{"x", "x"}, {"y", "z"}})});
  CHECK(h.edges()[2] == ColouredEdge{2, 1, pairs({{"x", "x"}, {"z", "y"}})});
}

TEST_CASE("same-vertex bonds close symmetrically into the self-loop") {
  const SiteGraph s(1, {ProteinName("A")},
                    {Bond({1, SiteName("u")}, {1, SiteName("v")})});
  const ColouredGraph g = encode(s);
  REQUIRE(g.edges().size() == 1);
  CHECK(g.edges()[0].colour ==
        Colour::self_loop(ProteinName("A"), {{SiteName("u"), SiteName("v")},
                                             {SiteName("v"), SiteName("u")}}));
  CHECK(decode(g) == s);
}

TEST_CASE("encode rejects ill-formed site graphs") {
  const std::vector<ProteinName> names = {ProteinName("A"), ProteinName("B")};
  const SiteGraph bad(2, names, {Bond({1, SiteName("x")}, {2, SiteName("a")}),
                                 Bond({1, SiteName("x")}, {2, SiteName("b")})});
  CHECK_THROWS_AS(encode(bad), Error);
}

TEST_CASE("decode rejects graphs that are not encodings") {
  // No self-loop on vertex 2.
  CHECK_THROWS_AS(decode(ColouredGraph(2, {{1, 1, named("A")},
                                           {1, 2, pairs({{"x", "y"}})}})),
                  Error);
  // Self-loop coloured with pairs only.
  CHECK_THROWS_AS(decode(ColouredGraph(1, {{1, 1, pairs({{"x", "y"}})}})),
                  Error);
  // Inter-vertex edge carrying a protein name.
  CHECK_THROWS_AS(decode(ColouredGraph(2, {{1, 1, named("A")},
                                           {2, 2, named("A")},
                                           {1, 2, named("A")}})),
                  Error);
  // Edge direction contradicts the minimum-pair rule: (x,y) < (y,x) so the
  // edge must leave the vertex owning pair (x,y), not carry (y,x).
  CHECK_THROWS_AS(decode(ColouredGraph(2, {{1, 1, named("A")},
                                           {2, 2, named("A")},
                                           {2, 1, pairs({{"y", "x"}})}})),
                  Error);
  // Symmetric minimum pair present in one direction only.
  CHECK_THROWS_AS(decode(ColouredGraph(2, {{1, 1, named("A")},
                                           {2, 2, named("A")},
                                           {1, 2, pairs({{"x", "x"}})}})),
                  Error);
}

TEST_CASE("random site graphs: encode is rigid, invertible and natural") {
  std::mt19937_64 rng(99);
  for (int iter = 0; iter < 80; ++iter) {
    const int n = 1 + static_cast<int>(rng() % 8);
    const SiteGraph s = make_random_site_graph(n, 2, 4, rng());
    const ColouredGraph g = encode(s);

    REQUIRE(is_rigid(g));
    REQUIRE(is_connected(g));
    CHECK(decode(g) == s);

    // Every vertex appears with a protein self-loop, so the edge count sits
    // between n and n + 2 * bonds.
    CHECK(g.edges().size() >= static_cast<std::size_t>(n));
    CHECK(g.edges().size() <=
          static_cast<std::size_t>(n) + 2 * s.bonds().size());

    // Renaming commutes with encoding.
    const Permutation iota = random_permutation(n, rng);
    CHECK(encode(apply_site_permutation(s, iota)) == apply_renaming(g, iota));
  }
}

TEST_CASE("json round-trips preserve both document kinds") {
  const SiteGraph s = make_fig1();
  CHECK(site_graph_from_json(site_graph_to_json(s)) == s);

  const ColouredGraph g = encode(s);
  CHECK(coloured_graph_from_json(coloured_graph_to_json(g)) == g);

  const json doc = site_graph_to_json(s);
  CHECK(doc["agents"].size() == 3);
  CHECK(doc["agents"][0]["id"] == 1);
  CHECK(doc["agents"][0]["name"] == "blue");
  CHECK(doc["bonds"].size() == 3);
  CHECK(doc["bonds"][0] == json::array({{1, "c"}, {2, "c"}}));

  std::mt19937_64 rng(512);
  for (int iter = 0; iter < 40; ++iter) {
    const int n = 1 + static_cast<int>(rng() % 8);
    const SiteGraph r = make_random_site_graph(n, 3, 3, rng());
    CHECK(site_graph_from_json(site_graph_to_json(r)) == r);
    const ColouredGraph e = encode(r);
    CHECK(coloured_graph_from_json(coloured_graph_to_json(e)) == e);
  }
}

TEST_CASE("json parsing reports malformed documents") {
  CHECK_THROWS_AS(site_graph_from_json(json::parse(R"({"agents": []})")),
                  Error);
  CHECK_THROWS_AS(
      site_graph_from_json(json::parse(
          R"({"agents": [{"id": 2, "name": "A"}], "bonds": []})")),
      Error);
  CHECK_THROWS_AS(
      coloured_graph_from_json(json::parse(R"({"n": "three", "edges": []})")),
      Error);
  CHECK_THROWS_AS(coloured_graph_from_json(json::parse(
                      R"({"n": 1, "edges": [{"from": 1, "to": 1,
                          "colour": {"kind": "sparkle"}}]})")),
                  Error);
  CHECK_THROWS_AS(coloured_graph_from_json(json::parse(
                      R"({"n": 1, "edges": [{"from": 1, "to": 1,
                          "colour": {"kind": "pairs", "pairs": []}}]})")),
                  Error);
}

TEST_CASE("canonical bytes are deterministic and digests match vectors") {
  const ColouredGraph g = encode(make_fig1());
  CHECK(coloured_graph_bytes(g) == coloured_graph_bytes(g));
  CHECK(coloured_graph_bytes(g).find(' ') == std::string::npos);
  CHECK(coloured_graph_bytes(g) == coloured_graph_to_json(g).dump());
  CHECK(coloured_graph_bytes(g) ==
        coloured_graph_bytes(coloured_graph_from_json(
            json::parse(coloured_graph_bytes(g)))));

  // Names that need JSON escaping still serialise as the generic dump.
  const SiteGraph odd(1, {ProteinName("A\"B\\C")}, {});
  const ColouredGraph og = encode(odd);
  CHECK(coloured_graph_bytes(og) == coloured_graph_to_json(og).dump());
  CHECK(coloured_graph_from_json(json::parse(coloured_graph_bytes(og)))
            .vertex_count() == og.vertex_count());

  // Published SHA-256 test vectors.
  CHECK(to_hex(sha256("")) ==
        "e3b0c44298fc1c149afbf4c8996fb92427ae41e4649b934ca495991b7852b855");
  CHECK(to_hex(sha256("abc")) ==
        "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
}
