#include <algorithm>
#include <random>
#include <set>
#include <vector>

#include "doctest.h"

#include "sgcanon/encode.hpp"
#include "sgcanon/generators.hpp"
#include "sgcanon/oracle.hpp"

using namespace sgcanon;

namespace {

Colour pair_colour(const char* a, const char* b) {
  return Colour::site_pairs({{SiteName(a), SiteName(b)}});
}

Permutation random_permutation(int n, std::mt19937_64& rng) {
  std::vector<int> images(static_cast<std::size_t>(n));
  for (int v = 1; v <= n; ++v) images[static_cast<std::size_t>(v - 1)] = v;
  std::shuffle(images.begin(), images.end(), rng);
  return Permutation(std::move(images));
}

ColouredGraph random_rigid_graph(int max_n, std::mt19937_64& rng) {
  const int n = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(max_n));
  return encode(make_random_site_graph(n, 2, 4, rng()));
}

}  // namespace

TEST_CASE("brute-force canonical form is a renaming-invariant fixed point") {
  std::mt19937_64 rng(21);
  for (int iter = 0; iter < 25; ++iter) {
    const ColouredGraph g = random_rigid_graph(5, rng);
    const ColouredGraph c = canon_bruteforce(g);
    CHECK(canon_bruteforce(c) == c);
    const Permutation alpha = random_permutation(g.vertex_count(), rng);
    CHECK(canon_bruteforce(apply_renaming(g, alpha)) == c);
  }
  CHECK_THROWS_AS(canon_bruteforce(make_cycle(9)), Error);
  CHECK_NOTHROW(canon_bruteforce(make_cycle(9), 16));
}

TEST_CASE("brute-force isomorphism finds witnesses and certifies absence") {
  std::mt19937_64 rng(22);
  for (int iter = 0; iter < 25; ++iter) {
    const ColouredGraph g = random_rigid_graph(5, rng);
    const Permutation alpha = random_permutation(g.vertex_count(), rng);
    const ColouredGraph h = apply_renaming(g, alpha);

    const auto witness = iso_bruteforce(g, h);
    REQUIRE(witness.has_value());
    CHECK(is_isomorphism(g, h, *witness));
  }

  // Same size, different edge structure.
  CHECK_FALSE(iso_bruteforce(make_cycle(4), make_chain(4)).has_value());
  CHECK_FALSE(iso_bruteforce(make_cycle(4), make_cycle(4, 2)).has_value());

  // A size mismatch answers "no" without touching the factorial limit.
  CHECK_FALSE(iso_bruteforce(make_cycle(2), make_cycle(50)).has_value());
  CHECK_THROWS_AS(iso_bruteforce(make_cycle(9), make_cycle(9)), Error);
}

TEST_CASE("propagating search agrees with brute force") {
  std::mt19937_64 rng(23);
  for (int iter = 0; iter < 40; ++iter) {
    const ColouredGraph g = random_rigid_graph(6, rng);
    ColouredGraph h = random_rigid_graph(6, rng);
    if (rng() & 1) {
      h = apply_renaming(g, random_permutation(g.vertex_count(), rng));
    }
    if (g.vertex_count() != h.vertex_count()) continue;

    const auto fast = iso_pruned(g, h);
    const auto slow = iso_bruteforce(g, h);
    REQUIRE(fast.has_value() == slow.has_value());
    if (fast) CHECK(is_isomorphism(g, h, *fast));
  }
}

TEST_CASE("propagating search requires rigid connected inputs within limit") {
  const ColouredGraph loose(3, {{1, 2, pair_colour("a", "a")},
                                {1, 3, pair_colour("a", "a")}});
  CHECK_THROWS_AS(iso_pruned(loose, loose), Error);
  const ColouredGraph split(4, {{1, 2, pair_colour("a", "a")},
                                {3, 4, pair_colour("b", "b")}});
  CHECK_THROWS_AS(iso_pruned(split, split), Error);
  CHECK_THROWS_AS(automorphisms_pruned(loose), Error);
  CHECK_THROWS_AS(iso_pruned(make_cycle(30), make_cycle(30), 20), Error);
  CHECK_THROWS_AS(orbits_bruteforce(make_cycle(30), 20), Error);
}

TEST_CASE("automorphisms form a group containing the identity") {
  std::mt19937_64 rng(24);
  for (int iter = 0; iter < 30; ++iter) {
    const ColouredGraph g = random_rigid_graph(7, rng);
    const auto autos = automorphisms_pruned(g);
    REQUIRE(!autos.empty());
    CHECK(autos.size() <= static_cast<std::size_t>(g.vertex_count()));

    std::set<std::vector<int>> group;
    for (const Permutation& a : autos) {
      CHECK(is_isomorphism(g, g, a));
      group.insert(a.images());
    }
    CHECK(group.size() == autos.size());
    CHECK(group.contains(Permutation::identity(g.vertex_count()).images()));
    // Closure under composition and inverse.
    for (const Permutation& a : autos) {
      CHECK(group.contains(a.inverse().images()));
      for (const Permutation& b : autos) {
        CHECK(group.contains(compose(a, b).images()));
      }
    }
  }
}

TEST_CASE("orbit partitions match between fast and naive scans") {
  std::mt19937_64 rng(25);
  for (int iter = 0; iter < 30; ++iter) {
    const ColouredGraph g = random_rigid_graph(6, rng);
    const OrbitPartition fast = orbits_bruteforce(g);
    const OrbitPartition slow = orbits_naive(g);
    CHECK(fast.orbits == slow.orbits);
    CHECK(fast.automorphism_count == slow.automorphism_count);
  }
  CHECK_THROWS_AS(orbits_naive(make_cycle(9)), Error);
}

TEST_CASE("rigidity makes the automorphism action free") {
  // No non-trivial automorphism fixes a vertex, so every orbit has exactly
  // |Aut| members.
  std::mt19937_64 rng(26);
  for (int iter = 0; iter < 30; ++iter) {
    const ColouredGraph g = random_rigid_graph(8, rng);
    const OrbitPartition p = orbits_bruteforce(g);
    long long covered = 0;
    for (const auto& orbit : p.orbits) {
      CHECK(static_cast<long long>(orbit.size()) == p.automorphism_count);
      covered += static_cast<long long>(orbit.size());
    }
    CHECK(covered == g.vertex_count());
  }
}

TEST_CASE("known groups: cycles rotate, chains are frozen") {
  const OrbitPartition cyc = orbits_bruteforce(make_cycle(12));
  CHECK(cyc.automorphism_count == 12);
  REQUIRE(cyc.orbits.size() == 1);
  CHECK(cyc.orbits[0].size() == 12);

  const OrbitPartition chain = orbits_bruteforce(make_chain(7));
  CHECK(chain.automorphism_count == 1);
  CHECK(chain.orbits.size() == 7);

  // Alternating two colours keeps only the even rotations.
  const OrbitPartition broken = orbits_bruteforce(make_cycle(12, 2));
  CHECK(broken.automorphism_count == 6);
  CHECK(orbits_bruteforce(make_cycle(12, 12)).automorphism_count == 1);
}

TEST_CASE("the showcase graphs have the expected symmetries") {
  const OrbitPartition a = orbits_bruteforce(make_fig4a());
  CHECK(a.automorphism_count == 2);
  REQUIRE(a.orbits.size() == 2);
  CHECK(a.orbits[0] == std::vector<int>{1, 4});
  CHECK(a.orbits[1] == std::vector<int>{2, 3});

  const OrbitPartition b = orbits_bruteforce(make_fig4b());
  CHECK(b.automorphism_count == 2);
  REQUIRE(b.orbits.size() == 8);
  // The non-trivial automorphism is the vertical reflection of the 4x4
  // layout, swapping the top and bottom rows of blocks.
  const std::vector<std::vector<int>> expected = {
      {1, 11}, {2, 12}, {3, 9}, {4, 10},
      {5, 13}, {6, 14}, {7, 15}, {8, 16}};
  CHECK(b.orbits == expected);

  const auto autos = automorphisms_pruned(make_fig4b());
  REQUIRE(autos.size() == 2);
  const Permutation reflection(
      {11, 12, 9, 10, 13, 14, 15, 16, 3, 4, 1, 2, 5, 6, 7, 8});
  CHECK((autos[0] == reflection || autos[1] == reflection));
}

TEST_CASE("random trees have no symmetry at all") {
  for (std::uint64_t seed : {3ull, 17ull, 99ull}) {
    const ColouredGraph t = make_tree(40, seed);
    const OrbitPartition p = orbits_bruteforce(t);
    CHECK(p.automorphism_count == 1);
    CHECK(p.orbits.size() == 40);
  }
}
