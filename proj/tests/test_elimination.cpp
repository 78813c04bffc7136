#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <variant>

#include "helpers.hpp"
#include "nbpoly/elimination.hpp"
#include "nbpoly/generators.hpp"

using namespace nbpoly;

TEST_SUITE_BEGIN("elimination");

TEST_CASE("lex_bfs") {
  SUBCASE("any order of a complete graph is perfect") {
    for (int n : {1, 2, 5, 9}) {
      Graph g = gen_basic(BasicFamily::kComplete, n);
      CHECK(is_peo(g, lex_bfs(g)));
    }
  }
  SUBCASE("path endpoints are simplicial") {
    Graph p3 = gen_basic(BasicFamily::kPath, 3);
    EliminationOrder ord = lex_bfs(p3);
    CHECK(is_peo(p3, ord));
    CHECK(ord.order.front() != 1);  // the middle vertex is not simplicial
  }
  SUBCASE("four-cycle candidates always fail") {
    Graph c4 = gen_basic(BasicFamily::kCycle, 4);
    CHECK_FALSE(is_peo(c4, lex_bfs(c4)));
  }
  SUBCASE("seeded tie-breaks still give perfect orders on chordal graphs") {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
      Graph g = gen_random_chordal(60, 4, 900 + seed);
      CHECK(is_peo(g, lex_bfs(g, seed)));
      Graph h = gen_interval_family(3);
      CHECK(is_peo(h, lex_bfs(h, seed)));
    }
  }
}

TEST_CASE("is_peo") {
  Graph p3 = gen_basic(BasicFamily::kPath, 3);
  CHECK(is_peo(p3, EliminationOrder{{0, 2, 1}}));  // endpoints first
  CHECK_FALSE(is_peo(p3, EliminationOrder{{1, 0, 2}}));

  SUBCASE("no order of a four-cycle is perfect") {
    Graph c4 = gen_basic(BasicFamily::kCycle, 4);
    std::vector<int> perm = {0, 1, 2, 3};
    do {
      CHECK_FALSE(is_peo(c4, EliminationOrder{perm}));
    } while (std::next_permutation(perm.begin(), perm.end()));
  }

  SUBCASE("singleton") {
    Graph k1(1);
    CHECK(is_peo(k1, EliminationOrder{{0}}));
  }

  SUBCASE("rejects non-permutations") {
    Graph g(3);
    CHECK_THROWS_AS(is_peo(g, EliminationOrder{{0, 1}}), std::invalid_argument);
    CHECK_THROWS_AS(is_peo(g, EliminationOrder{{0, 1, 1}}), std::invalid_argument);
    CHECK_THROWS_AS(is_peo(g, EliminationOrder{{0, 1, 3}}), std::invalid_argument);
  }

  SUBCASE("parent check agrees with the naive definition") {
    std::mt19937_64 rng(5150);
    for (int trial = 0; trial < 300; ++trial) {
      const int n = uniform_int(rng, 1, 10);
      Graph g = test::random_graph(n, 0.15 * uniform_int(rng, 1, 5), rng());
      std::vector<int> perm(static_cast<std::size_t>(n));
      std::iota(perm.begin(), perm.end(), 0);
      for (int i = n - 1; i > 0; --i)
        std::swap(perm[static_cast<std::size_t>(i)],
                  perm[uniform_below(rng, static_cast<std::uint64_t>(i) + 1)]);
      CHECK(is_peo(g, EliminationOrder{perm}) == test::naive_is_peo(g, perm));
    }
  }
}

TEST_CASE("connected_components") {
  Graph g(5, {{0, 1}, {1, 2}, {3, 4}});  // K3-ish path plus an edge
  auto comps = connected_components(g);
  REQUIRE(comps.size() == 2);
  CHECK(comps[0] == VertexSet{0, 1, 2});
  CHECK(comps[1] == VertexSet{3, 4});

  Graph edgeless(4);
  CHECK(connected_components(edgeless).size() == 4);

  CHECK(connected_components(gen_basic(BasicFamily::kCycle, 6)).size() == 1);
}

TEST_CASE("find_peo") {
  SUBCASE("random chordal graphs have perfect orders") {
    Graph g = gen_random_chordal(50, 5, 31337);
    auto res = find_peo(g);
    REQUIRE(std::holds_alternative<EliminationOrder>(res));
    CHECK(is_peo(g, std::get<EliminationOrder>(res)));
  }
  SUBCASE("five-cycle is rejected with a certificate") {
    Graph c5 = gen_basic(BasicFamily::kCycle, 5);
    auto res = find_peo(c5);
    REQUIRE(std::holds_alternative<NotChordal>(res));
    const NotChordal& bad = std::get<NotChordal>(res);
    CHECK_FALSE(is_peo(c5, bad.candidate));
    CHECK(*first_peo_violation(c5, bad.candidate) == bad.failing_vertex);
  }
  SUBCASE("disconnected graphs get concatenated per-component orders") {
    Graph g(7, {{0, 1}, {1, 2}, {0, 2}, {4, 5}, {5, 6}});
    auto res = find_peo(g);
    REQUIRE(std::holds_alternative<EliminationOrder>(res));
    CHECK(is_peo(g, std::get<EliminationOrder>(res)));
  }
  SUBCASE("matches brute-force chordality on small random graphs") {
    std::mt19937_64 rng(777);
    int chordal_seen = 0, non_chordal_seen = 0;
    for (int trial = 0; trial < 300; ++trial) {
      const int n = uniform_int(rng, 1, 9);
      Graph g = test::random_graph(n, 0.12 * uniform_int(rng, 1, 6), rng());
      const bool expect = test::brute_is_chordal(g);
      (expect ? chordal_seen : non_chordal_seen)++;
      CHECK(std::holds_alternative<EliminationOrder>(find_peo(g)) == expect);
    }
    CHECK(chordal_seen > 50);  // the sample covers both outcomes
    CHECK(non_chordal_seen > 50);
  }
}

TEST_SUITE_END();
