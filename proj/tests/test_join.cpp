#include "doctest.h"
#include "graft/generate.hpp"
#include "graft/join.hpp"
#include "graft/oracle.hpp"

using namespace graft;

namespace {

Graft k2() { return build_graft({"u", "v"}, {{"u", "v"}}, {"u", "v"}); }

Graft path5() {
  return build_graft({"v1", "u1", "a", "u2", "v2"},
                     {{"v1", "u1"}, {"u1", "a"}, {"a", "u2"}, {"u2", "v2"}},
                     {"v1", "v2"});
}

Graft path5_pendant() {
  return build_graft(
      {"v1", "u1", "a", "u2", "v2", "z"},
      {{"v1", "u1"}, {"u1", "a"}, {"a", "u2"}, {"u2", "v2"}, {"a", "z"}},
      {"v1", "v2"});
}

Graft four_cycle_all() {
  return build_graft({"a1", "b1", "a2", "b2"},
                     {{"a1", "b1"}, {"b1", "a2"}, {"a2", "b2"}, {"b2", "a1"}},
                     {"a1", "b1", "a2", "b2"});
}

}  // namespace

TEST_CASE("join membership test") {
  const Graft g = k2();
  CHECK(is_join(g, EdgeIds{0}));
  CHECK_FALSE(is_join(g, {}));

  const Graft p = path5();
  CHECK(is_join(p, p.graph().all_edge_ids()));  // odd exactly at v1, v2
  CHECK_FALSE(is_join(p, EdgeIds{0}));
  CHECK_THROWS_AS(is_join(p, EdgeIds{77}), GraftError);
}

TEST_CASE("exhaustive minimum joins are exact and lexicographically least") {
  CHECK(min_join_bruteforce(k2()).edges == EdgeIds{0});

  const Graft empty_t = build_graft({"x", "y"}, {{"x", "y"}}, {});
  CHECK(min_join_bruteforce(empty_t).edges.empty());

  // four-cycle with every vertex terminal: two opposite pairs tie; ids win
  const Graft c4 = four_cycle_all();
  const Join j = min_join_bruteforce(c4);
  CHECK(j.size() == 2);
  CHECK(j.edges == EdgeIds{0, 3});

  const auto all = oracle::all_min_joins(c4.graph(), c4.terminals(), 20);
  CHECK(all == std::vector<EdgeIds>{{0, 3}, {1, 2}});
}

TEST_CASE("size guard on the exhaustive solver") {
  RandomGraftParams params;
  params.vertex_count = 8;
  params.edge_count = 22;
  params.terminal_density = 0.5;
  params.seed = 5;
  const Graft g = document_to_graft(gen_random_graft(params));
  CHECK_THROWS_AS(min_join_bruteforce(g, 20), GraftError);
  CHECK_NOTHROW(min_join_bruteforce(g, 25));
}

TEST_CASE("matching solver matches the oracle on the spec fixtures") {
  CHECK(min_join(path5()).size() == 4);
  CHECK(min_join(k2()).edges == EdgeIds{0});

  const Graft two_k2 = build_graft({"p", "q", "r", "s"}, {{"p", "q"}, {"r", "s"}},
                                   {"p", "q", "r", "s"});
  const Join j = min_join(two_k2);
  CHECK(j.size() == 2);
  CHECK(is_join(two_k2, j.edges));
}

TEST_CASE("solver and oracle agree on random grafts") {
  for (std::uint64_t t = 0; t < 150; ++t) {
    RandomGraftParams params;
    params.vertex_count = 1 + static_cast<int>(mix_seed(11, t) % 8);
    const int n = params.vertex_count;
    const int hi = std::min(14, n * (n - 1) / 2);
    params.edge_count = n == 1 ? 0
                               : (n - 1) + static_cast<int>(mix_seed(12, t) %
                                                            (hi - (n - 1) + 1));
    params.terminal_density = 0.25 * (1 + mix_seed(13, t) % 3);
    params.seed = mix_seed(14, t);
    const Graft g = document_to_graft(gen_random_graft(params));
    const Join solved = min_join(g);
    CHECK(is_join(g, solved.edges));
    CHECK(solved.size() == min_join_bruteforce(g).size());
  }
}

TEST_CASE("solver handles terminal counts past the exhaustive matching limit") {
  // long even cycle, every vertex a terminal: 16 terminals exercises pruning
  std::vector<Label> vs;
  std::vector<std::pair<Label, Label>> es;
  const int n = 16;
  for (int i = 0; i < n; ++i)
    vs.push_back("w" + std::to_string(i / 10) + std::to_string(i % 10));
  for (int i = 0; i < n; ++i) es.emplace_back(vs[i], vs[(i + 1) % n]);
  const Graft g = build_graft(vs, es, vs);
  const Join j = min_join(g);
  CHECK(is_join(g, j.edges));
  CHECK(j.size() == 8);  // alternate edges
}

TEST_CASE("allowed edges") {
  CHECK(allowed_edges(k2()) == EdgeIds{0});
  CHECK(allowed_edges(four_cycle_all()) == four_cycle_all().graph().all_edge_ids());

  const Graft p = path5_pendant();
  const EdgeIds allowed = allowed_edges(p);
  EdgeId pendant_id = -1;
  for (const Edge& e : p.graph().edges())
    if (e.touches(p.graph().index_of("z"))) pendant_id = e.id;
  REQUIRE(pendant_id >= 0);
  CHECK_FALSE(setops::contains(allowed, pendant_id));
  CHECK(allowed.size() == 4);
  for (const Edge& e : p.graph().edges())
    CHECK(is_allowed_edge(p, e.id) == setops::contains(allowed, e.id));
}

TEST_CASE("allowed edges are exactly the union of all minimum joins") {
  for (std::uint64_t t = 0; t < 60; ++t) {
    RandomGraftParams params;
    params.vertex_count = 2 + static_cast<int>(mix_seed(21, t) % 6);
    const int n = params.vertex_count;
    const int hi = std::min(12, n * (n - 1) / 2);
    params.edge_count =
        (n - 1) + static_cast<int>(mix_seed(22, t) % (hi - (n - 1) + 1));
    params.terminal_density = 0.5;
    params.seed = mix_seed(23, t);
    const Graft g = document_to_graft(gen_random_graft(params));
    EdgeIds expected;
    for (const EdgeIds& j : oracle::all_min_joins(g.graph(), g.terminals(), 20))
      expected = setops::set_union(expected, j);
    CHECK(allowed_edges(g) == expected);
  }
}

TEST_CASE("factor components and trivial vertices") {
  const FactorComponents one = factor_components(k2());
  REQUIRE(one.components.size() == 1);
  CHECK(one.trivial.empty());

  const Graft lone = build_graft({"z"}, {}, {});
  const FactorComponents alone = factor_components(lone);
  REQUIRE(alone.components.size() == 1);
  CHECK(alone.trivial == VertexSet{0});

  const Graft p = path5_pendant();
  const FactorComponents fc = factor_components(p);
  REQUIRE(fc.components.size() == 2);
  CHECK(fc.trivial == VertexSet{p.graph().index_of("z")});
  VertexSet big = fc.components[0].size() > 1 ? fc.components[0] : fc.components[1];
  CHECK(big.size() == 5);
}

TEST_CASE("trivial vertices avoid terminals and every minimum join") {
  for (std::uint64_t t = 0; t < 50; ++t) {
    RandomGraftParams params;
    params.vertex_count = 2 + static_cast<int>(mix_seed(31, t) % 6);
    const int n = params.vertex_count;
    const int hi = std::min(10, n * (n - 1) / 2);
    params.edge_count =
        (n - 1) + static_cast<int>(mix_seed(32, t) % (hi - (n - 1) + 1));
    params.terminal_density = 0.4;
    params.seed = mix_seed(33, t);
    const Graft g = document_to_graft(gen_random_graft(params));
    const FactorComponents fc = factor_components(g);
    for (VertexIx v : fc.trivial) {
      CHECK_FALSE(g.is_terminal(v));
      for (const EdgeIds& j : oracle::all_min_joins(g.graph(), g.terminals(), 20))
        for (EdgeId id : j) CHECK_FALSE(g.graph().edge(id).touches(v));
    }
  }
}

TEST_CASE("minimum join validation") {
  const Graft p = path5();
  CHECK_NOTHROW(require_minimum_join(p, min_join(p).edges));
  CHECK_THROWS_AS(require_minimum_join(p, EdgeIds{0}), GraftError);
}
