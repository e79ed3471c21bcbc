#include "doctest.h"
#include "graft/distance.hpp"
#include "graft/generate.hpp"
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

Graft random_graft(std::uint64_t tag, std::uint64_t t, int max_n, int max_m) {
  RandomGraftParams params;
  params.vertex_count = 1 + static_cast<int>(mix_seed(tag, t) % max_n);
  const int n = params.vertex_count;
  const int hi = std::min(max_m, n * (n - 1) / 2);
  params.edge_count =
      n == 1 ? 0
             : (n - 1) + static_cast<int>(mix_seed(tag + 1, t) % (hi - (n - 1) + 1));
  params.terminal_density = 0.25 * (1 + mix_seed(tag + 2, t) % 3);
  params.seed = mix_seed(tag + 3, t);
  return document_to_graft(gen_random_graft(params));
}

}  // namespace

TEST_CASE("join weights") {
  const Graft p = path5();
  const EdgeIds all = p.graph().all_edge_ids();
  CHECK(f_weight(k2().graph(), EdgeIds{0}, EdgeIds{0}) == -1);
  CHECK(f_weight(p.graph(), all, {}) == 0);
  // both edges of the v1 side lie in the join
  CHECK(f_weight(p.graph(), all, EdgeIds{0, 2}) == -2);
  CHECK_THROWS_AS(f_weight(p.graph(), EdgeIds{12}, {}), GraftError);
}

TEST_CASE("distance tables on the fixtures") {
  const Graft g = k2();
  const DistanceTable t = f_distance_from(g, min_join(g), g.graph().index_of("u"));
  CHECK(t.at(g.graph().index_of("v")) == -1);
  CHECK(t.at(g.graph().index_of("u")) == 0);

  const Graft p = path5();
  const DistanceTable tp = f_distance_from(p, min_join(p), p.graph().index_of("a"));
  CHECK(tp.at(p.graph().index_of("u1")) == -1);
  CHECK(tp.at(p.graph().index_of("v1")) == -2);
  CHECK(tp.at(p.graph().index_of("u2")) == -1);
  CHECK(tp.at(p.graph().index_of("v2")) == -2);

  const Graft q = path5_pendant();
  const DistanceTable tq = f_distance_from(q, min_join(q), q.graph().index_of("a"));
  CHECK(tq.at(q.graph().index_of("z")) == 1);

  CHECK_THROWS_AS(f_distance_from(p, Join{EdgeIds{0}}, 0), GraftError);
}

TEST_CASE("distances are absent across components") {
  const Graft two = build_graft({"p", "q", "r", "s"}, {{"p", "q"}, {"r", "s"}},
                                {"p", "q"});
  const DistanceTable t =
      f_distance_from(two, min_join(two), two.graph().index_of("p"));
  CHECK(t.has(two.graph().index_of("q")));
  CHECK_FALSE(t.has(two.graph().index_of("r")));
  CHECK_THROWS_AS(t.at(two.graph().index_of("r")), GraftError);
}

TEST_CASE("the two path oracles agree with each other") {
  // subset dynamic program versus naive depth-first enumeration
  for (std::uint64_t t = 0; t < 40; ++t) {
    const Graft g = random_graft(45, t, 6, 9);
    const Join f = min_join(g);
    for (VertexIx r = 0; r < g.graph().vertex_count(); ++r) {
      const auto dp = oracle::min_simple_path_weights(g.graph(), f.edges, r);
      for (VertexIx v = 0; v < g.graph().vertex_count(); ++v) {
        if (v == r) continue;
        std::optional<int> best;
        for (const EdgeIds& path : oracle::all_simple_paths(g.graph(), r, v)) {
          const int w = f_weight(g.graph(), f.edges, path);
          if (!best || w < *best) best = w;
        }
        CHECK(dp[v] == best);
      }
    }
  }
}

TEST_CASE("distance equals the minimum simple-path weight") {
  for (std::uint64_t t = 0; t < 120; ++t) {
    const Graft g = random_graft(41, t, 8, 12);
    const Join f = min_join(g);
    for (VertexIx r = 0; r < g.graph().vertex_count(); ++r) {
      const auto oracle = oracle::min_simple_path_weights(g.graph(), f.edges, r);
      const DistanceTable table = f_distance_from(g, f, r);
      for (VertexIx v = 0; v < g.graph().vertex_count(); ++v) {
        REQUIRE(table.has(v) == oracle[v].has_value());
        if (table.has(v)) CHECK(table.at(v) == *oracle[v]);
      }
    }
  }
}

TEST_CASE("shortest paths carry exactly the distance weight") {
  const Graft g = k2();
  const FPath p = f_shortest_path(g, min_join(g), g.graph().index_of("u"),
                                  g.graph().index_of("v"));
  CHECK(p.weight == -1);
  CHECK(p.edges == EdgeIds{0});

  const Graft p5 = path5();
  const Join f5 = min_join(p5);
  const FPath to_v1 = f_shortest_path(p5, f5, p5.graph().index_of("a"),
                                      p5.graph().index_of("v1"));
  CHECK(to_v1.weight == -2);
  CHECK(to_v1.vertices ==
        std::vector<VertexIx>{p5.graph().index_of("a"), p5.graph().index_of("u1"),
                              p5.graph().index_of("v1")});

  const FPath across = f_shortest_path(p5, f5, p5.graph().index_of("v1"),
                                       p5.graph().index_of("v2"));
  CHECK(across.weight == -4);
  CHECK(across.edges.size() == 4);

  CHECK_THROWS_AS(f_shortest_path(p5, f5, 0, 0), GraftError);
  const Graft two = build_graft({"p", "q", "r", "s"}, {{"p", "q"}, {"r", "s"}},
                                {"p", "q"});
  CHECK_THROWS_AS(f_shortest_path(two, min_join(two), two.graph().index_of("p"),
                                  two.graph().index_of("r")),
                  GraftError);
}

TEST_CASE("switching moves the join to the toggled graft") {
  const Graft g = k2();
  const JoinSwitch s = join_switch(g, min_join(g), g.graph().index_of("u"),
                                   g.graph().index_of("v"));
  CHECK(s.graft.terminals().empty());
  CHECK(s.join.edges.empty());

  const Graft p = path5();
  const JoinSwitch sp = join_switch(p, min_join(p), p.graph().index_of("a"),
                                    p.graph().index_of("v1"));
  CHECK(VertexSet(sp.graft.terminals().begin(), sp.graft.terminals().end()) ==
        VertexSet{p.graph().index_of("a"), p.graph().index_of("v2")});
  CHECK(sp.join.edges == EdgeIds{1, 3});  // a-u2, u2-v2
  CHECK(sp.join.size() == 4 + sp.path.weight);

  const JoinSwitch back = join_switch(sp.graft, sp.join, p.graph().index_of("v1"),
                                      p.graph().index_of("a"));
  CHECK(back.join.size() == 4);
  CHECK(VertexSet(back.graft.terminals().begin(), back.graft.terminals().end()) ==
        VertexSet(p.terminals().begin(), p.terminals().end()));
}

TEST_CASE("switched joins are minimum and shift distances pointwise") {
  for (std::uint64_t t = 0; t < 40; ++t) {
    const Graft g = random_graft(61, t, 7, 10);
    const Join f = min_join(g);
    const int n = g.graph().vertex_count();
    for (VertexIx x = 0; x < n; ++x)
      for (VertexIx y = x + 1; y < n; ++y) {
        if (!g.graph().same_component(x, y)) continue;
        const JoinSwitch s = join_switch(g, f, x, y);  // asserts internally
        const auto nu = oracle::min_join_size_enumerated(
            g.graph(), s.graft.terminals(), 20);
        REQUIRE(nu.has_value());
        CHECK(s.join.size() == *nu);
      }
  }
}

TEST_CASE("root profiles split the graft at the root") {
  const Graft g = k2();
  const RootProfile pk = root_profile(g, min_join(g), g.graph().index_of("u"));
  CHECK(pk.zero_part == VertexSet{g.graph().index_of("u")});
  CHECK(pk.negative_part == VertexSet{g.graph().index_of("v")});
  CHECK(pk.outside_part.empty());

  const Graft p = path5();
  const RootProfile pp = root_profile(p, min_join(p), p.graph().index_of("a"));
  CHECK(pp.zero_part == VertexSet{p.graph().index_of("a")});
  CHECK(pp.negative_part.size() == 4);
  CHECK(pp.outside_part.empty());

  const Graft q = path5_pendant();
  const RootProfile pq = root_profile(q, min_join(q), q.graph().index_of("a"));
  CHECK(pq.outside_part == VertexSet{q.graph().index_of("z")});
  CHECK(pq.initial_component.size() == 5);
}

TEST_CASE("primality") {
  CHECK(is_primal(k2(), k2().graph().index_of("u")));
  const Graft p = path5();
  CHECK(is_primal(p, p.graph().index_of("a")));
  const Graft q = path5_pendant();
  CHECK_FALSE(is_primal(q, q.graph().index_of("a")));  // the pendant sits above
  CHECK(is_primal(q, q.graph().index_of("v1")));       // but not above the ends

  const Graft no_terminals = build_graft({"x", "y"}, {{"x", "y"}}, {});
  CHECK_FALSE(is_primal(no_terminals, 0));  // positive distance everywhere else

  // disconnected grafts are primal nowhere
  const Graft two = build_graft({"p", "q", "r", "s"}, {{"p", "q"}, {"r", "s"}},
                                {"p", "q"});
  for (VertexIx v = 0; v < 4; ++v) CHECK_FALSE(is_primal(two, v));
}

TEST_CASE("tower shift keeps the zero and negative parts") {
  const Graft c4 = four_cycle_all();
  const Join f = min_join(c4);
  const VertexIx a1 = c4.graph().index_of("a1");
  const VertexIx a2 = c4.graph().index_of("a2");
  REQUIRE(is_primal(c4, a1));
  const RootProfile before = root_profile(c4, f, a1);
  REQUIRE(before.zero_part == VertexSet{a1, a2});

  const JoinSwitch shifted = tower_shift(c4, f, a1, a2);
  const RootProfile after = root_profile(shifted.graft, shifted.join, a2);
  CHECK(after.zero_part == before.zero_part);
  CHECK(after.negative_part == before.negative_part);
  CHECK(is_primal(shifted.graft, a2));

  const JoinSwitch back = tower_shift(shifted.graft, shifted.join, a2, a1);
  CHECK(VertexSet(back.graft.terminals().begin(), back.graft.terminals().end()) ==
        VertexSet(c4.terminals().begin(), c4.terminals().end()));
  CHECK(back.join.size() == f.size());

  CHECK_THROWS_AS(tower_shift(c4, f, a1, c4.graph().index_of("b1")), GraftError);
  const Graft p = path5();
  CHECK_THROWS_AS(tower_shift(p, min_join(p), p.graph().index_of("v1"),
                              p.graph().index_of("a")),
                  GraftError);
}

TEST_CASE("adjacent vertices sit at most one level apart") {
  for (std::uint64_t t = 0; t < 40; ++t) {
    const Graft g = random_graft(51, t, 8, 12);
    const Join f = min_join(g);
    for (VertexIx r = 0; r < g.graph().vertex_count(); ++r) {
      const DistanceTable table = f_distance_from(g, f, r);
      for (const Edge& e : g.graph().edges()) {
        if (!table.has(e.u) || !table.has(e.v)) continue;
        CHECK(std::abs(table.at(e.u) - table.at(e.v)) <= 1);
      }
    }
  }
}

TEST_CASE("distances are symmetric and respect the two-coloring parity") {
  for (std::uint64_t t = 0; t < 30; ++t) {
    RandomGraftParams params;
    params.vertex_count = 2 + static_cast<int>(mix_seed(71, t) % 6);
    const int n = params.vertex_count;
    const int hi = std::min(10, (n / 2) * (n - n / 2));
    params.edge_count =
        (n - 1) + static_cast<int>(mix_seed(72, t) % std::max(1, hi - (n - 1) + 1));
    params.terminal_density = 0.5;
    params.seed = mix_seed(73, t);
    params.bipartite = true;
    const GraftDocument doc = gen_random_graft(params);
    const Graft g = document_to_graft(doc);
    REQUIRE(doc.classes.has_value());
    const auto& [ca, cb] = *doc.classes;
    auto side = [&](VertexIx v) {
      const Label l = g.graph().label(v);
      return std::find(ca.begin(), ca.end(), l) != ca.end();
    };
    for (VertexIx x = 0; x < g.graph().vertex_count(); ++x)
      for (VertexIx y = x + 1; y < g.graph().vertex_count(); ++y) {
        const auto d1 = join_distance(g, x, y);
        const auto d2 = join_distance(g, y, x);
        CHECK(d1 == d2);
        if (d1) CHECK((std::abs(*d1) % 2 == 0) == (side(x) == side(y)));
      }
  }
}
