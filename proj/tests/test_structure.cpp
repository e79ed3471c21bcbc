#include "doctest.h"
#include "graft/generate.hpp"
#include "graft/oracle.hpp"
#include "graft/structure.hpp"

using namespace graft;

namespace {

Graft path5() {
  return build_graft({"v1", "u1", "a", "u2", "v2"},
                     {{"v1", "u1"}, {"u1", "a"}, {"a", "u2"}, {"u2", "v2"}},
                     {"v1", "v2"});
}

BipartiteGraft path5_bg() {
  Graft g = path5();
  return BipartiteGraft::make(
      g, g.graph().indices_of(std::vector<Label>{"a", "v1", "v2"}),
      g.graph().indices_of(std::vector<Label>{"u1", "u2"}));
}

BipartiteGraft path5_pendant_bg() {
  Graft g = build_graft(
      {"v1", "u1", "a", "u2", "v2", "z"},
      {{"v1", "u1"}, {"u1", "a"}, {"a", "u2"}, {"u2", "v2"}, {"a", "z"}},
      {"v1", "v2"});
  return BipartiteGraft::make(
      g, g.graph().indices_of(std::vector<Label>{"a", "v1", "v2"}),
      g.graph().indices_of(std::vector<Label>{"u1", "u2", "z"}));
}

BipartiteGraft four_cycle_bg() {
  Graft g = build_graft({"a1", "b1", "a2", "b2"},
                        {{"a1", "b1"}, {"b1", "a2"}, {"a2", "b2"}, {"b2", "a1"}},
                        {"a1", "b1", "a2", "b2"});
  return BipartiteGraft::make(
      g, g.graph().indices_of(std::vector<Label>{"a1", "a2"}),
      g.graph().indices_of(std::vector<Label>{"b1", "b2"}));
}

BipartiteGraft random_bipartite(std::uint64_t tag, std::uint64_t t, int max_n,
                                int max_m) {
  RandomGraftParams params;
  params.vertex_count = 2 + static_cast<int>(mix_seed(tag, t) % (max_n - 1));
  const int n = params.vertex_count;
  const int hi = std::max(n - 1, std::min(max_m, (n / 2) * (n - n / 2)));
  params.edge_count =
      (n - 1) + static_cast<int>(mix_seed(tag + 1, t) % (hi - (n - 1) + 1));
  params.terminal_density = 0.3 + 0.2 * (mix_seed(tag + 2, t) % 3);
  params.seed = mix_seed(tag + 3, t);
  params.bipartite = true;
  return document_to_bipartite(gen_random_graft(params));
}

}  // namespace

TEST_CASE("extreme sets") {
  const Graft p = path5();
  const Join f = min_join(p);
  CHECK(is_extreme(p, f, VertexSet{p.graph().index_of("a")}));
  CHECK(is_extreme(p, f, {}));
  CHECK_FALSE(is_extreme(
      p, f, VertexSet{p.graph().index_of("a"), p.graph().index_of("v1")}));

  // pairs in different components pass vacuously
  const Graft two = build_graft({"p", "q", "r", "s"}, {{"p", "q"}, {"r", "s"}},
                                {"p", "q"});
  CHECK(is_extreme(two, min_join(two),
                   VertexSet{two.graph().index_of("p"), two.graph().index_of("r")}));
}

TEST_CASE("greedy growth of maximal bipartitic extreme sets") {
  const BipartiteGraft p = path5_bg();
  const Join f = min_join(p.graft());
  CHECK(grow_maximal_bipartitic_extreme(p, f, p.graph().index_of("a")) ==
        VertexSet{p.graph().index_of("a")});

  const BipartiteGraft c4 = four_cycle_bg();
  const Join f4 = min_join(c4.graft());
  CHECK(grow_maximal_bipartitic_extreme(c4, f4, c4.graph().index_of("a1")) ==
        VertexSet{c4.graph().index_of("a1"), c4.graph().index_of("a2")});

  const Graft lone = build_graft({"w"}, {}, {});
  const BipartiteGraft lone_bg = BipartiteGraft::make(lone, VertexSet{0}, {});
  CHECK(grow_maximal_bipartitic_extreme(lone_bg, min_join(lone), 0) ==
        VertexSet{0});
}

TEST_CASE("growth output is extreme, maximal, and closed under subsets") {
  for (std::uint64_t t = 0; t < 40; ++t) {
    const BipartiteGraft g = random_bipartite(81, t, 8, 10);
    const Join f = min_join(g.graft());
    for (VertexIx seed = 0; seed < g.graph().vertex_count(); ++seed) {
      const VertexSet x = grow_maximal_bipartitic_extreme(g, f, seed);
      CHECK(is_maximal_bipartitic_extreme(g, f, x));
      for (std::uint32_t mask = 0; mask < (1u << std::min<std::size_t>(x.size(), 5));
           ++mask) {
        VertexSet sub;
        for (std::size_t i = 0; i < std::min<std::size_t>(x.size(), 5); ++i)
          if (mask >> i & 1) sub.push_back(x[i]);
        CHECK(is_extreme(g.graft(), f, sub));
      }
    }
  }
}

TEST_CASE("extreme partitions") {
  const BipartiteGraft p = path5_bg();
  const Join f = min_join(p.graft());
  const ExtremePartition part =
      extreme_partition(p, f, VertexSet{p.graph().index_of("a")});
  CHECK(part.below.size() == 4);
  CHECK(part.fringe.empty());

  const BipartiteGraft q = path5_pendant_bg();
  const Join fq = min_join(q.graft());
  const ExtremePartition pq =
      extreme_partition(q, fq, VertexSet{q.graph().index_of("a")});
  CHECK(pq.fringe == VertexSet{q.graph().index_of("z")});
  CHECK(edges_between(q.graph(), pq.below, pq.fringe).empty());

  const Graft k2 = build_graft({"u", "v"}, {{"u", "v"}}, {"u", "v"});
  const BipartiteGraft k2_bg =
      BipartiteGraft::make(k2, VertexSet{k2.graph().index_of("u")},
                           VertexSet{k2.graph().index_of("v")});
  const ExtremePartition pk =
      extreme_partition(k2_bg, min_join(k2), VertexSet{k2.graph().index_of("u")});
  CHECK(pk.below == VertexSet{k2.graph().index_of("v")});
  CHECK(pk.fringe.empty());

  CHECK_THROWS_AS(
      extreme_partition(p, f,
                        VertexSet{p.graph().index_of("a"), p.graph().index_of("v1")}),
      GraftError);
}

TEST_CASE("combic sets") {
  const Graft p = path5();
  const Join f = min_join(p);
  CHECK(is_combic(p, f, {}));
  CHECK(is_combic(p, f, VertexSet{p.graph().index_of("a")}));
  // {a, v1} leaves the even component {u1} catching two join edges
  CHECK_FALSE(is_combic(
      p, f, VertexSet{p.graph().index_of("a"), p.graph().index_of("v1")}));

  // spanning a join edge disqualifies
  const Graft k2 = build_graft({"u", "v"}, {{"u", "v"}}, {"u", "v"});
  CHECK_FALSE(is_combic(k2, min_join(k2), VertexSet{0, 1}));

  // a four-cycle with all terminals: one odd component, one cut join edge
  const BipartiteGraft c4 = four_cycle_bg();
  const Join f4 = Join{EdgeIds{0, 3}};  // a1b1, a2b2
  REQUIRE(is_join(c4.graft(), f4.edges));
  REQUIRE(f4.size() == min_join(c4.graft()).size());
  CHECK(is_combic(c4.graft(), f4, VertexSet{c4.graph().index_of("a1")}));

  // an odd component catching three join edges is rejected
  const Graft star = build_graft({"a", "c1", "c2", "c3"},
                                 {{"a", "c1"}, {"a", "c2"}, {"a", "c3"}},
                                 {"a", "c1", "c2", "c3"});
  const Join fs = min_join(star);
  REQUIRE(fs.size() == 3);
  CHECK_FALSE(is_combic(star, fs,
                        star.graph().indices_of(
                            std::vector<Label>{"c1", "c2", "c3"})));
}

TEST_CASE("skeletons contract the odd components") {
  const Graft p = path5();
  const Join f = min_join(p);
  const Skeleton sk = skeleton_of(p, f, VertexSet{p.graph().index_of("a")});
  const Graph& sg = sk.graft.graph();
  CHECK(sg.vertex_count() == 3);
  CHECK(sg.edge_count() == 2);
  CHECK(sk.join.edges == EdgeIds{0, 1});  // the a-u1 and a-u2 cut edges
  CHECK(VertexSet(sk.graft.graft().terminals().begin(),
                  sk.graft.graft().terminals().end()) ==
        sg.indices_of(std::vector<Label>{"[u1+v1]", "[u2+v2]"}));
  CHECK(sk.teeth.at(sg.index_of("[u1+v1]")) ==
        p.graph().indices_of(std::vector<Label>{"u1", "v1"}));

  const Graft k2 = build_graft({"u", "v"}, {{"u", "v"}}, {"u", "v"});
  const Skeleton sk2 =
      skeleton_of(k2, min_join(k2), VertexSet{k2.graph().index_of("u")});
  CHECK(sk2.graft.graph().vertex_count() == 2);
  CHECK(sk2.join.edges == EdgeIds{0});

  // an all-even graft with an empty spine has an empty skeleton
  const Graft even = build_graft({"x", "y"}, {{"x", "y"}}, {});
  const Skeleton sk3 = skeleton_of(even, min_join(even), {});
  CHECK(sk3.graft.graph().vertex_count() == 0);
  CHECK(sk3.join.edges.empty());

  CHECK_THROWS_AS(
      skeleton_of(p, f, VertexSet{p.graph().index_of("a"), p.graph().index_of("v1")}),
      GraftError);
}

TEST_CASE("tooth extraction") {
  const Graft p = path5();
  const Join f = min_join(p);
  const VertexSet x{p.graph().index_of("a")};
  const VertexSet c = p.graph().indices_of(std::vector<Label>{"u1", "v1"});

  const Tooth tooth = tooth_extract(p, f, x, c);
  CHECK(tooth.graft.graph().vertex_count() == 2);
  CHECK(VertexSet(tooth.graft.terminals().begin(), tooth.graft.terminals().end()) ==
        VertexSet{0, 1});  // both u1 and v1
  CHECK(tooth.graft.graph().label(tooth.root) == "u1");
  CHECK(tooth.join.size() == 1);
  CHECK(p.graph().edge(tooth.attachment).touches(p.graph().index_of("a")));

  const Graft k2 = build_graft({"u", "v"}, {{"u", "v"}}, {"u", "v"});
  const Tooth leaf = tooth_extract(k2, min_join(k2), VertexSet{k2.graph().index_of("u")},
                                   VertexSet{k2.graph().index_of("v")});
  CHECK(leaf.graft.graph().vertex_count() == 1);
  CHECK(leaf.graft.terminals().empty());
  CHECK(leaf.join.edges.empty());
}

TEST_CASE("fringe removal and addition invert each other") {
  const BipartiteGraft q = path5_pendant_bg();
  const VertexSet xa{q.graph().index_of("a")};
  const BipartiteGraft trimmed = fringe_remove(q, xa);
  CHECK(trimmed.graph().vertex_count() == 5);
  CHECK_FALSE(trimmed.graph().try_index_of("z").has_value());

  // adding the pendant back restores the original up to labels
  const BipartiteGraft back = fringe_add(
      trimmed, VertexSet{trimmed.graph().index_of("a")}, {"z"}, {{"z", "a"}});
  CHECK(same_labeled_bipartite(back, q));

  // identity when the fringe is empty
  const BipartiteGraft p = path5_bg();
  const BipartiteGraft same = fringe_remove(p, VertexSet{p.graph().index_of("a")});
  CHECK(same_labeled_bipartite(same, p));

  // minimum joins agree across removal (ids survive the subgraph)
  const auto before = oracle::all_min_joins(q.graph(), q.graft().terminals(), 20);
  const auto after =
      oracle::all_min_joins(trimmed.graph(), trimmed.graft().terminals(), 20);
  CHECK(before == after);
}

TEST_CASE("fringe addition rejects bad attachments") {
  const BipartiteGraft p = path5_bg();
  const VertexSet xa{p.graph().index_of("a")};
  CHECK_THROWS_AS(fringe_add(p, xa, {"z"}, {{"z", "u1"}}), GraftError);
  CHECK_THROWS_AS(fringe_add(p, xa, {"z"}, {{"z", "w"}}), GraftError);
  CHECK_THROWS_AS(fringe_add(p, xa, {"a"}, {}), GraftError);

  const VertexSet not_maximal{p.graph().index_of("v1"),
                              p.graph().index_of("v2")};
  CHECK_THROWS_AS(fringe_remove(p, not_maximal), GraftError);
  CHECK_THROWS_AS(fringe_add(p, not_maximal, {"z"}, {}), GraftError);

  // two fresh vertices tied to the spine both land in the fringe
  const BipartiteGraft padded =
      fringe_add(p, xa, {"z1", "z2"}, {{"z1", "a"}, {"z2", "a"}});
  const Join f = min_join(padded.graft());
  const ExtremePartition part = extreme_partition(
      padded, f, VertexSet{padded.graph().index_of("a")});
  CHECK(part.fringe ==
        padded.graph().indices_of(std::vector<Label>{"z1", "z2"}));
  const FactorComponents fc = factor_components(padded.graft());
  CHECK(setops::is_subset(part.fringe, fc.trivial));
}

TEST_CASE("rootlization") {
  const Graft k2 = build_graft({"u", "v"}, {{"u", "v"}}, {"u", "v"});
  const RootlizedGraft rooted =
      rootlize(k2, VertexSet{k2.graph().index_of("u")}, "r", "s");
  CHECK(rooted.graft.graph().vertex_count() == 4);
  CHECK(rooted.graft.graph().edge_count() == 3);
  CHECK(min_join(rooted.graft).size() == 2);
  CHECK(join_distance(rooted.graft, rooted.root, rooted.attachment) == -1);
  for (VertexIx v : rooted.mount)
    CHECK(join_distance(rooted.graft, rooted.root, v) == 0);

  CHECK_THROWS_AS(rootlize(k2, VertexSet{0}, "u", "s"), GraftError);
  const Graft p = path5();
  CHECK_THROWS_AS(
      rootlize(p, p.graph().indices_of(std::vector<Label>{"a", "v1"}), "r", "s"),
      GraftError);

  // empty mount: the root component floats beside the graft
  const RootlizedGraft bare = rootlize(k2, {}, "r", "s");
  CHECK(bare.graft.graph().edge_count() == 2);
  CHECK(min_join(bare.graft).size() == 2);
  CHECK(join_distance(bare.graft, bare.root, bare.attachment) == -1);
}

TEST_CASE("rootlizing a maximal set pins the initial component") {
  for (std::uint64_t t = 0; t < 25; ++t) {
    const BipartiteGraft g = random_bipartite(91, t, 7, 9);
    const Join f = min_join(g.graft());
    const VertexIx seed =
        static_cast<VertexIx>(mix_seed(92, t) % g.graph().vertex_count());
    const VertexSet x = grow_maximal_bipartitic_extreme(g, f, seed);
    const ExtremePartition part = extreme_partition(g, f, x);
    const RootlizedGraft rooted = rootlize(g.graft(), x, "_r", "_s");

    const Join rf = min_join(rooted.graft);
    const RootProfile profile = root_profile(rooted.graft, rf, rooted.root);
    VertexSet expected_zero = rooted.mount;
    expected_zero.push_back(rooted.root);
    expected_zero = setops::sorted_unique(std::move(expected_zero));
    VertexSet expected_neg;
    for (VertexIx v : part.below) expected_neg.push_back(rooted.vertex_map[v]);
    expected_neg.push_back(rooted.attachment);
    expected_neg = setops::sorted_unique(std::move(expected_neg));

    CHECK(profile.zero_part == expected_zero);
    CHECK(profile.negative_part == expected_neg);
    CHECK(profile.initial_component ==
          setops::set_union(expected_zero, expected_neg));
  }
}
