#include "doctest.h"
#include "graft/decompose.hpp"
#include "graft/generate.hpp"
#include "graft/io.hpp"
#include "graft/oracle.hpp"

using namespace graft;

namespace {

BipartiteGraft path5_bg() {
  Graft g = build_graft({"v1", "u1", "a", "u2", "v2"},
                        {{"v1", "u1"}, {"u1", "a"}, {"a", "u2"}, {"u2", "v2"}},
                        {"v1", "v2"});
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

BipartiteGraft k2_bg() {
  Graft g = build_graft({"u", "v"}, {{"u", "v"}}, {"u", "v"});
  return BipartiteGraft::make(g, VertexSet{g.graph().index_of("u")},
                              VertexSet{g.graph().index_of("v")});
}

// two star combs joined tooth-to-spine; primal at a1 but not a2
BipartiteGraft two_star_comb() {
  Graft g = build_graft(
      {"a1", "c1", "c2", "a2", "d1", "d2"},
      {{"a1", "c1"}, {"a1", "c2"}, {"a2", "c2"}, {"a2", "d1"}, {"a2", "d2"}},
      {"c1", "c2", "d1", "d2"});
  return BipartiteGraft::make(
      g, g.graph().indices_of(std::vector<Label>{"a1", "a2"}),
      g.graph().indices_of(std::vector<Label>{"c1", "c2", "d1", "d2"}));
}

SynthesisSpec path5_spec() {
  SynthesisSpec spec;
  Graft comb = build_graft({"a", "b1", "b2"}, {{"a", "b1"}, {"a", "b2"}},
                           {"b1", "b2"});
  spec.comb = BipartiteGraft::make(
      comb, VertexSet{comb.graph().index_of("a")},
      comb.graph().indices_of(std::vector<Label>{"b1", "b2"}));

  auto tooth = [](const Label& u, const Label& v) {
    Graft g = build_graft({u, v}, {{u, v}}, {u, v});
    ToothSpec spec_tooth;
    spec_tooth.graft = BipartiteGraft::make(g, VertexSet{g.graph().index_of(u)},
                                            VertexSet{g.graph().index_of(v)});
    spec_tooth.root = g.graph().index_of(u);
    return spec_tooth;
  };
  spec.teeth.emplace("b1", tooth("u1", "v1"));
  spec.teeth.emplace("b2", tooth("u2", "v2"));
  // comb edge (a,b1) has the lower id
  spec.attachments[0] = "u1";
  spec.attachments[1] = "u2";
  return spec;
}

}  // namespace

TEST_CASE("decomposing the five-path at its center") {
  const BipartiteGraft g = path5_bg();
  const Join f = min_join(g.graft());
  const VertexSet x{g.graph().index_of("a")};

  const CathedralDecomposition dec = decompose(g, f, x);
  CHECK(dec.base == x);
  CHECK(dec.fringe.empty());
  REQUIRE(dec.teeth.size() == 2);
  for (const Tooth& tooth : dec.teeth) {
    CHECK(tooth.graft.graph().vertex_count() == 2);
    CHECK(tooth.graft.terminals().size() == 2);
    CHECK(is_primal(tooth.graft, tooth.root));
    CHECK(tooth.graft.graph().label(tooth.root)[0] == 'u');
  }
  CHECK(dec.skeleton.graft.graph().vertex_count() == 3);
  CHECK(dec.skeleton.join.size() == 2);

  // {v1} is a different maximal bipartitic extreme set of the same graft
  const CathedralDecomposition from_end =
      decompose(g, f, VertexSet{g.graph().index_of("v1")});
  CHECK(from_end.teeth.size() == 1);
  CHECK(from_end.teeth.front().graft.graph().vertex_count() == 4);

  CHECK_THROWS_AS(
      decompose(g, f,
                VertexSet{g.graph().index_of("a"), g.graph().index_of("v1")}),
      GraftError);
}

TEST_CASE("decomposing a single edge and a pendant variant") {
  const BipartiteGraft k2 = k2_bg();
  const CathedralDecomposition dk2 =
      decompose(k2, min_join(k2.graft()), VertexSet{k2.graph().index_of("u")});
  REQUIRE(dk2.teeth.size() == 1);
  CHECK(dk2.teeth.front().graft.graph().vertex_count() == 1);
  CHECK(dk2.teeth.front().graft.terminals().empty());
  CHECK(dk2.fringe.empty());

  const BipartiteGraft q = path5_pendant_bg();
  const CathedralDecomposition dq =
      decompose(q, min_join(q.graft()), VertexSet{q.graph().index_of("a")});
  CHECK(dq.fringe == VertexSet{q.graph().index_of("z")});
  CHECK(dq.teeth.size() == 2);
}

TEST_CASE("distance structure report at a root") {
  const BipartiteGraft g = path5_bg();
  const Join f = min_join(g.graft());
  const SeboReport report = verify_sebo(g.graft(), f, g.graph().index_of("a"));
  CHECK(report.ok());
  CHECK(report.combic);
  CHECK(report.skeleton_is_comb);
  CHECK(report.skeleton_primal);
  CHECK(report.teeth_primal);
  CHECK(report.tooth_distance_identity);
  CHECK(report.neighbor_containment);

  // the u1,v1 tooth sits one level above the graft: min level -1 vs -2
  const Tooth tooth = tooth_extract(
      g.graft(), f, VertexSet{g.graph().index_of("a")},
      g.graph().indices_of(std::vector<Label>{"u1", "v1"}));
  CHECK(join_distance(tooth.graft, tooth.root,
                      tooth.graft.graph().index_of("v1")) == -1);
  CHECK(join_distance(g.graft(), g.graph().index_of("a"),
                      g.graph().index_of("v1")) == -2);

  const Graft lone = build_graft({"w"}, {}, {});
  CHECK(verify_sebo(lone, min_join(lone), 0).ok());
}

TEST_CASE("distance structure of a rootlized five-path") {
  const BipartiteGraft g = path5_bg();
  const RootlizedGraft rooted =
      rootlize(g.graft(), VertexSet{g.graph().index_of("a")}, "_r", "_s");
  const Join rf = min_join(rooted.graft);
  CHECK(verify_sebo(rooted.graft, rf, rooted.root).ok());

  const RootProfile profile = root_profile(rooted.graft, rf, rooted.root);
  CHECK(profile.zero_part ==
        setops::sorted_unique(VertexSet{
            rooted.root, rooted.graft.graph().index_of("a")}));
  VertexSet expected_negative = rooted.graft.graph().indices_of(
      std::vector<Label>{"u1", "u2", "v1", "v2", "_s"});
  CHECK(profile.negative_part == expected_negative);
}

TEST_CASE("the two-star comb fixture") {
  const BipartiteGraft comb = two_star_comb();
  const Graph& graph = comb.graph();
  const Join f = min_join(comb.graft());
  REQUIRE(f.size() == 4);
  REQUIRE(is_comb(comb, f));

  SUBCASE("claims hold at the primal spine root") {
    const CombReport report = comb_primality_checks(comb, graph.index_of("a1"));
    CHECK(report.primal);
    CHECK(report.claims_checked);
    CHECK(report.ok());
    CHECK(report.cross_edges_absent);
    CHECK(report.contraction_join_minimum);
    CHECK(report.contraction_distances);
    REQUIRE(report.factor_components.components.size() == 2);

    // pin the quotient distances against enumeration: 1 to the spine side,
    // 0 to the teeth
    const VertexSet g_r =
        report.factor_components.components[report.root_component];
    const ContractionResult contracted = contract_sets(graph, {g_r});
    VertexSet terminals;
    for (VertexIx v : comb.graft().terminals())
      if (!setops::contains(g_r, v))
        terminals.push_back(contracted.vertex_map[v]);
    const Graft quotient =
        Graft::make(contracted.graph, setops::sorted_unique(std::move(terminals)));
    const VertexIx hub = contracted.set_vertices.front();
    const auto base_nu = oracle::min_join_size_enumerated(
        quotient.graph(), quotient.terminals(), 20);
    REQUIRE(base_nu.has_value());
    auto enum_dist = [&](VertexIx v) {
      VertexSet t(quotient.terminals().begin(), quotient.terminals().end());
      t = setops::toggled(t, hub);
      t = setops::toggled(t, v);
      return *oracle::min_join_size_enumerated(quotient.graph(), t, 20) - *base_nu;
    };
    CHECK(enum_dist(contracted.vertex_map[graph.index_of("a2")]) == 1);
    CHECK(enum_dist(contracted.vertex_map[graph.index_of("d1")]) == 0);
    CHECK(enum_dist(contracted.vertex_map[graph.index_of("d2")]) == 0);
  }

  SUBCASE("claims are skipped at the non-primal spine root") {
    const CombReport report = comb_primality_checks(comb, graph.index_of("a2"));
    CHECK_FALSE(report.primal);
    CHECK_FALSE(report.claims_checked);
    CHECK(report.ok());
  }

  SUBCASE("teeth are not spine roots") {
    CHECK_THROWS_AS(comb_primality_checks(comb, graph.index_of("c1")), GraftError);
  }
}

TEST_CASE("a factor-connected star comb passes the claims vacuously") {
  Graft star = build_graft({"a", "c1", "c2"}, {{"a", "c1"}, {"a", "c2"}},
                           {"c1", "c2"});
  const BipartiteGraft comb = BipartiteGraft::make(
      star, VertexSet{star.graph().index_of("a")},
      star.graph().indices_of(std::vector<Label>{"c1", "c2"}));
  const CombReport report = comb_primality_checks(comb, comb.graph().index_of("a"));
  CHECK(report.primal);
  CHECK(report.ok());
  CHECK(report.factor_components.components.size() == 1);

  // factor-connected comb distance profile, pinned exactly
  const Graft& g = comb.graft();
  CHECK(join_distance(g, g.graph().index_of("a"), g.graph().index_of("c1")) == -1);
  CHECK(join_distance(g, g.graph().index_of("c1"), g.graph().index_of("c2")) == -2);
}

TEST_CASE("synthesizing the five-path from a star comb and two teeth") {
  const SynthesisSpec spec = path5_spec();
  const BipartiteGraft result = synthesize(spec);
  CHECK(same_labeled_bipartite(result, path5_bg()));

  const Join comb_join = min_join(spec.comb.graft());
  std::map<Label, Join> tooth_joins;
  tooth_joins["b1"] = min_join(spec.teeth.at("b1").graft.graft());
  tooth_joins["b2"] = min_join(spec.teeth.at("b2").graft.graft());
  const Join combined = synthesis_min_join(spec, comb_join, tooth_joins);
  CHECK(combined.size() == 4);

  // every minimum join of the synthesis factors through the parts: here the
  // minimum join is unique
  const auto all = oracle::all_min_joins(result.graph(),
                                         result.graft().terminals(), 20);
  CHECK(all.size() == 1);
  CHECK(all.front() == combined.edges);
}

TEST_CASE("a comb with no teeth synthesizes to itself") {
  SynthesisSpec spec;
  Graft comb = build_graft({"a1", "a2"}, {}, {});
  spec.comb = BipartiteGraft::make(
      comb, comb.graph().indices_of(std::vector<Label>{"a1", "a2"}), {});
  const BipartiteGraft result = synthesize(spec);
  CHECK(same_labeled_graft(result.graft(), spec.comb.graft()));
}

TEST_CASE("a bare tooth vertex lands in the synthesis terminals") {
  SynthesisSpec spec;
  Graft comb = build_graft({"a", "b"}, {{"a", "b"}}, {"a", "b"});
  spec.comb = BipartiteGraft::make(comb, VertexSet{comb.graph().index_of("a")},
                                   VertexSet{comb.graph().index_of("b")});
  Graft lone = build_graft({"w"}, {}, {});
  ToothSpec tooth;
  tooth.graft = BipartiteGraft::make(lone, VertexSet{0}, {});
  tooth.root = 0;
  spec.teeth.emplace("b", tooth);
  spec.attachments[0] = "w";

  const BipartiteGraft result = synthesize(spec);
  CHECK(result.graph().vertex_count() == 2);
  CHECK(VertexSet(result.graft().terminals().begin(),
                  result.graft().terminals().end()) ==
        result.graph().indices_of(std::vector<Label>{"a", "w"}));
}

TEST_CASE("synthesis validation errors") {
  SynthesisSpec spec = path5_spec();

  SUBCASE("attachment outside the zero part") {
    spec.attachments[0] = "v1";  // inner tooth vertex, negative distance
    CHECK_THROWS_AS(synthesize(spec), GraftError);
  }
  SUBCASE("missing tooth") {
    spec.teeth.erase("b1");
    CHECK_THROWS_AS(synthesize(spec), GraftError);
  }
  SUBCASE("non-primal tooth is rejected") {
    // a five-path with a pendant off its center is not primal at the center
    Graft bad = build_graft(
        {"pv1", "pu1", "pa", "pu2", "pv2", "pz"},
        {{"pv1", "pu1"}, {"pu1", "pa"}, {"pa", "pu2"}, {"pu2", "pv2"}, {"pa", "pz"}},
        {"pv1", "pv2"});
    ToothSpec tooth;
    tooth.graft = BipartiteGraft::make(
        bad, bad.graph().indices_of(std::vector<Label>{"pa", "pv1", "pv2"}),
        bad.graph().indices_of(std::vector<Label>{"pu1", "pu2", "pz"}));
    tooth.root = bad.graph().index_of("pa");
    REQUIRE_FALSE(is_primal(tooth.graft.graft(), tooth.root));
    spec.teeth.erase("b1");
    spec.teeth.emplace("b1", tooth);
    spec.attachments[0] = "pa";
    try {
      synthesize(spec);
      FAIL("non-primal tooth accepted");
    } catch (const GraftError& e) {
      CHECK(e.code() == Errc::ToothNotPrimal);
    }
  }
  SUBCASE("comb tooth must be a terminal") {
    Graft comb = build_graft({"a", "b"}, {{"a", "b"}}, {});
    spec.comb = BipartiteGraft::make(comb, VertexSet{comb.graph().index_of("a")},
                                     VertexSet{comb.graph().index_of("b")});
    CHECK_THROWS_AS(synthesize(spec), GraftError);
  }
}

TEST_CASE("primal certificates") {
  const BipartiteGraft k2 = k2_bg();
  const PrimalCertificate leaf = primal_decompose(k2, k2.graph().index_of("u"));
  CHECK(leaf.base_case);
  CHECK(leaf.children.empty());
  CHECK(leaf.root == "u");
  CHECK(same_labeled_bipartite(resynthesize(leaf), k2));

  const BipartiteGraft p = path5_bg();
  const PrimalCertificate cert = primal_decompose(p, p.graph().index_of("a"));
  CHECK_FALSE(cert.base_case);
  REQUIRE(cert.children.size() == 2);
  CHECK(cert.comb.graph().vertex_count() == 3);
  for (const auto& [label, child] : cert.children) {
    CHECK(child->base_case);
    CHECK(child->comb.graph().vertex_count() == 2);
  }
  CHECK(cert.node_count() == 3);
  CHECK(cert.depth() == 2);
  CHECK(same_labeled_bipartite(resynthesize(cert), p));

  CHECK_THROWS_AS(primal_decompose(path5_pendant_bg(),
                                   path5_pendant_bg().graph().index_of("a")),
                  GraftError);
}

TEST_CASE("certificates rebuild random primal grafts") {
  int found = 0;
  for (std::uint64_t t = 0; t < 40 && found < 12; ++t) {
    RandomGraftParams params;
    params.vertex_count = 2 + static_cast<int>(mix_seed(101, t) % 6);
    const int n = params.vertex_count;
    const int hi = std::max(n - 1, std::min(9, (n / 2) * (n - n / 2)));
    params.edge_count =
        (n - 1) + static_cast<int>(mix_seed(102, t) % (hi - (n - 1) + 1));
    params.terminal_density = 0.7;
    params.seed = mix_seed(103, t);
    params.bipartite = true;
    const BipartiteGraft g = document_to_bipartite(gen_random_graft(params));
    for (VertexIx r = 0; r < g.graph().vertex_count(); ++r) {
      if (!is_primal(g.graft(), r)) continue;
      ++found;
      const PrimalCertificate cert = primal_decompose(g, r);
      CHECK(same_labeled_bipartite(resynthesize(cert), g));
      break;
    }
  }
  CHECK(found >= 5);
}

TEST_CASE("decomposition spans disconnected grafts") {
  // two disjoint single-edge grafts; the maximal set picks one side of each
  Graft g = build_graft({"p", "q", "r", "s"}, {{"p", "q"}, {"r", "s"}},
                        {"p", "q", "r", "s"});
  const BipartiteGraft bg = BipartiteGraft::make(
      g, g.graph().indices_of(std::vector<Label>{"p", "r"}),
      g.graph().indices_of(std::vector<Label>{"q", "s"}));
  const Join f = min_join(bg.graft());
  const VertexSet x =
      grow_maximal_bipartitic_extreme(bg, f, g.graph().index_of("p"));
  CHECK(x == g.graph().indices_of(std::vector<Label>{"p", "r"}));
  const CathedralDecomposition dec = decompose(bg, f, x);
  CHECK(dec.teeth.size() == 2);
  CHECK(dec.fringe.empty());
  CHECK(dec.skeleton.graft.graph().vertex_count() == 4);
}

TEST_CASE("decomposition parts round-trip through synthesis") {
  const BipartiteGraft g = path5_pendant_bg();
  const Join f = min_join(g.graft());
  const VertexSet x{g.graph().index_of("a")};
  const BipartiteGraft trimmed = fringe_remove(g, x);
  const Join tf = min_join(trimmed.graft());
  const CathedralDecomposition dec =
      decompose(trimmed, tf, VertexSet{trimmed.graph().index_of("a")});
  const SynthesisSpec spec = spec_from_decomposition(trimmed, dec);
  CHECK(same_labeled_bipartite(synthesize(spec), trimmed));
}
