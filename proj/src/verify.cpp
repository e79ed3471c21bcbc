#include "graft/verify.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <mutex>
#include <numeric>
#include <set>
#include <sstream>

#include "json.hpp"

namespace graft::verify {

namespace {

// ------------------------------------------------------------- recording

struct Recorder {
  VerificationReport report;
  std::size_t failure_cap = 25;

  explicit Recorder(std::string suite) { report.suite = std::move(suite); }

  bool check(bool ok, const GraftDocument& doc, const std::string& property,
             const std::string& witness,
             const std::function<std::optional<std::string>(const GraftDocument&)>&
                 violation = nullptr) {
    ++report.instances;
    if (ok) return true;
    if (report.failures.size() < failure_cap) {
      GraftDocument shrunk = doc;
      std::string note = witness;
      if (violation) {
        shrunk = minimize_witness(doc, violation);
        if (auto w = violation(shrunk)) note = *w;
      }
      report.failures.push_back({serialize_document(shrunk), property, note});
    }
    return false;
  }

  void note_failure(const GraftDocument& doc, const std::string& property,
                    const std::string& witness) {
    check(false, doc, property, witness);
  }
};

std::string describe(const GraftError& e) { return e.what(); }

// ----------------------------------------------------- instance families

struct RandomFamily {
  int max_n = 8;
  int min_n = 1;
  int max_m = 20;
  bool bipartite = false;
  std::vector<double> densities{0.25, 0.4, 0.6, 0.8, 1.0};
};

GraftDocument random_doc(const RandomFamily& fam, std::uint64_t seed) {
  RandomGraftParams params;
  const int span = fam.max_n - fam.min_n + 1;
  params.vertex_count =
      fam.min_n + static_cast<int>(mix_seed(seed, 1) % static_cast<std::uint64_t>(span));
  const int n = params.vertex_count;
  const long pairs = fam.bipartite ? static_cast<long>(n / 2) * (n - n / 2)
                                   : static_cast<long>(n) * (n - 1) / 2;
  const int m_lo = n > 1 ? n - 1 : 0;
  const int m_hi = static_cast<int>(std::min<long>(fam.max_m, pairs));
  params.edge_count =
      m_hi <= m_lo ? m_lo
                   : m_lo + static_cast<int>(mix_seed(seed, 2) %
                                             static_cast<std::uint64_t>(m_hi - m_lo + 1));
  params.terminal_density =
      fam.densities[mix_seed(seed, 3) % fam.densities.size()];
  params.seed = mix_seed(seed, 4);
  params.bipartite = fam.bipartite;
  return gen_random_graft(params);
}

// one representative per isomorphism class of (connected graph, terminal set)
std::vector<Graft> enumerate_connected_grafts(int n) {
  std::vector<Graft> out;
  const std::vector<Label> alphabet{"a", "b", "c", "d", "e", "f"};
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
  const int p = static_cast<int>(pairs.size());

  std::vector<std::vector<int>> perms;
  {
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    do {
      perms.push_back(perm);
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
  std::vector<std::vector<int>> pair_remap(perms.size(), std::vector<int>(p));
  std::map<std::pair<int, int>, int> pair_index;
  for (int i = 0; i < p; ++i) pair_index[pairs[i]] = i;
  for (std::size_t s = 0; s < perms.size(); ++s)
    for (int i = 0; i < p; ++i) {
      int a = perms[s][pairs[i].first], b = perms[s][pairs[i].second];
      if (a > b) std::swap(a, b);
      pair_remap[s][i] = pair_index.at({a, b});
    }

  auto apply_edges = [&](std::size_t s, std::uint32_t mask) {
    std::uint32_t out_mask = 0;
    for (int i = 0; i < p; ++i)
      if (mask >> i & 1) out_mask |= std::uint32_t{1} << pair_remap[s][i];
    return out_mask;
  };
  auto apply_vertices = [&](std::size_t s, std::uint32_t tmask) {
    std::uint32_t out_mask = 0;
    for (int v = 0; v < n; ++v)
      if (tmask >> v & 1) out_mask |= std::uint32_t{1} << perms[s][v];
    return out_mask;
  };
  auto connected_mask = [&](std::uint32_t mask) {
    std::vector<int> rep(n);
    std::iota(rep.begin(), rep.end(), 0);
    auto root = [&](int v) {
      while (rep[v] != v) v = rep[v] = rep[rep[v]];
      return v;
    };
    for (int i = 0; i < p; ++i)
      if (mask >> i & 1) {
        int a = root(pairs[i].first), b = root(pairs[i].second);
        if (a != b) rep[std::max(a, b)] = std::min(a, b);
      }
    for (int v = 1; v < n; ++v)
      if (root(v) != root(0)) return false;
    return true;
  };

  for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << p); ++mask) {
    if (!connected_mask(mask)) continue;
    bool canonical = true;
    std::vector<std::size_t> automorphisms;
    for (std::size_t s = 0; s < perms.size(); ++s) {
      const std::uint32_t image = apply_edges(s, mask);
      if (image < mask) {
        canonical = false;
        break;
      }
      if (image == mask) automorphisms.push_back(s);
    }
    if (!canonical) continue;

    std::vector<std::pair<Label, Label>> edges;
    for (int i = 0; i < p; ++i)
      if (mask >> i & 1)
        edges.emplace_back(alphabet[pairs[i].first], alphabet[pairs[i].second]);

    for (std::uint32_t tmask = 0; tmask < (std::uint32_t{1} << n); ++tmask) {
      if (std::popcount(tmask) % 2 == 1) continue;  // connected: even overall
      bool t_canonical = true;
      for (std::size_t s : automorphisms)
        if (apply_vertices(s, tmask) < tmask) {
          t_canonical = false;
          break;
        }
      if (!t_canonical) continue;
      std::vector<Label> terminals;
      for (int v = 0; v < n; ++v)
        if (tmask >> v & 1) terminals.push_back(alphabet[v]);
      std::vector<Label> vertices(alphabet.begin(), alphabet.begin() + n);
      out.push_back(build_graft(vertices, edges, terminals));
    }
  }
  return out;
}

// deterministic two-coloring; nullopt when an odd cycle exists
std::optional<std::pair<VertexSet, VertexSet>> bipartition(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<int> side(n, -1);
  for (VertexIx root = 0; root < n; ++root) {
    if (side[root] >= 0) continue;
    side[root] = 0;
    std::vector<VertexIx> queue{root};
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
      VertexIx v = queue[qi];
      for (const auto& [w, id] : g.incident(v)) {
        if (side[w] < 0) {
          side[w] = 1 - side[v];
          queue.push_back(w);
        } else if (side[w] == side[v]) {
          return std::nullopt;
        }
      }
    }
  }
  VertexSet a, b;
  for (VertexIx v = 0; v < n; ++v) (side[v] == 0 ? a : b).push_back(v);
  return std::make_pair(std::move(a), std::move(b));
}

std::optional<BipartiteGraft> as_bipartite(const Graft& g) {
  auto classes = bipartition(g.graph());
  if (!classes) return std::nullopt;
  return BipartiteGraft::make(g, classes->first, classes->second);
}

// greedy extreme growth without the color-class restriction
VertexSet grow_extreme_general(const Graft& g, VertexIx seed) {
  VertexSet x{seed};
  for (VertexIx v = 0; v < g.graph().vertex_count(); ++v) {
    if (v == seed) continue;
    bool blocked = false;
    for (VertexIx w : x) {
      auto d = join_distance(g, w, v);
      if (d && *d < 0) {
        blocked = true;
        break;
      }
    }
    if (!blocked) x.push_back(v);
    std::sort(x.begin(), x.end());
  }
  return x;
}

VertexSet map_by_labels(const Graph& from, const Graph& to,
                        std::span<const VertexIx> xs) {
  VertexSet out;
  for (VertexIx v : xs) out.push_back(to.index_of(from.label(v)));
  return setops::sorted_unique(std::move(out));
}

VertexSet path_vertices(const Graph& g, VertexIx from, const EdgeIds& path) {
  VertexSet out{from};
  VertexIx cur = from;
  for (EdgeId id : path) {
    cur = g.edge(id).other(cur);
    out.push_back(cur);
  }
  return setops::sorted_unique(std::move(out));
}

std::optional<int> min_over(const Graft& g, std::span<const VertexIx> xs,
                            VertexIx y) {
  std::optional<int> best;
  for (VertexIx x : xs) {
    auto d = join_distance(g, x, y);
    if (d && (!best || *d < *best)) best = *d;
  }
  return best;
}

}  // namespace

const std::vector<Graft>& exhaustive_connected_grafts(int max_n) {
  static std::mutex mu;
  static std::map<int, std::vector<Graft>> cache;
  std::scoped_lock lock(mu);
  const int n = std::clamp(max_n, 0, 6);
  auto it = cache.find(n);
  if (it == cache.end()) {
    std::vector<Graft> all;
    for (int k = 1; k <= n; ++k) {
      auto part = enumerate_connected_grafts(k);
      std::move(part.begin(), part.end(), std::back_inserter(all));
    }
    it = cache.emplace(n, std::move(all)).first;
  }
  return it->second;
}

// ------------------------------------------------------------- checkers

VerificationReport check_join_equivalence(const Options& opts) {
  Recorder rec("join-equivalence");
  auto violation = [](const GraftDocument& d) -> std::optional<std::string> {
    try {
      Graft g = document_to_graft(d);
      if (g.graph().edge_count() > kBruteforceEdgeLimit) return std::nullopt;
      const int oracle = min_join_bruteforce(g).size();
      const int solved = min_join(g).size();
      if (oracle != solved)
        return "oracle " + std::to_string(oracle) + " vs solver " +
               std::to_string(solved);
      return std::nullopt;
    } catch (const GraftError&) {
      return std::nullopt;
    }
  };
  auto verify_one = [&](const Graft& g) {
    const GraftDocument doc = document_from(g);
    try {
      const Join oracle_join = min_join_bruteforce(g);
      const Join solved = min_join(g);
      rec.check(is_join(g, oracle_join.edges) && is_join(g, solved.edges) &&
                    oracle_join.size() == solved.size(),
                doc, "minimum-join-size",
                "oracle " + std::to_string(oracle_join.size()) + " vs solver " +
                    std::to_string(solved.size()),
                violation);
    } catch (const GraftError& e) {
      rec.note_failure(doc, "minimum-join-size", describe(e));
    }
  };

  for (const Graft& g : exhaustive_connected_grafts(std::min(opts.max_n, 6)))
    verify_one(g);
  RandomFamily fam;
  fam.max_n = std::min(opts.max_n, 10);
  fam.max_m = 20;
  for (int t = 0; t < opts.trials; ++t)
    verify_one(document_to_graft(random_doc(fam, mix_seed(opts.seed, t))));
  return rec.report;
}

VerificationReport check_distance_tables(const Options& opts, int mutation_offset) {
  Recorder rec("distance-tables");

  auto violation = [mutation_offset](const GraftDocument& d)
      -> std::optional<std::string> {
    try {
      Graft g = document_to_graft(d);
      const Join f = min_join(g);
      for (VertexIx r = 0; r < g.graph().vertex_count(); ++r) {
        const DistanceTable table = f_distance_from(g, f, r);
        const auto oracle =
            oracle::min_simple_path_weights(g.graph(), f.edges, r);
        for (VertexIx v = 0; v < g.graph().vertex_count(); ++v) {
          const bool have = table.has(v);
          if (have != oracle[v].has_value())
            return "reachability mismatch at " + g.graph().label(v);
          if (!have) continue;
          int got = table.at(v);
          if (v != r) got += mutation_offset;
          if (got != *oracle[v])
            return "dist(" + g.graph().label(r) + "," + g.graph().label(v) +
                   ") = " + std::to_string(got) + ", paths give " +
                   std::to_string(*oracle[v]);
        }
      }
      return std::nullopt;
    } catch (const GraftError&) {
      return std::nullopt;
    }
  };

  auto verify_one = [&](const Graft& g, bool bipartite_classes) {
    const GraftDocument doc = document_from(g);
    Join f;
    try {
      f = min_join(g);
    } catch (const GraftError& e) {
      rec.note_failure(doc, "distance-equals-shortest-path", describe(e));
      return;
    }
    const int n = g.graph().vertex_count();
    std::vector<DistanceTable> tables;
    for (VertexIx r = 0; r < n; ++r) {
      tables.push_back(f_distance_from(g, f, r));
      const auto oracle = oracle::min_simple_path_weights(g.graph(), f.edges, r);
      bool ok = true;
      std::string witness;
      for (VertexIx v = 0; v < n; ++v) {
        const bool have = tables.back().has(v);
        if (have != oracle[v].has_value()) {
          ok = false;
          witness = "reachability mismatch at " + g.graph().label(v);
          break;
        }
        if (!have) continue;
        int got = tables.back().at(v);
        if (v != r) got += mutation_offset;
        if (got != *oracle[v]) {
          ok = false;
          witness = "dist(" + g.graph().label(r) + "," + g.graph().label(v) +
                    ") = " + std::to_string(got) + ", paths give " +
                    std::to_string(*oracle[v]);
          break;
        }
      }
      rec.check(ok, doc, "distance-equals-shortest-path", witness, violation);
    }

    // symmetry
    bool symmetric = true;
    for (VertexIx x = 0; x < n && symmetric; ++x)
      for (VertexIx y = x + 1; y < n && symmetric; ++y) {
        if (tables[x].has(y) != tables[y].has(x)) symmetric = false;
        else if (tables[x].has(y) && tables[x].at(y) != tables[y].at(x))
          symmetric = false;
      }
    rec.check(symmetric, doc, "distance-symmetry", "asymmetric table");

    // parity along the two-coloring
    if (bipartite_classes) {
      auto classes = bipartition(g.graph());
      bool parity = true;
      if (classes) {
        for (VertexIx x = 0; x < n && parity; ++x)
          for (VertexIx y = x + 1; y < n && parity; ++y) {
            if (!tables[x].has(y)) continue;
            const bool same =
                setops::contains(classes->first, x) ==
                setops::contains(classes->first, y);
            if (((tables[x].at(y) % 2) != 0) == same) parity = false;
          }
      }
      rec.check(parity, doc, "distance-parity", "parity off the two-coloring");
    }

    // composable triangles on tiny instances
    if (n <= 6) {
      std::map<std::pair<VertexIx, VertexIx>, std::vector<EdgeIds>> shortest;
      for (VertexIx x = 0; x < n; ++x)
        for (VertexIx y = 0; y < n; ++y) {
          if (x == y || !tables[x].has(y)) continue;
          std::vector<EdgeIds> keep;
          for (const EdgeIds& p : oracle::all_simple_paths(g.graph(), x, y))
            if (f_weight(g.graph(), f.edges, p) == tables[x].at(y))
              keep.push_back(p);
          shortest[{x, y}] = std::move(keep);
        }
      bool triangle = true;
      std::string witness;
      for (VertexIx x = 0; x < n && triangle; ++x)
        for (VertexIx y = 0; y < n && triangle; ++y)
          for (VertexIx z = 0; z < n && triangle; ++z) {
            if (x == y || y == z || x == z) continue;
            if (!tables[x].has(y) || !tables[y].has(z) || !tables[x].has(z))
              continue;
            bool composable = false;
            for (const EdgeIds& p1 : shortest[{x, y}]) {
              const VertexSet v1 = path_vertices(g.graph(), x, p1);
              for (const EdgeIds& p2 : shortest[{y, z}]) {
                const VertexSet v2 = path_vertices(g.graph(), y, p2);
                auto overlap = setops::set_intersection(v1, v2);
                if (overlap == VertexSet{y}) {
                  composable = true;
                  break;
                }
              }
              if (composable) break;
            }
            if (composable &&
                tables[x].at(z) > tables[x].at(y) + tables[y].at(z)) {
              triangle = false;
              witness = "dist(" + g.graph().label(x) + "," + g.graph().label(z) +
                        ") exceeds a composable sum";
            }
          }
      rec.check(triangle, doc, "composable-triangle", witness);
    }
  };

  for (const Graft& g : exhaustive_connected_grafts(std::min(opts.max_n, 6)))
    verify_one(g, true);
  RandomFamily fam;
  fam.max_n = std::min(opts.max_n, 10);
  fam.max_m = 20;
  fam.densities = {0.3, 0.5, 0.7};
  for (int t = 0; t < opts.trials; ++t) {
    fam.bipartite = (t % 2 == 0);
    verify_one(document_to_graft(random_doc(fam, mix_seed(opts.seed ^ 0xd15, t))),
               fam.bipartite);
  }
  return rec.report;
}

VerificationReport check_switching(const Options& opts) {
  Recorder rec("join-switching");
  RandomFamily fam;
  fam.max_n = std::min(opts.max_n, 8);
  fam.max_m = 14;
  fam.densities = {0.5, 0.7, 0.9};

  for (int t = 0; t < opts.trials; ++t) {
    const GraftDocument doc = random_doc(fam, mix_seed(opts.seed ^ 0x51c, t));
    const Graft g = document_to_graft(doc);
    const Graph& graph = g.graph();
    const Join f = min_join(g);
    const int n = graph.vertex_count();

    bool first_pair = true;
    for (VertexIx x = 0; x < n; ++x)
      for (VertexIx y = x + 1; y < n; ++y) {
        if (!graph.same_component(x, y)) continue;
        try {
          const JoinSwitch s = join_switch(g, f, x, y);
          const auto nu = oracle::min_join_size_enumerated(
              graph, s.graft.terminals(), kBruteforceEdgeLimit);
          rec.check(is_join(s.graft, s.join.edges) && nu &&
                        s.join.size() == *nu &&
                        s.path.weight == *join_distance(g, x, y),
                    doc, "switched-join-minimum",
                    "switch at " + graph.label(x) + "," + graph.label(y));
          if (first_pair) {
            first_pair = false;
            const JoinSwitch back = join_switch(s.graft, s.join, y, x);
            rec.check(back.graft.terminals().size() == g.terminals().size() &&
                          std::equal(g.terminals().begin(), g.terminals().end(),
                                     back.graft.terminals().begin()) &&
                          back.join.size() == f.size(),
                      doc, "switch-involution",
                      "double switch at " + graph.label(x) + "," + graph.label(y));

            // pointwise shift re-derived from path minima alone
            const auto before =
                oracle::min_simple_path_weights(graph, f.edges, x);
            const auto after =
                oracle::min_simple_path_weights(graph, s.join.edges, y);
            bool shift = true;
            for (VertexIx z = 0; z < n; ++z) {
              if (before[z].has_value() != after[z].has_value()) shift = false;
              else if (before[z] && *after[z] != *before[z] - s.path.weight)
                shift = false;
            }
            rec.check(shift, doc, "switch-shifts-path-minima",
                      "switch at " + graph.label(x) + "," + graph.label(y));
          }
        } catch (const GraftError& e) {
          rec.note_failure(doc, "switched-join-minimum", describe(e));
        }
      }

    for (VertexIx r = 0; r < n; ++r) {
      if (!is_primal(g, r)) continue;
      const RootProfile profile = root_profile(g, f, r);
      for (VertexIx r2 : profile.zero_part) {
        if (r2 == r) continue;
        try {
          const JoinSwitch shifted = tower_shift(g, f, r, r2);
          const RootProfile after = root_profile(shifted.graft, shifted.join, r2);
          rec.check(is_primal(shifted.graft, r2) &&
                        after.zero_part == profile.zero_part &&
                        after.negative_part == profile.negative_part,
                    doc, "tower-shift-preserves-parts",
                    "shift " + graph.label(r) + " to " + graph.label(r2));
        } catch (const GraftError& e) {
          rec.note_failure(doc, "tower-shift-preserves-parts", describe(e));
        }
      }
    }
  }
  return rec.report;
}

VerificationReport check_circuit_criteria(const Options& opts) {
  Recorder rec("circuit-criteria");

  auto verify_one = [&](const Graft& g) {
    const GraftDocument doc = document_from(g);
    const Graph& graph = g.graph();
    const auto circuits = oracle::circuit_masks(graph);
    const Join f = min_join(g);
    const auto fmask = oracle::ids_to_mask(graph, f.edges);
    const int nu = f.size();

    auto weight = [&](oracle::SubsetMask circuit, oracle::SubsetMask join) {
      return std::popcount(circuit) -
             2 * std::popcount(static_cast<oracle::SubsetMask>(circuit & join));
    };

    bool min_has_no_negative = true;
    for (const auto c : circuits)
      if (weight(c, fmask) < 0) min_has_no_negative = false;
    rec.check(min_has_no_negative, doc, "minimum-join-no-negative-circuit",
              "negative circuit against a minimum join");

    bool both_directions = true;
    std::string witness;
    oracle::for_each_join_mask(
        graph, g.terminals(), kBruteforceEdgeLimit,
        [&](oracle::SubsetMask join, int size) {
          bool negative = false;
          for (const auto c : circuits)
            if (weight(c, join) < 0) {
              negative = true;
              break;
            }
          if ((size == nu) == negative && both_directions) {
            both_directions = false;
            witness = "join of size " + std::to_string(size) +
                      (negative ? " minimum yet negative circuit exists"
                                : " not minimum yet no negative circuit");
          }
        });
    rec.check(both_directions, doc, "minimum-iff-no-negative-circuit", witness);

    bool toggles = true;
    for (const auto c : circuits) {
      if (weight(c, fmask) != 0) continue;
      const auto toggled = fmask ^ c;
      const EdgeIds ids = oracle::ids_from_mask(graph, toggled);
      if (std::popcount(toggled) != nu || !is_join(g, ids)) toggles = false;
    }
    rec.check(toggles, doc, "zero-circuit-toggle",
              "toggling a zero circuit left the minimum");
  };

  for (const Graft& g : exhaustive_connected_grafts(std::min(opts.max_n, 6)))
    verify_one(g);
  RandomFamily fam;
  fam.max_n = std::min(opts.max_n, 8);
  fam.max_m = 16;
  fam.densities = {0.4, 0.7, 1.0};
  for (int t = 0; t < opts.trials; ++t)
    verify_one(document_to_graft(random_doc(fam, mix_seed(opts.seed ^ 0xc1c, t))));
  return rec.report;
}

VerificationReport check_extreme_sets(const Options& opts) {
  Recorder rec("extreme-sets");
  RandomFamily fam;
  fam.max_n = std::min(opts.max_n, 8);
  fam.max_m = 12;
  fam.bipartite = true;
  fam.densities = {0.4, 0.6, 0.8};

  for (int t = 0; t < opts.trials; ++t) {
    const GraftDocument doc = random_doc(fam, mix_seed(opts.seed ^ 0xe57, t));
    const BipartiteGraft g = document_to_bipartite(doc);
    const Join f = min_join(g.graft());
    const int n = g.graph().vertex_count();

    std::set<VertexSet> grown;
    for (VertexIx seed = 0; seed < n; ++seed) {
      try {
        grown.insert(grow_maximal_bipartitic_extreme(g, f, seed));
      } catch (const GraftError& e) {
        rec.note_failure(doc, "greedy-growth", describe(e));
      }
    }

    bool first = true;
    for (const VertexSet& x : grown) {
      rec.check(is_maximal_bipartitic_extreme(g, f, x), doc,
                "grown-set-maximal", label_set_to_string(g.graph(), x));

      // subset closure
      bool closed = true;
      if (x.size() <= 5) {
        for (std::uint32_t sub = 0; sub < (std::uint32_t{1} << x.size()); ++sub) {
          VertexSet y;
          for (std::size_t i = 0; i < x.size(); ++i)
            if (sub >> i & 1) y.push_back(x[i]);
          if (!is_extreme(g.graft(), f, y)) closed = false;
        }
      } else {
        for (int k = 0; k < 10; ++k) {
          VertexSet y;
          for (std::size_t i = 0; i < x.size(); ++i)
            if (mix_seed(opts.seed, t * 100 + k * 10 + i) % 2) y.push_back(x[i]);
          if (!is_extreme(g.graft(), f, y)) closed = false;
        }
      }
      rec.check(closed, doc, "extreme-subset-closure",
                label_set_to_string(g.graph(), x));

      ExtremePartition part;
      try {
        part = extreme_partition(g, f, x);
      } catch (const GraftError& e) {
        rec.note_failure(doc, "extreme-partition", describe(e));
        continue;
      }
      const FactorComponents fc = factor_components(g.graft());
      bool fringe_trivial = true;
      for (VertexIx v : part.fringe)
        if (!setops::contains(fc.trivial, v)) fringe_trivial = false;
      rec.check(edges_between(g.graph(), part.below, part.fringe).empty() &&
                    fringe_trivial,
                doc, "maximal-extreme-fringe-trivial",
                label_set_to_string(g.graph(), part.fringe));

      // path weights once the fringe region is padded with fresh vertices
      if (first && n <= 7) {
        first = false;
        try {
          std::vector<Label> added{"z0", "z1"};
          std::vector<std::pair<Label, Label>> added_edges;
          for (std::size_t i = 0; i < added.size(); ++i) {
            const VertexIx target =
                x[mix_seed(opts.seed, t * 31 + i) % x.size()];
            added_edges.emplace_back(added[i], g.graph().label(target));
          }
          const BipartiteGraft padded = fringe_add(g, x, added, added_edges);
          const Graph& pg = padded.graph();
          const Join pf = Join{f.edges};
          const VertexSet px = map_by_labels(g.graph(), pg, x);
          const VertexSet py = map_by_labels(g.graph(), pg, part.below);
          VertexSet pz = map_by_labels(g.graph(), pg, part.fringe);
          for (const Label& l : added) pz.push_back(pg.index_of(l));
          pz = setops::sorted_unique(std::move(pz));

          bool weights_ok = true;
          for (const EdgeIds& c : oracle::all_circuits(pg)) {
            VertexSet vs;
            for (EdgeId id : c) {
              vs.push_back(pg.edge(id).u);
              vs.push_back(pg.edge(id).v);
            }
            vs = setops::sorted_unique(std::move(vs));
            if (!setops::intersects(vs, pz)) continue;
            if (f_weight(pg, pf.edges, c) <= 0) weights_ok = false;
          }
          const VertexSet xz = setops::set_union(px, pz);
          for (VertexIx a : px)
            for (VertexIx b : xz) {
              if (a == b) continue;
              for (const EdgeIds& path : oracle::all_simple_paths(pg, a, b)) {
                const VertexSet vs = path_vertices(pg, a, path);
                if (!setops::intersects(vs, pz)) continue;
                if (f_weight(pg, pf.edges, path) <= 0) weights_ok = false;
              }
            }
          for (VertexIx y : py) {
            const auto bound = min_over(padded.graft(), px, y);
            if (!bound) continue;
            for (VertexIx a : px)
              for (const EdgeIds& path : oracle::all_simple_paths(pg, y, a)) {
                const VertexSet vs = path_vertices(pg, y, path);
                if (!setops::intersects(vs, pz)) continue;
                if (f_weight(pg, pf.edges, path) <= *bound) weights_ok = false;
              }
          }
          rec.check(weights_ok, doc, "padded-region-path-weights",
                    label_set_to_string(g.graph(), x));
        } catch (const GraftError& e) {
          rec.note_failure(doc, "padded-region-path-weights", describe(e));
        }
      }
    }
  }
  return rec.report;
}

VerificationReport check_combic_skeletons(const Options& opts) {
  Recorder rec("combic-skeletons");
  RandomFamily fam;
  fam.max_n = std::min(opts.max_n, 8);
  fam.max_m = 12;
  fam.densities = {0.4, 0.6, 0.8};

  for (int t = 0; t < opts.trials; ++t) {
    fam.bipartite = (t % 3 != 0);
    const GraftDocument doc = random_doc(fam, mix_seed(opts.seed ^ 0xc0b, t));
    const Graft g = document_to_graft(doc);
    const Join f = min_join(g);

    std::set<VertexSet> candidates;
    candidates.insert({});
    if (fam.bipartite) {
      const BipartiteGraft bg = document_to_bipartite(doc);
      for (VertexIx r = 0; r < g.graph().vertex_count(); ++r) {
        candidates.insert(root_profile(g, f, r).zero_part);
        try {
          candidates.insert(grow_maximal_bipartitic_extreme(bg, f, r));
        } catch (const GraftError&) {
        }
      }
    }

    for (const VertexSet& x : candidates) {
      if (!is_combic(g, f, x)) continue;
      Skeleton skeleton;
      try {
        skeleton = skeleton_of(g, f, x);
      } catch (const GraftError& e) {
        rec.note_failure(doc, "skeleton-build", describe(e));
        continue;
      }
      const Graph& sg = skeleton.graft.graph();
      if (sg.edge_count() <= kBruteforceEdgeLimit) {
        const auto nu = oracle::min_join_size_enumerated(
            sg, skeleton.graft.graft().terminals(), kBruteforceEdgeLimit);
        rec.check(nu && *nu == skeleton.join.size(), doc,
                  "skeleton-join-minimum",
                  label_set_to_string(g.graph(), x));
      }

      const ComponentPartition parts = components_with_parity(g, x);
      for (std::size_t i : parts.odd_indices) {
        const Tooth tooth = tooth_extract(g, f, x, parts.components[i]);
        const auto nu = oracle::min_join_size_enumerated(
            tooth.graft.graph(), tooth.graft.terminals(), kBruteforceEdgeLimit);
        rec.check(nu && *nu == tooth.join.size(), doc, "tooth-join-minimum",
                  label_set_to_string(g.graph(), parts.components[i]));
      }
      for (std::size_t i : parts.even_indices) {
        const VertexSet& comp = parts.components[i];
        const Graph sub = g.graph().induced_subgraph(comp);
        VertexSet terminals;
        for (VertexIx v : comp)
          if (g.is_terminal(v))
            terminals.push_back(sub.index_of(g.graph().label(v)));
        const EdgeIds inside =
            setops::set_intersection(induced_edges(g.graph(), comp), f.edges);
        const auto nu = oracle::min_join_size_enumerated(
            sub, setops::sorted_unique(std::move(terminals)),
            kBruteforceEdgeLimit);
        rec.check(nu && *nu == static_cast<int>(inside.size()), doc,
                  "even-component-join-minimum",
                  label_set_to_string(g.graph(), comp));
      }

      // quasicomb bounds on the skeleton
      bool bounds = true;
      const Graft& sk = skeleton.graft.graft();
      for (VertexIx a : skeleton.graft.class_a())
        for (VertexIx b : skeleton.graft.class_a()) {
          auto d = join_distance(sk, a, b);
          if (d && *d < 0) bounds = false;
        }
      for (VertexIx a : skeleton.graft.class_a())
        for (VertexIx b : skeleton.graft.class_b()) {
          auto d = join_distance(sk, a, b);
          if (d && *d < -1) bounds = false;
        }
      for (VertexIx a : skeleton.graft.class_b())
        for (VertexIx b : skeleton.graft.class_b()) {
          auto d = join_distance(sk, a, b);
          if (d && *d < -2) bounds = false;
        }
      rec.check(bounds, doc, "skeleton-distance-bounds",
                label_set_to_string(g.graph(), x));
    }
  }
  return rec.report;
}

VerificationReport check_fringe(const Options& opts) {
  Recorder rec("fringe");
  RandomFamily fam;
  fam.max_n = std::min(opts.max_n, 7);
  fam.max_m = 10;
  fam.bipartite = true;
  fam.densities = {0.5, 0.7};

  int produced = 0;
  for (int t = 0; produced < opts.trials && t < opts.trials * 4; ++t) {
    const GraftDocument doc = random_doc(fam, mix_seed(opts.seed ^ 0xf11, t));
    const BipartiteGraft g = document_to_bipartite(doc);
    const Join f = min_join(g.graft());
    const VertexIx seed =
        static_cast<VertexIx>(mix_seed(opts.seed, t) % g.graph().vertex_count());
    VertexSet x;
    try {
      x = grow_maximal_bipartitic_extreme(g, f, seed);
    } catch (const GraftError& e) {
      rec.note_failure(doc, "fringe-growth", describe(e));
      continue;
    }

    const int added_count = 1 + static_cast<int>(mix_seed(opts.seed, t * 7) % 2);
    std::vector<Label> added;
    std::vector<std::pair<Label, Label>> added_edges;
    for (int i = 0; i < added_count; ++i) {
      added.push_back("z" + std::to_string(i));
      if (mix_seed(opts.seed, t * 13 + i) % 4 != 0) {
        const VertexIx target = x[mix_seed(opts.seed, t * 17 + i) % x.size()];
        added_edges.emplace_back(added.back(), g.graph().label(target));
      }
    }

    BipartiteGraft padded;
    try {
      padded = fringe_add(g, x, added, added_edges);
    } catch (const GraftError& e) {
      rec.note_failure(doc, "fringe-addition", describe(e));
      continue;
    }
    const GraftDocument padded_doc = document_from(padded);
    const Join pf = Join{f.edges};
    const VertexSet px = map_by_labels(g.graph(), padded.graph(), x);
    const ExtremePartition part = extreme_partition(padded, pf, px);
    if (part.fringe.empty()) continue;
    ++produced;

    const auto joins_before =
        oracle::all_min_joins(g.graph(), g.graft().terminals(), kBruteforceEdgeLimit);
    const auto joins_padded = oracle::all_min_joins(
        padded.graph(), padded.graft().terminals(), kBruteforceEdgeLimit);
    rec.check(joins_before == joins_padded, padded_doc,
              "fringe-addition-preserves-minimum-joins",
              std::to_string(joins_before.size()) + " vs " +
                  std::to_string(joins_padded.size()));

    BipartiteGraft trimmed;
    try {
      trimmed = fringe_remove(padded, px);
    } catch (const GraftError& e) {
      rec.note_failure(padded_doc, "fringe-removal", describe(e));
      continue;
    }
    const auto joins_trimmed = oracle::all_min_joins(
        trimmed.graph(), trimmed.graft().terminals(), kBruteforceEdgeLimit);
    rec.check(joins_padded == joins_trimmed, padded_doc,
              "fringe-removal-preserves-minimum-joins",
              std::to_string(joins_padded.size()) + " vs " +
                  std::to_string(joins_trimmed.size()));

    bool dists = true;
    const VertexSet tx = map_by_labels(padded.graph(), trimmed.graph(), px);
    for (VertexIx y : part.below) {
      const Label label = padded.graph().label(y);
      const auto before = min_over(padded.graft(), px, y);
      const auto after =
          min_over(trimmed.graft(), tx, trimmed.graph().index_of(label));
      if (before != after) dists = false;
    }
    rec.check(dists, padded_doc, "fringe-preserves-distances", "");
  }
  return rec.report;
}

VerificationReport check_rootlization(const Options& opts) {
  Recorder rec("rootlization");
  RandomFamily fam;
  fam.max_n = std::min(opts.max_n, 7);
  fam.max_m = 12;
  fam.densities = {0.4, 0.6, 0.8};

  for (int t = 0; t < opts.trials; ++t) {
    const bool bipartite_trial = (t % 2 == 0);
    fam.bipartite = bipartite_trial;
    const GraftDocument doc = random_doc(fam, mix_seed(opts.seed ^ 0x107, t));
    const Graft g = document_to_graft(doc);
    const Join f = min_join(g);
    const VertexIx seed =
        static_cast<VertexIx>(mix_seed(opts.seed, t * 3) % g.graph().vertex_count());

    VertexSet x;
    bool maximal_bipartitic = false;
    if (bipartite_trial) {
      const BipartiteGraft bg = document_to_bipartite(doc);
      x = grow_maximal_bipartitic_extreme(bg, f, seed);
      maximal_bipartitic = true;
    } else {
      x = grow_extreme_general(g, seed);
      // any subset of an extreme set is still a legal mount
      VertexSet trimmed;
      for (std::size_t i = 0; i < x.size(); ++i)
        if (mix_seed(opts.seed, t * 19 + i) % 3 != 0) trimmed.push_back(x[i]);
      if (!trimmed.empty()) x = trimmed;
    }

    RootlizedGraft rooted;
    try {
      rooted = rootlize(g, x, "_r", "_s");
    } catch (const GraftError& e) {
      rec.note_failure(doc, "rootlize", describe(e));
      continue;
    }
    const Graph& rg = rooted.graft.graph();

    EdgeId root_edge = -1;
    for (const auto& [w, id] : rg.incident(rooted.root))
      if (w == rooted.attachment) root_edge = id;

    const auto joins_orig =
        oracle::all_min_joins(g.graph(), g.terminals(), kBruteforceEdgeLimit);
    std::vector<EdgeIds> expected;
    for (const EdgeIds& j : joins_orig) {
      EdgeIds lifted = j;
      lifted.push_back(root_edge);
      expected.push_back(setops::sorted_unique(std::move(lifted)));
    }
    std::sort(expected.begin(), expected.end());
    const auto joins_rooted = oracle::all_min_joins(
        rg, rooted.graft.terminals(), kBruteforceEdgeLimit + 2);
    rec.check(expected == joins_rooted, doc, "rootlization-join-form",
              std::to_string(expected.size()) + " vs " +
                  std::to_string(joins_rooted.size()));

    rec.check(join_distance(rooted.graft, rooted.root, rooted.attachment) == -1,
              doc, "root-attachment-distance", "");
    bool dist_ok = true;
    for (VertexIx v = 0; v < g.graph().vertex_count(); ++v) {
      const auto expect = min_over(g, x, v);
      const auto got =
          join_distance(rooted.graft, rooted.root, rooted.vertex_map[v]);
      if (expect != got) dist_ok = false;
    }
    rec.check(dist_ok, doc, "root-distance-is-mount-minimum", "");

    if (maximal_bipartitic) {
      const Join rf = min_join(rooted.graft);
      const RootProfile profile = root_profile(rooted.graft, rf, rooted.root);
      VertexSet expected_zero = rooted.mount;
      expected_zero.push_back(rooted.root);
      expected_zero = setops::sorted_unique(std::move(expected_zero));
      const BipartiteGraft bg = document_to_bipartite(doc);
      const ExtremePartition part = extreme_partition(bg, f, x);
      VertexSet expected_negative;
      for (VertexIx v : part.below)
        expected_negative.push_back(rooted.vertex_map[v]);
      expected_negative.push_back(rooted.attachment);
      expected_negative = setops::sorted_unique(std::move(expected_negative));
      rec.check(profile.zero_part == expected_zero &&
                    profile.negative_part == expected_negative &&
                    profile.level0 == expected_zero &&
                    profile.lay0 == expected_negative,
                doc, "rooted-initial-component",
                label_set_to_string(rg, profile.zero_part));
    }
  }
  return rec.report;
}

VerificationReport check_decomposition(const Options& opts) {
  Recorder rec("decomposition");
  RandomFamily fam;
  fam.max_n = std::min(opts.max_n, 9);
  fam.max_m = 14;
  fam.bipartite = true;
  fam.densities = {0.4, 0.6, 0.8};

  for (int t = 0; t < opts.trials; ++t) {
    const GraftDocument doc = random_doc(fam, mix_seed(opts.seed ^ 0xdec, t));
    const BipartiteGraft g = document_to_bipartite(doc);
    const Graph& graph = g.graph();
    const Join f = min_join(g.graft());

    // the production allowed-edge test against the join enumeration
    {
      const auto joins =
          oracle::all_min_joins(graph, g.graft().terminals(), kBruteforceEdgeLimit);
      EdgeIds union_edges;
      for (const EdgeIds& j : joins)
        union_edges = setops::set_union(union_edges, j);
      rec.check(allowed_edges(g.graft()) == union_edges, doc,
                "allowed-edges-match-join-union", "");
    }

    std::set<VertexSet> grown;
    for (VertexIx seed = 0; seed < graph.vertex_count(); ++seed) {
      try {
        grown.insert(grow_maximal_bipartitic_extreme(g, f, seed));
      } catch (const GraftError& e) {
        rec.note_failure(doc, "decomposition-growth", describe(e));
      }
    }

    for (const VertexSet& x : grown) {
      CathedralDecomposition dec;
      try {
        dec = decompose(g, f, x);
      } catch (const GraftError& e) {
        rec.note_failure(doc, "decomposition", describe(e));
        continue;
      }

      rec.check(is_combic(g.graft(), f, x), doc, "spine-set-combic",
                label_set_to_string(graph, x));

      const ComponentPartition parts = components_with_parity(g.graft(), x);
      std::vector<VertexSet> odd;
      for (std::size_t i : parts.odd_indices) odd.push_back(parts.components[i]);
      std::sort(odd.begin(), odd.end());
      std::vector<VertexSet> tooth_sets;
      for (const Tooth& tooth : dec.teeth)
        tooth_sets.push_back(tooth.original_vertices);
      std::sort(tooth_sets.begin(), tooth_sets.end());
      rec.check(odd == tooth_sets, doc, "teeth-are-odd-components", "");

      const VertexSet nx = neighborhood(graph, x);
      for (const Tooth& tooth : dec.teeth) {
        // primality of the tooth via enumerated join sizes
        const Graph& tg = tooth.graft.graph();
        const auto nu = oracle::min_join_size_enumerated(
            tg, tooth.graft.terminals(), kBruteforceEdgeLimit);
        bool primal_by_oracle = nu.has_value();
        if (nu) {
          for (VertexIx v = 0; v < tg.vertex_count() && primal_by_oracle; ++v) {
            if (v == tooth.root) continue;
            VertexSet tt(tooth.graft.terminals().begin(),
                         tooth.graft.terminals().end());
            tt = setops::toggled(tt, tooth.root);
            tt = setops::toggled(tt, v);
            const auto nv =
                oracle::min_join_size_enumerated(tg, tt, kBruteforceEdgeLimit);
            if (!nv || *nv - *nu > 0) primal_by_oracle = false;
          }
        }
        rec.check(primal_by_oracle, doc, "tooth-primal-at-cut-end",
                  label_set_to_string(graph, tooth.original_vertices));

        const Join tooth_join = tooth.join;
        const RootProfile tp = root_profile(tooth.graft, tooth_join, tooth.root);
        bool contained = true;
        for (VertexIx v : setops::set_intersection(nx, tooth.original_vertices))
          if (!setops::contains(tp.zero_part, tg.index_of(graph.label(v))))
            contained = false;
        rec.check(contained, doc, "spine-neighbors-in-tooth-zero-part", "");
      }

      bool evens_trivial = true;
      const FactorComponents fc = factor_components(g.graft());
      for (std::size_t i : parts.even_indices) {
        const VertexSet& comp = parts.components[i];
        if (comp.size() != 1 || !setops::contains(fc.trivial, comp.front()))
          evens_trivial = false;
      }
      rec.check(evens_trivial, doc, "even-components-trivial", "");
    }
  }
  return rec.report;
}

namespace {

// deterministic primal tooth generator; falls back to a lone vertex
ToothSpec make_primal_tooth(std::uint64_t seed, const std::string& prefix,
                            int max_vertices) {
  RandomFamily fam;
  fam.max_n = std::min(max_vertices, 6);
  fam.max_m = 8;
  fam.bipartite = true;
  fam.densities = {0.6, 0.8, 1.0};
  for (int attempt = 0; attempt < 40; ++attempt) {
    GraftDocument doc = attempt < 39
                            ? random_doc(fam, mix_seed(seed, attempt))
                            : GraftDocument{{"w"}, {}, {}, std::nullopt};
    if (!doc.classes) doc.classes = {{doc.vertices.front()}, {}};
    // prefix every label to keep parts disjoint
    auto rename = [&](Label& l) { l = prefix + l; };
    for (auto& l : doc.vertices) rename(l);
    for (auto& [a, b] : doc.edges) {
      rename(a);
      rename(b);
    }
    for (auto& l : doc.terminals) rename(l);
    for (auto& l : doc.classes->first) rename(l);
    for (auto& l : doc.classes->second) rename(l);
    doc.canonicalize();
    const BipartiteGraft bg = document_to_bipartite(doc);
    for (VertexIx r = 0; r < bg.graph().vertex_count(); ++r) {
      if (is_primal(bg.graft(), r)) {
        ToothSpec tooth;
        tooth.graft = bg;
        tooth.root = r;
        return tooth;
      }
    }
  }
  internal_check(false, "primal tooth generation fell through");
  return {};
}

struct SynthesisInstance {
  SynthesisSpec spec;
  std::string description;
};

std::optional<SynthesisInstance> make_synthesis_instance(const Options& opts,
                                                         int trial) {
  RandomFamily fam;
  fam.max_n = std::min(opts.max_n, 8);
  fam.min_n = 2;
  fam.max_m = 10;
  fam.bipartite = true;
  fam.densities = {0.6, 0.8, 1.0};
  for (int attempt = 0; attempt < 12; ++attempt) {
    const std::uint64_t seed = mix_seed(opts.seed ^ 0x5f1, trial * 64 + attempt);
    const GraftDocument doc = random_doc(fam, seed);
    BipartiteGraft base;
    Join f;
    VertexSet x;
    try {
      base = document_to_bipartite(doc);
      f = min_join(base.graft());
      const VertexIx seed_vertex = static_cast<VertexIx>(
          mix_seed(seed, 5) % base.graph().vertex_count());
      x = grow_maximal_bipartitic_extreme(base, f, seed_vertex);
    } catch (const GraftError&) {
      continue;
    }
    Skeleton skeleton;
    try {
      skeleton = skeleton_of(base.graft(), f, x);
    } catch (const GraftError&) {
      continue;
    }

    SynthesisSpec spec;
    spec.comb = skeleton.graft;
    int total_edges = spec.comb.graph().edge_count();
    int index = 0;
    for (VertexIx b : spec.comb.class_b()) {
      const Label b_label = spec.comb.graph().label(b);
      ToothSpec tooth = make_primal_tooth(mix_seed(seed, 100 + index),
                                          "t" + std::to_string(index) + ".", 6);
      total_edges += tooth.graph().edge_count();
      spec.teeth.emplace(b_label, std::move(tooth));
      ++index;
    }
    if (total_edges > kBruteforceEdgeLimit) continue;

    bool ok = true;
    std::set<std::pair<Label, Label>> used;
    std::map<Label, RootProfile> profiles;
    for (const auto& [b_label, tooth] : spec.teeth) {
      const Join tf = min_join(tooth.graft.graft());
      profiles.emplace(b_label,
                       root_profile(tooth.graft.graft(), tf, tooth.root));
    }
    for (const Edge& e : spec.comb.graph().edges()) {
      const VertexIx spine_end = spec.comb.in_class_a(e.u) ? e.u : e.v;
      const VertexIx tooth_end = spec.comb.in_class_a(e.u) ? e.v : e.u;
      const Label spine_label = spec.comb.graph().label(spine_end);
      const Label tooth_label = spec.comb.graph().label(tooth_end);
      const ToothSpec& tooth = spec.teeth.at(tooth_label);
      const VertexSet& zero = profiles.at(tooth_label).zero_part;
      // parallel comb edges need distinct targets
      bool placed = false;
      const std::size_t start = mix_seed(seed, 200 + e.id) % zero.size();
      for (std::size_t k = 0; k < zero.size() && !placed; ++k) {
        const Label target =
            tooth.graph().label(zero[(start + k) % zero.size()]);
        if (used.emplace(spine_label, target).second) {
          spec.attachments[e.id] = target;
          placed = true;
        }
      }
      if (!placed) {
        ok = false;
        break;
      }
    }
    if (!ok) continue;

    SynthesisInstance out;
    out.spec = std::move(spec);
    out.description = "synthesis(trial=" + std::to_string(trial) + ")";
    return out;
  }
  return std::nullopt;
}

}  // namespace

VerificationReport check_synthesis(const Options& opts) {
  Recorder rec("synthesis");

  for (int t = 0; t < opts.trials; ++t) {
    auto instance = make_synthesis_instance(opts, t);
    if (!instance) continue;
    const SynthesisSpec& spec = instance->spec;

    SynthesisEdgeMap edge_map;
    BipartiteGraft result;
    GraftDocument result_doc;
    try {
      result = synthesize(spec, edge_map);
      result_doc = document_from(result);
    } catch (const GraftError& e) {
      rec.note_failure(document_from(spec.comb), "synthesis-build", describe(e));
      continue;
    }

    const Join comb_join = min_join(spec.comb.graft());
    std::map<Label, Join> tooth_joins;
    bool join_inputs_ok = true;
    for (VertexIx b : spec.comb.class_b()) {
      const Label b_label = spec.comb.graph().label(b);
      const ToothSpec& tooth = spec.teeth.at(b_label);
      const EdgeIds cut = boundary_cut(spec.comb.graph(), VertexSet{b});
      const EdgeIds cut_join = setops::set_intersection(cut, comb_join.edges);
      if (cut_join.size() != 1) {
        join_inputs_ok = false;
        break;
      }
      const Label target = spec.attachments.at(cut_join.front());
      const VertexIx cut_end = tooth.graph().index_of(target);
      VertexSet terminals(tooth.graft.graft().terminals().begin(),
                          tooth.graft.graft().terminals().end());
      if (cut_end != tooth.root) {
        terminals = setops::toggled(terminals, tooth.root);
        terminals = setops::toggled(terminals, cut_end);
      }
      const Graft target_graft =
          Graft::make(tooth.graft.graft().graph_ptr(), terminals);
      tooth_joins[b_label] = min_join(target_graft);
    }
    rec.check(join_inputs_ok, result_doc, "comb-join-picks-one-cut-edge", "");
    if (!join_inputs_ok) continue;

    Join combined;
    try {
      combined = synthesis_min_join(spec, comb_join, tooth_joins);
    } catch (const GraftError& e) {
      rec.note_failure(result_doc, "synthesis-minimum-join", describe(e));
      continue;
    }
    {
      const auto nu = oracle::min_join_size_enumerated(
          result.graph(), result.graft().terminals(), kBruteforceEdgeLimit);
      rec.check(nu && *nu == combined.size(), result_doc,
                "synthesis-join-minimum",
                "size " + std::to_string(combined.size()));
    }

    // every minimum join of the synthesis factors into part joins
    {
      std::map<EdgeId, EdgeId> comb_back, tooth_back;
      std::map<EdgeId, Label> tooth_of;
      for (const auto& [comb_id, rid] : edge_map.comb_to_result)
        comb_back[rid] = comb_id;
      for (const auto& [label, m] : edge_map.tooth_to_result)
        for (const auto& [tid, rid] : m) {
          tooth_back[rid] = tid;
          tooth_of[rid] = label;
        }

      bool factorization = true;
      std::string witness;
      const auto all = oracle::all_min_joins(
          result.graph(), result.graft().terminals(), kBruteforceEdgeLimit);
      for (const EdgeIds& j : all) {
        EdgeIds comb_part;
        std::map<Label, EdgeIds> tooth_parts;
        for (EdgeId rid : j) {
          if (comb_back.count(rid)) comb_part.push_back(comb_back.at(rid));
          else tooth_parts[tooth_of.at(rid)].push_back(tooth_back.at(rid));
        }
        comb_part = setops::sorted_unique(std::move(comb_part));
        if (!is_join(spec.comb.graft(), comb_part) ||
            static_cast<int>(comb_part.size()) != comb_join.size()) {
          factorization = false;
          witness = "comb part is not a minimum comb join";
          break;
        }
        for (VertexIx b : spec.comb.class_b()) {
          const Label b_label = spec.comb.graph().label(b);
          const ToothSpec& tooth = spec.teeth.at(b_label);
          const EdgeIds cut = boundary_cut(spec.comb.graph(), VertexSet{b});
          const EdgeIds cut_join = setops::set_intersection(cut, comb_part);
          if (cut_join.size() != 1) {
            factorization = false;
            witness = "tooth cut holds more than one join edge";
            break;
          }
          const Label target = spec.attachments.at(cut_join.front());
          const VertexIx cut_end = tooth.graph().index_of(target);
          VertexSet terminals(tooth.graft.graft().terminals().begin(),
                              tooth.graft.graft().terminals().end());
          if (cut_end != tooth.root) {
            terminals = setops::toggled(terminals, tooth.root);
            terminals = setops::toggled(terminals, cut_end);
          }
          EdgeIds part = setops::sorted_unique(tooth_parts[b_label]);
          if (!is_join(tooth.graph(), terminals, part) ||
              static_cast<int>(part.size()) !=
                  *solve_min_join_size(tooth.graph(), terminals)) {
            factorization = false;
            witness = "tooth part is not minimum for the toggled terminals";
            break;
          }
        }
        if (!factorization) break;
      }
      rec.check(factorization, result_doc, "minimum-joins-factor", witness);

      // every minimum comb join extends to a minimum join of the synthesis
      bool extends = true;
      for (const EdgeIds& cj :
           oracle::all_min_joins(spec.comb.graph(),
                                 spec.comb.graft().terminals(), kBruteforceEdgeLimit)) {
        std::map<Label, Join> joins;
        bool built = true;
        for (VertexIx b : spec.comb.class_b()) {
          const Label b_label = spec.comb.graph().label(b);
          const ToothSpec& tooth = spec.teeth.at(b_label);
          const EdgeIds cut = boundary_cut(spec.comb.graph(), VertexSet{b});
          const EdgeIds cut_join = setops::set_intersection(cut, cj);
          if (cut_join.size() != 1) {
            built = false;
            break;
          }
          const Label target = spec.attachments.at(cut_join.front());
          const VertexIx cut_end = tooth.graph().index_of(target);
          VertexSet terminals(tooth.graft.graft().terminals().begin(),
                              tooth.graft.graft().terminals().end());
          if (cut_end != tooth.root) {
            terminals = setops::toggled(terminals, tooth.root);
            terminals = setops::toggled(terminals, cut_end);
          }
          joins[b_label] =
              min_join(Graft::make(tooth.graft.graft().graph_ptr(), terminals));
        }
        if (!built) {
          extends = false;
          continue;
        }
        try {
          synthesis_min_join(spec, Join{cj}, joins);
        } catch (const GraftError&) {
          extends = false;
        }
      }
      rec.check(extends, result_doc, "comb-joins-extend", "");
    }

    // the spine coordinates round trips: decompose the synthesis and compare
    {
      std::vector<Label> spine_labels;
      for (VertexIx a : spec.comb.class_a())
        spine_labels.push_back(spec.comb.graph().label(a));
      const VertexSet spine = result.graph().indices_of(spine_labels);
      CathedralDecomposition dec;
      try {
        dec = decompose(result, combined, spine);
      } catch (const GraftError& e) {
        rec.note_failure(result_doc, "synthesis-decomposes", describe(e));
        continue;
      }
      rec.check(dec.fringe.empty(), result_doc, "synthesis-fringe-empty", "");

      // teeth must be the tooth grafts, with roots possibly shifted
      bool teeth_match = dec.teeth.size() == spec.teeth.size();
      if (teeth_match) {
        for (const Tooth& tooth : dec.teeth) {
          std::vector<Label> tooth_labels;
          for (VertexIx v : tooth.original_vertices)
            tooth_labels.push_back(result.graph().label(v));
          std::sort(tooth_labels.begin(), tooth_labels.end());
          const ToothSpec* match = nullptr;
          for (const auto& [b_label, ts] : spec.teeth) {
            std::vector<Label> ls(ts.graph().labels().begin(),
                                  ts.graph().labels().end());
            if (ls == tooth_labels) match = &ts;
          }
          if (!match) {
            teeth_match = false;
            break;
          }
          if (!same_labeled_graph(tooth.graft.graph(), match->graph())) {
            teeth_match = false;
            break;
          }
          const Label root_label = tooth.graft.graph().label(tooth.root);
          const Label spec_root = match->graph().label(match->root);
          if (root_label == spec_root) {
            if (!same_labeled_graft(tooth.graft, match->graft.graft()))
              teeth_match = false;
          } else {
            // shifted root: zero/negative parts still agree
            const Join tj = tooth.join;
            const RootProfile got =
                root_profile(tooth.graft, tj, tooth.root);
            const Join sj = min_join(match->graft.graft());
            const RootProfile want =
                root_profile(match->graft.graft(), sj, match->root);
            auto names = [](const Graph& gg, const VertexSet& xs) {
              std::vector<Label> out;
              for (VertexIx v : xs) out.push_back(gg.label(v));
              return out;
            };
            if (names(tooth.graft.graph(), got.zero_part) !=
                    names(match->graph(), want.zero_part) ||
                names(tooth.graft.graph(), got.negative_part) !=
                    names(match->graph(), want.negative_part))
              teeth_match = false;
          }
        }
      }
      rec.check(teeth_match, result_doc, "decompose-synthesize-round-trip", "");

      // skeleton matches the input comb through the tooth correspondence
      bool skeleton_matches = true;
      {
        std::map<Label, Label> tooth_name;  // contracted label -> comb label
        for (const auto& [sk_vertex, members] : dec.skeleton.teeth) {
          std::vector<Label> tooth_labels;
          for (VertexIx v : members)
            tooth_labels.push_back(result.graph().label(v));
          std::sort(tooth_labels.begin(), tooth_labels.end());
          Label found;
          for (const auto& [b_label, ts] : spec.teeth) {
            std::vector<Label> ls(ts.graph().labels().begin(),
                                  ts.graph().labels().end());
            if (ls == tooth_labels) found = b_label;
          }
          if (found.empty()) skeleton_matches = false;
          else
            tooth_name[dec.skeleton.graft.graph().label(sk_vertex)] = found;
        }
        if (skeleton_matches) {
          std::vector<std::pair<Label, Label>> got, want;
          for (const Edge& e : dec.skeleton.graft.graph().edges()) {
            Label lu = dec.skeleton.graft.graph().label(e.u);
            Label lv = dec.skeleton.graft.graph().label(e.v);
            if (tooth_name.count(lu)) lu = tooth_name[lu];
            if (tooth_name.count(lv)) lv = tooth_name[lv];
            if (lv < lu) std::swap(lu, lv);
            got.emplace_back(lu, lv);
          }
          for (const Edge& e : spec.comb.graph().edges()) {
            Label lu = spec.comb.graph().label(e.u);
            Label lv = spec.comb.graph().label(e.v);
            if (lv < lu) std::swap(lu, lv);
            want.emplace_back(lu, lv);
          }
          std::sort(got.begin(), got.end());
          std::sort(want.begin(), want.end());
          skeleton_matches = got == want;
        }
      }
      rec.check(skeleton_matches, result_doc, "skeleton-round-trip", "");
    }
  }

  // removal/decomposition/synthesis round trip on independent instances
  RandomFamily fam;
  fam.max_n = std::min(opts.max_n, 8);
  fam.max_m = 12;
  fam.bipartite = true;
  fam.densities = {0.5, 0.7};
  const int round_trips = std::max(1, opts.trials / 2);
  for (int t = 0; t < round_trips; ++t) {
    const GraftDocument doc = random_doc(fam, mix_seed(opts.seed ^ 0xa7a, t));
    try {
      const BipartiteGraft g = document_to_bipartite(doc);
      const Join f = min_join(g.graft());
      const VertexIx seed =
          static_cast<VertexIx>(mix_seed(opts.seed, t * 5) % g.graph().vertex_count());
      const VertexSet x = grow_maximal_bipartitic_extreme(g, f, seed);
      const BipartiteGraft trimmed = fringe_remove(g, x);
      const Join tf = min_join(trimmed.graft());
      const VertexSet tx = map_by_labels(g.graph(), trimmed.graph(), x);
      const CathedralDecomposition dec = decompose(trimmed, tf, tx);
      const SynthesisSpec spec = spec_from_decomposition(trimmed, dec);
      const BipartiteGraft rebuilt = synthesize(spec);
      rec.check(same_labeled_bipartite(rebuilt, trimmed), doc,
                "remove-decompose-synthesize-round-trip", "");
    } catch (const GraftError& e) {
      rec.note_failure(doc, "remove-decompose-synthesize-round-trip", describe(e));
    }
  }
  return rec.report;
}

namespace {

// verify_sebo at the top level and recursively inside every tooth
bool sebo_everywhere(const BipartiteGraft& g, VertexIx root,
                     std::vector<std::string>& problems) {
  const Join f = min_join(g.graft());
  const SeboReport report = verify_sebo(g.graft(), f, root);
  if (!report.ok()) {
    problems.insert(problems.end(), report.failures.begin(),
                    report.failures.end());
    return false;
  }
  const bool root_in_a = g.in_class_a(root);
  const BipartiteGraft oriented =
      root_in_a ? g
                : BipartiteGraft::make(g.graft(),
                                       VertexSet(g.class_b().begin(), g.class_b().end()),
                                       VertexSet(g.class_a().begin(), g.class_a().end()));
  if (is_comb(oriented, f)) return true;
  const RootProfile profile = root_profile(g.graft(), f, root);
  const CathedralDecomposition dec = decompose(g, f, profile.zero_part);
  bool ok = true;
  for (const Tooth& tooth : dec.teeth)
    ok = sebo_everywhere(tooth_as_bipartite(g, tooth), tooth.root, problems) && ok;
  return ok;
}

void walk_certificate(const PrimalCertificate& cert, Recorder& rec,
                      const GraftDocument& doc) {
  const VertexIx root = cert.comb.graph().index_of(cert.root);
  try {
    const CombReport report = comb_primality_checks(cert.comb, root);
    rec.check(report.primal && report.claims_checked && report.ok(), doc,
              "certificate-comb-claims",
              report.failures.empty() ? "" : report.failures.front());
  } catch (const GraftError& e) {
    rec.note_failure(doc, "certificate-comb-claims", describe(e));
  }
  for (const auto& [label, child] : cert.children)
    walk_certificate(*child, rec, doc);
}

}  // namespace

VerificationReport check_primal_family(const Options& opts) {
  Recorder rec("primal-family");

  auto verify_one = [&](const BipartiteGraft& g) {
    const GraftDocument doc = document_from(g);
    for (VertexIx r = 0; r < g.graph().vertex_count(); ++r) {
      if (!is_primal(g.graft(), r)) continue;
      PrimalCertificate cert;
      try {
        cert = primal_decompose(g, r);
      } catch (const GraftError& e) {
        rec.note_failure(doc, "primal-decomposition", describe(e));
        continue;
      }
      try {
        const BipartiteGraft rebuilt = resynthesize(cert);
        rec.check(same_labeled_bipartite(rebuilt, g), doc,
                  "resynthesis-identity", "root " + g.graph().label(r));
      } catch (const GraftError& e) {
        rec.note_failure(doc, "resynthesis-identity", describe(e));
      }
      std::vector<std::string> problems;
      rec.check(sebo_everywhere(g, r, problems), doc,
                "distance-structure-at-every-level",
                problems.empty() ? "" : problems.front());
      walk_certificate(cert, rec, doc);
    }
  };

  for (const Graft& g : exhaustive_connected_grafts(std::min(opts.max_n, 6)))
    if (auto bg = as_bipartite(g)) verify_one(*bg);

  RandomFamily fam;
  fam.max_n = std::min(opts.max_n, 9);
  fam.max_m = 12;
  fam.bipartite = true;
  fam.densities = {0.6, 0.8, 1.0};
  for (int t = 0; t < opts.trials; ++t) {
    const GraftDocument doc = random_doc(fam, mix_seed(opts.seed ^ 0x8a1, t));
    verify_one(document_to_bipartite(doc));
  }
  return rec.report;
}

VerificationReport check_distance_profiles(const Options& opts) {
  Recorder rec("distance-profiles");
  RandomFamily fam;
  fam.max_n = std::min(opts.max_n, 8);
  fam.max_m = 12;
  fam.bipartite = true;
  fam.densities = {0.5, 0.7, 0.9};

  for (int t = 0; t < opts.trials; ++t) {
    const GraftDocument doc = random_doc(fam, mix_seed(opts.seed ^ 0xa45, t));
    const BipartiteGraft g = document_to_bipartite(doc);
    const Join f = min_join(g.graft());

    std::set<VertexSet> grown;
    for (VertexIx seed = 0; seed < g.graph().vertex_count(); ++seed) {
      try {
        grown.insert(grow_maximal_bipartitic_extreme(g, f, seed));
      } catch (const GraftError&) {
      }
    }
    for (const VertexSet& x : grown) {
      Skeleton skeleton;
      try {
        skeleton = skeleton_of(g.graft(), f, x);
      } catch (const GraftError& e) {
        rec.note_failure(doc, "profile-skeleton", describe(e));
        continue;
      }
      const Graft& sk = skeleton.graft.graft();
      const Join sk_join = skeleton.join;
      rec.check(is_comb(skeleton.graft, sk_join), doc, "skeleton-is-comb",
                label_set_to_string(g.graph(), x));

      bool bounds = true;
      bool comb_exact = true;
      const bool factor_connected =
          factor_components(sk).components.size() == 1 &&
          sk.graph().vertex_count() > 0;
      for (VertexIx a : skeleton.graft.class_a())
        for (VertexIx b : skeleton.graft.class_a()) {
          if (a >= b) continue;
          auto d = join_distance(sk, a, b);
          if (d && *d < 0) bounds = false;
          if (factor_connected && (!d || *d != 0)) comb_exact = false;
        }
      for (VertexIx a : skeleton.graft.class_a())
        for (VertexIx b : skeleton.graft.class_b()) {
          auto d = join_distance(sk, a, b);
          if (d && *d < -1) bounds = false;
          if (factor_connected && (!d || *d != -1)) comb_exact = false;
        }
      for (VertexIx a : skeleton.graft.class_b())
        for (VertexIx b : skeleton.graft.class_b()) {
          if (a >= b) continue;
          auto d = join_distance(sk, a, b);
          if (d && *d < -2) bounds = false;
          if (factor_connected && (!d || (*d != 0 && *d != -2)))
            comb_exact = false;
        }
      rec.check(bounds, doc, "quasicomb-bounds",
                label_set_to_string(g.graph(), x));
      if (factor_connected)
        rec.check(comb_exact, doc, "factor-connected-comb-profile",
                  label_set_to_string(g.graph(), x));
    }
  }
  return rec.report;
}

// --------------------------------------------------------------- suites

std::vector<std::string> suite_names() {
  return {"joins",    "distances", "extreme",   "combic", "fringe",
          "rootlize", "decompose", "synthesis", "primal", "appendix",
          "all"};
}

namespace {

void merge_into(VerificationReport& into, VerificationReport part) {
  into.instances += part.instances;
  for (auto& f : part.failures) {
    f.property = part.suite + "/" + f.property;
    into.failures.push_back(std::move(f));
  }
}

}  // namespace

VerificationReport run_verify_suite(const std::string& suite, const Options& opts) {
  VerificationReport report;
  report.suite = suite;
  if (suite == "joins") {
    merge_into(report, check_join_equivalence(opts));
  } else if (suite == "distances") {
    merge_into(report, check_distance_tables(opts));
    merge_into(report, check_switching(opts));
  } else if (suite == "extreme") {
    merge_into(report, check_extreme_sets(opts));
  } else if (suite == "combic") {
    merge_into(report, check_combic_skeletons(opts));
  } else if (suite == "fringe") {
    merge_into(report, check_fringe(opts));
  } else if (suite == "rootlize") {
    merge_into(report, check_rootlization(opts));
  } else if (suite == "decompose") {
    merge_into(report, check_decomposition(opts));
    merge_into(report, check_distance_profiles(opts));
  } else if (suite == "synthesis") {
    merge_into(report, check_synthesis(opts));
  } else if (suite == "primal") {
    merge_into(report, check_primal_family(opts));
  } else if (suite == "appendix") {
    merge_into(report, check_circuit_criteria(opts));
    merge_into(report, check_distance_profiles(opts));
  } else if (suite == "all") {
    merge_into(report, check_join_equivalence(opts));
    merge_into(report, check_distance_tables(opts));
    merge_into(report, check_switching(opts));
    merge_into(report, check_circuit_criteria(opts));
    merge_into(report, check_extreme_sets(opts));
    merge_into(report, check_combic_skeletons(opts));
    merge_into(report, check_fringe(opts));
    merge_into(report, check_rootlization(opts));
    merge_into(report, check_decomposition(opts));
    merge_into(report, check_synthesis(opts));
    merge_into(report, check_primal_family(opts));
    merge_into(report, check_distance_profiles(opts));
  } else {
    fail(Errc::UnknownSuite, "no suite named '" + suite + "'");
  }
  return report;
}

GraftDocument minimize_witness(
    const GraftDocument& doc,
    const std::function<std::optional<std::string>(const GraftDocument&)>& violation) {
  GraftDocument current = doc;
  bool improved = true;
  int rounds = 0;
  while (improved && rounds++ < 100) {
    improved = false;
    for (const Label& victim : current.vertices) {
      GraftDocument candidate;
      for (const Label& l : current.vertices)
        if (l != victim) candidate.vertices.push_back(l);
      if (candidate.vertices.empty()) continue;
      for (const auto& [a, b] : current.edges)
        if (a != victim && b != victim) candidate.edges.emplace_back(a, b);
      for (const Label& l : current.terminals)
        if (l != victim) candidate.terminals.push_back(l);
      if (current.classes) {
        candidate.classes = {{}, {}};
        for (const Label& l : current.classes->first)
          if (l != victim) candidate.classes->first.push_back(l);
        for (const Label& l : current.classes->second)
          if (l != victim) candidate.classes->second.push_back(l);
      }
      candidate.canonicalize();

      // repair terminal parity per component by dropping the largest terminal
      try {
        const Graph g = Graph::from_labels(candidate.vertices, candidate.edges);
        VertexSet terminals = g.indices_of(candidate.terminals);
        for (const VertexSet& comp : g.components()) {
          VertexSet inside = setops::set_intersection(comp, terminals);
          if (inside.size() % 2 == 1)
            terminals = setops::set_difference(terminals, VertexSet{inside.back()});
        }
        candidate.terminals.clear();
        for (VertexIx v : terminals) candidate.terminals.push_back(g.label(v));
      } catch (const GraftError&) {
        continue;
      }

      if (violation(candidate)) {
        current = std::move(candidate);
        improved = true;
        break;
      }
    }
  }
  return current;
}

std::string report_to_json(const VerificationReport& report) {
  nlohmann::json j;
  j["suite"] = report.suite;
  j["instances"] = report.instances;
  j["failures"] = nlohmann::json::array();
  for (const Failure& f : report.failures) {
    nlohmann::json entry;
    try {
      entry["instance"] = nlohmann::json::parse(f.instance);
    } catch (...) {
      entry["instance"] = f.instance;
    }
    entry["property"] = f.property;
    entry["witness"] = f.witness;
    j["failures"].push_back(std::move(entry));
  }
  return j.dump(2) + "\n";
}

}  // namespace graft::verify
