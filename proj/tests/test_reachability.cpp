#include <gtest/gtest.h>

#include "oracles.hpp"
#include "rainbow_kernels/generators.hpp"
#include "rainbow_kernels/reachability.hpp"
#include "rainbow_kernels/reductions.hpp"

namespace rk = rainbow_kernels;

namespace {

// Golden table for T_5* from exhaustive simple-path enumeration (computed
// independently of this code base): row u, column v.
constexpr int kT5StarRainbow[5][5] = {{0, 1, 1, 1, 0},
                                      {0, 0, 1, 1, 1},
                                      {1, 0, 0, 1, 1},
                                      {1, 1, 0, 0, 1},
                                      {1, 1, 1, 0, 0}};

rk::ColoredDigraph monochromatic_triangle() {
  return rk::ColoredDigraph(3, {{0, 1, 0}, {1, 2, 0}, {2, 0, 0}});
}

rk::Tournament monochromatic_transitive_triangle() {
  return rk::Tournament(rk::ColoredDigraph(3, {{0, 1, 0}, {1, 2, 0}, {0, 2, 0}}));
}

}  // namespace

TEST(Rainbow, SingleColorAdmitsOnlySingleArcs) {
  const auto d = monochromatic_triangle();
  const auto direct = rk::rainbow_reachable(d, 0, 1);
  ASSERT_TRUE(direct);
  EXPECT_EQ(direct->vertices, (std::vector<rk::Vertex>{0, 1}));
  EXPECT_FALSE(rk::rainbow_reachable(d, 0, 2));  // 0 -> 1 -> 2 repeats the color
  EXPECT_FALSE(rk::rainbow_reachable_bruteforce(d, 0, 2));
}

TEST(Rainbow, T5StarGoldenTable) {
  const auto d = rk::t5_star().digraph();
  for (rk::Vertex u = 0; u < 5; ++u) {
    for (rk::Vertex v = 0; v < 5; ++v) {
      if (u == v) continue;
      const auto engine = rk::rainbow_reachable(d, u, v);
      const auto brute = rk::rainbow_reachable_bruteforce(d, u, v);
      EXPECT_EQ(engine.has_value(), kT5StarRainbow[u][v] == 1) << u << "->" << v;
      EXPECT_EQ(brute.has_value(), kT5StarRainbow[u][v] == 1) << u << "->" << v;
      if (engine) {
        EXPECT_FALSE(rk::witness_defect(d, *engine));
      }
      if (brute) {
        EXPECT_FALSE(rk::witness_defect(d, *brute));
      }
    }
  }
  // v2 reaches v1 only through v2 -> v4 -> v1, both arcs dotted.
  EXPECT_FALSE(rk::rainbow_reachable(d, 1, 0));
}

TEST(Rainbow, PathGadgetWithPerfectMatching) {
  const rk::Hypergraph3 h(2, {{1, 2, 3}, {4, 5, 6}});
  const auto r = rk::build_dh(h);
  const auto w = rk::rainbow_reachable(r.digraph, r.x, r.y);
  ASSERT_TRUE(w);
  EXPECT_EQ(w->length(), 6u);
  EXPECT_FALSE(rk::witness_defect(r.digraph, *w));
}

TEST(Rainbow, PreconditionsAndGuards) {
  const auto d = rk::t5_star().digraph();
  EXPECT_THROW(rk::rainbow_reachable(d, 2, 2), rk::PreconditionError);
  EXPECT_THROW(rk::rainbow_reachable(d, 0, 9), rk::PreconditionError);
  const auto big = rk::random_digraph(13, 2, 0.2, 1);
  EXPECT_THROW(rk::rainbow_reachable_bruteforce(big, 0, 1), rk::GuardError);
  EXPECT_THROW(rk::pc_reachable_bruteforce(big, 0, 1), rk::GuardError);
  EXPECT_NO_THROW(rk::rainbow_reachable_bruteforce(big, 0, 1, rk::OracleLimits{13}));
}

TEST(Rainbow, BruteforceBasics) {
  const rk::ColoredDigraph single(2, {{0, 1, 0}});
  const auto w = rk::rainbow_reachable_bruteforce(single, 0, 1);
  ASSERT_TRUE(w);
  EXPECT_EQ(w->vertices, (std::vector<rk::Vertex>{0, 1}));
  const rk::ColoredDigraph empty(4, {});
  EXPECT_FALSE(rk::rainbow_reachable_bruteforce(empty, 0, 3));
  EXPECT_FALSE(rk::rainbow_reachable(empty, 0, 3));
}

TEST(Rainbow, EngineAgreesWithOracleOnFuzzedDigraphs) {
  std::size_t disagreements = 0;
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    const auto d = rk::random_digraph(2 + seed % 6, 1 + seed % 4, 0.45, seed);
    const auto truth = oracle::rainbow_relation(d);
    for (rk::Vertex u = 0; u < d.n(); ++u) {
      for (rk::Vertex v = 0; v < d.n(); ++v) {
        if (u == v) continue;
        const auto w = rk::rainbow_reachable(d, u, v);
        if (w.has_value() != truth[u][v]) ++disagreements;
        if (w) {
          EXPECT_FALSE(rk::witness_defect(d, *w));
          EXPECT_EQ(w->source(), u);
          EXPECT_EQ(w->target(), v);
        }
        EXPECT_EQ(rk::rainbow_targets(d, u)[v], truth[u][v]);
      }
    }
  }
  EXPECT_EQ(disagreements, 0u);
}

TEST(Rainbow, WideColorSetFallbackAgrees) {
  // A transitive 12-vertex tournament with 66 distinct colors forces the
  // multi-word color set.
  std::vector<rk::Arc> arcs;
  rk::Color c = 0;
  for (rk::Vertex i = 0; i < 12; ++i)
    for (rk::Vertex j = i + 1; j < 12; ++j) arcs.push_back({i, j, c++});
  const rk::ColoredDigraph d(12, arcs);
  ASSERT_GT(d.m(), 64u);
  const auto w = rk::rainbow_reachable(d, 3, 5);
  ASSERT_TRUE(w);
  EXPECT_FALSE(rk::witness_defect(d, *w));
  EXPECT_EQ(w->length(), 1u);
  EXPECT_FALSE(rk::rainbow_reachable(d, 5, 3));
  const auto targets = rk::rainbow_targets(d, 3);
  for (rk::Vertex v = 0; v < 12; ++v) EXPECT_EQ(targets[v], v > 3);
}

TEST(Rainbow, EveryStepAddsAFreshColor) {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const auto d = rk::random_digraph(6, 4, 0.5, seed);
    for (const auto& s : rk::rainbow_walk_states(d, 0)) {
      EXPECT_EQ(s.used_colors.size(), s.depth);
    }
  }
}

TEST(PcBruteforce, Basics) {
  const rk::ColoredDigraph single(2, {{0, 1, 0}});
  EXPECT_EQ(rk::pc_reachable_bruteforce(single, 0, 1)->vertices, (std::vector<rk::Vertex>{0, 1}));
  const rk::ColoredDigraph two_path(3, {{0, 1, 0}, {1, 2, 1}});
  EXPECT_EQ(rk::pc_reachable_bruteforce(two_path, 0, 2)->vertices,
            (std::vector<rk::Vertex>{0, 1, 2}));
  // T_5*: v1 -> v4 through the alternating path v1 -> v2 -> v4? (0 then 1).
  const auto d = rk::t5_star().digraph();
  const auto w = rk::pc_reachable_bruteforce(d, 0, 3);
  ASSERT_TRUE(w);
  EXPECT_FALSE(rk::witness_defect(d, *w));
  EXPECT_TRUE(oracle::has_pc_path(d, 0, 3));
}

TEST(PcLayers, TwoVertexTournament) {
  const rk::Tournament t(rk::ColoredDigraph(2, {{0, 1, 0}}));
  const auto layers = rk::pc_closure_layers(t);
  EXPECT_EQ(layers.layer(), 1u);
  EXPECT_EQ(layers.pair_count(), 1u);
  EXPECT_TRUE(layers.contains({0, 0}, {1, 0}, 1));
  EXPECT_EQ(layers.extended(t.digraph()).pair_count(), 1u);
  EXPECT_TRUE(rk::pc_reachable(t, 0, 1));
  EXPECT_FALSE(rk::pc_reachable(t, 1, 0));
}

TEST(PcLayers, OneColorBlocksExtension) {
  const auto t = monochromatic_transitive_triangle();
  const auto layers = rk::pc_closure_layers(t);
  EXPECT_EQ(layers.pair_count(), 3u);
  EXPECT_EQ(layers.pair_count(1), 3u);
  EXPECT_EQ(layers.stable_from(), 1u);
  for (rk::Vertex u = 0; u < 3; ++u)
    for (rk::Vertex v = 0; v < 3; ++v)
      if (u != v) {
        EXPECT_EQ(rk::pc_reachable(t, u, v), u < v);
      }
}

TEST(PcLayers, EachLayerMatchesWalkEnumeration) {
  for (std::uint64_t seed = 0; seed < 120; ++seed) {
    const auto t = rk::random_tournament(6, 3, seed);
    const auto& d = t.digraph();
    const auto layers = rk::pc_closure_layers(t);
    ASSERT_EQ(layers.layer(), 5u);
    for (std::size_t k = 1; k <= layers.layer(); ++k) {
      const auto truth = oracle::pc_walk_pairs(d, k);
      EXPECT_EQ(layers.pair_count(k), truth.size()) << "seed " << seed << " layer " << k;
      for (const auto& [v1, c1, v2, c2] : truth) {
        EXPECT_TRUE(layers.contains({v1, c1}, {v2, c2}, k));
      }
      if (k > 1) {
        EXPECT_GE(layers.pair_count(k), layers.pair_count(k - 1));
      }
    }
    EXPECT_LE(layers.stable_from(), layers.layer());
    if (layers.stable_from() < layers.layer()) {
      EXPECT_EQ(layers.extended(d).pair_count(), layers.pair_count());
    }
  }
}

TEST(PcLayers, LayerNMinusOneIsNotAlwaysAFixpoint) {
  // Walks longer than n-1 can pair new (vertex, color) states, so one more
  // layer is not guaranteed to add nothing. Count it; require it to occur.
  std::size_t grown = 0, vertex_level = 0;
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const auto t = rk::random_tournament(5, 2, seed);
    const auto layers = rk::pc_closure_layers(t);
    const auto next = layers.extended(t.digraph());
    EXPECT_GE(next.pair_count(), layers.pair_count());
    if (next.pair_count() == layers.pair_count()) continue;
    ++grown;
    EXPECT_EQ(layers.stable_from(), layers.layer());
    for (rk::Vertex u = 0; u < 5; ++u)
      for (rk::Vertex v = 0; v < 5; ++v)
        if (u != v && next.reaches(u, v) && !layers.reaches(u, v)) ++vertex_level;
  }
  EXPECT_GT(grown, 0u);
  RecordProperty("grown_after_last_layer", static_cast<int>(grown));
  RecordProperty("new_vertex_pairs", static_cast<int>(vertex_level));
}

TEST(PcLayers, WalkWitnessesRevalidate) {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const auto t = rk::random_tournament(7, 3, seed);
    const auto layers = rk::pc_closure_layers(t);
    for (rk::Vertex u = 0; u < 7; ++u)
      for (rk::Color c1 = 0; c1 < t.m(); ++c1)
        for (rk::Vertex v = 0; v < 7; ++v)
          for (rk::Color c2 = 0; c2 < t.m(); ++c2) {
            if (!layers.contains({u, c1}, {v, c2})) continue;
            const auto w = layers.walk(t.digraph(), {u, c1}, {v, c2});
            EXPECT_FALSE(rk::walk_defect(t.digraph(), w));
            EXPECT_EQ(w.colors.front(), c1);
            EXPECT_EQ(w.colors.back(), c2);
            EXPECT_LE(w.length(), layers.added_at({u, c1}, {v, c2}));
          }
  }
}

TEST(PcLayers, SimplePathComparisonIsRecorded) {
  // Walk certificates versus simple properly colored paths: any divergence
  // is counted, not asserted (the construction certifies walks).
  std::size_t walks_only = 0, paths_only = 0;
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const auto t = rk::random_tournament(6, 3, seed);
    const auto layers = rk::pc_closure_layers(t);
    const auto paths = oracle::pc_path_relation(t.digraph());
    for (rk::Vertex u = 0; u < 6; ++u)
      for (rk::Vertex v = 0; v < 6; ++v) {
        if (u == v) continue;
        if (layers.reaches(u, v) && !paths[u][v]) ++walks_only;
        if (!layers.reaches(u, v) && paths[u][v]) ++paths_only;
      }
  }
  // A simple path of length <= n-1 is a walk of length <= n-1.
  EXPECT_EQ(paths_only, 0u);
  RecordProperty("walk_only_pairs", static_cast<int>(walks_only));
}
