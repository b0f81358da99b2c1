#pragma once

// Counterexample tournaments, seeded random instances, hypothesis checkers
// for the sufficient conditions, and explorers for the open questions.

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <functional>
#include <future>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "rainbow_kernels/core.hpp"
#include "rainbow_kernels/kernels.hpp"
#include "rainbow_kernels/reachability.hpp"
#include "rainbow_kernels/reductions.hpp"

namespace rainbow_kernels {

// ---------------------------------------------------------------------------
// Fixed tournaments

/// v_i -> v_j for i < j except v_2 -> v_0. The triangle v_0 v_1 v_2 has
/// color 0; any other arc gets the color of its larger endpoint index j >= 3
/// (color id j - 2).
inline Tournament t_star(std::size_t n) {
  if (n < 3) throw PreconditionError("t_star: n must be at least 3");
  std::vector<Arc> arcs;
  for (Vertex i = 0; i < n; ++i) {
    for (Vertex j = i + 1; j < n; ++j) {
      const Color c = j <= 2 ? 0 : j - 2;
      if (i == 0 && j == 2) {
        arcs.push_back({2, 0, 0});
      } else {
        arcs.push_back({i, j, c});
      }
    }
  }
  return Tournament(ColoredDigraph(n, std::move(arcs)));
}

/// The 2-colored 5-vertex tournament: Hamilton cycle v1 v2 v3 v4 v5 in
/// color 0, chords v1v3, v3v5, v5v2, v2v4, v4v1 in color 1 (v_k is id k-1).
inline Tournament t5_star() {
  return Tournament(ColoredDigraph(5, {{0, 1, 0},
                                       {1, 2, 0},
                                       {2, 3, 0},
                                       {3, 4, 0},
                                       {4, 0, 0},
                                       {0, 2, 1},
                                       {2, 4, 1},
                                       {4, 1, 1},
                                       {1, 3, 1},
                                       {3, 0, 1}}));
}

// ---------------------------------------------------------------------------
// Random instances. All are pure functions of their parameters and seed.

/// Uniform orientation per pair, uniform color in [0, m) per arc, then colors
/// compacted (so the result may use fewer than m colors).
inline Tournament random_tournament(std::size_t n, std::size_t m, std::uint64_t seed) {
  if (n < 2) throw PreconditionError("random_tournament: n must be at least 2");
  if (m < 1 || m > n * (n - 1) / 2) {
    throw PreconditionError("random_tournament: need 1 <= m <= n(n-1)/2");
  }
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<Color> color(0, static_cast<Color>(m - 1));
  std::bernoulli_distribution flip(0.5);
  std::vector<Arc> arcs;
  for (Vertex i = 0; i < n; ++i) {
    for (Vertex j = i + 1; j < n; ++j) {
      const bool forward = flip(rng);
      arcs.push_back(forward ? Arc{i, j, color(rng)} : Arc{j, i, color(rng)});
    }
  }
  return Tournament(with_compacted_colors(n, std::move(arcs)));
}

/// Each ordered pair becomes an arc with probability `density`; colors
/// uniform in [0, m), then compacted.
inline ColoredDigraph random_digraph(std::size_t n, std::size_t m, double density,
                                     std::uint64_t seed) {
  if (m < 1) throw PreconditionError("random_digraph: m must be positive");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<Color> color(0, static_cast<Color>(m - 1));
  std::bernoulli_distribution keep(density);
  std::vector<Arc> arcs;
  for (Vertex i = 0; i < n; ++i) {
    for (Vertex j = 0; j < n; ++j) {
      if (i != j && keep(rng)) arcs.push_back({i, j, color(rng)});
    }
  }
  return with_compacted_colors(n, std::move(arcs));
}

/// Acyclic: arcs only go forward in a random vertex order.
inline ColoredDigraph random_acyclic_digraph(std::size_t n, std::size_t m, double density,
                                             std::uint64_t seed) {
  if (m < 1) throw PreconditionError("random_acyclic_digraph: m must be positive");
  std::mt19937_64 rng(seed);
  std::vector<Vertex> order(n);
  for (Vertex v = 0; v < n; ++v) order[v] = v;
  std::shuffle(order.begin(), order.end(), rng);
  std::uniform_int_distribution<Color> color(0, static_cast<Color>(m - 1));
  std::bernoulli_distribution keep(density);
  std::vector<Arc> arcs;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (keep(rng)) arcs.push_back({order[i], order[j], color(rng)});
    }
  }
  return with_compacted_colors(n, std::move(arcs));
}

/// Random orientation, then colors drawn from [0, m) avoiding any color
/// already on another arc of a 3-cycle through the arc; when every color in
/// the palette is blocked, a fresh one is opened. Every 3-cycle is rainbow.
inline Tournament random_triangle_rainbow_tournament(std::size_t n, std::size_t m,
                                                     std::uint64_t seed) {
  if (n < 2 || m < 1) throw PreconditionError("random_triangle_rainbow_tournament: n >= 2, m >= 1");
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution flip(0.5);
  std::vector<std::vector<bool>> beats(n, std::vector<bool>(n, false));
  std::vector<std::pair<Vertex, Vertex>> order;
  for (Vertex i = 0; i < n; ++i) {
    for (Vertex j = i + 1; j < n; ++j) {
      if (flip(rng)) {
        beats[i][j] = true;
        order.emplace_back(i, j);
      } else {
        beats[j][i] = true;
        order.emplace_back(j, i);
      }
    }
  }
  constexpr std::int64_t kUncolored = -1;
  std::vector<std::vector<std::int64_t>> col(n, std::vector<std::int64_t>(n, kUncolored));
  std::size_t palette = m;
  std::vector<Arc> arcs;
  for (const auto& [u, v] : order) {
    std::vector<bool> blocked(palette, false);
    for (Vertex w = 0; w < n; ++w) {
      // 3-cycle u -> v -> w -> u
      if (w != u && w != v && beats[v][w] && beats[w][u]) {
        for (std::int64_t c : {col[v][w], col[w][u]}) {
          if (c != kUncolored) blocked[static_cast<std::size_t>(c)] = true;
        }
      }
    }
    std::vector<Color> options;
    for (Color c = 0; c < palette; ++c) {
      if (!blocked[c]) options.push_back(c);
    }
    Color chosen;
    if (options.empty()) {
      chosen = static_cast<Color>(palette++);
    } else {
      chosen = options[std::uniform_int_distribution<std::size_t>(0, options.size() - 1)(rng)];
    }
    col[u][v] = chosen;
    arcs.push_back({u, v, chosen});
  }
  return Tournament(with_compacted_colors(n, std::move(arcs)));
}

/// The T*-shape on v_0..v_t: v_i -> v_j for i < j except v_t -> v_0, with
/// colors uniform in [0, m) then compacted.
inline Tournament random_tstar_shaped(std::size_t t, std::size_t m, std::uint64_t seed) {
  if (t < 2 || m < 1) throw PreconditionError("random_tstar_shaped: t >= 2, m >= 1");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<Color> color(0, static_cast<Color>(m - 1));
  std::vector<Arc> arcs;
  for (Vertex i = 0; i <= t; ++i) {
    for (Vertex j = i + 1; j <= t; ++j) {
      if (i == 0 && j == t) {
        arcs.push_back({static_cast<Vertex>(t), 0, color(rng)});
      } else {
        arcs.push_back({i, j, color(rng)});
      }
    }
  }
  return Tournament(with_compacted_colors(t + 1, std::move(arcs)));
}

/// Random 3-uniform hypergraph on 3n elements with m distinct edges. With
/// `plant_matching`, the first n edges (before shuffling) form a perfect
/// matching.
inline Hypergraph3 random_hypergraph(std::size_t n_groups, std::size_t m, std::uint64_t seed,
                                     bool plant_matching) {
  const std::size_t elements = 3 * n_groups;
  const std::size_t possible = elements * (elements - 1) * (elements - 2) / 6;
  if (n_groups == 0 || m == 0 || m > possible || (plant_matching && m < n_groups)) {
    throw PreconditionError("random_hypergraph: invalid parameters");
  }
  std::mt19937_64 rng(seed);
  std::vector<Triple> edges;
  if (plant_matching) {
    std::vector<std::uint32_t> perm(elements);
    for (std::size_t i = 0; i < elements; ++i) perm[i] = static_cast<std::uint32_t>(i + 1);
    std::shuffle(perm.begin(), perm.end(), rng);
    for (std::size_t g = 0; g < n_groups; ++g) {
      Triple e{perm[3 * g], perm[3 * g + 1], perm[3 * g + 2]};
      std::sort(e.begin(), e.end());
      edges.push_back(e);
    }
  }
  std::uniform_int_distribution<std::uint32_t> element(1, static_cast<std::uint32_t>(elements));
  while (edges.size() < m) {
    Triple e{element(rng), element(rng), element(rng)};
    std::sort(e.begin(), e.end());
    if (e[0] == e[1] || e[1] == e[2]) continue;
    if (std::find(edges.begin(), edges.end(), e) != edges.end()) continue;
    edges.push_back(e);
  }
  std::shuffle(edges.begin(), edges.end(), rng);
  return Hypergraph3(n_groups, std::move(edges));
}

// ---------------------------------------------------------------------------
// Hypothesis checkers

struct HypothesisReport {
  bool satisfied = true;
  std::optional<std::vector<Vertex>> violating_subset;
  std::size_t colors_found = 0;
  std::size_t colors_required = 0;
};

struct SubsetLimits {
  std::size_t max_vertices = 14;
};

namespace detail {

inline void require_subset_size(std::size_t n, const SubsetLimits& limits, const char* op) {
  if (n > limits.max_vertices) {
    throw GuardError(std::string(op) + ": n=" + std::to_string(n) + " exceeds guard " +
                     std::to_string(limits.max_vertices));
  }
}

// Visits vertex subsets of size min_k..max_k in size-then-lexicographic
// order, each containing every vertex of `required`. Stops when `visit`
// returns true.
inline bool for_each_subset(std::size_t n, std::size_t min_k, std::size_t max_k,
                            const std::vector<Vertex>& required,
                            const std::function<bool(const std::vector<Vertex>&)>& visit) {
  std::vector<bool> needed(n, false);
  for (Vertex v : required) needed[v] = true;
  std::vector<Vertex> chosen;
  auto recurse = [&](auto&& self, std::size_t k, Vertex from, std::size_t needed_left) -> bool {
    if (chosen.size() == k) return needed_left == 0 && visit(chosen);
    for (Vertex v = from; v < n; ++v) {
      if (n - v < k - chosen.size()) break;
      chosen.push_back(v);
      if (self(self, k, v + 1, needed_left - (needed[v] ? 1 : 0))) return true;
      chosen.pop_back();
      if (needed[v]) break;  // every later subset would miss v
    }
    return false;
  };
  for (std::size_t k = min_k; k <= max_k; ++k) {
    if (recurse(recurse, k, 0, required.size())) return true;
  }
  return false;
}

// First strongly connected induced subtournament with k in [min_k, max_k]
// carrying fewer than k - deficit colors.
inline HypothesisReport check_colors_of_strong_subsets(const Tournament& t, std::size_t min_k,
                                                       std::size_t max_k, std::size_t deficit,
                                                       const std::vector<Vertex>& required) {
  HypothesisReport report;
  const ColoredDigraph& d = t.digraph();
  for_each_subset(d.n(), min_k, max_k, required, [&](const std::vector<Vertex>& s) {
    if (!induces_strongly_connected(d, s)) return false;
    const std::size_t colors = induced_color_count(d, s);
    if (colors + deficit >= s.size()) return false;
    report.satisfied = false;
    report.violating_subset = s;
    report.colors_found = colors;
    report.colors_required = s.size() - deficit;
    return true;
  });
  return report;
}

}  // namespace detail

/// Every strongly connected k-vertex subtournament (3 <= k <= n) has at
/// least k-1 colors. Reports the first violation in size-then-lex order.
inline HypothesisReport check_theorem2_hypothesis(const Tournament& t,
                                                  const SubsetLimits& limits = {}) {
  detail::require_subset_size(t.n(), limits, "check_theorem2_hypothesis");
  return detail::check_colors_of_strong_subsets(t, 3, t.n(), 1, {});
}

/// Every strongly connected k-vertex subtournament (4 <= k <= n) has at
/// least k-2 colors.
inline HypothesisReport check_fk_hypothesis(const Tournament& t, const SubsetLimits& limits = {}) {
  detail::require_subset_size(t.n(), limits, "check_fk_hypothesis");
  return detail::check_colors_of_strong_subsets(t, 4, t.n(), 2, {});
}

/// Exactly k-2 colors on every strongly connected k-subtournament,
/// 3 <= k <= n. Returns the first subset breaking that equality.
inline std::optional<std::vector<Vertex>> find_strong_subset_without_k_minus_2_colors(
    const Tournament& t, const SubsetLimits& limits = {}) {
  detail::require_subset_size(t.n(), limits, "find_strong_subset_without_k_minus_2_colors");
  std::optional<std::vector<Vertex>> found;
  detail::for_each_subset(t.n(), 3, t.n(), {}, [&](const std::vector<Vertex>& s) {
    if (!induces_strongly_connected(t.digraph(), s)) return false;
    if (induced_color_count(t.digraph(), s) + 2 == s.size()) return false;
    found = s;
    return true;
  });
  return found;
}

/// Strongly connected induced subtournaments with at least 3 vertices, in
/// size-then-lex order.
inline std::vector<std::vector<Vertex>> strong_subtournaments(const Tournament& t,
                                                              const SubsetLimits& limits = {}) {
  detail::require_subset_size(t.n(), limits, "strong_subtournaments");
  std::vector<std::vector<Vertex>> out;
  detail::for_each_subset(t.n(), 3, t.n(), {}, [&](const std::vector<Vertex>& s) {
    if (induces_strongly_connected(t.digraph(), s)) out.push_back(s);
    return false;
  });
  return out;
}

using Triangle = std::array<Vertex, 3>;

/// 3-cycles (a, b, c) with a -> b -> c -> a and a the smallest vertex, in
/// lexicographic order.
inline std::vector<Triangle> cyclic_triangles(const ColoredDigraph& d) {
  std::vector<Triangle> out;
  for (Vertex a = 0; a < d.n(); ++a) {
    for (Vertex b = a + 1; b < d.n(); ++b) {
      if (!d.has_arc(a, b)) continue;
      for (Vertex c = a + 1; c < d.n(); ++c) {
        if (c != b && d.has_arc(b, c) && d.has_arc(c, a)) out.push_back({a, b, c});
      }
    }
  }
  return out;
}

inline std::size_t triangle_color_count(const ColoredDigraph& d, const Triangle& tri) {
  std::array<Color, 3> cs{*d.color(tri[0], tri[1]), *d.color(tri[1], tri[2]),
                          *d.color(tri[2], tri[0])};
  std::sort(cs.begin(), cs.end());
  return static_cast<std::size_t>(std::unique(cs.begin(), cs.end()) - cs.begin());
}

/// First 3-cycle that is not rainbow, or nullopt.
inline std::optional<Triangle> check_all_triangles_rainbow(const Tournament& t) {
  for (const Triangle& tri : cyclic_triangles(t.digraph())) {
    if (triangle_color_count(t.digraph(), tri) < 3) return tri;
  }
  return std::nullopt;
}

/// First monochromatic 3-cycle, or nullopt.
inline std::optional<Triangle> find_monochromatic_triangle(const ColoredDigraph& d) {
  for (const Triangle& tri : cyclic_triangles(d)) {
    if (triangle_color_count(d, tri) == 1) return tri;
  }
  return std::nullopt;
}

/// A directed cycle v_0 -> ... -> v_{k-1} -> v_0 that is not rainbow.
///
/// Cycles are rooted at their smallest vertex. The search follows rainbow
/// paths only; as soon as a path repeats a color, any way back to the root
/// completes a non-rainbow cycle, found by breadth-first search.
inline std::optional<std::vector<Vertex>> check_all_cycles_rainbow(const ColoredDigraph& d,
                                                                   const OracleLimits& limits = {}) {
  detail::require_oracle_size(d, limits, "check_all_cycles_rainbow");
  const std::size_t n = d.n();
  std::optional<std::vector<Vertex>> found;
  std::vector<Vertex> path;
  std::vector<Color> colors;
  std::vector<bool> on_path(n, false);

  // Shortest route from `from` back to `root` through vertices > root that
  // are not on the path.
  auto route_back = [&](Vertex root, Vertex from) -> std::optional<std::vector<Vertex>> {
    std::vector<std::int64_t> parent(n, -1);
    std::vector<Vertex> queue{from};
    parent[from] = from;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const Vertex v = queue[head];
      for (std::size_t arc_index : d.out_arcs(v)) {
        const Vertex w = d.arcs()[arc_index].head;
        if (w == root) {
          std::vector<Vertex> tail;
          for (Vertex x = v; x != from; x = static_cast<Vertex>(parent[x])) tail.push_back(x);
          std::reverse(tail.begin(), tail.end());
          return tail;
        }
        if (w < root || on_path[w] || parent[w] != -1) continue;
        parent[w] = v;
        queue.push_back(w);
      }
    }
    return std::nullopt;
  };

  auto repeats = [&] {
    std::vector<Color> cs = colors;
    std::sort(cs.begin(), cs.end());
    return std::adjacent_find(cs.begin(), cs.end()) != cs.end();
  };

  auto dfs = [&](auto&& self, Vertex root) -> bool {
    const Vertex at = path.back();
    if (repeats()) {
      if (auto tail = route_back(root, at)) {
        found = path;
        found->insert(found->end(), tail->begin(), tail->end());
        return true;
      }
      return false;
    }
    for (std::size_t arc_index : d.out_arcs(at)) {
      const Arc& a = d.arcs()[arc_index];
      if (a.head == root) {
        colors.push_back(a.color);
        const bool bad = repeats();
        colors.pop_back();
        if (bad) {
          found = path;
          return true;
        }
        continue;
      }
      if (a.head < root || on_path[a.head]) continue;
      path.push_back(a.head);
      colors.push_back(a.color);
      on_path[a.head] = true;
      if (self(self, root)) return true;
      on_path[a.head] = false;
      colors.pop_back();
      path.pop_back();
    }
    return false;
  };

  for (Vertex root = 0; root < n; ++root) {
    path = {root};
    colors.clear();
    std::fill(on_path.begin(), on_path.end(), false);
    on_path[root] = true;
    if (dfs(dfs, root)) return found;
  }
  return std::nullopt;
}

struct Lemma1Result {
  std::size_t index = 0;  // i with a rainbow (v_i, v_{i-1})-path
  PathWitness path;
};

/// Whether t is T*-shaped: v_i -> v_j for i < j except v_t -> v_0, t = n-1 >= 2.
inline bool is_tstar_shaped(const Tournament& t) {
  const std::size_t n = t.n();
  if (n < 3) return false;
  const Vertex last = static_cast<Vertex>(n - 1);
  for (Vertex i = 0; i < n; ++i) {
    for (Vertex j = i + 1; j < n; ++j) {
      const bool expected_forward = !(i == 0 && j == last);
      if (t.digraph().has_arc(i, j) != expected_forward) return false;
    }
  }
  return true;
}

/// Coloring hypothesis for a T*-shaped tournament: every strongly connected
/// k-subtournament (3 <= k <= t+1) has at least k-1 colors. Such
/// subtournaments all contain the back arc v_t v_0, so only subsets holding
/// both endpoints are examined.
inline HypothesisReport check_lemma1_hypothesis(const Tournament& t, const SubsetLimits& limits = {}) {
  detail::require_subset_size(t.n(), limits, "check_lemma1_hypothesis");
  if (!is_tstar_shaped(t)) throw PreconditionError("check_lemma1_hypothesis: not T*-shaped");
  const Vertex last = static_cast<Vertex>(t.n() - 1);
  return detail::check_colors_of_strong_subsets(t, 3, t.n(), 1, {0, last});
}

/// Least i in 1..t with a rainbow (v_i, v_{i-1})-path. Throws
/// PreconditionError when t is not T*-shaped or violates the coloring
/// hypothesis; nullopt would refute the lemma.
inline std::optional<Lemma1Result> check_lemma1_instance(const Tournament& t,
                                                         const SubsetLimits& limits = {}) {
  const HypothesisReport hyp = check_lemma1_hypothesis(t, limits);
  if (!hyp.satisfied) {
    std::ostringstream msg;
    msg << "check_lemma1_instance: coloring hypothesis fails on {";
    for (std::size_t i = 0; i < hyp.violating_subset->size(); ++i) {
      msg << (i ? "," : "") << (*hyp.violating_subset)[i];
    }
    msg << "} with " << hyp.colors_found << " < " << hyp.colors_required << " colors";
    throw PreconditionError(msg.str());
  }
  for (Vertex i = 1; i < t.n(); ++i) {
    if (auto path = rainbow_reachable(t.digraph(), i, i - 1)) return Lemma1Result{i, *path};
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Explorers

struct ExplorerOptions {
  std::size_t n_max = 6;
  std::size_t seeds = 100;
  std::uint64_t base_seed = 0;
  std::size_t threads = 0;                  // 0: hardware concurrency
  std::optional<std::filesystem::path> instance_dir;  // where counterexamples are written
};

struct ExplorerLine {
  std::uint64_t seed = 0;
  std::size_t n = 0;
  bool passed_filter = false;
  std::optional<bool> kernel;  // set when the filter passed
  std::string instance;        // serialized counterexample, empty otherwise
  std::optional<std::filesystem::path> written_to;
};

struct ExplorerReport {
  std::string name;
  std::vector<ExplorerLine> lines;  // seed order

  std::size_t filtered_in() const {
    return static_cast<std::size_t>(
        std::count_if(lines.begin(), lines.end(), [](const auto& l) { return l.passed_filter; }));
  }
  std::size_t counterexamples() const {
    return static_cast<std::size_t>(std::count_if(
        lines.begin(), lines.end(), [](const auto& l) { return l.kernel == false; }));
  }

  std::string to_text() const {
    std::ostringstream out;
    for (const ExplorerLine& l : lines) {
      out << "seed=" << l.seed << " n=" << l.n << " filter=" << (l.passed_filter ? "pass" : "skip")
          << " kernel=" << (l.kernel ? (*l.kernel ? "yes" : "no") : "-");
      if (l.written_to) out << " instance=" << l.written_to->string();
      out << '\n';
    }
    out << "# " << name << ": " << lines.size() << " instances, " << filtered_in()
        << " passed filter, " << counterexamples() << " counterexamples\n";
    return out.str();
  }
};

namespace detail {

// Runs `one(seed)` for every seed, fanned out over worker threads; results
// come back in seed order.
inline std::vector<ExplorerLine> run_seeds(const ExplorerOptions& options,
                                           const std::function<ExplorerLine(std::uint64_t)>& one) {
  std::vector<ExplorerLine> lines(options.seeds);
  std::size_t workers = options.threads ? options.threads : std::thread::hardware_concurrency();
  workers = std::clamp<std::size_t>(workers, 1, std::max<std::size_t>(options.seeds, 1));
  std::vector<std::future<void>> jobs;
  for (std::size_t w = 0; w < workers; ++w) {
    jobs.push_back(std::async(std::launch::async, [&, w] {
      for (std::size_t i = w; i < options.seeds; i += workers) {
        lines[i] = one(options.base_seed + i);
      }
    }));
  }
  for (auto& job : jobs) job.get();
  return lines;
}

inline void write_counterexamples(ExplorerReport& report, const ExplorerOptions& options,
                                  const std::string& extension) {
  if (!options.instance_dir) return;
  std::filesystem::create_directories(*options.instance_dir);
  for (ExplorerLine& l : report.lines) {
    if (l.instance.empty()) continue;
    const auto path = *options.instance_dir /
                      (report.name + "-seed" + std::to_string(l.seed) + extension);
    std::ofstream(path) << l.instance;
    l.written_to = path;
  }
}

}  // namespace detail

/// Random digraphs (2 <= n <= n_max) filtered to those whose cycles are all
/// rainbow, then tested for a rainbow kernel. A "no" would be a
/// counterexample to the open problem and is kept verbatim.
inline ExplorerReport explore_problem1(const ExplorerOptions& options) {
  if (options.n_max < 2) throw PreconditionError("explore_problem1: n_max must be at least 2");
  ExplorerReport report{"problem1", {}};
  report.lines = detail::run_seeds(options, [&](std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    const std::size_t n = std::uniform_int_distribution<std::size_t>(2, options.n_max)(rng);
    const std::size_t m = std::uniform_int_distribution<std::size_t>(1, n * (n - 1))(rng);
    const double density = std::uniform_real_distribution<double>(0.15, 0.6)(rng);
    const ColoredDigraph d = random_digraph(n, m, density, rng());
    ExplorerLine line{seed, n, false, std::nullopt, {}, std::nullopt};
    line.passed_filter = !check_all_cycles_rainbow(d).has_value();
    if (line.passed_filter) {
      line.kernel = rainbow_kernel(d).has_value();
      if (!*line.kernel) line.instance = serialize_digraph(d);
    }
    return line;
  });
  detail::write_counterexamples(report, options, ".digraph");
  return report;
}

/// Random tournaments (4 <= n <= n_max) with no monochromatic 3-cycle whose
/// strongly connected k-subtournaments (k >= 4) carry at least k-2 colors,
/// tested for a rainbow kernel.
inline ExplorerReport explore_fk_conjecture(const ExplorerOptions& options) {
  if (options.n_max < 4) throw PreconditionError("explore_fk_conjecture: n_max must be at least 4");
  ExplorerReport report{"fk", {}};
  report.lines = detail::run_seeds(options, [&](std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    const std::size_t n = std::uniform_int_distribution<std::size_t>(4, options.n_max)(rng);
    const std::size_t m = std::uniform_int_distribution<std::size_t>(2, n)(rng);
    const Tournament t = random_tournament(n, m, rng());
    ExplorerLine line{seed, n, false, std::nullopt, {}, std::nullopt};
    line.passed_filter = !find_monochromatic_triangle(t.digraph()) && check_fk_hypothesis(t).satisfied;
    if (line.passed_filter) {
      line.kernel = rainbow_kernel_tournament(t).has_value();
      if (!*line.kernel) line.instance = serialize_tournament(t);
    }
    return line;
  });
  detail::write_counterexamples(report, options, ".tour");
  return report;
}

}  // namespace rainbow_kernels
