#pragma once

// Rainbow and properly colored path existence, each with an exhaustive
// simple-path oracle for small instances.

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "rainbow_kernels/core.hpp"

namespace rainbow_kernels {

/// Size guard for the exhaustive oracles.
struct OracleLimits {
  std::size_t max_vertices = 12;
};

namespace detail {

inline void require_distinct(Vertex u, Vertex v, const char* op) {
  if (u == v) throw PreconditionError(std::string(op) + ": source and target must differ");
}

inline void require_vertex(const ColoredDigraph& d, Vertex v) {
  if (v >= d.n()) throw PreconditionError("vertex " + std::to_string(v) + " out of range");
}

inline void require_oracle_size(const ColoredDigraph& d, const OracleLimits& limits, const char* op) {
  if (d.n() > limits.max_vertices) {
    throw GuardError(std::string(op) + ": n=" + std::to_string(d.n()) + " exceeds oracle guard " +
                     std::to_string(limits.max_vertices));
  }
}

// Color sets for the walk-state search. Mask64 covers m <= 64; WideMask
// is the fallback for larger palettes.
struct Mask64 {
  std::uint64_t bits = 0;

  explicit Mask64(std::size_t /*m*/) {}
  bool test(Color c) const { return (bits >> c) & 1U; }
  Mask64 with(Color c) const {
    Mask64 r = *this;
    r.bits |= std::uint64_t{1} << c;
    return r;
  }
  std::size_t count() const { return static_cast<std::size_t>(std::popcount(bits)); }
  std::size_t hash() const { return std::hash<std::uint64_t>{}(bits); }
  friend bool operator==(const Mask64&, const Mask64&) = default;
};

struct WideMask {
  std::vector<std::uint64_t> words;

  explicit WideMask(std::size_t m) : words((m + 63) / 64, 0) {}
  bool test(Color c) const { return (words[c / 64] >> (c % 64)) & 1U; }
  WideMask with(Color c) const {
    WideMask r = *this;
    r.words[c / 64] |= std::uint64_t{1} << (c % 64);
    return r;
  }
  std::size_t count() const {
    std::size_t total = 0;
    for (auto w : words) total += static_cast<std::size_t>(std::popcount(w));
    return total;
  }
  std::size_t hash() const {
    std::size_t h = 0;
    for (auto w : words) h = h * 1000003U ^ std::hash<std::uint64_t>{}(w);
    return h;
  }
  friend bool operator==(const WideMask&, const WideMask&) = default;
};

template <typename Mask>
struct WalkState {
  Vertex vertex;
  Mask used;
  friend bool operator==(const WalkState&, const WalkState&) = default;
};

template <typename Mask>
struct WalkStateHash {
  std::size_t operator()(const WalkState<Mask>& s) const {
    return s.used.hash() * 31U + s.vertex;
  }
};

template <typename Mask>
struct ExploredState {
  WalkState<Mask> state;
  std::size_t depth;
  std::size_t parent;    // index into the explored list; self for the root
  std::size_t via_arc;   // arc index used to enter; unused for the root
};

// Breadth-first search over (vertex, used colors) states reached by rainbow
// walks from `source`. Stops as soon as a state at `stop_at` is discovered.
template <typename Mask>
std::vector<ExploredState<Mask>> explore_rainbow_walks(const ColoredDigraph& d, Vertex source,
                                                       std::optional<Vertex> stop_at) {
  std::vector<ExploredState<Mask>> states;
  std::unordered_map<WalkState<Mask>, std::size_t, WalkStateHash<Mask>> index;
  WalkState<Mask> root{source, Mask(d.m())};
  states.push_back({root, 0, 0, 0});
  index.emplace(root, 0);
  for (std::size_t head = 0; head < states.size(); ++head) {
    const WalkState<Mask> current = states[head].state;
    const std::size_t depth = states[head].depth;
    for (std::size_t arc_index : d.out_arcs(current.vertex)) {
      const Arc& a = d.arcs()[arc_index];
      if (current.used.test(a.color)) continue;
      WalkState<Mask> next{a.head, current.used.with(a.color)};
      if (index.contains(next)) continue;
      index.emplace(next, states.size());
      states.push_back({next, depth + 1, head, arc_index});
      if (stop_at && a.head == *stop_at) return states;
    }
  }
  return states;
}

template <typename Mask>
PathWitness rebuild_walk(const ColoredDigraph& d, const std::vector<ExploredState<Mask>>& states,
                         std::size_t last) {
  PathWitness w;
  w.tag = PathTag::rainbow;
  for (std::size_t i = last; i != 0; i = states[i].parent) {
    const Arc& a = d.arcs()[states[i].via_arc];
    w.vertices.push_back(a.head);
    w.colors.push_back(a.color);
  }
  w.vertices.push_back(states.front().state.vertex);
  std::reverse(w.vertices.begin(), w.vertices.end());
  std::reverse(w.colors.begin(), w.colors.end());
  return w;
}

template <typename Mask>
std::optional<PathWitness> rainbow_search(const ColoredDigraph& d, Vertex u, Vertex v) {
  const auto states = explore_rainbow_walks<Mask>(d, u, v);
  if (states.size() < 2 || states.back().state.vertex != v) return std::nullopt;
  // BFS reaches v first at minimum depth, so the walk cannot repeat a vertex:
  // removing the closed subwalk would give a shallower state at v.
  return rebuild_walk(d, states, states.size() - 1);
}

// Dense visited table for the closure sweep: n * 2^m bits.
inline constexpr std::size_t kDenseStateBits = std::size_t{1} << 26;

inline std::vector<bool> rainbow_targets_dense(const ColoredDigraph& d, Vertex source) {
  const std::size_t m = d.m();
  std::vector<bool> visited(d.n() << m, false);
  std::vector<bool> reached(d.n(), false);
  std::vector<std::pair<Vertex, std::uint64_t>> queue{{source, 0}};
  visited[static_cast<std::size_t>(source) << m] = true;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const auto [v, used] = queue[head];
    for (std::size_t arc_index : d.out_arcs(v)) {
      const Arc& a = d.arcs()[arc_index];
      const std::uint64_t bit = std::uint64_t{1} << a.color;
      if (used & bit) continue;
      const std::uint64_t next = used | bit;
      const std::size_t key = (static_cast<std::size_t>(a.head) << m) | next;
      if (visited[key]) continue;
      visited[key] = true;
      reached[a.head] = true;
      queue.emplace_back(a.head, next);
    }
  }
  return reached;
}

}  // namespace detail

/// Rainbow (u,v)-path or nullopt.
///
/// Searches (vertex, used color set) states reached by rainbow walks; a
/// closed subwalk can always be cut out of a rainbow walk, so walk
/// reachability equals path reachability. Ties are broken by arc order.
inline std::optional<PathWitness> rainbow_reachable(const ColoredDigraph& d, Vertex u, Vertex v) {
  detail::require_vertex(d, u);
  detail::require_vertex(d, v);
  detail::require_distinct(u, v, "rainbow_reachable");
  if (d.m() <= 64) return detail::rainbow_search<detail::Mask64>(d, u, v);
  return detail::rainbow_search<detail::WideMask>(d, u, v);
}

/// Vertices w != u with a rainbow (u,w)-path, as a membership vector.
inline std::vector<bool> rainbow_targets(const ColoredDigraph& d, Vertex u) {
  detail::require_vertex(d, u);
  std::vector<bool> reached;
  if (d.m() < 32 && (d.n() << d.m()) <= detail::kDenseStateBits) {
    reached = detail::rainbow_targets_dense(d, u);
  } else {
    reached.assign(d.n(), false);
    auto mark = [&](const auto& states) {
      for (const auto& s : states) reached[s.state.vertex] = true;
    };
    if (d.m() <= 64) {
      mark(detail::explore_rainbow_walks<detail::Mask64>(d, u, std::nullopt));
    } else {
      mark(detail::explore_rainbow_walks<detail::WideMask>(d, u, std::nullopt));
    }
  }
  reached[u] = false;
  return reached;
}

/// One state of the rainbow walk search, exposed for inspection.
struct RainbowWalkState {
  Vertex vertex;
  std::vector<Color> used_colors;  // ascending
  std::size_t depth;               // length of the walk that first reached the state
};

inline std::vector<RainbowWalkState> rainbow_walk_states(const ColoredDigraph& d, Vertex u) {
  detail::require_vertex(d, u);
  std::vector<RainbowWalkState> out;
  auto convert = [&](const auto& states) {
    for (const auto& s : states) {
      RainbowWalkState r{s.state.vertex, {}, s.depth};
      for (Color c = 0; c < d.m(); ++c) {
        if (s.state.used.test(c)) r.used_colors.push_back(c);
      }
      out.push_back(std::move(r));
    }
  };
  if (d.m() <= 64) {
    convert(detail::explore_rainbow_walks<detail::Mask64>(d, u, std::nullopt));
  } else {
    convert(detail::explore_rainbow_walks<detail::WideMask>(d, u, std::nullopt));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Exhaustive simple-path oracles

namespace detail {

// Depth-first enumeration of simple paths from u in arc order, pruned by
// `extend(colors_so_far, next_color)`. Returns the first path reaching v.
template <typename Extend>
std::optional<PathWitness> first_simple_path(const ColoredDigraph& d, Vertex u, Vertex v,
                                             PathTag tag, Extend extend) {
  std::vector<bool> on_path(d.n(), false);
  PathWitness path{{u}, {}, tag};
  on_path[u] = true;
  std::optional<PathWitness> found;
  auto dfs = [&](auto&& self, Vertex at) -> bool {
    for (std::size_t arc_index : d.out_arcs(at)) {
      const Arc& a = d.arcs()[arc_index];
      if (on_path[a.head] || !extend(path.colors, a.color)) continue;
      path.vertices.push_back(a.head);
      path.colors.push_back(a.color);
      if (a.head == v) {
        found = path;
        return true;
      }
      on_path[a.head] = true;
      if (self(self, a.head)) return true;
      on_path[a.head] = false;
      path.vertices.pop_back();
      path.colors.pop_back();
    }
    return false;
  };
  dfs(dfs, u);
  return found;
}

}  // namespace detail

/// First rainbow simple (u,v)-path in depth-first arc order. Exhaustive.
inline std::optional<PathWitness> rainbow_reachable_bruteforce(const ColoredDigraph& d, Vertex u,
                                                               Vertex v,
                                                               const OracleLimits& limits = {}) {
  detail::require_oracle_size(d, limits, "rainbow_reachable_bruteforce");
  detail::require_vertex(d, u);
  detail::require_vertex(d, v);
  detail::require_distinct(u, v, "rainbow_reachable_bruteforce");
  return detail::first_simple_path(d, u, v, PathTag::rainbow,
                                   [](const std::vector<Color>& used, Color c) {
                                     return std::find(used.begin(), used.end(), c) == used.end();
                                   });
}

/// First properly colored simple (u,v)-path in depth-first arc order. Exhaustive.
inline std::optional<PathWitness> pc_reachable_bruteforce(const ColoredDigraph& d, Vertex u,
                                                          Vertex v,
                                                          const OracleLimits& limits = {}) {
  detail::require_oracle_size(d, limits, "pc_reachable_bruteforce");
  detail::require_vertex(d, u);
  detail::require_vertex(d, v);
  detail::require_distinct(u, v, "pc_reachable_bruteforce");
  return detail::first_simple_path(d, u, v, PathTag::properly_colored,
                                   [](const std::vector<Color>& used, Color c) {
                                     return used.empty() || used.back() != c;
                                   });
}

// ---------------------------------------------------------------------------
// Layered construction of the properly colored closure

/// A vertex paired with the color of the arc that entered (or left) it.
struct PcState {
  Vertex vertex = 0;
  Color color = 0;
  friend bool operator==(const PcState&, const PcState&) = default;
};

/// The relations D_0 ⊆ D_1 ⊆ ... ⊆ D_L over pairs of PcStates.
///
/// ((v', c'), (v'', c'')) is in D_k when a properly colored walk of length
/// at most k leads from v' to v'' with first arc colored c' and last arc
/// colored c''. Every pair remembers the layer that first added it, so each
/// intermediate D_k is recoverable.
class LayeredPcRelation {
 public:
  LayeredPcRelation() = default;

  std::size_t n() const { return n_; }
  std::size_t m() const { return m_; }
  /// Index L of the last constructed layer.
  std::size_t layer() const { return layer_; }
  /// Smallest k with D_k equal to the last layer.
  std::size_t stable_from() const { return stable_from_; }
  /// Number of (pair, out-arc) extension attempts made while building.
  std::uint64_t extension_steps() const { return extension_steps_; }

  bool contains(PcState from, PcState to) const { return contains(from, to, layer_); }
  bool contains(PcState from, PcState to, std::size_t k) const {
    const std::uint16_t added = first_layer_[pair_index(from, to)];
    return added != 0 && added <= k;
  }
  /// Layer that added the pair, 0 if absent.
  std::size_t added_at(PcState from, PcState to) const {
    return first_layer_[pair_index(from, to)];
  }

  std::size_t pair_count(std::size_t k) const {
    return static_cast<std::size_t>(std::count_if(
        first_layer_.begin(), first_layer_.end(),
        [k](std::uint16_t added) { return added != 0 && added <= k; }));
  }
  std::size_t pair_count() const { return pair_count(layer_); }

  /// Some ((u, c'), (v, c'')) in the last layer.
  bool reaches(Vertex u, Vertex v) const {
    for (Color c1 = 0; c1 < m_; ++c1) {
      for (Color c2 = 0; c2 < m_; ++c2) {
        if (contains({u, c1}, {v, c2})) return true;
      }
    }
    return false;
  }

  /// A properly colored walk certifying a present pair, rebuilt from the
  /// layer indices. Its length is at most added_at(from, to).
  PathWitness walk(const ColoredDigraph& d, PcState from, PcState to) const {
    if (!contains(from, to)) throw PreconditionError("walk: pair not in relation");
    std::vector<Vertex> reversed{to.vertex};
    std::vector<Color> colors{to.color};
    PcState current = to;
    while (added_at(from, current) > 1) {
      const std::size_t k = added_at(from, current);
      bool stepped = false;
      for (std::size_t arc_index : d.in_arcs(current.vertex)) {
        const Arc& a = d.arcs()[arc_index];
        if (a.color != current.color) continue;
        for (Color c = 0; c < m_ && !stepped; ++c) {
          if (c == current.color) continue;
          const PcState previous{a.tail, c};
          const std::size_t prev_added = added_at(from, previous);
          if (prev_added != 0 && prev_added < k) {
            reversed.push_back(previous.vertex);
            colors.push_back(previous.color);
            current = previous;
            stepped = true;
          }
        }
        if (stepped) break;
      }
      if (!stepped) throw std::logic_error("walk: inconsistent layer data");
    }
    reversed.push_back(from.vertex);
    PathWitness w;
    w.tag = PathTag::properly_colored;
    w.vertices.assign(reversed.rbegin(), reversed.rend());
    w.colors.assign(colors.rbegin(), colors.rend());
    return w;
  }

  /// Applies the extension rule once more to the last layer.
  LayeredPcRelation extended(const ColoredDigraph& d) const {
    LayeredPcRelation next = *this;
    std::vector<std::pair<std::size_t, std::size_t>> frontier;
    for (std::size_t s = 0; s < state_count(); ++s) {
      for (std::size_t t = 0; t < state_count(); ++t) {
        if (first_layer_[s * state_count() + t] != 0) frontier.emplace_back(s, t);
      }
    }
    next.apply_layer(d, frontier, layer_ + 1);
    next.layer_ = layer_ + 1;
    return next;
  }

  friend LayeredPcRelation pc_closure_layers(const ColoredDigraph& d);

 private:
  std::size_t state_count() const { return n_ * m_; }
  std::size_t state_index(PcState s) const { return static_cast<std::size_t>(s.vertex) * m_ + s.color; }
  std::size_t pair_index(PcState a, PcState b) const {
    return state_index(a) * state_count() + state_index(b);
  }

  // Adds every extension of the pairs in `frontier` not yet present, stamping
  // them with layer k. Returns the newly added pairs.
  std::vector<std::pair<std::size_t, std::size_t>> apply_layer(
      const ColoredDigraph& d, const std::vector<std::pair<std::size_t, std::size_t>>& frontier,
      std::size_t k) {
    std::vector<std::pair<std::size_t, std::size_t>> added;
    const std::size_t states = state_count();
    for (const auto& [s, t] : frontier) {
      const Vertex v = static_cast<Vertex>(t / m_);
      const Color c = static_cast<Color>(t % m_);
      for (std::size_t arc_index : d.out_arcs(v)) {
        ++extension_steps_;
        const Arc& a = d.arcs()[arc_index];
        if (a.color == c) continue;
        const std::size_t target = static_cast<std::size_t>(a.head) * m_ + a.color;
        std::uint16_t& slot = first_layer_[s * states + target];
        if (slot != 0) continue;
        slot = static_cast<std::uint16_t>(k);
        added.emplace_back(s, target);
      }
    }
    return added;
  }

  std::size_t n_ = 0;
  std::size_t m_ = 0;
  std::size_t layer_ = 0;
  std::size_t stable_from_ = 0;
  std::uint64_t extension_steps_ = 0;
  std::vector<std::uint16_t> first_layer_;
};

/// Builds D_1 from the arcs, then D_k from D_{k-1} for k = 2..n-1: a pair
/// ((v',c'),(v'',c'')) joins when ((v',c'),(v,c)) is present, vv'' is an arc
/// colored c'' and c != c''. Pairs added in layer k-1 are the only ones whose
/// extensions can be new in layer k, so each layer scans just those.
inline LayeredPcRelation pc_closure_layers(const ColoredDigraph& d) {
  LayeredPcRelation r;
  r.n_ = d.n();
  r.m_ = d.m();
  if (d.n() > 65535) throw GuardError("pc_closure_layers: too many vertices for layer stamps");
  r.first_layer_.assign(r.state_count() * r.state_count(), 0);
  const std::size_t last = d.n() >= 2 ? d.n() - 1 : 0;
  std::vector<std::pair<std::size_t, std::size_t>> frontier;
  if (last >= 1) {
    for (const Arc& a : d.arcs()) {
      const std::size_t s = static_cast<std::size_t>(a.tail) * r.m_ + a.color;
      const std::size_t t = static_cast<std::size_t>(a.head) * r.m_ + a.color;
      r.first_layer_[s * r.state_count() + t] = 1;
      frontier.emplace_back(s, t);
    }
  }
  r.stable_from_ = frontier.empty() ? 0 : last;
  for (std::size_t k = 2; k <= last; ++k) {
    frontier = r.apply_layer(d, frontier, k);
    if (frontier.empty()) {
      r.stable_from_ = std::min(r.stable_from_, k - 1);
      break;
    }
  }
  r.layer_ = last;
  return r;
}

inline LayeredPcRelation pc_closure_layers(const Tournament& t) {
  return pc_closure_layers(t.digraph());
}

/// Whether the last layer of the construction relates u to v.
inline bool pc_reachable(const Tournament& t, Vertex u, Vertex v) {
  detail::require_vertex(t.digraph(), u);
  detail::require_vertex(t.digraph(), v);
  detail::require_distinct(u, v, "pc_reachable");
  return pc_closure_layers(t).reaches(u, v);
}

}  // namespace rainbow_kernels
