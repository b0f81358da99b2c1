#pragma once

// Closures, kernels of uncolored digraphs, rainbow kernels, PCP-kernels of
// tournaments and the sink-peeling procedure for acyclic digraphs.

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "rainbow_kernels/core.hpp"
#include "rainbow_kernels/reachability.hpp"

namespace rainbow_kernels {

/// Uncolored loopless simple digraph; arcs listed in (tail, head) order.
class ClosureDigraph {
 public:
  ClosureDigraph() = default;
  explicit ClosureDigraph(std::size_t n) : n_(n), matrix_(n * n, false) {}

  std::size_t n() const { return n_; }

  void add_arc(Vertex u, Vertex v) {
    if (u == v) throw ValidationError("closure arc " + std::to_string(u) + ": loop");
    matrix_[u * n_ + v] = true;
  }
  bool has_arc(Vertex u, Vertex v) const { return matrix_[u * n_ + v]; }

  std::vector<std::pair<Vertex, Vertex>> arcs() const {
    std::vector<std::pair<Vertex, Vertex>> out;
    for (Vertex u = 0; u < n_; ++u) {
      for (Vertex v = 0; v < n_; ++v) {
        if (has_arc(u, v)) out.emplace_back(u, v);
      }
    }
    return out;
  }
  std::size_t arc_count() const {
    return static_cast<std::size_t>(std::count(matrix_.begin(), matrix_.end(), true));
  }

  std::size_t in_degree(Vertex v) const {
    std::size_t d = 0;
    for (Vertex u = 0; u < n_; ++u) d += has_arc(u, v) ? 1 : 0;
    return d;
  }

  /// Same arcs, all colored 0.
  ColoredDigraph as_digraph() const {
    std::vector<Arc> out;
    for (const auto& [u, v] : arcs()) out.push_back({u, v, 0});
    return ColoredDigraph(n_, std::move(out));
  }

  friend bool operator==(const ClosureDigraph&, const ClosureDigraph&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<bool> matrix_;
};

inline ClosureDigraph closure_of_arcs(const ColoredDigraph& d) {
  ClosureDigraph g(d.n());
  for (const Arc& a : d.arcs()) g.add_arc(a.tail, a.head);
  return g;
}

/// Kernel S plus, for every vertex outside S in ascending order, a witness
/// leading from it into S.
struct KernelCertificate {
  std::vector<Vertex> kernel;  // ascending
  std::vector<PathWitness> witnesses;

  friend bool operator==(const KernelCertificate&, const KernelCertificate&) = default;
};

struct KernelLimits {
  std::size_t max_vertices = 24;
};

inline ClosureDigraph rainbow_closure(const ColoredDigraph& d) {
  ClosureDigraph g(d.n());
  for (Vertex u = 0; u < d.n(); ++u) {
    const std::vector<bool> reached = rainbow_targets(d, u);
    for (Vertex v = 0; v < d.n(); ++v) {
      if (reached[v]) g.add_arc(u, v);
    }
  }
  return g;
}

inline ClosureDigraph pc_closure(const LayeredPcRelation& layers) {
  ClosureDigraph g(layers.n());
  for (Vertex u = 0; u < layers.n(); ++u) {
    for (Vertex v = 0; v < layers.n(); ++v) {
      if (u != v && layers.reaches(u, v)) g.add_arc(u, v);
    }
  }
  return g;
}

inline ClosureDigraph pc_closure(const Tournament& t) { return pc_closure(pc_closure_layers(t)); }

namespace detail {

inline bool absorbs(const ClosureDigraph& g, const std::vector<bool>& in_set, Vertex w) {
  for (Vertex s = 0; s < g.n(); ++s) {
    if (in_set[s] && g.has_arc(w, s)) return true;
  }
  return false;
}

}  // namespace detail

/// Smallest kernel of `g`, lexicographically least among those of that size.
///
/// Exhaustive over independent sets; the kernel problem is NP-complete in
/// general so the instance size is guarded.
inline std::optional<KernelCertificate> kernel_of(const ClosureDigraph& g,
                                                  const KernelLimits& limits = {}) {
  const std::size_t n = g.n();
  if (n > limits.max_vertices) {
    throw GuardError("kernel_of: n=" + std::to_string(n) + " exceeds guard " +
                     std::to_string(limits.max_vertices));
  }
  std::vector<Vertex> chosen;
  std::vector<bool> in_set(n, false);

  auto is_kernel = [&] {
    for (Vertex w = 0; w < n; ++w) {
      if (!in_set[w] && !detail::absorbs(g, in_set, w)) return false;
    }
    return true;
  };
  // Combinations in lexicographic order, pruned to independent prefixes.
  auto search = [&](auto&& self, std::size_t size, Vertex from) -> bool {
    if (chosen.size() == size) return is_kernel();
    for (Vertex v = from; v < n; ++v) {
      if (n - v < size - chosen.size()) break;
      bool independent = true;
      for (Vertex s : chosen) {
        if (g.has_arc(s, v) || g.has_arc(v, s)) {
          independent = false;
          break;
        }
      }
      if (!independent) continue;
      chosen.push_back(v);
      in_set[v] = true;
      if (self(self, size, v + 1)) return true;
      in_set[v] = false;
      chosen.pop_back();
    }
    return false;
  };

  for (std::size_t size = 0; size <= n; ++size) {
    if (!search(search, size, 0)) continue;
    KernelCertificate cert{chosen, {}};
    for (Vertex w = 0; w < n; ++w) {
      if (in_set[w]) continue;
      for (Vertex s : chosen) {
        if (g.has_arc(w, s)) {
          cert.witnesses.push_back({{w, s}, {}, PathTag::closure_arc});
          break;
        }
      }
    }
    return cert;
  }
  return std::nullopt;
}

/// Checks independence and absorption of `cert` as a kernel of `g`.
inline std::optional<std::string> kernel_defect(const ClosureDigraph& g,
                                                const KernelCertificate& cert) {
  std::vector<bool> in_set(g.n(), false);
  for (Vertex s : cert.kernel) {
    if (s >= g.n()) return "kernel vertex out of range";
    in_set[s] = true;
  }
  for (Vertex a : cert.kernel) {
    for (Vertex b : cert.kernel) {
      if (a != b && g.has_arc(a, b)) {
        return "kernel vertices " + std::to_string(a) + " and " + std::to_string(b) + " are joined";
      }
    }
  }
  const ColoredDigraph host = g.as_digraph();
  std::size_t next = 0;
  for (Vertex w = 0; w < g.n(); ++w) {
    if (in_set[w]) continue;
    if (next >= cert.witnesses.size()) return "vertex " + std::to_string(w) + " has no witness";
    const PathWitness& p = cert.witnesses[next++];
    if (p.source() != w || !in_set[p.target()]) {
      return "witness for " + std::to_string(w) + " does not lead into the kernel";
    }
    if (auto defect = witness_defect(host, p)) return *defect;
  }
  if (next != cert.witnesses.size()) return "extra witnesses";
  return std::nullopt;
}

/// Checks `cert` as a rainbow kernel of `d`: no rainbow path joins two kernel
/// vertices, and every outside vertex carries a valid rainbow witness into S.
inline std::optional<std::string> rainbow_kernel_defect(const ColoredDigraph& d,
                                                        const KernelCertificate& cert) {
  std::vector<bool> in_set(d.n(), false);
  for (Vertex s : cert.kernel) {
    if (s >= d.n()) return "kernel vertex out of range";
    in_set[s] = true;
  }
  for (Vertex a : cert.kernel) {
    for (Vertex b : cert.kernel) {
      if (a != b && rainbow_reachable(d, a, b)) {
        return "rainbow path joins kernel vertices " + std::to_string(a) + " and " +
               std::to_string(b);
      }
    }
  }
  std::size_t next = 0;
  for (Vertex w = 0; w < d.n(); ++w) {
    if (in_set[w]) continue;
    if (next >= cert.witnesses.size()) return "vertex " + std::to_string(w) + " has no witness";
    const PathWitness& p = cert.witnesses[next++];
    if (p.tag != PathTag::rainbow) return "witness for " + std::to_string(w) + " is not rainbow";
    if (p.source() != w || !in_set[p.target()]) {
      return "witness for " + std::to_string(w) + " does not lead into the kernel";
    }
    if (auto defect = witness_defect(d, p)) return *defect;
  }
  if (next != cert.witnesses.size()) return "extra witnesses";
  return std::nullopt;
}

namespace detail {

// Replaces closure-arc witnesses with rainbow paths recomputed in `d`.
inline KernelCertificate upgrade_to_rainbow(const ColoredDigraph& d, KernelCertificate cert) {
  for (PathWitness& w : cert.witnesses) {
    auto path = rainbow_reachable(d, w.source(), w.target());
    if (!path) throw std::logic_error("closure arc without rainbow path");
    w = std::move(*path);
  }
  return cert;
}

}  // namespace detail

/// Rainbow kernel of `d` via its rainbow closure, witnesses as rainbow paths.
inline std::optional<KernelCertificate> rainbow_kernel(const ColoredDigraph& d,
                                                       const KernelLimits& limits = {}) {
  if (d.n() > limits.max_vertices) {
    throw GuardError("rainbow_kernel: n=" + std::to_string(d.n()) + " exceeds guard " +
                     std::to_string(limits.max_vertices));
  }
  auto cert = kernel_of(rainbow_closure(d), limits);
  if (!cert) return std::nullopt;
  return detail::upgrade_to_rainbow(d, std::move(*cert));
}

inline std::optional<KernelCertificate> rainbow_kernel(const Tournament& t,
                                                       const KernelLimits& limits = {}) {
  return rainbow_kernel(t.digraph(), limits);
}

namespace detail {

inline std::optional<Vertex> least_full_indegree(const ClosureDigraph& g) {
  if (g.n() == 0) return std::nullopt;
  for (Vertex v = 0; v < g.n(); ++v) {
    if (g.in_degree(v) == g.n() - 1) return v;
  }
  return std::nullopt;
}

}  // namespace detail

/// In a tournament any two vertices are joined by an arc, so a rainbow
/// kernel is a single vertex that every other vertex reaches by a rainbow
/// path. Returns the least such vertex.
inline std::optional<Vertex> rainbow_kernel_tournament(const Tournament& t) {
  return detail::least_full_indegree(rainbow_closure(t.digraph()));
}

/// Least vertex of in-degree n-1 in the PC closure built by the layered
/// construction, i.e. the PCP-kernel of the tournament.
inline std::optional<Vertex> pcp_kernel_tournament(const Tournament& t) {
  return detail::least_full_indegree(pc_closure(t));
}

/// PCP-kernel with certifying properly colored walks read off the layered
/// relation (one per other vertex, shortest layer first).
inline std::optional<KernelCertificate> pcp_kernel_certificate(const Tournament& t) {
  const LayeredPcRelation layers = pc_closure_layers(t);
  const auto kernel = detail::least_full_indegree(pc_closure(layers));
  if (!kernel) return std::nullopt;
  KernelCertificate cert{{*kernel}, {}};
  for (Vertex w = 0; w < t.n(); ++w) {
    if (w == *kernel) continue;
    std::optional<std::pair<PcState, PcState>> best;
    std::size_t best_layer = 0;
    for (Color c1 = 0; c1 < t.m(); ++c1) {
      for (Color c2 = 0; c2 < t.m(); ++c2) {
        const std::size_t added = layers.added_at({w, c1}, {*kernel, c2});
        if (added != 0 && (!best || added < best_layer)) {
          best = {{w, c1}, {*kernel, c2}};
          best_layer = added;
        }
      }
    }
    cert.witnesses.push_back(layers.walk(t.digraph(), best->first, best->second));
  }
  return cert;
}

struct PeelingResult {
  KernelCertificate certificate;
  std::size_t rounds = 0;
};

/// Sink peeling on an acyclic digraph: put the current sinks into S, delete
/// every remaining vertex with a rainbow path (in d) into S, repeat until no
/// vertex is left.
inline PeelingResult peel_acyclic_rainbow_kernel(const ColoredDigraph& d) {
  if (!is_acyclic(d)) throw PreconditionError("acyclic_rainbow_kernel: input has a cycle");
  const std::size_t n = d.n();
  std::vector<bool> remaining(n, true), in_set(n, false);
  std::vector<std::vector<bool>> reach(n);
  for (Vertex v = 0; v < n; ++v) reach[v] = rainbow_targets(d, v);
  std::size_t left = n;
  PeelingResult result;
  while (left > 0) {
    ++result.rounds;
    std::vector<Vertex> sinks;
    for (Vertex v = 0; v < n; ++v) {
      if (!remaining[v]) continue;
      bool sink = true;
      for (std::size_t arc_index : d.out_arcs(v)) {
        if (remaining[d.arcs()[arc_index].head]) {
          sink = false;
          break;
        }
      }
      if (sink) sinks.push_back(v);
    }
    for (Vertex s : sinks) {
      in_set[s] = true;
      remaining[s] = false;
      --left;
    }
    for (Vertex v = 0; v < n; ++v) {
      if (!remaining[v]) continue;
      for (Vertex s = 0; s < n; ++s) {
        if (in_set[s] && reach[v][s]) {
          remaining[v] = false;
          --left;
          break;
        }
      }
    }
  }
  for (Vertex v = 0; v < n; ++v) {
    if (in_set[v]) result.certificate.kernel.push_back(v);
  }
  for (Vertex w = 0; w < n; ++w) {
    if (in_set[w]) continue;
    for (Vertex s : result.certificate.kernel) {
      if (reach[w][s]) {
        result.certificate.witnesses.push_back(*rainbow_reachable(d, w, s));
        break;
      }
    }
  }
  return result;
}

inline KernelCertificate acyclic_rainbow_kernel(const ColoredDigraph& d) {
  return peel_acyclic_rainbow_kernel(d).certificate;
}

}  // namespace rainbow_kernels
