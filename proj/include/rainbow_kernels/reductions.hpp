#pragma once

// The reduction chain 3DPM -> RPOG -> RKT as executable constructions, plus
// exhaustive solvers used to check both equivalences on small instances.

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "rainbow_kernels/core.hpp"
#include "rainbow_kernels/kernels.hpp"
#include "rainbow_kernels/reachability.hpp"

namespace rainbow_kernels {

using Triple = std::array<std::uint32_t, 3>;

/// 3-uniform hypergraph on the elements {1, ..., 3n}.
class Hypergraph3 {
 public:
  Hypergraph3() = default;

  /// Sorts each edge; throws ValidationError on out-of-range or repeated
  /// elements, duplicate edges or an empty edge list.
  Hypergraph3(std::size_t n_groups, std::vector<Triple> edges)
      : n_groups_(n_groups), edges_(std::move(edges)) {
    if (n_groups_ == 0) throw ValidationError("hypergraph needs at least one group (3n >= 3)");
    if (edges_.empty()) throw ValidationError("hypergraph needs at least one edge");
    for (std::size_t j = 0; j < edges_.size(); ++j) {
      Triple& e = edges_[j];
      std::sort(e.begin(), e.end());
      if (e[0] < 1 || e[2] > 3 * n_groups_) {
        throw ValidationError("edge " + std::to_string(j) + ": element out of range 1.." +
                              std::to_string(3 * n_groups_));
      }
      if (e[0] == e[1] || e[1] == e[2]) {
        throw ValidationError("edge " + std::to_string(j) + ": repeated element");
      }
      for (std::size_t i = 0; i < j; ++i) {
        if (edges_[i] == e) throw ValidationError("edge " + std::to_string(j) + ": duplicate edge");
      }
    }
  }

  std::size_t n_groups() const { return n_groups_; }
  std::size_t element_count() const { return 3 * n_groups_; }
  std::size_t edge_count() const { return edges_.size(); }
  const std::vector<Triple>& edges() const { return edges_; }

  friend bool operator==(const Hypergraph3&, const Hypergraph3&) = default;

 private:
  std::size_t n_groups_ = 0;
  std::vector<Triple> edges_;
};

/// Arc-colored oriented graph with two distinct query vertices.
struct RpogInstance {
  ColoredDigraph digraph;
  Vertex x = 0;
  Vertex y = 0;

  RpogInstance() = default;
  RpogInstance(ColoredDigraph d, Vertex x_, Vertex y_) : digraph(std::move(d)), x(x_), y(y_) {
    if (x >= digraph.n() || y >= digraph.n()) throw ValidationError("query vertex out of range");
    if (x == y) throw ValidationError("query vertices must differ");
    for (const Arc& a : digraph.arcs()) {
      if (digraph.has_arc(a.head, a.tail)) {
        throw ValidationError("not an oriented graph: mutual pair {" + std::to_string(a.tail) +
                              "," + std::to_string(a.head) + "}");
      }
    }
  }
};

class VerificationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// ---------------------------------------------------------------------------
// Text formats

inline Hypergraph3 parse_hypergraph(std::string_view text) {
  const auto lines = detail::tokenize(text);
  if (lines.empty()) throw ParseError("line 1: missing header");
  const auto& header = lines.front();
  if (header.tokens[0] != "hypergraph3" || header.tokens.size() != 3) {
    detail::fail(header.number, "expected 'hypergraph3 <3n> <m>'");
  }
  const std::uint64_t elements = detail::parse_uint(header, 1);
  const std::uint64_t m = detail::parse_uint(header, 2);
  if (elements == 0 || elements % 3 != 0) {
    detail::fail(header.number, "element count must be a positive multiple of 3");
  }
  std::vector<Triple> edges;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto& line = lines[i];
    if (line.tokens[0] != "edge" || line.tokens.size() != 4) {
      detail::fail(line.number, "expected 'edge <a> <b> <c>'");
    }
    Triple e{};
    for (std::size_t k = 0; k < 3; ++k) {
      const std::uint64_t v = detail::parse_uint(line, k + 1);
      if (v < 1 || v > elements) detail::fail(line.number, "element out of range");
      e[k] = static_cast<std::uint32_t>(v);
    }
    edges.push_back(e);
  }
  if (edges.size() != m) {
    detail::fail(header.number, "declared " + std::to_string(m) + " edges, found " +
                                    std::to_string(edges.size()));
  }
  try {
    return Hypergraph3(elements / 3, std::move(edges));
  } catch (const ValidationError& e) {
    throw ParseError(std::string("hypergraph: ") + e.what());
  }
}

inline std::string serialize_hypergraph(const Hypergraph3& h) {
  std::ostringstream out;
  out << "hypergraph3 " << h.element_count() << ' ' << h.edge_count() << '\n';
  for (const Triple& e : h.edges()) out << "edge " << e[0] << ' ' << e[1] << ' ' << e[2] << '\n';
  return out.str();
}

inline RpogInstance parse_rpog(std::string_view text) {
  auto parsed = detail::parse_instance(text, true);
  if (!parsed.query) throw ParseError("missing 'query <x> <y>' line");
  try {
    return RpogInstance(std::move(parsed.digraph), parsed.query->first, parsed.query->second);
  } catch (const ValidationError& e) {
    throw ParseError(std::string("rpog instance: ") + e.what());
  }
}

inline std::string serialize_rpog(const RpogInstance& r) {
  return serialize_digraph(r.digraph) + "query " + std::to_string(r.x) + ' ' +
         std::to_string(r.y) + '\n';
}

// ---------------------------------------------------------------------------
// 3DPM -> RPOG

/// Vertex ids of the path gadget: x_i = i for 0 <= i <= n, then the two
/// internal vertices of P_i^j (segment i = 1..n, path j = 1..m) in
/// segment-major, path-minor, position-minor order.
struct DhLayout {
  std::size_t n_groups = 0;
  std::size_t paths = 0;

  Vertex junction(std::size_t i) const { return static_cast<Vertex>(i); }
  Vertex internal(std::size_t segment, std::size_t path, std::size_t position) const {
    return static_cast<Vertex>(n_groups + 1 + ((segment - 1) * paths + (path - 1)) * 2 + position);
  }
  std::size_t vertex_count() const { return 2 * n_groups * paths + n_groups + 1; }
  std::size_t arc_count() const { return 3 * n_groups * paths; }
};

/// Chains x_0 .. x_n with m internally disjoint 3-arc paths per segment; the
/// arcs of P_i^j carry the elements of h_j in ascending order, compacted to
/// dense color ids. Query pair (x_0, x_n).
inline RpogInstance build_dh(const Hypergraph3& h) {
  const DhLayout layout{h.n_groups(), h.edge_count()};
  std::vector<Arc> arcs;
  arcs.reserve(layout.arc_count());
  for (std::size_t i = 1; i <= layout.n_groups; ++i) {
    for (std::size_t j = 1; j <= layout.paths; ++j) {
      const Triple& e = h.edges()[j - 1];
      const Vertex route[4] = {layout.junction(i - 1), layout.internal(i, j, 0),
                               layout.internal(i, j, 1), layout.junction(i)};
      for (std::size_t k = 0; k < 3; ++k) arcs.push_back({route[k], route[k + 1], e[k]});
    }
  }
  return RpogInstance(with_compacted_colors(layout.vertex_count(), std::move(arcs)),
                      layout.junction(0), layout.junction(layout.n_groups));
}

// ---------------------------------------------------------------------------
// RPOG -> RKT

struct TdConstruction {
  Tournament tournament;
  std::size_t base_vertices = 0;  // ids 0..base_vertices-1 are V(D)
  Vertex x_prime = 0;
  Vertex x_dprime = 0;
  Vertex y_prime = 0;
  Vertex y_dprime = 0;
  Color alpha = 0;
  Color beta = 0;
  Color gamma = 0;
  Color omega = 0;
};

/// Completes D into a tournament on V(D) plus four new vertices x', x'', y',
/// y'' using four fresh colors. Non-adjacent pairs of D get an alpha arc
/// from the lower to the higher id.
inline TdConstruction build_td(const RpogInstance& r) {
  const ColoredDigraph& d = r.digraph;
  const std::size_t n = d.n();
  TdConstruction td;
  td.base_vertices = n;
  td.x_prime = static_cast<Vertex>(n);
  td.x_dprime = static_cast<Vertex>(n + 1);
  td.y_prime = static_cast<Vertex>(n + 2);
  td.y_dprime = static_cast<Vertex>(n + 3);
  td.alpha = static_cast<Color>(d.m());
  td.beta = td.alpha + 1;
  td.gamma = td.alpha + 2;
  td.omega = td.alpha + 3;

  std::vector<Arc> arcs = d.arcs();
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (!d.has_arc(u, v) && !d.has_arc(v, u)) arcs.push_back({u, v, td.alpha});
    }
  }
  for (Vertex v = 0; v < n; ++v) {
    if (v == r.x) {
      arcs.push_back({td.x_prime, v, td.alpha});
    } else {
      arcs.push_back({v, td.x_prime, td.beta});
    }
    arcs.push_back({v, td.x_dprime, td.alpha});
    arcs.push_back({v, td.y_prime, v == r.y ? td.gamma : td.alpha});
    arcs.push_back({v, td.y_dprime, td.alpha});
  }
  arcs.push_back({td.x_dprime, td.x_prime, td.beta});
  arcs.push_back({td.x_prime, td.y_prime, td.beta});
  arcs.push_back({td.x_prime, td.y_dprime, td.beta});
  arcs.push_back({td.y_prime, td.x_dprime, td.beta});
  arcs.push_back({td.y_dprime, td.x_dprime, td.beta});
  arcs.push_back({td.y_prime, td.y_dprime, td.omega});
  td.tournament = Tournament(ColoredDigraph(n + 4, std::move(arcs)));
  return td;
}

// ---------------------------------------------------------------------------
// Exhaustive solvers and the chain check

struct MatchingLimits {
  std::size_t max_edges = 20;
  std::size_t max_groups = 6;
};

/// Perfect matching as ascending edge indices, or nullopt. Branches on the
/// smallest uncovered element, trying edges in index order.
inline std::optional<std::vector<std::size_t>> solve_3dpm_bruteforce(
    const Hypergraph3& h, const MatchingLimits& limits = {}) {
  if (h.edge_count() > limits.max_edges || h.n_groups() > limits.max_groups) {
    throw GuardError("solve_3dpm_bruteforce: instance exceeds guard (m <= " +
                     std::to_string(limits.max_edges) + ", n <= " +
                     std::to_string(limits.max_groups) + ")");
  }
  std::vector<bool> covered(h.element_count() + 1, false);
  std::vector<std::size_t> chosen;
  auto search = [&](auto&& self) -> bool {
    std::uint32_t first = 1;
    while (first <= h.element_count() && covered[first]) ++first;
    if (first > h.element_count()) return true;
    for (std::size_t j = 0; j < h.edge_count(); ++j) {
      const Triple& e = h.edges()[j];
      if (std::find(e.begin(), e.end(), first) == e.end()) continue;
      if (covered[e[0]] || covered[e[1]] || covered[e[2]]) continue;
      for (auto v : e) covered[v] = true;
      chosen.push_back(j);
      if (self(self)) return true;
      chosen.pop_back();
      for (auto v : e) covered[v] = false;
    }
    return false;
  };
  if (!search(search)) return std::nullopt;
  std::sort(chosen.begin(), chosen.end());
  return chosen;
}

struct ChainLimits {
  MatchingLimits matching;
  // D_H is a union of disjoint paths, so exhaustive path search stays cheap
  // well past the default oracle guard.
  OracleLimits path_oracle{32};
  KernelLimits kernel;
};

struct ChainReport {
  std::optional<std::vector<std::size_t>> matching;
  std::optional<PathWitness> rainbow_path;     // in D_H from x_0 to x_n
  std::optional<KernelCertificate> kernel;     // rainbow kernel of T_{D_H}
  std::size_t dh_vertices = 0;
  std::size_t dh_arcs = 0;
  std::size_t td_vertices = 0;

  bool answer() const { return matching.has_value(); }
};

/// Decides 3DPM on h, RPOG on D_H and RKT on T_{D_H} independently and
/// requires all three answers to agree. Throws VerificationError otherwise.
inline ChainReport verify_chain(const Hypergraph3& h, const ChainLimits& limits = {}) {
  ChainReport report;
  report.matching = solve_3dpm_bruteforce(h, limits.matching);
  const RpogInstance dh = build_dh(h);
  const DhLayout layout{h.n_groups(), h.edge_count()};
  report.dh_vertices = dh.digraph.n();
  report.dh_arcs = dh.digraph.arc_count();
  if (report.dh_vertices != layout.vertex_count() || report.dh_arcs != layout.arc_count()) {
    throw VerificationError("D_H size formula violated");
  }
  report.rainbow_path = rainbow_reachable_bruteforce(dh.digraph, dh.x, dh.y, limits.path_oracle);
  const TdConstruction td = build_td(dh);
  report.td_vertices = td.tournament.n();
  report.kernel = rainbow_kernel(td.tournament, limits.kernel);

  const bool matching = report.matching.has_value();
  const bool path = report.rainbow_path.has_value();
  const bool kernel = report.kernel.has_value();
  auto yn = [](bool b) { return b ? std::string("yes") : std::string("no"); };
  if (matching != path) {
    throw VerificationError("3DPM (" + yn(matching) + ") disagrees with RPOG on D_H (" + yn(path) +
                            ")");
  }
  if (path != kernel) {
    throw VerificationError("RPOG on D_H (" + yn(path) + ") disagrees with RKT on T_D (" +
                            yn(kernel) + ")");
  }
  return report;
}

}  // namespace rainbow_kernels
