#pragma once

// Arc-colored digraphs: data model, validation, text/DOT serialization,
// induced subdigraphs and strongly connected components.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace rainbow_kernels {

using Vertex = std::uint32_t;
using Color = std::uint32_t;

/// Malformed instance text. The message names the offending line.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A value violates a structural invariant (loop, duplicate arc, not a tournament, ...).
class ValidationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An exponential procedure refused an instance above its configured size guard.
class GuardError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A documented precondition of an operation does not hold.
class PreconditionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Arc {
  Vertex tail = 0;
  Vertex head = 0;
  Color color = 0;

  friend bool operator==(const Arc&, const Arc&) = default;
};

/// Simple loopless digraph whose arcs carry dense color ids 0..m-1.
/// Arc order is the construction order and every iteration follows it.
class ColoredDigraph {
 public:
  ColoredDigraph() = default;

  /// Throws ValidationError on loops, duplicate arcs, out-of-range vertices
  /// or a color palette that is not exactly {0..m-1}.
  ColoredDigraph(std::size_t n, std::vector<Arc> arcs) : n_(n), arcs_(std::move(arcs)) {
    out_.assign(n_, {});
    in_.assign(n_, {});
    matrix_.assign(n_ * n_, kNoArc);
    Color max_color = 0;
    for (std::size_t i = 0; i < arcs_.size(); ++i) {
      const Arc& a = arcs_[i];
      if (a.tail >= n_ || a.head >= n_) {
        throw ValidationError("arc " + describe(a) + ": vertex out of range for n=" +
                              std::to_string(n_));
      }
      if (a.tail == a.head) throw ValidationError("arc " + describe(a) + ": loop");
      std::int32_t& slot = matrix_[a.tail * n_ + a.head];
      if (slot != kNoArc) throw ValidationError("arc " + describe(a) + ": duplicate arc");
      slot = static_cast<std::int32_t>(a.color);
      out_[a.tail].push_back(i);
      in_[a.head].push_back(i);
      max_color = std::max(max_color, a.color);
    }
    if (!arcs_.empty()) {
      std::vector<bool> used(static_cast<std::size_t>(max_color) + 1, false);
      for (const Arc& a : arcs_) used[a.color] = true;
      for (std::size_t c = 0; c < used.size(); ++c) {
        if (!used[c]) {
          throw ValidationError("color " + std::to_string(c) +
                                " is unused but a larger color id appears (colors must be dense)");
        }
      }
      m_ = used.size();
    }
  }

  std::size_t n() const { return n_; }
  std::size_t m() const { return m_; }
  std::size_t arc_count() const { return arcs_.size(); }
  const std::vector<Arc>& arcs() const { return arcs_; }

  /// Indices into arcs() of the arcs leaving v, in arc order.
  const std::vector<std::size_t>& out_arcs(Vertex v) const { return out_[v]; }
  const std::vector<std::size_t>& in_arcs(Vertex v) const { return in_[v]; }

  bool has_arc(Vertex u, Vertex v) const { return matrix_[u * n_ + v] != kNoArc; }

  std::optional<Color> color(Vertex u, Vertex v) const {
    const std::int32_t c = matrix_[u * n_ + v];
    if (c == kNoArc) return std::nullopt;
    return static_cast<Color>(c);
  }

  friend bool operator==(const ColoredDigraph& a, const ColoredDigraph& b) {
    return a.n_ == b.n_ && a.arcs_ == b.arcs_;
  }

 private:
  static constexpr std::int32_t kNoArc = -1;

  static std::string describe(const Arc& a) {
    return std::to_string(a.tail) + "->" + std::to_string(a.head) + " color " +
           std::to_string(a.color);
  }

  std::size_t n_ = 0;
  std::size_t m_ = 0;
  std::vector<Arc> arcs_;
  std::vector<std::vector<std::size_t>> out_;
  std::vector<std::vector<std::size_t>> in_;
  std::vector<std::int32_t> matrix_;
};

/// Renumbers arbitrary color ids to 0..k-1 preserving their relative order,
/// then builds the digraph.
inline ColoredDigraph with_compacted_colors(std::size_t n, std::vector<Arc> arcs) {
  std::vector<Color> ids;
  ids.reserve(arcs.size());
  for (const Arc& a : arcs) ids.push_back(a.color);
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
  for (Arc& a : arcs) {
    a.color = static_cast<Color>(std::lower_bound(ids.begin(), ids.end(), a.color) - ids.begin());
  }
  return ColoredDigraph(n, std::move(arcs));
}

/// A ColoredDigraph with exactly one arc between every pair of distinct vertices.
class Tournament {
 public:
  Tournament() = default;

  explicit Tournament(ColoredDigraph d) : d_(std::move(d)) {
    const std::size_t n = d_.n();
    for (Vertex u = 0; u < n; ++u) {
      for (Vertex v = u + 1; v < n; ++v) {
        const bool forward = d_.has_arc(u, v);
        const bool backward = d_.has_arc(v, u);
        if (forward && backward) {
          throw ValidationError("not a tournament: mutual pair {" + std::to_string(u) + "," +
                                std::to_string(v) + "}");
        }
        if (!forward && !backward) {
          throw ValidationError("not a tournament: missing pair {" + std::to_string(u) + "," +
                                std::to_string(v) + "}");
        }
      }
    }
  }

  const ColoredDigraph& digraph() const { return d_; }
  std::size_t n() const { return d_.n(); }
  std::size_t m() const { return d_.m(); }

  friend bool operator==(const Tournament&, const Tournament&) = default;

 private:
  ColoredDigraph d_;
};

inline Tournament validate_tournament(ColoredDigraph d) { return Tournament(std::move(d)); }

// ---------------------------------------------------------------------------
// Path witnesses

enum class PathTag {
  closure_arc,       // a single arc of an uncolored closure digraph; colors empty
  rainbow,           // pairwise distinct colors
  properly_colored,  // consecutive colors differ
};

/// Vertex sequence v_0..v_k (k >= 1) with the color of each traversed arc.
struct PathWitness {
  std::vector<Vertex> vertices;
  std::vector<Color> colors;
  PathTag tag = PathTag::rainbow;

  Vertex source() const { return vertices.front(); }
  Vertex target() const { return vertices.back(); }
  std::size_t length() const { return vertices.size() - 1; }

  friend bool operator==(const PathWitness&, const PathWitness&) = default;
};

/// Builds a witness for `vertices`, reading arc colors from `d`.
/// Returns nullopt if some consecutive pair is not an arc.
inline std::optional<PathWitness> witness_from_vertices(const ColoredDigraph& d,
                                                        std::vector<Vertex> vertices,
                                                        PathTag tag) {
  PathWitness w{std::move(vertices), {}, tag};
  for (std::size_t i = 0; i + 1 < w.vertices.size(); ++i) {
    const auto c = d.color(w.vertices[i], w.vertices[i + 1]);
    if (!c) return std::nullopt;
    w.colors.push_back(*c);
  }
  return w;
}

/// Describes why `w` fails to certify its tag as a walk in `d` (vertices may
/// repeat); nullopt when it is valid.
inline std::optional<std::string> walk_defect(const ColoredDigraph& d, const PathWitness& w) {
  if (w.vertices.size() < 2) return "witness has fewer than two vertices";
  for (Vertex v : w.vertices) {
    if (v >= d.n()) return "vertex " + std::to_string(v) + " out of range";
  }
  if (w.tag == PathTag::closure_arc) {
    if (w.vertices.size() != 2 || !w.colors.empty()) return "closure witness must be one uncolored arc";
    if (!d.has_arc(w.vertices[0], w.vertices[1])) return "closure arc missing";
    return std::nullopt;
  }
  if (w.colors.size() + 1 != w.vertices.size()) return "color count does not match path length";
  for (std::size_t i = 0; i + 1 < w.vertices.size(); ++i) {
    const auto c = d.color(w.vertices[i], w.vertices[i + 1]);
    if (!c) {
      return "missing arc " + std::to_string(w.vertices[i]) + "->" +
             std::to_string(w.vertices[i + 1]);
    }
    if (*c != w.colors[i]) return "recorded color differs at position " + std::to_string(i);
  }
  if (w.tag == PathTag::rainbow) {
    std::vector<Color> cs = w.colors;
    std::sort(cs.begin(), cs.end());
    if (std::adjacent_find(cs.begin(), cs.end()) != cs.end()) return "repeated color";
  } else {
    for (std::size_t i = 0; i + 1 < w.colors.size(); ++i) {
      if (w.colors[i] == w.colors[i + 1]) return "consecutive arcs share a color";
    }
  }
  return std::nullopt;
}

/// As walk_defect, and additionally requires pairwise distinct vertices.
/// Closure-arc witnesses are checked against `d` as an uncolored relation.
inline std::optional<std::string> witness_defect(const ColoredDigraph& d, const PathWitness& w) {
  if (auto defect = walk_defect(d, w)) return defect;
  std::vector<Vertex> sorted = w.vertices;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return "repeated vertex";
  return std::nullopt;
}

inline bool is_valid_witness(const ColoredDigraph& d, const PathWitness& w) {
  return !witness_defect(d, w).has_value();
}

// ---------------------------------------------------------------------------
// Instance text format
//
//   digraph <n> <m>        (or: tournament <n> <m>)
//   arc <tail> <head> <color>
//
// '#' starts a comment; blank lines are ignored.

namespace detail {

struct Line {
  std::size_t number = 0;
  std::vector<std::string> tokens;
};

inline std::vector<Line> tokenize(std::string_view text) {
  std::vector<Line> lines;
  std::size_t number = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view raw = text.substr(pos, end - pos);
    ++number;
    if (const auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
    std::istringstream in{std::string(raw)};
    Line line{number, {}};
    for (std::string tok; in >> tok;) line.tokens.push_back(std::move(tok));
    if (!line.tokens.empty()) lines.push_back(std::move(line));
    if (end == text.size()) break;
    pos = end + 1;
  }
  return lines;
}

[[noreturn]] inline void fail(std::size_t line, const std::string& what) {
  throw ParseError("line " + std::to_string(line) + ": " + what);
}

inline std::uint64_t parse_uint(const Line& line, std::size_t i) {
  const std::string& tok = line.tokens[i];
  if (tok.empty() || tok.size() > 9 ||
      !std::all_of(tok.begin(), tok.end(), [](char ch) { return ch >= '0' && ch <= '9'; })) {
    fail(line.number, "expected a non-negative integer, got '" + tok + "'");
  }
  return std::stoull(tok);
}

struct ParsedInstance {
  ColoredDigraph digraph;
  bool tournament_header = false;
  std::optional<std::pair<Vertex, Vertex>> query;
};

// Adjacency is stored as an n x n matrix.
inline constexpr std::uint64_t kMaxParsedVertices = 4096;

inline ParsedInstance parse_instance(std::string_view text, bool allow_query) {
  const std::vector<Line> lines = tokenize(text);
  if (lines.empty()) throw ParseError("line 1: missing header");
  const Line& header = lines.front();
  if (header.tokens[0] != "digraph" && header.tokens[0] != "tournament") {
    fail(header.number, "expected 'digraph <n> <m>' or 'tournament <n> <m>'");
  }
  if (header.tokens.size() != 3) fail(header.number, "malformed header");
  const std::uint64_t n = parse_uint(header, 1);
  const std::uint64_t m = parse_uint(header, 2);
  if (n > kMaxParsedVertices) fail(header.number, "vertex count exceeds " + std::to_string(kMaxParsedVertices));

  ParsedInstance out;
  out.tournament_header = header.tokens[0] == "tournament";
  std::vector<Arc> arcs;
  std::vector<bool> seen(n * n, false);
  std::vector<bool> color_used(m, false);
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const Line& line = lines[i];
    if (out.query) fail(line.number, "nothing may follow the query line");
    if (line.tokens[0] == "arc") {
      if (line.tokens.size() != 4) fail(line.number, "expected 'arc <tail> <head> <color>'");
      const std::uint64_t u = parse_uint(line, 1);
      const std::uint64_t v = parse_uint(line, 2);
      const std::uint64_t c = parse_uint(line, 3);
      if (u >= n || v >= n) fail(line.number, "vertex out of range");
      if (c >= m) fail(line.number, "color out of range");
      if (u == v) fail(line.number, "loop");
      if (seen[u * n + v]) fail(line.number, "duplicate arc");
      seen[u * n + v] = true;
      color_used[c] = true;
      arcs.push_back({static_cast<Vertex>(u), static_cast<Vertex>(v), static_cast<Color>(c)});
    } else if (allow_query && line.tokens[0] == "query") {
      if (line.tokens.size() != 3) fail(line.number, "expected 'query <x> <y>'");
      const std::uint64_t x = parse_uint(line, 1);
      const std::uint64_t y = parse_uint(line, 2);
      if (x >= n || y >= n) fail(line.number, "query vertex out of range");
      out.query = {static_cast<Vertex>(x), static_cast<Vertex>(y)};
    } else {
      fail(line.number, "unknown directive '" + line.tokens[0] + "'");
    }
  }
  for (std::size_t c = 0; c < m; ++c) {
    if (!color_used[c]) {
      fail(header.number, "declared " + std::to_string(m) + " colors but color " +
                              std::to_string(c) + " is unused");
    }
  }
  out.digraph = ColoredDigraph(n, std::move(arcs));
  if (out.tournament_header) {
    try {
      Tournament check(out.digraph);
    } catch (const ValidationError& e) {
      fail(header.number, e.what());
    }
  }
  return out;
}

inline void write_arcs(std::ostringstream& out, const ColoredDigraph& d) {
  for (const Arc& a : d.arcs()) out << "arc " << a.tail << ' ' << a.head << ' ' << a.color << '\n';
}

}  // namespace detail

/// Parses the instance format. A `tournament` header additionally requires a tournament.
inline ColoredDigraph parse_digraph(std::string_view text) {
  return detail::parse_instance(text, false).digraph;
}

inline Tournament parse_tournament(std::string_view text) {
  return Tournament(parse_digraph(text));
}

inline std::string serialize_digraph(const ColoredDigraph& d) {
  std::ostringstream out;
  out << "digraph " << d.n() << ' ' << d.m() << '\n';
  detail::write_arcs(out, d);
  return out.str();
}

inline std::string serialize_tournament(const Tournament& t) {
  std::ostringstream out;
  out << "tournament " << t.n() << ' ' << t.m() << '\n';
  detail::write_arcs(out, t.digraph());
  return out.str();
}

/// Graphviz rendering. Each color id gets a fixed line style and palette entry.
inline std::string serialize_dot(const ColoredDigraph& d) {
  static constexpr std::string_view kStyles[] = {"solid", "dotted", "dashed", "bold"};
  static constexpr std::string_view kPalette[] = {"black",  "red",    "blue",  "darkgreen",
                                                  "orange", "purple", "brown", "cyan4"};
  std::ostringstream out;
  out << "digraph G {\n";
  for (Vertex v = 0; v < d.n(); ++v) out << "  " << v << ";\n";
  for (const Arc& a : d.arcs()) {
    out << "  " << a.tail << " -> " << a.head << " [label=\"" << a.color << "\", style="
        << kStyles[a.color % std::size(kStyles)]
        << ", color=" << kPalette[a.color % std::size(kPalette)] << "];\n";
  }
  out << "}\n";
  return out.str();
}

// ---------------------------------------------------------------------------
// Structure

struct InducedSubdigraph {
  ColoredDigraph digraph;
  std::vector<Vertex> original;  // new id -> original id, ascending
};

/// Restricts `d` to `vertices` (any order, duplicates ignored), relabels
/// ascending and compacts the surviving colors preserving their order.
inline InducedSubdigraph induced_subdigraph(const ColoredDigraph& d, std::vector<Vertex> vertices) {
  std::sort(vertices.begin(), vertices.end());
  vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
  std::vector<std::int64_t> relabel(d.n(), -1);
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    if (vertices[i] >= d.n()) {
      throw ValidationError("vertex " + std::to_string(vertices[i]) + " out of range");
    }
    relabel[vertices[i]] = static_cast<std::int64_t>(i);
  }
  std::vector<Arc> arcs;
  for (const Arc& a : d.arcs()) {
    if (relabel[a.tail] >= 0 && relabel[a.head] >= 0) {
      arcs.push_back({static_cast<Vertex>(relabel[a.tail]), static_cast<Vertex>(relabel[a.head]),
                      a.color});
    }
  }
  return {with_compacted_colors(vertices.size(), std::move(arcs)), std::move(vertices)};
}

/// Number of distinct colors on the arcs induced by `vertices`.
inline std::size_t induced_color_count(const ColoredDigraph& d, const std::vector<Vertex>& vertices) {
  std::vector<Color> colors;
  for (Vertex u : vertices) {
    for (Vertex v : vertices) {
      if (const auto c = d.color(u, v)) colors.push_back(*c);
    }
  }
  std::sort(colors.begin(), colors.end());
  return static_cast<std::size_t>(std::unique(colors.begin(), colors.end()) - colors.begin());
}

/// Strongly connected components in topological order of the condensation:
/// every arc between components points forward, so the last entry is a sink
/// component. Vertices inside a component are ascending.
inline std::vector<std::vector<Vertex>> strongly_connected_components(const ColoredDigraph& d) {
  const std::size_t n = d.n();
  constexpr std::size_t kUnvisited = static_cast<std::size_t>(-1);
  std::vector<std::size_t> index(n, kUnvisited), low(n, 0);
  std::vector<bool> on_stack(n, false);
  std::vector<Vertex> stack;
  std::vector<std::vector<Vertex>> components;  // Tarjan emits sinks first
  std::size_t counter = 0;

  struct Frame {
    Vertex v;
    std::size_t next;
  };
  std::vector<Frame> call;
  for (Vertex root = 0; root < n; ++root) {
    if (index[root] != kUnvisited) continue;
    call.push_back({root, 0});
    index[root] = low[root] = counter++;
    stack.push_back(root);
    on_stack[root] = true;
    while (!call.empty()) {
      Frame& f = call.back();
      const auto& out = d.out_arcs(f.v);
      if (f.next < out.size()) {
        const Vertex w = d.arcs()[out[f.next++]].head;
        if (index[w] == kUnvisited) {
          index[w] = low[w] = counter++;
          stack.push_back(w);
          on_stack[w] = true;
          call.push_back({w, 0});
        } else if (on_stack[w]) {
          low[f.v] = std::min(low[f.v], index[w]);
        }
        continue;
      }
      const Vertex v = f.v;
      call.pop_back();
      if (!call.empty()) low[call.back().v] = std::min(low[call.back().v], low[v]);
      if (low[v] == index[v]) {
        std::vector<Vertex> component;
        Vertex w;
        do {
          w = stack.back();
          stack.pop_back();
          on_stack[w] = false;
          component.push_back(w);
        } while (w != v);
        std::sort(component.begin(), component.end());
        components.push_back(std::move(component));
      }
    }
  }
  std::reverse(components.begin(), components.end());
  return components;
}

inline bool is_strongly_connected(const ColoredDigraph& d) {
  return d.n() <= 1 || strongly_connected_components(d).size() == 1;
}

inline bool is_acyclic(const ColoredDigraph& d) {
  return strongly_connected_components(d).size() == d.n();
}

/// Whether the vertices in `subset` induce a strongly connected subdigraph.
inline bool induces_strongly_connected(const ColoredDigraph& d, const std::vector<Vertex>& subset) {
  if (subset.size() <= 1) return true;
  // Forward and backward search from subset[0] within the subset.
  std::vector<bool> member(d.n(), false);
  for (Vertex v : subset) member[v] = true;
  for (const bool forward : {true, false}) {
    std::vector<bool> seen(d.n(), false);
    std::vector<Vertex> todo{subset.front()};
    seen[subset.front()] = true;
    std::size_t reached = 1;
    while (!todo.empty()) {
      const Vertex v = todo.back();
      todo.pop_back();
      for (Vertex w : subset) {
        if (!seen[w] && (forward ? d.has_arc(v, w) : d.has_arc(w, v))) {
          seen[w] = true;
          ++reached;
          todo.push_back(w);
        }
      }
    }
    if (reached != subset.size()) return false;
  }
  return true;
}

}  // namespace rainbow_kernels
