#pragma once

// Command-line front end. Every subcommand parses its input, calls the
// library and renders the result with the format_* functions below, so the
// same inputs through the API produce byte-identical text.
//
// Exit codes: 0 decided/constructed, 1 decided negatively, 2 input error,
// 3 instance refused by a size guard.

#include <CLI11.hpp>

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "rainbow_kernels/core.hpp"
#include "rainbow_kernels/generators.hpp"
#include "rainbow_kernels/kernels.hpp"
#include "rainbow_kernels/reachability.hpp"
#include "rainbow_kernels/reductions.hpp"

namespace rainbow_kernels {

struct CommandOutcome {
  int exit_code = 0;
  std::string report_text;  // stdout
  std::string error_text;   // stderr
};

namespace exit_code {
inline constexpr int decided = 0;
inline constexpr int negative = 1;
inline constexpr int input_error = 2;
inline constexpr int refused = 3;
}  // namespace exit_code

// ---------------------------------------------------------------------------
// Report layouts

inline std::string format_path(const PathWitness& w) {
  std::ostringstream out;
  for (std::size_t i = 0; i < w.vertices.size(); ++i) out << (i ? " -> " : "") << w.vertices[i];
  if (!w.colors.empty()) {
    out << " (colors";
    for (Color c : w.colors) out << ' ' << c;
    out << ')';
  }
  return out.str();
}

inline std::string format_vertex_set(const std::vector<Vertex>& s) {
  std::ostringstream out;
  out << '{';
  for (std::size_t i = 0; i < s.size(); ++i) out << (i ? "," : "") << s[i];
  out << '}';
  return out.str();
}

/// Kernel set on the first line, then one witness per outside vertex.
inline std::string format_certificate(const std::string& kind, const KernelCertificate& cert) {
  std::ostringstream out;
  out << kind << " kernel: " << format_vertex_set(cert.kernel) << '\n';
  for (const PathWitness& w : cert.witnesses) out << "  " << w.source() << ": " << format_path(w) << '\n';
  return out.str();
}

inline std::string format_closure(const ClosureDigraph& g) {
  std::ostringstream out;
  out << "closure " << g.n() << ' ' << g.arc_count() << '\n';
  for (const auto& [u, v] : g.arcs()) out << "arc " << u << ' ' << v << '\n';
  return out.str();
}

inline std::string format_hypothesis(const std::string& label, const HypothesisReport& r) {
  if (r.satisfied) return label + " hypothesis satisfied\n";
  return label + " hypothesis violated: " + format_vertex_set(*r.violating_subset) +
         " is strongly connected with " + std::to_string(r.colors_found) + " colors < " +
         std::to_string(r.colors_required) + "\n";
}

inline std::string format_matching(const std::optional<std::vector<std::size_t>>& matching) {
  if (!matching) return "no perfect matching\n";
  std::ostringstream out;
  out << "perfect matching: edges";
  for (std::size_t j : *matching) out << ' ' << j;
  out << '\n';
  return out.str();
}

inline std::string format_chain(const ChainReport& r) {
  std::ostringstream out;
  out << "D_H: " << r.dh_vertices << " vertices, " << r.dh_arcs << " arcs; T_D: " << r.td_vertices
      << " vertices\n";
  out << "3dpm: " << format_matching(r.matching);
  out << "rpog: ";
  if (r.rainbow_path) {
    out << "rainbow path " << format_path(*r.rainbow_path) << '\n';
  } else {
    out << "no rainbow path\n";
  }
  out << "rkt: ";
  if (r.kernel) {
    out << format_certificate("rainbow", *r.kernel);
  } else {
    out << "no rainbow kernel\n";
  }
  out << "chain agrees: " << (r.answer() ? "yes" : "no") << '\n';
  return out.str();
}

inline std::string format_td_labels(const TdConstruction& td) {
  std::ostringstream out;
  out << "# x' = " << td.x_prime << ", x'' = " << td.x_dprime << ", y' = " << td.y_prime
      << ", y'' = " << td.y_dprime << "\n# alpha = " << td.alpha << ", beta = " << td.beta
      << ", gamma = " << td.gamma << ", omega = " << td.omega << '\n';
  return out.str();
}

// ---------------------------------------------------------------------------

namespace detail {

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot read '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

inline std::optional<Tournament> as_tournament(const ColoredDigraph& d) {
  try {
    return Tournament(d);
  } catch (const ValidationError&) {
    return std::nullopt;
  }
}

inline Tournament require_tournament(const ColoredDigraph& d) {
  auto t = as_tournament(d);
  if (!t) throw ParseError("input is not a tournament");
  return *t;
}

// Output to a file (-o) or the report.
inline CommandOutcome emit(const std::string& text, const std::string& output) {
  if (output.empty()) return {exit_code::decided, text, {}};
  std::ofstream out(output, std::ios::binary);
  if (!out) throw ParseError("cannot write '" + output + "'");
  out << text;
  return {exit_code::decided, "wrote " + output + "\n", {}};
}

}  // namespace detail

inline CommandOutcome run_kernel_rainbow(const ColoredDigraph& d) {
  if (auto t = detail::as_tournament(d)) {
    const auto v = rainbow_kernel_tournament(*t);
    if (!v) return {exit_code::negative, "no rainbow kernel\n", {}};
    KernelCertificate cert{{*v}, {}};
    for (Vertex w = 0; w < d.n(); ++w) {
      if (w != *v) cert.witnesses.push_back(*rainbow_reachable(d, w, *v));
    }
    return {exit_code::decided, format_certificate("rainbow", cert), {}};
  }
  const auto cert = rainbow_kernel(d);
  if (!cert) return {exit_code::negative, "no rainbow kernel\n", {}};
  return {exit_code::decided, format_certificate("rainbow", *cert), {}};
}

inline CommandOutcome run_kernel_pcp(const Tournament& t) {
  const auto cert = pcp_kernel_certificate(t);
  if (!cert) return {exit_code::negative, "no pcp kernel\n", {}};
  return {exit_code::decided, format_certificate("pcp", *cert), {}};
}

inline CommandOutcome run_check(const std::string& what, const ColoredDigraph& d) {
  if (what == "cycles") {
    const auto cycle = check_all_cycles_rainbow(d);
    if (!cycle) return {exit_code::decided, "all cycles rainbow\n", {}};
    std::vector<Vertex> closed = *cycle;
    closed.push_back(cycle->front());
    const auto w = witness_from_vertices(d, closed, PathTag::rainbow);
    std::ostringstream out;
    out << "non-rainbow cycle: ";
    for (std::size_t i = 0; i < closed.size(); ++i) out << (i ? " -> " : "") << closed[i];
    out << " (colors";
    for (Color c : w->colors) out << ' ' << c;
    out << ")\n";
    return {exit_code::negative, out.str(), {}};
  }
  const Tournament t = detail::require_tournament(d);
  if (what == "thm2") {
    const auto r = check_theorem2_hypothesis(t);
    return {r.satisfied ? exit_code::decided : exit_code::negative, format_hypothesis("k-1 color", r), {}};
  }
  if (what == "triangles") {
    const auto tri = check_all_triangles_rainbow(t);
    if (!tri) return {exit_code::decided, "all triangles rainbow\n", {}};
    return {exit_code::negative,
            "non-rainbow triangle: " + std::to_string((*tri)[0]) + " -> " +
                std::to_string((*tri)[1]) + " -> " + std::to_string((*tri)[2]) + " -> " +
                std::to_string((*tri)[0]) + "\n",
            {}};
  }
  // lemma1
  const auto r = check_lemma1_instance(t);
  if (!r) return {exit_code::negative, "no rainbow (v_i, v_{i-1})-path: lemma refuted\n", {}};
  return {exit_code::decided,
          "rainbow (v_" + std::to_string(r->index) + ", v_" + std::to_string(r->index - 1) +
              ")-path: " + format_path(r->path) + "\n",
          {}};
}

/// Parses `args` (without the program name) and runs one subcommand.
inline CommandOutcome run(const std::vector<std::string>& args) {
  CLI::App app{"Kernels by rainbow and properly colored paths in arc-colored digraphs", "rkt"};
  app.require_subcommand(1);

  std::string file, output, which;
  std::size_t n = 0, m = 0, seeds = 0, threads = 0;
  std::uint64_t seed = 0;
  std::string out_dir;

  auto* gen = app.add_subcommand("gen", "generate an instance");
  gen->require_subcommand(1);
  auto* gen_t5 = gen->add_subcommand("t5star", "the 2-colored 5-vertex tournament");
  auto* gen_tstar = gen->add_subcommand("tstar", "T_n*");
  gen_tstar->add_option("n", n)->required();
  auto* gen_random = gen->add_subcommand("random", "random tournament");
  gen_random->add_option("n", n)->required();
  gen_random->add_option("m", m)->required();
  gen_random->add_option("--seed", seed)->required();
  for (auto* sub : {gen_t5, gen_tstar, gen_random}) sub->add_option("-o,--output", output);

  auto* kernel = app.add_subcommand("kernel", "compute a kernel");
  kernel->add_option("kind", which)->required()->check(CLI::IsMember({"rainbow", "pcp"}));
  kernel->add_option("file", file)->required();

  auto* closure = app.add_subcommand("closure", "compute a closure");
  closure->add_option("kind", which)->required()->check(CLI::IsMember({"rainbow", "pc"}));
  closure->add_option("file", file)->required();

  auto* check = app.add_subcommand("check", "check a hypothesis");
  check->add_option("what", which)
      ->required()
      ->check(CLI::IsMember({"thm2", "triangles", "cycles", "lemma1"}));
  check->add_option("file", file)->required();

  auto* reduce = app.add_subcommand("reduce", "apply a reduction");
  reduce->add_option("kind", which)
      ->required()
      ->check(CLI::IsMember({"3dpm-to-rpog", "rpog-to-rkt", "3dpm-to-rkt"}));
  reduce->add_option("file", file)->required();
  reduce->add_option("-o,--output", output);

  auto* solve = app.add_subcommand("solve", "solve 3DPM exhaustively");
  solve->add_option("problem", which)->required()->check(CLI::IsMember({"3dpm"}));
  solve->add_option("file", file)->required();

  auto* verify = app.add_subcommand("verify", "check the reduction chain on a hypergraph");
  verify->add_option("what", which)->required()->check(CLI::IsMember({"chain"}));
  verify->add_option("file", file)->required();

  auto* explore = app.add_subcommand("explore", "seeded exploration of open questions");
  explore->add_option("what", which)->required()->check(CLI::IsMember({"problem1", "fk"}));
  explore->add_option("--n", n)->required();
  explore->add_option("--seeds", seeds)->required();
  explore->add_option("--seed", seed)->required();
  explore->add_option("--out", out_dir, "directory for counterexample instances");
  explore->add_option("--threads", threads);

  auto* exporter = app.add_subcommand("export", "export an instance");
  exporter->add_option("format", which)->required()->check(CLI::IsMember({"dot"}));
  exporter->add_option("file", file)->required();

  std::vector<std::string> argv_storage{"rkt"};
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& a : argv_storage) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    return {exit_code::decided, app.help(), {}};
  } catch (const CLI::ParseError& e) {
    return {exit_code::input_error, {}, std::string(e.what()) + "\n" + app.help()};
  }

  try {
    if (gen->parsed()) {
      if (gen_t5->parsed()) return detail::emit(serialize_tournament(t5_star()), output);
      if (gen_tstar->parsed()) return detail::emit(serialize_tournament(t_star(n)), output);
      return detail::emit(serialize_tournament(random_tournament(n, m, seed)), output);
    }
    if (kernel->parsed()) {
      const ColoredDigraph d = parse_digraph(detail::read_file(file));
      if (which == "rainbow") return run_kernel_rainbow(d);
      return run_kernel_pcp(detail::require_tournament(d));
    }
    if (closure->parsed()) {
      const ColoredDigraph d = parse_digraph(detail::read_file(file));
      if (which == "rainbow") return {exit_code::decided, format_closure(rainbow_closure(d)), {}};
      return {exit_code::decided, format_closure(pc_closure(pc_closure_layers(d))), {}};
    }
    if (check->parsed()) return run_check(which, parse_digraph(detail::read_file(file)));
    if (reduce->parsed()) {
      const std::string text = detail::read_file(file);
      if (which == "3dpm-to-rpog") return detail::emit(serialize_rpog(build_dh(parse_hypergraph(text))), output);
      const RpogInstance r = which == "rpog-to-rkt" ? parse_rpog(text) : build_dh(parse_hypergraph(text));
      const TdConstruction td = build_td(r);
      return detail::emit(format_td_labels(td) + serialize_tournament(td.tournament), output);
    }
    if (solve->parsed()) {
      const auto matching = solve_3dpm_bruteforce(parse_hypergraph(detail::read_file(file)));
      return {matching ? exit_code::decided : exit_code::negative, format_matching(matching), {}};
    }
    if (verify->parsed()) {
      const Hypergraph3 h = parse_hypergraph(detail::read_file(file));
      try {
        return {exit_code::decided, format_chain(verify_chain(h)), {}};
      } catch (const VerificationError& e) {
        return {exit_code::negative, std::string("chain mismatch: ") + e.what() + "\n", {}};
      }
    }
    if (explore->parsed()) {
      ExplorerOptions options;
      options.n_max = n;
      options.seeds = seeds;
      options.base_seed = seed;
      options.threads = threads;
      if (!out_dir.empty()) options.instance_dir = out_dir;
      const ExplorerReport report =
          which == "problem1" ? explore_problem1(options) : explore_fk_conjecture(options);
      return {exit_code::decided, report.to_text(), {}};
    }
    return {exit_code::decided, serialize_dot(parse_digraph(detail::read_file(file))), {}};
  } catch (const GuardError& e) {
    return {exit_code::refused, {}, std::string("refused: ") + e.what() + "\n"};
  } catch (const ParseError& e) {
    return {exit_code::input_error, {}, std::string("error: ") + e.what() + "\n"};
  } catch (const ValidationError& e) {
    return {exit_code::input_error, {}, std::string("error: ") + e.what() + "\n"};
  } catch (const PreconditionError& e) {
    return {exit_code::input_error, {}, std::string("error: ") + e.what() + "\n"};
  }
}

}  // namespace rainbow_kernels
