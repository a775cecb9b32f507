#include "mmds/cli.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "mmds/cluster_kernel.hpp"
#include "mmds/error.hpp"
#include "mmds/gadget.hpp"
#include "mmds/generators.hpp"
#include "mmds/graph_classes.hpp"
#include "mmds/graph_io.hpp"
#include "mmds/modulators.hpp"
#include "mmds/oracle.hpp"
#include "mmds/sat.hpp"
#include "mmds/split_solver.hpp"
#include "mmds/tree_solver.hpp"
#include "mmds/twin_cover_solver.hpp"

namespace mmds {

namespace {

// Searches for a modulator when none was supplied on the command line.
constexpr std::size_t kTwinCoverSearchBudget = 16;
constexpr std::size_t kClusterSearchBudget = 8;

struct SolveReport {
  std::string algo;
  bool yes = false;
  std::optional<VertexSet> witness;
};

std::optional<VertexSet> oracle_witness(const Instance& inst) { return brute_force_mmds(inst); }

SolveReport run_tree(const Instance& inst, bool want_witness) {
  SolveReport r{"tree", solve_tree(inst), std::nullopt};
  if (r.yes && want_witness)
    r.witness = inst.graph.order() <= kDefaultBruteForceCap ? oracle_witness(inst) : tree_witness(inst);
  return r;
}

SolveReport run_split(const Instance& inst) {
  const auto part = recognize_split(inst.graph);
  if (!part) throw PreconditionError("graph is not split");
  auto w = solve_split(inst, *part);
  return {"split", w.has_value(), std::move(w)};
}

SolveReport run_twin_cover(const Instance& inst, const std::optional<VertexSet>& modulator) {
  std::optional<VertexSet> t = modulator;
  if (!t) t = compute_twin_cover(inst.graph, kTwinCoverSearchBudget);
  if (!t) {
    throw PreconditionError("no twin cover with at most " + std::to_string(kTwinCoverSearchBudget) +
                            " vertices; pass --modulator");
  }
  auto w = solve_twin_cover(inst, *t);
  return {"twincover", w.has_value(), std::move(w)};
}

SolveReport run_cluster(const Instance& inst, const std::optional<VertexSet>& modulator) {
  std::optional<VertexSet> d = modulator;
  if (!d) d = compute_cluster_modulator(inst.graph, kClusterSearchBudget);
  if (!d) {
    throw PreconditionError("no cluster modulator with at most " + std::to_string(kClusterSearchBudget) +
                            " vertices; pass --modulator");
  }
  auto w = solve_cluster(inst, *d);
  return {"cluster", w.has_value(), std::move(w)};
}

SolveReport run_oracle(const Instance& inst) {
  auto w = brute_force_mmds(inst);
  return {"oracle", w.has_value(), std::move(w)};
}

SolveReport solve_parsed(const ParsedGraph& parsed, const std::string& algo, const std::optional<VertexSet>& modulator,
                         bool want_witness) {
  const Instance& inst = parsed.instance;
  if (algo == "oracle") return run_oracle(inst);
  if (algo == "tree") return run_tree(inst, want_witness);
  if (algo == "split") return run_split(inst);
  if (algo == "twincover") return run_twin_cover(inst, modulator);
  if (algo == "cluster") return run_cluster(inst, modulator);
  if (algo == "gadget") {
    auto w = solve_reduced_instance(layout_from_roles(parsed));
    return {"gadget", w.has_value(), std::move(w)};
  }

  // auto
  if (is_tree(inst.graph)) return run_tree(inst, want_witness);
  if (is_connected(inst.graph) && recognize_split(inst.graph)) return run_split(inst);
  if (modulator) {
    if (is_twin_cover(inst.graph, *modulator)) return run_twin_cover(inst, modulator);
    if (is_cluster_modulator(inst.graph, *modulator)) return run_cluster(inst, modulator);
    throw PreconditionError("supplied modulator is neither a twin cover nor a cluster modulator");
  }
  if (auto s = low_degree_fast_path(inst)) return {"lowdegree", true, std::move(s)};
  return run_oracle(inst);
}

ParsedGraph read_parsed(const std::string& path) { return parse_graph_annotated(read_text(path)); }

int report_error(std::ostream& err, const std::exception& e, int code) {
  err << "error: " << e.what() << '\n';
  return code;
}

// Maps library exceptions to exit codes around one command body.
template <class Body>
int guarded(std::ostream& err, Body&& body) {
  try {
    body();
    return kExitOk;
  } catch (const ParseError& e) {
    return report_error(err, e, kExitInput);
  } catch (const IoError& e) {
    return report_error(err, e, kExitInput);
  } catch (const PreconditionError& e) {
    return report_error(err, e, kExitPrecondition);
  } catch (const CapExceeded& e) {
    return report_error(err, e, kExitPrecondition);
  }
}

void write_set_file(const std::string& path, const VertexSet& s) {
  std::ofstream f(path);
  if (!f) throw IoError("cannot write '" + path + "'");
  f << format_vertex_set(s) << '\n';
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Minimum Membership Dominating Set toolkit", "mmds"};
  app.require_subcommand(1);

  // solve
  std::string solve_file, solve_algo = "auto", solve_mod;
  bool solve_witness = false;
  auto* solve = app.add_subcommand("solve", "Decide an instance; prints YES or NO");
  solve->add_option("file", solve_file, "Graph file, or - for stdin")->required();
  solve->add_option("--algo", solve_algo, "Algorithm")
      ->check(CLI::IsMember({"auto", "oracle", "tree", "split", "twincover", "cluster", "gadget"}));
  solve->add_option("--modulator", solve_mod, "Set file with a twin cover or cluster modulator");
  solve->add_flag("--witness", solve_witness, "Print a witness set on YES");

  // verify
  std::string verify_graph, verify_set;
  auto* verify = app.add_subcommand("verify", "Check a set against an instance");
  verify->add_option("graph", verify_graph)->required();
  verify->add_option("set", verify_set)->required();

  // gen
  std::string gen_kind, gen_mod_out;
  std::size_t gen_n = 10, gen_clique = 0, gen_mod_size = 2, gen_max_clique = 3;
  std::uint64_t gen_seed = 0;
  int gen_k = 1;
  auto* gen = app.add_subcommand("gen", "Emit a seeded random instance");
  gen->add_option("kind", gen_kind)
      ->required()
      ->check(CLI::IsMember({"random-tree", "random-split", "random-cluster", "random-twincover"}));
  gen->add_option("--n", gen_n, "Number of vertices");
  gen->add_option("--clique", gen_clique, "Clique size for random-split (default n/2)");
  gen->add_option("--modulator-size", gen_mod_size, "Modulator size for random-cluster/random-twincover");
  gen->add_option("--max-clique", gen_max_clique, "Largest outside clique");
  gen->add_option("--modulator-out", gen_mod_out, "Also write the planted modulator to this set file");
  gen->add_option("--seed", gen_seed)->required();
  gen->add_option("--k", gen_k, "Membership bound written to the header")->check(CLI::PositiveNumber);

  // reduce
  std::string reduce_kind, reduce_file;
  int reduce_k = 2;
  auto* reduce = app.add_subcommand("reduce", "SAT reductions");
  reduce->add_option("kind", reduce_kind)->required()->check(CLI::IsMember({"xsat", "3sat-to-xsat"}));
  reduce->add_option("file", reduce_file, "DIMACS CNF file, or - for stdin")->required();
  reduce->add_option("--k", reduce_k, "Membership bound of the gadget instance");

  // kernel
  std::string kernel_file, kernel_mod, kernel_guess;
  auto* kernel = app.add_subcommand("kernel", "Reduce an instance with a cluster modulator");
  kernel->add_option("file", kernel_file)->required();
  kernel->add_option("--modulator", kernel_mod, "Cluster modulator set file")->required();
  kernel->add_option("--guess", kernel_guess, "Set file with S ∩ modulator; applies the per-guess rules");

  // bench
  std::string bench_dir;
  auto* bench = app.add_subcommand("bench", "Solve every .mmds file of a directory");
  bench->add_option("dir", bench_dir)->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  if (solve->parsed()) {
    return guarded(err, [&] {
      const ParsedGraph parsed = read_parsed(solve_file);
      std::optional<VertexSet> mod;
      if (!solve_mod.empty()) mod = read_vertex_set_file(solve_mod, parsed.instance.graph.order());
      const SolveReport r = solve_parsed(parsed, solve_algo, mod, solve_witness);
      out << (r.yes ? "YES" : "NO") << '\n';
      if (r.yes && solve_witness && r.witness) out << format_vertex_set(*r.witness) << '\n';
    });
  }

  if (verify->parsed()) {
    return guarded(err, [&] {
      const Instance inst = read_graph_file(verify_graph);
      const VertexSet s = read_vertex_set_file(verify_set, inst.graph.order());
      const MembershipReport rep = check_membership(inst, s);
      if (rep.valid)
        out << "VALID\n";
      else
        out << "INVALID " << rep.first_violation->first + 1 << ' ' << rep.first_violation->second << '\n';
    });
  }

  if (gen->parsed()) {
    return guarded(err, [&] {
      Rng rng(gen_seed);
      Instance inst;
      inst.k = gen_k;
      std::vector<std::string> comments{"generator " + gen_kind + " seed " + std::to_string(gen_seed)};
      if (gen_kind == "random-tree") {
        inst.graph = random_tree(gen_n, rng);
      } else if (gen_kind == "random-split") {
        inst.graph = random_split(gen_clique ? gen_clique : std::max<std::size_t>(1, gen_n / 2), gen_n, rng);
      } else {
        const ModulatedGraph mg = gen_kind == "random-cluster"
                                      ? random_cluster(gen_mod_size, gen_n, gen_max_clique, rng)
                                      : random_twin_cover(gen_mod_size, gen_n, gen_max_clique, rng);
        inst.graph = mg.graph;
        comments.push_back("modulator " + format_vertex_set(mg.modulator));
        if (!gen_mod_out.empty()) write_set_file(gen_mod_out, mg.modulator);
      }
      write_graph(out, inst, comments);
    });
  }

  if (reduce->parsed()) {
    return guarded(err, [&] {
      const CnfFormula f = parse_dimacs(read_text(reduce_file));
      if (reduce_kind == "3sat-to-xsat") {
        out << write_dimacs(threesat_to_xsat(f));
        return;
      }
      const GadgetLayout layout = xsat_to_mmds(f, reduce_k);
      write_graph(out, layout.reduced, role_comments(layout));
    });
  }

  if (kernel->parsed()) {
    return guarded(err, [&] {
      const Instance inst = read_graph_file(kernel_file);
      const std::size_t n = inst.graph.order();
      const VertexSet d = read_vertex_set_file(kernel_mod, n);
      const KernelOutput twins = apply_rule1(inst, d);
      const KernelOutput* result = &twins;
      std::optional<KernelOutput> per_guess;
      std::vector<Vertex> to_input = twins.vertex_map;
      if (!kernel_guess.empty()) {
        const VertexSet p = read_vertex_set_file(kernel_guess, n);
        per_guess = kernelize(twins.reduced, twins.to_reduced(d), twins.to_reduced(p));
        if (!per_guess) {
          out << "REJECTED\n";
          return;
        }
        for (Vertex& v : per_guess->vertex_map) v = twins.vertex_map[v];
        to_input = per_guess->vertex_map;
        result = &*per_guess;
      }
      std::vector<std::string> comments;
      comments.push_back("kernel of " + std::to_string(n) + " vertices; bound " +
                         std::to_string(kernel_size_bound(d.size(), inst.k)));
      for (std::size_t r = 0; r < to_input.size(); ++r)
        comments.push_back("map " + std::to_string(r + 1) + " " + std::to_string(to_input[r] + 1));
      write_graph(out, result->reduced, comments);
    });
  }

  if (bench->parsed()) {
    return guarded(err, [&] {
      namespace fs = std::filesystem;
      std::error_code ec;
      if (!fs::is_directory(bench_dir, ec)) throw IoError("not a directory: '" + bench_dir + "'");
      std::vector<fs::path> files;
      for (const auto& entry : fs::directory_iterator(bench_dir))
        if (entry.is_regular_file() && entry.path().extension() == ".mmds") files.push_back(entry.path());
      std::sort(files.begin(), files.end());
      for (const auto& path : files) {
        const auto start = std::chrono::steady_clock::now();
        std::string algo = "-", verdict;
        try {
          const ParsedGraph parsed = read_parsed(path.string());
          std::optional<VertexSet> mod;
          fs::path side = path;
          side.replace_extension(".mod");
          if (fs::exists(side)) mod = read_vertex_set_file(side.string(), parsed.instance.graph.order());
          const SolveReport r = solve_parsed(parsed, "auto", mod, false);
          algo = r.algo;
          verdict = r.yes ? "YES" : "NO";
        } catch (const Error& e) {
          verdict = "ERROR";
          err << path.filename().string() << ": " << e.what() << '\n';
        }
        const double ms =
            std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
        char buf[32];
        std::snprintf(buf, sizeof buf, "%.3f", ms);
        out << path.filename().string() << ' ' << algo << ' ' << verdict << ' ' << buf << "ms\n";
      }
    });
  }
  return kExitUsage;
}

}  // namespace mmds
