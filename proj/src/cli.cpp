#include "leavitt/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "leavitt/graph_matrices.hpp"
#include "leavitt/serialize.hpp"
#include "leavitt/verify.hpp"

namespace leavitt {

namespace {

namespace fs = std::filesystem;
using nlohmann::json;

// Input problem with a ready-to-print message; always maps to exit code 2.
struct CliError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw CliError("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

Quiver load_quiver(const std::string& path) {
  try {
    return parse_quiver(read_file(path));
  } catch (const ParseError& e) {
    throw CliError(path + ": " + e.what());
  }
}

KTable load_ktable(const std::string& path) {
  try {
    return parse_ktable(read_file(path));
  } catch (const ParseError& e) {
    throw CliError(path + ": " + e.what());
  }
}

std::pair<int, int> parse_degree_range(const std::string& text) {
  auto dots = text.find("..");
  try {
    if (dots == std::string::npos) {
      size_t used = 0;
      int n = std::stoi(text, &used);
      if (used != text.size()) throw std::invalid_argument("");
      return {n, n};
    }
    size_t used = 0;
    int lo = std::stoi(text.substr(0, dots), &used);
    if (used != dots) throw std::invalid_argument("");
    int hi = std::stoi(text.substr(dots + 2), &used);
    if (used != text.size() - dots - 2) throw std::invalid_argument("");
    if (lo > hi) throw std::invalid_argument("");
    return {lo, hi};
  } catch (const std::exception&) {
    throw CliError("invalid degree range '" + text + "' (expected N or LO..HI)");
  }
}

std::string name_set(const Quiver& q, const std::vector<int>& decls) {
  std::string out = "{";
  for (size_t i = 0; i < decls.size(); ++i) {
    if (i) out += ", ";
    out += q.name(decls[i]);
  }
  return out + "}";
}

std::string all_names(const Quiver& q) {
  std::vector<int> decls(q.vertex_count());
  for (int v = 0; v < q.vertex_count(); ++v) decls[v] = v;
  return name_set(q, decls);
}

void emit_json(std::ostream& out, json body) {
  body["schema"] = 1;
  out << body.dump(2) << '\n';
}

// Built-in coefficient table used by `check` when none is given: algebraic
// K-theory of the integers in degrees 0 and 1.
constexpr const char* kDefaultCheckTable =
    "mode: K\n"
    "flags: pid\n"
    "default-: 0\n"
    "0: Z\n"
    "1: Z/2\n";

int cmd_info(const Quiver& q, bool as_json, std::ostream& out) {
  const VertexClassification cls = classify(q);
  const Quiver tilde = tilde_quiver(q);
  if (as_json) {
    json body{{"command", "info"},
              {"quiver", quiver_json(q)},
              {"sinks", json::array()},
              {"sources", json::array()},
              {"on_or_after_cycle", json::array()},
              {"tilde", {{"vertices", tilde.vertex_count()}, {"edges", tilde.edge_count()}}}};
    for (int v : cls.sinks) body["sinks"].push_back(q.name(v));
    for (int v : cls.sources) body["sources"].push_back(q.name(v));
    for (int v : cls.on_or_after_cycle) body["on_or_after_cycle"].push_back(q.name(v));
    emit_json(out, std::move(body));
    return 0;
  }
  out << "vertices " << q.vertex_count() << ", edges " << q.edge_count()
      << ", sinks " << name_set(q, cls.sinks) << ", sources " << name_set(q, cls.sources)
      << ", tilde-E ";
  if (tilde.vertex_count() == 0)
    out << "empty";
  else
    out << tilde.vertex_count() << (tilde.vertex_count() == 1 ? " vertex" : " vertices");
  out << '\n';
  return 0;
}

int cmd_kgroups(const Quiver& q, const KTable& table, int lo, int hi, bool cite,
                bool as_json, std::ostream& out) {
  KReport report = k_groups(q, table, lo, hi);
  if (as_json) {
    emit_json(out, json{{"command", "kgroups"},
                        {"quiver", quiver_json(q)},
                        {"degrees", {{"lo", lo}, {"hi", hi}}},
                        {"report", kreport_json(report, true)}});
    return 0;
  }
  out << render_text(report, cite);
  return 0;
}

int cmd_reduce(const Quiver& q, bool as_json, std::ostream& out) {
  const ReductionChain chain = reduction_chain(q);
  const Quiver tilde = tilde_quiver(q);
  if (as_json) {
    json stages = json::array();
    for (const Quiver& s : chain.stages) stages.push_back(quiver_json(s));
    emit_json(out, json{{"command", "reduce"},
                        {"tilde", quiver_json(tilde)},
                        {"ell", chain.ell},
                        {"stages", std::move(stages)},
                        {"added_vertex", chain.added_vertex}});
    return 0;
  }
  out << "tilde-E: ";
  if (tilde.vertex_count() == 0)
    out << "empty\n";
  else
    out << "vertices " << all_names(tilde) << ", edges " << tilde.edge_count() << '\n';
  out << "ell (sinks not reachable from a cycle) = " << chain.ell << '\n';
  for (size_t i = 0; i < chain.stages.size(); ++i) {
    out << "stage " << i << ": ";
    if (i > 0) out << "+ " << chain.added_vertex[i - 1] << " -> ";
    out << "vertices " << all_names(chain.stages[i]) << ", edges "
        << chain.stages[i].edge_count() << '\n';
  }
  return 0;
}

int cmd_snf(const IntMatrix& a, bool as_json, std::ostream& out) {
  const SmithForm sf = smith_normal_form(a);
  if (as_json) {
    emit_json(out, json{{"command", "snf"},
                        {"matrix", matrix_json(a)},
                        {"smith", smith_json(sf)}});
    return 0;
  }
  out << "matrix: " << a.rows() << "x" << a.cols() << '\n';
  out << "invariant factors:";
  if (sf.factors.empty()) out << " (none)";
  for (const Int& f : sf.factors) out << ' ' << f.str();
  out << '\n';
  out << "u =\n" << to_text(sf.u);
  out << "d =\n" << to_text(sf.d);
  out << "v =\n" << to_text(sf.v);
  return 0;
}

int cmd_gamma(const Quiver& q, const KTable& table, bool as_json, std::ostream& out) {
  const GammaPrediction p = predict_gamma(q, table);
  if (as_json) {
    emit_json(out, json{{"command", "gamma"}, {"gamma", gamma_json(p)}});
    return 0;
  }
  out << "det(1-N^t) = " << p.det_display << '\n';
  out << "verdict: " << p.verdict << '\n';
  out << "hypotheses: ";
  if (p.hypothesis_trail.empty()) {
    out << "none";
  } else {
    for (size_t i = 0; i < p.hypothesis_trail.size(); ++i) {
      if (i) out << "; ";
      out << p.hypothesis_trail[i];
    }
  }
  out << '\n';
  return 0;
}

int cmd_dims(const Quiver& q, int n_max, bool as_json, std::ostream& out) {
  const PathCountTable counts = path_counts(q, n_max);
  if (as_json) {
    json dims = json::array(), table = json::array();
    for (int n = 0; n <= n_max; ++n) {
      dims.push_back(truncation_dimension(q, counts, n).str());
      json row = json::array();
      for (int v = 0; v < q.vertex_count(); ++v) row.push_back(counts.count(n, v).str());
      table.push_back(std::move(row));
    }
    emit_json(out, json{{"command", "dims"},
                        {"max", n_max},
                        {"vertices", json(q.names())},
                        {"path_counts", std::move(table)},
                        {"dims", std::move(dims)}});
    return 0;
  }
  for (int n = 0; n <= n_max; ++n)
    out << "n=" << n << ": dim = " << truncation_dimension(q, counts, n).str() << '\n';
  return 0;
}

std::string write_witness(const std::string& dir, const std::string& stem,
                          const CheckOutcome& outcome, std::ostream& err) {
  fs::path p = fs::path(dir) / (stem + "-" + outcome.name + "-witness.json");
  std::ofstream f(p);
  if (!f) {
    err << "error: cannot write witness file " << p.string() << '\n';
    return {};
  }
  f << *outcome.witness_json;
  return p.string();
}

int cmd_check(const std::vector<std::string>& quiver_paths, const std::string& all_dir,
              const std::string& ktable_path, const std::vector<long long>& moduli_arg,
              unsigned long long seed, int dims_max, int random_batch,
              const std::string& witness_dir, bool as_json, std::ostream& out,
              std::ostream& err) {
  std::vector<std::string> paths = quiver_paths;
  if (!all_dir.empty()) {
    if (!fs::is_directory(all_dir)) throw CliError("'" + all_dir + "' is not a directory");
    std::vector<std::string> found;
    for (const auto& entry : fs::directory_iterator(all_dir))
      if (entry.is_regular_file() && entry.path().extension() == ".quiver")
        found.push_back(entry.path().string());
    std::sort(found.begin(), found.end());
    paths.insert(paths.end(), found.begin(), found.end());
  }
  if (paths.empty() && random_batch == 0)
    throw CliError("nothing to check: pass quiver files, --all DIR, or --random N");

  KTable table = parse_ktable(ktable_path.empty() ? kDefaultCheckTable
                                                  : read_file(ktable_path));
  std::vector<Int> moduli;
  if (moduli_arg.empty())
    moduli = {2, 3, 4, 12};
  else
    for (long long m : moduli_arg) moduli.emplace_back(m);

  std::vector<std::pair<std::string, CheckOutcome>> jobs;
  for (const std::string& path : paths) {
    Quiver q = load_quiver(path);
    jobs.emplace_back(path, check_myn(q, moduli, seed));
    jobs.emplace_back(path, check_reduction_invariance(q, table, seed));
    jobs.emplace_back(path, check_dimension_tower(q, dims_max, seed));
    jobs.emplace_back(path, certify_snf(one_minus_nt(q), seed));
  }
  std::mt19937_64 rng(seed);
  for (int i = 0; i < random_batch; ++i) {
    IntMatrix a = random_matrix(rng, 5, 9);
    jobs.emplace_back("random-matrix-" + std::to_string(i), certify_snf(a, seed));
  }
  return report_check_outcomes(jobs, seed, witness_dir, as_json, out, err);
}

}  // namespace

int report_check_outcomes(const std::vector<std::pair<std::string, CheckOutcome>>& jobs,
                          unsigned long long seed, const std::string& witness_dir,
                          bool as_json, std::ostream& out, std::ostream& err) {
  bool all_passed = true;
  json results = json::array();
  if (!as_json) out << "seed: " << seed << '\n';
  for (const auto& [label, outcome] : jobs) {
    std::string witness_path;
    if (!outcome.passed) {
      all_passed = false;
      if (outcome.witness_json) {
        std::string stem = fs::path(label).stem().string();
        if (stem.empty()) stem = label;
        witness_path = write_witness(witness_dir, stem, outcome, err);
      }
    }
    if (as_json) {
      json r{{"check", outcome.name},
             {"input", label},
             {"passed", outcome.passed},
             {"detail", outcome.detail}};
      if (!witness_path.empty()) r["witness"] = witness_path;
      results.push_back(std::move(r));
    } else {
      out << (outcome.passed ? "[PASS] " : "[FAIL] ") << outcome.name << " (" << label
          << "): " << outcome.detail << '\n';
      if (!witness_path.empty()) out << "       witness: " << witness_path << '\n';
    }
  }
  if (as_json) {
    emit_json(out, json{{"command", "check"},
                        {"seed", seed},
                        {"results", std::move(results)},
                        {"all_passed", all_passed}});
  } else {
    out << (all_passed ? "all checks passed" : "CHECKS FAILED") << '\n';
  }
  return all_passed ? 0 : 1;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"K-theory invariants of Leavitt path algebras and graph C*-algebras"};
  app.name("leavitt-k");
  app.require_subcommand(1);

  std::string quiver_path, ktable_path, matrix_path, degrees = "0..1";
  std::string all_dir, witness_dir = ".";
  std::vector<std::string> check_paths;
  std::vector<long long> moduli;
  unsigned long long seed = 0;
  int dims_max = 6, check_dims_max = 4, random_batch = 50;
  bool as_json = false, cite = false;

  auto add_json = [&](CLI::App* cmd) { cmd->add_flag("--json", as_json, "emit JSON"); };

  CLI::App* info = app.add_subcommand("info", "vertex classification summary");
  info->add_option("quiver", quiver_path, "quiver file")->required();
  add_json(info);

  CLI::App* kgroups =
      app.add_subcommand("kgroups", "K-groups of the graph algebra over a coefficient table");
  kgroups->add_option("quiver", quiver_path, "quiver file")->required();
  kgroups->add_option("--ktable", ktable_path, "coefficient K-table file")->required();
  kgroups->add_option("--degrees", degrees, "degree range N or LO..HI (default 0..1)");
  kgroups->add_flag("--cite", cite, "append citation keys to each degree");
  add_json(kgroups);

  CLI::App* reduce = app.add_subcommand("reduce", "cycle closure and reduction chain");
  reduce->add_option("quiver", quiver_path, "quiver file")->required();
  add_json(reduce);

  CLI::App* check = app.add_subcommand("check", "run the self-checks and write witnesses on failure");
  check->add_option("quivers", check_paths, "quiver files");
  check->add_option("--all", all_dir, "check every .quiver file in a directory");
  check->add_option("--ktable", ktable_path, "coefficient table for the reduction check");
  check->add_option("--moduli", moduli, "moduli for the vertex/edge agreement check")
      ->delimiter(',');
  check->add_option("--seed", seed, "seed for the randomized matrix batch");
  check->add_option("--dims-max", check_dims_max, "max step for the dimension tower");
  check->add_option("--random", random_batch, "number of random matrices to certify");
  check->add_option("--witness-dir", witness_dir, "directory for witness files");
  add_json(check);

  CLI::App* snf = app.add_subcommand("snf", "Smith normal form with certificates");
  snf->add_option("quiver", quiver_path, "quiver file (uses its transfer matrix)");
  snf->add_option("--matrix", matrix_path, "raw matrix file (whitespace-separated rows)");
  add_json(snf);

  CLI::App* gamma = app.add_subcommand("gamma", "comparison-map prediction");
  gamma->add_option("quiver", quiver_path, "quiver file")->required();
  gamma->add_option("--ktable", ktable_path, "coefficient K-table file")->required();
  add_json(gamma);

  CLI::App* dims = app.add_subcommand("dims", "dimension tower of the finite approximations");
  dims->add_option("quiver", quiver_path, "quiver file")->required();
  dims->add_option("--max", dims_max, "largest step (default 6)");
  add_json(dims);

  std::vector<const char*> argv;
  argv.push_back("leavitt-k");
  for (const std::string& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    int cli_code = app.exit(e, out, err);
    return cli_code == 0 ? 0 : 2;
  }

  try {
    if (info->parsed()) return cmd_info(load_quiver(quiver_path), as_json, out);
    if (kgroups->parsed()) {
      auto [lo, hi] = parse_degree_range(degrees);
      return cmd_kgroups(load_quiver(quiver_path), load_ktable(ktable_path), lo, hi,
                         cite, as_json, out);
    }
    if (reduce->parsed()) return cmd_reduce(load_quiver(quiver_path), as_json, out);
    if (check->parsed())
      return cmd_check(check_paths, all_dir, ktable_path, moduli, seed, check_dims_max,
                       random_batch, witness_dir, as_json, out, err);
    if (snf->parsed()) {
      if (quiver_path.empty() == matrix_path.empty())
        throw CliError("snf needs exactly one of: a quiver file, or --matrix FILE");
      IntMatrix a = matrix_path.empty() ? one_minus_nt(load_quiver(quiver_path))
                                        : parse_matrix_text(read_file(matrix_path));
      return cmd_snf(a, as_json, out);
    }
    if (gamma->parsed())
      return cmd_gamma(load_quiver(quiver_path), load_ktable(ktable_path), as_json, out);
    if (dims->parsed()) {
      if (dims_max < 0) throw CliError("--max must be non-negative");
      return cmd_dims(load_quiver(quiver_path), dims_max, as_json, out);
    }
  } catch (const CliError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const KTableError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
  err << "error: no subcommand\n";
  return 2;
}

}  // namespace leavitt
