#include "starramsey/cli.hpp"

#include "starramsey/coloring_io.hpp"
#include "starramsey/constructions.hpp"
#include "starramsey/errors.hpp"
#include "starramsey/formulas.hpp"
#include "starramsey/oracle.hpp"
#include "starramsey/sampling.hpp"
#include "starramsey/verify.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>

namespace starramsey::cli {

namespace {

std::string join(const std::vector<int>& values) {
  std::string s;
  for (std::size_t i = 0; i < values.size(); ++i)
    s += (i ? "," : "") + std::to_string(values[i]);
  return s;
}

bool write_file(const std::string& path, const std::string& text, std::ostream& err) {
  std::ofstream f(path);
  if (!f) {
    err << "error: cannot open " << path << " for writing\n";
    return false;
  }
  f << text;
  return static_cast<bool>(f);
}

int compute(int n, int t, int s, std::ostream& out) {
  const CaseVerdict v = classify(n, t, s);
  out << "value=" << v.value << '\n'
      << "case=" << to_string(v.tag) << '\n'
      << "x=" << v.data.x << '\n'
      << "q=" << v.data.q << '\n'
      << "r=" << v.data.r << '\n'
      << "recipe=" << (v.witness ? v.witness->describe() : "none") << '\n';
  return Success;
}

int bounds(int n, int t, int l, std::ostream& out) {
  const BoundsInterval b = general_bounds(n, t, l);
  out << "lower=" << b.lower << '\n'
      << "upper=" << b.upper << '\n'
      << "interval=" << b.lower << " <= R <= " << b.upper << '\n';
  return Success;
}

int construct(int n, int t, int s, const std::string& path, std::ostream& out, std::ostream& err) {
  const Witness w = witness_coloring(n, t, s);
  const std::vector<std::string> comments{
      "certificate: every K_{1," + std::to_string(n) + "} uses more than " + std::to_string(s) +
          " of " + std::to_string(t) + " colors",
      "R=" + std::to_string(w.ramsey_value) + " recipe=" + w.recipe.describe()};
  const std::string text = serialize_coloring(w.coloring, comments);
  if (path.empty()) {
    out << text;
    return Success;
  }
  if (!write_file(path, text, err))
    return Failure;
  out << "order=" << w.coloring.order() << '\n'
      << "value=" << w.ramsey_value << '\n'
      << "recipe=" << w.recipe.describe() << '\n'
      << "file=" << path << '\n';
  return Success;
}

int verify(const std::string& path, int n, int s, std::ostream& out, std::ostream& err) {
  std::ifstream f(path);
  if (!f) {
    err << "error: cannot open " << path << '\n';
    return UsageError;
  }
  std::optional<EdgeColoring> coloring;
  try {
    coloring = parse_coloring(f);
  } catch (const ParseError& e) {
    err << "error: " << path << ": " << e.what() << '\n';
    return UsageError;
  }
  const Certificate cert = check_certificate(std::move(*coloring), n, s);
  out << "verdict=" << (cert.passed ? "pass" : "fail") << '\n'
      << "order=" << cert.coloring.order() << '\n'
      << "min_star_colors="
      << (cert.min_colors ? std::to_string(*cert.min_colors) : std::string("no-star")) << '\n';
  if (cert.offending)
    out << "vertex=" << cert.offending->center.index << '\n'
        << "colors=" << join(cert.offending->colors) << '\n'
        << "edges_covered=" << cert.offending->edges_covered << '\n';
  return cert.passed ? Success : Failure;
}

int oracle(int n, int t, int s, int max_p, const OracleConfig& config, std::ostream& out) {
  const RamseySearch r = oracle_ramsey(n, t, s, max_p, config);
  out << "value=" << (r.value ? std::to_string(*r.value) : std::string("exceeds-max-p")) << '\n';
  for (const auto& [p, f] : r.profile)
    out << "f[" << p << "]=" << f << '\n';
  out << "nodes=" << r.stats.nodes << '\n'
      << "canonical_prunes=" << r.stats.canonical_prunes << '\n'
      << "bound_prunes=" << r.stats.bound_prunes << '\n'
      << "subtrees=" << r.stats.subtrees << '\n';
  return r.value ? Success : Failure;
}

int table(int t, int s, int from, int to, const std::string& format, std::ostream& out,
          std::ostream& err) {
  if (from > to) {
    err << "error: empty range n=" << from << ".." << to << '\n';
    return UsageError;
  }
  std::vector<CaseVerdict> rows;
  for (int n = from; n <= to; ++n)
    rows.push_back(classify_only(n, t, s));
  if (format == "csv") {
    out << "n,value,case\n";
    for (int n = from; n <= to; ++n) {
      const auto& v = rows[static_cast<std::size_t>(n - from)];
      out << n << ',' << v.value << ',' << to_string(v.tag) << '\n';
    }
  } else {
    out << std::setw(6) << "n" << std::setw(10) << "value" << "  case\n";
    for (int n = from; n <= to; ++n) {
      const auto& v = rows[static_cast<std::size_t>(n - from)];
      out << std::setw(6) << n << std::setw(10) << v.value << "  " << to_string(v.tag) << '\n';
    }
  }
  return Success;
}

int sample_check(int n, int t, int s, int p, std::int64_t trials, std::uint64_t seed, int threads,
                 const std::string& path, std::ostream& out, std::ostream& err) {
  const SampleOutcome r = sample_upper_check(p, n, t, s, trials, seed, threads);
  out << "verdict=" << (r.passed ? "pass" : "counterexample") << '\n' << "trials=" << r.trials << '\n';
  if (r.passed)
    return Success;
  out << "failing_trial=" << *r.failing_trial << '\n';
  const auto cover = smallest_star_cover(*r.counterexample, n);
  out << "min_star_colors="
      << (cover ? std::to_string(cover->colors.size()) : std::string("no-star")) << '\n';
  if (!path.empty()) {
    const std::vector<std::string> comments{"counterexample: R_{" + std::to_string(s) + "," +
                                            std::to_string(t) + "}(K_{1," + std::to_string(n) +
                                            "}) > " + std::to_string(p)};
    if (!write_file(path, serialize_coloring(*r.counterexample, comments), err))
      return Failure;
    out << "file=" << path << '\n';
  }
  return Failure;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Generalized star Ramsey numbers R_{s,t}(K_{1,n}): values, bounds, certificates"};
  app.require_subcommand(1);

  int n = 0, t = 0, s = 0, l = 0, p = 0, max_p = 0, from = 0, to = 0, threads = 0;
  std::int64_t trials = 0;
  std::uint64_t seed = 0;
  std::string file, format = "text", out_path;
  OracleConfig config;

  auto* c_compute = app.add_subcommand("compute", "Exact value for s = t-1 or s = t-2");
  c_compute->add_option("--n", n, "star leaves")->required();
  c_compute->add_option("--t", t, "colors")->required();
  c_compute->add_option("--s", s, "allowed colors")->required();

  auto* c_bounds = app.add_subcommand("bounds", "General bounds on R_{t-l,t}(K_{1,n})");
  c_bounds->add_option("--n", n)->required();
  c_bounds->add_option("--t", t)->required();
  c_bounds->add_option("--l", l)->required();

  auto* c_construct = app.add_subcommand("construct", "Write a verified lower-bound coloring");
  c_construct->add_option("--n", n)->required();
  c_construct->add_option("--t", t)->required();
  c_construct->add_option("--s", s)->required();
  c_construct->add_option("--out", out_path, "output file (default: stdout)");

  auto* c_verify = app.add_subcommand("verify", "Check a coloring file as a certificate");
  c_verify->add_option("--file", file)->required();
  c_verify->add_option("--n", n)->required();
  c_verify->add_option("--s", s)->required();

  auto* c_oracle = app.add_subcommand("oracle", "Exhaustive search for small instances");
  c_oracle->add_option("--n", n)->required();
  c_oracle->add_option("--t", t)->required();
  c_oracle->add_option("--s", s)->required();
  c_oracle->add_option("--max-p", max_p)->required();
  c_oracle->add_option("--edge-budget", config.edge_budget, "largest edge count searched");
  c_oracle->add_option("--threads", config.threads, "worker threads (0: default)");

  auto* c_table = app.add_subcommand("table", "Values over a range of n");
  c_table->add_option("--t", t)->required();
  c_table->add_option("--s", s)->required();
  c_table->add_option("--n-from", from)->required();
  c_table->add_option("--n-to", to)->required();
  c_table->add_option("--format", format)->check(CLI::IsMember({"text", "csv"}));

  auto* c_sample = app.add_subcommand("sample-check", "Random-coloring check of an upper bound");
  c_sample->add_option("--n", n)->required();
  c_sample->add_option("--t", t)->required();
  c_sample->add_option("--s", s)->required();
  c_sample->add_option("--p", p)->required();
  c_sample->add_option("--trials", trials)->required();
  c_sample->add_option("--seed", seed)->required();
  c_sample->add_option("--threads", threads);
  c_sample->add_option("--out", out_path, "write the counterexample here");

  std::vector<const char*> argv;
  argv.reserve(args.size());
  for (const auto& a : args)
    argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? Success : UsageError;
  }

  try {
    if (*c_compute)
      return compute(n, t, s, out);
    if (*c_bounds)
      return bounds(n, t, l, out);
    if (*c_construct)
      return construct(n, t, s, out_path, out, err);
    if (*c_verify)
      return verify(file, n, s, out, err);
    if (*c_oracle)
      return oracle(n, t, s, max_p, config, out);
    if (*c_table)
      return table(t, s, from, to, format, out, err);
    if (*c_sample)
      return sample_check(n, t, s, p, trials, seed, threads, out_path, out, err);
  } catch (const ConstructionFailed& e) {
    err << "error: construction-failed: " << e.what() << '\n';
    return Failure;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return UsageError;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return UsageError;
  } catch (const InfeasibleInstance& e) {
    err << "error: infeasible: " << e.what() << '\n';
    return UsageError;
  }
  return UsageError;
}

} // namespace starramsey::cli
