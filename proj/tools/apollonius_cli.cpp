// apollonius: command-line front end for the exact Apollonius engine.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <string>

#include "apollonius/errors.hpp"
#include "apollonius/pipeline.hpp"

using namespace apollo;

namespace {

struct Args {
  std::string config;
  std::string out;
  std::string field;
  std::string primes;
  std::string csv;
  std::string svg;
  int width = 800;
  std::uint64_t seed = 1;
  int trials = 0;
  unsigned threads = 0;
  bool sabotage = false;
  bool corrupt = false;
};

void write_text(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw ParseError("cannot write '" + path + "'");
  f << text;
}

void emit_json(const Args& a, const nlohmann::json& j) {
  if (!a.out.empty()) write_text(a.out, j.dump(2) + "\n");
}

int run_solve(const Args& a) {
  const auto j = cmd_solve(ProblemConfig::load(a.config));
  if (a.out.empty()) {
    std::cout << j.dump(2) << "\n";
  } else {
    emit_json(a, j);
  }
  return kExitOk;
}

int run_verify(const Args& a) {
  const VerifyReport rep = cmd_verify(ProblemConfig::load(a.config));
  std::cout << "kind: " << kind_name(rep.kind) << "\n";
  if (rep.per_point_vol) std::cout << "per-point (Vol):  " << rep.per_point_vol->str() << "\n";
  if (rep.per_point_area) std::cout << "per-point (Area): " << rep.per_point_area->str() << "\n";
  if (!rep.per_point_note.empty()) std::cout << "per-point note: " << rep.per_point_note << "\n";
  if (rep.zerodim) {
    std::cout << "global (" << rep.zerodim->pairing << " form, dim " << rep.zerodim->dim
              << "): " << rep.zerodim->formclass.str() << "\n";
  }
  if (!rep.zerodim_note.empty()) std::cout << "global note: " << rep.zerodim_note << "\n";
  if (rep.expected) std::cout << "expected: " << rep.expected->str() << "\n";
  std::cout << "paths agree: " << (rep.paths_agree ? "yes" : "no") << "\n";
  std::cout << rep.verdict << "\n";
  emit_json(a, rep.to_json());
  return rep.exit_code();
}

int run_duality(const Args& a) {
  const DualityReport rep = cmd_duality(ProblemConfig::load(a.config), a.sabotage);
  for (int i = 0; i < 3; ++i) {
    std::cout << "degenerative duality for i = " << i + 1 << "\n" << rep.thetas[static_cast<std::size_t>(i)].str() << "\n";
  }
  std::cout << "theta_1 theta_2 theta_3\n" << (rep.thetas[0] * rep.thetas[1] * rep.thetas[2]).str() << "\n";
  std::cout << "matches reference matrices: " << (rep.matches_reference ? "yes" : "no") << "\n";
  std::cout << "cube: " << (rep.cube.ok() ? "PASS (cubical graph)" : "FAIL") << "\n";
  for (auto& f : rep.cube.failures) std::cout << "  " << f << "\n";
  auto table = [](const std::string& title, const std::vector<SumCheck>& checks) {
    for (auto& c : checks) {
      std::cout << title << " {";
      for (std::size_t k = 0; k < c.indices.size(); ++k) std::cout << (k ? "," : "") << c.indices[k];
      std::cout << "}: " << check_state_name(c.state);
      if (c.sum) std::cout << "  " << c.sum->str();
      if (!c.reason.empty()) std::cout << "  (" << c.reason << ")";
      std::cout << "\n";
    }
  };
  table("inversive", rep.inversive);
  for (int i = 0; i < 3; ++i) table("degenerate i=" + std::to_string(i + 1), rep.degenerate[static_cast<std::size_t>(i)]);
  nlohmann::json j = rep.to_json();
  if (a.trials > 0) {
    const TrialSummary t = theta_trials(a.seed, a.trials);
    std::cout << "random trials (seed " << a.seed << "): " << t.matched << "/" << t.trials << " match\n";
    j["trials"] = t.to_json();
    if (t.matched != t.trials) {
      emit_json(a, j);
      return kExitMath;
    }
  }
  emit_json(a, j);
  return rep.exit_code();
}

int run_sweep(const Args& a) {
  if (a.primes.empty()) throw ParseError("sweep needs --primes lo..hi");
  const auto [lo, hi] = parse_prime_range(a.primes);
  const auto rows = cmd_sweep(ProblemConfig::load(a.config), lo, hi, a.threads);
  write_text(a.csv, sweep_csv(rows));
  return kExitOk;
}

int run_oracle(const Args& a) {
  if (a.field.empty()) throw ParseError("oracle needs --field Fp:p");
  const OracleReport rep = cmd_oracle(ProblemConfig::load(a.config), parse_field_prime(a.field), a.corrupt);
  auto show = [](const std::vector<AffinePoint>& v) {
    std::string s;
    for (auto& x : v) {
      s += " [1:" + std::to_string(x[0]) + ":" + std::to_string(x[1]) + ":" + std::to_string(x[2]) + "]";
    }
    return s.empty() ? std::string(" (none)") : s;
  };
  std::cout << "p = " << rep.p << ", " << rep.enumerated << " points of P^3 enumerated\n";
  std::cout << "brute force:" << show(rep.brute_force) << "\n";
  std::cout << "computed:   " << show(rep.computed) << "\n";
  if (rep.at_infinity) std::cout << "points with c0 = 0: " << rep.at_infinity << "\n";
  for (auto& n : rep.notes) std::cout << "note: " << n << "\n";
  std::cout << (rep.pass ? "PASS" : "FAIL") << "\n";
  emit_json(a, rep.to_json());
  return rep.exit_code();
}

int run_render(const Args& a) {
  const ProblemConfig pc = ProblemConfig::load(a.config);
  std::string path = a.svg;
  if (path.empty() && pc.options.svg) path = *pc.options.svg;
  write_text(path, cmd_render(pc, a.width));
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact solver for the problem of Apollonius with enriched counts"};
  app.require_subcommand(1);
  Args a;

  auto config = [&](CLI::App* sub) { sub->add_option("--config", a.config, "problem config (JSON)")->required(); };
  auto* solve = app.add_subcommand("solve", "all tangent circles as JSON");
  config(solve);
  solve->add_option("--out", a.out, "write JSON here instead of stdout");

  auto* verify = app.add_subcommand("verify", "global form against the expected class");
  config(verify);
  verify->add_option("--out", a.out, "also write the JSON report here");

  auto* duality = app.add_subcommand("duality", "theta matrices, cube check and conditional sums");
  config(duality);
  duality->add_option("--out", a.out, "also write the JSON report here");
  duality->add_option("--seed", a.seed, "seed for --trials");
  duality->add_option("--trials", a.trials, "random configurations to check as well");
  duality->add_flag("--test-sabotage", a.sabotage, "replace theta_2 by the identity (test mode)")->group("");

  auto* sweep = app.add_subcommand("sweep", "reduce modulo each prime and verify");
  config(sweep);
  sweep->add_option("--primes", a.primes, "prime range lo..hi")->required();
  sweep->add_option("--csv", a.csv, "CSV output path (default stdout)");
  sweep->add_option("--threads", a.threads, "worker threads (default: hardware)");

  auto* oracle = app.add_subcommand("oracle", "brute-force P^3(F_p) comparison");
  config(oracle);
  oracle->add_option("--field", a.field, "Fp:p")->required();
  oracle->add_option("--out", a.out, "also write the JSON report here");
  oracle->add_flag("--test-corrupt", a.corrupt, "perturb one brute-force equation (test mode)")->group("");

  auto* render = app.add_subcommand("render", "SVG of the inputs and real solutions");
  config(render);
  render->add_option("--svg", a.svg, "SVG output path (default: options.svg or stdout)");
  render->add_option("--width", a.width, "width in pixels");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*solve) return run_solve(a);
    if (*verify) return run_verify(a);
    if (*duality) return run_duality(a);
    if (*sweep) return run_sweep(a);
    if (*oracle) return run_oracle(a);
    if (*render) return run_render(a);
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const MathError& e) {
    std::cerr << "error: " << e.what() << "\n";
    if (e.kind() == ErrorKind::DegenerateMerge) std::cerr << "hint: perturb the configuration slightly and retry\n";
    return kExitMath;
  }
  return kExitUsage;
}
