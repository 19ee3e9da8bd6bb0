// Command-line front end: stability reports, the regime table, Lane-Emden
// profiles and phase-space trajectories.
//
// Exit codes: 0 success, 2 invalid input, 3 boundary index, 4 I/O failure.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "polystab/analysis.hpp"
#include "polystab/integrate.hpp"
#include "polystab/io.hpp"

namespace {

constexpr int kExitInvalid = 2;
constexpr int kExitBoundary = 3;
constexpr int kExitIo = 4;

struct Options {
  double n = 0.0;
  double b = 1.0;
  double xi_max = polystab::kDefaultXiMax;
  double tol = 1e-10;
  int grid = 8;
  double t_end = 30.0;
  int samples = 1;
  std::string format = "json";
  std::string output;
};

struct IoFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void write_output(const Options& opt, const std::string& text) {
  if (opt.output.empty() || opt.output == "-") {
    std::cout << text;
    std::cout.flush();
    if (!std::cout) throw IoFailure("failed to write to stdout");
    return;
  }
  std::ofstream out(opt.output, std::ios::binary);
  if (!out) throw IoFailure("cannot open " + opt.output + " for writing");
  out << text;
  out.close();
  if (!out) throw IoFailure("failed to write " + opt.output);
}

int run_analyze(const Options& opt) {
  const auto analysis = polystab::analyze(polystab::PolytropeConfig{opt.n, opt.b});
  if (opt.format == "text") {
    write_output(opt, polystab::io::to_text(analysis));
  } else if (opt.format == "csv") {
    write_output(opt, polystab::io::to_csv(analysis));
  } else {
    write_output(opt, polystab::io::dump(polystab::io::to_json(analysis)));
  }
  return 0;
}

int run_table(const Options& opt) {
  const auto table = polystab::build_table(opt.samples);
  if (opt.format == "text") {
    write_output(opt, polystab::io::to_text(table));
  } else if (opt.format == "csv") {
    write_output(opt, polystab::io::to_csv(table));
  } else {
    write_output(opt, polystab::io::dump(polystab::io::to_json(table)));
  }
  for (const auto& row : table.rows) {
    if (!row.consistent) {
      std::cerr << "warning: verdicts vary across samples in regime " << row.regime_label << "\n";
    }
  }
  return 0;
}

int run_profile(const Options& opt) {
  const auto profile = polystab::integrate_physical(opt.n, opt.xi_max, opt.tol);
  if (opt.format == "csv") {
    write_output(opt, polystab::io::to_csv(profile));
  } else {
    write_output(opt, polystab::io::dump(polystab::io::to_json(profile)));
  }
  if (profile.status != polystab::IntegrationStatus::Complete) {
    std::cerr << "warning: integration stopped early (" << polystab::to_string(profile.status)
              << ")\n";
  }
  return 0;
}

int run_phase(const Options& opt) {
  const polystab::PolytropeConfig config{opt.n, opt.b};
  const auto portrait = polystab::phase_portrait(config, opt.grid, opt.t_end, opt.tol);
  if (opt.format == "csv") {
    write_output(opt, polystab::io::to_csv(portrait));
  } else {
    write_output(opt, polystab::io::dump(polystab::io::to_json(portrait)));
  }
  std::size_t partial = 0;
  for (const auto& tr : portrait.trajectories) {
    if (tr.status != polystab::IntegrationStatus::Complete) ++partial;
  }
  if (partial > 0) {
    std::cerr << "warning: " << partial << " of " << portrait.trajectories.size()
              << " trajectories are partial\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Stability analysis of the Lane-Emden (Emden-Fowler) equation"};
  app.require_subcommand(1);
  Options opt;

  auto* analyze = app.add_subcommand("analyze", "Linear, Jacobi and Lyapunov stability of the equilibria");
  analyze->add_option("--n", opt.n, "Polytropic index (n > 1)")->required();
  analyze->add_option("--b", opt.b, "Scale constant B > 0")->capture_default_str();
  analyze->add_option("--format", opt.format)->check(CLI::IsMember({"json", "csv", "text"}))->capture_default_str();
  analyze->add_option("--output", opt.output, "Output path (default stdout)");

  auto* table = app.add_subcommand("table", "Verdicts per regime of n");
  table->add_option("--samples", opt.samples, "Samples per regime")->capture_default_str();
  table->add_option("--format", opt.format)->check(CLI::IsMember({"json", "csv", "text"}))->capture_default_str();
  table->add_option("--output", opt.output, "Output path (default stdout)");

  auto* profile = app.add_subcommand("profile", "Integrate the Lane-Emden equation from the centre");
  profile->add_option("--n", opt.n, "Polytropic index (n >= 0)")->required();
  profile->add_option("--xi-max", opt.xi_max, "Largest radius")->capture_default_str();
  profile->add_option("--tol", opt.tol, "Integration tolerance")->capture_default_str();
  profile->add_option("--format", opt.format)->check(CLI::IsMember({"json", "csv"}))->capture_default_str();
  profile->add_option("--output", opt.output, "Output path (default stdout)");

  auto* phase = app.add_subcommand("phase", "Trajectories of the autonomous system near an equilibrium");
  phase->add_option("--n", opt.n, "Polytropic index (n > 1)")->required();
  phase->add_option("--b", opt.b, "Scale constant B > 0")->capture_default_str();
  phase->add_option("--grid", opt.grid, "Initial conditions per axis")->capture_default_str();
  phase->add_option("--t-end", opt.t_end, "Integration end time")->capture_default_str();
  phase->add_option("--tol", opt.tol, "Integration tolerance")->capture_default_str();
  phase->add_option("--format", opt.format)->check(CLI::IsMember({"json", "csv"}))->capture_default_str();
  phase->add_option("--output", opt.output, "Output path (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitInvalid;
  }

  try {
    if (analyze->parsed()) return run_analyze(opt);
    if (table->parsed()) return run_table(opt);
    if (profile->parsed()) return run_profile(opt);
    if (phase->parsed()) return run_phase(opt);
  } catch (const polystab::BoundaryIndex& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBoundary;
  } catch (const IoFailure& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitIo;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInvalid;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInvalid;
  }
  return kExitInvalid;
}
