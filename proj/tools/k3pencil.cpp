// SPDX-License-Identifier: MIT
// Copyright (c) k3pencil contributors
#include <algorithm>
#include <fstream>
#include <iostream>
#include <stdexcept>
#include <thread>

#include <CLI11.hpp>

#include "k3pencil/report/report.hpp"

namespace {

constexpr int kUsageError = 2;

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"k3pencil: exact verification of the K3 pencil computations"};
  app.require_subcommand(1, 1);
  app.fallthrough();

  std::string out_path;
  unsigned jobs = 0;
  app.add_option("--out", out_path, "Write the JSON report to this file instead of stdout");
  app.add_option("--jobs", jobs, "Worker threads for enumeration (0 = available parallelism)")
      ->check(CLI::NonNegativeNumber);

  auto* all = app.add_subcommand("all", "Run every check");

  std::string surface = "q", s_value = "generic";
  auto* sing = app.add_subcommand("singularities", "Singular locus tables");
  sing->add_option("--surface", surface, "q or branch")->check(CLI::IsMember({"q", "branch"}));
  sing->add_option("--s", s_value, "Pencil parameter: a rational or 'generic' (branch only)");

  auto* lines = app.add_subcommand("lines", "Lifted lines, the line matrix, chain model and Cremona checks");

  std::string spec;
  auto* lattice = app.add_subcommand("lattice", "Invariants of a lattice expression");
  lattice->add_option("--spec", spec, "Expression such as \"U + E8(-1)^2 + <-12>\"")->required();

  std::string fiber = "generic";
  auto* picard = app.add_subcommand("picard", "Picard lattice enumeration for one fiber");
  picard->add_option("--fiber", fiber, "generic, s1 or s-1");
  bool reflections = false;
  picard->add_flag("--reflections", reflections, "Also run the reflection isomorphism checks");

  std::string op = "all";
  std::size_t n = 0;
  bool corrected = false;
  auto* series = app.add_subcommand("series", "Differential operators and their series");
  series->add_option("--op", op, "apery, fermi, domb or all")->check(CLI::IsMember({"apery", "fermi", "domb", "all"}));
  series->add_option("--n", n, "Truncation order (default 50, 40 for fermi)");
  series->add_flag("--corrected", corrected, "Only the corrected operators");

  std::string only;
  auto* identities = app.add_subcommand("identities", "Rational function identities");
  identities->add_option("--only", only, "Run a single identity by id");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsageError;
  }

  if (jobs == 0) jobs = std::max(1u, std::thread::hardware_concurrency());

  std::vector<k3pencil::CheckRecord> records;
  try {
    if (all->parsed()) {
      records = k3pencil::all_checks(jobs);
    } else if (sing->parsed()) {
      records = k3pencil::singularity_checks(surface, s_value);
    } else if (lines->parsed()) {
      records = k3pencil::line_checks();
    } else if (lattice->parsed()) {
      records = k3pencil::lattice_checks(spec);
    } else if (picard->parsed()) {
      records = k3pencil::picard_checks(fiber, jobs);
      if (reflections)
        for (auto& r : k3pencil::reflection_checks()) records.push_back(std::move(r));
    } else if (series->parsed()) {
      records = k3pencil::series_checks(op, n, corrected);
    } else if (identities->parsed()) {
      records = k3pencil::identity_checks(only);
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n\n" << app.help();
    return kUsageError;
  }

  const std::string text = k3pencil::report_json(records).dump(2) + "\n";
  if (out_path.empty()) {
    std::cout << text;
  } else {
    std::ofstream f(out_path);
    if (!f) {
      std::cerr << "error: cannot write " << out_path << "\n";
      return kUsageError;
    }
    f << text;
  }
  return k3pencil::report_exit_code(records);
}
