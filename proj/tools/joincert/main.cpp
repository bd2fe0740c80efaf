// Copyright 2026 The joincert Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "commands.hpp"
#include "joincert/errors.hpp"
#include "joincert/spec_io.hpp"

namespace {

using joincert::cli::json;

constexpr int kExitReplayMismatch = 1;
constexpr int kExitInput = 2;
constexpr int kExitInternal = 3;

struct Options {
  std::string input;
  std::string c;
  std::string w;
  bool all_rays = false;
  std::string json_path;
  std::string tolerance;
  std::string digest;
  std::string probe;
  bool timing = false;
};

void emit(json report, const Options& o, std::chrono::steady_clock::time_point start) {
  if (o.timing) {
    const auto us = std::chrono::duration_cast<std::chrono::microseconds>(std::chrono::steady_clock::now() - start);
    report["timing"] = {{"wall_microseconds", static_cast<long long>(us.count())}};
  }
  if (o.json_path == "-") {
    std::cout << report.dump(2) << "\n";
    return;
  }
  if (!o.json_path.empty()) {
    std::ofstream out(o.json_path);
    if (!out) throw joincert::DomainError("cannot write " + o.json_path);
    out << report.dump(2) << "\n";
  }
  std::cout << joincert::cli::render_text(report);
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw joincert::SpecError(path + ": cannot read report");
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw joincert::SpecError(path + ": malformed JSON: " + e.what());
  }
}

joincert::cli::Request request_of(const std::string& command, const Options& o) {
  joincert::cli::Request r;
  r.command = command;
  r.all_rays = o.all_rays;
  if (!o.c.empty()) {
    r.c = joincert::Rational::parse(o.c);
    if (r.c->abs() >= joincert::Rational(1)) throw joincert::DomainError("|c| must be < 1");
  }
  if (!o.w.empty()) r.w = joincert::cli::parse_weights(o.w);
  if (!o.probe.empty()) {
    if (command != "extremal") throw joincert::DomainError("--probe applies to extremal");
    r.probe = joincert::Rational::parse(o.probe);
  }
  if (!o.tolerance.empty()) r.tolerance = joincert::cli::parse_dyadic(o.tolerance);
  const int selectors = static_cast<int>(r.c.has_value()) + static_cast<int>(r.w.has_value()) + (r.all_rays ? 1 : 0);
  if (selectors > 1) throw joincert::DomainError("use only one of --c, --w, --all-rays");
  if (command == "extremal" && selectors == 0) throw joincert::DomainError("extremal needs --c, --w or --all-rays");
  return r;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"joincert: certified extremality and CSC computations for Yamazaki fiber joins"};
  app.require_subcommand(1);
  Options o;

  const auto add_common = [&](CLI::App* sub, const std::string& what) {
    sub->add_option("input", o.input, what)->required()->check(CLI::ExistingFile);
    sub->add_option("--json", o.json_path, "Write the JSON report to PATH (- for stdout)");
    sub->add_flag("--timing", o.timing, "Add wall-clock timing outside the digest");
  };
  auto* extremal = app.add_subcommand("extremal", "Extremality of one ray or of the whole cone");
  add_common(extremal, "Spec JSON file");
  extremal->add_option("--c", o.c, "Ray parameter c in (-1, 1), as p/q");
  extremal->add_option("--w", o.w, "Ray weights A,B (coprime, positive)");
  extremal->add_flag("--all-rays", o.all_rays, "Certify every ray of the cone");
  extremal->add_option("--probe", o.probe, "Also report p(z) at this z, with --c or --w");
  auto* csc = app.add_subcommand("csc", "CSC rays with extremality certificates");
  add_common(csc, "Spec JSON file");
  csc->add_option("--tolerance", o.tolerance, "Root interval width, dyadic (2^-k or p/2^k)");
  auto* quotient = app.add_subcommand("quotient", "Quasi-regular quotient and admissibility");
  add_common(quotient, "Spec JSON file");
  quotient->add_option("--w", o.w, "Weights A,B (default 1,1)");
  quotient->add_option("--c", o.c, "Ray parameter instead of weights");
  auto* cohom = app.add_subcommand("cohomology", "Integral cohomology of the total space");
  add_common(cohom, "Spec JSON file");
  auto* equiv = app.add_subcommand("equiv", "CSC equation equivalences for a CP1 x CP1 join");
  add_common(equiv, "Spec JSON file");
  auto* scan = app.add_subcommand("scan", "Run every cell of a parameter family");
  add_common(scan, "Family JSON file");
  auto* replay = app.add_subcommand("replay", "Recompute a report and compare digests");
  replay->add_option("input", o.input, "Report JSON file")->required()->check(CLI::ExistingFile);
  replay->add_option("--replay", o.digest, "Only the verdict or report with this digest");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : kExitInput;
  }

  const auto start = std::chrono::steady_clock::now();
  try {
    const int workers = joincert::cli::workers_from_env();
    if (replay->parsed()) {
      const json report = read_json_file(o.input);
      std::optional<std::string> digest;
      if (!o.digest.empty()) digest = o.digest;
      const auto r = joincert::cli::replay(report, digest, workers);
      for (const auto& m : r.mismatches) std::cout << "MISMATCH " << m << "\n";
      std::cout << "replayed " << r.reports << " report(s), " << r.verdicts << " verdict(s): "
                << (r.ok() ? "all digests reproduced" : "digests differ") << "\n";
      return r.ok() ? 0 : kExitReplayMismatch;
    }
    if (scan->parsed()) {
      emit(joincert::cli::run_scan(joincert::cli::load_family(o.input), workers), o, start);
      return 0;
    }
    std::string command;
    for (auto* sub : {extremal, csc, quotient, cohom, equiv}) {
      if (sub->parsed()) command = sub->get_name();
    }
    const joincert::FiberJoinSpec spec = joincert::load_spec(o.input);
    emit(joincert::cli::run_request(spec, request_of(command, o)), o, start);
    return 0;
  } catch (const joincert::SpecError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const joincert::DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const joincert::InvariantViolation& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitInternal;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }
}
