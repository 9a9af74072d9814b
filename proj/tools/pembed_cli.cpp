/* Copyright (C) 2026 The pembed Authors.
 * This program is Licensed under the Apache License, Version 2.0
 * (the "License"); you may not use this file except in compliance
 * with the License. You may obtain a copy of the License at
 *   http://www.apache.org/licenses/LICENSE-2.0
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License. See accompanying LICENSE file.
 */

// pembed: batch front end. Reads JSON inputs, writes JSON reports.
// Exit codes: 0 success, 1 verdict failure, 2 usage or input error.

#include <pembed/additive_poly.hpp>
#include <pembed/cohomology.hpp>
#include <pembed/embedding.hpp>
#include <pembed/errors.hpp>
#include <pembed/kernels.hpp>
#include <pembed/serialize.hpp>

#include <CLI11.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <random>
#include <string>

namespace {

using pembed::io::json;

constexpr int kOk = 0;
constexpr int kVerdictFailure = 1;
constexpr int kUsageError = 2;

struct RunConfig {
  std::string f_path, a_path, problem_path, action_path, out_path;
  std::size_t count = 0;
  std::int64_t oracle_bound = -1;
  std::int64_t bound = 0;
  int n = 2;
  int ext = 1;
  int theta = 0;
  std::size_t samples = 0;
  std::uint64_t seed = 0;
  bool oracle = false;
};

json load(const std::string &path) {
  std::ifstream in(path);
  if (!in)
    throw pembed::InputError("cannot open '" + path + "'");
  try {
    return json::parse(in);
  } catch (const json::parse_error &e) {
    throw pembed::InputError("'" + path + "': " + e.what());
  }
}

json envelope(const std::string &command) {
  return {{"schema_version", pembed::io::kSchemaVersion}, {"command", command}};
}

void emit(const json &report, const std::string &out_path) {
  const std::string text = report.dump(2) + "\n";
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path);
  if (!out)
    throw pembed::InputError("cannot write '" + out_path + "'");
  out << text;
}

int error_record(const std::string &kind, const std::string &message) {
  json err = {{"schema_version", pembed::io::kSchemaVersion},
              {"error", {{"kind", kind}, {"message", message}}}};
  std::cout << err.dump(2) << "\n";
  return kUsageError;
}

// Random a1 with v(a1) < alpha (any valuation when alpha is unbounded).
pembed::LaurentPoly random_element(const pembed::AdditivePoly &f,
                                   const pembed::Threshold &t,
                                   std::mt19937_64 &rng) {
  const auto &field = f.field();
  const std::int64_t top = t.alpha ? (*t.alpha)[0] - 1 : 8;
  const std::int64_t low = top - static_cast<std::int64_t>(rng() % 12);
  pembed::LaurentPoly::Terms terms;
  terms.emplace(low, pembed::FqElem{
                         static_cast<std::uint32_t>(1 + rng() % (field->q() - 1))});
  const int extra = static_cast<int>(rng() % 4);
  for (int i = 0; i < extra; ++i)
    terms.emplace(low + 1 + static_cast<std::int64_t>(rng() % 10),
                  pembed::FqElem{static_cast<std::uint32_t>(rng() % field->q())});
  return pembed::LaurentPoly(field, std::move(terms));
}

int cmd_threshold(const RunConfig &cfg) {
  const auto f = pembed::io::additive_from_json(load(cfg.f_path));
  const auto t = pembed::low_val_threshold(f);
  json report = envelope("threshold");
  report["f"] = pembed::io::to_json(f);
  report["threshold"] = pembed::io::to_json(t);
  bool ok = true;
  if (cfg.samples > 0) {
    std::mt19937_64 rng(cfg.seed);
    std::size_t failures = 0;
    for (std::size_t i = 0; i < cfg.samples; ++i) {
      const auto a1 = random_element(f, t, rng);
      if (pembed::eval(f, a1).valuation() !=
          pembed::predict_image_valuation(f, a1.valuation()))
        ++failures;
    }
    report["valuation_check"] = {{"samples", cfg.samples},
                                 {"seed", cfg.seed},
                                 {"failures", failures}};
    ok = failures == 0;
  }
  report["verdict"] = ok ? "OK" : "FAIL";
  emit(report, cfg.out_path);
  return ok ? kOk : kVerdictFailure;
}

int cmd_witnesses(const RunConfig &cfg) {
  const auto f = pembed::io::additive_from_json(load(cfg.f_path));
  const auto witnesses = pembed::coset_witnesses(f, cfg.count);
  json report = envelope("witnesses");
  report["f"] = pembed::io::to_json(f);
  report["threshold"] = pembed::io::to_json(pembed::low_val_threshold(f));
  json ws = json::array();
  for (const auto &w : witnesses)
    ws.push_back(pembed::io::to_json(w));
  report["witnesses"] = ws;

  bool ok = true;
  json certs = json::array();
  json oracle = json::array();
  for (std::size_t i = 0; i < witnesses.size(); ++i)
    for (std::size_t j = i + 1; j < witnesses.size(); ++j) {
      const auto diff = witnesses[i] - witnesses[j];
      const auto cert = pembed::certify_not_in_image(f, diff);
      const bool valid = cert && pembed::verify_certificate(f, *cert);
      ok = ok && valid;
      json entry = {{"i", i}, {"j", j}, {"valid", valid}};
      if (cert)
        entry["certificate"] = pembed::io::to_json(*cert);
      certs.push_back(entry);
      if (cfg.oracle_bound >= 0) {
        const auto pre = pembed::brute_force_in_image(f, diff, cfg.oracle_bound);
        ok = ok && !pre;
        oracle.push_back({{"i", i},
                          {"j", j},
                          {"preimage",
                           pre ? pembed::io::to_json(*pre) : json(nullptr)}});
      }
    }
  report["certificates"] = certs;
  report["certificate_count"] = certs.size();
  if (cfg.oracle_bound >= 0)
    report["oracle"] = {{"bound", cfg.oracle_bound}, {"results", oracle}};
  report["verdict"] = ok ? "OK" : "FAIL";
  emit(report, cfg.out_path);
  return ok ? kOk : kVerdictFailure;
}

int cmd_oracle(const RunConfig &cfg) {
  const auto f = pembed::io::additive_from_json(load(cfg.f_path));
  const json aj = load(cfg.a_path);
  const auto a = pembed::io::laurent_from_json(
      aj.is_object() ? aj.at("element") : aj, f.field());
  const auto pre = pembed::brute_force_in_image(f, a, cfg.bound);
  json report = envelope("oracle");
  report["element"] = pembed::io::to_json(a);
  report["bound"] = cfg.bound;
  report["preimage"] = pre ? pembed::io::to_json(*pre) : json(nullptr);
  report["result"] = pre ? "preimage" : "none-within-bound";
  if (f.m() >= 1 && !a.is_zero()) {
    const auto cert = pembed::certify_not_in_image(f, a);
    report["certificate"] = cert ? pembed::io::to_json(*cert) : json("inconclusive");
    // A certificate together with a found preimage is a contradiction.
    if (cert && pre) {
      report["verdict"] = "FAIL";
      emit(report, cfg.out_path);
      return kVerdictFailure;
    }
  }
  report["verdict"] = "OK";
  emit(report, cfg.out_path);
  return kOk;
}

int cmd_kernel(const RunConfig &cfg) {
  const auto f = pembed::io::additive_from_json(load(cfg.f_path));
  const auto kb = pembed::kernel_points(f, cfg.ext);
  bool ok = static_cast<int>(kb.basis.size()) <= std::max(f.m(), 0);
  for (auto b : kb.basis)
    ok = ok && pembed::eval_in_extension(f, kb, b).is_zero();
  json report = envelope("kernel");
  report["f"] = pembed::io::to_json(f);
  report["ext_degree"] = cfg.ext;
  report["kernel"] = pembed::io::to_json(kb);
  report["verdict"] = ok ? "OK" : "FAIL";
  emit(report, cfg.out_path);
  return ok ? kOk : kVerdictFailure;
}

int cmd_solve(const RunConfig &cfg) {
  const auto problem = pembed::io::problem_from_json(load(cfg.problem_path));
  const auto cls = pembed::classify_solutions(problem);
  json report = envelope("solve");
  report["problem"] = pembed::io::to_json(problem);
  report["classification"] = pembed::io::to_json(cls);
  if (cls.solutions.empty()) {
    report["torsor"] = nullptr;
    report["verdict"] = "not weakly solvable";
    emit(report, cfg.out_path);
    return kOk;
  }
  if (cfg.theta < 0 || cfg.theta >= static_cast<int>(cls.solutions.size()))
    throw pembed::InputError("--theta out of range");
  const auto torsor =
      pembed::torsor_check(problem, cls.solutions[cfg.theta]);
  report["theta"] = cfg.theta;
  report["torsor"] = pembed::io::to_json(torsor);
  report["verdict"] = torsor.ok() ? "OK" : "FAIL";
  emit(report, cfg.out_path);
  return torsor.ok() ? kOk : kVerdictFailure;
}

int cmd_fiber(const RunConfig &cfg) {
  const auto problem = pembed::io::problem_from_json(load(cfg.problem_path));
  const auto fp = pembed::fiber_problem(problem, cfg.n);
  json report = envelope("fiber");
  report["n"] = cfg.n;
  report["fiber_problem"] = pembed::io::to_json(fp.problem);
  report["fiber_order"] = fp.power.group->order();
  bool ok = true;
  if (problem.kernel().size() > 1) {
    const auto evidence = pembed::projection_evidence(problem, cfg.n);
    report["projection_evidence"] = pembed::io::to_json(evidence);
    ok = evidence.ok();
  }
  report["verdict"] = ok ? "OK" : "FAIL";
  emit(report, cfg.out_path);
  return ok ? kOk : kVerdictFailure;
}

int cmd_dominate(const RunConfig &cfg) {
  const auto action = pembed::io::action_from_json(load(cfg.action_path));
  const auto rep = pembed::domination_evidence(action, cfg.n);
  json report = envelope("dominate");
  report["action"] = pembed::io::to_json(action);
  report["evidence"] = pembed::io::to_json(rep);
  report["verdict"] = rep.ok() ? "OK" : "FAIL";
  emit(report, cfg.out_path);
  return rep.ok() ? kOk : kVerdictFailure;
}

int cmd_h1(const RunConfig &cfg) {
  const auto action = pembed::io::action_from_json(load(cfg.action_path));
  const pembed::CocycleSpace cs(action);
  json report = envelope("h1");
  report["cohomology"] = pembed::io::to_json(cs);
  bool ok = true;
  if (cfg.oracle) {
    const auto all = pembed::enumerate_cocycles_oracle(action);
    std::uint64_t z1 = 1;
    for (std::size_t i = 0; i < cs.dim_z1(); ++i)
      z1 *= static_cast<std::uint64_t>(cs.p());
    ok = all.size() == z1;
    report["oracle"] = {{"cocycle_count", all.size()}, {"matches", ok}};
  }
  report["verdict"] = ok ? "OK" : "FAIL";
  emit(report, cfg.out_path);
  return ok ? kOk : kVerdictFailure;
}

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"Witnesses for A/f(A) and solution counts for finite "
               "p-embedding problems"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto add_common = [&](CLI::App *sub) {
    sub->add_option("--out", cfg.out_path, "Write the report here instead of stdout");
    sub->add_option("--seed", cfg.seed, "Seed for randomized checks");
  };

  auto *threshold = app.add_subcommand("threshold", "Low-valuation threshold of f");
  threshold->add_option("--f", cfg.f_path, "Additive polynomial JSON")->required();
  threshold->add_option("--samples", cfg.samples,
                        "Random a1 to check v(f(a1)) = v(b_m) + p^m v(a1)");
  add_common(threshold);

  auto *witnesses = app.add_subcommand("witnesses", "Coset witnesses for A/f(A)");
  witnesses->add_option("--f", cfg.f_path, "Additive polynomial JSON")->required();
  witnesses->add_option("--N", cfg.count, "Number of witnesses")
      ->required()
      ->check(CLI::PositiveNumber);
  witnesses->add_option("--oracle-bound", cfg.oracle_bound,
                        "Cross-check every difference by exhaustive search")
      ->check(CLI::NonNegativeNumber);
  add_common(witnesses);

  auto *oracle = app.add_subcommand("oracle", "Exhaustive preimage search");
  oracle->add_option("--f", cfg.f_path, "Additive polynomial JSON")->required();
  oracle->add_option("--a", cfg.a_path, "Element JSON")->required();
  oracle->add_option("--bound", cfg.bound, "Support bound E")
      ->required()
      ->check(CLI::NonNegativeNumber);
  add_common(oracle);

  auto *kernel = app.add_subcommand("kernel", "Kernel of f over an extension field");
  kernel->add_option("--f", cfg.f_path, "Additive polynomial JSON")->required();
  kernel->add_option("--ext", cfg.ext, "Extension degree over the base field")
      ->check(CLI::PositiveNumber);
  add_common(kernel);

  auto *solve = app.add_subcommand("solve", "Classify weak solutions, check torsor");
  solve->add_option("--problem", cfg.problem_path, "Embedding problem JSON")->required();
  solve->add_option("--theta", cfg.theta, "Index of the base weak solution");
  add_common(solve);

  auto *fiber = app.add_subcommand("fiber", "Fiber-power problem and projections");
  fiber->add_option("--problem", cfg.problem_path, "Embedding problem JSON")->required();
  fiber->add_option("--n", cfg.n, "Fiber power")->check(CLI::PositiveNumber);
  add_common(fiber);

  auto *dominate = app.add_subcommand("dominate", "H^1 lower bound via P x| G");
  dominate->add_option("--action", cfg.action_path, "Action JSON")->required();
  dominate->add_option("--n", cfg.n, "Fiber power")->check(CLI::PositiveNumber);
  add_common(dominate);

  auto *h1 = app.add_subcommand("h1", "Z^1, B^1 and H^1 for an action");
  h1->add_option("--action", cfg.action_path, "Action JSON")->required();
  h1->add_flag("--oracle", cfg.oracle, "Compare |Z^1| with brute force");
  add_common(h1);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp &e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp &e) {
    return app.exit(e);
  } catch (const CLI::ParseError &e) {
    return error_record("usage", e.what());
  }

  try {
    if (*threshold)
      return cmd_threshold(cfg);
    if (*witnesses)
      return cmd_witnesses(cfg);
    if (*oracle)
      return cmd_oracle(cfg);
    if (*kernel)
      return cmd_kernel(cfg);
    if (*solve)
      return cmd_solve(cfg);
    if (*fiber)
      return cmd_fiber(cfg);
    if (*dominate)
      return cmd_dominate(cfg);
    if (*h1)
      return cmd_h1(cfg);
  } catch (const pembed::CapExceeded &e) {
    return error_record("cap", e.what());
  } catch (const pembed::RangeError &e) {
    return error_record("range", e.what());
  } catch (const pembed::InputError &e) {
    return error_record("input", e.what());
  } catch (const json::exception &e) {
    return error_record("input", e.what());
  } catch (const std::exception &e) {
    return error_record("internal", e.what());
  }
  return error_record("usage", "no subcommand");
}
