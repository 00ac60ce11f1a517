// Copyright 2026 The mzq Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "mzq/cli.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <string_view>

#include <CLI11.hpp>
#include <fmt/format.h>

#include "emit.hpp"
#include "mzq/bloch.hpp"
#include "mzq/entropic.hpp"
#include "mzq/interferometer.hpp"
#include "mzq/sampling.hpp"
#include "mzq/serialize.hpp"
#include "mzq/uncertainty.hpp"

namespace mzq::cli {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

double parse_real(std::string_view token) {
  const auto trimmed_end = token.find_last_not_of(" \t");
  const auto trimmed_begin = token.find_first_not_of(" \t");
  if (trimmed_begin == std::string_view::npos) {
    throw UsageError("empty number");
  }
  token = token.substr(trimmed_begin, trimmed_end - trimmed_begin + 1);
  if (token.ends_with("deg") || token.find("\xC2\xB0") != std::string_view::npos) {
    throw UsageError("angles are in radians; degree values are not accepted ('" + std::string(token) + "')");
  }
  if (token.starts_with('+')) token.remove_prefix(1);
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || ptr != token.data() + token.size()) {
    throw UsageError("not a number: '" + std::string(token) + "'");
  }
  return value;
}

std::vector<double> parse_list(const std::string& text, std::size_t expected, const char* what) {
  std::vector<double> values;
  std::size_t start = 0;
  while (true) {
    const auto comma = text.find(',', start);
    values.push_back(parse_real(std::string_view(text).substr(start, comma - start)));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  if (values.size() != expected) {
    throw UsageError(fmt::format("{} expects {} comma-separated values, got {}", what, expected, values.size()));
  }
  return values;
}

const char* yes_no(bool b) { return b ? "true" : "false"; }

/// Opens --out or falls back to the caller's stream.
class Sink {
 public:
  Sink(const RunConfig& config, std::ostream& fallback) {
    if (config.output_path) {
      file_.open(*config.output_path, std::ios::binary | std::ios::trunc);
      if (!file_) throw UsageError("cannot open output file '" + *config.output_path + "'");
    }
    os_ = config.output_path ? static_cast<std::ostream*>(&file_) : &fallback;
  }
  std::ostream& stream() { return *os_; }

 private:
  std::ofstream file_;
  std::ostream* os_;
};

// --- state -----------------------------------------------------------------

struct StateSpec {
  std::string bloch;
  std::string matrix;

  QubitState resolve(double eps_pos) const {
    if (!bloch.empty() && !matrix.empty()) {
      throw UsageError("give either --bloch or --matrix, not both");
    }
    if (!matrix.empty()) {
      const auto v = parse_list(matrix, 3, "--matrix (w+,r,theta)");
      const auto st = QubitState::from_matrix_variables(v[0], v[1], v[2]);
      return QubitState(BlochVector(st.bloch().vec(), eps_pos));
    }
    if (bloch.empty()) {
      throw UsageError("a state is required: --bloch sx,sy,sz or --matrix w+,r,theta");
    }
    const auto v = parse_list(bloch, 3, "--bloch");
    return QubitState(BlochVector(v[0], v[1], v[2], eps_pos));
  }
};

void add_state_options(CLI::App* cmd, StateSpec& spec, const char* role) {
  cmd->add_option("--bloch", spec.bloch, std::string(role) + " Bloch vector sx,sy,sz");
  cmd->add_option("--matrix", spec.matrix, std::string(role) + " matrix variables w+,r,theta (radians)");
}

void append_verdict(std::vector<std::pair<std::string, std::string>>& rows, const std::string& name,
                    const UncertaintyVerdict& v) {
  rows.emplace_back(name + ".lhs", real(v.lhs));
  rows.emplace_back(name + ".rhs", real(v.rhs));
  rows.emplace_back(name + ".gap", real(v.gap));
  rows.emplace_back(name + ".holds", yes_no(v.holds));
  rows.emplace_back(name + ".saturated", yes_no(v.saturated));
}

nlohmann::ordered_json verdict_json(const UncertaintyVerdict& v) {
  return {{"lhs", v.lhs}, {"rhs", v.rhs}, {"gap", v.gap}, {"holds", v.holds}, {"saturated", v.saturated}};
}

int cmd_state(const RunConfig& config, const StateSpec& spec, std::ostream& out) {
  const QubitState state = spec.resolve(config.tolerance("eps_pos"));
  const double eps_gap = config.tolerance("eps_gap");
  const auto duality = duality_report(state);
  const double theta = state.theta();
  const auto dual = duality_verdict(state, eps_gap);
  const auto hr = hr_relation(predictability_op(), visibility_op(theta), state, eps_gap);
  const auto sr = sr_pv_form(state, theta, eps_gap);
  const auto lp = lp_pv_form(state, eps_gap);

  Sink sink(config, out);
  auto& os = sink.stream();
  const auto meta = base_metadata(config);
  if (config.format == OutputFormat::kJson) {
    nlohmann::ordered_json j;
    j["meta"] = json_metadata(meta);
    j["state"] = nlohmann::json(state);
    j["P"] = duality.predictability;
    j["V"] = duality.visibility;
    j["theta"] = theta;
    j["w_plus"] = state.w_plus();
    j["r"] = state.r();
    j["purity"] = purity(state);
    j["pure"] = is_pure(state, config.tolerance("eps_pure"));
    j["duality"] = verdict_json(dual);
    j["heisenberg_robertson"] = verdict_json(hr);
    j["schrodinger_robertson"] = verdict_json(sr);
    j["landau_pollak"] = verdict_json(lp);
    write_json(os, j);
    return kExitOk;
  }
  std::vector<std::pair<std::string, std::string>> rows{
      {"sx", real(state.bloch().x())},
      {"sy", real(state.bloch().y())},
      {"sz", real(state.bloch().z())},
      {"P", real(duality.predictability)},
      {"V", real(duality.visibility)},
      {"theta", real(theta)},
      {"w_plus", real(state.w_plus())},
      {"r", real(state.r())},
      {"purity", real(purity(state))},
      {"pure", yes_no(is_pure(state, config.tolerance("eps_pure")))},
  };
  append_verdict(rows, "duality", dual);
  append_verdict(rows, "heisenberg_robertson", hr);
  append_verdict(rows, "schrodinger_robertson", sr);
  append_verdict(rows, "landau_pollak", lp);
  write_csv_metadata(os, meta);
  os << "quantity,value\n";
  for (const auto& [k, v] : rows) os << k << ',' << v << '\n';
  return kExitOk;
}

// --- mz --------------------------------------------------------------------

int cmd_mz(const RunConfig& config, const StateSpec& spec, std::size_t phases, std::ostream& out) {
  const QubitState source = spec.resolve(config.tolerance("eps_pos"));
  const QubitState inside = apply_beam_splitter(source);
  const FringeScan scan = fringe_scan(inside, phases);
  const double analytic = visibility(inside);

  Sink sink(config, out);
  auto& os = sink.stream();
  auto meta = base_metadata(config);
  meta.emplace_back("pipeline", "BS1 -> PS(phi) -> BS2");
  meta.emplace_back("phases", std::to_string(phases));
  if (config.format == OutputFormat::kJson) {
    nlohmann::ordered_json j;
    j["meta"] = json_metadata(meta);
    j["source"] = nlohmann::json(source);
    auto rows = nlohmann::ordered_json::array();
    for (const auto& p : scan.points) rows.push_back({p.phi, p.p_d1, p.p_d2});
    j["columns"] = {"phi", "p_D1", "p_D2"};
    j["rows"] = std::move(rows);
    j["p_max"] = scan.p_max;
    j["p_min"] = scan.p_min;
    j["V_operational"] = scan.v_operational;
    j["V_analytic"] = analytic;
    write_json(os, j);
    return kExitOk;
  }
  write_csv_metadata(os, meta);
  os << "phi,p_D1,p_D2\n";
  for (const auto& p : scan.points) os << real(p.phi) << ',' << real(p.p_d1) << ',' << real(p.p_d2) << '\n';
  os << "# p_max: " << real(scan.p_max) << '\n';
  os << "# p_min: " << real(scan.p_min) << '\n';
  os << "# V_operational: " << real(scan.v_operational) << '\n';
  os << "# V_analytic (2r): " << real(analytic) << '\n';
  return kExitOk;
}

// --- verify ----------------------------------------------------------------

int cmd_verify(const RunConfig& config, const StateSpec& pinned, std::size_t n, std::ostream& out) {
  if (n == 0) throw UsageError("--n must be at least 1");
  const double eps_gap = config.tolerance("eps_gap");

  std::vector<QubitState> states;
  std::size_t n_pure = 0;
  if (!pinned.bloch.empty() || !pinned.matrix.empty()) {
    if (n != 1) throw UsageError("a pinned state (--bloch/--matrix) audits exactly one state; use --n 1");
    states.push_back(pinned.resolve(config.tolerance("eps_pos")));
    n_pure = is_pure(states.front(), config.tolerance("eps_pure")) ? 1 : 0;
  } else {
    Rng rng(config.seed);
    states.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
      // Alternate pure and mixed draws.
      if (i % 2 == 0) {
        states.emplace_back(random_pure_bloch(rng));
        ++n_pure;
      } else {
        states.emplace_back(random_mixed_bloch(rng));
      }
    }
  }

  struct Tally {
    std::size_t holds = 0;
    std::size_t saturated = 0;
    void add(const UncertaintyVerdict& v) {
      holds += v.holds;
      saturated += v.saturated;
    }
  } duality, sr, lp;
  std::size_t agree = 0;
  for (const auto& s : states) {
    const auto audit = equivalence_audit(s, eps_gap);
    duality.add(audit.duality);
    sr.add(audit.sr);
    lp.add(audit.lp);
    agree += audit.all_hold() && audit.all_agree_on_saturation;
  }
  const std::string verdict = fmt::format("{}/{} agree", agree, states.size());

  Sink sink(config, out);
  auto& os = sink.stream();
  auto meta = base_metadata(config);
  meta.emplace_back("states", fmt::format("{} ({} pure, {} mixed)", states.size(), n_pure, states.size() - n_pure));
  if (config.format == OutputFormat::kJson) {
    nlohmann::ordered_json j;
    j["meta"] = json_metadata(meta);
    auto tally = [](const Tally& t) { return nlohmann::ordered_json{{"holds", t.holds}, {"saturated", t.saturated}}; };
    j["duality"] = tally(duality);
    j["schrodinger_robertson"] = tally(sr);
    j["landau_pollak"] = tally(lp);
    j["agree"] = agree;
    j["total"] = states.size();
    j["result"] = verdict;
    write_json(os, j);
  } else {
    write_csv_metadata(os, meta);
    os << "relation,holds,saturated\n";
    os << "duality," << duality.holds << ',' << duality.saturated << '\n';
    os << "schrodinger_robertson," << sr.holds << ',' << sr.saturated << '\n';
    os << "landau_pollak," << lp.holds << ',' << lp.saturated << '\n';
    os << "# result: " << verdict << '\n';
  }
  return agree == states.size() ? kExitOk : kExitViolation;
}

// --- qscan / qstar / contour ------------------------------------------------

std::string minimizer_list(const MinimizationResult& r) {
  std::string s;
  for (const auto& m : r.minimizers) {
    if (!s.empty()) s += '|';
    s += real(m.visibility) + ':' + real(m.predictability);
  }
  return s;
}

int cmd_qscan(const RunConfig& config, double q_min, double q_max, std::size_t steps, std::ostream& out) {
  if (!(q_min > 0.0 && q_max <= kMaxConcaveIndex && q_min <= q_max)) {
    throw std::domain_error(fmt::format(
        "q range [{}, {}] must lie inside (0, 2]: the pure-state restriction relies on concavity of the "
        "Renyi entropy, which only holds for q in (0, 2]",
        real(q_min), real(q_max)));
  }
  if (steps == 0) throw UsageError("--steps must be at least 1");
  if (steps == 1 && q_min != q_max) throw UsageError("--steps 1 needs --q-min equal to --q-max");

  std::vector<MinimizationResult> results;
  for (std::size_t k = 0; k < steps; ++k) {
    const double q = steps == 1 ? q_min
                                : (k + 1 == steps ? q_max
                                                  : q_min + (q_max - q_min) * static_cast<double>(k) /
                                                                static_cast<double>(steps - 1));
    results.push_back(minimize_entropy_sum(q));
  }

  Sink sink(config, out);
  auto& os = sink.stream();
  auto meta = base_metadata(config);
  meta.emplace_back("objective", "min over P^2+V^2=1 of H_q(P)+H_q(V) (nats)");
  meta.emplace_back("q_star", real(q_star()));
  if (config.format == OutputFormat::kJson) {
    nlohmann::ordered_json j;
    j["meta"] = json_metadata(meta);
    auto rows = nlohmann::ordered_json::array();
    for (const auto& r : results) {
      auto mins = nlohmann::ordered_json::array();
      for (const auto& m : r.minimizers) {
        mins.push_back({{"V", m.visibility},
                        {"P", m.predictability},
                        {"kind", m.kind == Minimizer::Kind::kBoundary ? "boundary" : "interior"}});
      }
      rows.push_back({{"q", r.q}, {"min_value", r.min_value}, {"regime", to_string(r.regime)}, {"minimizers", mins}});
    }
    j["rows"] = std::move(rows);
    write_json(os, j);
    return kExitOk;
  }
  write_csv_metadata(os, meta);
  os << "q,min_value,regime,n_minimizers,minimizers_V:P\n";
  for (const auto& r : results) {
    os << real(r.q) << ',' << real(r.min_value) << ',' << to_string(r.regime) << ',' << r.minimizers.size() << ','
       << minimizer_list(r) << '\n';
  }
  return kExitOk;
}

int cmd_qstar(const RunConfig& config, double tol, std::ostream& out) {
  const QStarResult r = find_q_star(tol);
  Sink sink(config, out);
  auto& os = sink.stream();
  auto meta = base_metadata(config);
  meta.emplace_back("equation", "2 H_q(1/sqrt 2) = ln 2");
  meta.emplace_back("bracket", "[1.01, 2]");
  if (config.format == OutputFormat::kJson) {
    nlohmann::ordered_json j;
    j["meta"] = json_metadata(meta);
    j["q_star"] = r.q_star;
    j["residual"] = r.residual;
    j["bracket_width"] = r.bracket_width;
    j["iterations"] = r.iterations;
    write_json(os, j);
    return kExitOk;
  }
  write_csv_metadata(os, meta);
  os << "q_star,residual,bracket_width,iterations\n";
  os << real(r.q_star) << ',' << real(r.residual) << ',' << real(r.bracket_width) << ',' << r.iterations << '\n';
  return kExitOk;
}

int cmd_contour(const RunConfig& config, double q, std::size_t n, std::ostream& out) {
  const ContourGrid grid = contour_grid(q, n);
  Sink sink(config, out);
  auto& os = sink.stream();
  auto meta = base_metadata(config);
  meta.emplace_back("q", real(grid.q));
  meta.emplace_back("n", std::to_string(grid.n));
  meta.emplace_back("constraint", std::string(kConstraintLabel));
  if (config.format == OutputFormat::kJson) {
    nlohmann::ordered_json j;
    j["meta"] = json_metadata(meta);
    j["q"] = grid.q;
    j["n"] = grid.n;
    j["constraint"] = kConstraintLabel;
    j["coords"] = grid.coords;
    auto rows = nlohmann::ordered_json::array();
    for (std::size_t ip = 0; ip < grid.n; ++ip) {
      rows.push_back(std::vector<double>(grid.values.begin() + static_cast<std::ptrdiff_t>(ip * grid.n),
                                         grid.values.begin() + static_cast<std::ptrdiff_t>((ip + 1) * grid.n)));
    }
    j["layout"] = "values[iP][iV]";
    j["values"] = std::move(rows);
    write_json(os, j);
    return kExitOk;
  }
  write_csv_metadata(os, meta);
  os << "V,P,H_sum\n";
  for (std::size_t ip = 0; ip < grid.n; ++ip) {
    for (std::size_t iv = 0; iv < grid.n; ++iv) {
      os << real(grid.coords[iv]) << ',' << real(grid.coords[ip]) << ',' << real(grid.at(iv, ip)) << '\n';
    }
  }
  return kExitOk;
}

std::string join_command(const std::vector<std::string>& args) {
  std::string s = "mzq";
  for (const auto& a : args) s += ' ' + a;
  return s;
}

}  // namespace

std::map<std::string, double> default_tolerances() {
  return {{"eps_gap", kEpsGap}, {"eps_pos", kEpsPos}, {"eps_pure", kEpsPure}};
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Mach-Zehnder qubit duality, uncertainty relations and Renyi entropy minimization", "mzq"};
  app.require_subcommand(1);
  app.fallthrough();
  app.set_version_flag("--version", std::string("mzq ") + MZQ_VERSION);

  RunConfig config;
  config.tolerances = default_tolerances();
  config.command_line = join_command(args);
  std::string format = "csv";
  std::string out_path;
  std::vector<std::string> overrides;
  app.add_option("--seed", config.seed, "RNG seed (echoed into output metadata)");
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"csv", "json"}));
  app.add_option("--out", out_path, "Write results to this file instead of standard output");
  app.add_option("--tolerance", overrides, "Override a tolerance: NAME=VALUE (eps_gap, eps_pos, eps_pure)");

  StateSpec state_spec;
  auto* state = app.add_subcommand("state", "Report P, V, purity and the uncertainty relations for one state");
  add_state_options(state, state_spec, "State");

  StateSpec mz_spec;
  std::size_t phases = 360;
  auto* mz = app.add_subcommand("mz", "Fringe scan through BS1 -> PS(phi) -> BS2");
  add_state_options(mz, mz_spec, "Source");
  mz->add_option("--phases", phases, "Number of phase settings in [0, 2 pi)");

  StateSpec verify_spec;
  std::size_t n_states = 1000;
  auto* verify = app.add_subcommand("verify", "Audit duality / Schrodinger-Robertson / Landau-Pollak agreement");
  verify->add_option("--n", n_states, "Number of random states (alternating pure and mixed)");
  add_state_options(verify, verify_spec, "Pinned");

  double q_min = 0.2;
  double q_max = 2.0;
  std::size_t steps = 19;
  auto* qscan = app.add_subcommand("qscan", "Constrained entropy-sum minimum over a range of q");
  qscan->add_option("--q-min", q_min, "Smallest q, in (0, 2]");
  qscan->add_option("--q-max", q_max, "Largest q, in (0, 2]");
  qscan->add_option("--steps", steps, "Number of evenly spaced q values");

  double tol = 1e-10;
  auto* qstar = app.add_subcommand("qstar", "Critical index q* and its residual");
  qstar->add_option("--tol", tol, "Final bracket width, in [1e-14, 1e-3]");

  double contour_q = 1.0;
  std::size_t contour_n = 256;
  auto* contour = app.add_subcommand("contour", "H_q(P)+H_q(V) on an n x n grid over [0,1]^2");
  contour->add_option("--q", contour_q, "Renyi index")->required();
  contour->add_option("--n", contour_n, "Grid size (>= 32)");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForVersion&) {
    out << app.version() << '\n';
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitValidation;
  }

  try {
    config.format = format == "json" ? OutputFormat::kJson : OutputFormat::kCsv;
    if (!out_path.empty()) config.output_path = out_path;
    for (const auto& o : overrides) {
      const auto eq = o.find('=');
      if (eq == std::string::npos) throw UsageError("--tolerance expects NAME=VALUE, got '" + o + "'");
      const std::string name = o.substr(0, eq);
      if (!config.tolerances.contains(name)) throw UsageError("unknown tolerance name '" + name + "'");
      const double value = parse_real(std::string_view(o).substr(eq + 1));
      if (!(value >= 0.0)) throw UsageError("tolerance " + name + " must be non-negative");
      config.tolerances[name] = value;
    }

    if (state->parsed()) return cmd_state(config, state_spec, out);
    if (mz->parsed()) return cmd_mz(config, mz_spec, phases, out);
    if (verify->parsed()) return cmd_verify(config, verify_spec, n_states, out);
    if (qscan->parsed()) return cmd_qscan(config, q_min, q_max, steps, out);
    if (qstar->parsed()) return cmd_qstar(config, tol, out);
    if (contour->parsed()) return cmd_contour(config, contour_q, contour_n, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitValidation;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitValidation;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << '\n';
    return kExitValidation;
  }
  return kExitValidation;
}

}  // namespace mzq::cli
