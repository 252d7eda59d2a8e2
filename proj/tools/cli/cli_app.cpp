// Copyright 2026 The dicke4 Authors
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

#include "cli_app.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iomanip>
#include <optional>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>
#include <json.hpp>

#include "dicke4/dense_oracle.hpp"
#include "dicke4/errors.hpp"
#include "dicke4/lindblad_solver.hpp"
#include "dicke4/observables.hpp"
#include "dicke4/symmetric_sector.hpp"
#include "dicke4/verification.hpp"

namespace dicke4::cli {

namespace {

using Json = nlohmann::ordered_json;

// Bad input detected before any computation; exit code 2.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Format { kCsv, kJson };
enum class Model { kSymmetric, kDickeTruncated, kDenseOracle };

struct CommonOptions {
  std::optional<int> z;
  double s = 0.0;
  double ctilde = 0.5;
  std::string format = "csv";
  std::string out_path;
};

struct PropagateOptions {
  std::string initial;
  double tau_max = 10.0;
  int steps = 200;
  std::string observables = "trace,inversion";
  std::string model = "symmetric";
};

struct VerifyCliOptions {
  int z_max = 4;
  bool inject_fault = false;
};

struct SpectrumCliOptions {
  bool full = false;
  std::string format = "json";
};

Format parse_format(const std::string& f) {
  if (f == "csv") return Format::kCsv;
  if (f == "json") return Format::kJson;
  throw UsageError("--format must be csv or json, got '" + f + "'");
}

Model parse_model(const std::string& m) {
  if (m == "symmetric") return Model::kSymmetric;
  if (m == "dicke-truncated") return Model::kDickeTruncated;
  if (m == "dense-oracle") return Model::kDenseOracle;
  throw UsageError("--model must be symmetric, dicke-truncated or dense-oracle, got '" + m + "'");
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::string item;
  std::istringstream in(text);
  while (std::getline(in, item, sep)) parts.push_back(item);
  if (!text.empty() && text.back() == sep) parts.emplace_back();
  return parts;
}

int parse_int(const std::string& text, const std::string& what) {
  int value = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    throw UsageError(what + ": expected an integer, got '" + text + "'");
  }
  return value;
}

HalfInteger parse_label(const std::string& text, const std::string& what) {
  try {
    return parse_half_integer(text);
  } catch (const std::invalid_argument& e) {
    throw UsageError(what + ": " + e.what());
  }
}

void require_z(int z) {
  if (z < 1) throw UsageError("--z must be >= 1, got " + std::to_string(z));
}

void validate_model_params(int z, double s, double ctilde) {
  require_z(z);
  if (!(s >= 0.0 && s <= 1.0)) throw UsageError("--s must lie in [0, 1]");
  if (!(ctilde >= 0.0) || !std::isfinite(ctilde)) throw UsageError("--ctilde must be finite and >= 0");
}

// --- initial states ---------------------------------------------------------

struct InitialSpec {
  enum class Kind { kBell, kGhz, kDicke, kConfig } kind;
  HalfInteger q3;                 // kDicke
  SymmetricConfig config;         // kConfig
};

InitialSpec parse_initial(const std::string& text) {
  if (text == "bell") return {InitialSpec::Kind::kBell, {}, {}};
  if (text == "ghz") return {InitialSpec::Kind::kGhz, {}, {}};
  if (text.rfind("dicke:", 0) == 0) {
    return {InitialSpec::Kind::kDicke, parse_label(text.substr(6), "--initial dicke"), {}};
  }
  if (text.rfind("config:", 0) == 0) {
    const auto parts = split(text.substr(7), ',');
    if (parts.size() != 4) throw UsageError("--initial config needs four counts alpha,beta,gamma,delta");
    SymmetricConfig c{parse_int(parts[0], "--initial config"), parse_int(parts[1], "--initial config"),
                      parse_int(parts[2], "--initial config"), parse_int(parts[3], "--initial config")};
    if (c.alpha < 0 || c.beta < 0 || c.gamma < 0 || c.delta < 0 || c.z() < 1) {
      throw UsageError("--initial config counts must be >= 0 with a positive sum");
    }
    return {InitialSpec::Kind::kConfig, {}, c};
  }
  throw UsageError("--initial must be bell, ghz, dicke:<q3> or config:<a>,<b>,<g>,<d>, got '" + text + "'");
}

int resolve_z(const InitialSpec& init, std::optional<int> given) {
  std::optional<int> implied;
  switch (init.kind) {
    case InitialSpec::Kind::kBell:
      implied = 2;
      break;
    case InitialSpec::Kind::kGhz:
      implied = 3;
      break;
    case InitialSpec::Kind::kConfig:
      implied = init.config.z();
      break;
    case InitialSpec::Kind::kDicke:
      break;
  }
  if (implied && given && *implied != *given) {
    throw UsageError("--initial implies Z=" + std::to_string(*implied) + " but --z is " + std::to_string(*given));
  }
  if (implied) return *implied;
  if (!given) throw UsageError("--initial dicke:<q3> needs --z");
  require_z(*given);
  return *given;
}

void require_dicke_label(int z, HalfInteger q3) {
  if (std::abs(q3.twice()) > z || (z - q3.twice()) % 2 != 0) {
    throw UsageError("dicke:" + q3.to_string() + " is not a valid q3 for Z=" + std::to_string(z));
  }
}

SymmetricVector symmetric_initial(const InitialSpec& init, int z) {
  switch (init.kind) {
    case InitialSpec::Kind::kBell:
      return bell_initial();
    case InitialSpec::Kind::kGhz:
      return ghz_initial();
    case InitialSpec::Kind::kDicke:
      require_dicke_label(z, init.q3);
      return SymmetricVector::basis_state(z, {HalfInteger::half(z), init.q3, 0});
    case InitialSpec::Kind::kConfig:
      return SymmetricVector::basis_state(z, qn_from_config(init.config));
  }
  throw std::logic_error("unhandled initial state");
}

Eigen::MatrixXcd dicke_sector_initial(const InitialSpec& init, int z) {
  const HalfInteger top = HalfInteger::half(z);
  switch (init.kind) {
    case InitialSpec::Kind::kBell:
      return dicke_projector(2, 0, 0);
    case InitialSpec::Kind::kGhz:
      return 0.5 * (dicke_projector(3, top, top) - dicke_projector(3, top, -top) -
                    dicke_projector(3, -top, top) + dicke_projector(3, -top, -top));
    case InitialSpec::Kind::kDicke:
      require_dicke_label(z, init.q3);
      return dicke_projector(z, init.q3, init.q3);
    case InitialSpec::Kind::kConfig:
      break;
  }
  throw UsageError("--initial config is not representable in the truncated Dicke model");
}

// --- output -----------------------------------------------------------------

void write_output(const std::string& text, const std::string& path, std::ostream& out) {
  if (path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw UsageError("cannot open --out path '" + path + "'");
  file << text;
  if (!file) throw std::runtime_error("failed writing '" + path + "'");
}

// Round-off below this magnitude is written as 0 so that exact zeros are stable.
constexpr double kZeroSnap = 1e-13;

double rounded(double x) {
  if (!std::isfinite(x)) return x;
  if (std::abs(x) < kZeroSnap) return 0.0;
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.15g", x);
  const double r = std::strtod(buf, nullptr);
  return r == 0.0 ? 0.0 : r;
}

Json json_number(double x) { return Json(rounded(x)); }

std::string series_csv(const ObservableSeries& series, const std::vector<std::string>& names) {
  std::string text = "tau";
  for (const auto& n : names) text += "," + n;
  text += "\n";
  for (std::size_t i = 0; i < series.taus.size(); ++i) {
    text += format_number(series.taus[i]);
    for (const auto& n : names) text += "," + format_number(series.values.at(n)[i]);
    text += "\n";
  }
  return text;
}

std::string series_json(const ObservableSeries& series, const std::vector<std::string>& names, Json header) {
  Json taus = Json::array();
  for (double t : series.taus) taus.push_back(json_number(t));
  header["tau"] = std::move(taus);
  for (const auto& n : names) {
    Json column = Json::array();
    for (double v : series.values.at(n)) column.push_back(json_number(v));
    header[n] = std::move(column);
  }
  return header.dump(2) + "\n";
}

// --- subcommands ------------------------------------------------------------

int cmd_basis(const CommonOptions& common, std::ostream& out) {
  if (!common.z) throw UsageError("basis needs --z");
  const int z = *common.z;
  require_z(z);
  const Format format = parse_format(common.format);
  const SymmetricBasis& basis = SymmetricBasis::get(z);
  std::string text;
  if (format == Format::kCsv) {
    text = "q,q3,sigma3,alpha,beta,gamma,delta,multiplicity,trace_carrying\n";
    for (const QuantumNumbers& qn : basis.states()) {
      const SymmetricConfig c = config_from_qn(z, qn);
      text += qn.q.to_string() + "," + qn.q3.to_string() + "," + qn.sigma3.to_string() + "," +
              std::to_string(c.alpha) + "," + std::to_string(c.beta) + "," + std::to_string(c.gamma) + "," +
              std::to_string(c.delta) + "," + std::to_string(multiplicity(c)) + "," +
              (is_trace_carrying(z, qn) ? "1" : "0") + "\n";
    }
    text += "# dimension " + std::to_string(basis.size()) + "\n";
  } else {
    Json states = Json::array();
    for (const QuantumNumbers& qn : basis.states()) {
      const SymmetricConfig c = config_from_qn(z, qn);
      states.push_back(Json{{"q", qn.q.to_string()},
                            {"q3", qn.q3.to_string()},
                            {"sigma3", qn.sigma3.to_string()},
                            {"config", {c.alpha, c.beta, c.gamma, c.delta}},
                            {"multiplicity", multiplicity(c)},
                            {"trace_carrying", is_trace_carrying(z, qn)}});
    }
    text = Json{{"z", z}, {"states", std::move(states)}, {"dimension", basis.size()}}.dump(2) + "\n";
  }
  write_output(text, common.out_path, out);
  return kExitOk;
}

int cmd_spectrum(const CommonOptions& common, const SpectrumCliOptions& opts, std::ostream& out) {
  if (!common.z) throw UsageError("spectrum needs --z");
  validate_model_params(*common.z, common.s, common.ctilde);
  const Format format = parse_format(opts.format);
  const ModelParams p{*common.z, common.s, common.ctilde};
  const SpectrumResult r = spectrum(p);
  const auto dicke = SymmetricBasis::get(p.z).trace_carrying();
  const SymmetricBasis& basis = SymmetricBasis::get(p.z);
  std::string text;
  if (format == Format::kJson) {
    Json eigenvalues = Json::array();
    for (double l : r.eigenvalues) eigenvalues.push_back(json_number(l));
    Json stationary = Json::array();
    for (std::size_t idx : dicke) {
      stationary.push_back(Json{{"q3", basis[idx].q3.to_string()},
                                {"coeff", json_number(r.stationary.coeffs()[static_cast<Eigen::Index>(idx)].real())}});
    }
    Json doc{{"z", p.z}, {"s", json_number(p.s)}, {"eigenvalues", std::move(eigenvalues)},
             {"stationary", std::move(stationary)}};
    if (opts.full) {
      Json all = Json::array();
      for (double l : full_spectrum(p)) all.push_back(json_number(l));
      doc["ctilde"] = json_number(p.ctilde);
      doc["full_eigenvalues"] = std::move(all);
    }
    text = doc.dump(2) + "\n";
  } else {
    text = "kind,q3,value\n";
    for (double l : r.eigenvalues) text += "eigenvalue,," + format_number(l) + "\n";
    for (std::size_t idx : dicke) {
      text += "stationary," + basis[idx].q3.to_string() + "," +
              format_number(r.stationary.coeffs()[static_cast<Eigen::Index>(idx)].real()) + "\n";
    }
    if (opts.full) {
      for (double l : full_spectrum(p)) text += "full_eigenvalue,," + format_number(l) + "\n";
    }
  }
  write_output(text, common.out_path, out);
  return kExitOk;
}

std::vector<Observable> parse_observables(const std::string& list) {
  std::vector<Observable> out;
  for (const std::string& name : split(list, ',')) {
    Observable o;
    try {
      o = parse_observable(name);
    } catch (const std::invalid_argument& e) {
      throw UsageError(std::string("--observables: ") + e.what());
    }
    if (std::find(out.begin(), out.end(), o) != out.end()) {
      throw UsageError("--observables lists '" + name + "' twice");
    }
    out.push_back(o);
  }
  if (out.empty()) throw UsageError("--observables must name at least one observable");
  return out;
}

double dense_inversion(const DenseDensityMatrix& rho) {
  return (collective_s3_diagonal(rho.z).cast<std::complex<double>>().asDiagonal() * rho.entries).trace().real();
}

int cmd_propagate(const CommonOptions& common, const PropagateOptions& opts, std::ostream& out) {
  // Validate everything before computing.
  if (opts.initial.empty()) throw UsageError("propagate needs --initial");
  const InitialSpec init = parse_initial(opts.initial);
  const Model model = parse_model(opts.model);
  const Format format = parse_format(common.format);
  const int z = resolve_z(init, common.z);
  validate_model_params(z, common.s, common.ctilde);
  if (!(opts.tau_max > 0.0) || !std::isfinite(opts.tau_max)) throw UsageError("--tau-max must be finite and > 0");
  if (opts.steps < 1) throw UsageError("--steps must be >= 1");
  const std::vector<Observable> which = parse_observables(opts.observables);
  const bool wants_entropy = std::find(which.begin(), which.end(), Observable::kEntropy) != which.end();
  if ((wants_entropy || model == Model::kDenseOracle) && z > oracle_limit()) {
    throw UsageError("Z=" + std::to_string(z) + " exceeds the dense limit " + std::to_string(oracle_limit()) +
                     " (set DICKE4_ORACLE_LIMIT to raise it)");
  }
  if (model == Model::kDickeTruncated && common.ctilde != 0.5) {
    throw UsageError("--model dicke-truncated has no dephasing term; --ctilde must be 0.5");
  }
  if (init.kind == InitialSpec::Kind::kDicke) require_dicke_label(z, init.q3);
  if (model == Model::kDickeTruncated && init.kind == InitialSpec::Kind::kConfig) {
    throw UsageError("--initial config is not representable in the truncated Dicke model");
  }

  const ModelParams p{z, common.s, common.ctilde};
  const std::vector<double> taus = uniform_tau_grid(opts.tau_max, opts.steps);
  ObservableSeries series;
  switch (model) {
    case Model::kSymmetric:
      series = symmetric_series(symmetric_initial(init, z), p, taus, which);
      break;
    case Model::kDickeTruncated: {
      series.taus = taus;
      const auto states = truncated_dicke_trajectory(z, p.s, dicke_sector_initial(init, z), taus);
      for (const auto& m : states) {
        for (Observable o : which) {
          auto& column = series.values[observable_name(o)];
          if (o == Observable::kTrace) column.push_back(m.trace().real());
          if (o == Observable::kInversion) column.push_back(dicke_sector_inversion(z, m));
          if (o == Observable::kEntropy) {
            // Dicke states are orthonormal, so the sector matrix has the spectrum of rho.
            column.push_back(von_neumann_entropy(m));
          }
        }
      }
      break;
    }
    case Model::kDenseOracle: {
      series.taus = taus;
      const auto states = dense_trajectory(p, embed_dense(symmetric_initial(init, z)), taus);
      for (const auto& rho : states) {
        for (Observable o : which) {
          auto& column = series.values[observable_name(o)];
          if (o == Observable::kTrace) column.push_back(rho.entries.trace().real());
          if (o == Observable::kInversion) column.push_back(dense_inversion(rho));
          if (o == Observable::kEntropy) column.push_back(von_neumann_entropy(rho));
        }
      }
      break;
    }
  }
  series.validate();

  std::vector<std::string> names;
  for (Observable o : which) names.push_back(observable_name(o));
  std::string text;
  if (format == Format::kCsv) {
    text = series_csv(series, names);
  } else {
    Json header{{"model", opts.model}, {"z", z},          {"s", json_number(p.s)},
                {"ctilde", json_number(p.ctilde)}, {"initial", opts.initial}};
    text = series_json(series, names, std::move(header));
  }
  write_output(text, common.out_path, out);
  return kExitOk;
}

int cmd_verify(const VerifyCliOptions& opts, const CommonOptions& common, std::ostream& out) {
  if (opts.z_max < 1) throw UsageError("--z-max must be >= 1");
  if (opts.z_max > oracle_limit()) {
    throw UsageError("--z-max exceeds the dense limit " + std::to_string(oracle_limit()));
  }
  VerifyOptions v;
  v.z_max = opts.z_max;
  v.inject_fault = opts.inject_fault;
  const std::vector<CheckResult> results = run_verification(v);
  std::ostringstream text;
  std::size_t width = 5;
  for (const auto& r : results) width = std::max(width, r.name.size());
  int failures = 0;
  for (const auto& r : results) {
    if (!r.passed) ++failures;
    text << (r.passed ? "PASS  " : "FAIL  ") << std::left << std::setw(static_cast<int>(width)) << r.name;
    if (r.tolerance > 0.0) {
      char buf[64];
      std::snprintf(buf, sizeof buf, "  err=%.3e tol=%.0e", r.max_error, r.tolerance);
      text << buf;
    } else {
      text << "  exact";
    }
    text << "  " << r.detail << "\n";
  }
  text << results.size() - static_cast<std::size_t>(failures) << "/" << results.size() << " checks passed\n";
  write_output(text.str(), common.out_path, out);
  return failures == 0 ? kExitOk : kExitFailure;
}

}  // namespace

std::string format_number(double x) {
  const double r = rounded(x);
  if (std::isnan(r)) return "nan";
  if (std::isinf(r)) return r > 0 ? "inf" : "-inf";
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, r);
  if (ec != std::errc()) throw std::runtime_error("number formatting failed");
  return std::string(buf, ptr);
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Lindblad dynamics of Z two-level atoms in the fully symmetric sector", "dicke4"};
  app.require_subcommand(1);

  CommonOptions common;
  PropagateOptions prop;
  VerifyCliOptions ver;
  SpectrumCliOptions spec_opts;

  const auto add_output = [&](CLI::App* sub) {
    sub->add_option("--format", common.format, "csv or json")->capture_default_str();
    sub->add_option("--out", common.out_path, "write to PATH instead of stdout");
  };
  const auto add_model = [&](CLI::App* sub) {
    sub->add_option("--s", common.s, "pumping parameter in [0, 1]")->capture_default_str();
    sub->add_option("--ctilde", common.ctilde, "C/B; 0.5 disables dephasing")->capture_default_str();
  };

  CLI::App* basis = app.add_subcommand("basis", "list the symmetric basis for Z atoms");
  basis->add_option("--z", common.z, "number of atoms");
  add_output(basis);

  CLI::App* spectrum_cmd = app.add_subcommand("spectrum", "eigenvalues and stationary state of the q = Z/2 block");
  spectrum_cmd->add_option("--z", common.z, "number of atoms");
  add_model(spectrum_cmd);
  spectrum_cmd->add_flag("--full", spec_opts.full, "also list every eigenvalue of the symmetric-sector generator");
  spectrum_cmd->add_option("--format", spec_opts.format, "json or csv")->capture_default_str();
  spectrum_cmd->add_option("--out", common.out_path, "write to PATH instead of stdout");

  CLI::App* propagate_cmd = app.add_subcommand("propagate", "observables on a uniform tau grid");
  propagate_cmd->add_option("--z", common.z, "number of atoms (implied by bell, ghz and config)");
  add_model(propagate_cmd);
  propagate_cmd->add_option("--initial", prop.initial, "bell | ghz | dicke:<q3> | config:<a>,<b>,<g>,<d>");
  propagate_cmd->add_option("--tau-max", prop.tau_max, "end of the tau grid")->capture_default_str();
  propagate_cmd->add_option("--steps", prop.steps, "number of grid intervals")->capture_default_str();
  propagate_cmd->add_option("--observables", prop.observables, "comma list of trace, inversion, entropy")
      ->capture_default_str();
  propagate_cmd->add_option("--model", prop.model, "symmetric | dicke-truncated | dense-oracle")
      ->capture_default_str();
  add_output(propagate_cmd);

  CLI::App* verify_cmd = app.add_subcommand("verify", "run the self-check suite against the dense oracle");
  verify_cmd->add_option("--z-max", ver.z_max, "largest Z checked")->capture_default_str();
  verify_cmd->add_flag("--inject-fault", ver.inject_fault)->group("");
  verify_cmd->add_option("--out", common.out_path, "write the report to PATH");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (basis->parsed()) return cmd_basis(common, out);
    if (spectrum_cmd->parsed()) return cmd_spectrum(common, spec_opts, out);
    if (propagate_cmd->parsed()) return cmd_propagate(common, prop, out);
    if (verify_cmd->parsed()) return cmd_verify(ver, common, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const OracleLimitError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "failure: " << e.what() << "\n";
    return kExitFailure;
  }
  return kExitUsage;
}

}  // namespace dicke4::cli
