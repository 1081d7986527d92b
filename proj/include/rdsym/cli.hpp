#pragma once

// Command runner behind the rdsym_cli executable. Kept in the library so the
// reports and exit codes can be tested in-process.
//
// Exit codes: 0 success / verdict pass, 1 verification failure,
// 2 configuration error, 3 singular result under --strict.

#include <algorithm>
#include <cstdint>
#include <iomanip>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "rdsym/closed_form.hpp"
#include "rdsym/coefficients.hpp"
#include "rdsym/errors.hpp"
#include "rdsym/random.hpp"
#include "rdsym/rational.hpp"
#include "rdsym/recurrence.hpp"
#include "rdsym/reduced.hpp"
#include "rdsym/symmetry.hpp"

namespace rdsym::cli {

using Json = nlohmann::ordered_json;

enum ExitCode : int { kOk = 0, kVerifyFailed = 1, kConfigError = 2, kSingularStrict = 3 };

struct RunConfig {
  std::string command = "solve";
  std::string family = "sixth";
  std::string A = "const:1";
  std::string B = "const:1";
  std::string lambda = "1";
  std::string mu = "1";
  std::string init;
  std::string index_mode = "u";
  std::optional<long> from;
  std::optional<long> to;
  std::optional<std::uint64_t> seed;
  std::optional<std::size_t> cases;
  std::string format = "json";
  std::optional<std::string> tolerance;
  bool strict = false;
};

struct RunResult {
  int exit_code = kOk;
  std::string report;
};

/// Overlays the keys present in a JSON config object onto `cfg`. Keys mirror
/// the command-line flags without leading dashes (index-mode may also be
/// written index_mode); "init" accepts a string or an array.
inline void apply_json(RunConfig& cfg, const nlohmann::json& j) {
  if (!j.is_object()) throw ConfigError("config file must hold one JSON object");
  auto str = [](const nlohmann::json& v) -> std::string {
    if (v.is_string()) return v.get<std::string>();
    if (v.is_number_integer()) return std::to_string(v.get<long long>());
    throw ConfigError("expected a string or integer in config file");
  };
  for (const auto& [key, v] : j.items()) {
    if (key == "command") cfg.command = str(v);
    else if (key == "family") cfg.family = str(v);
    else if (key == "A") cfg.A = str(v);
    else if (key == "B") cfg.B = str(v);
    else if (key == "lambda") cfg.lambda = str(v);
    else if (key == "mu") cfg.mu = str(v);
    else if (key == "init") {
      if (v.is_array()) {
        std::string s;
        for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + str(v[i]);
        cfg.init = s;
      } else {
        cfg.init = str(v);
      }
    } else if (key == "index-mode" || key == "index_mode") cfg.index_mode = str(v);
    else if (key == "from") cfg.from = v.get<long>();
    else if (key == "to") cfg.to = v.get<long>();
    else if (key == "seed") cfg.seed = v.get<std::uint64_t>();
    else if (key == "cases") cfg.cases = v.get<std::size_t>();
    else if (key == "format") cfg.format = str(v);
    else if (key == "tolerance") cfg.tolerance = str(v);
    else if (key == "strict") cfg.strict = v.get<bool>();
    else throw ConfigError("unknown config key '" + key + "'");
  }
}

namespace detail {

struct Resolved {
  Family family;
  std::optional<EquationSpec> spec;  // absent for seeded/random commands without init
  CoefficientSequence A = CoefficientSequence::constant(Rational{1});
  CoefficientSequence B = CoefficientSequence::constant(Rational{1});
  Rational lambda{1};
  Rational mu{1};
  bool x_mode = false;
  long offset = 0;  // u = n + offset
  long from = 0;
  long to = 0;
  std::optional<long double> tolerance;
};

inline Resolved resolve(const RunConfig& cfg) {
  Resolved r;
  if (cfg.family == "sixth") r.family = Family::sixth;
  else if (cfg.family == "fifth") r.family = Family::fifth;
  else throw ConfigError("family must be 'sixth' or 'fifth'");

  static const std::vector<std::string> kCommands{"iterate", "solve", "verify", "forbidden", "symmetry"};
  if (std::find(kCommands.begin(), kCommands.end(), cfg.command) == kCommands.end())
    throw ConfigError("unknown command '" + cfg.command + "'");
  if (cfg.format != "json" && cfg.format != "csv") throw ConfigError("format must be json or csv");
  if (cfg.index_mode != "u" && cfg.index_mode != "x") throw ConfigError("index-mode must be u or x");

  r.x_mode = cfg.index_mode == "x";
  r.offset = r.x_mode ? x_offset(r.family) : 0;
  r.from = cfg.from.value_or(r.x_mode ? 1 : 0);
  r.to = cfg.to.value_or(r.x_mode ? 20 : 24);
  if (r.from + r.offset < 0) throw ConfigError("--from below the first index");
  if (r.to < r.from) throw ConfigError("--to must be >= --from");

  if (r.family == Family::sixth) {
    r.A = CoefficientSequence::parse(cfg.A);
    r.B = CoefficientSequence::parse(cfg.B);
  } else {
    r.lambda = Rational::parse(cfg.lambda);
    r.mu = Rational::parse(cfg.mu);
  }
  if (cfg.tolerance) {
    try {
      std::size_t used = 0;
      const long double t = std::stold(*cfg.tolerance, &used);
      if (used != cfg.tolerance->size() || !(t > 0)) throw ConfigError("");
      r.tolerance = t;
    } catch (const std::exception&) {
      throw ConfigError("tolerance must be a positive decimal");
    }
  }

  const bool needs_init =
      cfg.command == "iterate" || cfg.command == "solve" || cfg.command == "forbidden" ||
      (cfg.command == "verify" && !cfg.seed);
  if (needs_init || !cfg.init.empty()) {
    auto init = CoefficientSequence::parse_list(cfg.init);
    if (r.family == Family::sixth)
      r.spec = EquationSpec::sixth(r.A, r.B, std::move(init));
    else
      r.spec = EquationSpec::fifth(r.lambda, r.mu, std::move(init));
  }
  return r;
}

inline Json params_json(const RunConfig& cfg, const Resolved& r) {
  Json p;
  if (r.family == Family::sixth) {
    p["A"] = r.A.str();
    p["B"] = r.B.str();
  } else {
    p["lambda"] = r.lambda.str();
    p["mu"] = r.mu.str();
  }
  if (r.spec) {
    Json init = Json::array();
    for (const auto& v : r.spec->initial()) init.push_back(v.str());
    p["init"] = init;
  }
  p["index_mode"] = cfg.index_mode;
  p["from"] = r.from;
  p["to"] = r.to;
  if (cfg.seed) p["seed"] = *cfg.seed;
  if (cfg.cases) p["cases"] = *cfg.cases;
  if (cfg.tolerance) p["tolerance"] = *cfg.tolerance;
  return p;
}

/// Closed-form evaluator with the branch the coefficients select.
class Solver {
 public:
  Solver(const EquationSpec& spec, std::size_t max_index) {
    if (spec.family() == Family::fifth) {
      fifth_.emplace(spec.fifth_params().lambda, spec.fifth_params().mu, FifthInit(spec.initial()), max_index);
      branch_ = fifth_->branch();
      return;
    }
    init_.emplace(spec.initial());
    const auto& A = spec.sixth_params().A;
    const auto& B = spec.sixth_params().B;
    if (A.is_constant() && B.is_constant()) {
      mode_ = Mode::constant;
      branch_ = solve_sixth_constant_branch(A[0], B[0], *init_, 0).second;
    } else if (A.period() != 0 && A.period() <= 2 && B.period() != 0 && B.period() <= 2) {
      mode_ = Mode::two_periodic;
      branch_ = SolveBranch::two_periodic;
    } else {
      general_.emplace(A, B, *init_, max_index);
      branch_ = SolveBranch::general;
    }
    A_.emplace(A);
    B_.emplace(B);
  }

  [[nodiscard]] SolveBranch branch() const { return branch_; }

  /// Throws SingularError past the first singularity.
  [[nodiscard]] Rational value(std::size_t n) const {
    if (fifth_) return fifth_->value(n);
    switch (mode_) {
      case Mode::constant: return solve_sixth_constant((*A_)[0], (*B_)[0], *init_, n);
      case Mode::two_periodic:
        return solve_sixth_two_periodic((*A_)[0], (*A_)[1], (*B_)[0], (*B_)[1], *init_, n);
      default: return general_->value(n);
    }
  }

 private:
  enum class Mode { general, two_periodic, constant };
  Mode mode_ = Mode::general;
  SolveBranch branch_ = SolveBranch::general;
  std::optional<SixthInit> init_;
  std::optional<CoefficientSequence> A_, B_;
  std::optional<SixthOrderSolution> general_;
  std::optional<FifthOrderSolution> fifth_;
};

inline std::string decimal(long double v) {
  std::ostringstream os;
  os << std::setprecision(17) << std::scientific << v;
  return os.str();
}

/// Compares the closed form with forward iteration over u-indices
/// [u_from, u_to]. Both sides must agree on every value and on the first
/// singular index.
struct Comparison {
  bool match = true;
  std::optional<std::size_t> singular_at;
  Json entries = Json::array();
};

inline Comparison compare(const Resolved& r, const EquationSpec& spec, std::size_t u_from,
                          std::size_t u_to, bool with_entries) {
  Comparison c;
  const Trajectory traj = iterate(spec, u_to + 1);
  const Solver solver(spec, u_to);
  for (std::size_t u = u_from; u <= u_to; ++u) {
    std::optional<Rational> closed;
    std::optional<std::size_t> closed_sing;
    try {
      closed = solver.value(u);
    } catch (const SingularError& e) {
      closed_sing = e.where().index;
    }
    const bool oracle_defined = u < traj.size();
    bool ok;
    if (oracle_defined)
      ok = closed && *closed == traj.values[u];
    else
      ok = !closed && closed_sing == traj.singular_at;
    c.match = c.match && ok;
    if (with_entries) {
      Json e;
      e["n"] = static_cast<long>(u) - r.offset;
      if (oracle_defined) e["iterate"] = traj.values[u].str();
      else e["iterate_singular_at"] = static_cast<long>(*traj.singular_at) - r.offset;
      if (closed) e["solve"] = closed->str();
      else e["solve_singular_at"] = static_cast<long>(*closed_sing) - r.offset;
      e["match"] = ok;
      c.entries.push_back(e);
    }
    if (!oracle_defined) {
      c.singular_at = traj.singular_at;
      break;
    }
  }
  return c;
}

inline EquationSpec random_spec(Family family, Sampler& rng, std::size_t max_index) {
  if (family == Family::sixth) {
    const std::size_t len = max_index >= 6 ? max_index - 5 : 1;
    auto A = rng.sequence(len);
    auto B = rng.sequence(len);
    return EquationSpec::sixth(std::move(A), std::move(B), rng.rationals(6));
  }
  auto lambda = rng.rational();
  auto mu = rng.rational();
  return EquationSpec::fifth(std::move(lambda), std::move(mu), rng.rationals(5));
}

inline Json spec_json(const EquationSpec& spec) {
  Json j;
  if (spec.family() == Family::sixth) {
    j["A"] = spec.sixth_params().A.str();
    j["B"] = spec.sixth_params().B.str();
  } else {
    j["lambda"] = spec.fifth_params().lambda.str();
    j["mu"] = spec.fifth_params().mu.str();
  }
  Json init = Json::array();
  for (const auto& v : spec.initial()) init.push_back(v.str());
  j["init"] = init;
  return j;
}

inline std::string render_csv(const Json& report) {
  const Json& rows = report.at("results");
  std::vector<std::string> columns;
  for (const auto& row : rows)
    for (const auto& [key, _] : row.items())
      if (std::find(columns.begin(), columns.end(), key) == columns.end()) columns.push_back(key);
  auto cell = [](const Json& v) -> std::string {
    if (v.is_string()) return v.get<std::string>();
    if (v.is_boolean()) return v.get<bool>() ? "true" : "false";
    if (v.is_number()) return v.dump();
    return "\"" + v.dump() + "\"";
  };
  std::string out;
  for (std::size_t i = 0; i < columns.size(); ++i) out += (i ? "," : "") + columns[i];
  out += '\n';
  for (const auto& row : rows) {
    for (std::size_t i = 0; i < columns.size(); ++i) {
      if (i) out += ',';
      if (row.contains(columns[i])) out += cell(row[columns[i]]);
    }
    out += '\n';
  }
  return out;
}

}  // namespace detail

inline RunResult run(const RunConfig& cfg) {
  using namespace detail;
  Resolved r;
  try {
    r = resolve(cfg);
  } catch (const std::invalid_argument& e) {
    Json err;
    err["error"] = e.what();
    return {kConfigError, err.dump() + "\n"};
  }

  Json report;
  report["command"] = cfg.command;
  report["family"] = to_string(r.family);
  report["params"] = params_json(cfg, r);
  Json results = Json::array();
  int exit_code = kOk;
  const auto u_from = static_cast<std::size_t>(r.from + r.offset);
  const auto u_to = static_cast<std::size_t>(r.to + r.offset);
  auto out_index = [&](std::size_t u) { return static_cast<long>(u) - r.offset; };

  try {
    if (cfg.command == "iterate") {
      const Trajectory traj = iterate(*r.spec, u_to + 1);
      for (std::size_t u = u_from; u <= u_to; ++u) {
        Json e;
        e["n"] = out_index(u);
        if (u < traj.size()) {
          e["value"] = traj.values[u].str();
          results.push_back(e);
        } else {
          e["singular_at"] = out_index(*traj.singular_at);
          results.push_back(e);
          if (cfg.strict) exit_code = kSingularStrict;
          break;
        }
      }
    } else if (cfg.command == "solve") {
      const Solver solver(*r.spec, u_to);
      for (std::size_t u = u_from; u <= u_to; ++u) {
        Json e;
        e["n"] = out_index(u);
        try {
          e["value"] = solver.value(u).str();
          e["branch"] = to_string(solver.branch());
          results.push_back(e);
        } catch (const SingularError& s) {
          e["singular_at"] = out_index(s.where().index);
          e["branch"] = to_string(solver.branch());
          results.push_back(e);
          if (cfg.strict) exit_code = kSingularStrict;
          break;
        }
      }
    } else if (cfg.command == "forbidden") {
      ForbiddenVerdict v;
      if (r.family == Family::sixth)
        v = forbidden_sixth(r.A, r.B, SixthInit(r.spec->initial()), u_to);
      else
        v = forbidden_fifth(r.lambda, r.mu, FifthInit(r.spec->initial()), u_to);
      Json e;
      e["horizon"] = r.to;
      if (v.defined()) {
        e["verdict"] = "defined";
      } else {
        e["verdict"] = "singular";
        e["singular_at"] = out_index(v.witness->index);
        e["chain"] = v.witness->chain;
        e["step"] = v.witness->step;
      }
      results.push_back(e);
      report["verdict"] = v.defined() ? "defined" : "singular";
    } else if (cfg.command == "verify") {
      bool pass = true;
      if (cfg.seed) {
        Sampler rng(*cfg.seed);
        const std::size_t cases = cfg.cases.value_or(100);
        for (std::size_t c = 0; c < cases; ++c) {
          const EquationSpec spec = random_spec(r.family, rng, u_to);
          Resolved rc = r;
          if (r.family == Family::sixth) {
            rc.A = spec.sixth_params().A;
            rc.B = spec.sixth_params().B;
          } else {
            rc.lambda = spec.fifth_params().lambda;
            rc.mu = spec.fifth_params().mu;
          }
          const Comparison cmp = compare(rc, spec, u_from, u_to, false);
          Json e;
          e["case"] = c;
          e["spec"] = spec_json(spec);
          e["match"] = cmp.match;
          if (cmp.singular_at) e["singular_at"] = out_index(*cmp.singular_at);
          results.push_back(e);
          pass = pass && cmp.match;
        }
      } else {
        const Comparison cmp = compare(r, *r.spec, u_from, u_to, true);
        results = cmp.entries;
        pass = cmp.match;
        if (cmp.singular_at && cmp.match) report["singular_agreement"] = out_index(*cmp.singular_at);
        if (r.family == Family::fifth && r.tolerance) {
          const auto& init = r.spec->initial();
          const MoebiusState state(r.lambda, r.mu,
                                   {init[0] * init[1] * init[2], init[1] * init[2] * init[3],
                                    init[2] * init[3] * init[4]});
          Json spectral = Json::array();
          for (std::size_t n = 0; n <= std::min<std::size_t>(kSpectralMaxN, u_to); ++n) {
            Json e;
            e["n"] = n;
            try {
              const SpectralCheck chk = spectral_check(state, n, *r.tolerance);
              e["exact"] = chk.exact.str();
              e["spectral_re"] = decimal(chk.spectral.real());
              e["spectral_im"] = decimal(chk.spectral.imag());
              e["relative_error"] = decimal(chk.relative_error);
              e["pass"] = chk.pass;
              pass = pass && chk.pass;
              spectral.push_back(e);
            } catch (const SingularError&) {
              break;
            } catch (const NumericalError& err) {
              e["error"] = err.what();
              e["pass"] = false;
              pass = false;
              spectral.push_back(e);
              break;
            }
          }
          report["spectral"] = spectral;
        }
      }
      report["verdict"] = pass ? "pass" : "fail";
      if (!pass) exit_code = kVerifyFailed;
    } else {  // symmetry
      Sampler rng(cfg.seed.value_or(0));
      const std::size_t points = cfg.cases.value_or(100);
      bool pass = true;
      std::size_t total = 0;
      if (r.family == Family::sixth) {
        for (const auto& q : sixth_characteristics()) {
          std::size_t zeros = 0;
          std::size_t agree = 0;
          for (std::size_t i = 0; i < points; ++i) {
            SixthPoint p;
            do {
              p = SixthPoint{rng.uniform(-20, 20), rng.rational(), rng.rational(), rng.rational(),
                             rng.rational(), rng.rational()};
            } while (p.denominator().is_zero());
            const Cyclotomic simplified = lsc_residual_sixth(q, p);
            const Cyclotomic generic = lsc_residual_sixth_generic(q, p);
            zeros += simplified.is_zero() ? 1 : 0;
            agree += simplified == generic ? 1 : 0;
          }
          Json e;
          e["characteristic"] = q.name;
          e["points"] = points;
          e["zero_residuals"] = zeros;
          e["forms_agree"] = agree;
          results.push_back(e);
          total += points;
          pass = pass && zeros == points && agree == points;
        }
      } else {
        for (const auto& q : fifth_characteristics()) {
          std::size_t zeros = 0;
          for (std::size_t i = 0; i < points; ++i) {
            FifthPoint p;
            do {
              p = FifthPoint{rng.uniform(-20, 20),
                             {rng.rational(), rng.rational(), rng.rational(), rng.rational(),
                              rng.rational()},
                             rng.rational(),
                             rng.rational()};
            } while ((p.lambda + p.mu * p.product()).is_zero());
            zeros += lsc_residual_fifth(q, p).is_zero() ? 1 : 0;
          }
          Json e;
          e["characteristic"] = q.name;
          e["points"] = points;
          e["zero_residuals"] = zeros;
          results.push_back(e);
          total += points;
          pass = pass && zeros == points;
        }
      }
      report["residuals_total"] = total;
      report["verdict"] = pass ? "pass" : "fail";
      if (!pass) exit_code = kVerifyFailed;
    }
  } catch (const std::invalid_argument& e) {
    // Includes ConfigError from explicit coefficient lists that are too short.
    Json err;
    err["error"] = e.what();
    return {kConfigError, err.dump() + "\n"};
  }

  report["results"] = results;
  if (cfg.format == "csv") return {exit_code, render_csv(report)};
  return {exit_code, report.dump(2) + "\n"};
}

}  // namespace rdsym::cli
