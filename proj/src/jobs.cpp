#include "vlike/jobs.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <set>
#include <sstream>

#include "vlike/falsifier.hpp"
#include "vlike/heisenberg.hpp"
#include "vlike/lattice.hpp"
#include "vlike/z2_engine.hpp"

namespace vlike {

using nlohmann::json;

namespace {

const std::set<std::string> kCommands{"bracket",         "verma-dims", "heisenberg-period",  "z2-dims",
                                      "sl2-check",       "falsify-intermediate", "recurrence-detect"};

const json& field(const json& obj, const std::string& key, const std::string& where) {
  if (!obj.is_object() || !obj.contains(key)) throw ConfigError("missing field '" + key + "' in " + where);
  return obj.at(key);
}

std::int64_t get_int(const json& obj, const std::string& key, const std::string& where = "params") {
  const json& v = field(obj, key, where);
  if (!v.is_number_integer()) throw ConfigError("field '" + key + "' must be an integer");
  return v.get<std::int64_t>();
}

Scalar to_scalar(const json& v, const std::string& key) {
  if (!v.is_string()) throw ConfigError("field '" + key + "' must be a \"p/q\" string");
  try {
    return parse_pq(v.get<std::string>());
  } catch (const std::invalid_argument& e) {
    throw ConfigError("field '" + key + "': " + e.what());
  }
}

Scalar get_scalar(const json& obj, const std::string& key) { return to_scalar(field(obj, key, "params"), key); }

LatticeVector get_vector(const json& obj, const std::string& key) {
  const json& v = field(obj, key, "params");
  if (!v.is_array() || v.size() != 2 || !v[0].is_number_integer() || !v[1].is_number_integer()) {
    throw ConfigError("field '" + key + "' must be a pair of integers");
  }
  return {v[0].get<std::int64_t>(), v[1].get<std::int64_t>()};
}

std::pair<std::int64_t, std::int64_t> get_range(const json& obj, const std::string& key) {
  const LatticeVector r = get_vector(obj, key);
  if (r.x1 > r.x2) throw ConfigError("range '" + key + "' is empty");
  return {r.x1, r.x2};
}

TruncationParams get_truncation(const json& params, bool withlevel) {
  TruncationParams t;
  t.band = get_int(params, "band");
  t.raisingband = get_int(params, "raisingband");
  if (withlevel) t.maxlevel = get_int(params, "maxlevel");
  return t;
}

ExpPolyFunctional require_functional(const JobConfig& config) {
  if (!config.functional) throw ConfigError("command '" + config.command + "' needs a functional");
  return parse_functional(*config.functional);
}

void require_format(const JobConfig& config, bool csvok) {
  if (config.format == OutputFormat::Csv && !csvok) {
    throw ConfigError("command '" + config.command + "' only emits json");
  }
}

std::string dump(const json& doc) { return doc.dump(2) + "\n"; }

json vector_json(const std::vector<Scalar>& v) {
  json out = json::array();
  for (const auto& x : v) out.push_back(to_pq(x));
  return out;
}

std::string bound_token(const std::optional<std::int64_t>& b) { return b ? std::to_string(*b) : "inf"; }

std::string run_bracket(const JobConfig& config) {
  require_format(config, false);
  const LatticeVector m = get_vector(config.params, "m");
  const LatticeVector n = get_vector(config.params, "n");
  const AlgebraElement result = bracket(AlgebraElement::D(m), AlgebraElement::D(n));
  return dump({{"command", config.command}, {"m", {m.x1, m.x2}}, {"n", {n.x1, n.x2}}, {"result", result.to_string()}});
}

std::string run_verma(const JobConfig& config) {
  const ExpPolyFunctional psi = require_functional(config);
  const TruncationParams t = get_truncation(config.params, true);
  t.validate();
  HighestWeightEngine engine{Weight(psi)};
  std::vector<DimensionReport> reports;
  for (std::int64_t n = 0; n <= t.maxlevel; ++n) reports.push_back(engine.quotient_level_dim(n, t));
  return emit_dimension_table(std::move(reports), config.format);
}

std::string run_heisenberg(const JobConfig& config) {
  require_format(config, false);
  const ExpPolyFunctional psi = require_functional(config);
  const std::int64_t i = get_int(config.params, "i");
  const std::int64_t bound = get_int(config.params, "bound");
  const LoopModuleReport r = is_irreducible_loop(f_sequence(psi), i, bound);
  return dump({{"command", config.command},
               {"i", i},
               {"bound", r.bound},
               {"period", r.period},
               {"irreducible", r.irreducible},
               {"stabilized", r.stabilized}});
}

std::string run_z2(const JobConfig& config) {
  const ExpPolyFunctional psi = require_functional(config);
  TruncationParams t = get_truncation(config.params, false);
  const std::int64_t i = get_int(config.params, "i");
  const std::int64_t s = get_int(config.params, "s");
  const auto [mlo, mhi] = get_range(config.params, "mrange");
  const auto [klo, khi] = get_range(config.params, "krange");
  t.maxlevel = std::max<std::int64_t>(1, -mlo);
  t.validate();
  std::ostringstream csv;
  json rows = json::array();
  csv << "m,k,dim\n";
  for (std::int64_t m = mlo; m <= mhi; ++m) {
    for (std::int64_t k = klo; k <= khi; ++k) {
      const std::int64_t d = quotient_dim_z2(Weight(psi), m, k, i, s, t);
      csv << m << ',' << k << ',' << d << '\n';
      rows.push_back({{"m", m}, {"k", k}, {"dim", d}});
    }
  }
  if (config.format == OutputFormat::Csv) return csv.str();
  return dump({{"command", config.command}, {"i", i}, {"s", s}, {"band", t.band},
               {"raisingband", t.raisingband}, {"rows", rows}});
}

std::string run_sl2(const JobConfig& config) {
  require_format(config, false);
  const std::int64_t d = get_int(config.params, "d");
  const Scalar a1 = get_scalar(config.params, "alpha1");
  const Scalar a2 = get_scalar(config.params, "alpha2");
  const std::int64_t window = get_int(config.params, "window");
  LoopSl2Module mod;
  try {
    mod = make_loop_module(d, a1, a2);
  } catch (const SignResolutionError& e) {
    throw PreconditionError("sign_resolved", e.what());
  }
  const LoopVerdict v = loop_irreducibility_window(mod, window);
  json doc{{"command", config.command},
           {"d", d},
           {"alpha1", to_pq(a1)},
           {"alpha2", to_pq(a2)},
           {"sign", mod.sign},
           {"verdict", v.irreducible ? "IRREDUCIBLE" : "REDUCIBLE"},
           {"window", v.window},
           {"witness", json::array()}};
  if (v.witness) {
    doc["witness"] = vector_json(v.witness->vector);
    doc["witness_degree"] = {v.witness->degree.x1, v.witness->degree.x2};
    doc["witness_reason"] = v.witness->reason;
  }
  return dump(doc);
}

std::string run_falsify(const JobConfig& config) {
  require_format(config, false);
  const Scalar a = get_scalar(config.params, "a");
  const std::int64_t k = get_int(config.params, "k");
  const std::int64_t lmax = get_int(config.params, "lmax");
  const Certificate c = falsify(a, k, lmax);
  json doc{{"a", to_pq(c.a)}, {"k", c.k}, {"C", to_pq(c.C)}, {"lmax", lmax}};
  doc["failure_l"] = c.failure_l ? json(*c.failure_l) : json(nullptr);
  doc["residue"] = to_pq(c.residue);
  return dump(doc);
}

std::string run_recurrence(const JobConfig& config) {
  require_format(config, false);
  const ExpPolyFunctional psi = require_functional(config);
  const std::int64_t maxorder = get_int(config.params, "maxorder");
  const auto [lo, hi] = get_range(config.params, "range");
  if (maxorder < 1) throw ConfigError("maxorder must be >= 1");
  const RecurrenceDetection r = detect_recurrence(f_sequence(psi), static_cast<std::size_t>(maxorder), lo, hi);
  json doc{{"command", config.command},
           {"maxorder", maxorder},
           {"range", {lo, hi}},
           {"identically_zero", r.identically_zero}};
  doc["recurrence"] = r.recurrence ? vector_json(r.recurrence->coeffs()) : json(nullptr);
  return dump(doc);
}

}  // namespace

JobConfig parse_job(const json& doc) {
  if (!doc.is_object()) throw ConfigError("job must be a JSON object");
  JobConfig config;
  const json& cmd = field(doc, "command", "job");
  if (!cmd.is_string() || !kCommands.count(cmd.get<std::string>())) throw ConfigError("unknown command");
  config.command = cmd.get<std::string>();
  if (doc.contains("functional")) config.functional = doc.at("functional");
  config.params = field(doc, "params", "job");
  if (!config.params.is_object()) throw ConfigError("params must be an object");
  const json& out = field(doc, "output", "job");
  const json& fmt = field(out, "format", "output");
  if (fmt == "csv") {
    config.format = OutputFormat::Csv;
  } else if (fmt == "json") {
    config.format = OutputFormat::Json;
  } else {
    throw ConfigError("output.format must be csv or json");
  }
  if (out.contains("path")) {
    if (!out.at("path").is_string()) throw ConfigError("output.path must be a string");
    config.outpath = out.at("path").get<std::string>();
  }
  return config;
}

ExpPolyFunctional parse_functional(const json& doc) {
  const std::int64_t det = get_int(doc, "det", "functional");
  if (det != 1 && det != -1) throw ConfigError("functional.det must be 1 or -1");
  const json& terms = field(doc, "terms", "functional");
  if (!terms.is_array()) throw ConfigError("functional.terms must be an array");
  std::vector<ExpPolyTerm> parsed;
  for (const auto& t : terms) {
    ExpPolyTerm term{to_scalar(field(t, "alpha", "term"), "alpha"), {}};
    const json& coeffs = field(t, "coeffs", "term");
    if (!coeffs.is_array()) throw ConfigError("term.coeffs must be an array");
    for (const auto& c : coeffs) term.coeffs.push_back(to_scalar(c, "coeffs"));
    parsed.push_back(std::move(term));
  }
  return ExpPolyFunctional(std::move(parsed), static_cast<int>(det));
}

json functional_to_json(const ExpPolyFunctional& psi) {
  json terms = json::array();
  for (const auto& t : psi.terms()) terms.push_back({{"alpha", to_pq(t.alpha)}, {"coeffs", vector_json(t.coeffs)}});
  return {{"det", psi.basisdet()}, {"terms", terms}};
}

std::string emit_dimension_table(std::vector<DimensionReport> reports, OutputFormat format) {
  if (reports.empty()) throw PreconditionError("reports_nonempty", "nothing to emit");
  std::stable_sort(reports.begin(), reports.end(),
                   [](const DimensionReport& a, const DimensionReport& b) { return a.level < b.level; });
  if (format == OutputFormat::Csv) {
    std::ostringstream out;
    out << "level,dim,band,stabilized,lowerbound,upperbound\n";
    for (const auto& r : reports) {
      out << r.level << ',' << r.dim << ',' << r.band << ',' << (r.stabilized ? "true" : "false") << ','
          << r.lowerbound << ',' << bound_token(r.upperbound) << '\n';
    }
    return out.str();
  }
  json rows = json::array();
  for (const auto& r : reports) {
    rows.push_back({{"level", r.level},
                    {"dim", r.dim},
                    {"band", r.band},
                    {"raisingband", r.raisingband},
                    {"stabilized", r.stabilized},
                    {"lowerbound", r.lowerbound},
                    {"upperbound", bound_token(r.upperbound)}});
  }
  return dump(rows);
}

std::string render_job(const JobConfig& config) {
  if (config.command == "bracket") return run_bracket(config);
  if (config.command == "verma-dims") return run_verma(config);
  if (config.command == "heisenberg-period") return run_heisenberg(config);
  if (config.command == "z2-dims") return run_z2(config);
  if (config.command == "sl2-check") return run_sl2(config);
  if (config.command == "falsify-intermediate") return run_falsify(config);
  if (config.command == "recurrence-detect") return run_recurrence(config);
  throw ConfigError("unknown command");
}

std::string error_json(const std::string& kind, const std::string& name, const std::string& message) {
  return dump({{"error", kind}, {"precondition", name}, {"message", message}});
}

JobOutcome run_job(const json& doc) {
  try {
    return {kExitOk, render_job(parse_job(doc))};
  } catch (const ConfigError& e) {
    return {kExitConfig, error_json("config", "", e.what())};
  } catch (const PreconditionError& e) {
    return {kExitPrecondition, error_json("precondition", e.precondition(), e.what())};
  }
}

int run_job_file(const std::string& configpath, const std::optional<std::string>& outpath) {
  std::ifstream in(configpath);
  if (!in) {
    std::cerr << error_json("config", "", "cannot read " + configpath);
    return kExitConfig;
  }
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::parse_error& e) {
    std::cerr << error_json("config", "", e.what());
    return kExitConfig;
  }
  const JobOutcome outcome = run_job(doc);
  if (outcome.exitcode != kExitOk) {
    std::cerr << outcome.bytes;
    return outcome.exitcode;
  }
  std::string path = outpath.value_or("");
  if (path.empty() && doc.at("output").contains("path")) path = doc.at("output").at("path").get<std::string>();
  if (path.empty() || path == "-") {
    std::cout << outcome.bytes;
    return kExitOk;
  }
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) {
    std::cerr << error_json("config", "", "cannot write " + path);
    return kExitConfig;
  }
  out << outcome.bytes;
  return kExitOk;
}

}  // namespace vlike
