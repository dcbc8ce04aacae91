#include "telescope/estimation.hpp"
#include "telescope/hypothesis_test.hpp"
#include "telescope/telescoping_law.hpp"
#include "telescope/verification.hpp"

#include <charconv>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <numbers>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <fmt/format.h>
#include <json.hpp>

namespace {

using telescope::laws::Family;
using telescope::laws::TelescopingLaw;
using json = nlohmann::ordered_json;

constexpr const char* kOutDirVariable = "TELESCOPE_OUT_DIR";

enum ExitCode : int { kOk = 0, kCheckFailed = 1, kUsage = 2, kData = 3 };

// Bad input files and degenerate samples; everything else from the library
// that rejects an argument is a usage error.
struct DataError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string format = "csv";
  std::string out;
  std::uint64_t seed = telescope::kDefaultSeed;

  std::string law;
  double theta = 0.0;
  bool theta_given = false;

  std::string check = "all";
  std::optional<int> n;
  std::optional<int> cap;
  std::optional<std::size_t> reps;
  std::optional<std::size_t> size;
  std::vector<int> grid{100, 1000, 10000};

  double tail = 1e-9;
  std::size_t max_rows = 100000;

  std::string input;
  std::string method;
  double tol = 1e-10;

  double theta0 = 0.0;
  double theta1 = 0.0;
  double alpha = 0.05;
  std::string calibration = "monte-carlo";
  std::size_t replicates = telescope::inference::kDefaultCalibrationReplicates;
};

// One output file: a flat table plus top-level summary fields.
struct Document {
  std::string command;
  json config = json::object();
  json summary = json::object();
  std::vector<std::string> columns;
  std::vector<json> rows;
  // Single-column tables such as samples serialize as a plain JSON array.
  std::string flat_key;
};

std::string csv_cell(const json& value) {
  switch (value.type()) {
    case json::value_t::null:
      return "";
    case json::value_t::boolean:
      return value.get<bool>() ? "true" : "false";
    case json::value_t::number_float:
      return fmt::format("{}", value.get<double>());
    case json::value_t::number_integer:
      return fmt::format("{}", value.get<std::int64_t>());
    case json::value_t::number_unsigned:
      return fmt::format("{}", value.get<std::uint64_t>());
    case json::value_t::string: {
      const auto& s = value.get_ref<const std::string&>();
      if (s.find_first_of(",\"\n") == std::string::npos) return s;
      std::string quoted = "\"";
      for (const char c : s) {
        if (c == '"') quoted += '"';
        quoted += c;
      }
      return quoted + '"';
    }
    default:
      return value.dump();
  }
}

std::string render_csv(const Document& doc) {
  std::string text = fmt::format("# command={}\n", doc.command);
  for (const auto& [key, value] : doc.config.items()) {
    text += fmt::format("# {}={}\n", key, csv_cell(value));
  }
  for (const auto& [key, value] : doc.summary.items()) {
    text += fmt::format("# {}={}\n", key, csv_cell(value));
  }
  text += fmt::format("{}\n", fmt::join(doc.columns, ","));
  for (const auto& row : doc.rows) {
    std::vector<std::string> cells;
    for (const auto& cell : row) cells.push_back(csv_cell(cell));
    text += fmt::format("{}\n", fmt::join(cells, ","));
  }
  return text;
}

std::string render_json(const Document& doc) {
  json out;
  out["command"] = doc.command;
  out["config"] = doc.config;
  for (const auto& [key, value] : doc.summary.items()) out[key] = value;
  if (!doc.flat_key.empty()) {
    json values = json::array();
    for (const auto& row : doc.rows) values.push_back(row.at(0));
    out[doc.flat_key] = std::move(values);
  } else {
    json rows = json::array();
    for (const auto& row : doc.rows) {
      json object;
      for (std::size_t i = 0; i < doc.columns.size(); ++i) object[doc.columns[i]] = row.at(i);
      rows.push_back(std::move(object));
    }
    out["rows"] = std::move(rows);
  }
  return out.dump(2) + "\n";
}

void emit(const Document& doc, const Options& opts) {
  const std::string text = opts.format == "json" ? render_json(doc) : render_csv(doc);
  std::filesystem::path path = opts.out;
  if (path.empty()) {
    if (const char* dir = std::getenv(kOutDirVariable); dir != nullptr && *dir != '\0') {
      path = std::filesystem::path(dir) / fmt::format("{}.{}", doc.command, opts.format);
    }
  }
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  std::ofstream file(path, std::ios::binary);
  file << text;
  if (!file) throw DataError(fmt::format("cannot write {}", path.string()));
}

json base_config(const Options& opts) {
  json config;
  config["seed"] = opts.seed;
  config["format"] = opts.format;
  return config;
}

TelescopingLaw law_from(const std::string& name, double theta, bool theta_given) {
  const Family family = telescope::laws::parse_family(name);
  if (family != Family::Zeta2 && !theta_given) {
    throw std::invalid_argument(fmt::format("--theta is required for {}", name));
  }
  return telescope::laws::make_law(family, theta);
}

void add_law_config(json& config, const TelescopingLaw& law) {
  config["law"] = std::string(telescope::laws::family_name(law.family()));
  if (law.family() == Family::Zeta2) {
    config["theta"] = nullptr;
  } else {
    config["theta"] = law.theta();
  }
}

// ---------------------------------------------------------------- verify

std::vector<telescope::oracle::VerificationReport> run_checks(const Options& opts) {
  namespace oracle = telescope::oracle;
  using telescope::derive_seed;
  std::vector<oracle::VerificationReport> reports;
  const auto range = [&](int default_cap, auto check) {
    const int cap = opts.cap.value_or(default_cap);
    if (opts.n) {
      reports.push_back(check(*opts.n, cap));
    } else {
      for (int n = 1; n <= cap; ++n) reports.push_back(check(n, cap));
    }
  };
  const std::string& check = opts.check;
  if (check == "all") {
    reports = oracle::verify_all(opts.seed);
  } else if (check == "unicyclic") {
    range(oracle::kDefaultLawCap, [](int n, int cap) { return oracle::verify_unicyclic_law(n, cap); });
  } else if (check == "first-ascent") {
    range(oracle::kDefaultLawCap, [](int n, int cap) { return oracle::verify_first_ascent_law(n, cap); });
  } else if (check == "avoiding") {
    range(oracle::kDefaultAvoidingCap,
          [](int n, int cap) { return oracle::verify_avoiding_first_ascent(n, cap); });
  } else if (check == "catalan") {
    reports.push_back(oracle::verify_catalan_convolution(opts.n.value_or(12)));
  } else if (check == "table1") {
    reports.push_back(oracle::verify_table1(opts.n.value_or(4), opts.cap.value_or(oracle::kDefaultLawCap)));
  } else if (check == "rho-sum") {
    reports.push_back(oracle::verify_rho_sums(opts.n.value_or(20)));
  } else if (check == "sampler") {
    const std::size_t count = opts.size.value_or(1000000);
    if (!opts.law.empty()) {
      reports.push_back(oracle::verify_sampler_fit(law_from(opts.law, opts.theta, opts.theta_given), count,
                                                   derive_seed(opts.seed, 10)));
    } else {
      const std::vector<TelescopingLaw> defaults{telescope::laws::zeta2_law(), telescope::laws::tpoisson_law(1.0),
                                                 telescope::laws::tgeometric_law(2.0)};
      for (std::size_t i = 0; i < defaults.size(); ++i) {
        reports.push_back(oracle::verify_sampler_fit(defaults[i], count, derive_seed(opts.seed, 10 + i)));
      }
    }
  } else if (check == "ascent") {
    reports.push_back(oracle::ascent_mean_comparison(opts.reps.value_or(1000000), derive_seed(opts.seed, 13)));
  } else if (check == "growth") {
    reports.push_back(oracle::empirical_mean_growth(opts.grid, static_cast<int>(opts.reps.value_or(2000)),
                                                    derive_seed(opts.seed, 14)));
  } else {
    throw std::invalid_argument(fmt::format("unknown check '{}'", check));
  }
  return reports;
}

int cmd_verify(const Options& opts) {
  const auto reports = run_checks(opts);
  Document doc;
  doc.command = opts.check == "table1" ? "table1" : "verify";
  doc.config = base_config(opts);
  doc.config["check"] = opts.check;
  doc.config["n"] = opts.n ? json(*opts.n) : json(nullptr);
  doc.config["cap"] = opts.cap ? json(*opts.cap) : json(nullptr);
  doc.config["reps"] = opts.reps ? json(*opts.reps) : json(nullptr);
  doc.config["size"] = opts.size ? json(*opts.size) : json(nullptr);
  doc.columns = {"check", "parameters", "key", "expected", "observed", "pass", "tolerance", "runtime_seconds"};
  bool all_pass = true;
  std::size_t failed = 0;
  for (const auto& report : reports) {
    all_pass = all_pass && report.pass;
    failed += report.pass ? 0 : 1;
    const json tolerance = report.tolerance ? json(*report.tolerance) : json(nullptr);
    for (const auto& e : report.entries) {
      doc.rows.push_back(json::array(
          {report.check, report.parameters, e.key, e.expected, e.observed, report.pass, tolerance,
           report.runtime_seconds}));
    }
    if (!report.pass) {
      std::cerr << fmt::format("FAIL {} {}{}\n", report.check, report.parameters,
                               report.note.empty() ? "" : ": " + report.note);
    }
  }
  doc.summary["pass"] = all_pass;
  doc.summary["checks"] = reports.size();
  doc.summary["failed"] = failed;
  emit(doc, opts);
  return all_pass ? kOk : kCheckFailed;
}

// ---------------------------------------------------------------- pmf / sample

int cmd_pmf(const Options& opts) {
  const auto law = law_from(opts.law, opts.theta, opts.theta_given);
  if (!(opts.tail > 0.0 && opts.tail < 1.0)) throw std::invalid_argument("--tail must lie in (0, 1)");
  if (opts.max_rows == 0) throw std::invalid_argument("--max-rows must be positive");
  const std::int64_t last = law.quantile(1.0 - opts.tail);
  const std::int64_t limit = law.start() + static_cast<std::int64_t>(opts.max_rows) - 1;
  const bool truncated = last > limit;
  Document doc;
  doc.command = "pmf";
  doc.config = base_config(opts);
  add_law_config(doc.config, law);
  doc.config["tail"] = opts.tail;
  doc.config["max_rows"] = opts.max_rows;
  doc.columns = {"x", "pmf", "cdf"};
  double final_cdf = 0.0;
  for (std::int64_t x = law.start(); x <= std::min(last, limit); ++x) {
    final_cdf = law.cdf(x);
    doc.rows.push_back(json::array({x, law.pmf(x), final_cdf}));
  }
  doc.summary["rows"] = doc.rows.size();
  doc.summary["final_cdf"] = final_cdf;
  doc.summary["truncated"] = truncated;
  emit(doc, opts);
  return kOk;
}

int cmd_sample(const Options& opts) {
  const auto law = law_from(opts.law, opts.theta, opts.theta_given);
  const std::size_t size = opts.size.value_or(0);
  if (size == 0) throw std::invalid_argument("--size must be at least 1");
  const auto batch = telescope::laws::sample(law, opts.seed, size);
  Document doc;
  doc.command = "sample";
  doc.config = base_config(opts);
  add_law_config(doc.config, law);
  doc.config["size"] = size;
  doc.columns = {"value"};
  doc.flat_key = "values";
  doc.rows.reserve(size);
  for (const auto v : batch.values) doc.rows.push_back(json::array({v}));
  emit(doc, opts);
  return kOk;
}

// ---------------------------------------------------------------- input files

struct InputSample {
  std::vector<std::int64_t> values;
  std::string law;
  std::optional<double> theta;
  std::optional<std::uint64_t> seed;
};

std::string trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return std::string(s.substr(first, last - first + 1));
}

template <typename T>
std::optional<T> parse_number(std::string_view text) {
  T value{};
  const auto* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc() || ptr != end) return std::nullopt;
  return value;
}

InputSample read_json_sample(const std::string& text, const std::string& path) {
  InputSample sample;
  json doc;
  try {
    doc = json::parse(text);
    for (const auto& v : doc.at("values")) sample.values.push_back(v.get<std::int64_t>());
  } catch (const json::exception& e) {
    throw DataError(fmt::format("{}: malformed sample file: {}", path, e.what()));
  }
  if (const auto it = doc.find("config"); it != doc.end() && it->is_object()) {
    if (it->contains("law") && (*it)["law"].is_string()) sample.law = (*it)["law"].get<std::string>();
    if (it->contains("theta") && (*it)["theta"].is_number()) sample.theta = (*it)["theta"].get<double>();
    if (it->contains("seed") && (*it)["seed"].is_number_unsigned()) sample.seed = (*it)["seed"].get<std::uint64_t>();
  }
  return sample;
}

InputSample read_csv_sample(const std::string& text, const std::string& path) {
  InputSample sample;
  std::istringstream in(text);
  std::string raw;
  int line_number = 0;
  bool header_seen = false;
  while (std::getline(in, raw)) {
    ++line_number;
    const std::string line = trim(raw);
    if (line.empty()) continue;
    if (line.front() == '#') {
      const auto eq = line.find('=');
      if (eq == std::string::npos) continue;
      const std::string key = trim(std::string_view(line).substr(1, eq - 1));
      const std::string value = trim(std::string_view(line).substr(eq + 1));
      if (key == "law") sample.law = value;
      if (key == "theta") sample.theta = parse_number<double>(value);
      if (key == "seed") sample.seed = parse_number<std::uint64_t>(value);
      continue;
    }
    if (const auto v = parse_number<std::int64_t>(line)) {
      sample.values.push_back(*v);
    } else if (!header_seen && sample.values.empty() && line == "value") {
      header_seen = true;
    } else {
      throw DataError(fmt::format("{}:{}: expected an integer, found '{}'", path, line_number, line));
    }
  }
  return sample;
}

InputSample read_sample(const std::string& path) {
  std::ifstream file(path, std::ios::binary);
  if (!file) throw DataError(fmt::format("cannot read {}", path));
  std::stringstream buffer;
  buffer << file.rdbuf();
  const std::string text = buffer.str();
  const auto first = text.find_first_not_of(" \t\r\n");
  InputSample sample = first != std::string::npos && text[first] == '{' ? read_json_sample(text, path)
                                                                          : read_csv_sample(text, path);
  if (sample.values.empty()) throw DataError(fmt::format("{}: no observations", path));
  return sample;
}

// Batch for the family named on the command line or, failing that, in the file.
telescope::laws::SampleBatch batch_for(const Options& opts, const InputSample& input, Family& family) {
  const std::string name = opts.law.empty() ? input.law : opts.law;
  if (name.empty()) throw std::invalid_argument("the sample file names no law; pass --law");
  family = telescope::laws::parse_family(name);
  // The estimators only read the values; the law records the declared family.
  double theta = input.theta.value_or(family == Family::TPoisson ? 0.5 : 2.0);
  if (family == Family::TPoisson && !(theta > 0.0 && theta <= 1.0)) theta = 0.5;
  if (family == Family::TGeometric && !(theta > 1.0)) theta = 2.0;
  return {telescope::laws::make_law(family, theta), input.seed.value_or(0), input.values};
}

// ---------------------------------------------------------------- estimate / nptest

int cmd_estimate(const Options& opts) {
  namespace inf = telescope::inference;
  const InputSample input = read_sample(opts.input);
  Family family{};
  const auto batch = batch_for(opts, input, family);
  inf::EstimationResult result;
  try {
    if (family == Family::TPoisson) {
      if (opts.method.empty() || opts.method == "mom") {
        result = inf::mom_tpoisson(batch);
      } else if (opts.method == "mle") {
        result = inf::mle_tpoisson_numeric(batch, opts.tol);
      } else {
        throw std::invalid_argument(fmt::format("unknown method '{}'", opts.method));
      }
    } else if (family == Family::TGeometric) {
      if (opts.method.empty() || opts.method == "mle") {
        result = inf::mle_tgeometric(batch);
      } else if (opts.method == "mom") {
        result = inf::mom_tgeometric(batch);
      } else {
        throw std::invalid_argument(fmt::format("unknown method '{}'", opts.method));
      }
    } else {
      throw std::invalid_argument("zeta2 has no parameter to estimate");
    }
  } catch (const inf::DegenerateSampleError& e) {
    throw DataError(e.what());
  }
  Document doc;
  doc.command = "estimate";
  doc.config = base_config(opts);
  doc.config["seed"] = input.seed.value_or(opts.seed);
  doc.config["input"] = opts.input;
  doc.config["law"] = std::string(telescope::laws::family_name(family));
  doc.config["method"] = opts.method.empty() ? json(nullptr) : json(opts.method);
  doc.config["tol"] = opts.tol;
  doc.columns = {"law", "method", "theta_hat", "clamped", "sample_mean", "size"};
  doc.rows.push_back(json::array({std::string(telescope::laws::family_name(family)),
                                  std::string(inf::method_name(result.method)), result.theta_hat, result.clamped,
                                  result.sample_mean, batch.values.size()}));
  emit(doc, opts);
  return kOk;
}

int cmd_nptest(const Options& opts) {
  namespace inf = telescope::inference;
  const auto calibration = inf::parse_calibration(opts.calibration);
  // Validate the hypotheses before touching the file so usage errors win.
  if (!(opts.theta0 > 1.0 && opts.theta1 > opts.theta0)) {
    throw std::invalid_argument(
        fmt::format("need 1 < theta0 < theta1, got theta0 = {}, theta1 = {}", opts.theta0, opts.theta1));
  }
  if (!(opts.alpha > 0.0 && opts.alpha < 1.0)) {
    throw std::invalid_argument(fmt::format("alpha must lie in (0, 1), got {}", opts.alpha));
  }
  const InputSample input = read_sample(opts.input);
  const telescope::laws::SampleBatch batch{telescope::laws::tgeometric_law(opts.theta0), input.seed.value_or(0),
                                           input.values};
  const auto result =
      inf::np_test_tgeometric(batch, opts.theta0, opts.theta1, opts.alpha, calibration, opts.seed, opts.replicates);
  Document doc;
  doc.command = "nptest";
  doc.config = base_config(opts);
  doc.config["input"] = opts.input;
  doc.config["theta0"] = opts.theta0;
  doc.config["theta1"] = opts.theta1;
  doc.config["alpha"] = opts.alpha;
  doc.config["calibration"] = std::string(inf::calibration_name(calibration));
  doc.config["replicates"] = result.replicates;
  doc.columns = {"reject", "statistic", "critical_value", "alpha", "calibration", "size"};
  doc.rows.push_back(json::array({result.reject, result.statistic, result.critical_value, result.alpha,
                                  std::string(inf::calibration_name(result.calibration)), batch.values.size()}));
  emit(doc, opts);
  return kOk;
}

// ---------------------------------------------------------------- ascent-compare

int cmd_ascent_compare(const Options& opts) {
  const std::size_t reps = opts.reps.value_or(1000000);
  if (reps == 0) throw std::invalid_argument("--reps must be at least 1");
  Document doc;
  doc.command = "ascent-compare";
  doc.config = base_config(opts);
  doc.config["reps"] = reps;
  doc.columns = {"law", "theta", "target", "empirical", "abs_error", "reps"};
  const std::vector<std::pair<TelescopingLaw, double>> rows{
      {telescope::laws::tpoisson_law(1.0), std::numbers::e - 1.0}, {telescope::laws::tgeometric_law(2.0), 3.0}};
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const auto& [law, target] = rows[i];
    const double mean = telescope::laws::sample(law, telescope::derive_seed(opts.seed, i), reps).mean();
    doc.rows.push_back(json::array({std::string(telescope::laws::family_name(law.family())), law.theta(), target,
                                    mean, std::abs(mean - target), reps}));
  }
  emit(doc, opts);
  return kOk;
}

// ---------------------------------------------------------------- wiring

void add_common(CLI::App* cmd, Options& opts) {
  cmd->add_option("--format", opts.format, "Output format")->check(CLI::IsMember({"csv", "json"}));
  cmd->add_option("--out", opts.out, fmt::format("Output file ('-' for stdout; default ${}/<command>.<format> "
                                                 "when set, else stdout)",
                                                 kOutDirVariable));
  cmd->add_option("--seed", opts.seed, fmt::format("Root seed (default {:#x})", telescope::kDefaultSeed));
}

void add_law(CLI::App* cmd, Options& opts, bool required) {
  auto* law = cmd->add_option("--law", opts.law, "zeta2 | tpoisson | tgeometric")
                  ->check(CLI::IsMember({"zeta2", "tpoisson", "tgeometric"}));
  if (required) law->required();
  cmd->add_option_function<double>(
      "--theta",
      [&opts](double theta) {
        opts.theta = theta;
        opts.theta_given = true;
      },
      "Family parameter");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Telescoping distributions from permutation statistics"};
  app.require_subcommand(1);
  Options opts;

  auto* verify = app.add_subcommand("verify", "Run oracle checks; exit status 1 if any fails");
  add_common(verify, opts);
  verify
      ->add_option("--check", opts.check, "Check name")
      ->check(CLI::IsMember({"all", "unicyclic", "first-ascent", "avoiding", "catalan", "table1", "rho-sum",
                             "sampler", "ascent", "growth"}));
  verify->add_option("--n", opts.n, "Permutation size, or the upper limit for catalan and rho-sum");
  verify->add_option("--cap", opts.cap, "Enumeration cap override");
  verify->add_option("--reps", opts.reps, "Replicates for ascent and growth");
  verify->add_option("--size", opts.size, "Draws for the sampler check");
  verify->add_option("--grid", opts.grid, "Permutation sizes for the growth check")->delimiter(',');
  add_law(verify, opts, false);

  auto* table1 = app.add_subcommand("table1", "Same as verify --check table1");
  add_common(table1, opts);
  table1->add_option("--n", opts.n, "Permutation size (default 4)");
  table1->add_option("--cap", opts.cap, "Enumeration cap override");

  auto* pmf = app.add_subcommand("pmf", "Tabulate x, pmf, cdf");
  add_common(pmf, opts);
  add_law(pmf, opts, true);
  pmf->add_option("--tail", opts.tail, "Stop at the 1 - tail quantile")->capture_default_str();
  pmf->add_option("--max-rows", opts.max_rows, "Row limit")->capture_default_str();

  auto* sample = app.add_subcommand("sample", "Draw a seeded sample");
  add_common(sample, opts);
  add_law(sample, opts, true);
  sample->add_option("--size", opts.size, "Number of draws")->required();

  auto* estimate = app.add_subcommand("estimate", "Estimate theta from a sample file");
  add_common(estimate, opts);
  estimate->add_option("input", opts.input, "Sample file (csv or json)")->required();
  add_law(estimate, opts, false);
  estimate->add_option("--method", opts.method, "mom | mle")->check(CLI::IsMember({"mom", "mle"}));
  estimate->add_option("--tol", opts.tol, "Tolerance for the numerical MLE")->capture_default_str();

  auto* nptest = app.add_subcommand("nptest", "Neyman-Pearson test for the tgeometric family");
  add_common(nptest, opts);
  nptest->add_option("input", opts.input, "Sample file (csv or json)")->required();
  nptest->add_option("--theta0", opts.theta0, "Null parameter")->required();
  nptest->add_option("--theta1", opts.theta1, "Alternative parameter")->required();
  nptest->add_option("--alpha", opts.alpha, "Level")->capture_default_str();
  nptest->add_option("--calibration", opts.calibration, "monte-carlo | clt")
      ->check(CLI::IsMember({"monte-carlo", "mc", "clt"}))
      ->capture_default_str();
  nptest->add_option("--replicates", opts.replicates, "Monte Carlo calibration batches")->capture_default_str();

  auto* ascent = app.add_subcommand("ascent-compare", "Mean first ascent: tpoisson(1) vs tgeometric(2)");
  add_common(ascent, opts);
  ascent->add_option("--reps", opts.reps, "Draws per law (default 1000000)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*verify) return cmd_verify(opts);
    if (*table1) {
      opts.check = "table1";
      opts.n = opts.n.value_or(4);
      return cmd_verify(opts);
    }
    if (*pmf) return cmd_pmf(opts);
    if (*sample) return cmd_sample(opts);
    if (*estimate) return cmd_estimate(opts);
    if (*nptest) return cmd_nptest(opts);
    if (*ascent) return cmd_ascent_compare(opts);
  } catch (const DataError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kData;
  } catch (const std::filesystem::filesystem_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kData;
  } catch (const std::logic_error& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kData;
  }
  return kUsage;
}
