#include "report_io.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <limits>
#include <ostream>
#include <sstream>
#include <string_view>

namespace amgm::cli {
namespace {

using nlohmann::json;

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

bool parse_double(std::string_view s, double& out) {
  s = trim(s);
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  return ec == std::errc() && ptr == s.data() + s.size();
}

std::vector<double> number_array(const json& doc, const char* key) {
  if (!doc.contains(key)) throw InputError(std::string("input: missing key '") + key + "'");
  const json& a = doc.at(key);
  if (!a.is_array()) throw InputError(std::string("input: '") + key + "' must be an array");
  if (a.empty()) throw InputError(std::string("input: '") + key + "' must be nonempty");
  std::vector<double> out;
  out.reserve(a.size());
  for (const auto& v : a) {
    if (!v.is_number()) {
      throw InputError(std::string("input: '") + key + "' must contain only numbers");
    }
    out.push_back(v.get<double>());
  }
  return out;
}

json parse_json(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw InputError(std::string("input: malformed JSON document: ") + e.what());
  }
}

json finite_or_null(double v) { return std::isfinite(v) ? json(v) : json(nullptr); }

double number_or_neg_inf(const json& v) {
  return v.is_null() ? -std::numeric_limits<double>::infinity() : v.get<double>();
}

json tolerance_json(const Tolerance& t) {
  return {{"relative", t.relative}, {"absolute", t.absolute}};
}

struct Row {
  std::ostream& os;
  void operator()(std::string_view name, double v) const {
    os << std::left << std::setw(26) << name << std::setprecision(17) << v << '\n';
  }
  void operator()(std::string_view name, std::string_view v) const {
    os << std::left << std::setw(26) << name << v << '\n';
  }
};

std::string join(std::span<const double> xs) {
  std::ostringstream os;
  os << std::setprecision(17);
  for (std::size_t i = 0; i < xs.size(); ++i) os << (i ? " " : "") << xs[i];
  return os.str();
}

}  // namespace

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("input: cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

InputFormat detect_format(const std::string& path, const std::string& text) {
  auto ends_with = [&](std::string_view suffix) {
    return path.size() >= suffix.size() &&
           path.compare(path.size() - suffix.size(), suffix.size(), suffix) == 0;
  };
  if (ends_with(".json")) return InputFormat::kJson;
  if (ends_with(".csv")) return InputFormat::kCsv;
  const auto body = trim(text);
  return !body.empty() && body.front() == '{' ? InputFormat::kJson : InputFormat::kCsv;
}

WeightedSample parse_sample(const std::string& text, InputFormat format, WeightPolicy policy) {
  if (format == InputFormat::kAuto) format = detect_format("", text);

  if (format == InputFormat::kJson) {
    const json doc = parse_json(text);
    if (!doc.is_object()) throw InputError("input: expected a JSON object with weights and values");
    return WeightedSample(number_array(doc, "weights"), number_array(doc, "values"), policy);
  }

  // weight,value per line; blank lines and '#' comments are skipped, and a
  // non-numeric first row is taken as a header.
  std::vector<double> weights;
  std::vector<double> values;
  std::istringstream in(text);
  std::string line;
  std::size_t lineno = 0;
  bool first_row = true;
  while (std::getline(in, line)) {
    ++lineno;
    auto body = trim(line);
    if (body.empty() || body.front() == '#') continue;
    const auto comma = body.find(',');
    double w = 0.0;
    double x = 0.0;
    const bool ok = comma != std::string_view::npos &&
                    parse_double(body.substr(0, comma), w) &&
                    parse_double(body.substr(comma + 1), x);
    if (!ok) {
      if (first_row) {
        first_row = false;
        continue;
      }
      throw InputError("input: line " + std::to_string(lineno) +
                       ": expected 'weight,value' with two decimal numbers");
    }
    first_row = false;
    weights.push_back(w);
    values.push_back(x);
  }
  if (values.empty()) throw InputError("input: no 'weight,value' rows found");
  return WeightedSample(std::move(weights), std::move(values), policy);
}

HolderInput parse_holder_input(const std::string& text) {
  const json doc = parse_json(text);
  if (!doc.is_object()) {
    throw InputError("input: expected a JSON object with quadrature, exponents and functions");
  }
  auto quadrature = number_array(doc, "quadrature");
  ExponentTuple exponents(number_array(doc, "exponents"));

  if (!doc.contains("functions") || !doc.at("functions").is_array() ||
      doc.at("functions").empty()) {
    throw InputError("input: 'functions' must be a nonempty array of arrays");
  }
  std::vector<DiscretizedFunction> functions;
  for (const auto& f : doc.at("functions")) {
    if (!f.is_array()) throw InputError("input: each entry of 'functions' must be an array");
    std::vector<double> values;
    for (const auto& v : f) {
      if (!v.is_number()) throw InputError("input: function values must be numbers");
      values.push_back(v.get<double>());
    }
    functions.emplace_back(std::move(values), quadrature);
  }
  if (functions.size() != exponents.size()) {
    throw ValidationError("shape: got " + std::to_string(functions.size()) +
                          " functions for " + std::to_string(exponents.size()) +
                          " exponents");
  }
  return {std::move(functions), std::move(exponents)};
}

json to_json(const BoundReport& r) {
  return {
      {"am", r.am},
      {"gm", r.gm},
      {"power_mean_half", r.power_mean_half},
      {"sqrt_var", r.sqrt_var},
      {"refined_upper", r.refined_upper},
      {"cf_lower", r.cf_lower ? json(*r.cf_lower) : json(nullptr)},
      {"cf_upper", r.cf_upper ? json(*r.cf_upper) : json(nullptr)},
      {"gap", r.gap},
      {"chain_ok", r.chain_ok},
      {"tolerance", tolerance_json(r.tolerance_used)},
  };
}

json to_json(const HolderReport& r, bool chain_ok) {
  return {
      {"product_l1", r.product_l1},
      {"classical_bound", r.classical_bound},
      {"correction", r.correction},
      {"refined_bound", r.refined_bound},
      {"norms", r.norms},
      {"mean_unit_vector_norm_sq", r.mean_unit_vector_norm_sq},
      {"chain_ok", chain_ok},
  };
}

json to_json(const SearchResult& r, bool with_traces) {
  json ratios = json::array();
  for (double v : r.restart_ratios) ratios.push_back(finite_or_null(v));
  json out = {
      {"best_ratio", finite_or_null(r.best_ratio)},
      {"best_sample",
       {{"weights", std::vector<double>(r.best_sample.weights().begin(),
                                        r.best_sample.weights().end())},
        {"values", std::vector<double>(r.best_sample.values().begin(),
                                       r.best_sample.values().end())}}},
      {"restart_ratios", std::move(ratios)},
      {"evaluations", r.evaluations},
  };
  if (with_traces) {
    json traces = json::array();
    for (const auto& t : r.traces) {
      json row = json::array();
      for (double v : t) row.push_back(finite_or_null(v));
      traces.push_back(std::move(row));
    }
    out["traces"] = std::move(traces);
  }
  return out;
}

json to_json(const std::vector<RatioRow>& rows, std::size_t n) {
  json arr = json::array();
  for (const auto& row : rows) {
    arr.push_back({{"delta", row.delta}, {"best_ratio", finite_or_null(row.best_ratio)}});
  }
  return {{"n", n}, {"rows", std::move(arr)}};
}

BoundReport bound_report_from_json(const json& j) {
  BoundReport r;
  r.am = j.at("am").get<double>();
  r.gm = j.at("gm").get<double>();
  r.power_mean_half = j.at("power_mean_half").get<double>();
  r.sqrt_var = j.at("sqrt_var").get<double>();
  r.refined_upper = j.at("refined_upper").get<double>();
  if (!j.at("cf_lower").is_null()) r.cf_lower = j.at("cf_lower").get<double>();
  if (!j.at("cf_upper").is_null()) r.cf_upper = j.at("cf_upper").get<double>();
  r.gap = j.at("gap").get<double>();
  r.chain_ok = j.at("chain_ok").get<bool>();
  r.tolerance_used.relative = j.at("tolerance").at("relative").get<double>();
  r.tolerance_used.absolute = j.at("tolerance").at("absolute").get<double>();
  return r;
}

HolderReport holder_report_from_json(const json& j) {
  HolderReport r;
  r.product_l1 = j.at("product_l1").get<double>();
  r.classical_bound = j.at("classical_bound").get<double>();
  r.correction = j.at("correction").get<double>();
  r.refined_bound = j.at("refined_bound").get<double>();
  r.norms = j.at("norms").get<std::vector<double>>();
  r.mean_unit_vector_norm_sq = j.at("mean_unit_vector_norm_sq").get<double>();
  return r;
}

SearchResult search_result_from_json(const json& j) {
  const auto& s = j.at("best_sample");
  SearchResult r{number_or_neg_inf(j.at("best_ratio")),
                 WeightedSample(s.at("weights").get<std::vector<double>>(),
                                s.at("values").get<std::vector<double>>()),
                 {},
                 j.at("evaluations").get<std::size_t>(),
                 {}};
  for (const auto& v : j.at("restart_ratios")) r.restart_ratios.push_back(number_or_neg_inf(v));
  if (j.contains("traces")) {
    for (const auto& t : j.at("traces")) {
      std::vector<double> row;
      for (const auto& v : t) row.push_back(number_or_neg_inf(v));
      r.traces.push_back(std::move(row));
    }
  }
  return r;
}

void print_table(std::ostream& os, const BoundReport& r) {
  const Row row{os};
  row("arithmetic mean", r.am);
  row("geometric mean", r.gm);
  row("power mean (s = 1/2)", r.power_mean_half);
  row("variance of sqrt(x)", r.sqrt_var);
  row("refined upper bound", r.refined_upper);
  row("am - gm", r.gap);
  if (r.cf_lower && r.cf_upper) {
    row("cartwright-field lower", *r.cf_lower);
    row("cartwright-field upper", *r.cf_upper);
  } else {
    row("cartwright-field lower", "n/a (sample contains 0)");
    row("cartwright-field upper", "n/a (sample contains 0)");
  }
  row("tolerance (rel)", r.tolerance_used.relative);
  row("tolerance (abs)", r.tolerance_used.absolute);
  row("chain", r.chain_ok ? "ok" : "VIOLATED");
}

void print_table(std::ostream& os, const HolderReport& r, bool chain_ok) {
  const Row row{os};
  row("||prod f_i||_1", r.product_l1);
  row("refined bound", r.refined_bound);
  row("classical bound", r.classical_bound);
  row("correction", r.correction);
  row("||mean unit vector||^2", r.mean_unit_vector_norm_sq);
  row("norms", join(r.norms));
  row("chain", chain_ok ? "ok" : "VIOLATED");
}

void print_table(std::ostream& os, const SearchResult& r) {
  const Row row{os};
  row("best ratio", r.best_ratio);
  row("best weights", join(r.best_sample.weights()));
  row("best values", join(r.best_sample.values()));
  row("restart ratios", join(r.restart_ratios));
  row("evaluations", static_cast<double>(r.evaluations));
}

void print_table(std::ostream& os, const std::vector<RatioRow>& rows) {
  os << std::left << std::setw(26) << "delta" << "best_ratio" << '\n';
  for (const auto& r : rows) {
    os << std::left << std::setw(26) << std::setprecision(17) << r.delta << r.best_ratio << '\n';
  }
}

}  // namespace amgm::cli
