#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "json.hpp"

#include "amgm/errors.hpp"
#include "amgm/gap_search.hpp"
#include "amgm/holder.hpp"
#include "amgm/refined_bounds.hpp"
#include "amgm/weighted_sample.hpp"

namespace amgm::cli {

enum class InputFormat { kAuto, kJson, kCsv };

/// Raised for malformed input documents (bad JSON, missing keys, bad CSV rows).
class InputError : public Error {
 public:
  using Error::Error;
};

struct HolderInput {
  std::vector<DiscretizedFunction> functions;
  ExponentTuple exponents;
};

// Input documents.
[[nodiscard]] std::string read_file(const std::string& path);
[[nodiscard]] InputFormat detect_format(const std::string& path, const std::string& text);
[[nodiscard]] WeightedSample parse_sample(const std::string& text, InputFormat format,
                                          WeightPolicy policy);
[[nodiscard]] HolderInput parse_holder_input(const std::string& text);

// Structured output. Doubles are written in shortest round-trip form, so
// parsing an emitted document recovers every value bit-for-bit. Non-finite
// restart ratios are written as null.
[[nodiscard]] nlohmann::json to_json(const BoundReport& r);
[[nodiscard]] nlohmann::json to_json(const HolderReport& r, bool chain_ok);
[[nodiscard]] nlohmann::json to_json(const SearchResult& r, bool with_traces);
[[nodiscard]] nlohmann::json to_json(const std::vector<RatioRow>& rows, std::size_t n);

[[nodiscard]] BoundReport bound_report_from_json(const nlohmann::json& j);
[[nodiscard]] HolderReport holder_report_from_json(const nlohmann::json& j);
[[nodiscard]] SearchResult search_result_from_json(const nlohmann::json& j);

// Human-readable tables, 17 significant digits.
void print_table(std::ostream& os, const BoundReport& r);
void print_table(std::ostream& os, const HolderReport& r, bool chain_ok);
void print_table(std::ostream& os, const SearchResult& r);
void print_table(std::ostream& os, const std::vector<RatioRow>& rows);

}  // namespace amgm::cli
