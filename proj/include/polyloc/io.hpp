#pragma once
// Text, JSON and CSV renderings of results.

#include "polyloc/taylor.hpp"
#include "polyloc/zeta.hpp"

#include <json.hpp>

#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace polyloc {

enum class Format { Text, Json, Csv };

inline Format parse_format(const std::string& s) {
  if (s == "text") return Format::Text;
  if (s == "json") return Format::Json;
  if (s == "csv") return Format::Csv;
  throw std::invalid_argument("unknown format '" + s + "' (text|json|csv)");
}

inline nlohmann::json complex_json(const BigComplex& z, int digits) {
  return {{"re", z.real().str(digits)}, {"im", z.imag().str(digits)}};
}

/// {"operation", "inputs", "value": {"re", "im"}, "error_bound", "precision_digits"}
inline nlohmann::json character_record(const std::string& operation, nlohmann::json inputs, const CharacterValue& v,
                                       int digits) {
  return {{"operation", operation},
          {"inputs", std::move(inputs)},
          {"value", complex_json(v.value, digits)},
          {"error_bound", v.error_bound},
          {"precision_digits", digits}};
}

/// Exact results carry their value as a string such as "17/32".
inline nlohmann::json exact_record(const std::string& operation, nlohmann::json inputs, const std::string& value) {
  return {{"operation", operation}, {"inputs", std::move(inputs)}, {"value", value}};
}

template <Scalar S>
std::string taylor_csv(const TaylorSeries<S>& t) {
  std::string out = "order,coefficient\n";
  for (std::size_t n = 0; n <= t.order(); ++n) out += std::to_string(n) + "," + scalar_traits<S>::str(t[n]) + "\n";
  return out;
}

/// Values indexed from 0, as for a harmonic table H_w(0..N).
inline std::string table_csv(const std::vector<Rational>& values) {
  std::string out = "N,value\n";
  for (std::size_t n = 0; n < values.size(); ++n) out += std::to_string(n) + "," + to_string(values[n]) + "\n";
  return out;
}

template <Scalar S>
nlohmann::json taylor_json(const TaylorSeries<S>& t) {
  nlohmann::json coeffs = nlohmann::json::array();
  for (std::size_t n = 0; n <= t.order(); ++n) coeffs.push_back(scalar_traits<S>::str(t[n]));
  return coeffs;
}

}  // namespace polyloc
