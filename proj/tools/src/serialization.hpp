#pragma once

// JSON and CSV forms of the library's values.
//
// Rationals are decimal strings ("3", "-1/4"); a QSqrt2 a + b sqrt 2 is the
// pair [a, b]. Sequences are {"flavor", "kind", "entries"}.

#include <string>
#include <vector>

#include <json.hpp>

#include "freeclt/analytic.hpp"
#include "freeclt/clt.hpp"
#include "freeclt/sequence.hpp"

namespace freeclt::cli {

using Json = nlohmann::ordered_json;

/// Malformed input. `field` is a path such as "entries[2][0]".
class SchemaError : public std::runtime_error {
 public:
  SchemaError(std::string field, const std::string& message)
      : std::runtime_error("schema error in field '" + field + "': " + message),
        field_(std::move(field)) {}
  const std::string& field() const { return field_; }

 private:
  std::string field_;
};

Json to_json(const Rational& r);
Json to_json(const QSqrt2& x);
Json to_json(const Sequence& s);
Json to_json(const CltReport& report);
Json to_json(const analytic::AnalyticMeasure& mu);

Rational rational_from_json(const Json& j, const std::string& field);
QSqrt2 qsqrt2_from_json(const Json& j, const std::string& field);
Sequence sequence_from_json(const Json& j);
analytic::AnalyticMeasure measure_from_json(const Json& j);

/// Parses text as JSON; syntax errors become SchemaError on field "<document>".
Json parse_json(const std::string& text);

/// 17 significant digits, enough to round-trip a double.
std::string format_double(double x);

}  // namespace freeclt::cli
