#pragma once

#include "qmb/equivalence.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace qmb {

using Json = nlohmann::ordered_json;

/// Seconds are left out unless asked for, so repeated runs are byte-identical.
Json report_json(const CheckReport& r, bool timing);
Json reports_json(const std::vector<CheckReport>& rs, bool timing);
std::string reports_csv(const std::vector<CheckReport>& rs, bool timing);

/// RFC 4180 quoting when needed.
std::string csv_field(const std::string& s);

template <Scalar S>
Json element_json(const Element<S>& e);

/// Parses "p/r", an integer, or (when allow_decimal) a decimal like 0.25,
/// all exactly.  Throws ConfigError.
Rational parse_q(const std::string& text, bool allow_decimal);

}  // namespace qmb
