#include "qmb/report.hpp"

#include "qmb/errors.hpp"

#include <sstream>

namespace qmb {

Json report_json(const CheckReport& r, bool timing) {
  Json j;
  j["name"] = r.name;
  j["m"] = r.m;
  j["n"] = r.n;
  j["q"] = r.q;
  j["cutoff"] = r.cutoff;
  j["verdict"] = to_string(r.verdict);
  j["witness"] = r.witness;
  Json details = Json::object();
  for (const auto& [k, v] : r.details) details[k] = v;
  j["details"] = details;
  if (timing) j["seconds"] = r.seconds;
  return j;
}

Json reports_json(const std::vector<CheckReport>& rs, bool timing) {
  Json arr = Json::array();
  for (const auto& r : rs) arr.push_back(report_json(r, timing));
  return arr;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n\r") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string reports_csv(const std::vector<CheckReport>& rs, bool timing) {
  std::ostringstream os;
  os << "name,m,n,q,cutoff,verdict,witness" << (timing ? ",seconds" : "") << "\n";
  for (const auto& r : rs) {
    os << csv_field(r.name) << "," << r.m << "," << r.n << "," << csv_field(r.q) << "," << r.cutoff << ","
       << to_string(r.verdict) << "," << csv_field(r.witness);
    if (timing) os << "," << r.seconds;
    os << "\n";
  }
  return os.str();
}

template <Scalar S>
Json element_json(const Element<S>& e) {
  Json arr = Json::array();
  for (const auto& [w, c] : e.terms()) arr.push_back({{"word", to_string(w)}, {"coeff", c.to_string()}});
  return arr;
}

template Json element_json(const Element<Rational>&);
template Json element_json(const Element<Laurent>&);

Rational parse_q(const std::string& text, bool allow_decimal) {
  Rational q;
  const auto dot = text.find('.');
  if (dot != std::string::npos) {
    if (!allow_decimal) throw ConfigError("q = '" + text + "': exact commands need q as p/r");
    const std::string whole = text.substr(0, dot), frac = text.substr(dot + 1);
    if (frac.empty() || frac.find_first_not_of("0123456789") != std::string::npos ||
        whole.find_first_not_of("0123456789") != std::string::npos || frac.size() > 18)
      throw ConfigError("q = '" + text + "' is not a decimal number");
    try {
      q = Rational::parse((whole.empty() ? "0" : whole) + frac) / Rational(10).pow(static_cast<int>(frac.size()));
    } catch (const std::invalid_argument&) {
      throw ConfigError("q = '" + text + "' is not a decimal number");
    }
  } else {
    try {
      q = Rational::parse(text);
    } catch (const std::invalid_argument& e) {
      throw ConfigError("q = '" + text + "': " + e.what());
    }
  }
  if (q.sign() <= 0) throw ConfigError("q must be positive");
  return q;
}

}  // namespace qmb
