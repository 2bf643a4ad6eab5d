#ifndef HITCHIN_REPORT_HPP
#define HITCHIN_REPORT_HPP

#include <string>

#include <json.hpp>

#include "hitchin/poly.hpp"

namespace hitchin {

using Json = nlohmann::json;

// Structured CLI report. Serialisation is byte-deterministic for identical
// inputs: objects are emitted with sorted keys (nlohmann's default map),
// exact values as canonical rational/polynomial strings, floats through one
// fixed format.
struct Report {
  std::string subcommand;
  Json inputs = Json::object();
  Json results = Json::object();
  std::vector<std::string> warnings;

  Json to_json() const;
  std::string text() const;  // human-readable rendering of the same data
};

constexpr const char* kSchemaVersion = "1";
constexpr const char* kFloatFormat = "%.12g";

std::string fmt_double(double x);
Json poly_json(const Poly& p);
Poly poly_from_json(const Json& j);

}  // namespace hitchin

#endif
