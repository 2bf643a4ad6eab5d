#include "hitchin/report.hpp"

#include <cstdio>
#include <cstdlib>
#include <sstream>

namespace hitchin {

std::uint64_t seed_from_env(std::uint64_t fallback) {
  const char* env = std::getenv("HITCHINKIT_SEED");
  if (!env || !*env) return fallback;
  char* end = nullptr;
  unsigned long long v = std::strtoull(env, &end, 10);
  if (end && *end == '\0') return static_cast<std::uint64_t>(v);
  return fallback;
}

std::string fmt_double(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, kFloatFormat, x);
  return buf;
}

Json poly_json(const Poly& p) {
  Json j;
  j["vars"] = p.vars();
  Json terms = Json::array();
  for (const auto& [e, c] : p.terms()) {
    Json t;
    t["e"] = e;
    t["c"] = rat_to_string(c);
    terms.push_back(t);
  }
  j["terms"] = terms;
  j["str"] = p.str();
  return j;
}

Poly poly_from_json(const Json& j) {
  std::vector<std::string> vars = j.at("vars").get<std::vector<std::string>>();
  Poly p(vars);
  for (const auto& t : j.at("terms")) {
    std::vector<int> e = t.at("e").get<std::vector<int>>();
    p.add_term(std::move(e), rat_from_string(t.at("c").get<std::string>()));
  }
  return p;
}

Json Report::to_json() const {
  Json j;
  j["schema_version"] = kSchemaVersion;
  j["subcommand"] = subcommand;
  j["inputs"] = inputs;
  j["results"] = results;
  j["warnings"] = warnings;
  return j;
}

namespace {

void render(std::ostream& os, const std::string& key, const Json& v, int indent) {
  std::string pad(static_cast<size_t>(indent), ' ');
  if (v.is_object()) {
    os << pad << key << ":\n";
    for (auto it = v.begin(); it != v.end(); ++it) render(os, it.key(), it.value(), indent + 2);
  } else if (v.is_array()) {
    bool scalars = true;
    for (const auto& x : v) scalars = scalars && !x.is_structured();
    if (scalars) {
      os << pad << key << ": [";
      for (size_t i = 0; i < v.size(); ++i) {
        if (i) os << ", ";
        os << (v[i].is_string() ? v[i].get<std::string>() : v[i].dump());
      }
      os << "]\n";
    } else {
      os << pad << key << ":\n";
      for (size_t i = 0; i < v.size(); ++i) render(os, "- [" + std::to_string(i) + "]", v[i], indent + 2);
    }
  } else if (v.is_string()) {
    os << pad << key << ": " << v.get<std::string>() << "\n";
  } else {
    os << pad << key << ": " << v.dump() << "\n";
  }
}

}  // namespace

std::string Report::text() const {
  std::ostringstream os;
  os << "[" << subcommand << "]\n";
  if (!inputs.empty()) render(os, "inputs", inputs, 0);
  render(os, "results", results, 0);
  if (!warnings.empty()) {
    os << "warnings:\n";
    for (const auto& w : warnings) os << "  - " << w << "\n";
  }
  return os.str();
}

}  // namespace hitchin
