#include "commlab/report.hpp"

#include <sstream>

#include "json.hpp"

namespace commlab {

  std::string to_json_line(VerificationReport const& r, bool timing) {
    // ordered_json keeps the fields in insertion order.
    nlohmann::ordered_json j;
    j["name"]   = r.name;
    j["params"] = nlohmann::ordered_json::object();
    for (auto const& [k, v] : r.params) {
      j["params"][k] = v;
    }
    j["outcome"] = r.passed() ? "pass" : "fail";
    j["counterexample"]
        = r.counterexample ? nlohmann::ordered_json(*r.counterexample)
                           : nlohmann::ordered_json(nullptr);
    j["counts"] = nlohmann::ordered_json::object();
    for (auto const& [k, v] : r.counts) {
      j["counts"][k] = v;
    }
    j["details"] = nlohmann::ordered_json::object();
    for (auto const& [k, v] : r.details) {
      j["details"][k] = v;
    }
    if (timing) {
      j["millis"] = r.millis;
    }
    return j.dump();
  }

  std::string to_text(VerificationReport const& r, bool timing) {
    std::ostringstream os;
    os << (r.passed() ? "PASS " : "FAIL ") << r.name;
    if (!r.params.empty()) {
      os << " (";
      for (std::size_t i = 0; i < r.params.size(); ++i) {
        os << (i ? ", " : "") << r.params[i].first << '='
           << r.params[i].second;
      }
      os << ')';
    }
    if (timing) {
      os << " [" << r.millis << " ms]";
    }
    os << '\n';
    for (auto const& [k, v] : r.counts) {
      os << "  " << k << ": " << v << '\n';
    }
    for (auto const& [k, v] : r.details) {
      os << "  " << k << ": " << v << '\n';
    }
    if (r.counterexample) {
      os << "  counterexample: " << *r.counterexample << '\n';
    }
    return os.str();
  }

}  // namespace commlab
