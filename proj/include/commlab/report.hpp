#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace commlab {

  // Result of one verification check. A failing report carries a
  // counterexample in canonical element and term text, which is enough to
  // replay it.
  struct VerificationReport {
    enum class Outcome { Pass, Fail };

    std::string                                          name;
    std::vector<std::pair<std::string, std::int64_t>>    params;
    Outcome                                              outcome = Outcome::Pass;
    std::optional<std::string>                           counterexample;
    std::vector<std::pair<std::string, std::uint64_t>>   counts;
    std::vector<std::pair<std::string, std::string>>     details;
    std::int64_t                                         millis = 0;

    bool passed() const noexcept {
      return outcome == Outcome::Pass;
    }
    void fail(std::string counterexample_text) {
      outcome        = Outcome::Fail;
      counterexample = std::move(counterexample_text);
    }
  };

  // One JSON object on a single line:
  //   {"name", "params", "outcome", "counterexample", "counts", "details",
  //    "millis"}
  // Without timing, "millis" is omitted so that equal runs give equal bytes.
  std::string to_json_line(VerificationReport const& r, bool timing = true);

  // Human-readable block of lines.
  std::string to_text(VerificationReport const& r, bool timing = true);

}  // namespace commlab
