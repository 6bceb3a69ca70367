#pragma once

// Flat key = value scenario files and the runner that turns them into CSV.

#include <cstdint>
#include <map>
#include <string>
#include <string_view>

namespace cspin::scenario {

inline constexpr const char* kVersion = "0.1.0";

class Scenario {
 public:
  /// Parses `key = value` lines; `#` starts a comment. Throws ParseError.
  static Scenario parse(std::string_view text);

  /// Sets one key; rejects keys outside the known vocabulary.
  void set(const std::string& key, const std::string& value);

  /// "key=value", as given on the command line.
  void apply_override(std::string_view assignment);

  const std::map<std::string, std::string>& values() const { return values_; }

 private:
  std::map<std::string, std::string> values_;
};

struct Output {
  std::string csv;
  std::string summary;   // one line of key=value figures of merit
  std::string out_path;  // empty: caller prints to stdout
  bool tolerance_failed = false;
};

/// Runs the scenario on `jobs` worker threads. Output bytes do not depend on
/// `jobs`. Throws ParseError, ValidationError or ToleranceError.
Output run(const Scenario& scenario, int jobs);

/// The oracle-check suite with default settings.
Output run_check(std::uint64_t seed, int draws, int jobs);

/// 17 significant digits, shortest of %g style.
std::string format_double(double value);

/// Number with optional factors of `pi`: "1.5", "-pi/6", "2*pi*6.9e9".
double parse_number(std::string_view text);

}  // namespace cspin::scenario
