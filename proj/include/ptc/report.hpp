#pragma once

#include "json.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace ptc {

enum class CheckStatus { Pass, Fail, Skip };

std::string to_string(CheckStatus s);

struct Check {
  std::string id;
  std::string description;
  std::string anchor;  // the identity or claim under test, or "plumbing"
  std::string expected;
  std::string computed;
  double tolerance = 0.0;  // 0 marks an exact comparison
  CheckStatus status = CheckStatus::Skip;
  std::string reason;
};

struct ReportEnvironment {
  std::string tool_version;
  std::string precision;
  std::string timestamp;
  std::uint64_t seed = 0;
  std::string profile;
};

class VerificationReport {
 public:
  VerificationReport();

  void add(Check c);
  void pass_fail(const std::string& id, const std::string& description, const std::string& anchor,
                 const std::string& expected, const std::string& computed, double tolerance, bool ok,
                 const std::string& reason = {});
  // |computed - expected| <= tolerance
  void numeric(const std::string& id, const std::string& description, const std::string& anchor,
               double expected, double computed, double tolerance);
  void skip(const std::string& id, const std::string& description, const std::string& anchor,
            const std::string& reason);
  void merge(const VerificationReport& other, const std::string& prefix = {});

  const std::vector<Check>& checks() const { return checks_; }
  std::size_t count(CheckStatus s) const;
  bool all_passed() const { return count(CheckStatus::Fail) == 0; }
  const Check* find(const std::string& id) const;

  ReportEnvironment environment;

  nlohmann::json to_json() const;
  std::string summary() const;

 private:
  std::vector<Check> checks_;
};

std::string fmt(double v);
std::string iso_timestamp();
extern const char* const kToolVersion;

}  // namespace ptc
