#include "ptc/report.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <ctime>
#include <sstream>
#include <stdexcept>

namespace ptc {

const char* const kToolVersion = "0.3.0";

std::string to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::Pass: return "pass";
    case CheckStatus::Fail: return "fail";
    default: return "skip";
  }
}

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

std::string iso_timestamp() {
  auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

VerificationReport::VerificationReport() {
  environment.tool_version = kToolVersion;
  environment.precision = "exact rationals (GMP) / IEEE double / 100-digit binary float";
  environment.timestamp = iso_timestamp();
}

void VerificationReport::add(Check c) {
  if (c.id.empty()) throw std::invalid_argument("check without id");
  if (c.anchor.empty()) throw std::invalid_argument("check '" + c.id + "' has no anchor");
  if (c.status == CheckStatus::Skip && c.reason.empty())
    throw std::invalid_argument("skipped check '" + c.id + "' needs a reason");
  checks_.push_back(std::move(c));
}

void VerificationReport::pass_fail(const std::string& id, const std::string& description,
                                   const std::string& anchor, const std::string& expected,
                                   const std::string& computed, double tolerance, bool ok,
                                   const std::string& reason) {
  add(Check{id, description, anchor, expected, computed, tolerance,
            ok ? CheckStatus::Pass : CheckStatus::Fail, reason});
}

void VerificationReport::numeric(const std::string& id, const std::string& description,
                                 const std::string& anchor, double expected, double computed,
                                 double tolerance) {
  bool ok = std::isfinite(computed) && std::abs(computed - expected) <= tolerance;
  pass_fail(id, description, anchor, fmt(expected), fmt(computed), tolerance, ok);
}

void VerificationReport::skip(const std::string& id, const std::string& description,
                              const std::string& anchor, const std::string& reason) {
  add(Check{id, description, anchor, "", "", 0.0, CheckStatus::Skip, reason});
}

void VerificationReport::merge(const VerificationReport& other, const std::string& prefix) {
  for (auto c : other.checks_) {
    if (!prefix.empty()) c.id = prefix + "." + c.id;
    checks_.push_back(std::move(c));
  }
}

std::size_t VerificationReport::count(CheckStatus s) const {
  std::size_t n = 0;
  for (const auto& c : checks_) n += c.status == s;
  return n;
}

const Check* VerificationReport::find(const std::string& id) const {
  for (const auto& c : checks_)
    if (c.id == id) return &c;
  return nullptr;
}

nlohmann::json VerificationReport::to_json() const {
  nlohmann::json j;
  j["environment"] = {{"tool_version", environment.tool_version},
                      {"precision", environment.precision},
                      {"timestamp", environment.timestamp},
                      {"seed", environment.seed},
                      {"profile", environment.profile}};
  auto arr = nlohmann::json::array();
  for (const auto& c : checks_) {
    nlohmann::json e = {{"id", c.id},
                        {"description", c.description},
                        {"paper_anchor", c.anchor},
                        {"expected", c.expected},
                        {"computed", c.computed},
                        {"tolerance", c.tolerance},
                        {"status", to_string(c.status)}};
    if (!c.reason.empty()) e["reason"] = c.reason;
    arr.push_back(std::move(e));
  }
  j["checks"] = std::move(arr);
  j["summary"] = {{"pass", count(CheckStatus::Pass)},
                  {"fail", count(CheckStatus::Fail)},
                  {"skip", count(CheckStatus::Skip)}};
  return j;
}

std::string VerificationReport::summary() const {
  std::ostringstream os;
  for (const auto& c : checks_) {
    os << (c.status == CheckStatus::Pass ? "PASS " : c.status == CheckStatus::Fail ? "FAIL " : "SKIP ")
       << c.id << "  expected=" << c.expected << " computed=" << c.computed;
    if (!c.reason.empty()) os << "  (" << c.reason << ")";
    os << '\n';
  }
  os << count(CheckStatus::Pass) << " passed, " << count(CheckStatus::Fail) << " failed, "
     << count(CheckStatus::Skip) << " skipped\n";
  return os.str();
}

}  // namespace ptc
