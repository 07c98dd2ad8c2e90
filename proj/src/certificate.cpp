#include "paley/certificate.hpp"

namespace paley {

bool all_pass(const CheckList& checks) {
  for (const Check& c : checks)
    if (!c.pass) return false;
  return true;
}

void Certificate::set_payload(const std::string& key, nlohmann::json value) {
  payload_[key] = std::move(value);
}

Check& Certificate::add_check(std::string name) {
  checks_.push_back(Check{std::move(name)});
  return checks_.back();
}

void Certificate::add_checks(const CheckList& checks) {
  checks_.insert(checks_.end(), checks.begin(), checks.end());
}

nlohmann::json Certificate::to_json(bool with_timing) const {
  nlohmann::json j;
  j["schema_version"] = kCertificateSchemaVersion;
  j["command"] = command_;
  j["q"] = q_;
  j["parameters"] = params_;
  nlohmann::json checks = nlohmann::json::array();
  for (const Check& c : checks_) {
    nlohmann::json cj;
    cj["name"] = c.name;
    cj["pass"] = c.pass;
    if (!c.detail.empty()) cj["detail"] = c.detail;
    checks.push_back(std::move(cj));
  }
  j["checks"] = std::move(checks);
  j["all_pass"] = all_pass();
  for (auto it = payload_.begin(); it != payload_.end(); ++it) j[it.key()] = it.value();
  if (with_timing && timing_ms_ >= 0) j["timing_ms"] = timing_ms_;
  return j;
}

std::string Certificate::dump(bool with_timing) const {
  return to_json(with_timing).dump(2) + "\n";
}

}  // namespace paley
