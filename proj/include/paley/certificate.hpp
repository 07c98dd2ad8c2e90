#ifndef PALEY_CERTIFICATE_HPP
#define PALEY_CERTIFICATE_HPP

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

namespace paley {

inline constexpr int kCertificateSchemaVersion = 1;

// One named exact check. `detail` carries witnesses (violating pairs,
// counts, set sizes); it must contain no timing or other run-varying data
// so certificates stay byte-stable across runs.
struct Check {
  std::string name;
  bool pass = true;
  nlohmann::json detail = nlohmann::json::object();
};

using CheckList = std::vector<Check>;

bool all_pass(const CheckList& checks);

// Machine-readable record of one command run: which checks executed, on
// which parameters, and whether they passed. Serialization is deterministic
// except for the optional timing block.
class Certificate {
 public:
  explicit Certificate(std::string command) : command_(std::move(command)) {}

  void set_q(std::int64_t q) { q_ = q; }
  void set_parameters(nlohmann::json params) { params_ = std::move(params); }
  void set_payload(const std::string& key, nlohmann::json value);
  void set_timing_ms(std::int64_t ms) { timing_ms_ = ms; }

  Check& add_check(std::string name);
  void add_checks(const CheckList& checks);

  const CheckList& checks() const { return checks_; }
  bool all_pass() const { return paley::all_pass(checks_); }

  // `with_timing = false` drops the timing block; everything else is
  // byte-stable for identical inputs.
  nlohmann::json to_json(bool with_timing = true) const;
  std::string dump(bool with_timing = true) const;

 private:
  std::string command_;
  std::int64_t q_ = 0;
  nlohmann::json params_ = nlohmann::json::object();
  nlohmann::json payload_ = nlohmann::json::object();
  CheckList checks_;
  std::int64_t timing_ms_ = -1;
};

}  // namespace paley

#endif  // PALEY_CERTIFICATE_HPP
