#ifndef MATSUO_REPORT_HPP
#define MATSUO_REPORT_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

namespace matsuo::report {

inline constexpr int kSchema = 1;

struct Options {
  std::string field = "Q";
  std::string eta = "1/2";
  std::uint64_t seed = 0;
  std::optional<std::string> group;  // verify: restrict to one group
  std::optional<std::string> type;   // verify: restrict to one root system
  bool constants = false;            // build: embed structure constants
};

struct Result {
  nlohmann::json json;
  bool pass = true;
};

// Groups exercised by the fusion and equivalence suites.
const std::vector<std::string>& catalog();
// Root systems exercised by the model, torus and section suites.
const std::vector<std::string>& model_types();

Result build(const std::string& group, const Options& opt);
Result derive(const std::string& group, const std::string& system, const Options& opt);
Result classify(const std::string& group);
// suite: all, fusion, equivalence, model, torus, section, char3
Result verify(const std::string& suite, const Options& opt);
// The model, torus and section suites for one root system.
Result verify_model(const std::string& type, const Options& opt);

std::string to_csv(const nlohmann::json& report);
std::string to_text(const nlohmann::json& report);

}  // namespace matsuo::report

#endif  // MATSUO_REPORT_HPP
