#pragma once

#include <nlohmann/json.hpp>

#include <optional>
#include <string>
#include <vector>

namespace nilp {

enum class Verdict { pass, fail, hypothesis_unmet };

std::string_view to_string(Verdict v);

struct CheckResult {
  std::string name;
  std::optional<std::size_t> k;
  bool passed = true;
  nlohmann::json detail = nlohmann::json::object();
};

/// Outcome of one executable theorem check on a concrete instance.
struct TheoremReport {
  TheoremReport() = default;
  explicit TheoremReport(std::string id) : theorem(std::move(id)) {}

  std::string theorem;
  nlohmann::json params = nlohmann::json::object();
  std::vector<CheckResult> checks;
  Verdict verdict = Verdict::pass;
  std::optional<nlohmann::json> certificate;

  void add(CheckResult c);
  /// Sets the verdict from the checks (pass iff all passed) and records the
  /// first failing check as certificate. Leaves hypothesis_unmet alone.
  void finalize();
  bool passed() const noexcept { return verdict == Verdict::pass; }

  nlohmann::json to_json() const;
  std::string to_text() const;
};

}  // namespace nilp
