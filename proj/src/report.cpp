#include "nilp/report.hpp"

#include <sstream>

namespace nilp {

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::pass:
      return "pass";
    case Verdict::fail:
      return "fail";
    case Verdict::hypothesis_unmet:
      return "hypothesis-unmet";
  }
  return "fail";
}

void TheoremReport::add(CheckResult c) { checks.push_back(std::move(c)); }

void TheoremReport::finalize() {
  if (verdict == Verdict::hypothesis_unmet) return;
  verdict = Verdict::pass;
  for (const auto& c : checks)
    if (!c.passed) {
      verdict = Verdict::fail;
      if (!certificate) {
        certificate = nlohmann::json{{"check", c.name}, {"detail", c.detail}, {"params", params}};
        if (c.k) (*certificate)["k"] = *c.k;
      }
      break;
    }
}

nlohmann::json TheoremReport::to_json() const {
  nlohmann::json checks_json = nlohmann::json::array();
  for (const auto& c : checks) {
    nlohmann::json j = {{"name", c.name}, {"passed", c.passed}};
    if (c.k) j["k"] = *c.k;
    if (!c.detail.empty()) j["detail"] = c.detail;
    checks_json.push_back(std::move(j));
  }
  nlohmann::json out = {{"theorem", theorem},
                        {"verdict", std::string(to_string(verdict))},
                        {"params", params},
                        {"checks", checks_json}};
  if (certificate) out["certificate"] = *certificate;
  return out;
}

std::string TheoremReport::to_text() const {
  std::ostringstream os;
  os << theorem << ": " << to_string(verdict) << "\n";
  for (const auto& [k, v] : params.items()) os << "  " << k << " = " << v.dump() << "\n";
  for (const auto& c : checks) {
    os << "  [" << (c.passed ? "ok" : "FAIL") << "] " << c.name;
    if (c.k) os << " (k=" << *c.k << ")";
    os << "\n";
  }
  if (certificate) os << "  certificate: " << certificate->dump() << "\n";
  return os.str();
}

}  // namespace nilp
