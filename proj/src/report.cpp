#include "stuffle/report.hpp"

#include <json.hpp>

namespace stuffle {

std::string CheckReport::to_text() const {
  std::string out = "check: " + check + "\n";
  out += std::string("verdict: ") + (pass ? "PASS" : "FAIL") + "\n";
  if (bound > 0) out += "bound: " + std::to_string(bound) + "\n";
  if (!pass) {
    out += "identity: " + identity + "\n";
    if (!witness.empty()) {
      out += "witness:";
      for (const auto& w : witness) out += " " + w;
      out += "\n";
    }
    out += "lhs: " + lhs + "\n";
    out += "rhs: " + rhs + "\n";
  }
  for (const auto& n : notes) out += "note: " + n + "\n";
  return out;
}

std::string CheckReport::to_json() const {
  nlohmann::json j;
  j["check"] = check;
  j["verdict"] = pass ? "PASS" : "FAIL";
  if (bound > 0) j["bound"] = bound;
  if (!pass) {
    j["identity"] = identity;
    j["witness"] = witness;
    j["lhs"] = lhs;
    j["rhs"] = rhs;
  }
  if (!notes.empty()) j["notes"] = notes;
  return j.dump();
}

}  // namespace stuffle
