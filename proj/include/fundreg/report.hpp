#pragma once

#include <string>

#include <nlohmann/json.hpp>

namespace fundreg {

enum class Verdict { Verified, Refuted, Inconclusive };

std::string to_string(Verdict v);
Verdict parse_verdict(const std::string& text);
/// CLI contract: 0 verified, 1 refuted, 2 inconclusive.
int exit_code(Verdict v);

struct VerificationReport {
  std::string property;
  Verdict verdict = Verdict::Inconclusive;
  unsigned depth = 0;
  unsigned radius = 0;
  nlohmann::json counts = nlohmann::json::array();
  nlohmann::json witnesses = nlohmann::json::array();
};

nlohmann::json to_json(const VerificationReport& r);

}  // namespace fundreg
