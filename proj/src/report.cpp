#include "fundreg/report.hpp"

#include <stdexcept>

namespace fundreg {

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Verified: return "verified-at-truncation";
    case Verdict::Refuted: return "refuted";
    case Verdict::Inconclusive: return "inconclusive";
  }
  return "inconclusive";
}

Verdict parse_verdict(const std::string& text) {
  if (text == "verified-at-truncation") return Verdict::Verified;
  if (text == "refuted") return Verdict::Refuted;
  if (text == "inconclusive") return Verdict::Inconclusive;
  throw std::invalid_argument("unknown verdict: " + text);
}

int exit_code(Verdict v) {
  switch (v) {
    case Verdict::Verified: return 0;
    case Verdict::Refuted: return 1;
    case Verdict::Inconclusive: return 2;
  }
  return 2;
}

nlohmann::json to_json(const VerificationReport& r) {
  return {{"property", r.property},
          {"verdict", to_string(r.verdict)},
          {"truncation", {{"depth", r.depth}, {"radius", r.radius}}},
          {"counts", r.counts},
          {"witnesses", r.witnesses}};
}

}  // namespace fundreg
