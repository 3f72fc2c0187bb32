#ifndef SPRINGER_REPORT_HPP
#define SPRINGER_REPORT_HPP

// Serialization of verification reports and Green tables. JSON objects use
// sorted keys, and exact values are written as decimal strings, so parsing
// and re-dumping a report reproduces it byte for byte.

#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "springer/poly.hpp"
#include "springer/verify.hpp"

namespace springer {

enum class Format { Json, Csv, Text };

inline Format parse_format(const std::string& s) {
  if (s == "json") return Format::Json;
  if (s == "csv") return Format::Csv;
  if (s == "text") return Format::Text;
  throw std::invalid_argument("unknown format '" + s + "' (json, csv, text)");
}

inline nlohmann::json poly_to_json(const IntPolynomial& p) {
  auto arr = nlohmann::json::array();
  for (const auto& c : p.coefficients()) arr.push_back(c.get_str());
  if (arr.empty()) arr.push_back("0");
  return arr;
}

inline nlohmann::json to_json(const VerificationReport& r) {
  nlohmann::json j;
  j["check"] = r.check;
  j["config"] = r.config;
  j["status"] = r.pass ? "pass" : "fail";
  auto cex = nlohmann::json::array();
  for (const auto& c : r.counterexamples) cex.push_back({{"class", c.cls}, {"index", c.index}, {"lhs", c.lhs}, {"rhs", c.rhs}});
  j["counterexamples"] = std::move(cex);
  j["elapsed_ms"] = r.elapsed_ms;
  if (!r.notes.empty()) j["notes"] = r.notes;
  return j;
}

inline std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

inline void write_report(std::ostream& os, const std::vector<VerificationReport>& reports, Format f) {
  switch (f) {
    case Format::Json: {
      if (reports.size() == 1) {
        os << to_json(reports.front()).dump(2) << "\n";
      } else {
        auto arr = nlohmann::json::array();
        for (const auto& r : reports) arr.push_back(to_json(r));
        os << arr.dump(2) << "\n";
      }
      break;
    }
    case Format::Csv:
      os << "check,status,class,index,lhs,rhs\n";
      for (const auto& r : reports) {
        const std::string head = csv_field(r.check) + "," + (r.pass ? "pass" : "fail") + ",";
        if (r.counterexamples.empty()) os << head << ",,,\n";
        for (const auto& c : r.counterexamples)
          os << head << csv_field(c.cls) << "," << csv_field(c.index) << "," << csv_field(c.lhs) << "," << csv_field(c.rhs) << "\n";
      }
      break;
    case Format::Text:
      for (const auto& r : reports) {
        os << r.check << ": " << (r.pass ? "pass" : "FAIL") << " (" << r.elapsed_ms << " ms)\n";
        os << "  config:";
        for (const auto& [k, v] : r.config) os << " " << k << "=" << v;
        os << "\n";
        for (const auto& n : r.notes) os << "  note: " << n << "\n";
        for (const auto& c : r.counterexamples)
          os << "  counterexample: class " << c.cls << ", " << c.index << ": " << c.lhs << " != " << c.rhs << "\n";
      }
      break;
  }
}

}  // namespace springer

#endif  // SPRINGER_REPORT_HPP
