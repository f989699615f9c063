#include "leibniz/report.hpp"

#include <sstream>

#include <json.hpp>

#include "leibniz/field.hpp"

namespace leibniz {

ReportFormat parse_format(const std::string &name) {
  if (name == "json")
    return ReportFormat::Json;
  if (name == "csv")
    return ReportFormat::Csv;
  if (name == "text")
    return ReportFormat::Text;
  throw parse_error("unknown format '" + name + "' (json|csv|text)");
}

std::string emit_report(const VerificationReport &r, ReportFormat format,
                        long runtime_ms) {
  if (format == ReportFormat::Json) {
    nlohmann::ordered_json j;
    j["algebra"] = r.algebra;
    j["field"] = r.field;
    if (r.alpha.empty())
      j["alpha"] = nullptr;
    else
      j["alpha"] = r.alpha;
    j["checks"] = nlohmann::ordered_json::array();
    for (auto &c : r.checks) {
      nlohmann::ordered_json jc;
      jc["name"] = c.name;
      auto md = nlohmann::ordered_json::array();
      for (auto &[v, m] : c.multidegree)
        md.push_back({v, m});
      jc["multidegree"] = md;
      jc["expected"] = c.expected;
      jc["computed"] = c.computed;
      jc["pass"] = c.pass;
      j["checks"].push_back(jc);
    }
    j["overall"] = r.overall();
    j["runtime_ms"] = runtime_ms;
    return j.dump(2) + "\n";
  }
  if (format == ReportFormat::Csv) {
    std::ostringstream out;
    out << "algebra,field,alpha,check,multidegree,expected,computed,pass\n";
    auto quote = [](const std::string &s) {
      std::string q = "\"";
      for (char c : s) {
        if (c == '"')
          q += "\"\"";
        q += c;
      }
      return q + "\"";
    };
    for (auto &c : r.checks) {
      out << quote(r.algebra) << ',' << quote(r.field) << ','
          << quote(r.alpha) << ',' << quote(c.name) << ','
          << quote(multidegree_to_string(c.multidegree)) << ','
          << quote(c.expected) << ',' << quote(c.computed) << ','
          << (c.pass ? "true" : "false") << '\n';
    }
    return out.str();
  }
  std::ostringstream out;
  out << "algebra " << r.algebra << " over " << r.field;
  if (!r.alpha.empty())
    out << " (alpha = " << r.alpha << ")";
  out << "\n";
  for (auto &c : r.checks) {
    out << "  [" << (c.pass ? "pass" : "FAIL") << "] " << c.name;
    if (!c.multidegree.empty())
      out << " at " << multidegree_to_string(c.multidegree);
    out << ": expected " << c.expected << ", computed " << c.computed << "\n";
  }
  out << (r.overall() ? "overall: pass" : "overall: FAIL") << "\n";
  return out.str();
}

} // namespace leibniz
