#include "vsft/report.hpp"

#include <json.hpp>

#include <cstdio>
#include <sstream>

namespace vsft {

using Json = nlohmann::ordered_json;

namespace {

Json exponent_json(const ExponentVector& e) {
  Json a = Json::array();
  for (const auto& r : e.dense()) a.push_back(r.to_string());
  return a;
}

Json witness_json(const Witness& w) {
  Json j;
  j["k"] = w.k;
  if (!w.factors.empty()) j["factors"] = w.factors;
  if (w.exponent) j["exponent"] = exponent_json(*w.exponent);
  j["rendered"] = w.rendered;
  return j;
}

std::string format_ms(double ms) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", ms);
  return buf;
}

}  // namespace

std::string to_machine_line(const ReportLine& line, bool include_timing) {
  const auto& r = line.report;
  Json j;
  j["schema"] = kReportSchema;
  j["claim"] = r.claim_id;
  j["check"] = r.check;
  j["verdict"] = to_string(r.verdict);
  if (!r.qualifier.empty()) j["qualifier"] = r.qualifier;
  j["expected"] = line.expected;
  j["as_expected"] = line.as_expected;
  if (r.certificate) {
    Json c;
    c["kind"] = to_string(r.certificate->kind);
    c["parameters"] = Json::object();
    for (const auto& [k, v] : r.certificate->parameters) c["parameters"][k] = v;
    j["certificate"] = c;
  }
  if (!r.witnesses.empty()) {
    Json ws = Json::array();
    for (const auto& w : r.witnesses) ws.push_back(witness_json(w));
    j["witnesses"] = ws;
  }
  if (r.index) j["index"] = *r.index;
  if (!r.table.empty()) {
    Json t = Json::array();
    for (const auto& [v, n] : r.table) t.push_back({v, n ? Json(*n) : Json(nullptr)});
    j["table"] = t;
  }
  if (!r.details.empty()) {
    j["details"] = Json::object();
    for (const auto& [k, v] : r.details) j["details"][k] = v;
  }
  j["truncation"] = Json::object();
  for (const auto& [k, v] : r.truncation) j["truncation"][k] = v;
  j["seed"] = r.seed;
  j["samples"] = r.samples;
  j["budget"] = {{"search_nodes", r.consumed.search_nodes}, {"products", r.consumed.products}};
  if (!r.note.empty()) j["note"] = r.note;
  if (include_timing) j["timing"] = {{"wall_ms", std::stod(format_ms(line.wall_ms))}};
  return j.dump();
}

std::string to_text(const ReportLine& line) {
  const auto& r = line.report;
  std::ostringstream os;
  os << (line.as_expected ? "ok   " : "FAIL ") << r.claim_id << "  " << to_string(r.verdict);
  if (!r.qualifier.empty()) os << " (" << r.qualifier << ")";
  if (!line.as_expected) os << "  [expected " << line.expected << "]";
  if (r.certificate) os << "  certificate " << to_string(r.certificate->kind);
  if (r.index) os << "  index " << *r.index;
  os << "\n";
  for (const auto& w : r.witnesses) {
    os << "       witness";
    if (w.k) os << " k=" << w.k;
    os << ": " << w.rendered << "\n";
  }
  if (!r.table.empty()) {
    os << "       table:";
    for (const auto& [v, n] : r.table) os << " " << v << "->" << (n ? std::to_string(*n) : std::string("?"));
    os << "\n";
  }
  for (const auto& [k, v] : r.details) os << "       " << k << " = " << v << "\n";
  if (!r.note.empty()) os << "       note: " << r.note << "\n";
  return os.str();
}

}  // namespace vsft
