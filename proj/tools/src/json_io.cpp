#include "demj/cli/json_io.hpp"

#include <chrono>
#include <ctime>
#include <stdexcept>

#ifndef DEMJ_VERSION
#define DEMJ_VERSION "unknown"
#endif

namespace demj::cli {

json to_json(const Rational& q) { return {{"num", to_string(BigInt(q.get_num()))}, {"den", to_string(BigInt(q.get_den()))}}; }

json to_json(const BigInt& n) { return to_string(n); }

json to_json(const RationalPoint& p) { return json::array({to_json(p.x), to_json(p.y)}); }

json to_json(const ECPoint& p) {
  if (p.is_infinity()) return "infinity";
  return json::array({to_json(p.x()), to_json(p.y())});
}

json to_json(const std::set<RationalPoint>& pts) {
  json a = json::array();
  for (const auto& p : pts) a.push_back(to_json(p));
  return a;
}

json to_json(const PointCertificate& c) {
  return {{"points", to_json(c.points)},
          {"index_bound", c.index_bound},
          {"n_window", c.n_window},
          {"enumerated_window", c.enumerated_window},
          {"conditional_on", c.conditional_on},
          {"method", c.method}};
}

json to_json(const ScanEvidence& e) {
  return {{"d", e.d},
          {"num_cap", e.num_cap},
          {"den_cap", e.den_cap},
          {"candidates", e.candidates},
          {"inside", to_json(e.inside)},
          {"exceptional", to_json(e.exceptional)}};
}

json to_json(const ChebCertificate& c) {
  json j{{"d", c.d}, {"case", c.case_tag}, {"proven", c.proven}, {"certificate", to_json(c.cert)}};
  j["evidence"] = c.evidence ? to_json(*c.evidence) : json(nullptr);
  return j;
}

json to_json(const LocalReport& r) {
  json j{{"place", r.place == 0 ? json("infinity") : json(r.place)},
         {"status", to_string(r.status)},
         {"method", to_string(r.method)},
         {"witness", r.witness}};
  if (r.count) j["count"] = *r.count;
  return j;
}

json to_json(const LocalSolvability& s) {
  json reports = json::array();
  for (const auto& r : s.reports) reports.push_back(to_json(r));
  return {{"solvable", s.solvable}, {"undetermined", s.undetermined}, {"places", reports}};
}

json to_json(const RootNumberReport& r) {
  return {{"p", r.p},         {"W2", r.W2}, {"Wp", r.Wp}, {"W", r.W}, {"kodaira_at_p", r.kodaira_at_p},
          {"kodaira_at_2", r.kodaira_at_2}, {"c4", to_json(r.c4)}, {"c6", to_json(r.c6)}};
}

json to_json(const SelmerReport& r) {
  json sel = json::array(), dual = json::array();
  for (const auto& d : r.selmer) sel.push_back(to_json(d));
  for (const auto& d : r.dual_selmer) dual.push_back(to_json(d));
  return {{"p", r.p}, {"selmer", sel},     {"dual_selmer", dual},
          {"s", r.s}, {"s_dual", r.s_dual}, {"bound", r.bound}, {"undetermined", r.undetermined}};
}

json to_json(const HasseVerdict& v) {
  return {{"p", v.p},
          {"congruence_ok", v.congruence_ok},
          {"locally_solvable", v.locally_solvable},
          {"local_undetermined", v.local_undetermined},
          {"root_number", v.root_number},
          {"selmer_bound", v.selmer_bound},
          {"conditional_rank_one", v.conditional_rank_one},
          {"above_threshold", v.above_threshold},
          {"verdict", v.verdict},
          {"assumptions", v.assumptions}};
}

Rational rational_from_json(const json& j) {
  if (!j.is_object() || !j.contains("num") || !j.contains("den"))
    throw std::invalid_argument("rational must be an object with num and den");
  Rational q = make_rational(parse_integer(j.at("num").get<std::string>()), parse_integer(j.at("den").get<std::string>()));
  if (q.get_num() != parse_integer(j.at("num").get<std::string>()))
    throw std::invalid_argument("rational is not in lowest terms");
  return q;
}

RationalPoint point_from_json(const json& j) {
  if (!j.is_array() || j.size() != 2) throw std::invalid_argument("point must be a pair");
  return {rational_from_json(j[0]), rational_from_json(j[1])};
}

std::set<RationalPoint> points_from_json(const json& j) {
  std::set<RationalPoint> out;
  for (const auto& p : j) out.insert(point_from_json(p));
  return out;
}

PointCertificate certificate_from_json(const json& j) {
  PointCertificate c;
  c.points = points_from_json(j.at("points"));
  c.index_bound = j.at("index_bound").get<long>();
  c.n_window = j.at("n_window").get<long>();
  c.enumerated_window = j.at("enumerated_window").get<long>();
  c.conditional_on = j.at("conditional_on").get<std::vector<std::string>>();
  c.method = j.at("method").get<std::string>();
  return c;
}

json to_json(const ResultEnvelope& e) {
  return {{"command", e.command},
          {"inputs", e.inputs},
          {"payload", e.payload},
          {"assumptions", e.assumptions},
          {"toolkit_version", e.toolkit_version},
          {"timestamp", e.timestamp}};
}

ResultEnvelope envelope_from_json(const json& j) {
  ResultEnvelope e;
  e.command = j.at("command").get<std::string>();
  e.inputs = j.at("inputs").get<std::string>();
  e.payload = j.at("payload");
  e.assumptions = j.at("assumptions").get<std::vector<std::string>>();
  e.toolkit_version = j.at("toolkit_version").get<std::string>();
  e.timestamp = j.at("timestamp").get<std::string>();
  return e;
}

std::string toolkit_version() { return DEMJ_VERSION; }

std::string utc_timestamp() {
  std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

}  // namespace demj::cli
