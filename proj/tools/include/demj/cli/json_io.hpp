#pragma once

// JSON forms of the toolkit's records. Rationals are {"num": "...", "den": "..."}
// with decimal strings so values of any size survive a round trip.

#include "demj/demjanenko.hpp"
#include "demj/descent.hpp"
#include "demj/dynamics.hpp"
#include "demj/localglobal.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace demj::cli {

using nlohmann::json;

json to_json(const Rational& q);
json to_json(const BigInt& n);
json to_json(const RationalPoint& p);
json to_json(const ECPoint& p);
json to_json(const std::set<RationalPoint>& pts);
json to_json(const PointCertificate& c);
json to_json(const ScanEvidence& e);
json to_json(const ChebCertificate& c);
json to_json(const LocalReport& r);
json to_json(const LocalSolvability& s);
json to_json(const RootNumberReport& r);
json to_json(const SelmerReport& r);
json to_json(const HasseVerdict& v);

Rational rational_from_json(const json& j);
RationalPoint point_from_json(const json& j);
std::set<RationalPoint> points_from_json(const json& j);
PointCertificate certificate_from_json(const json& j);

struct ResultEnvelope {
  std::string command;
  std::string inputs;
  json payload;
  std::vector<std::string> assumptions;
  std::string toolkit_version;
  std::string timestamp;
};

json to_json(const ResultEnvelope& e);
ResultEnvelope envelope_from_json(const json& j);

std::string toolkit_version();
/// UTC, ISO 8601 to the second.
std::string utc_timestamp();

}  // namespace demj::cli
