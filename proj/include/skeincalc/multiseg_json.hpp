#pragma once

#include <string>

#include <json.hpp>

#include "skeincalc/bigint.hpp"
#include "skeincalc/errors.hpp"
#include "skeincalc/multiseg.hpp"

namespace skeincalc {

/// Numbers above 2^53 are serialized as decimal strings so JSON consumers
/// that parse into doubles cannot silently lose precision.
inline nlohmann::json bigint_to_json(const BigInt& v) {
  static const BigInt kDoubleExactBound = BigInt(1LL << 53);
  if (v.abs() <= kDoubleExactBound) return nlohmann::json(v.to_int64());
  return nlohmann::json(v.to_string());
}

namespace multiseg {

inline nlohmann::json to_json(const SlopeK& k) {
  return {{"n0", k.n0}, {"N0", k.N0}};
}

inline nlohmann::json to_json(const Multisegment& ms) {
  nlohmann::json segs = nlohmann::json::array();
  for (const Segment& s : ms.segments())
    segs.push_back({{"line", s.start.line}, {"z", s.start.z}, {"len", s.len}});
  return {{"slope", to_json(ms.slope())}, {"segments", segs}};
}

inline SlopeK slope_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("n0") || !j.contains("N0"))
    throw input_error("slope JSON must carry integer fields n0 and N0");
  if (!j.at("n0").is_number_integer() || !j.at("N0").is_number_integer())
    throw input_error("slope fields n0 and N0 must be integers");
  return SlopeK(j.at("n0").get<long long>(), j.at("N0").get<long long>());
}

inline Multisegment multisegment_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("slope") || !j.contains("segments"))
    throw input_error("multisegment JSON must carry slope and segments");
  SlopeK slope = slope_from_json(j.at("slope"));
  if (!j.at("segments").is_array())
    throw input_error("multisegment segments must be an array");
  std::vector<Segment> segs;
  for (const auto& js : j.at("segments")) {
    if (!js.is_object() || !js.contains("line") || !js.contains("z") || !js.contains("len"))
      throw input_error("segment JSON must carry line, z and len");
    if (!js.at("line").is_string() || !js.at("z").is_number_integer() ||
        !js.at("len").is_number_integer())
      throw input_error("segment fields have the wrong types");
    long long len = js.at("len").get<long long>();
    if (len < 0) throw input_error("segment len must be nonnegative");
    segs.push_back({Start{js.at("line").get<std::string>(), js.at("z").get<long long>()}, len});
  }
  return Multisegment(slope, std::move(segs));
}

inline nlohmann::json to_json(const SurvivalCertificate& cert) {
  nlohmann::json shifts = nlohmann::json::array();
  for (const ShiftRecord& s : cert.shifts)
    shifts.push_back({{"stage", s.stage}, {"line", s.line}, {"count", s.count}});
  nlohmann::json facts = nlohmann::json::array();
  for (const CertFact& f : cert.facts) facts.push_back({{"name", f.name}, {"holds", f.holds}});
  return {{"input", to_json(cert.input)},
          {"m", cert.m},
          {"j", cert.j},
          {"shifts", shifts},
          {"gamma", to_json(cert.gamma)},
          {"a_part", to_json(cert.a_part)},
          {"b_part", to_json(cert.b_part)},
          {"alpha", cert.alpha.parts()},
          {"beta", cert.beta.parts()},
          {"lambda", cert.lambda.parts()},
          {"dominance_facts", facts},
          {"verdict", cert.valid ? "valid" : "refuted"}};
}

}  // namespace multiseg
}  // namespace skeincalc
