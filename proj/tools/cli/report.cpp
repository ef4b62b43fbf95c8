#include "report.hpp"

#include <cmath>
#include <stdexcept>

namespace biinterval::cli {

namespace {

Json finite_or_null(double x) { return std::isfinite(x) ? Json(x) : Json(nullptr); }

Json intervals(const std::vector<RationalInterval>& ivs) {
  Json out = Json::array();
  for (const auto& iv : ivs) out.push_back(to_json(iv));
  return out;
}

Json candidate(const ZeroCandidate& c) { return {{"location", c.location}, {"min_modulus", c.min_modulus}}; }

}  // namespace

Json to_json(const Rational& q) { return q.str(); }

Json to_json(const RationalInterval& iv) { return Json::array({iv.lo.str(), iv.hi.str()}); }

Json to_json(const BiIntervalRegion& region) {
  return {{"r", to_json(region.r())},
          {"a", to_json(region.a())},
          {"intervals", Json::array({to_json(region.first_interval()), to_json(region.second_interval())})}};
}

Json to_json(const AffineMap& map) {
  return {{"scale", to_json(map.scale)}, {"shift", to_json(map.shift)}, {"reflected", map.reflected}};
}

Json to_json(const Classification& c) {
  return {{"case_i", c.case_i},
          {"case_ii_n", c.case_ii_n ? Json(*c.case_ii_n) : Json(nullptr)},
          {"admissible", c.admits_any()}};
}

Json to_json(const ZeroClass& z) {
  return {{"in_z1", z.in_z1}, {"in_z2", z.in_z2}, {"in_z3", z.in_z3}, {"is_zero", z.is_zero}};
}

Json to_json(const SpectrumSpec& spec) {
  if (spec.kind() == SpectrumSpec::Kind::Lattice) return {{"kind", "lattice"}, {"description", "Z"}};
  return {{"kind", "half_integer"},
          {"n", spec.n()},
          {"p", spec.p()},
          {"offset", to_json(spec.offset())},
          {"description", "2Z U (" + spec.offset().str() + " + 2Z)"}};
}

Json to_json(const TilingSpec& tiling) {
  Json res = Json::array();
  for (const auto& c : tiling.residues) res.push_back(to_json(c));
  return {{"period", to_json(tiling.period)}, {"residues", res}};
}

Json to_json(const CoverageReport& rep) {
  return {{"window", to_json(rep.window)},
          {"exact_cover", rep.exact_cover},
          {"gaps", intervals(rep.gaps)},
          {"overlaps", intervals(rep.overlaps)}};
}

Json to_json(const ParsevalReport& rep) {
  return {{"target", to_json(rep.target)},
          {"partial_sum", rep.partial_sum},
          {"exact_match_present", rep.exact_match_present},
          {"match_is_approximate", rep.match_is_approximate},
          {"tail_bound", finite_or_null(rep.tail_bound)},
          {"defect", rep.defect},
          {"truncation_K", rep.truncation_K},
          {"within_tail_bound", rep.defect <= rep.tail_bound}};
}

Json to_json(const STildeResult& res) {
  return {{"partial", res.partial},
          {"tail_bound", res.tail_bound},
          {"deviation", std::abs(res.partial - 1.0)},
          {"within_tail_bound", std::abs(res.partial - 1.0) <= res.tail_bound}};
}

Json to_json(const AlternationResult& res) {
  Json j = {{"alternates", res.alternates}, {"violation", nullptr}};
  if (res.violation) {
    const auto& [x, y] = *res.violation;
    j["violation"] = Json::array({to_json(x.span), to_json(y.span)});
  }
  return j;
}

Json to_json(const ZeroScanReport& rep) {
  Json matched = Json::array();
  for (const auto& m : rep.matched) {
    matched.push_back({{"zero", to_json(m.zero)}, {"location", m.candidate.location},
                       {"min_modulus", m.candidate.min_modulus}});
  }
  Json stray = Json::array();
  for (const auto& c : rep.unmatched_candidates) stray.push_back(candidate(c));
  Json missing = Json::array();
  for (const auto& z : rep.unmatched_predictions) missing.push_back(to_json(z));
  return {{"window", Json::array({rep.lo, rep.hi})},
          {"step", rep.step},
          {"candidate_count", rep.candidates.size()},
          {"matched", matched},
          {"unmatched_candidates", stray},
          {"unmatched_predictions", missing},
          {"pass", rep.pass()}};
}

Json to_json(const OrthogonalityReport& rep) {
  Json j = {{"pass", rep.pass}, {"pairs_checked", rep.pairs_checked}, {"first_failure", nullptr}};
  if (rep.first_failure) {
    j["first_failure"] = Json::array({to_json(rep.first_failure->first), to_json(rep.first_failure->second)});
  }
  return j;
}

Rational rational_from_json(const Json& j) {
  if (!j.is_string()) throw std::invalid_argument("expected a rational literal string");
  auto q = Rational::parse(j.get<std::string>());
  if (!q) throw std::invalid_argument("malformed rational literal '" + j.get<std::string>() + "'");
  return *q;
}

TilingSpec tiling_from_json(const Json& j) {
  std::vector<Rational> residues;
  for (const auto& c : j.at("residues")) residues.push_back(rational_from_json(c));
  return TilingSpec::make(rational_from_json(j.at("period")), std::move(residues));
}

std::string serialize(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace biinterval::cli
