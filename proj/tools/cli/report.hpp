#pragma once

#include "json.hpp"

#include "biinterval/fourier.hpp"
#include "biinterval/region.hpp"
#include "biinterval/spectra.hpp"
#include "biinterval/tiling.hpp"
#include "biinterval/verify.hpp"

namespace biinterval::cli {

/// Version tag written at the top of every JSON document.
inline constexpr const char* kSchema = "biinterval/1";

using Json = nlohmann::json;

Json to_json(const Rational& q);
Json to_json(const RationalInterval& iv);
Json to_json(const BiIntervalRegion& region);
Json to_json(const AffineMap& map);
Json to_json(const Classification& c);
Json to_json(const ZeroClass& z);
Json to_json(const SpectrumSpec& spec);
Json to_json(const TilingSpec& tiling);
Json to_json(const CoverageReport& rep);
Json to_json(const ParsevalReport& rep);
Json to_json(const STildeResult& res);
Json to_json(const AlternationResult& res);
Json to_json(const ZeroScanReport& rep);
Json to_json(const OrthogonalityReport& rep);

/// Parses "p/q" strings back; throws std::invalid_argument on malformed input.
Rational rational_from_json(const Json& j);
TilingSpec tiling_from_json(const Json& j);

/// Canonical text form: two-space indent, keys sorted, trailing newline.
std::string serialize(const Json& j);

}  // namespace biinterval::cli
