#pragma once

#include <ostream>
#include <string>

#include <json.hpp>

#include "poincare/bounds.hpp"
#include "poincare/constant.hpp"
#include "poincare/dist.hpp"
#include "poincare/sa.hpp"

namespace poincare::io {

using nlohmann::json;

/// {"family": ..., "location": ..., "scale": ..., "truncation": [lo, hi]}
/// with null for an infinite side. location defaults to 0, scale to 1.
/// ArgumentError on malformed input or unknown keys.
DistributionSpec spec_from_json(const json& j);
DistributionSpec parse_spec(const std::string& text);
/// Exact (round-trippable) JSON form of a spec.
json spec_to_json(const DistributionSpec& d);

/// Rounds to `digits` significant digits (identity for digits <= 0 or non-finite x).
double round_sig(double x, int digits);

json bound_to_json(const bounds::BoundReport& r, int digits);
json constant_to_json(const DistributionSpec& d, const ConstantReport& r, int digits);
json screening_to_json(const sa::ScreeningReport& r, int digits);

/// One row per input; header
/// name,nu,nu_sd,total_sobol,sobol_sd,poincare,upper_bound,bound_sd,active
void write_screening_csv(std::ostream& os, const sa::ScreeningReport& r, int digits);

/// Number formatted with `digits` significant digits; "inf"/"-inf"/"nan" for non-finite values.
std::string format_number(double x, int digits);

}  // namespace poincare::io
