#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "negbeta/core.hpp"
#include "negbeta/measure.hpp"
#include "negbeta/ordering.hpp"
#include "negbeta/random_expansion.hpp"

namespace negbeta {

/// %.17g
std::string format_real(double v);

// nlohmann::json hooks (found by ADL). Digit words serialise as integer
// arrays, interval sets as lists of [lo, hi].
void to_json(nlohmann::json& j, const DigitWord& w);
void to_json(nlohmann::json& j, const Interval& iv);
void to_json(nlohmann::json& j, const IntervalSet& set);
void to_json(nlohmann::json& j, const AltVerdict& v);
void to_json(nlohmann::json& j, const AdmissibilityReport& r);
void to_json(nlohmann::json& j, const SupportResult& r);
void to_json(nlohmann::json& j, const DensityEstimate& d);
void to_json(nlohmann::json& j, const GreedyTrace& t);
void to_json(nlohmann::json& j, const GreedyWitness& w);
void to_json(nlohmann::json& j, const UniquenessResult& u);

void from_json(const nlohmann::json& j, DigitWord& w);
void from_json(const nlohmann::json& j, Interval& iv);
void from_json(const nlohmann::json& j, IntervalSet& set);

/// Header `bin_lo,bin_hi,density`, one row per bin.
void write_density_csv(std::ostream& os, const DensityEstimate& d);

}  // namespace negbeta
