#pragma once

#include <json.hpp>

#include "uzalc/certify.hpp"
#include "uzalc/search.hpp"

namespace uzalc {

/// JSON shapes used by the command-line tool and the persistence layer.
/// Complex numbers are [re, im] pairs; floats rely on the serializer's
/// round-trip-exact formatting, so reloading reproduces bit-identical values.

nlohmann::json complex_to_json(const Complex& z);
Complex complex_from_json(const nlohmann::json& j);

nlohmann::json certificate_to_json(const Certificate& cert);
nlohmann::json positivity_to_json(const PositivityCertificate& cert);
nlohmann::json edge_report_to_json(const EdgeReport& rep);

nlohmann::json record_to_json(const BestRecord& rec);
BestRecord record_from_json(const nlohmann::json& j);

/// Feasible-sample line for the sampling stream: parameters, margin, pole
/// verdict, and the excess of every proven functional on the sample.
nlohmann::json sample_to_json(const Sample& s);

}  // namespace uzalc
