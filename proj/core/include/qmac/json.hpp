// JSON encodings shared by the library and the command-line tool.
#pragma once

#include "qmac/series.hpp"

#include <json.hpp>

namespace qmac {

using Json = nlohmann::ordered_json;

/// Integers that fit in 64 bits become JSON numbers, everything else a string,
/// so no value is ever rendered in floating point.
Json exact_json(const Integer& x);
Json exact_json(const Rational& x);

/// {ring, modulus?, precision, coeffs}
Json to_json(const QSeries& f);
Json to_json(const ModSeries& f);

/// Accepts both encodings; the ring field decides which alternative is filled.
QSeries qseries_from_json(const Json& j);
ModSeries modseries_from_json(const Json& j);

}  // namespace qmac
