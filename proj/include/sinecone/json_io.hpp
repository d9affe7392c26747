#pragma once

#include <json.hpp>

#include "sinecone/exactreal.hpp"
#include "sinecone/spectra.hpp"

namespace sinecone {

using Json = nlohmann::ordered_json;

Json quad_to_json(const QuadReal& x);
// Accepts an integer, a "p/q" string, or {"a": .., "b": .., "s": ..}.
QuadReal quad_from_json(const Json& j);
// Command-line form: integer, "p/q", or QuadReal JSON text.
QuadReal parse_quad(std::string_view text);

Json spectrum_to_json(const Spectrum& s, bool with_origins = true);
Spectrum spectrum_from_json(const Json& lines, const QuadReal& cutoff);

Json geometric_to_json(const GeometricSpectrum& gs);
GeometricSpectrum geometric_from_json(const Json& j);

}  // namespace sinecone
