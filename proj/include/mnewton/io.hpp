#pragma once

// JSON surfaces:
//   Matrix          {"n": <int>, "rows": [[...], ...]}
//   Polynomial      {"coeffs": [c_d, ..., c_0]}        (descending powers)
//   Spectrum        {"values": [[re, im], ...]}
//   GeneratorSpec   {"kind": "...", "n": <int>, "seed": <int>, "margin": <real>}
//   FormMatrix      {"n": .., "m": .., "kind": .., "entries": [[..]]}
// Parsers throw InputError naming the offending field.

#include <json.hpp>
#include <string>

#include "mnewton/charcoeff.hpp"
#include "mnewton/forms.hpp"
#include "mnewton/matrix.hpp"
#include "mnewton/mclass.hpp"
#include "mnewton/niep.hpp"
#include "mnewton/sfunc.hpp"
#include "mnewton/spectrum.hpp"

namespace mnewton::io {

using Json = nlohmann::ordered_json;

Json parse_json_text(const std::string& text, const std::string& source);
Json read_json_file(const std::string& path);

Matrix matrix_from_json(const Json& j);
Json to_json(const Matrix& a);

RealPoly poly_from_json(const Json& j);
Json to_json(const RealPoly& p);

Spectrum spectrum_from_json(const Json& j);
Json to_json(const Spectrum& s);

GeneratorSpec generator_spec_from_json(const Json& j);
Json to_json(const GeneratorSpec& g);

Json to_json(const FormMatrix& f);
Json to_json(const CoeffVector& c);
Json to_json(const NewtonReport& r);
Json to_json(const MatrixClassReport& r);
Json to_json(const MarginReport& r);
Json to_json(const ConditionResult& r);
Json to_json(const ScreeningReport& r);
Json to_json(const IndexSet& s);

}  // namespace mnewton::io
