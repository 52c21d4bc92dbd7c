#pragma once

#include <string>

#include "json.hpp"

#include "szj/geronimus.hpp"
#include "szj/measures.hpp"
#include "szj/opuc.hpp"

namespace szj {

using json = nlohmann::json;

// Wire schemas:
//   DecaySeq        {"offset": int, "values": [real]}
//   VerblunskySeq   {"alpha": [real], "alpha_minus1": -1.0}
//   JacobiParams    {"a": [real], "b": [real]}
//   measures        {"kind": "circle"|"interval", "grid_size": int,
//                    "weight": [real], "masses": [[pos, m], ...]}
// Parsing throws SchemaError on malformed or type-violating input.

json to_json(const DecaySeq& s);
DecaySeq decay_seq_from_json(const json& j);

json to_json(const VerblunskySeq& a);
VerblunskySeq verblunsky_from_json(const json& j);

json to_json(const JacobiParams& jp);
JacobiParams jacobi_from_json(const json& j);

json to_json(const CircleMeasure& mu);
json to_json(const IntervalMeasure& nu);
CircleMeasure circle_measure_from_json(const json& j);
IntervalMeasure interval_measure_from_json(const json& j);

json to_json(const FourierSeries& f);

json to_json(const GiBaxterReport& rep);

json parse_file(const std::string& path);
void write_file(const std::string& path, const json& j);

} // namespace szj
