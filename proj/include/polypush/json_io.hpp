#pragma once

#include "polypush/measure.hpp"
#include "polypush/pushout.hpp"

#include <string>

namespace polypush {

struct LoadedComplex {
    SimplicialComplex complex;
    BuildReport report;
};

// Complex JSON: {"vertices": [[x,y,...],...], "simplices": [[i,j,...],...],
// "Q": [simplex indices]}. Faces are auto-closed on load; indices 0-based.
LoadedComplex complex_from_json(const std::string& text);
LoadedComplex complex_from_file(const std::string& path);
std::string complex_to_json(const SimplicialComplex& cx);

// SetModel JSON: {"a": x, "samples": [{"point": [...], "carrier": id,
// "weight": w}], "full": [ids]}. Carrier ids refer to the canonical simplex
// order written by complex_to_json.
SetModel set_model_from_json(const std::string& text, const SimplicialComplex& cx);
SetModel set_model_from_file(const std::string& path, const SimplicialComplex& cx);
std::string set_model_to_json(const SetModel& sm);

std::string transport_to_json(const TransportMap& G);
std::string constants_to_json(const ConstantsBundle& kc);
std::string measure_to_json(const MeasureEstimate& est);
std::string validation_to_json(const ValidationReport& rep, const BuildReport& build);
std::string run_stats_to_json(const RunStats& stats);
std::string retract_to_json(const RetractChain& chain);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

}  // namespace polypush
