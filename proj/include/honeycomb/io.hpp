#pragma once

// JSON forms of every value the tools exchange. Rationals are strings "p/q"
// (or "p"); parsers accept the same and throw Error(PARSE_ERROR) on anything
// else, including missing keys and wrong types.

#include <string>
#include <vector>

#include <json.hpp>

#include "honeycomb/feasibility.hpp"
#include "honeycomb/honeycomb.hpp"
#include "honeycomb/horn.hpp"
#include "honeycomb/overlay.hpp"
#include "honeycomb/spectral.hpp"
#include "honeycomb/spectrum.hpp"

namespace honeycomb::io {

using Json = nlohmann::json;

Json to_json(const Rat& r);
Rat rat_from_json(const Json& j);

Json to_json(const Spectrum& s);
Spectrum spectrum_from_json(const Json& j);

Json to_json(const PointB& p);
PointB point_from_json(const Json& j);

/// {"n": n, "coords": {edge key: "p/q"}}.
Json to_json(const Honeycomb& h);
Honeycomb honeycomb_from_json(const Json& j);

/// {"segments": [{"start", "end", "multiplicity"}], "rays": [{"start", "direction", "multiplicity"}]}.
Json to_json(const Diagram& d);
Diagram diagram_from_json(const Json& j);

/// Vertices, edges, hexagons and their counts.
Json graph_to_json(const HoneycombGraph& g);

/// {"feasible", "integral_witness": honeycomb or null, "agrees"}.
Json to_json(const SaturationReport& r);
SaturationReport saturation_from_json(const Json& j);

struct LrReport {
  BigInt multiplicity;
  std::vector<Honeycomb> witnesses;
  friend bool operator==(const LrReport&, const LrReport&) = default;
};
/// {"multiplicity": "integer", "witnesses": [honeycomb, ...]}.
Json to_json(const LrReport& r);
LrReport lr_report_from_json(const Json& j);

/// {"n", "lambda": [...], "mu": [...], "nu": [...], "text"}; index arrays are
/// 1-based. Horn inequalities also carry their admissible triple.
Json to_json(const HornInequality& h);
HornInequality horn_from_json(const Json& j);
Json to_json(const FacetInequality& f);
FacetInequality facet_from_json(const Json& j);

/// Edges are named by their keys in the two honeycombs' graphs.
Json overlay_to_json(const OverlayAnalysis& a, const HoneycombGraph& ga, const HoneycombGraph& gb);
OverlayAnalysis overlay_from_json(const Json& j, const HoneycombGraph& ga, const HoneycombGraph& gb);

Json to_json(const SampleReport& r);
SampleReport sample_report_from_json(const Json& j);

/// {"code", "message"}.
Json error_json(std::string_view code, std::string_view message);

}  // namespace honeycomb::io
