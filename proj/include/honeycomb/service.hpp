#pragma once

// The HTTP API as a pure function from request to response; the server in
// tools/ only moves bytes. Spectra in requests use the sum convention
// (lam (+) mu ~ nu) unless a request says "convention": "triple".
//
//   POST /api/feasible  {"lam","mu","nu"}            -> {"feasible": bool}
//   POST /api/lrcoeff   {"lam","mu","nu","witnesses"?} -> {"multiplicity","witnesses"}
//   POST /api/lift      {"lam","mu","nu","seed"?}     -> honeycomb, or {"feasible": false}
//   POST /api/breathe   {"honeycomb","hexagon","t"}   -> {"honeycomb","min_t","max_t"},
//                                                        or {"error": "OUT_OF_CONE", "max_t", "blocking_edge"}
//   POST /api/render    {"honeycomb" | "honeycombs" | "diagram" | "diagrams", "origin"?} -> SVG
//   GET  /api/graph?n=  -> topology with counts
//
// Malformed input gives 400, unknown routes 404, broken internal invariants
// 500; error bodies are {"code", "message"}.

#include <map>
#include <string>
#include <string_view>

namespace honeycomb {

struct HttpResponse {
  int status = 200;
  std::string content_type = "application/json";
  std::string body;
};

HttpResponse handle_api(std::string_view method, std::string_view path,
                        const std::map<std::string, std::string>& query, std::string_view body);

}  // namespace honeycomb
