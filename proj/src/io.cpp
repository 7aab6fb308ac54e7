#include "honeycomb/io.hpp"

#include <set>

namespace honeycomb::io {

namespace {

[[noreturn]] void fail(const std::string& what) { throw Error(ErrorCode::PARSE_ERROR, what); }

const Json& field(const Json& j, const char* key) {
  if (!j.is_object()) fail(std::string("expected an object with key '") + key + "'");
  auto it = j.find(key);
  if (it == j.end()) fail(std::string("missing key '") + key + "'");
  return *it;
}

int int_field(const Json& j, const char* key) {
  const Json& v = field(j, key);
  if (!v.is_number_integer()) fail(std::string("'") + key + "' must be an integer");
  return v.get<int>();
}

bool bool_field(const Json& j, const char* key) {
  const Json& v = field(j, key);
  if (!v.is_boolean()) fail(std::string("'") + key + "' must be a boolean");
  return v.get<bool>();
}

const Json& array_field(const Json& j, const char* key) {
  const Json& v = field(j, key);
  if (!v.is_array()) fail(std::string("'") + key + "' must be an array");
  return v;
}

std::vector<int> ints(const Json& j) {
  if (!j.is_array()) fail("expected an array of integers");
  std::vector<int> out;
  for (const auto& v : j) {
    if (!v.is_number_integer()) fail("expected an array of integers");
    out.push_back(v.get<int>());
  }
  return out;
}

std::string key_of(const HoneycombGraph& g, std::size_t e) { return g.edges().at(e).key; }

std::size_t edge_of(const HoneycombGraph& g, const Json& j) {
  if (!j.is_string()) fail("edge keys are strings");
  auto e = g.find_edge(j.get<std::string>());
  if (!e) fail("unknown edge key " + j.get<std::string>());
  return *e;
}

}  // namespace

Json to_json(const Rat& r) { return r.str(); }

Rat rat_from_json(const Json& j) {
  if (j.is_number_integer()) return Rat(j.get<long long>());
  if (!j.is_string()) fail("rationals are strings such as \"3/2\"");
  try {
    return Rat::parse(j.get<std::string>());
  } catch (const std::invalid_argument&) {
    fail("not a rational: " + j.get<std::string>());
  }
}

Json to_json(const Spectrum& s) {
  Json out = Json::array();
  for (const auto& v : s.values()) out.push_back(to_json(v));
  return out;
}

Spectrum spectrum_from_json(const Json& j) {
  if (!j.is_array()) fail("a spectrum is an array of rationals");
  std::vector<Rat> v;
  for (const auto& x : j) v.push_back(rat_from_json(x));
  return Spectrum(std::move(v));
}

Json to_json(const PointB& p) { return Json::array({to_json(p.x()), to_json(p.y()), to_json(p.z())}); }

PointB point_from_json(const Json& j) {
  if (!j.is_array() || j.size() != 3) fail("a point is an array of three rationals");
  const Rat x = rat_from_json(j[0]), y = rat_from_json(j[1]), z = rat_from_json(j[2]);
  if (!(x + y + z).is_zero()) fail("point coordinates must sum to zero");
  return PointB(x, y, z);
}

Json to_json(const Honeycomb& h) {
  Json coords = Json::object();
  const auto& g = h.graph();
  for (std::size_t e = 0; e < g.edges().size(); ++e) coords[g.edges()[e].key] = to_json(h.coord(e));
  return Json{{"n", h.n()}, {"coords", coords}};
}

Honeycomb honeycomb_from_json(const Json& j) {
  const int n = int_field(j, "n");
  if (n < 1 || n > 400) fail("n out of range");
  const Json& coords = field(j, "coords");
  if (!coords.is_object()) fail("'coords' must be an object");
  auto g = build_graph(n);
  if (coords.size() != g->edges().size()) fail("'coords' must name every edge exactly once");
  std::vector<Rat> c(g->edges().size());
  for (const auto& [key, value] : coords.items()) c[edge_of(*g, Json(key))] = rat_from_json(value);
  return Honeycomb(g, std::move(c));
}

Json to_json(const Diagram& d) {
  Json segs = Json::array(), rays = Json::array();
  for (const auto& s : d.segments)
    segs.push_back({{"start", to_json(s.start)}, {"end", to_json(s.end)}, {"multiplicity", s.multiplicity}});
  for (const auto& r : d.rays)
    rays.push_back({{"start", to_json(r.start)}, {"direction", std::string(to_string(r.direction))},
                    {"multiplicity", r.multiplicity}});
  return Json{{"segments", segs}, {"rays", rays}};
}

Diagram diagram_from_json(const Json& j) {
  Diagram d;
  for (const auto& s : array_field(j, "segments"))
    d.segments.push_back(Segment{point_from_json(field(s, "start")), point_from_json(field(s, "end")),
                                 int_field(s, "multiplicity")});
  for (const auto& r : array_field(j, "rays")) {
    const Json& dir = field(r, "direction");
    if (!dir.is_string()) fail("'direction' must be a string");
    Direction parsed;
    try {
      parsed = direction_from_string(dir.get<std::string>());
    } catch (const std::invalid_argument&) {
      fail("unknown direction " + dir.get<std::string>());
    }
    d.rays.push_back(Ray{point_from_json(field(r, "start")), parsed, int_field(r, "multiplicity")});
  }
  for (const auto& s : d.segments)
    if (s.multiplicity < 1) fail("multiplicities are positive");
  for (const auto& r : d.rays)
    if (r.multiplicity < 1) fail("multiplicities are positive");
  return d;
}

Json graph_to_json(const HoneycombGraph& g) {
  Json vertices = Json::array(), edges = Json::array(), hexagons = Json::array();
  for (const auto& v : g.vertices()) vertices.push_back({{"up", v.up}, {"a", v.a}, {"b", v.b}, {"c", v.c}});
  for (const auto& e : g.edges()) {
    Json je{{"key", e.key}, {"class", std::string(to_string(e.cls))}, {"up", e.up}};
    je["down"] = e.down ? Json(*e.down) : Json(nullptr);
    if (!e.internal()) {
      je["side"] = std::string(to_string(e.side));
      je["label"] = e.label;
    }
    edges.push_back(std::move(je));
  }
  for (const auto& h : g.hexagons()) {
    Json ke = Json::array();
    for (std::size_t e : h.edges) ke.push_back(key_of(g, e));
    hexagons.push_back({{"center", h.center}, {"edges", ke}});
  }
  return Json{{"n", g.n()},
              {"vertices", vertices},
              {"edges", edges},
              {"hexagons", hexagons},
              {"counts",
               {{"vertices", g.vertices().size()},
                {"internal_edges", g.internal_edges().size()},
                {"boundary_edges", g.boundary_edges().size()},
                {"hexagons", g.hexagons().size()}}}};
}

Json to_json(const SaturationReport& r) {
  return Json{{"feasible", r.feasible},
              {"integral_witness", r.integral_witness ? to_json(*r.integral_witness) : Json(nullptr)},
              {"agrees", r.agrees}};
}

SaturationReport saturation_from_json(const Json& j) {
  SaturationReport r;
  r.feasible = bool_field(j, "feasible");
  r.agrees = bool_field(j, "agrees");
  const Json& w = field(j, "integral_witness");
  if (!w.is_null()) r.integral_witness = honeycomb_from_json(w);
  r.integral = r.integral_witness.has_value();
  return r;
}

Json to_json(const LrReport& r) {
  Json w = Json::array();
  for (const auto& h : r.witnesses) w.push_back(to_json(h));
  return Json{{"multiplicity", r.multiplicity.get_str()}, {"witnesses", w}};
}

LrReport lr_report_from_json(const Json& j) {
  LrReport r;
  const Json& m = field(j, "multiplicity");
  if (!m.is_string()) fail("'multiplicity' is an integer string");
  try {
    r.multiplicity = BigInt(m.get<std::string>());
  } catch (const std::invalid_argument&) {
    fail("not an integer: " + m.get<std::string>());
  }
  if (r.multiplicity < 0) fail("multiplicity is negative");
  for (const auto& h : array_field(j, "witnesses")) r.witnesses.push_back(honeycomb_from_json(h));
  return r;
}

Json to_json(const HornInequality& h) {
  return Json{{"n", h.n},
              {"triple", {{"r", h.triple.r}, {"i", h.triple.i}, {"j", h.triple.j}, {"k", h.triple.k}}},
              {"lambda", h.lambda_indices()},
              {"mu", h.mu_indices()},
              {"nu", h.nu_indices()},
              {"text", h.str()}};
}

HornInequality horn_from_json(const Json& j) {
  HornInequality h;
  h.n = int_field(j, "n");
  const Json& t = field(j, "triple");
  h.triple.r = int_field(t, "r");
  h.triple.i = ints(field(t, "i"));
  h.triple.j = ints(field(t, "j"));
  h.triple.k = ints(field(t, "k"));
  const auto r = static_cast<std::size_t>(h.triple.r);
  if (h.triple.r < 1 || h.triple.r >= h.n || h.triple.i.size() != r || h.triple.j.size() != r || h.triple.k.size() != r)
    fail("malformed admissible triple");
  if (h.lambda_indices() != ints(field(j, "lambda")) || h.mu_indices() != ints(field(j, "mu")) ||
      h.nu_indices() != ints(field(j, "nu")))
    fail("index arrays do not match the triple");
  return h;
}

Json to_json(const FacetInequality& f) {
  return Json{{"n", f.n},
              {"lambda", f.lambda_indices},
              {"mu", f.mu_indices},
              {"nu", f.nu_indices},
              {"sum_nu", f.sum_nu_indices()},
              {"text", f.str()}};
}

FacetInequality facet_from_json(const Json& j) {
  FacetInequality f;
  f.n = int_field(j, "n");
  f.lambda_indices = ints(field(j, "lambda"));
  f.mu_indices = ints(field(j, "mu"));
  f.nu_indices = ints(field(j, "nu"));
  for (const auto* v : {&f.lambda_indices, &f.mu_indices, &f.nu_indices})
    for (int i : *v)
      if (i < 1 || i > f.n) fail("index out of range");
  return f;
}

Json overlay_to_json(const OverlayAnalysis& a, const HoneycombGraph& ga, const HoneycombGraph& gb) {
  Json list = Json::array();
  for (const auto& in : a.intersections)
    list.push_back({{"point", to_json(in.point)},
                    {"edge_a", key_of(ga, in.edge_a)},
                    {"edge_b", key_of(gb, in.edge_b)},
                    {"transverse", in.transverse},
                    {"turning", in.turning ? Json(std::string(to_string(*in.turning))) : Json(nullptr)}});
  return Json{{"verdict", std::string(to_string(a.verdict))}, {"intersections", list}};
}

OverlayAnalysis overlay_from_json(const Json& j, const HoneycombGraph& ga, const HoneycombGraph& gb) {
  OverlayAnalysis a;
  const Json& v = field(j, "verdict");
  bool known = false;
  for (auto cand : {OverlayVerdict::ALL_A_CW, OverlayVerdict::ALL_B_CW, OverlayVerdict::MIXED,
                    OverlayVerdict::NON_TRANSVERSE})
    if (v.is_string() && v.get<std::string>() == to_string(cand)) {
      a.verdict = cand;
      known = true;
    }
  if (!known) fail("unknown verdict");
  for (const auto& x : array_field(j, "intersections")) {
    Intersection in;
    in.point = point_from_json(field(x, "point"));
    in.edge_a = edge_of(ga, field(x, "edge_a"));
    in.edge_b = edge_of(gb, field(x, "edge_b"));
    in.transverse = bool_field(x, "transverse");
    const Json& t = field(x, "turning");
    if (t.is_string() && t.get<std::string>() == "A_CW_TO_B") {
      in.turning = Turning::A_CW_TO_B;
    } else if (t.is_string() && t.get<std::string>() == "B_CW_TO_A") {
      in.turning = Turning::B_CW_TO_A;
    } else if (!t.is_null()) {
      fail("unknown turning");
    }
    a.intersections.push_back(std::move(in));
  }
  return a;
}

Json to_json(const SampleReport& r) {
  Json v = Json::array();
  for (const auto& x : r.violations) v.push_back({{"nu", x.nu}, {"margin", x.margin}});
  return Json{{"trials", r.trials}, {"violations", v}, {"max_infeasibility_margin", r.max_infeasibility_margin}};
}

SampleReport sample_report_from_json(const Json& j) {
  SampleReport r;
  const Json& t = field(j, "trials");
  if (!t.is_number_unsigned()) fail("'trials' must be a nonnegative integer");
  r.trials = t.get<std::size_t>();
  const Json& m = field(j, "max_infeasibility_margin");
  if (!m.is_number()) fail("'max_infeasibility_margin' must be a number");
  r.max_infeasibility_margin = m.get<double>();
  for (const auto& x : array_field(j, "violations")) {
    Violation v;
    for (const auto& e : array_field(x, "nu")) {
      if (!e.is_number()) fail("sampled spectra are numbers");
      v.nu.push_back(e.get<double>());
    }
    const Json& mg = field(x, "margin");
    if (!mg.is_number()) fail("'margin' must be a number");
    v.margin = mg.get<double>();
    r.violations.push_back(std::move(v));
  }
  return r;
}

Json error_json(std::string_view code, std::string_view message) {
  return Json{{"code", std::string(code)}, {"message", std::string(message)}};
}

}  // namespace honeycomb::io
