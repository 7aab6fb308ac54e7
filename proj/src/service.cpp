#include "honeycomb/service.hpp"

#include "honeycomb/feasibility.hpp"
#include "honeycomb/io.hpp"
#include "honeycomb/lattice.hpp"
#include "honeycomb/render.hpp"

namespace honeycomb {

namespace {

using io::Json;

struct Triple {
  Spectrum lam, mu, nu;  // triple convention
};

Triple triple_from(const Json& req) {
  Triple t{io::spectrum_from_json(req.at("lam")), io::spectrum_from_json(req.at("mu")),
           io::spectrum_from_json(req.at("nu"))};
  require_same_size(t.lam, t.mu, t.nu);
  const std::string conv = req.value("convention", std::string("sum"));
  if (conv == "sum") {
    t.nu = t.nu.negated();
  } else if (conv != "triple") {
    throw Error(ErrorCode::PARSE_ERROR, "convention is \"sum\" or \"triple\"");
  }
  return t;
}

HttpResponse json_response(int status, const Json& j) { return {status, "application/json", j.dump()}; }

HttpResponse feasible(const Json& req) {
  const auto t = triple_from(req);
  return json_response(200, {{"feasible", decide_triple(t.lam, t.mu, t.nu)}});
}

HttpResponse lrcoeff(const Json& req) {
  const auto t = triple_from(req);
  io::LrReport rep;
  rep.multiplicity = count_integral_triple(t.lam, t.mu, t.nu);
  const int limit = req.value("witnesses", 0);
  if (limit < 0) throw Error(ErrorCode::PARSE_ERROR, "witnesses must be nonnegative");
  if (limit > 0 && rep.multiplicity > 0)
    rep.witnesses = enumerate_integral(t.lam, t.mu, t.nu, static_cast<std::size_t>(limit));
  return json_response(200, io::to_json(rep));
}

HttpResponse lift(const Json& req) {
  const auto t = triple_from(req);
  if (!decide_triple(t.lam, t.mu, t.nu)) return json_response(200, {{"feasible", false}});
  const auto seed = req.value("seed", std::uint64_t{1});
  const auto b = make_boundary(t.lam, t.mu, t.nu);
  if (t.lam.is_integral() && t.mu.is_integral() && t.nu.is_integral())
    return json_response(200, io::to_json(integral_largest_lift(b, seed).honeycomb));
  const auto w = superharmonic_weights(build_graph(static_cast<int>(t.lam.size())), seed);
  return json_response(200, io::to_json(largest_lift_detailed(b, w).honeycomb));
}

HttpResponse breathe_request(const Json& req) {
  const auto h = io::honeycomb_from_json(req.at("honeycomb"));
  if (!h.in_cone()) throw Error(ErrorCode::OUT_OF_CONE, "the honeycomb has a negative edge length");
  const Json& jf = req.at("hexagon");
  if (!jf.is_number_integer() || jf.get<long long>() < 0 ||
      jf.get<long long>() >= static_cast<long long>(h.graph().hexagons().size()))
    throw Error(ErrorCode::PARSE_ERROR, "no such hexagon");
  const auto f = jf.get<std::size_t>();
  const Rat t = io::rat_from_json(req.at("t"));
  try {
    const auto moved = breathe(h, f, t);
    return json_response(200, {{"honeycomb", io::to_json(moved)},
                               {"min_t", io::to_json(-breathe_limit(h, f, -1).max_t)},
                               {"max_t", io::to_json(breathe_limit(h, f, 1).max_t)}});
  } catch (const Error& e) {
    if (e.code() != ErrorCode::OUT_OF_CONE) throw;
    Json out{{"error", "OUT_OF_CONE"}, {"message", e.what()}};
    // max_t is signed like the requested t.
    if (e.max_t) out["max_t"] = io::to_json(t.sign() < 0 ? -*e.max_t : *e.max_t);
    out["blocking_edge"] = e.blocking_edge ? Json(*e.blocking_edge) : Json(nullptr);
    return json_response(200, out);
  }
}

HttpResponse render_request(const Json& req) {
  std::vector<Diagram> layers;
  if (req.contains("honeycomb")) layers.push_back(to_diagram(io::honeycomb_from_json(req["honeycomb"])));
  if (req.contains("honeycombs"))
    for (const auto& h : req["honeycombs"]) layers.push_back(to_diagram(io::honeycomb_from_json(h)));
  if (req.contains("diagram")) layers.push_back(io::diagram_from_json(req["diagram"]));
  if (req.contains("diagrams"))
    for (const auto& d : req["diagrams"]) layers.push_back(io::diagram_from_json(d));
  if (layers.empty()) throw Error(ErrorCode::PARSE_ERROR, "nothing to render");
  RenderOptions opt;
  const Json& origin = req.value("origin", Json(false));
  if (!origin.is_boolean()) throw Error(ErrorCode::PARSE_ERROR, "origin is a boolean");
  opt.origin = origin.get<bool>();
  return {200, "image/svg+xml", render_svg(layers, opt)};
}

HttpResponse graph_request(const std::map<std::string, std::string>& query) {
  auto it = query.find("n");
  if (it == query.end()) throw Error(ErrorCode::PARSE_ERROR, "missing query parameter n");
  std::size_t used = 0;
  int n = 0;
  try {
    n = std::stoi(it->second, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != it->second.size()) throw Error(ErrorCode::PARSE_ERROR, "n must be an integer");
  if (n < 1 || n > 400) throw Error(ErrorCode::TOO_LARGE, "n must be between 1 and 400");
  return json_response(200, io::graph_to_json(*build_graph(n)));
}

}  // namespace

HttpResponse handle_api(std::string_view method, std::string_view path,
                        const std::map<std::string, std::string>& query, std::string_view body) {
  using Handler = HttpResponse (*)(const Json&);
  static const std::map<std::string, Handler, std::less<>> posts = {{"/api/feasible", feasible},
                                                                    {"/api/lrcoeff", lrcoeff},
                                                                    {"/api/lift", lift},
                                                                    {"/api/breathe", breathe_request},
                                                                    {"/api/render", render_request}};
  try {
    if (path == "/api/graph") {
      if (method != "GET") return json_response(405, io::error_json("METHOD_NOT_ALLOWED", "use GET"));
      return graph_request(query);
    }
    auto it = posts.find(path);
    if (it == posts.end()) return json_response(404, io::error_json("NOT_FOUND", "no such endpoint"));
    if (method != "POST") return json_response(405, io::error_json("METHOD_NOT_ALLOWED", "use POST"));
    const Json req = Json::parse(body);
    if (!req.is_object()) throw Error(ErrorCode::PARSE_ERROR, "request body must be a JSON object");
    return it->second(req);
  } catch (const Json::exception& e) {
    return json_response(400, io::error_json("PARSE_ERROR", e.what()));
  } catch (const Error& e) {
    if (e.code() == ErrorCode::INFEASIBLE_TRIPLE) return json_response(200, {{"feasible", false}});
    return json_response(400, io::error_json(to_string(e.code()), e.what()));
  } catch (const std::invalid_argument& e) {
    return json_response(400, io::error_json("PARSE_ERROR", e.what()));
  } catch (const std::exception& e) {
    return json_response(500, io::error_json("INTERNAL", e.what()));
  }
}

}  // namespace honeycomb
