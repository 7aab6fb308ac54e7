#include <thread>

#include "doctest.h"
#include "honeycomb/io.hpp"
#include "honeycomb/service.hpp"
#include "server.hpp"

using namespace honeycomb;
using io::Json;

namespace {

HttpResponse post(const std::string& path, const Json& body) { return handle_api("POST", path, {}, body.dump()); }

Json body_of(const HttpResponse& r) { return Json::parse(r.body); }

const Json kTriple = {{"lam", {"2", "1", "0"}}, {"mu", {"2", "1", "0"}}, {"nu", {"3", "2", "1"}}};

}  // namespace

TEST_CASE("POST /api/feasible") {
  auto r = post("/api/feasible", {{"lam", {"3"}}, {"mu", {"4"}}, {"nu", {"7"}}});
  CHECK(r.status == 200);
  CHECK(r.content_type == "application/json");
  CHECK(body_of(r) == Json{{"feasible", true}});
  r = post("/api/feasible", {{"lam", {"3"}}, {"mu", {"4"}}, {"nu", {"5"}}});
  CHECK(r.status == 200);
  CHECK(body_of(r) == Json{{"feasible", false}});
  r = post("/api/feasible", {{"lam", {"3", "0"}}, {"mu", {"4", "0"}}, {"nu", {"0", "-7"}}, {"convention", "triple"}});
  CHECK(body_of(r) == Json{{"feasible", true}});
}

TEST_CASE("POST /api/lrcoeff") {
  Json req = kTriple;
  req["witnesses"] = 5;
  const auto r = post("/api/lrcoeff", req);
  REQUIRE(r.status == 200);
  const auto rep = io::lr_report_from_json(body_of(r));
  CHECK(rep.multiplicity == 2);
  REQUIRE(rep.witnesses.size() == 2);
  for (const auto& h : rep.witnesses) CHECK(boundary(h) == BoundaryTriple{{2, 1, 0}, {2, 1, 0}, {-1, -2, -3}});
  CHECK(body_of(post("/api/lrcoeff", kTriple))["witnesses"].empty());
  const auto frac = post("/api/lrcoeff", {{"lam", {"1/2", "0"}}, {"mu", {"1", "0"}}, {"nu", {"1", "1/2"}}});
  CHECK(frac.status == 400);
  CHECK(body_of(frac)["code"] == "NOT_INTEGRAL");
}

TEST_CASE("POST /api/lift and /api/breathe") {
  auto r = post("/api/lift", kTriple);
  REQUIRE(r.status == 200);
  const auto h = io::honeycomb_from_json(body_of(r));
  CHECK(boundary(h) == BoundaryTriple{{2, 1, 0}, {2, 1, 0}, {-1, -2, -3}});
  CHECK(is_integral(h));
  CHECK(h.in_cone());

  const Json rational = {{"lam", {"5/2", "1", "0"}}, {"mu", {"2", "1/3", "0"}}, {"nu", {"3", "2", "5/6"}}};
  r = post("/api/lift", rational);
  REQUIRE(r.status == 200);
  CHECK(boundary(io::honeycomb_from_json(body_of(r))) ==
        BoundaryTriple{{Rat(5, 2), 1, 0}, {2, Rat(1, 3), 0}, {Rat(-5, 6), -2, -3}});

  CHECK(body_of(post("/api/lift", {{"lam", {"3"}}, {"mu", {"4"}}, {"nu", {"5"}}})) == Json{{"feasible", false}});

  // The lift maximises breathing-positive weights, so it sits at max_t = 0.
  r = post("/api/breathe", {{"honeycomb", io::to_json(h)}, {"hexagon", 0}, {"t", "-1/2"}});
  REQUIRE(r.status == 200);
  auto b = body_of(r);
  const auto moved = io::honeycomb_from_json(b["honeycomb"]);
  CHECK(boundary(moved) == boundary(h));
  const Rat lo = io::rat_from_json(b["min_t"]), hi = io::rat_from_json(b["max_t"]);
  CHECK(lo <= Rat(-1, 2));
  CHECK(hi >= Rat(0));

  r = post("/api/breathe", {{"honeycomb", io::to_json(h)}, {"hexagon", 0}, {"t", "-100"}});
  CHECK(r.status == 200);
  b = body_of(r);
  CHECK(b["error"] == "OUT_OF_CONE");
  CHECK(io::rat_from_json(b["max_t"]) == lo);
  CHECK(b["blocking_edge"].is_string());

  CHECK(post("/api/breathe", {{"honeycomb", io::to_json(h)}, {"hexagon", 1}, {"t", "0"}}).status == 400);
}

TEST_CASE("POST /api/render and GET /api/graph") {
  auto r = post("/api/render", {{"honeycomb", io::to_json(one_honeycomb(PointB()))}, {"origin", true}});
  CHECK(r.status == 200);
  CHECK(r.content_type == "image/svg+xml");
  CHECK(r.body.find("class=\"origin\"") != std::string::npos);
  CHECK(post("/api/render", Json::object()).status == 400);

  r = handle_api("GET", "/api/graph", {{"n", "3"}}, "");
  REQUIRE(r.status == 200);
  const auto g = body_of(r);
  CHECK(g["counts"] == Json{{"vertices", 9}, {"internal_edges", 9}, {"boundary_edges", 9}, {"hexagons", 1}});
  CHECK(handle_api("GET", "/api/graph", {{"n", "x"}}, "").status == 400);
  CHECK(handle_api("GET", "/api/graph", {{"n", "0"}}, "").status == 400);
  CHECK(handle_api("GET", "/api/graph", {}, "").status == 400);
}

TEST_CASE("API errors") {
  auto r = handle_api("POST", "/api/feasible", {}, "{not json");
  CHECK(r.status == 400);
  CHECK(body_of(r)["code"] == "PARSE_ERROR");
  CHECK(body_of(r)["message"].is_string());
  CHECK(handle_api("POST", "/api/feasible", {}, "[1,2]").status == 400);
  CHECK(post("/api/feasible", {{"lam", {"3"}}, {"mu", {"4"}}}).status == 400);
  r = post("/api/feasible", {{"lam", {"0", "1"}}, {"mu", {"4", "0"}}, {"nu", {"4", "1"}}});
  CHECK(r.status == 400);
  CHECK(body_of(r)["code"] == "NOT_DECREASING");
  r = post("/api/feasible", {{"lam", {"1"}}, {"mu", {"4", "0"}}, {"nu", {"4", "1"}}});
  CHECK(body_of(r)["code"] == "DIMENSION_MISMATCH");
  CHECK(post("/api/feasible", {{"lam", {"1"}}, {"mu", {"1"}}, {"nu", {"2"}}, {"convention", "x"}}).status == 400);
  CHECK(handle_api("POST", "/api/nothing", {}, "{}").status == 404);
  CHECK(handle_api("GET", "/api/feasible", {}, "").status == 405);
  // Stateless: the same request gives the same bytes.
  CHECK(post("/api/lift", kTriple).body == post("/api/lift", kTriple).body);
}

TEST_CASE("HTTP server round trip") {
  httplib::Server server;
  cli::mount_api(server);
  const int port = server.bind_to_any_port("127.0.0.1");
  REQUIRE(port > 0);
  std::thread t([&] { server.listen_after_bind(); });
  server.wait_until_ready();
  httplib::Client client("127.0.0.1", port);
  auto res = client.Post("/api/feasible", R"({"lam":["3"],"mu":["4"],"nu":["7"]})", "application/json");
  REQUIRE(res);
  CHECK(res->status == 200);
  CHECK(Json::parse(res->body) == Json{{"feasible", true}});
  res = client.Get("/api/graph?n=2");
  REQUIRE(res);
  CHECK(Json::parse(res->body)["counts"]["hexagons"] == 0);
  res = client.Post("/api/lift", "oops", "application/json");
  REQUIRE(res);
  CHECK(res->status == 400);
  server.stop();
  t.join();
}
