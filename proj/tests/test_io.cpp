#include <random>
#include <regex>

#include "doctest.h"
#include "honeycomb/io.hpp"
#include "honeycomb/lattice.hpp"
#include "honeycomb/render.hpp"
#include "support.hpp"

using namespace honeycomb;
using io::Json;

namespace {

template <class F>
ErrorCode code_of(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error thrown");
  return ErrorCode::PARSE_ERROR;
}

// Reparse of the dumped text, so the round trip covers serialisation too.
Json reparse(const Json& j) { return Json::parse(j.dump()); }

}  // namespace

TEST_CASE("rationals and spectra") {
  CHECK(io::to_json(Rat(3, 2)) == "3/2");
  CHECK(io::to_json(Rat(-4)) == "-4");
  CHECK(io::rat_from_json(Json("-6/4")) == Rat(-3, 2));
  CHECK(io::rat_from_json(Json(7)) == Rat(7));
  CHECK(code_of([] { io::rat_from_json(Json("abc")); }) == ErrorCode::PARSE_ERROR);
  CHECK(code_of([] { io::rat_from_json(Json(1.5)); }) == ErrorCode::PARSE_ERROR);
  CHECK(code_of([] { io::rat_from_json(Json("1/0")); }) == ErrorCode::PARSE_ERROR);

  const Spectrum s{Rat(5, 3), Rat(0), Rat(-2)};
  CHECK(io::spectrum_from_json(reparse(io::to_json(s))) == s);
  CHECK(code_of([] { io::spectrum_from_json(Json::array({"1", "2"})); }) == ErrorCode::NOT_DECREASING);
  CHECK(code_of([] { io::spectrum_from_json(Json("1,2")); }) == ErrorCode::PARSE_ERROR);
  CHECK(code_of([] { io::point_from_json(Json::array({"1", "1", "1"})); }) == ErrorCode::PARSE_ERROR);
}

TEST_CASE("honeycomb JSON") {
  std::mt19937_64 rng(5);
  for (int n = 1; n <= 5; ++n) {
    const auto h = testsupport::random_honeycomb(n, rng);
    const Json j = io::to_json(h);
    CHECK(j["n"] == n);
    CHECK(j["coords"].size() == h.graph().edges().size());
    CHECK(io::honeycomb_from_json(reparse(j)) == h);
  }
  const auto h = testsupport::random_honeycomb(2, rng);
  Json j = io::to_json(h);
  CHECK(j["coords"].contains("bdy:NW:1"));
  CHECK(j["coords"].contains("up:0,0:Z"));

  Json missing = j;
  missing["coords"].erase("bdy:S:2");
  CHECK(code_of([&] { io::honeycomb_from_json(missing); }) == ErrorCode::PARSE_ERROR);
  Json renamed = missing;
  renamed["coords"]["bdy:S:9"] = "0";
  CHECK(code_of([&] { io::honeycomb_from_json(renamed); }) == ErrorCode::PARSE_ERROR);
  Json unbalanced = j;
  unbalanced["coords"]["bdy:S:2"] = "1000";
  CHECK(code_of([&] { io::honeycomb_from_json(unbalanced); }) == ErrorCode::INVALID_HONEYCOMB);
  Json wrong_n = j;
  wrong_n["n"] = 3;
  CHECK(code_of([&] { io::honeycomb_from_json(wrong_n); }) == ErrorCode::PARSE_ERROR);
  CHECK(code_of([&] { io::honeycomb_from_json(Json::array()); }) == ErrorCode::PARSE_ERROR);
}

TEST_CASE("diagram and graph JSON") {
  std::mt19937_64 rng(6);
  for (int n = 1; n <= 4; ++n) {
    const auto d = to_diagram(testsupport::random_honeycomb(n, rng));
    CHECK(io::diagram_from_json(reparse(io::to_json(d))) == d);
  }
  Json bad = io::to_json(to_diagram(one_honeycomb(PointB())));
  bad["rays"][0]["direction"] = "UP";
  CHECK(code_of([&] { io::diagram_from_json(bad); }) == ErrorCode::PARSE_ERROR);

  const Json g = io::graph_to_json(*build_graph(3));
  CHECK(g["counts"]["vertices"] == 9);
  CHECK(g["counts"]["internal_edges"] == 9);
  CHECK(g["counts"]["boundary_edges"] == 9);
  CHECK(g["counts"]["hexagons"] == 1);
  CHECK(g["hexagons"][0]["edges"].size() == 6);
  CHECK(g["hexagons"][0]["center"] == Json::array({1, 1, 1}));
}

TEST_CASE("report JSON") {
  const Spectrum l{2, 1, 0}, m{2, 1, 0}, nu{-1, -2, -3};
  const auto sat = check_saturation(l, m, nu);
  const Json sj = io::to_json(sat);
  CHECK(sj["feasible"] == true);
  CHECK(sj["agrees"] == true);
  const auto back = io::saturation_from_json(reparse(sj));
  CHECK(back.feasible == sat.feasible);
  CHECK(back.agrees == sat.agrees);
  CHECK(back.integral_witness == sat.integral_witness);
  const auto none = io::to_json(check_saturation(l, m, Spectrum{0, 0, -6}));
  CHECK(none["integral_witness"].is_null());
  CHECK(!io::saturation_from_json(none).integral_witness);

  io::LrReport lr{tensor_multiplicity(l, m, Spectrum{3, 2, 1}), enumerate_integral(l, m, nu, 5)};
  CHECK(lr.multiplicity == 2);
  CHECK(lr.witnesses.size() == 2);
  const Json lj = io::to_json(lr);
  CHECK(lj["multiplicity"] == "2");
  CHECK(io::lr_report_from_json(reparse(lj)) == lr);

  for (const auto& h : horn_inequalities(4)) {
    const auto back_h = io::horn_from_json(reparse(io::to_json(h)));
    CHECK(back_h.triple == h.triple);
    CHECK(back_h.n == h.n);
    CHECK(back_h.str() == h.str());
  }
  Json tampered = io::to_json(horn_inequalities(3)[0]);
  tampered["lambda"] = Json::array({2});
  CHECK(code_of([&] { io::horn_from_json(tampered); }) == ErrorCode::PARSE_ERROR);

  const auto a = one_honeycomb(PointB()), b = one_honeycomb(PointB(1, -2, 1));
  const auto f = facet_inequality(b, a);
  CHECK(io::facet_from_json(reparse(io::to_json(f))) == f);
  CHECK(io::to_json(f)["text"] == "l1+m2+n1 >= 0");

  const auto an = analyze_overlay(a, b);
  const Json oj = io::overlay_to_json(an, a.graph(), b.graph());
  CHECK(oj["verdict"] == "ALL_B_CW");
  CHECK(oj["intersections"][0]["edge_a"] == "bdy:S:1");
  CHECK(oj["intersections"][0]["turning"] == "B_CW_TO_A");
  const auto an2 = io::overlay_from_json(reparse(oj), a.graph(), b.graph());
  REQUIRE(an2.intersections.size() == 1);
  CHECK(an2.verdict == an.verdict);
  CHECK(an2.intersections[0].point == an.intersections[0].point);
  CHECK(an2.intersections[0].edge_a == an.intersections[0].edge_a);
  CHECK(an2.intersections[0].edge_b == an.intersections[0].edge_b);
  CHECK(an2.intersections[0].turning == an.intersections[0].turning);

  SampleReport rep;
  rep.trials = 3;
  rep.max_infeasibility_margin = 0.1 + 1e-17;
  rep.violations.push_back({{1.0 / 3, -2.0 / 7}, 0.1});
  const auto rb = io::sample_report_from_json(reparse(io::to_json(rep)));
  CHECK(rb.trials == 3);
  CHECK(rb.max_infeasibility_margin == rep.max_infeasibility_margin);
  REQUIRE(rb.violations.size() == 1);
  CHECK(rb.violations[0].nu == rep.violations[0].nu);
  CHECK(rb.violations[0].margin == 0.1);
}

TEST_CASE("SVG rendering") {
  const auto y = one_honeycomb(PointB(1, -2, 1));
  const std::string svg = render_svg(y);
  auto count = [](const std::string& s, const std::string& what) {
    std::size_t c = 0;
    for (auto p = s.find(what); p != std::string::npos; p = s.find(what, p + 1)) ++c;
    return c;
  };
  CHECK(svg.rfind("<?xml", 0) == 0);
  CHECK(count(svg, "class=\"ray\"") == 3);
  CHECK(count(svg, "class=\"edge\"") == 0);
  CHECK(count(svg, "class=\"vertex\"") == 1);
  CHECK(count(svg, "class=\"origin\"") == 0);
  CHECK(svg == render_svg(y));

  RenderOptions opt;
  opt.origin = true;
  const auto both = render_svg({to_diagram(y), to_diagram(one_honeycomb(PointB()))}, opt);
  CHECK(count(both, "class=\"origin\"") == 1);
  CHECK(count(both, "data-layer=\"1\"") == 4);

  // Two copies of a honeycomb: every edge has multiplicity 2 and is labelled.
  std::mt19937_64 rng(2);
  const auto d = to_diagram(testsupport::random_honeycomb(3, rng));
  const auto doubled = render_svg({overlay(d, d)});
  CHECK(count(doubled, "class=\"multiplicity\"") == d.segments.size() + d.rays.size());
  CHECK(count(doubled, ">2</text>") == d.segments.size() + d.rays.size());

  // Everything inside the canvas, with room to spare on each side.
  std::smatch m;
  REQUIRE(std::regex_search(doubled, m, std::regex("width=\"([0-9.]+)\" height=\"([0-9.]+)\"")));
  const double w = std::stod(m[1]), h = std::stod(m[2]);
  const std::regex coord("(x[12]?|cx|y[12]?|cy)=\"(-?[0-9.]+)\"");
  double min_x = 1e9, max_x = -1e9;
  for (auto it = std::sregex_iterator(doubled.begin(), doubled.end(), coord); it != std::sregex_iterator(); ++it) {
    const double v = std::stod((*it)[2]);
    const bool is_x = (*it)[1].str()[0] == 'x' || (*it)[1].str() == "cx";
    CHECK(v >= 0);
    CHECK(v <= (is_x ? w : h) + 1e-9);
    if (is_x && (*it)[1].str() != "x") {
      min_x = std::min(min_x, v);
      max_x = std::max(max_x, v);
    }
  }
  CHECK(min_x > 0);
  CHECK(min_x == doctest::Approx(w - max_x));
}
