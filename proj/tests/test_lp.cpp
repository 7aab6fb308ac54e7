#include <optional>
#include <random>

#include "doctest.h"
#include "honeycomb/lp.hpp"

using namespace honeycomb;

namespace {

Constraint row(std::vector<Rat> c, Rat rhs) { return Constraint{std::move(c), std::move(rhs)}; }

// Dense Gauss-Jordan solve used only by the vertex enumeration oracle.
std::optional<std::vector<Rat>> dense_solve(std::vector<std::vector<Rat>> a, std::vector<Rat> b) {
  const std::size_t n = a.size();
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a[p][c].is_zero()) ++p;
    if (p == n) return std::nullopt;
    std::swap(a[p], a[c]);
    std::swap(b[p], b[c]);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c || a[r][c].is_zero()) continue;
      Rat f = a[r][c] / a[c][c];
      for (std::size_t k = 0; k < n; ++k) a[r][k] -= f * a[c][k];
      b[r] -= f * b[c];
    }
  }
  for (std::size_t i = 0; i < n; ++i) b[i] /= a[i][i];
  return b;
}

struct VertexSummary {
  bool any_vertex = false;
  Rat best;
};

VertexSummary enumerate_vertices(const LinearProgram& lp) {
  VertexSummary out;
  const std::size_t n = lp.num_vars;
  const std::size_t me = lp.equalities.size();
  const std::size_t need = n - me;
  const std::size_t m = lp.inequalities.size();
  std::vector<int> pick(m, 0);
  std::fill(pick.end() - static_cast<long>(std::min(need, m)), pick.end(), 1);
  if (need > m) return out;
  do {
    std::vector<std::vector<Rat>> a;
    std::vector<Rat> b;
    for (const auto& e : lp.equalities) {
      a.push_back(e.coeffs);
      b.push_back(e.rhs);
    }
    for (std::size_t i = 0; i < m; ++i)
      if (pick[i]) {
        a.push_back(lp.inequalities[i].coeffs);
        b.push_back(lp.inequalities[i].rhs);
      }
    auto x = dense_solve(a, b);
    if (!x || !satisfies(lp, *x)) continue;
    Rat v;
    for (std::size_t j = 0; j < n; ++j) v += lp.objective[j] * (*x)[j];
    if (!out.any_vertex || out.best < v) out.best = v;
    out.any_vertex = true;
  } while (std::next_permutation(pick.begin(), pick.end()));
  return out;
}

LinearProgram random_lp(std::mt19937_64& rng, bool with_equality) {
  std::uniform_int_distribution<int> nv(1, 6), coef(-4, 4), rhs(-6, 6);
  LinearProgram lp;
  lp.num_vars = static_cast<std::size_t>(nv(rng));
  std::uniform_int_distribution<int> nm(static_cast<int>(lp.num_vars), 10);
  const int m = nm(rng);
  auto rand_row = [&] {
    std::vector<Rat> c(lp.num_vars);
    for (auto& v : c) v = coef(rng);
    return c;
  };
  if (with_equality && lp.num_vars > 1) lp.equalities.push_back(row(rand_row(), rhs(rng)));
  for (int i = 0; i < m; ++i) lp.inequalities.push_back(row(rand_row(), rhs(rng)));
  lp.objective = rand_row();
  return lp;
}

}  // namespace

TEST_CASE("simplex on small fixed programs") {
  SUBCASE("bounded maximum") {
    LinearProgram lp{1, {}, {row({-1}, -3), row({1}, 0)}, {1}};
    auto r = solve(lp);
    REQUIRE(r.status == LpStatus::Optimal);
    CHECK(r.point[0] == Rat(3));
    CHECK(r.value == Rat(3));
  }
  SUBCASE("infeasible with certificate") {
    LinearProgram lp{1, {}, {row({1}, 1), row({-1}, 0)}, {}};
    auto r = solve(lp);
    REQUIRE(r.status == LpStatus::Infeasible);
    CHECK(r.certificate == std::vector<Rat>{1, 1});
    CHECK(is_farkas_certificate(lp, r.certificate));
  }
  SUBCASE("unbounded with ray") {
    LinearProgram lp{1, {}, {row({1}, 0)}, {1}};
    auto r = solve(lp);
    REQUIRE(r.status == LpStatus::Unbounded);
    CHECK(r.ray == std::vector<Rat>{1});
  }
  SUBCASE("inconsistent equalities") {
    LinearProgram lp{2, {row({1, 1}, 1), row({2, 2}, 3)}, {}, {}};
    auto r = solve(lp);
    REQUIRE(r.status == LpStatus::Infeasible);
    CHECK(is_farkas_certificate(lp, r.certificate));
  }
  SUBCASE("free variable pinned only by equalities") {
    LinearProgram lp{2, {row({1, -1}, 2)}, {row({0, 1}, 0), row({0, -1}, -5)}, {1, 1}};
    auto r = solve(lp);
    REQUIRE(r.status == LpStatus::Optimal);
    CHECK(r.value == Rat(12));
  }
  SUBCASE("variable absent from every row") {
    LinearProgram lp{2, {}, {row({1, 0}, 0)}, {0, -1}};
    auto r = solve(lp);
    REQUIRE(r.status == LpStatus::Unbounded);
    CHECK(r.ray == std::vector<Rat>{0, -1});
  }
  SUBCASE("debug dump records tableaus") {
    std::string dump;
    LinearProgram lp{2, {}, {row({-1, 0}, -1), row({0, -1}, -1), row({1, 1}, 1)}, {1, 2}};
    SolveOptions opt;
    opt.debug_dump = &dump;
    auto r = solve(lp, opt);
    REQUIRE(r.status == LpStatus::Optimal);
    CHECK(r.value == Rat(3));
    CHECK(dump.find("pivot") != std::string::npos);
  }
}

TEST_CASE("degenerate programs terminate") {
  // Beale's cycling example, written as a maximisation with x >= 0.
  LinearProgram lp;
  lp.num_vars = 4;
  lp.inequalities = {
      row({Rat(-1, 4), 60, Rat(1, 25), -9}, 0), row({Rat(-1, 2), 90, Rat(1, 50), -3}, 0),
      row({0, 0, -1, 0}, -1),
      row({1, 0, 0, 0}, 0), row({0, 1, 0, 0}, 0), row({0, 0, 1, 0}, 0), row({0, 0, 0, 1}, 0)};
  lp.objective = {Rat(3, 4), -150, Rat(1, 50), -6};
  auto r = solve(lp);
  REQUIRE(r.status == LpStatus::Optimal);
  CHECK(r.value == Rat(1, 20));
}

TEST_CASE("random programs agree with vertex enumeration") {
  std::mt19937_64 rng(20240611);
  int optimal = 0, infeasible = 0, unbounded = 0;
  for (int t = 0; t < 400; ++t) {
    auto lp = random_lp(rng, t % 3 == 0);
    auto r = solve(lp);
    auto oracle = enumerate_vertices(lp);
    switch (r.status) {
      case LpStatus::Optimal:
        ++optimal;
        CHECK(satisfies(lp, r.point));
        REQUIRE(oracle.any_vertex);
        CHECK(r.value == oracle.best);
        break;
      case LpStatus::Infeasible:
        ++infeasible;
        CHECK(is_farkas_certificate(lp, r.certificate));
        CHECK_FALSE(oracle.any_vertex);
        break;
      case LpStatus::Unbounded:
        ++unbounded;
        CHECK(satisfies(lp, r.point));
        break;
    }
    SolveOptions guided;
    guided.float_guide_threshold = 1;
    auto g = solve(lp, guided);
    CHECK(g.status == r.status);
    if (g.status == LpStatus::Optimal) CHECK(g.value == r.value);
    if (g.status == LpStatus::Infeasible) CHECK(is_farkas_certificate(lp, g.certificate));
  }
  CHECK(optimal > 20);
  CHECK(infeasible > 20);
  CHECK(unbounded > 5);
}

TEST_CASE("solve is deterministic") {
  std::mt19937_64 rng(3);
  for (int t = 0; t < 50; ++t) {
    auto lp = random_lp(rng, true);
    auto a = solve(lp), b = solve(lp);
    CHECK(a.status == b.status);
    CHECK(a.point == b.point);
    CHECK(a.certificate == b.certificate);
    CHECK(a.ray == b.ray);
  }
}

TEST_CASE("lexicographic maximum and bounding boxes") {
  SUBCASE("unit square") {
    LinearProgram lp{2, {}, {row({1, 0}, 0), row({-1, 0}, -1), row({0, 1}, 0), row({0, -1}, -1)}, {}};
    std::vector<std::size_t> prio{0, 1};
    CHECK(lexicographic_max(lp, prio) == std::vector<Rat>{1, 1});
  }
  SUBCASE("segment") {
    LinearProgram lp{2, {row({1, 1}, 1)}, {row({1, 0}, 0), row({0, 1}, 0)}, {}};
    std::vector<std::size_t> prio{0, 1};
    CHECK(lexicographic_max(lp, prio) == std::vector<Rat>{1, 0});
    auto box = bounding_box(lp, 0);
    CHECK(box.lo == Rat(0));
    CHECK(box.hi == Rat(1));
  }
  SUBCASE("cone") {
    LinearProgram lp{2, {}, {row({1, 0}, 0), row({0, 1}, 0)}, {}};
    auto box = bounding_box(lp, 0);
    CHECK(box.lo == Rat(0));
    CHECK_FALSE(box.hi.has_value());
    std::vector<std::size_t> prio{0};
    CHECK_THROWS_AS(lexicographic_max(lp, prio), LpError);
  }
  SUBCASE("empty region") {
    LinearProgram lp{1, {}, {row({1}, 1), row({-1}, 0)}, {}};
    CHECK_THROWS_AS(bounding_box(lp, 0), LpError);
  }
}
