#include "honeycomb/feasibility.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <set>

#include "sparse_solve.hpp"

namespace honeycomb {

BoundaryTriple make_boundary(const Spectrum& lam, const Spectrum& mu, const Spectrum& nu) {
  require_same_size(lam, mu, nu);
  return BoundaryTriple{lam.values(), mu.values(), nu.values()};
}

FiberPolytope fiber_polytope(const Spectrum& lam, const Spectrum& mu, const Spectrum& nu) {
  FiberPolytope fp;
  fp.boundary = make_boundary(lam, mu, nu);
  fp.graph = build_graph(static_cast<int>(lam.size()));
  const auto& g = *fp.graph;
  const std::size_t m = g.edges().size();
  fp.lp.num_vars = m;
  for (std::size_t v = 0; v < g.vertices().size(); ++v) {
    Constraint c{std::vector<Rat>(m), Rat()};
    for (EdgeClass k : {EdgeClass::X, EdgeClass::Y, EdgeClass::Z}) c.coeffs[g.edge_at(v, k)] = 1;
    fp.lp.equalities.push_back(std::move(c));
  }
  const int n = g.n();
  auto pin = [&](std::size_t e, const Rat& value) {
    Constraint c{std::vector<Rat>(m), value};
    c.coeffs[e] = 1;
    fp.lp.equalities.push_back(std::move(c));
  };
  for (int i = 1; i <= n; ++i) {
    pin(g.lambda_edge(i), lam[static_cast<std::size_t>(i - 1)]);
    pin(g.mu_edge(i), mu[static_cast<std::size_t>(i - 1)]);
    pin(g.nu_edge(i), nu[static_cast<std::size_t>(i - 1)]);
  }
  for (std::size_t e : g.internal_edges()) {
    auto [p, q] = g.length_terms(e);
    Constraint c{std::vector<Rat>(m), Rat()};
    c.coeffs[p] += 1;
    c.coeffs[q] -= 1;
    fp.lp.inequalities.push_back(std::move(c));
  }
  return fp;
}

Honeycomb ReducedFiber::honeycomb(std::span<const Rat> interior) const {
  std::vector<Rat> pot = boundary_potential;
  for (std::size_t f = 0; f < graph->hexagons().size(); ++f) pot[graph->hexagon_point(f)] = interior[f];
  return from_potential(graph, pot);
}

std::vector<Rat> ReducedFiber::interior_of(const Honeycomb& h) const {
  auto pot = potential_of(h);
  std::vector<Rat> out;
  for (std::size_t f = 0; f < graph->hexagons().size(); ++f) out.push_back(pot[graph->hexagon_point(f)]);
  return out;
}

ReducedFiber reduced_fiber(const BoundaryTriple& b) {
  if (b.lambda.empty() || b.lambda.size() != b.mu.size() || b.lambda.size() != b.nu.size())
    throw Error(ErrorCode::DIMENSION_MISMATCH, "boundary lists must have equal positive length");
  ReducedFiber rf;
  rf.graph = build_graph(static_cast<int>(b.lambda.size()));
  const auto& g = *rf.graph;
  rf.boundary_potential = boundary_potential(g, b);
  std::vector<long> var_of(g.points().size(), -1);
  for (std::size_t f = 0; f < g.hexagons().size(); ++f) var_of[g.hexagon_point(f)] = static_cast<long>(f);
  const std::size_t k = g.hexagons().size();
  rf.lp.num_vars = k;
  for (std::size_t e : g.internal_edges()) {
    Constraint c{std::vector<Rat>(k), Rat()};
    for (auto [p, coef] : length_form(g, e)) {
      if (var_of[p] >= 0) {
        c.coeffs[static_cast<std::size_t>(var_of[p])] += coef;
      } else {
        c.rhs -= Rat(coef) * rf.boundary_potential[p];
      }
    }
    rf.lp.inequalities.push_back(std::move(c));
  }
  return rf;
}

namespace {

bool trace_zero(const Spectrum& lam, const Spectrum& mu, const Spectrum& nu) {
  return (lam.sum() + mu.sum() + nu.sum()).is_zero();
}

}  // namespace

bool decide_triple(const Spectrum& lam, const Spectrum& mu, const Spectrum& nu) {
  require_same_size(lam, mu, nu);
  if (!trace_zero(lam, mu, nu)) return false;
  auto rf = reduced_fiber(make_boundary(lam, mu, nu));
  return solve(rf.lp).status != LpStatus::Infeasible;
}

bool decide_sum(const Spectrum& lam, const Spectrum& mu, const Spectrum& nu) {
  require_same_size(lam, mu, nu);
  return decide_triple(lam, mu, nu.negated());
}

Rat boundary_distance(const Spectrum& lam, const Spectrum& mu, const Spectrum& nu) {
  require_same_size(lam, mu, nu);
  auto g = build_graph(static_cast<int>(lam.size()));
  const int n = g->n();
  // Variables: potentials at every lattice point except (0,0,n), then t.
  const std::size_t corner = g->point_index(0, 0, n);
  std::vector<long> var_of(g->points().size(), -1);
  std::size_t nv = 0;
  for (std::size_t p = 0; p < g->points().size(); ++p)
    if (p != corner) var_of[p] = static_cast<long>(nv++);
  const std::size_t t = nv++;
  LinearProgram lp;
  lp.num_vars = nv;
  auto add_terms = [&](std::vector<Rat>& row, std::size_t p, int coef) {
    if (var_of[p] >= 0) row[static_cast<std::size_t>(var_of[p])] += coef;
  };
  for (int i = 1; i <= n; ++i) {
    const auto si = static_cast<std::size_t>(i - 1);
    for (auto [e, v] : {std::pair{g->lambda_edge(i), lam[si]}, std::pair{g->mu_edge(i), mu[si]},
                        std::pair{g->nu_edge(i), nu[si]}}) {
      auto [pp, pm] = g->potential_terms(e);
      for (int s : {1, -1}) {
        // t + s * (h[pp] - h[pm]) >= s * v
        Constraint c{std::vector<Rat>(nv), Rat(s) * v};
        c.coeffs[t] = 1;
        add_terms(c.coeffs, pp, s);
        add_terms(c.coeffs, pm, -s);
        lp.inequalities.push_back(std::move(c));
      }
    }
  }
  for (std::size_t e : g->internal_edges()) {
    Constraint c{std::vector<Rat>(nv), Rat()};
    for (auto [p, coef] : length_form(*g, e)) add_terms(c.coeffs, p, coef);
    lp.inequalities.push_back(std::move(c));
  }
  lp.objective.assign(nv, Rat());
  lp.objective[t] = -1;
  auto r = solve(lp);
  if (r.status != LpStatus::Optimal) throw std::logic_error("boundary distance LP did not reach an optimum");
  return -r.value;
}

bool decide_sum_slack(const Spectrum& lam, const Spectrum& mu, const Spectrum& nu, const Rat& slack) {
  return boundary_distance(lam, mu, nu.negated()) <= slack;
}

// ---------------------------------------------------------------------------

Rat SuperharmonicWeights::evaluate(const Honeycomb& h) const {
  Rat s;
  for (std::size_t e = 0; e < weights.size(); ++e)
    if (!weights[e].is_zero()) s.add_product(weights[e], h.coord(e));
  return s;
}

namespace {

// Sign s with breathing_vector(f) = s * d(coords)/d(h at the hexagon's point).
int breathing_sign(const HoneycombGraph& g, std::size_t f) {
  const auto bv = breathing_vector(g, f);
  const std::size_t p = g.hexagon_point(f);
  const std::size_t e = g.hexagons()[f].edges[0];
  auto [plus, minus] = g.potential_terms(e);
  const int d = plus == p ? 1 : (minus == p ? -1 : 0);
  return bv[e].sign() * d;
}

// Hexagon multipliers g_f used for both the weights and the reduced objective.
std::vector<Rat> hexagon_multipliers(std::size_t count, std::uint64_t seed, int n) {
  std::mt19937_64 rng(seed * 0x9E3779B97F4A7C15ULL + static_cast<std::uint64_t>(n));
  std::uniform_int_distribution<int> d(1, 1000);
  std::vector<Rat> out;
  for (std::size_t f = 0; f < count; ++f) out.emplace_back(d(rng));
  return out;
}

}  // namespace

SuperharmonicWeights superharmonic_weights(std::shared_ptr<const HoneycombGraph> g, std::uint64_t seed) {
  SuperharmonicWeights w;
  w.graph = g;
  w.seed = seed;
  const int n = g->n();
  w.weights.assign(g->edges().size(), Rat());
  const auto mult = hexagon_multipliers(g->hexagons().size(), seed, n);
  for (std::size_t f = 0; f < g->hexagons().size(); ++f) {
    const Rat coef = Rat(breathing_sign(*g, f)) * mult[f];
    const auto& c = g->hexagons()[f].center;
    // h(i,j,k) - h(0,0,n) along a lattice path: i steps in a, then j steps in b.
    for (int a = 0; a < c[0]; ++a)
      w.weights[g->edge_at(g->vertex_index(true, a, 0), EdgeClass::Y)] -= coef;
    for (int b = 0; b < c[1]; ++b)
      w.weights[g->edge_at(g->vertex_index(true, c[0], b), EdgeClass::X)] += coef;
  }
  for (std::size_t f = 0; f < g->hexagons().size(); ++f) {
    const auto bv = breathing_vector(*g, f);
    Rat rate;
    for (std::size_t e : g->hexagons()[f].edges) rate += w.weights[e] * bv[e];
    if (rate.sign() <= 0) throw std::logic_error("superharmonic certification failed");
    w.hexagon_rate.push_back(rate);
  }
  return w;
}

LiftResult largest_lift_detailed(const BoundaryTriple& b, const SuperharmonicWeights& w) {
  const int n = static_cast<int>(b.lambda.size());
  if (!w.graph || w.graph->n() != n) throw Error(ErrorCode::DIMENSION_MISMATCH, "weights built for another size");
  Rat trace;
  for (std::size_t i = 0; i < b.lambda.size(); ++i) trace += b.lambda[i] + b.mu[i] + b.nu[i];
  if (!trace.is_zero()) throw Error(ErrorCode::INFEASIBLE_TRIPLE, "boundary values do not sum to zero");
  auto rf = reduced_fiber(b);
  const auto& g = *rf.graph;
  const std::size_t k = g.hexagons().size();
  // On a fixed fiber w . coords = sum_f rate_f * h(point f) + constant.
  rf.lp.objective.assign(k, Rat());
  for (std::size_t f = 0; f < k; ++f) rf.lp.objective[f] = w.hexagon_rate[f] * Rat(breathing_sign(g, f));
  auto r = solve(rf.lp);
  if (r.status == LpStatus::Infeasible) throw Error(ErrorCode::INFEASIBLE_TRIPLE, "no honeycomb has this boundary");
  if (r.status != LpStatus::Optimal) throw std::logic_error("fiber is unbounded");
  LiftResult out{rf.honeycomb(r.point), r.basis, false, w.seed};
  // Unique when the rows carrying positive multipliers already pin the point.
  std::vector<SparseRow> pinned;
  for (std::size_t i = 0; i < r.duals.size(); ++i) {
    if (r.duals[i].sign() <= 0) continue;
    SparseRow row;
    for (std::size_t f = 0; f < k; ++f)
      if (!rf.lp.inequalities[i].coeffs[f].is_zero()) row.emplace_back(f, rf.lp.inequalities[i].coeffs[f]);
    pinned.push_back(std::move(row));
  }
  out.unique = sparse_rank(std::move(pinned), k) == k;
  if (!out.unique) {
    LinearProgram face = rf.lp;
    face.equalities.push_back(Constraint{face.objective, r.value});
    face.objective.clear();
    std::vector<std::size_t> prio(k);
    std::iota(prio.begin(), prio.end(), 0);
    auto x = lexicographic_max(face, prio);
    out.honeycomb = rf.honeycomb(x);
  }
  return out;
}

Honeycomb largest_lift(const Spectrum& lam, const Spectrum& mu, const Spectrum& nu, const SuperharmonicWeights& w) {
  return largest_lift_detailed(make_boundary(lam, mu, nu), w).honeycomb;
}

LiftResult integral_largest_lift(const BoundaryTriple& b, std::uint64_t seed) {
  auto g = build_graph(static_cast<int>(b.lambda.size()));
  for (std::uint64_t s = seed; s < seed + 64; ++s) {
    auto r = largest_lift_detailed(b, superharmonic_weights(g, s));
    if (is_integral(r.honeycomb)) return r;
  }
  throw std::logic_error("no integral largest lift after 64 weight samples");
}

// ---------------------------------------------------------------------------

bool UnderlyingGraph::acyclic() const {
  std::vector<std::size_t> parent(vertices.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (auto [a, b] : edges) {
    auto ra = find(a), rb = find(b);
    if (ra == rb) return false;
    parent[ra] = rb;
  }
  return true;
}

namespace {

struct LinePiece {
  int cls;
  Rat constant;
  std::optional<Rat> lo, hi;
  bool contains_inside(const PointB& p) const {
    if (p[cls] != constant) return false;
    const Rat& t = p[line_parameter_slot(static_cast<EdgeClass>(cls))];
    return (!lo || *lo < t) && (!hi || t < *hi);
  }
};

Direction direction_between(const PointB& from, const PointB& to) {
  PointB d = to - from;
  for (Direction dir : kAllDirections) {
    auto v = direction_vector(dir);
    // d must be a positive multiple of v.
    std::optional<Rat> scale;
    bool ok = true;
    for (int i = 0; i < 3 && ok; ++i) {
      if (v[i] == 0) {
        ok = d[i].is_zero();
      } else {
        Rat s = d[i] / Rat(v[i]);
        if (s.sign() <= 0 || (scale && *scale != s)) ok = false;
        scale = s;
      }
    }
    if (ok) return dir;
  }
  throw std::logic_error("segment is not along a cardinal direction");
}

}  // namespace

UnderlyingGraphResult underlying_graph(const Honeycomb& h) {
  UnderlyingGraphResult res;
  const Diagram d = to_diagram(h);
  for (const auto& s : d.segments)
    if (s.multiplicity != 1) {
      res.reason = "edge of multiplicity " + std::to_string(s.multiplicity);
      return res;
    }
  for (const auto& r : d.rays)
    if (r.multiplicity != 1) {
      res.reason = "ray of multiplicity " + std::to_string(r.multiplicity);
      return res;
    }
  std::vector<LinePiece> pieces;
  std::map<PointB, std::vector<Direction>> ends;
  for (const auto& s : d.segments) {
    int cls = static_cast<int>(constant_slot(direction_between(s.start, s.end)));
    int ps = line_parameter_slot(static_cast<EdgeClass>(cls));
    Rat a = s.start[ps], b = s.end[ps];
    if (b < a) std::swap(a, b);
    pieces.push_back(LinePiece{cls, s.start[cls], a, b});
    ends[s.start].push_back(direction_between(s.start, s.end));
    ends[s.end].push_back(direction_between(s.end, s.start));
  }
  for (const auto& r : d.rays) {
    const EdgeClass k = constant_slot(r.direction);
    const int cls = static_cast<int>(k);
    const Rat t = r.start[line_parameter_slot(k)];
    if (r.direction == forward_direction(k)) {
      pieces.push_back(LinePiece{cls, r.start[cls], t, std::nullopt});
    } else {
      pieces.push_back(LinePiece{cls, r.start[cls], std::nullopt, t});
    }
    ends[r.start].push_back(r.direction);
  }
  std::map<PointB, std::size_t> vertex_id;
  for (const auto& [p, dirs] : ends) {
    for (const auto& piece : pieces)
      if (piece.contains_inside(p)) {
        res.reason = "an edge passes through an endpoint";
        return res;
      }
    std::set<Direction> ds(dirs.begin(), dirs.end());
    const bool y = dirs.size() == 3 && (ds == std::set<Direction>{Direction::NW, Direction::NE, Direction::S} ||
                                        ds == std::set<Direction>{Direction::SE, Direction::SW, Direction::N});
    if (!y) {
      res.reason = "a vertex is not a Y";
      return res;
    }
    vertex_id[p] = res.graph.vertices.size();
    res.graph.vertices.push_back(p);
  }
  std::map<PointB, int> crossing_count;
  for (std::size_t i = 0; i < pieces.size(); ++i) {
    for (std::size_t j = i + 1; j < pieces.size(); ++j) {
      const auto &a = pieces[i], &b = pieces[j];
      if (a.cls == b.cls) continue;
      std::array<Rat, 3> c;
      c[static_cast<std::size_t>(a.cls)] = a.constant;
      c[static_cast<std::size_t>(b.cls)] = b.constant;
      const int rest = 3 - a.cls - b.cls;
      c[static_cast<std::size_t>(rest)] = -(a.constant + b.constant);
      PointB p(c[0], c[1], c[2]);
      if (a.contains_inside(p) && b.contains_inside(p)) crossing_count[p] += 1;
    }
  }
  for (const auto& [p, count] : crossing_count) {
    if (count != 1) {
      res.reason = "three edges meet at a crossing";
      return res;
    }
  }
  res.graph.crossings = crossing_count.size();
  for (const auto& s : d.segments) res.graph.edges.emplace_back(vertex_id.at(s.start), vertex_id.at(s.end));
  res.graph.rays = d.rays.size();
  res.simply_degenerate = true;
  return res;
}

SaturationReport check_saturation(const Spectrum& lam, const Spectrum& mu, const Spectrum& nu, std::uint64_t seed) {
  require_same_size(lam, mu, nu);
  if (!lam.is_integral() || !mu.is_integral() || !nu.is_integral())
    throw Error(ErrorCode::NOT_INTEGRAL, "saturation check needs integral spectra");
  SaturationReport rep;
  rep.feasible = decide_triple(lam, mu, nu);
  if (!rep.feasible) {
    rep.agrees = true;
    return rep;
  }
  auto lift = integral_largest_lift(make_boundary(lam, mu, nu), seed);
  rep.integral = is_integral(lift.honeycomb);
  rep.integral_witness = lift.honeycomb;
  rep.agrees = rep.integral && boundary(lift.honeycomb) == make_boundary(lam, mu, nu);
  return rep;
}

}  // namespace honeycomb
