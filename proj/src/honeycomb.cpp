#include "honeycomb/honeycomb.hpp"

#include <algorithm>
#include <mutex>
#include <sstream>
#include <tuple>

namespace honeycomb {

std::string_view to_string(ErrorCode c) {
  switch (c) {
    case ErrorCode::DIMENSION_MISMATCH: return "DIMENSION_MISMATCH";
    case ErrorCode::NOT_DECREASING: return "NOT_DECREASING";
    case ErrorCode::INVALID_HONEYCOMB: return "INVALID_HONEYCOMB";
    case ErrorCode::OUT_OF_CONE: return "OUT_OF_CONE";
    case ErrorCode::INFEASIBLE_TRIPLE: return "INFEASIBLE_TRIPLE";
    case ErrorCode::TOO_LARGE: return "TOO_LARGE";
    case ErrorCode::NOT_CLOCKWISE: return "NOT_CLOCKWISE";
    case ErrorCode::NON_TRANSVERSE: return "NON_TRANSVERSE";
    case ErrorCode::NOT_HERMITIAN: return "NOT_HERMITIAN";
    case ErrorCode::PARSE_ERROR: return "PARSE_ERROR";
    case ErrorCode::NOT_INTEGRAL: return "NOT_INTEGRAL";
  }
  return "?";
}

namespace {

std::string up_key(int a, int b, EdgeClass k) {
  return "up:" + std::to_string(a) + "," + std::to_string(b) + ":" + std::string(to_string(k));
}

}  // namespace

HoneycombGraph::HoneycombGraph(int n) : n_(n) {
  if (n < 1) throw std::invalid_argument("honeycomb size must be at least 1");
  std::map<std::tuple<bool, int, int>, std::size_t> vindex;
  for (int a = 0; a < n; ++a) {
    for (int b = 0; a + b <= n - 1; ++b) {
      vindex[{true, a, b}] = vertices_.size();
      vertices_.push_back(Vertex{true, a, b, n - 1 - a - b});
      if (a + b <= n - 2) {
        vindex[{false, a, b}] = vertices_.size();
        vertices_.push_back(Vertex{false, a, b, n - 2 - a - b});
      }
    }
  }
  incident_.assign(vertices_.size(), {0, 0, 0});
  side_edges_[0].resize(static_cast<std::size_t>(n));
  side_edges_[1].resize(static_cast<std::size_t>(n));
  side_edges_[2].resize(static_cast<std::size_t>(n));
  for (std::size_t v = 0; v < vertices_.size(); ++v) {
    const Vertex& vx = vertices_[v];
    if (!vx.up) continue;
    const int a = vx.a, b = vx.b, c = vx.c;
    for (EdgeClass k : {EdgeClass::X, EdgeClass::Y, EdgeClass::Z}) {
      Edge e;
      e.cls = k;
      e.up = v;
      int slot = static_cast<int>(k);
      int idx = slot == 0 ? a : (slot == 1 ? b : c);
      if (idx >= 1) {
        int da = a - (slot == 0), db = b - (slot == 1);
        e.down = vindex.at({false, da, db});
        e.key = up_key(a, b, k);
      } else if (k == EdgeClass::X) {
        e.side = Direction::NW;
        e.label = n - b;
        e.key = "bdy:NW:" + std::to_string(e.label);
      } else if (k == EdgeClass::Y) {
        e.side = Direction::NE;
        e.label = a + 1;
        e.key = "bdy:NE:" + std::to_string(e.label);
      } else {
        e.side = Direction::S;
        e.label = b + 1;
        e.key = "bdy:S:" + std::to_string(e.label);
      }
      const std::size_t id = edges_.size();
      incident_[v][slot] = id;
      if (e.down) {
        incident_[*e.down][slot] = id;
        internal_.push_back(id);
      } else {
        boundary_.push_back(id);
        side_edges_[slot][static_cast<std::size_t>(e.label - 1)] = id;
      }
      key_index_[e.key] = id;
      edges_.push_back(std::move(e));
    }
  }
  for (int i = 0; i <= n; ++i)
    for (int j = 0; i + j <= n; ++j) points_.push_back({i, j, n - i - j});
  potential_terms_.resize(edges_.size());
  for (std::size_t id = 0; id < edges_.size(); ++id) {
    const Vertex& u = vertices_[edges_[id].up];
    const int a = u.a, b = u.b, c = u.c;
    switch (edges_[id].cls) {
      case EdgeClass::X: potential_terms_[id] = {point_index(a, b + 1, c), point_index(a, b, c + 1)}; break;
      case EdgeClass::Y: potential_terms_[id] = {point_index(a, b, c + 1), point_index(a + 1, b, c)}; break;
      case EdgeClass::Z: potential_terms_[id] = {point_index(a + 1, b, c), point_index(a, b + 1, c)}; break;
    }
  }
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; i + j <= n - 1; ++j) {
      const int k = n - i - j;
      Hexagon hx;
      hx.center = {i, j, k};
      auto up = [&](int a, int b) { return vindex.at({true, a, b}); };
      auto dn = [&](int a, int b) { return vindex.at({false, a, b}); };
      hx.edges = {edge_at(up(i, j - 1), EdgeClass::X), edge_at(up(i - 1, j), EdgeClass::Y),
                  edge_at(up(i - 1, j), EdgeClass::Z), edge_at(up(i, j), EdgeClass::X),
                  edge_at(up(i, j), EdgeClass::Y),     edge_at(up(i, j - 1), EdgeClass::Z)};
      hx.vertices = {up(i, j - 1), dn(i - 1, j - 1), up(i - 1, j), dn(i - 1, j), up(i, j), dn(i, j - 1)};
      hexagons_.push_back(hx);
    }
  }
}

std::size_t HoneycombGraph::vertex_index(bool up, int a, int b) const {
  const int top = up ? n_ - 1 : n_ - 2;
  if (a < 0 || b < 0 || a + b > top) throw std::out_of_range("vertex out of range");
  // Vertices are laid out row by row in a; row a holds the Ups b = 0..n-1-a,
  // each followed by its Down when one exists.
  std::size_t idx = 0;
  for (int r = 0; r < a; ++r) idx += static_cast<std::size_t>((n_ - r) + (n_ - 1 - r));
  idx += static_cast<std::size_t>(2 * b);
  if (!up) idx += 1;
  return idx;
}

std::size_t HoneycombGraph::edge_index(const std::string& key) const {
  auto it = key_index_.find(key);
  if (it == key_index_.end()) throw std::out_of_range("unknown edge key: " + key);
  return it->second;
}

std::optional<std::size_t> HoneycombGraph::find_edge(const std::string& key) const {
  auto it = key_index_.find(key);
  if (it == key_index_.end()) return std::nullopt;
  return it->second;
}

std::size_t HoneycombGraph::point_index(int i, int j, int k) const {
  if (i < 0 || j < 0 || k < 0 || i + j + k != n_) throw std::out_of_range("lattice point out of range");
  std::size_t idx = 0;
  for (int r = 0; r < i; ++r) idx += static_cast<std::size_t>(n_ - r + 1);
  return idx + static_cast<std::size_t>(j);
}

bool HoneycombGraph::point_on_boundary(std::size_t p) const {
  const auto& q = points_[p];
  return q[0] == 0 || q[1] == 0 || q[2] == 0;
}

std::size_t HoneycombGraph::hexagon_point(std::size_t f) const {
  const auto& c = hexagons_.at(f).center;
  return point_index(c[0], c[1], c[2]);
}

std::pair<std::size_t, std::size_t> HoneycombGraph::length_terms(std::size_t e, bool alternate) const {
  const Edge& ed = edges_.at(e);
  if (!ed.internal()) throw std::invalid_argument("boundary rays have no length");
  const std::size_t u = ed.up, d = *ed.down;
  switch (ed.cls) {
    case EdgeClass::Z:  // y_up - y_down = x_down - x_up
      return alternate ? std::pair{edge_at(d, EdgeClass::X), edge_at(u, EdgeClass::X)}
                       : std::pair{edge_at(u, EdgeClass::Y), edge_at(d, EdgeClass::Y)};
    case EdgeClass::X:  // down is the NW end: z_up - z_down = y_down - y_up
      return alternate ? std::pair{edge_at(d, EdgeClass::Y), edge_at(u, EdgeClass::Y)}
                       : std::pair{edge_at(u, EdgeClass::Z), edge_at(d, EdgeClass::Z)};
    case EdgeClass::Y:  // down is the NE end: x_up - x_down = z_down - z_up
      return alternate ? std::pair{edge_at(d, EdgeClass::Z), edge_at(u, EdgeClass::Z)}
                       : std::pair{edge_at(u, EdgeClass::X), edge_at(d, EdgeClass::X)};
  }
  throw std::logic_error("bad edge class");
}

std::shared_ptr<const HoneycombGraph> build_graph(int n) {
  if (n < 1 || n > 400) throw std::invalid_argument("honeycomb size must lie in [1, 400]");
  static std::mutex mu;
  static std::map<int, std::shared_ptr<const HoneycombGraph>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = cache[n];
  if (!slot) slot = std::make_shared<const HoneycombGraph>(n);
  return slot;
}

// ---------------------------------------------------------------------------

Honeycomb::Honeycomb(std::shared_ptr<const HoneycombGraph> graph, std::vector<Rat> coords)
    : graph_(std::move(graph)), coords_(std::move(coords)) {
  if (!graph_) throw std::invalid_argument("null graph");
  if (coords_.size() != graph_->edges().size())
    throw Error(ErrorCode::INVALID_HONEYCOMB, "expected " + std::to_string(graph_->edges().size()) + " coordinates");
  for (std::size_t v = 0; v < graph_->vertices().size(); ++v) {
    Rat s = coords_[graph_->edge_at(v, EdgeClass::X)] + coords_[graph_->edge_at(v, EdgeClass::Y)] +
            coords_[graph_->edge_at(v, EdgeClass::Z)];
    if (!s.is_zero()) throw Error(ErrorCode::INVALID_HONEYCOMB, "vertex coordinates do not sum to zero");
  }
}

bool Honeycomb::in_cone() const {
  for (std::size_t e : graph_->internal_edges())
    if (edge_length(*this, e).sign() < 0) return false;
  return true;
}

PointB vertex_position(const Honeycomb& h, std::size_t v) {
  const auto& g = h.graph();
  return PointB(h.coord(g.edge_at(v, EdgeClass::X)), h.coord(g.edge_at(v, EdgeClass::Y)),
                h.coord(g.edge_at(v, EdgeClass::Z)));
}

BoundaryTriple boundary(const Honeycomb& h) {
  const auto& g = h.graph();
  BoundaryTriple b;
  for (int i = 1; i <= g.n(); ++i) {
    b.lambda.push_back(h.coord(g.lambda_edge(i)));
    b.mu.push_back(h.coord(g.mu_edge(i)));
    b.nu.push_back(h.coord(g.nu_edge(i)));
  }
  return b;
}

Rat edge_length(const Honeycomb& h, std::size_t e) {
  const auto& g = h.graph();
  auto [p, m] = g.length_terms(e, false);
  auto [p2, m2] = g.length_terms(e, true);
  Rat len = h.coord(p) - h.coord(m);
  if (len != h.coord(p2) - h.coord(m2)) throw std::logic_error("edge length differences disagree");
  return len;
}

bool is_integral(const Honeycomb& h) {
  return std::all_of(h.coords().begin(), h.coords().end(), [](const Rat& r) { return r.is_integer(); });
}

std::vector<Rat> potential_of(const Honeycomb& h) {
  const auto& g = h.graph();
  const int n = g.n();
  std::vector<Rat> pot(g.points().size());
  // Walk each row i from the a = 0 side using Z edges, then step rows with Y edges.
  // Row i = 0: X edges of Up(0,b,c) give h(0,b+1,c) - h(0,b,c+1).
  for (int i = 0; i <= n; ++i) {
    if (i > 0) {
      // Y(Up(i-1,0,c)) = h(i-1,0,c+1) - h(i,0,c)
      const int c = n - i;
      pot[g.point_index(i, 0, c)] =
          pot[g.point_index(i - 1, 0, c + 1)] - h.coord(g.edge_at(g.vertex_index(true, i - 1, 0), EdgeClass::Y));
    }
    for (int j = 1; i + j <= n; ++j) {
      const int k = n - i - j;
      if (i < n) {
        // X(Up(i,j-1,k)) = h(i,j,k) - h(i,j-1,k+1)
        pot[g.point_index(i, j, k)] =
            pot[g.point_index(i, j - 1, k + 1)] + h.coord(g.edge_at(g.vertex_index(true, i, j - 1), EdgeClass::X));
      }
    }
  }
  return pot;
}

Honeycomb from_potential(std::shared_ptr<const HoneycombGraph> g, std::span<const Rat> potential) {
  if (potential.size() != g->points().size()) throw Error(ErrorCode::DIMENSION_MISMATCH, "potential size");
  std::vector<Rat> coords(g->edges().size());
  for (std::size_t e = 0; e < coords.size(); ++e) {
    auto [p, m] = g->potential_terms(e);
    coords[e] = potential[p] - potential[m];
  }
  return Honeycomb(std::move(g), std::move(coords));
}

std::vector<Rat> boundary_potential(const HoneycombGraph& g, const BoundaryTriple& b) {
  const int n = g.n();
  const auto sn = static_cast<std::size_t>(n);
  if (b.lambda.size() != sn || b.mu.size() != sn || b.nu.size() != sn)
    throw Error(ErrorCode::DIMENSION_MISMATCH, "boundary lists must have length " + std::to_string(n));
  std::vector<Rat> pot(g.points().size());
  Rat acc;
  for (int m = 1; m <= n; ++m) {
    acc += b.lambda[static_cast<std::size_t>(n - m)];
    pot[g.point_index(0, m, n - m)] = acc;
  }
  const Rat top = acc;
  acc = Rat();
  for (int m = 1; m <= n; ++m) {
    acc -= b.mu[static_cast<std::size_t>(m - 1)];
    pot[g.point_index(m, 0, n - m)] = acc;
  }
  for (int m = 1; m <= n; ++m) {
    acc -= b.nu[static_cast<std::size_t>(m - 1)];
    if (m < n) pot[g.point_index(n - m, m, 0)] = acc;
  }
  if (acc != top) throw Error(ErrorCode::INFEASIBLE_TRIPLE, "boundary values do not sum to zero");
  return pot;
}

PotentialForm length_form(const HoneycombGraph& g, std::size_t e) {
  auto [p, m] = g.length_terms(e);
  std::map<std::size_t, int> acc;
  auto [pp, pm] = g.potential_terms(p);
  auto [mp, mm] = g.potential_terms(m);
  acc[pp] += 1;
  acc[pm] -= 1;
  acc[mp] -= 1;
  acc[mm] += 1;
  PotentialForm out;
  for (auto [k, v] : acc)
    if (v != 0) out.emplace_back(k, v);
  return out;
}

std::vector<Rat> breathing_vector(const HoneycombGraph& g, std::size_t f) {
  const std::size_t p = g.hexagon_point(f);
  std::vector<Rat> v(g.edges().size());
  for (std::size_t e : g.hexagons()[f].edges) {
    auto [plus, minus] = g.potential_terms(e);
    // Raising h(p) by one changes this coordinate by +1 or -1.
    v[e] = plus == p ? Rat(1) : (minus == p ? Rat(-1) : Rat());
  }
  // Orient so that hexagon edges lengthen.
  const std::size_t e0 = g.hexagons()[f].edges[0];
  auto [lp, lm] = g.length_terms(e0);
  if ((v[lp] - v[lm]).sign() < 0)
    for (auto& x : v) x = -x;
  return v;
}

BreatheLimit breathe_limit(const Honeycomb& h, std::size_t f, int direction) {
  const auto& g = h.graph();
  const auto v = breathing_vector(g, f);
  BreatheLimit out;
  bool bounded = false;
  for (std::size_t e : g.internal_edges()) {
    auto [p, m] = g.length_terms(e);
    Rat rate = v[p] - v[m];
    if (direction < 0) rate = -rate;
    if (rate.sign() >= 0) continue;
    Rat room = edge_length(h, e) / -rate;
    if (!bounded || room < out.max_t) {
      out.max_t = room;
      out.blocking = e;
      bounded = true;
    }
  }
  if (!bounded) throw std::logic_error("hexagon breathing is unbounded");
  if (out.max_t.sign() < 0) out.max_t = Rat();
  return out;
}

Honeycomb breathe(const Honeycomb& h, std::size_t f, const Rat& t) {
  const auto& g = h.graph();
  if (f >= g.hexagons().size()) throw std::out_of_range("hexagon index out of range");
  if (t.is_zero()) return h;
  auto lim = breathe_limit(h, f, t.sign());
  if (t.abs() > lim.max_t) {
    Error err(ErrorCode::OUT_OF_CONE, "breathing by " + t.str() + " exceeds the admissible " + lim.max_t.str());
    err.max_t = lim.max_t;
    if (lim.blocking) err.blocking_edge = g.edges()[*lim.blocking].key;
    throw err;
  }
  auto v = breathing_vector(g, f);
  std::vector<Rat> coords = h.coords();
  for (std::size_t e = 0; e < coords.size(); ++e)
    if (!v[e].is_zero()) coords[e] += t * v[e];
  return Honeycomb(h.graph_ptr(), std::move(coords));
}

// ---------------------------------------------------------------------------

namespace {

// A piece of a line: [lo, hi] in the line parameter, nullopt meaning infinite.
struct Piece {
  std::optional<Rat> lo, hi;
  int mult;
};

struct LineKey {
  int cls;
  Rat constant;
  auto operator<=>(const LineKey&) const = default;
  bool operator==(const LineKey&) const = default;
};

PointB point_on_line(int cls, const Rat& constant, const Rat& t) {
  const int ps = line_parameter_slot(static_cast<EdgeClass>(cls));
  std::array<Rat, 3> c;
  c[static_cast<std::size_t>(cls)] = constant;
  c[static_cast<std::size_t>(ps)] = t;
  const int rest = 3 - cls - ps;
  c[static_cast<std::size_t>(rest)] = -(constant + t);
  return PointB(c[0], c[1], c[2]);
}

}  // namespace

Diagram Diagram::canonical() const {
  std::map<LineKey, std::vector<Piece>> lines;
  for (const auto& s : segments) {
    if (s.multiplicity <= 0) throw std::invalid_argument("multiplicity must be positive");
    int cls = -1;
    for (int k = 0; k < 3; ++k)
      if (s.start[k] == s.end[k]) cls = k;
    if (s.start == s.end) continue;  // zero length carries no measure
    if (cls < 0) throw std::invalid_argument("segment is not parallel to a cardinal direction");
    const int ps = line_parameter_slot(static_cast<EdgeClass>(cls));
    Rat a = s.start[ps], b = s.end[ps];
    if (b < a) std::swap(a, b);
    lines[{cls, s.start[cls]}].push_back(Piece{a, b, s.multiplicity});
  }
  for (const auto& r : rays) {
    if (r.multiplicity <= 0) throw std::invalid_argument("multiplicity must be positive");
    const EdgeClass k = constant_slot(r.direction);
    const int cls = static_cast<int>(k);
    const int ps = line_parameter_slot(k);
    const Rat t = r.start[ps];
    if (r.direction == forward_direction(k)) {
      lines[{cls, r.start[cls]}].push_back(Piece{t, std::nullopt, r.multiplicity});
    } else {
      lines[{cls, r.start[cls]}].push_back(Piece{std::nullopt, t, r.multiplicity});
    }
  }
  Diagram out;
  for (auto& [key, pieces] : lines) {
    // Breakpoints; -inf/+inf handled by flags.
    std::vector<Rat> cuts;
    bool neg_inf = false, pos_inf = false;
    for (const auto& p : pieces) {
      if (p.lo) cuts.push_back(*p.lo); else neg_inf = true;
      if (p.hi) cuts.push_back(*p.hi); else pos_inf = true;
    }
    std::sort(cuts.begin(), cuts.end());
    cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
    // Elementary intervals: (-inf, c0), (c0, c1), ..., (c_last, +inf).
    struct Cell { std::optional<Rat> lo, hi; int mult; };
    std::vector<Cell> cells;
    auto covered = [&](const std::optional<Rat>& lo, const std::optional<Rat>& hi) {
      int m = 0;
      for (const auto& p : pieces) {
        bool left_ok = !p.lo || (lo && *p.lo <= *lo);
        bool right_ok = !p.hi || (hi && *hi <= *p.hi);
        if (left_ok && right_ok) m += p.mult;
      }
      return m;
    };
    if (neg_inf && !cuts.empty()) cells.push_back({std::nullopt, cuts.front(), 0});
    for (std::size_t i = 0; i + 1 < cuts.size(); ++i) cells.push_back({cuts[i], cuts[i + 1], 0});
    if (pos_inf && !cuts.empty()) cells.push_back({cuts.back(), std::nullopt, 0});
    for (auto& c : cells) c.mult = covered(c.lo, c.hi);
    // Merge neighbours of equal multiplicity.
    std::vector<Cell> merged;
    for (auto& c : cells) {
      if (c.mult == 0) continue;
      if (!merged.empty() && merged.back().hi && c.lo && *merged.back().hi == *c.lo &&
          merged.back().mult == c.mult) {
        merged.back().hi = c.hi;
      } else {
        merged.push_back(c);
      }
    }
    const EdgeClass k = static_cast<EdgeClass>(key.cls);
    for (const auto& c : merged) {
      if (c.lo && c.hi) {
        out.segments.push_back(
            Segment{point_on_line(key.cls, key.constant, *c.lo), point_on_line(key.cls, key.constant, *c.hi), c.mult});
      } else if (c.lo) {
        out.rays.push_back(Ray{point_on_line(key.cls, key.constant, *c.lo), forward_direction(k), c.mult});
      } else if (c.hi) {
        out.rays.push_back(Ray{point_on_line(key.cls, key.constant, *c.hi), opposite(forward_direction(k)), c.mult});
      } else {
        throw std::invalid_argument("diagram contains a full line");
      }
    }
  }
  return out;
}

Diagram to_diagram(const Honeycomb& h) {
  const auto& g = h.graph();
  Diagram d;
  for (std::size_t e : g.internal_edges()) {
    if (edge_length(h, e).is_zero()) continue;
    d.segments.push_back(Segment{vertex_position(h, g.edges()[e].up), vertex_position(h, *g.edges()[e].down), 1});
  }
  for (std::size_t e : g.boundary_edges()) d.rays.push_back(Ray{vertex_position(h, g.edges()[e].up), g.edges()[e].side, 1});
  return d.canonical();
}

Diagram overlay(const Diagram& a, const Diagram& b) {
  Diagram d = a;
  d.segments.insert(d.segments.end(), b.segments.begin(), b.segments.end());
  d.rays.insert(d.rays.end(), b.rays.begin(), b.rays.end());
  return d.canonical();
}

}  // namespace honeycomb
