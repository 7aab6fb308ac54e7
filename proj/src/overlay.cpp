#include "honeycomb/overlay.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

namespace honeycomb {

std::string_view to_string(Turning t) { return t == Turning::A_CW_TO_B ? "A_CW_TO_B" : "B_CW_TO_A"; }

std::string_view to_string(OverlayVerdict v) {
  switch (v) {
    case OverlayVerdict::ALL_A_CW: return "ALL_A_CW";
    case OverlayVerdict::ALL_B_CW: return "ALL_B_CW";
    case OverlayVerdict::MIXED: return "MIXED";
    case OverlayVerdict::NON_TRANSVERSE: return "NON_TRANSVERSE";
  }
  return "?";
}

namespace {

// An edge as a closed piece of the line {p[cls] = constant}, parametrised by
// the class's line parameter.
struct Piece {
  std::size_t edge;
  int cls;
  Rat constant;
  std::optional<Rat> lo, hi;  // nullopt = unbounded

  bool contains(const Rat& t) const { return (!lo || *lo <= t) && (!hi || t <= *hi); }
  bool inside(const Rat& t) const { return (!lo || *lo < t) && (!hi || t < *hi); }
};

std::vector<Piece> pieces_of(const Honeycomb& h) {
  const auto& g = h.graph();
  std::vector<Piece> out;
  for (std::size_t e = 0; e < g.edges().size(); ++e) {
    const auto& ed = g.edges()[e];
    const int cls = static_cast<int>(ed.cls);
    const int ps = line_parameter_slot(ed.cls);
    const PointB up = vertex_position(h, ed.up);
    Piece p{e, cls, h.coord(e), std::nullopt, std::nullopt};
    if (ed.internal()) {
      const PointB down = vertex_position(h, *ed.down);
      p.lo = min(up[ps], down[ps]);
      p.hi = max(up[ps], down[ps]);
    } else if (ed.side == forward_direction(ed.cls)) {
      p.lo = up[ps];
    } else {
      p.hi = up[ps];
    }
    out.push_back(std::move(p));
  }
  return out;
}

PointB point_on(int cls_a, const Rat& ca, int cls_b, const Rat& cb) {
  std::array<Rat, 3> c;
  c[static_cast<std::size_t>(cls_a)] = ca;
  c[static_cast<std::size_t>(cls_b)] = cb;
  c[static_cast<std::size_t>(3 - cls_a - cls_b)] = -(ca + cb);
  return PointB(c[0], c[1], c[2]);
}

// Point of the line of `p` at parameter t.
PointB at_parameter(const Piece& p, const Rat& t) {
  return point_on(p.cls, p.constant, line_parameter_slot(static_cast<EdgeClass>(p.cls)), t);
}

}  // namespace

OverlayAnalysis analyze_overlay(const Honeycomb& a, const Honeycomb& b) {
  OverlayAnalysis out;
  const auto pa = pieces_of(a), pb = pieces_of(b);
  bool any_a = false, any_b = false, bad = false;
  for (const auto& x : pa) {
    for (const auto& y : pb) {
      if (x.cls == y.cls) {
        if (x.constant != y.constant) continue;
        // Collinear: meet iff the parameter ranges overlap.
        std::optional<Rat> lo = x.lo, hi = x.hi;
        if (y.lo && (!lo || *lo < *y.lo)) lo = y.lo;
        if (y.hi && (!hi || *y.hi < *hi)) hi = y.hi;
        if (lo && hi && *hi < *lo) continue;
        out.intersections.push_back(Intersection{at_parameter(x, lo ? *lo : *hi), x.edge, y.edge, false, {}});
        bad = true;
        continue;
      }
      const PointB p = point_on(x.cls, x.constant, y.cls, y.constant);
      const Rat& tx = p[line_parameter_slot(static_cast<EdgeClass>(x.cls))];
      const Rat& ty = p[line_parameter_slot(static_cast<EdgeClass>(y.cls))];
      if (!x.contains(tx) || !y.contains(ty)) continue;
      Intersection in{p, x.edge, y.edge, x.inside(tx) && y.inside(ty), {}};
      if (in.transverse) {
        // Screen angles of the lines: X 150, Y 30, Z 90 degrees. A turns
        // clockwise to B when rotating A's line by -60 gives B's: A = X over
        // B = Z, Y over X, Z over Y.
        const bool a_cw = x.cls == (y.cls + 1) % 3;
        in.turning = a_cw ? Turning::A_CW_TO_B : Turning::B_CW_TO_A;
        (a_cw ? any_a : any_b) = true;
      } else {
        bad = true;
      }
      out.intersections.push_back(std::move(in));
    }
  }
  if (bad) {
    out.verdict = OverlayVerdict::NON_TRANSVERSE;
  } else if (any_a && any_b) {
    out.verdict = OverlayVerdict::MIXED;
  } else if (any_b) {
    out.verdict = OverlayVerdict::ALL_B_CW;
  } else {
    out.verdict = OverlayVerdict::ALL_A_CW;
  }
  return out;
}

// ---------------------------------------------------------------------------

Rat FacetInequality::value(const BoundaryTriple& b) const {
  if (static_cast<int>(b.lambda.size()) != n || b.mu.size() != b.lambda.size() || b.nu.size() != b.lambda.size())
    throw Error(ErrorCode::DIMENSION_MISMATCH, "inequality is for another size");
  Rat s;
  for (int i : lambda_indices) s += b.lambda[static_cast<std::size_t>(i - 1)];
  for (int i : mu_indices) s += b.mu[static_cast<std::size_t>(i - 1)];
  for (int i : nu_indices) s += b.nu[static_cast<std::size_t>(i - 1)];
  return s;
}

std::vector<int> FacetInequality::sum_nu_indices() const {
  std::vector<int> out;
  for (int k : nu_indices) out.push_back(n + 1 - k);
  std::sort(out.begin(), out.end());
  return out;
}

std::string FacetInequality::str() const {
  std::string s;
  auto add = [&](char c, const std::vector<int>& idx) {
    for (int i : idx) {
      if (!s.empty()) s += '+';
      s += c + std::to_string(i);
    }
  };
  add('l', lambda_indices);
  add('m', mu_indices);
  add('n', nu_indices);
  return (s.empty() ? "0" : s) + " >= 0";
}

namespace {

// 1-based positions of a's values inside the decreasing merge of a and b.
// Equal values cannot occur in a transverse overlay (the rays would overlap).
std::vector<int> merged_positions(const std::vector<Rat>& a, const std::vector<Rat>& b) {
  std::vector<int> out;
  std::size_t i = 0, j = 0;
  int pos = 1;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && b[j] < a[i])) {
      out.push_back(pos);
      ++i;
    } else {
      ++j;
    }
    ++pos;
  }
  return out;
}

void require_clockwise(const OverlayAnalysis& an) {
  if (an.verdict == OverlayVerdict::NON_TRANSVERSE)
    throw Error(ErrorCode::NON_TRANSVERSE, "the overlay has a non-transverse intersection");
  if (an.verdict != OverlayVerdict::ALL_A_CW)
    throw Error(ErrorCode::NOT_CLOCKWISE, std::string("overlay verdict is ") + std::string(to_string(an.verdict)));
}

}  // namespace

FacetInequality facet_inequality(const Honeycomb& a, const Honeycomb& b) {
  const auto an = analyze_overlay(a, b);
  if (an.verdict != OverlayVerdict::ALL_A_CW)
    throw Error(ErrorCode::NOT_CLOCKWISE, std::string("overlay verdict is ") + std::string(to_string(an.verdict)));
  const auto ba = boundary(a), bb = boundary(b);
  FacetInequality f;
  f.n = a.n() + b.n();
  f.lambda_indices = merged_positions(ba.lambda, bb.lambda);
  f.mu_indices = merged_positions(ba.mu, bb.mu);
  f.nu_indices = merged_positions(ba.nu, bb.nu);
  return f;
}

Honeycomb shrink(const Honeycomb& a, const Honeycomb& b) {
  const auto an = analyze_overlay(a, b);
  require_clockwise(an);
  const auto& g = a.graph();
  std::vector<long> crossings(g.edges().size(), 0);
  for (const auto& in : an.intersections) ++crossings[in.edge_a];

  // Lay out the vertices edge by edge from the corner.
  const int n = g.n();
  std::vector<std::optional<PointB>> pos(g.vertices().size());
  const std::size_t root = g.vertex_index(true, n - 1, 0);
  pos[root] = PointB();
  std::deque<std::size_t> queue{root};
  std::vector<std::vector<std::size_t>> incident(g.vertices().size());
  for (std::size_t e : g.internal_edges()) {
    incident[g.edges()[e].up].push_back(e);
    incident[*g.edges()[e].down].push_back(e);
  }
  auto step = [&](std::size_t e) {
    const auto& ed = g.edges()[e];
    return Rat(crossings[e]) * direction_point(forward_direction(ed.cls));
  };
  while (!queue.empty()) {
    const std::size_t v = queue.front();
    queue.pop_front();
    for (std::size_t e : incident[v]) {
      const auto& ed = g.edges()[e];
      const bool from_up = ed.up == v;
      const std::size_t w = from_up ? *ed.down : ed.up;
      const PointB expect = from_up ? *pos[v] + step(e) : *pos[v] - step(e);
      if (!pos[w]) {
        pos[w] = expect;
        queue.push_back(w);
      } else if (*pos[w] != expect) {
        throw std::logic_error("crossing counts do not close up around a hexagon");
      }
    }
  }
  std::vector<Rat> coords(g.edges().size());
  for (std::size_t e = 0; e < g.edges().size(); ++e) coords[e] = (*pos[g.edges()[e].up])[static_cast<int>(g.edges()[e].cls)];
  Honeycomb out(a.graph_ptr(), std::move(coords));
  for (std::size_t e : g.internal_edges())
    if (edge_length(out, e) != Rat(crossings[e])) throw std::logic_error("shrink produced inconsistent lengths");
  return out;
}

Honeycomb translated(const Honeycomb& h, const PointB& v) {
  std::vector<Rat> coords = h.coords();
  for (std::size_t e = 0; e < coords.size(); ++e) coords[e] += v[static_cast<int>(h.graph().edges()[e].cls)];
  return Honeycomb(h.graph_ptr(), std::move(coords));
}

Honeycomb one_honeycomb(const PointB& p) { return Honeycomb(build_graph(1), {p.x(), p.y(), p.z()}); }

}  // namespace honeycomb
