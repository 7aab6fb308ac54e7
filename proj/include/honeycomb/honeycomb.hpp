#pragma once

// The standard nondegenerate topology of an n-honeycomb, honeycombs as edge
// coordinates on it, and the measure-level Diagram representation.
//
// Vertices are the upward and downward unit triangles of the size-n
// triangulated triangle. An upward vertex Up(a,b,c) has a + b + c = n - 1 and
// carries one edge of each class: its NW edge (class X), its NE edge (class Y)
// and its S edge (class Z). A downward vertex Down(a,b,c) has a + b + c = n - 2
// and meets Up(a+1,b,c) along X, Up(a,b+1,c) along Y and Up(a,b,c+1) along Z.
// Edges are therefore indexed by (up vertex, class); the edge of Up(a,b,c) in
// class X is a boundary ray when a = 0, in class Y when b = 0, in class Z when c = 0.
//
// Boundary labels: lambda_i is the NW ray of Up(0, n-i, i-1), mu_j the NE ray
// of Up(j-1, 0, n-j) and nu_k the S ray of Up(n-k, k-1, 0). With this labelling
// the three edges of a 2-honeycomb have lengths
//   l2+m1+n1, l1+m2+n1 (lower left), l1+m1+n2.
//
// Potentials: every honeycomb is the image of a function h on the lattice
// points (i,j,k), i + j + k = n, unique once h(0,0,n) = 0:
//   X(Up(a,b,c)) = h(a,b+1,c) - h(a,b,c+1)
//   Y(Up(a,b,c)) = h(a,b,c+1) - h(a+1,b,c)
//   Z(Up(a,b,c)) = h(a+1,b,c) - h(a,b+1,c)
// Interior lattice points correspond one to one with hexagons.

#include <array>
#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "honeycomb/error.hpp"
#include "honeycomb/plane.hpp"
#include "honeycomb/rational.hpp"

namespace honeycomb {

struct Vertex {
  bool up = true;
  int a = 0, b = 0, c = 0;
};

struct Edge {
  EdgeClass cls = EdgeClass::X;
  std::size_t up = 0;                // index of the Up endpoint
  std::optional<std::size_t> down;   // Down endpoint for internal edges
  // Boundary rays only: side (NW, NE or S) and 1-based label within the side.
  Direction side = Direction::NW;
  int label = 0;
  std::string key;                   // "up:a,b:X" or "bdy:NW:i"
  bool internal() const { return down.has_value(); }
};

struct Hexagon {
  std::array<int, 3> center{};               // interior lattice point (i,j,k)
  std::array<std::size_t, 6> edges{};        // cyclic, classes X,Y,Z,X,Y,Z
  std::array<std::size_t, 6> vertices{};     // vertices[t] joins edges[t-1] and edges[t]
};

class HoneycombGraph {
 public:
  explicit HoneycombGraph(int n);

  int n() const { return n_; }
  const std::vector<Vertex>& vertices() const { return vertices_; }
  const std::vector<Edge>& edges() const { return edges_; }
  const std::vector<std::size_t>& internal_edges() const { return internal_; }
  const std::vector<std::size_t>& boundary_edges() const { return boundary_; }
  const std::vector<Hexagon>& hexagons() const { return hexagons_; }

  /// Index of Up(a,b,n-1-a-b) or Down(a,b,n-2-a-b). Throws std::out_of_range.
  std::size_t vertex_index(bool up, int a, int b) const;
  /// The edge of class k at vertex v.
  std::size_t edge_at(std::size_t v, EdgeClass k) const { return incident_[v][static_cast<int>(k)]; }
  std::size_t edge_index(const std::string& key) const;
  std::optional<std::size_t> find_edge(const std::string& key) const;

  std::size_t lambda_edge(int i) const { return side_edges_[0].at(static_cast<std::size_t>(i - 1)); }
  std::size_t mu_edge(int j) const { return side_edges_[1].at(static_cast<std::size_t>(j - 1)); }
  std::size_t nu_edge(int k) const { return side_edges_[2].at(static_cast<std::size_t>(k - 1)); }

  /// Edges (plus, minus) whose coordinate difference is the length of internal
  /// edge e. `alternate` selects the second of the two available differences.
  std::pair<std::size_t, std::size_t> length_terms(std::size_t e, bool alternate = false) const;

  // Lattice points of the potential.
  const std::vector<std::array<int, 3>>& points() const { return points_; }
  std::size_t point_index(int i, int j, int k) const;
  bool point_on_boundary(std::size_t p) const;
  /// Coordinate of edge e equals h[plus] - h[minus].
  std::pair<std::size_t, std::size_t> potential_terms(std::size_t e) const { return potential_terms_[e]; }
  /// Interior point of hexagon f.
  std::size_t hexagon_point(std::size_t f) const;

 private:
  int n_;
  std::vector<Vertex> vertices_;
  std::vector<std::array<std::size_t, 3>> incident_;
  std::vector<Edge> edges_;
  std::vector<std::size_t> internal_, boundary_;
  std::array<std::vector<std::size_t>, 3> side_edges_;
  std::vector<Hexagon> hexagons_;
  std::map<std::string, std::size_t> key_index_;
  std::vector<std::array<int, 3>> points_;
  std::vector<std::pair<std::size_t, std::size_t>> potential_terms_;
};

/// Memoised, thread-safe. Throws std::invalid_argument for n < 1 or n > 400.
std::shared_ptr<const HoneycombGraph> build_graph(int n);

struct BoundaryTriple {
  std::vector<Rat> lambda, mu, nu;
  friend bool operator==(const BoundaryTriple&, const BoundaryTriple&) = default;
};

class Honeycomb {
 public:
  /// Throws Error(INVALID_HONEYCOMB) if some vertex's three coordinates do not
  /// sum to zero or the vector has the wrong length.
  Honeycomb(std::shared_ptr<const HoneycombGraph> graph, std::vector<Rat> coords);

  const HoneycombGraph& graph() const { return *graph_; }
  std::shared_ptr<const HoneycombGraph> graph_ptr() const { return graph_; }
  int n() const { return graph_->n(); }
  const std::vector<Rat>& coords() const { return coords_; }
  const Rat& coord(std::size_t e) const { return coords_[e]; }

  /// True iff every internal edge has nonnegative length.
  bool in_cone() const;

  friend bool operator==(const Honeycomb& a, const Honeycomb& b) {
    return a.n() == b.n() && a.coords_ == b.coords_;
  }

 private:
  std::shared_ptr<const HoneycombGraph> graph_;
  std::vector<Rat> coords_;
};

PointB vertex_position(const Honeycomb& h, std::size_t v);
BoundaryTriple boundary(const Honeycomb& h);
/// Length of an internal edge; both available coordinate differences are
/// computed and must agree.
Rat edge_length(const Honeycomb& h, std::size_t e);
bool is_integral(const Honeycomb& h);

/// Potential of h on every lattice point, normalised by h(0,0,n) = 0.
std::vector<Rat> potential_of(const Honeycomb& h);
/// Honeycomb with the given potential.
Honeycomb from_potential(std::shared_ptr<const HoneycombGraph> g, std::span<const Rat> potential);
/// Potential values on the boundary lattice points (interior entries left 0).
/// Throws Error(DIMENSION_MISMATCH) on wrong lengths; requires zero trace.
std::vector<Rat> boundary_potential(const HoneycombGraph& g, const BoundaryTriple& b);

/// Sparse linear form over lattice-point potentials.
using PotentialForm = std::vector<std::pair<std::size_t, int>>;
/// Length of internal edge e as a form in the potential (four terms).
PotentialForm length_form(const HoneycombGraph& g, std::size_t e);

/// Vector on edge coordinates dilating hexagon f outwards: supported on the six
/// hexagon edges with alternating signs, in the kernel of every vertex equality.
std::vector<Rat> breathing_vector(const HoneycombGraph& g, std::size_t f);

struct BreatheLimit {
  Rat max_t;                            // largest admissible |t| in the requested direction
  std::optional<std::size_t> blocking;  // first edge to reach length 0
};
/// Admissible range for breathing hexagon f in direction sign(t) (t != 0).
BreatheLimit breathe_limit(const Honeycomb& h, std::size_t f, int direction);
/// coord + t * breathing_vector. Throws Error(OUT_OF_CONE) carrying max_t and
/// the blocking edge when some length would turn negative.
Honeycomb breathe(const Honeycomb& h, std::size_t f, const Rat& t);

// ---------------------------------------------------------------------------
// Diagrams

struct Segment {
  PointB start, end;
  int multiplicity = 1;
  friend bool operator==(const Segment&, const Segment&) = default;
};

struct Ray {
  PointB start;
  Direction direction = Direction::NW;
  int multiplicity = 1;
  friend bool operator==(const Ray&, const Ray&) = default;
};

struct Diagram {
  std::vector<Segment> segments;
  std::vector<Ray> rays;

  /// Maximal non-overlapping pieces with summed multiplicities, in a fixed
  /// order. Throws std::invalid_argument on a non-cardinal segment.
  Diagram canonical() const;
  /// Equality of associated measures.
  bool same_measure(const Diagram& o) const { return canonical() == o.canonical(); }
  friend bool operator==(const Diagram&, const Diagram&) = default;
};

/// Canonical diagram of h; zero-length edges are dropped.
Diagram to_diagram(const Honeycomb& h);
Diagram overlay(const Diagram& a, const Diagram& b);

}  // namespace honeycomb
