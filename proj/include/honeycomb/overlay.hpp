#pragma once

// Overlays of two honeycombs: crossing classification, the facet inequality
// of a clockwise overlay, and the shrink construction.

#include <optional>
#include <string>
#include <vector>

#include "honeycomb/honeycomb.hpp"
#include "honeycomb/spectrum.hpp"

namespace honeycomb {

/// A_CW_TO_B: A turns clockwise to B, i.e. rotating the A edge's line by 60
/// degrees clockwise on screen gives the B edge's line (classes A/B: X/Z, Y/X,
/// Z/Y). These are the crossings of overlays whose facet inequality is valid.
enum class Turning { A_CW_TO_B, B_CW_TO_A };
enum class OverlayVerdict { ALL_A_CW, ALL_B_CW, MIXED, NON_TRANSVERSE };

std::string_view to_string(Turning t);
std::string_view to_string(OverlayVerdict v);

struct Intersection {
  PointB point;
  std::size_t edge_a = 0, edge_b = 0;  // edge indices in a's and b's graphs
  bool transverse = false;
  std::optional<Turning> turning;      // set for transverse crossings
};

struct OverlayAnalysis {
  std::vector<Intersection> intersections;
  OverlayVerdict verdict = OverlayVerdict::ALL_A_CW;
};

/// Every meeting point of an edge of a with an edge of b. Anything other than
/// two edge interiors crossing (shared pieces, a vertex on an edge, an edge of
/// length zero) makes the verdict NON_TRANSVERSE. No crossings: ALL_A_CW.
OverlayAnalysis analyze_overlay(const Honeycomb& a, const Honeycomb& b);

/// sum lam[lambda_indices] + sum mu[mu_indices] + sum nu[nu_indices] >= 0 on
/// boundary triples (lam, mu, nu) of size n. Indices are 1-based.
struct FacetInequality {
  int n = 0;
  std::vector<int> lambda_indices, mu_indices, nu_indices;

  Rat value(const BoundaryTriple& b) const;
  bool holds(const BoundaryTriple& b) const { return value(b).sign() >= 0; }
  /// The same inequality for the sum problem lam (+) mu ~ nu' with nu' = -nu:
  /// nu' positions n + 1 - k, sorted.
  std::vector<int> sum_nu_indices() const;
  /// "l1+m2+n3 >= 0".
  std::string str() const;
  friend bool operator==(const FacetInequality&, const FacetInequality&) = default;
};

/// Requires verdict ALL_A_CW (Error(NOT_CLOCKWISE) otherwise). A's boundary
/// values are located in the merged boundary of the overlay, side by side.
FacetInequality facet_inequality(const Honeycomb& a, const Honeycomb& b);

/// Honeycomb with a's topology whose internal edge lengths are the numbers of
/// crossings with b, translated so that Up(n-1,0,0) (the vertex carrying nu_1
/// and mu_n) sits at the origin. Error(NON_TRANSVERSE) or Error(NOT_CLOCKWISE)
/// when the overlay is not a transverse clockwise one.
Honeycomb shrink(const Honeycomb& a, const Honeycomb& b);

/// h moved by the plane vector v.
Honeycomb translated(const Honeycomb& h, const PointB& v);

/// The n = 1 honeycomb whose vertex is at p.
Honeycomb one_honeycomb(const PointB& p);

}  // namespace honeycomb
