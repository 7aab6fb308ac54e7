#pragma once

// Classical feasibility via honeycomb existence, fibers of the boundary map,
// superharmonic functionals and largest lifts.

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "honeycomb/honeycomb.hpp"
#include "honeycomb/lp.hpp"
#include "honeycomb/spectrum.hpp"

namespace honeycomb {

/// Honeycombs with a fixed boundary, as an LP over edge coordinates: vertex
/// sums and boundary values are equalities, edge lengths are inequalities.
struct FiberPolytope {
  std::shared_ptr<const HoneycombGraph> graph;
  BoundaryTriple boundary;
  LinearProgram lp;
};

FiberPolytope fiber_polytope(const Spectrum& lam, const Spectrum& mu, const Spectrum& nu);

/// The same fiber in potential coordinates: one variable per hexagon (the
/// potential at its interior lattice point), one row per internal edge.
struct ReducedFiber {
  std::shared_ptr<const HoneycombGraph> graph;
  std::vector<Rat> boundary_potential;  // interior entries zero
  LinearProgram lp;                     // variable f = potential at hexagon f

  Honeycomb honeycomb(std::span<const Rat> interior) const;
  std::vector<Rat> interior_of(const Honeycomb& h) const;
};

/// Throws Error(DIMENSION_MISMATCH); Error(INFEASIBLE_TRIPLE) if the trace is nonzero.
ReducedFiber reduced_fiber(const BoundaryTriple& b);
BoundaryTriple make_boundary(const Spectrum& lam, const Spectrum& mu, const Spectrum& nu);

/// Is there a honeycomb with boundary (lam, mu, nu)?
bool decide_triple(const Spectrum& lam, const Spectrum& mu, const Spectrum& nu);
/// lam + mu ~ nu, i.e. decide_triple(lam, mu, -nu).
bool decide_sum(const Spectrum& lam, const Spectrum& mu, const Spectrum& nu);

/// Smallest t such that some honeycomb has boundary within sup-distance t of
/// (lam, mu, nu). Zero exactly when the triple is feasible.
Rat boundary_distance(const Spectrum& lam, const Spectrum& mu, const Spectrum& nu);
/// decide_sum with every boundary value allowed to move by at most `slack`.
bool decide_sum_slack(const Spectrum& lam, const Spectrum& mu, const Spectrum& nu, const Rat& slack);

struct SuperharmonicWeights {
  std::shared_ptr<const HoneycombGraph> graph;
  std::vector<Rat> weights;      // one per edge
  std::vector<Rat> hexagon_rate; // weights . breathing_vector(f) for each hexagon f
  std::uint64_t seed = 0;

  Rat evaluate(const Honeycomb& h) const;
};

/// Deterministic in (n, seed). Every hexagon rate is certified positive.
SuperharmonicWeights superharmonic_weights(std::shared_ptr<const HoneycombGraph> g, std::uint64_t seed);

struct LiftResult {
  Honeycomb honeycomb;
  std::vector<std::size_t> basis;  // tight length rows at the optimum
  bool unique = false;             // optimum certified to be a single point
  std::uint64_t seed_used = 0;     // differs from the input seed after a resample
};

/// Maximiser of w over the fiber, lexicographic tie-break on hexagon
/// potentials if the optimal face is not a point. Throws Error(INFEASIBLE_TRIPLE).
Honeycomb largest_lift(const Spectrum& lam, const Spectrum& mu, const Spectrum& nu, const SuperharmonicWeights& w);
LiftResult largest_lift_detailed(const BoundaryTriple& b, const SuperharmonicWeights& w);
/// Largest lift for an integral boundary; resamples the weights (seed + 1, ...)
/// if a non-integral optimum is ever produced.
LiftResult integral_largest_lift(const BoundaryTriple& b, std::uint64_t seed);

struct UnderlyingGraph {
  std::vector<PointB> vertices;                         // the Ys
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  std::size_t rays = 0;
  std::size_t crossings = 0;
  bool acyclic() const;
};

struct UnderlyingGraphResult {
  bool simply_degenerate = false;
  UnderlyingGraph graph;
  std::string reason;  // why the honeycomb is not simply degenerate
};

UnderlyingGraphResult underlying_graph(const Honeycomb& h);

struct SaturationReport {
  bool feasible = false;
  std::optional<Honeycomb> integral_witness;
  bool integral = false;
  bool agrees = false;
};

/// Requires integral spectra (Error(NOT_INTEGRAL) otherwise).
SaturationReport check_saturation(const Spectrum& lam, const Spectrum& mu, const Spectrum& nu, std::uint64_t seed = 1);

}  // namespace honeycomb
