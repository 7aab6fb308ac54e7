#pragma once

#include <random>

#include "honeycomb/honeycomb.hpp"

namespace testsupport {

using honeycomb::Rat;

// Potential sum of squares: every internal edge gets length 2 under it.
inline std::vector<Rat> quadratic_potential(const honeycomb::HoneycombGraph& g) {
  std::vector<Rat> h;
  for (const auto& p : g.points()) h.emplace_back(p[0] * p[0] + p[1] * p[1] + p[2] * p[2]);
  return h;
}

// A nondegenerate honeycomb with random rational coordinates.
inline honeycomb::Honeycomb random_honeycomb(int n, std::mt19937_64& rng, int scale = 40) {
  auto g = honeycomb::build_graph(n);
  auto h = quadratic_potential(*g);
  std::uniform_int_distribution<int> d(-4 * 6, 4 * 6);
  for (auto& v : h) v = v * Rat(scale) + Rat(d(rng), 6);
  return honeycomb::from_potential(g, h);
}

}  // namespace testsupport
