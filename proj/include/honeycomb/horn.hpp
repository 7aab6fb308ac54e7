#pragma once

// Horn's inequalities: the admissible triples (i, j, k) and the linear
// conditions they impose on (lam, mu, nu) for lam (+) mu ~ nu.

#include <string>
#include <vector>

#include "honeycomb/spectrum.hpp"

namespace honeycomb {

struct AdmissibleTriple {
  int r = 0;
  std::vector<int> i, j, k;  // weakly decreasing, entries in [0, n - r]
  friend bool operator==(const AdmissibleTriple&, const AdmissibleTriple&) = default;
};

struct HornInequality {
  AdmissibleTriple triple;
  int n = 0;

  /// 1-based positions i_t + (r - t + 1), and likewise for j and k.
  std::vector<int> lambda_indices() const;
  std::vector<int> mu_indices() const;
  std::vector<int> nu_indices() const;
  /// sum lam[lambda_indices] + sum mu[mu_indices] - sum nu[nu_indices].
  Rat slack(const Spectrum& lam, const Spectrum& mu, const Spectrum& nu) const;
  /// Throws Error(DIMENSION_MISMATCH) unless all three have length n.
  bool evaluate(const Spectrum& lam, const Spectrum& mu, const Spectrum& nu) const;
  /// "l1+l2+m1+m2 >= n1+n2".
  std::string str() const;
};

/// Triples for 1 <= r < n with i (+) j ~_q k in dimension r, ordered by r and
/// then lexicographically by (i, j, k). Cached per n.
const std::vector<AdmissibleTriple>& admissible_triples(int n);
std::vector<HornInequality> horn_inequalities(int n);

/// Trace identity plus every Horn inequality for dimension n.
bool decide_by_horn(const Spectrum& lam, const Spectrum& mu, const Spectrum& nu);

}  // namespace honeycomb
