#pragma once

// Integral honeycombs: counting, enumeration, and an independent
// Littlewood-Richardson tableau count to check them against.

#include <cstddef>
#include <vector>

#include "honeycomb/honeycomb.hpp"
#include "honeycomb/spectrum.hpp"

namespace honeycomb {

// All functions here take integral spectra and throw Error(NOT_INTEGRAL)
// otherwise, and Error(DIMENSION_MISMATCH) on unequal lengths.

/// Number of integral honeycombs with boundary (lam, mu, nu). The search runs
/// over hexagon potentials; with threads > 1 the range of the first one is
/// split into contiguous blocks and the partial counts are added.
BigInt count_integral_triple(const Spectrum& lam, const Spectrum& mu, const Spectrum& nu, unsigned threads = 1);

/// Multiplicity of V_nu in V_lam (x) V_mu: count_integral_triple(lam, mu, -nu).
BigInt tensor_multiplicity(const Spectrum& lam, const Spectrum& mu, const Spectrum& nu);

bool decide_quantum(const Spectrum& lam, const Spectrum& mu, const Spectrum& nu);

/// Up to `limit` integral honeycombs with boundary (lam, mu, nu), ordered
/// lexicographically by hexagon potential. Throws std::invalid_argument if limit == 0.
std::vector<Honeycomb> enumerate_integral(const Spectrum& lam, const Spectrum& mu, const Spectrum& nu,
                                          std::size_t limit);

/// c^nu_{lam,mu} by counting Littlewood-Richardson skew tableaux after
/// shifting all three weights to partitions.
BigInt lr_oracle(const Spectrum& lam, const Spectrum& mu, const Spectrum& nu);

}  // namespace honeycomb
