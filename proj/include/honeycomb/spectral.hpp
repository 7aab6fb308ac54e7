#pragma once

// The matrix side: random Hermitian matrices with prescribed spectra, a
// Jacobi eigensolver, Monte-Carlo checks of the feasibility decision, and the
// exact volume of a fiber.

#include <complex>
#include <cstdint>
#include <vector>

#include "honeycomb/spectrum.hpp"

namespace honeycomb {

class HermitianMatrix {
 public:
  using Complex = std::complex<double>;

  explicit HermitianMatrix(int n) : n_(n), a_(static_cast<std::size_t>(n) * static_cast<std::size_t>(n)) {}
  /// Row-major entries; no symmetry check here (eigenvalues() does it).
  HermitianMatrix(int n, std::vector<Complex> entries);
  static HermitianMatrix diagonal(const std::vector<double>& d);

  int n() const { return n_; }
  Complex& operator()(int i, int j) { return a_[idx(i, j)]; }
  const Complex& operator()(int i, int j) const { return a_[idx(i, j)]; }
  const std::vector<Complex>& entries() const { return a_; }

  /// Largest |a(i,j) - conj(a(j,i))|.
  double hermitian_defect() const;
  double trace() const;
  double frobenius() const;
  HermitianMatrix operator+(const HermitianMatrix& o) const;

 private:
  std::size_t idx(int i, int j) const {
    return static_cast<std::size_t>(i) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(j);
  }
  int n_;
  std::vector<Complex> a_;
};

/// U diag(lam) U* with U Haar distributed: Gram-Schmidt on a complex Gaussian
/// matrix, which leaves R with a positive real diagonal.
HermitianMatrix matrix_with_spectrum(const Spectrum& lam, std::uint64_t seed);
HermitianMatrix haar_unitary(int n, std::uint64_t seed);

/// Decreasing eigenvalues by cyclic Jacobi rotations. Throws Error(NOT_HERMITIAN)
/// if the matrix is not Hermitian within 1e-9.
std::vector<double> eigenvalues(const HermitianMatrix& h);

/// Seed for trial t of a run seeded with `seed`.
std::uint64_t trial_seed(std::uint64_t seed, std::uint64_t t);

/// Spectra of H_lam + H_mu over independent trials; trial t only depends on
/// trial_seed(seed, t), so any thread count gives the same output.
std::vector<std::vector<double>> sample_sum_spectra(const Spectrum& lam, const Spectrum& mu, std::size_t trials,
                                                    std::uint64_t seed, unsigned threads = 1);

struct Violation {
  std::vector<double> nu;
  double margin = 0;
};

struct SampleReport {
  std::size_t trials = 0;
  std::vector<Violation> violations;
  double max_infeasibility_margin = 0;
  std::vector<std::vector<double>> samples;  // filled only on request
};

inline constexpr double kRoundingTolerance = 1e-6;
inline constexpr double kFeasibilitySlack = 1e-5;

/// Every sampled nu is rounded to a multiple of 1e-6 and tested with
/// decide_sum at slack 1e-5; the margin is the boundary distance to the cone.
SampleReport monte_carlo_check(const Spectrum& lam, const Spectrum& mu, std::size_t trials, std::uint64_t seed,
                               unsigned threads = 1, bool keep_samples = false);

/// Exact volume of the fiber in hexagon-potential (breathing) units. Dimension
/// zero gives 1. Error(TOO_LARGE) for n > 4, Error(INFEASIBLE_TRIPLE) if empty.
Rat fiber_volume(const Spectrum& lam, const Spectrum& mu, const Spectrum& nu);

}  // namespace honeycomb
