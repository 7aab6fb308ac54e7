#include "honeycomb/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>
#include <random>
#include <set>
#include <thread>

#include "honeycomb/error.hpp"
#include "honeycomb/feasibility.hpp"
#include "sparse_solve.hpp"

namespace honeycomb {

HermitianMatrix::HermitianMatrix(int n, std::vector<Complex> entries) : n_(n), a_(std::move(entries)) {
  if (a_.size() != static_cast<std::size_t>(n) * static_cast<std::size_t>(n))
    throw Error(ErrorCode::DIMENSION_MISMATCH, "matrix needs n*n entries");
}

HermitianMatrix HermitianMatrix::diagonal(const std::vector<double>& d) {
  HermitianMatrix h(static_cast<int>(d.size()));
  for (int i = 0; i < h.n(); ++i) h(i, i) = d[static_cast<std::size_t>(i)];
  return h;
}

double HermitianMatrix::hermitian_defect() const {
  double worst = 0;
  for (int i = 0; i < n_; ++i)
    for (int j = i; j < n_; ++j) worst = std::max(worst, std::abs((*this)(i, j) - std::conj((*this)(j, i))));
  return worst;
}

double HermitianMatrix::trace() const {
  double t = 0;
  for (int i = 0; i < n_; ++i) t += (*this)(i, i).real();
  return t;
}

double HermitianMatrix::frobenius() const {
  double s = 0;
  for (const auto& z : a_) s += std::norm(z);
  return std::sqrt(s);
}

HermitianMatrix HermitianMatrix::operator+(const HermitianMatrix& o) const {
  if (o.n_ != n_) throw Error(ErrorCode::DIMENSION_MISMATCH, "matrix sizes differ");
  HermitianMatrix out(n_);
  for (std::size_t i = 0; i < a_.size(); ++i) out.a_[i] = a_[i] + o.a_[i];
  return out;
}

HermitianMatrix haar_unitary(int n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> g(0.0, std::sqrt(0.5));
  using C = HermitianMatrix::Complex;
  std::vector<std::vector<C>> cols(static_cast<std::size_t>(n), std::vector<C>(static_cast<std::size_t>(n)));
  for (auto& col : cols)
    for (auto& z : col) z = C(g(rng), g(rng));
  // Gram-Schmidt, twice per column for stability.
  for (std::size_t j = 0; j < cols.size(); ++j) {
    for (int pass = 0; pass < 2; ++pass)
      for (std::size_t i = 0; i < j; ++i) {
        C r = 0;
        for (std::size_t k = 0; k < cols[j].size(); ++k) r += std::conj(cols[i][k]) * cols[j][k];
        for (std::size_t k = 0; k < cols[j].size(); ++k) cols[j][k] -= r * cols[i][k];
      }
    double norm = 0;
    for (const auto& z : cols[j]) norm += std::norm(z);
    norm = std::sqrt(norm);
    for (auto& z : cols[j]) z /= norm;
  }
  HermitianMatrix u(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) u(i, j) = cols[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)];
  return u;
}

HermitianMatrix matrix_with_spectrum(const Spectrum& lam, std::uint64_t seed) {
  const int n = static_cast<int>(lam.size());
  std::vector<double> d;
  for (const auto& v : lam.values()) d.push_back(v.to_double());
  if (lam.size() == 0 || lam[0] == lam[lam.size() - 1]) return HermitianMatrix::diagonal(d);
  const auto u = haar_unitary(n, seed);
  HermitianMatrix h(n);
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) {
      HermitianMatrix::Complex s = 0;
      for (int k = 0; k < n; ++k) s += u(i, k) * d[static_cast<std::size_t>(k)] * std::conj(u(j, k));
      if (i == j) {
        h(i, i) = s.real();
      } else {
        h(i, j) = s;
        h(j, i) = std::conj(s);
      }
    }
  return h;
}

std::vector<double> eigenvalues(const HermitianMatrix& h) {
  if (h.hermitian_defect() > 1e-9) throw Error(ErrorCode::NOT_HERMITIAN, "matrix is not Hermitian");
  // Real symmetric form [[Re, -Im], [Im, Re]]: each eigenvalue appears twice.
  const int n = h.n();
  const std::size_t m = 2 * static_cast<std::size_t>(n);
  std::vector<double> a(m * m);
  auto at = [&](std::size_t i, std::size_t j) -> double& { return a[i * m + j]; };
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const auto z = i == j ? HermitianMatrix::Complex(h(i, i).real(), 0) : (h(i, j) + std::conj(h(j, i))) / 2.0;
      const auto si = static_cast<std::size_t>(i), sj = static_cast<std::size_t>(j), nn = static_cast<std::size_t>(n);
      at(si, sj) = z.real();
      at(si + nn, sj + nn) = z.real();
      at(si, sj + nn) = -z.imag();
      at(si + nn, sj) = z.imag();
    }
  const double scale = h.frobenius() * std::sqrt(2.0);
  for (int sweep = 0; sweep < 100 && scale > 0; ++sweep) {
    double off = 0;
    for (std::size_t p = 0; p < m; ++p)
      for (std::size_t q = 0; q < m; ++q)
        if (p != q) off += at(p, q) * at(p, q);
    if (std::sqrt(off) < 1e-14 * scale) break;
    for (std::size_t p = 0; p + 1 < m; ++p)
      for (std::size_t q = p + 1; q < m; ++q) {
        const double apq = at(p, q);
        if (apq == 0) continue;
        const double theta = (at(q, q) - at(p, p)) / (2 * apq);
        const double t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1));
        const double c = 1 / std::sqrt(t * t + 1), s = t * c;
        for (std::size_t k = 0; k < m; ++k) {
          const double akp = at(k, p), akq = at(k, q);
          at(k, p) = c * akp - s * akq;
          at(k, q) = s * akp + c * akq;
        }
        for (std::size_t k = 0; k < m; ++k) {
          const double apk = at(p, k), aqk = at(q, k);
          at(p, k) = c * apk - s * aqk;
          at(q, k) = s * apk + c * aqk;
        }
      }
  }
  std::vector<double> all;
  for (std::size_t i = 0; i < m; ++i) all.push_back(at(i, i));
  std::sort(all.begin(), all.end(), std::greater<>());
  std::vector<double> out;
  for (std::size_t i = 0; i < m; i += 2) out.push_back((all[i] + all[i + 1]) / 2);
  return out;
}

std::uint64_t trial_seed(std::uint64_t seed, std::uint64_t t) {
  // splitmix64 of the pair.
  std::uint64_t z = seed * 0x9E3779B97F4A7C15ULL + t + 0x632BE59BD9B4E019ULL;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

namespace {

template <class F>
void parallel_for(std::size_t count, unsigned threads, F&& body) {
  threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(count, 1))));
  if (threads == 1) {
    for (std::size_t i = 0; i < count; ++i) body(i);
    return;
  }
  std::vector<std::thread> pool;
  for (unsigned w = 0; w < threads; ++w)
    pool.emplace_back([&, w] {
      for (std::size_t i = w; i < count; i += threads) body(i);
    });
  for (auto& t : pool) t.join();
}

}  // namespace

std::vector<std::vector<double>> sample_sum_spectra(const Spectrum& lam, const Spectrum& mu, std::size_t trials,
                                                    std::uint64_t seed, unsigned threads) {
  if (lam.size() != mu.size() || lam.size() == 0) throw Error(ErrorCode::DIMENSION_MISMATCH, "spectra sizes differ");
  std::vector<std::vector<double>> out(trials);
  parallel_for(trials, threads, [&](std::size_t t) {
    const auto s = trial_seed(seed, t);
    out[t] = eigenvalues(matrix_with_spectrum(lam, 2 * s) + matrix_with_spectrum(mu, 2 * s + 1));
  });
  return out;
}

SampleReport monte_carlo_check(const Spectrum& lam, const Spectrum& mu, std::size_t trials, std::uint64_t seed,
                               unsigned threads, bool keep_samples) {
  if (trials == 0) throw std::invalid_argument("trials must be at least 1");
  auto samples = sample_sum_spectra(lam, mu, trials, seed, threads);
  const auto den = static_cast<long long>(std::llround(1 / kRoundingTolerance));
  std::vector<double> margins(trials);
  parallel_for(trials, threads, [&](std::size_t t) {
    std::vector<Rat> nu;
    for (double v : samples[t]) nu.push_back(Rat::from_double(v, den));
    margins[t] = boundary_distance(lam, mu, Spectrum(nu).negated()).to_double();
  });
  SampleReport rep;
  rep.trials = trials;
  for (std::size_t t = 0; t < trials; ++t) {
    rep.max_infeasibility_margin = std::max(rep.max_infeasibility_margin, margins[t]);
    if (margins[t] > kFeasibilitySlack) rep.violations.push_back({samples[t], margins[t]});
  }
  if (keep_samples) rep.samples = std::move(samples);
  return rep;
}

// ---------------------------------------------------------------------------
// Fiber volume: vertex enumeration plus a pulling triangulation.

namespace {

std::size_t affine_rank(const std::vector<std::vector<Rat>>& pts, const std::vector<std::size_t>& ids) {
  if (ids.size() <= 1) return 0;
  std::vector<SparseRow> rows;
  const std::size_t d = pts[ids[0]].size();
  for (std::size_t i = 1; i < ids.size(); ++i) {
    SparseRow r;
    for (std::size_t c = 0; c < d; ++c) {
      Rat v = pts[ids[i]][c] - pts[ids[0]][c];
      if (!v.is_zero()) r.emplace_back(c, v);
    }
    rows.push_back(std::move(r));
  }
  return sparse_rank(std::move(rows), d);
}

Rat abs_det(std::vector<std::vector<Rat>> m) {
  const std::size_t d = m.size();
  Rat det(1);
  for (std::size_t c = 0; c < d; ++c) {
    std::size_t p = c;
    while (p < d && m[p][c].is_zero()) ++p;
    if (p == d) return Rat(0);
    if (p != c) std::swap(m[p], m[c]);
    det *= m[c][c];
    for (std::size_t r = c + 1; r < d; ++r) {
      if (m[r][c].is_zero()) continue;
      const Rat f = m[r][c] / m[c][c];
      for (std::size_t k = c; k < d; ++k) m[r][k] -= f * m[c][k];
    }
  }
  return det.abs();
}

struct Triangulator {
  const std::vector<std::vector<Rat>>& pts;
  const std::vector<std::vector<bool>>& tight;  // tight[vertex][row]
  std::size_t rows;
  Rat total;

  void run(const std::vector<std::size_t>& face, std::size_t dim, std::vector<std::size_t>& apex) {
    if (dim == 0) {
      apex.push_back(face[0]);
      std::vector<std::vector<Rat>> m;
      for (std::size_t i = 1; i < apex.size(); ++i) {
        std::vector<Rat> r;
        for (std::size_t c = 0; c < pts[0].size(); ++c) r.push_back(pts[apex[i]][c] - pts[apex[0]][c]);
        m.push_back(std::move(r));
      }
      total += abs_det(std::move(m));
      apex.pop_back();
      return;
    }
    const std::size_t v = face[0];
    std::set<std::vector<std::size_t>> seen;
    for (std::size_t r = 0; r < rows; ++r) {
      if (tight[v][r]) continue;
      std::vector<std::size_t> sub;
      for (std::size_t u : face)
        if (tight[u][r]) sub.push_back(u);
      if (sub.size() < dim || !seen.insert(sub).second) continue;
      if (affine_rank(pts, sub) != dim - 1) continue;
      apex.push_back(v);
      run(sub, dim - 1, apex);
      apex.pop_back();
    }
  }
};

}  // namespace

Rat fiber_volume(const Spectrum& lam, const Spectrum& mu, const Spectrum& nu) {
  require_same_size(lam, mu, nu);
  if (lam.size() > 4) throw Error(ErrorCode::TOO_LARGE, "fiber volumes are computed for n <= 4 only");
  if (!(lam.sum() + mu.sum() + nu.sum()).is_zero()) throw Error(ErrorCode::INFEASIBLE_TRIPLE, "nonzero trace");
  const auto rf = reduced_fiber(make_boundary(lam, mu, nu));
  if (solve(rf.lp).status == LpStatus::Infeasible) throw Error(ErrorCode::INFEASIBLE_TRIPLE, "empty fiber");
  const std::size_t k = rf.lp.num_vars;
  if (k == 0) return Rat(1);
  if (k == 1) {
    auto iv = bounding_box(rf.lp, 0);
    return *iv.hi - *iv.lo;
  }
  const auto& ineq = rf.lp.inequalities;
  const std::size_t m = ineq.size();
  auto satisfied = [&](const std::vector<Rat>& x, std::size_t r) {
    Rat s;
    for (std::size_t c = 0; c < k; ++c) s.add_product(ineq[r].coeffs[c], x[c]);
    return s - ineq[r].rhs;
  };
  // Vertices: every k-subset of rows with a unique feasible solution.
  std::set<std::vector<Rat>> found;
  std::vector<std::size_t> pick(k);
  std::function<void(std::size_t, std::size_t)> choose = [&](std::size_t start, std::size_t depth) {
    if (depth == k) {
      std::vector<SparseRow> rows;
      std::vector<Rat> rhs;
      for (std::size_t r : pick) {
        SparseRow row;
        for (std::size_t c = 0; c < k; ++c)
          if (!ineq[r].coeffs[c].is_zero()) row.emplace_back(c, ineq[r].coeffs[c]);
        rows.push_back(std::move(row));
        rhs.push_back(ineq[r].rhs);
      }
      auto x = solve_square(rows, rhs, k);
      if (!x) return;
      for (std::size_t r = 0; r < m; ++r)
        if (satisfied(*x, r).sign() < 0) return;
      found.insert(*x);
      return;
    }
    for (std::size_t r = start; r < m; ++r) {
      pick[depth] = r;
      choose(r + 1, depth + 1);
    }
  };
  choose(0, 0);
  std::vector<std::vector<Rat>> pts(found.begin(), found.end());
  std::vector<std::size_t> all(pts.size());
  std::iota(all.begin(), all.end(), 0);
  if (affine_rank(pts, all) < k) return Rat(0);
  std::vector<std::vector<bool>> tight(pts.size(), std::vector<bool>(m));
  for (std::size_t v = 0; v < pts.size(); ++v)
    for (std::size_t r = 0; r < m; ++r) tight[v][r] = satisfied(pts[v], r).is_zero();
  Triangulator tri{pts, tight, m, Rat()};
  std::vector<std::size_t> apex;
  tri.run(all, k, apex);
  Rat fact(1);
  for (std::size_t i = 2; i <= k; ++i) fact *= Rat(static_cast<long>(i));
  return tri.total / fact;
}

}  // namespace honeycomb
