#include "honeycomb/lattice.hpp"

#include <algorithm>
#include <functional>
#include <future>
#include <stdexcept>

#include "honeycomb/error.hpp"
#include "honeycomb/feasibility.hpp"
#include "honeycomb/lp.hpp"

namespace honeycomb {

namespace {

void require_integral(const Spectrum& a, const Spectrum& b, const Spectrum& c) {
  require_same_size(a, b, c);
  if (!a.is_integral() || !b.is_integral() || !c.is_integral())
    throw Error(ErrorCode::NOT_INTEGRAL, "weights must be integers");
}

// Integer points of the reduced fiber. Integral boundary values give an
// integral boundary potential, and then a honeycomb is integral exactly when
// every hexagon potential is an integer.
class LatticeSearch {
 public:
  explicit LatticeSearch(LinearProgram lp) : base_(std::move(lp)), k_(base_.num_vars) {}

  std::size_t dim() const { return k_; }

  // Integer range of variable `var` once the prefix is fixed; empty if lo > hi.
  std::pair<BigInt, BigInt> range(const std::vector<Rat>& prefix) const {
    LinearProgram lp = base_;
    for (std::size_t i = 0; i < prefix.size(); ++i) {
      Constraint c{std::vector<Rat>(k_), prefix[i]};
      c.coeffs[i] = 1;
      lp.equalities.push_back(std::move(c));
    }
    Interval iv;
    try {
      iv = bounding_box(lp, prefix.size());
    } catch (const LpError&) {
      return {BigInt(1), BigInt(0)};
    }
    if (!iv.lo || !iv.hi) throw std::logic_error("fiber is unbounded");
    return {iv.lo->ceil().numerator(), iv.hi->floor().numerator()};
  }

  BigInt count(std::vector<Rat>& prefix) const {
    auto [lo, hi] = range(prefix);
    if (lo > hi) return 0;
    if (prefix.size() + 1 == k_) return hi - lo + 1;
    BigInt total = 0;
    for (BigInt v = lo; v <= hi; ++v) {
      prefix.emplace_back(v);
      total += count(prefix);
      prefix.pop_back();
    }
    return total;
  }

  // Visits points in lexicographic order; the visitor returns false to stop.
  bool visit(std::vector<Rat>& prefix, const std::function<bool(const std::vector<Rat>&)>& f) const {
    if (prefix.size() == k_) return f(prefix);
    auto [lo, hi] = range(prefix);
    for (BigInt v = lo; v <= hi; ++v) {
      prefix.emplace_back(v);
      bool go = visit(prefix, f);
      prefix.pop_back();
      if (!go) return false;
    }
    return true;
  }

 private:
  LinearProgram base_;
  std::size_t k_;
};

bool trace_zero(const Spectrum& a, const Spectrum& b, const Spectrum& c) {
  return (a.sum() + b.sum() + c.sum()).is_zero();
}

}  // namespace

BigInt count_integral_triple(const Spectrum& lam, const Spectrum& mu, const Spectrum& nu, unsigned threads) {
  require_integral(lam, mu, nu);
  if (!trace_zero(lam, mu, nu)) return 0;
  auto rf = reduced_fiber(make_boundary(lam, mu, nu));
  LatticeSearch search(rf.lp);
  if (search.dim() == 0) return solve(rf.lp).status == LpStatus::Infeasible ? 0 : 1;
  std::vector<Rat> prefix;
  if (threads <= 1 || search.dim() == 1) return search.count(prefix);
  auto [lo, hi] = search.range(prefix);
  if (lo > hi) return 0;
  const BigInt width = hi - lo + 1;
  std::vector<std::future<BigInt>> parts;
  for (unsigned t = 0; t < threads; ++t) {
    BigInt a = lo + width * t / threads;
    BigInt b = lo + width * (t + 1) / threads;  // exclusive
    if (a >= b) continue;
    parts.push_back(std::async(std::launch::async, [&search, a, b] {
      BigInt total = 0;
      std::vector<Rat> p;
      for (BigInt v = a; v < b; ++v) {
        p.assign(1, Rat(v));
        total += search.count(p);
      }
      return total;
    }));
  }
  BigInt total = 0;
  for (auto& f : parts) total += f.get();
  return total;
}

BigInt tensor_multiplicity(const Spectrum& lam, const Spectrum& mu, const Spectrum& nu) {
  require_integral(lam, mu, nu);
  return count_integral_triple(lam, mu, nu.negated());
}

bool decide_quantum(const Spectrum& lam, const Spectrum& mu, const Spectrum& nu) {
  return tensor_multiplicity(lam, mu, nu) >= 1;
}

std::vector<Honeycomb> enumerate_integral(const Spectrum& lam, const Spectrum& mu, const Spectrum& nu,
                                          std::size_t limit) {
  require_integral(lam, mu, nu);
  if (limit == 0) throw std::invalid_argument("limit must be at least 1");
  std::vector<Honeycomb> out;
  if (!trace_zero(lam, mu, nu)) return out;
  auto rf = reduced_fiber(make_boundary(lam, mu, nu));
  if (rf.lp.num_vars == 0) {
    if (solve(rf.lp).status != LpStatus::Infeasible) out.push_back(rf.honeycomb({}));
    return out;
  }
  LatticeSearch search(rf.lp);
  std::vector<Rat> prefix;
  search.visit(prefix, [&](const std::vector<Rat>& x) {
    out.push_back(rf.honeycomb(x));
    return out.size() < limit;
  });
  return out;
}

// ---------------------------------------------------------------------------
// Littlewood-Richardson rule. Deliberately shares nothing with the honeycomb
// search above.

namespace {

class TableauCounter {
 public:
  TableauCounter(std::vector<long> outer, std::vector<long> inner, std::vector<long> content)
      : outer_(std::move(outer)), inner_(std::move(inner)), content_(std::move(content)),
        used_(content_.size() + 1, 0), rows_(outer_.size()) {
    for (std::size_t r = 0; r < outer_.size(); ++r) rows_[r].assign(static_cast<std::size_t>(outer_[r]), 0);
  }

  BigInt run() {
    total_ = 0;
    place(0, outer_.empty() ? -1 : outer_[0] - 1);
    return total_;
  }

 private:
  // Fill row r from right to left so the reading order is the lattice-word order.
  void place(std::size_t r, long c) {
    while (r < outer_.size() && c < inner_[r]) {
      ++r;
      if (r < outer_.size()) c = outer_[r] - 1;
    }
    if (r >= outer_.size()) {
      ++total_;
      return;
    }
    const auto cc = static_cast<std::size_t>(c);
    long hi = static_cast<long>(content_.size());
    if (c + 1 < outer_[r]) hi = std::min(hi, rows_[r][cc + 1]);  // rows weakly increase
    long lo = 1;
    if (r > 0 && c < outer_[r - 1] && c >= inner_[r - 1]) lo = rows_[r - 1][cc] + 1;  // columns strictly increase
    for (long v = lo; v <= hi; ++v) {
      const auto sv = static_cast<std::size_t>(v);
      if (used_[sv] >= content_[sv - 1]) continue;
      if (v > 1 && used_[sv] + 1 > used_[sv - 1]) continue;  // lattice word
      ++used_[sv];
      rows_[r][cc] = v;
      place(r, c - 1);
      rows_[r][cc] = 0;
      --used_[sv];
    }
  }

  std::vector<long> outer_, inner_, content_;
  std::vector<long> used_;
  std::vector<std::vector<long>> rows_;
  BigInt total_;
};

std::vector<long> to_longs(const Spectrum& s, long shift) {
  std::vector<long> out;
  for (const auto& v : s.values()) out.push_back(v.numerator().get_si() + shift);
  return out;
}

}  // namespace

BigInt lr_oracle(const Spectrum& lam, const Spectrum& mu, const Spectrum& nu) {
  require_integral(lam, mu, nu);
  const std::size_t n = lam.size();
  // Shift lam by a and mu by b; nu moves by a + b.
  long a = std::max(0L, -lam[n - 1].numerator().get_si());
  long b = std::max(0L, -mu[n - 1].numerator().get_si());
  a += std::max(0L, -(nu[n - 1].numerator().get_si() + a + b));
  auto l = to_longs(lam, a), m = to_longs(mu, b), v = to_longs(nu, a + b);
  long size_l = 0, size_m = 0, size_v = 0;
  for (std::size_t i = 0; i < n; ++i) {
    size_l += l[i];
    size_m += m[i];
    size_v += v[i];
    if (l[i] > v[i]) return 0;
  }
  if (size_l + size_m != size_v) return 0;
  std::vector<long> content;
  for (long x : m)
    if (x > 0) content.push_back(x);
  return TableauCounter(v, l, content).run();
}

}  // namespace honeycomb
