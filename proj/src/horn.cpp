#include "honeycomb/horn.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>

#include "honeycomb/error.hpp"
#include "honeycomb/lattice.hpp"

namespace honeycomb {

namespace {

std::vector<int> positions(const std::vector<int>& seq) {
  std::vector<int> out;
  const int r = static_cast<int>(seq.size());
  for (int t = 1; t <= r; ++t) out.push_back(seq[static_cast<std::size_t>(t - 1)] + r - t + 1);
  return out;
}

std::vector<std::vector<int>> decreasing_sequences(int len, int top) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  std::function<void(int)> rec = [&](int hi) {
    if (static_cast<int>(cur.size()) == len) {
      out.push_back(cur);
      return;
    }
    for (int v = 0; v <= hi; ++v) {
      cur.push_back(v);
      rec(v);
      cur.pop_back();
    }
  };
  rec(top);
  std::sort(out.begin(), out.end());
  return out;
}

Spectrum as_spectrum(const std::vector<int>& v) {
  std::vector<Rat> out(v.begin(), v.end());
  return Spectrum(out);
}

int total(const std::vector<int>& v) {
  int s = 0;
  for (int x : v) s += x;
  return s;
}

std::vector<AdmissibleTriple> generate(int n) {
  std::vector<AdmissibleTriple> out;
  for (int r = 1; r < n; ++r) {
    const auto seqs = decreasing_sequences(r, n - r);
    for (const auto& i : seqs)
      for (const auto& j : seqs)
        for (const auto& k : seqs) {
          if (total(i) + total(j) != total(k)) continue;
          if (decide_quantum(as_spectrum(i), as_spectrum(j), as_spectrum(k))) out.push_back({r, i, j, k});
        }
  }
  return out;
}

}  // namespace

std::vector<int> HornInequality::lambda_indices() const { return positions(triple.i); }
std::vector<int> HornInequality::mu_indices() const { return positions(triple.j); }
std::vector<int> HornInequality::nu_indices() const { return positions(triple.k); }

Rat HornInequality::slack(const Spectrum& lam, const Spectrum& mu, const Spectrum& nu) const {
  require_same_size(lam, mu, nu);
  if (static_cast<int>(lam.size()) != n) throw Error(ErrorCode::DIMENSION_MISMATCH, "inequality is for another size");
  Rat s;
  for (int p : lambda_indices()) s += lam[static_cast<std::size_t>(p - 1)];
  for (int p : mu_indices()) s += mu[static_cast<std::size_t>(p - 1)];
  for (int p : nu_indices()) s -= nu[static_cast<std::size_t>(p - 1)];
  return s;
}

bool HornInequality::evaluate(const Spectrum& lam, const Spectrum& mu, const Spectrum& nu) const {
  return slack(lam, mu, nu).sign() >= 0;
}

std::string HornInequality::str() const {
  auto terms = [](char c, std::vector<int> idx) {
    std::sort(idx.begin(), idx.end());
    std::string s;
    for (int p : idx) {
      if (!s.empty()) s += '+';
      s += c + std::to_string(p);
    }
    return s;
  };
  return terms('l', lambda_indices()) + "+" + terms('m', mu_indices()) + " >= " + terms('n', nu_indices());
}

const std::vector<AdmissibleTriple>& admissible_triples(int n) {
  if (n < 1) throw std::invalid_argument("n must be positive");
  static std::mutex mu;
  static std::map<int, std::shared_ptr<const std::vector<AdmissibleTriple>>> cache;
  {
    std::lock_guard lock(mu);
    auto it = cache.find(n);
    if (it != cache.end()) return *it->second;
  }
  // Generated outside the lock; a concurrent duplicate is simply discarded.
  auto entry = std::make_shared<const std::vector<AdmissibleTriple>>(generate(n));
  std::lock_guard lock(mu);
  return *cache.emplace(n, entry).first->second;
}

std::vector<HornInequality> horn_inequalities(int n) {
  std::vector<HornInequality> out;
  for (const auto& t : admissible_triples(n)) out.push_back(HornInequality{t, n});
  return out;
}

bool decide_by_horn(const Spectrum& lam, const Spectrum& mu, const Spectrum& nu) {
  require_same_size(lam, mu, nu);
  if (!(lam.sum() + mu.sum() == nu.sum())) return false;
  const int n = static_cast<int>(lam.size());
  for (const auto& t : admissible_triples(n))
    if (!HornInequality{t, n}.evaluate(lam, mu, nu)) return false;
  return true;
}

}  // namespace honeycomb
