// One PASS/FAIL line per acceptance criterion. Sizes, seeds, tolerances and
// time limits are fixed here; the exit status is the number of failures.

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "honeycomb/feasibility.hpp"
#include "honeycomb/horn.hpp"
#include "honeycomb/lattice.hpp"
#include "honeycomb/overlay.hpp"
#include "honeycomb/spectral.hpp"

using namespace honeycomb;

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
  bool ok = true;
  std::string detail;
};

int failures = 0;

void criterion(const char* name, double limit_s, const std::function<Outcome()>& body) {
  const auto start = Clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  const double secs = std::chrono::duration<double>(Clock::now() - start).count();
  const bool in_time = secs < limit_s;
  const bool pass = o.ok && in_time;
  if (!pass) ++failures;
  std::printf("%s  %-28s %8.2fs (limit %gs)  %s%s\n", pass ? "PASS" : "FAIL", name, secs, limit_s, o.detail.c_str(),
              in_time ? "" : "  [too slow]");
  std::fflush(stdout);
}

Spectrum S(std::vector<Rat> v) { return Spectrum(std::move(v)); }

// Weakly decreasing integer vectors of length n with entries in [lo, hi].
std::vector<Spectrum> box(int n, int lo, int hi) {
  std::vector<Spectrum> out;
  std::vector<Rat> cur;
  std::function<void(int)> rec = [&](int top) {
    if (static_cast<int>(cur.size()) == n) {
      out.emplace_back(cur);
      return;
    }
    for (int v = top; v >= lo; --v) {
      cur.emplace_back(v);
      rec(v);
      cur.pop_back();
    }
  };
  rec(hi);
  return out;
}

std::vector<Rat> sorted_desc(std::vector<Rat> v) {
  std::sort(v.begin(), v.end(), [](const Rat& a, const Rat& b) { return b < a; });
  return v;
}

Rat random_rat(std::mt19937_64& rng, int range, int den) {
  std::uniform_int_distribution<int> d(-range * den, range * den);
  return Rat(d(rng), den);
}

// (lam, mu, nu) in the sum convention with equal traces, nu near the
// feasible region so that both answers occur.
std::array<Spectrum, 3> random_sum_triple(int n, std::mt19937_64& rng) {
  std::vector<Rat> l, m, v;
  for (int i = 0; i < n; ++i) {
    l.push_back(random_rat(rng, 5, 6));
    m.push_back(random_rat(rng, 5, 6));
  }
  l = sorted_desc(l);
  m = sorted_desc(m);
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  for (int i = 0; i < n; ++i)
    v.push_back(l[static_cast<std::size_t>(i)] + m[static_cast<std::size_t>(perm[static_cast<std::size_t>(i)])] +
                random_rat(rng, 2, 6));
  Rat excess;
  for (int i = 0; i < n; ++i) excess += v[static_cast<std::size_t>(i)] - l[static_cast<std::size_t>(i)] - m[static_cast<std::size_t>(i)];
  for (auto& x : v) x -= excess / Rat(n);
  return {S(l), S(m), S(sorted_desc(v))};
}

// Integral honeycomb with all edges of length >= 4: quadratic potential plus noise.
Honeycomb integral_honeycomb(int n, std::mt19937_64& rng) {
  auto g = build_graph(n);
  std::uniform_int_distribution<int> d(-4, 4);
  std::vector<Rat> h;
  for (const auto& p : g->points()) h.emplace_back(10 * (p[0] * p[0] + p[1] * p[1] + p[2] * p[2]) + d(rng));
  return from_potential(g, h);
}

// Rational honeycomb with edges of length about 6, nondegenerate, moved to a random spot.
PointB random_point(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> d(-40, 40);
  return PointB::from_xy(Rat(d(rng), 7), Rat(d(rng), 7));
}

Honeycomb placed_honeycomb(int n, std::mt19937_64& rng) {
  auto g = build_graph(n);
  std::uniform_int_distribution<int> d(-24, 24);
  for (;;) {
    std::vector<Rat> h;
    for (const auto& p : g->points()) h.push_back(Rat(3 * (p[0] * p[0] + p[1] * p[1] + p[2] * p[2])) + Rat(d(rng), 6));
    auto hc = from_potential(g, h);
    if (hc.in_cone() && underlying_graph(hc).simply_degenerate) return translated(hc, random_point(rng));
  }
}

std::string count_str(std::size_t a, const char* what) { return std::to_string(a) + " " + what; }

}  // namespace

int main() {
  std::printf("acceptance criteria\n");

  criterion("intro examples", 1, [] {
    const bool ok = decide_sum(S({3}), S({4}), S({7})) && decide_sum(S({3, 0}), S({4, 0}), S({7, 0})) &&
                    decide_sum(S({3, 0}), S({4, 0}), S({4, 3})) && decide_sum(S({2, 0}), S({2, 0}), S({3, 1})) &&
                    !decide_sum(S({3}), S({4}), S({5})) && !decide_sum(S({3, 0}), S({4, 0}), S({8, -1}));
    return Outcome{ok, "6 of 6 displays"};
  });

  criterion("n=2 closed form", 10, [] {
    std::mt19937_64 rng(2);
    std::size_t bad = 0, yes = 0;
    for (int t = 0; t < 500; ++t) {
      const auto [l, m, v] = random_sum_triple(2, rng);
      const auto n = v.negated();
      const bool lengths = (l[1] + m[0] + n[0]).sign() >= 0 && (l[0] + m[1] + n[0]).sign() >= 0 &&
                           (l[0] + m[0] + n[1]).sign() >= 0;
      const Rat a = l[0] - l[1], b = m[0] - m[1], c = v[0] - v[1];
      const bool triangle = a <= b + c && b <= a + c && c <= a + b;
      const bool dec = decide_sum(l, m, v);
      bad += dec != lengths || dec != triangle;
      yes += dec;
    }
    return Outcome{bad == 0, count_str(bad, "disagreements") + ", " + count_str(yes, "feasible of 500")};
  });

  criterion("oracle equivalence", 600, [] {
    std::size_t checked = 0, bad = 0, positive = 0;
    for (int n = 1; n <= 3; ++n) {
      const auto all = box(n, 0, 4);
      for (const auto& l : all)
        for (const auto& m : all)
          for (const auto& v : all) {
            const BigInt c = count_integral_triple(l, m, v.negated());
            bad += c != lr_oracle(l, m, v);
            positive += c > 0;
            ++checked;
          }
    }
    std::mt19937_64 rng(4);
    const auto four = box(4, 0, 5);
    std::map<Rat, std::vector<Spectrum>> by_sum;
    for (const auto& s : four) by_sum[s.sum()].push_back(s);
    std::uniform_int_distribution<std::size_t> pick(0, four.size() - 1);
    for (int t = 0; t < 200;) {
      const auto& l = four[pick(rng)];
      const auto& m = four[pick(rng)];
      auto it = by_sum.find(l.sum() + m.sum());
      if (it == by_sum.end()) continue;
      std::uniform_int_distribution<std::size_t> p2(0, it->second.size() - 1);
      const auto& v = it->second[p2(rng)];
      const BigInt c = count_integral_triple(l, m, v.negated());
      bad += c != lr_oracle(l, m, v);
      positive += c > 0;
      ++checked;
      ++t;
    }
    return Outcome{bad == 0, count_str(checked, "triples") + ", " + count_str(positive, "nonzero") + ", " +
                                 count_str(bad, "mismatches")};
  });

  criterion("saturation", 600, [] {
    const auto all = box(3, 0, 4);
    std::size_t bad = 0, lifted = 0, resampled = 0;
    auto g = build_graph(3);
    const auto w = superharmonic_weights(g, 1);
    for (const auto& l : all)
      for (const auto& m : all)
        for (const auto& v : all) {
          const bool feasible = decide_sum(l, m, v);
          if (feasible != (tensor_multiplicity(l, m, v) >= 1)) ++bad;
          if (!feasible) continue;
          const auto b = make_boundary(l, m, v.negated());
          const auto lift = largest_lift_detailed(b, w).honeycomb;
          if (!is_integral(lift)) ++resampled;
          if (!is_integral(lift) || boundary(lift) != b || !lift.in_cone()) ++bad;
          ++lifted;
        }
    return Outcome{bad == 0, count_str(lifted, "lifts") + ", " + count_str(resampled, "non-integral") + ", " +
                                 count_str(bad, "failures")};
  });

  criterion("Horn equivalence", 300, [] {
    std::mt19937_64 rng(5);
    std::size_t bad = 0, yes = 0;
    for (int n : {3, 4})
      for (int t = 0; t < 2000; ++t) {
        const auto [l, m, v] = random_sum_triple(n, rng);
        const bool d = decide_sum(l, m, v);
        bad += d != decide_by_horn(l, m, v);
        yes += d;
      }
    return Outcome{bad == 0, count_str(bad, "disagreements") + ", " + count_str(yes, "feasible of 4000")};
  });

  criterion("quantum implies classical", 600, [] {
    std::size_t bad = 0, quantum = 0;
    for (int n = 1; n <= 3; ++n) {
      const auto all = box(n, 0, 4);
      for (const auto& l : all)
        for (const auto& m : all)
          for (const auto& v : all) {
            if (!decide_quantum(l, m, v)) continue;
            ++quantum;
            bad += !decide_sum(l, m, v);
          }
    }
    return Outcome{bad == 0, count_str(quantum, "quantum-feasible") + ", " + count_str(bad, "counterexamples")};
  });

  criterion("S3 symmetry", 120, [] {
    std::mt19937_64 rng(6);
    std::size_t bad = 0, yes = 0;
    for (int n : {2, 3, 4})
      for (int t = 0; t < 500; ++t) {
        const auto [l, m, v] = random_sum_triple(n, rng);
        const std::array<Spectrum, 3> x{l, m, v.negated()};
        std::array<int, 3> p{0, 1, 2};
        const bool base = decide_triple(x[0], x[1], x[2]);
        yes += base;
        do {
          bad += decide_triple(x[static_cast<std::size_t>(p[0])], x[static_cast<std::size_t>(p[1])],
                               x[static_cast<std::size_t>(p[2])]) != base;
        } while (std::next_permutation(p.begin(), p.end()));
      }
    return Outcome{bad == 0, count_str(bad, "asymmetric answers") + ", " + count_str(yes, "feasible of 1500")};
  });

  criterion("scaling n=20", 5, [] {
    std::mt19937_64 rng(20);
    const auto b = boundary(integral_honeycomb(20, rng));
    const bool ok = decide_triple(S(b.lambda), S(b.mu), S(b.nu));
    return Outcome{ok, "feasible instance decided"};
  });
  criterion("scaling n=40", 60, [] {
    std::mt19937_64 rng(40);
    const auto b = boundary(integral_honeycomb(40, rng));
    const bool ok = decide_sum(S(b.lambda), S(b.mu), S(b.nu).negated());
    return Outcome{ok, "feasible instance decided"};
  });

  criterion("Monte-Carlo necessity", 600, [] {
    const auto rep = monte_carlo_check(S({2, 1, 0}), S({2, 1, 0}), 10000, 9, 8);
    const auto two = monte_carlo_check(S({1, 0}), S({1, 0}), 10000, 10, 8, true);
    std::size_t bad2 = 0;
    for (const auto& v : two.samples)
      bad2 += std::abs(v[0] + v[1] - 2) > 1e-9 || v[0] - v[1] < -1e-9 || v[0] - v[1] > 2 + 1e-9;
    char buf[160];
    std::snprintf(buf, sizeof buf, "n=3: %zu violations (max margin %.2e); n=2: %zu off the triangle, %zu violations",
                  rep.violations.size(), rep.max_infeasibility_margin, bad2, two.violations.size());
    return Outcome{rep.violations.empty() && two.violations.empty() && bad2 == 0, buf};
  });

  criterion("volume support", 600, [] {
    // Histogram of nu over the grid (Z/4)^2 in (nu1, nu2), nearest point. A
    // sample and its grid point differ by at most 1/8 in nu1 and nu2 and 1/4 in
    // nu3 = 6 - nu1 - nu2, so cells with mass lie within 1/4 of the cone.
    const Spectrum lam = S({2, 1, 0}), mu = S({2, 1, 0});
    const std::size_t samples = 1000000;
    const long per_unit = 4;
    const double radius = 0.25;
    const auto spectra = sample_sum_spectra(lam, mu, samples, 11, 8);
    std::map<std::pair<long, long>, std::size_t> hist;
    for (const auto& v : spectra) hist[{std::lround(v[0] * per_unit), std::lround(v[1] * per_unit)}]++;
    auto grid = [&](long a, long b) {
      const Rat x(a, per_unit), y(b, per_unit);
      return std::vector<Rat>{x, y, Rat(6) - x - y};
    };
    std::size_t far = 0, occupied = 0;
    for (const auto& [key, count] : hist) {
      ++occupied;
      const Rat d = boundary_distance(lam, mu, S(sorted_desc(grid(key.first, key.second))).negated());
      if (d.to_double() > radius + 1e-4) far += count;
    }
    // Every interior grid point with a full-dimensional fiber has mass.
    std::size_t interior = 0, empty = 0;
    for (long a = 0; a <= 4 * per_unit; ++a)
      for (long b = -per_unit; b <= a; ++b) {
        const auto g = grid(a, b);
        if (!(g[0] > g[1] && g[1] > g[2])) continue;
        const Spectrum nu = S(g);
        if (!decide_sum(lam, mu, nu) || fiber_volume(lam, mu, nu.negated()).sign() <= 0) continue;
        ++interior;
        if (hist.find({a, b}) == hist.end()) ++empty;
      }
    return Outcome{far == 0 && empty == 0 && interior > 0,
                   count_str(occupied, "occupied cells") + ", " + count_str(far, "samples far from the cone") + ", " +
                       count_str(interior, "interior points") + ", " + count_str(empty, "empty")};
  });

  criterion("shrink construction", 120, [] {
    std::mt19937_64 rng(12);
    std::size_t pairs = 0, bad = 0;
    std::uniform_int_distribution<int> size(2, 4);
    while (pairs < 50) {
      const int n = size(rng);
      auto y = one_honeycomb(random_point(rng));
      auto big = placed_honeycomb(n - 1, rng);
      const auto v = analyze_overlay(y, big);
      std::optional<Honeycomb> s;
      if (v.verdict == OverlayVerdict::ALL_A_CW && !v.intersections.empty()) {
        s = shrink(y, big);
      } else if (v.verdict == OverlayVerdict::ALL_B_CW) {
        s = shrink(big, y);
      } else {
        continue;
      }
      ++pairs;
      // Reconstructing validates the vertex equalities; lengths must be nonnegative integers.
      const Honeycomb again(s->graph_ptr(), s->coords());
      if (!(again == *s) || !s->in_cone() || !is_integral(*s)) ++bad;
    }
    return Outcome{bad == 0, count_str(pairs, "clockwise pairs") + ", " + count_str(bad, "invalid")};
  });

  std::printf("%d failure(s)\n", failures);
  return failures;
}
