#include <random>

#include "doctest.h"
#include "honeycomb/feasibility.hpp"
#include "honeycomb/horn.hpp"
#include "honeycomb/lattice.hpp"
#include "support.hpp"

using namespace honeycomb;

namespace {

Spectrum S(std::initializer_list<Rat> v) { return Spectrum(std::vector<Rat>(v)); }

Spectrum random_spectrum(int n, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> d(-24, 24);
  std::vector<Rat> v;
  for (int i = 0; i < n; ++i) v.emplace_back(d(rng), 4);
  std::sort(v.begin(), v.end(), [](const Rat& a, const Rat& b) { return b < a; });
  return Spectrum(v);
}

const HornInequality& find(const std::vector<HornInequality>& list, const AdmissibleTriple& t) {
  for (const auto& h : list)
    if (h.triple == t) return h;
  FAIL("triple not in the list");
  throw 0;
}

}  // namespace

TEST_CASE("admissible triple counts") {
  const auto& two = admissible_triples(2);
  REQUIRE(two.size() == 3);
  CHECK(two[0] == AdmissibleTriple{1, {0}, {0}, {0}});
  CHECK(two[1] == AdmissibleTriple{1, {0}, {1}, {1}});
  CHECK(two[2] == AdmissibleTriple{1, {1}, {0}, {1}});
  const auto& three = admissible_triples(3);
  CHECK(three.size() == 12);
  int r1 = 0;
  for (const auto& t : three) r1 += t.r == 1;
  CHECK(r1 == 6);
  for (int n = 3; n <= 5; ++n) {
    bool found = false;
    for (const auto& t : admissible_triples(n)) found = found || t == AdmissibleTriple{2, {0, 0}, {0, 0}, {0, 0}};
    CHECK(found);
  }
  CHECK(&admissible_triples(3) == &admissible_triples(3));
}

TEST_CASE("index convention") {
  auto list = horn_inequalities(3);
  const auto& top = find(list, {1, {0}, {0}, {0}});
  CHECK(top.str() == "l1+m1 >= n1");
  const auto& pair = find(list, {2, {0, 0}, {0, 0}, {0, 0}});
  CHECK(pair.str() == "l1+l2+m1+m2 >= n1+n2");
  CHECK(pair.lambda_indices() == std::vector<int>{2, 1});
  // Weyl: nu_{i+j+1} <= lam_{i+1} + mu_{j+1}.
  for (int i = 0; i <= 2; ++i)
    for (int j = 0; i + j <= 2; ++j) {
      const auto& w = find(list, {1, {i}, {j}, {i + j}});
      CHECK(w.lambda_indices() == std::vector<int>{i + 1});
      CHECK(w.mu_indices() == std::vector<int>{j + 1});
      CHECK(w.nu_indices() == std::vector<int>{i + j + 1});
    }
  CHECK(top.evaluate(S({1, 0, 0}), S({1, 0, 0}), S({2, 0, 0})));
  CHECK_FALSE(top.evaluate(S({1, 0, 0}), S({1, 0, 0}), S({3, 0, -1})));
  CHECK_THROWS_AS(top.evaluate(S({1, 0}), S({1, 0}), S({1, 1})), Error);
}

TEST_CASE("decide_by_horn matches the LP") {
  CHECK(decide_by_horn(S({3}), S({4}), S({7})));
  CHECK_FALSE(decide_by_horn(S({3}), S({4}), S({5})));
  CHECK(decide_by_horn(S({2, 0}), S({2, 0}), S({3, 1})));
  CHECK_FALSE(decide_by_horn(S({3, 0}), S({4, 0}), S({8, -1})));
  CHECK(decide_by_horn(S({3, 0}), S({4, 0}), S({4, 3})));
  CHECK(decide_by_horn(S({3, 0}), S({4, 0}), S({7, 0})));
  std::mt19937_64 rng(13);
  for (int n = 2; n <= 4; ++n) {
    int yes = 0;
    for (int t = 0; t < 150; ++t) {
      auto l = random_spectrum(n, rng), m = random_spectrum(n, rng), v = random_spectrum(n, rng);
      v = v.shifted((l.sum() + m.sum() - v.sum()) / Rat(n));
      bool lp = decide_sum(l, m, v);
      CHECK(decide_by_horn(l, m, v) == lp);
      yes += lp;
    }
    CHECK(yes > 0);
  }
}

TEST_CASE("every Horn inequality holds on honeycomb boundaries") {
  std::mt19937_64 rng(19);
  for (int n = 2; n <= 5; ++n) {
    auto list = horn_inequalities(n);
    for (int t = 0; t < 30; ++t) {
      auto b = boundary(testsupport::random_honeycomb(n, rng));
      Spectrum l(b.lambda), m(b.mu), v = Spectrum(b.nu).negated();
      for (const auto& h : list) CHECK(h.evaluate(l, m, v));
    }
  }
}

TEST_CASE("quantum and classical admissibility agree on candidates") {
  for (int n = 2; n <= 5; ++n) {
    for (int r = 1; r < n; ++r) {
      std::vector<Spectrum> seqs;
      std::vector<Rat> cur;
      std::function<void(int)> rec = [&](int hi) {
        if (static_cast<int>(cur.size()) == r) {
          seqs.emplace_back(cur);
          return;
        }
        for (int v = 0; v <= hi; ++v) {
          cur.emplace_back(v);
          rec(v);
          cur.pop_back();
        }
      };
      rec(n - r);
      for (const auto& i : seqs)
        for (const auto& j : seqs)
          for (const auto& k : seqs)
            if (i.sum() + j.sum() == k.sum()) CHECK(decide_quantum(i, j, k) == decide_sum(i, j, k));
    }
  }
}
