#include "honeycomb/lp.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <numeric>
#include <sstream>

#include "sparse_solve.hpp"

namespace honeycomb {

std::string_view to_string(LpStatus s) {
  switch (s) {
    case LpStatus::Infeasible: return "INFEASIBLE";
    case LpStatus::Optimal: return "OPTIMAL";
    case LpStatus::Unbounded: return "UNBOUNDED";
  }
  return "?";
}

void LinearProgram::validate() const {
  for (const auto& row : equalities)
    if (row.coeffs.size() != num_vars) throw std::invalid_argument("equality row has wrong length");
  for (const auto& row : inequalities)
    if (row.coeffs.size() != num_vars) throw std::invalid_argument("inequality row has wrong length");
  if (!objective.empty() && objective.size() != num_vars)
    throw std::invalid_argument("objective has wrong length");
}

namespace {

Rat dot(std::span<const Rat> a, std::span<const Rat> b) {
  Rat s;
  for (std::size_t i = 0; i < a.size(); ++i) s.add_product(a[i], b[i]);
  return s;
}

/// Scales v to a primitive integer vector with the same direction.
std::vector<Rat> primitive(std::vector<Rat> v) {
  BigInt l = 1;
  for (const auto& x : v)
    if (!x.is_zero()) l = lcm(l, x.denominator());
  BigInt g = 0;
  for (auto& x : v) {
    x *= Rat(l);
    if (!x.is_zero()) g = gcd(g, x.numerator());
  }
  if (g > 1)
    for (auto& x : v) x /= Rat(g);
  return v;
}

// ---------------------------------------------------------------------------
// Equality elimination. Pivot variables are written in terms of the free ones:
//   x[pivot_cols[r]] = d[r] - sum_f R[r][f] * x[free_cols[f]]
// and the inequalities and objective are restated over the free variables.

struct Reduced {
  std::vector<std::size_t> free_cols;
  std::vector<std::size_t> pivot_cols;
  std::vector<std::vector<Rat>> R;
  std::vector<Rat> d;
  std::vector<std::vector<Rat>> T;  // RREF row r = sum_e T[r][e] * equality e
  std::vector<std::vector<Rat>> A;  // inequalities over free vars
  std::vector<Rat> b;
  std::vector<Rat> c;
  Rat c0;
  std::optional<std::vector<Rat>> eq_certificate;
};

Reduced reduce(const LinearProgram& lp) {
  const std::size_t n = lp.num_vars;
  const std::size_t me = lp.equalities.size();
  Reduced red;
  // Augmented rows [E | e | I].
  std::vector<std::vector<Rat>> M(me, std::vector<Rat>(n + 1 + me));
  for (std::size_t i = 0; i < me; ++i) {
    for (std::size_t j = 0; j < n; ++j) M[i][j] = lp.equalities[i].coeffs[j];
    M[i][n] = lp.equalities[i].rhs;
    M[i][n + 1 + i] = 1;
  }
  std::size_t rank = 0;
  std::vector<bool> is_pivot(n, false);
  for (std::size_t j = 0; j < n && rank < me; ++j) {
    std::size_t p = rank;
    while (p < me && M[p][j].is_zero()) ++p;
    if (p == me) continue;
    std::swap(M[p], M[rank]);
    const Rat inv = Rat(1) / M[rank][j];
    for (auto& v : M[rank])
      if (!v.is_zero()) v *= inv;
    for (std::size_t i = 0; i < me; ++i) {
      if (i == rank || M[i][j].is_zero()) continue;
      const Rat f = -M[i][j];
      for (std::size_t c = 0; c < M[i].size(); ++c)
        if (!M[rank][c].is_zero()) M[i][c].add_product(f, M[rank][c]);
    }
    red.pivot_cols.push_back(j);
    is_pivot[j] = true;
    ++rank;
  }
  for (std::size_t i = rank; i < me; ++i) {
    if (!M[i][n].is_zero()) {
      std::vector<Rat> y(me + lp.inequalities.size());
      const Rat s = M[i][n].sign() > 0 ? Rat(1) : Rat(-1);
      for (std::size_t e = 0; e < me; ++e) y[e] = s * M[i][n + 1 + e];
      red.eq_certificate = primitive(std::move(y));
      return red;
    }
  }
  for (std::size_t j = 0; j < n; ++j)
    if (!is_pivot[j]) red.free_cols.push_back(j);
  const std::size_t k = red.free_cols.size();
  red.R.assign(rank, std::vector<Rat>(k));
  red.d.resize(rank);
  red.T.assign(rank, std::vector<Rat>(me));
  for (std::size_t r = 0; r < rank; ++r) {
    for (std::size_t f = 0; f < k; ++f) red.R[r][f] = M[r][red.free_cols[f]];
    red.d[r] = M[r][n];
    for (std::size_t e = 0; e < me; ++e) red.T[r][e] = M[r][n + 1 + e];
  }
  auto restate = [&](std::span<const Rat> row, std::vector<Rat>& out, Rat& constant) {
    out.assign(k, Rat());
    for (std::size_t f = 0; f < k; ++f) out[f] = row[red.free_cols[f]];
    for (std::size_t r = 0; r < rank; ++r) {
      const Rat& a = row[red.pivot_cols[r]];
      if (a.is_zero()) continue;
      constant.add_product(a, red.d[r]);
      const Rat na = -a;
      for (std::size_t f = 0; f < k; ++f)
        if (!red.R[r][f].is_zero()) out[f].add_product(na, red.R[r][f]);
    }
  };
  red.A.resize(lp.inequalities.size());
  red.b.resize(lp.inequalities.size());
  for (std::size_t i = 0; i < lp.inequalities.size(); ++i) {
    Rat moved;
    restate(lp.inequalities[i].coeffs, red.A[i], moved);
    red.b[i] = lp.inequalities[i].rhs - moved;
  }
  if (lp.objective.empty()) {
    red.c.assign(k, Rat());
  } else {
    restate(lp.objective, red.c, red.c0);
  }
  return red;
}

std::vector<Rat> expand(const Reduced& red, std::size_t n, std::span<const Rat> z, bool homogeneous) {
  std::vector<Rat> x(n);
  for (std::size_t f = 0; f < red.free_cols.size(); ++f) x[red.free_cols[f]] = z[f];
  for (std::size_t r = 0; r < red.pivot_cols.size(); ++r) {
    Rat v = homogeneous ? Rat() : red.d[r];
    for (std::size_t f = 0; f < z.size(); ++f)
      if (!red.R[r][f].is_zero() && !z[f].is_zero()) v.add_product(-red.R[r][f], z[f]);
    x[red.pivot_cols[r]] = v;
  }
  return x;
}

/// Lifts multipliers y on the reduced inequalities to a certificate over the
/// original [equalities..., inequalities...] rows.
std::vector<Rat> lift_certificate(const LinearProgram& lp, const Reduced& red, std::span<const Rat> y) {
  const std::size_t me = lp.equalities.size();
  std::vector<Rat> cert(me + lp.inequalities.size());
  for (std::size_t i = 0; i < y.size(); ++i) cert[me + i] = y[i];
  for (std::size_t r = 0; r < red.pivot_cols.size(); ++r) {
    Rat u;
    for (std::size_t i = 0; i < y.size(); ++i)
      if (!y[i].is_zero()) u.add_product(y[i], lp.inequalities[i].coeffs[red.pivot_cols[r]]);
    if (u.is_zero()) continue;
    for (std::size_t e = 0; e < me; ++e)
      if (!red.T[r][e].is_zero()) cert[e].add_product(-u, red.T[r][e]);
  }
  return primitive(std::move(cert));
}

// ---------------------------------------------------------------------------
// Dictionary simplex over the reduced problem  A z >= b, z free.
//
// Variable ids: [0, k) free z's, [k, k + m) slacks s_i = A_i z - b_i, k + m the
// phase-one auxiliary. Each row reads  basic = constant + sum_c coef[c] * cols[c].

template <class T>
struct Arith;

template <>
struct Arith<Rat> {
  static bool pos(const Rat& v) { return v.sign() > 0; }
  static bool neg(const Rat& v) { return v.sign() < 0; }
  static bool zero(const Rat& v) { return v.is_zero(); }
  static Rat from(const Rat& v) { return v; }
  static double mag(const Rat& v) { return std::fabs(v.to_double()); }
};

template <>
struct Arith<double> {
  static constexpr double kEps = 1e-9;
  static bool pos(double v) { return v > kEps; }
  static bool neg(double v) { return v < -kEps; }
  static bool zero(double v) { return std::fabs(v) <= kEps; }
  static double from(const Rat& v) { return v.to_double(); }
  static double mag(double v) { return std::fabs(v); }
};

enum class Outcome { Optimal, Infeasible, Unbounded };

template <class T>
class Dictionary {
 public:
  using A = Arith<T>;

  Dictionary(const Reduced& red, std::string* dump) : dump_(dump) {
    k_ = red.free_cols.size();
    m_ = red.A.size();
    aux_ = k_ + m_;
    cols_.resize(k_);
    std::iota(cols_.begin(), cols_.end(), 0);
    rows_.resize(m_);
    for (std::size_t i = 0; i < m_; ++i) {
      rows_[i].basic = k_ + i;
      rows_[i].constant = A::from(-red.b[i]);
      rows_[i].coef.resize(k_);
      for (std::size_t f = 0; f < k_; ++f) rows_[i].coef[f] = A::from(red.A[i][f]);
    }
    obj_.constant = A::from(red.c0);
    obj_.coef.resize(k_);
    for (std::size_t f = 0; f < k_; ++f) obj_.coef[f] = A::from(red.c[f]);
  }

  Outcome run() {
    pivot_free_variables();
    if (!phase_one()) return Outcome::Infeasible;
    for (std::size_t c = 0; c < cols_.size(); ++c) {
      if (cols_[c] < k_ && !A::zero(obj_.coef[c])) {
        entering_ = c;
        return Outcome::Unbounded;
      }
    }
    return optimise(obj_) ? Outcome::Optimal : Outcome::Unbounded;
  }

  std::size_t k() const { return k_; }
  std::size_t m() const { return m_; }

  /// Nonbasic slack rows (reduced inequality indices), sorted.
  std::vector<std::size_t> nonbasic_slacks() const {
    std::vector<std::size_t> out;
    for (std::size_t v : cols_)
      if (v >= k_ && v < aux_) out.push_back(v - k_);
    std::sort(out.begin(), out.end());
    return out;
  }

  std::vector<std::size_t> zero_columns() const {
    std::vector<std::size_t> out;
    for (std::size_t v : cols_)
      if (v < k_) out.push_back(v);
    std::sort(out.begin(), out.end());
    return out;
  }

  std::size_t entering_variable() const { return cols_[entering_]; }

  std::vector<T> z_values() const {
    std::vector<T> z(k_, T{});
    for (const auto& r : rows_)
      if (r.basic < k_) z[r.basic] = r.constant;
    return z;
  }

  /// Direction along which the entering column moves z when it grows.
  std::vector<T> ray() const {
    std::vector<T> z(k_, T{});
    const std::size_t v = cols_[entering_];
    if (v < k_) z[v] = A::pos(obj_.coef[entering_]) ? T(1) : T(-1);
    const T scale = v < k_ ? z[v] : T(1);
    for (const auto& r : rows_)
      if (r.basic < k_) z[r.basic] = r.coef[entering_] * scale;
    return z;
  }

  /// Multipliers -d_i read off an objective row for each nonbasic slack.
  std::vector<T> duals(bool phase_one_row) const {
    const Row& o = phase_one_row ? w_ : obj_;
    std::vector<T> y(m_, T{});
    for (std::size_t c = 0; c < cols_.size(); ++c)
      if (cols_[c] >= k_ && cols_[c] < aux_) y[cols_[c] - k_] = -o.coef[c];
    return y;
  }

  const T& objective_value() const { return obj_.constant; }

 private:
  struct Row {
    std::size_t basic = 0;
    T constant{};
    std::vector<T> coef;
    bool free = false;
  };

  void pivot(std::size_t r, std::size_t c) {
    Row& pr = rows_[r];
    const T a = pr.coef[c];
    const T inv = T(1) / a;
    const std::size_t leaving = pr.basic;
    pr.basic = cols_[c];
    pr.constant = -pr.constant * inv;
    std::vector<std::size_t> nz;
    for (std::size_t j = 0; j < pr.coef.size(); ++j) {
      if (j == c) continue;
      if (!exact_zero(pr.coef[j])) {
        pr.coef[j] = -pr.coef[j] * inv;
        nz.push_back(j);
      }
    }
    pr.coef[c] = inv;
    nz.push_back(c);
    cols_[c] = leaving;
    auto update = [&](Row& row) {
      const T f = row.coef[c];
      if (exact_zero(f)) return;
      row.coef[c] = T{};
      accumulate(row.constant, f, pr.constant);
      for (std::size_t j : nz) accumulate(row.coef[j], f, pr.coef[j]);
      if constexpr (std::is_same_v<T, double>) {
        for (std::size_t j : nz)
          if (std::fabs(row.coef[j]) < 1e-13) row.coef[j] = 0.0;
      }
    };
    for (std::size_t i = 0; i < rows_.size(); ++i)
      if (i != r) update(rows_[i]);
    update(obj_);
    if (has_w_) update(w_);
    ++pivots_;
    if (dump_) write_dump();
  }

  static bool exact_zero(const T& v) {
    if constexpr (std::is_same_v<T, double>) {
      return v == 0.0;
    } else {
      return v.is_zero();
    }
  }

  static void accumulate(T& target, const T& f, const T& v) {
    if constexpr (std::is_same_v<T, double>) {
      target += f * v;
    } else {
      target.add_product(f, v);
    }
  }

  void pivot_free_variables() {
    for (std::size_t f = 0; f < k_; ++f) {
      // Column currently holding z_f.
      std::size_t c = 0;
      while (cols_[c] != f) ++c;
      std::size_t best = rows_.size();
      for (std::size_t i = 0; i < rows_.size(); ++i) {
        if (rows_[i].free || A::zero(rows_[i].coef[c])) continue;
        if (best == rows_.size()) {
          best = i;
          continue;
        }
        if constexpr (std::is_same_v<T, double>) {
          if (std::fabs(rows_[i].coef[c]) > std::fabs(rows_[best].coef[c]) * 1.5) best = i;
        }
      }
      if (best == rows_.size()) continue;  // z_f appears in no row
      pivot(best, c);
      rows_[best].free = true;
    }
  }

  // Returns false when infeasible.
  bool phase_one() {
    std::size_t worst = rows_.size();
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      if (rows_[i].free || !A::neg(rows_[i].constant)) continue;
      if (worst == rows_.size() || rows_[i].constant < rows_[worst].constant ||
          (!(rows_[worst].constant < rows_[i].constant) && rows_[i].basic < rows_[worst].basic))
        worst = i;
    }
    if (worst == rows_.size()) return true;
    // Auxiliary column: every slack row gains + x0.
    cols_.push_back(aux_);
    for (auto& r : rows_) r.coef.push_back(r.free ? T{} : T(1));
    obj_.coef.push_back(T{});
    w_.coef.assign(cols_.size(), T{});
    w_.coef.back() = T(-1);
    has_w_ = true;
    pivot(worst, cols_.size() - 1);
    optimise(w_);
    const bool feasible = !A::neg(w_.constant);
    if (!feasible) return false;
    // Drive x0 out of the basis if it sits there at level zero.
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      if (rows_[i].basic != aux_) continue;
      std::size_t best = cols_.size();
      for (std::size_t c = 0; c < cols_.size(); ++c) {
        if (cols_[c] < k_ || A::zero(rows_[i].coef[c])) continue;
        if (best == cols_.size() || A::mag(rows_[i].coef[c]) > A::mag(rows_[i].coef[best])) best = c;
      }
      if (best != cols_.size()) {
        pivot(i, best);
      } else {
        // Row reads x0 = 0 identically; drop it.
        rows_.erase(rows_.begin() + static_cast<std::ptrdiff_t>(i));
      }
      break;
    }
    for (std::size_t c = 0; c < cols_.size(); ++c) {
      if (cols_[c] != aux_) continue;
      for (auto& r : rows_) r.coef.erase(r.coef.begin() + static_cast<std::ptrdiff_t>(c));
      obj_.coef.erase(obj_.coef.begin() + static_cast<std::ptrdiff_t>(c));
      cols_.erase(cols_.begin() + static_cast<std::ptrdiff_t>(c));
      break;
    }
    has_w_ = false;
    return true;
  }

  // Maximises the given objective row. Returns false on unboundedness, with
  // entering_ naming the unbounded column.
  bool optimise(const Row& o) {
    std::size_t degenerate_run = 0;
    bool bland = false;
    for (;;) {
      std::size_t enter = cols_.size();
      for (std::size_t c = 0; c < cols_.size(); ++c) {
        if (cols_[c] < k_ || !A::pos(o.coef[c])) continue;
        if (enter == cols_.size()) {
          enter = c;
        } else if (bland ? cols_[c] < cols_[enter] : o.coef[enter] < o.coef[c]) {
          enter = c;
        }
      }
      if (enter == cols_.size()) return true;
      std::size_t leave = rows_.size();
      T best_ratio{};
      for (std::size_t i = 0; i < rows_.size(); ++i) {
        const Row& r = rows_[i];
        if (r.free || !A::neg(r.coef[enter])) continue;
        T ratio = r.constant / -r.coef[enter];
        if constexpr (std::is_same_v<T, double>) {
          if (ratio < 0) ratio = 0;
        }
        if (leave == rows_.size() || ratio < best_ratio ||
            (!(best_ratio < ratio) && r.basic < rows_[leave].basic)) {
          leave = i;
          best_ratio = ratio;
        }
      }
      if (leave == rows_.size()) {
        entering_ = enter;
        return false;
      }
      if (A::zero(best_ratio)) {
        if (++degenerate_run > kStallLimit) bland = true;
      } else {
        degenerate_run = 0;
      }
      pivot(leave, enter);
      if (pivots_ > kPivotLimit) throw std::runtime_error("simplex pivot limit exceeded");
    }
  }

  void write_dump() {
    std::ostringstream os;
    os << "pivot " << pivots_ << " cols:";
    for (auto v : cols_) os << ' ' << v;
    os << '\n';
    for (const auto& r : rows_) {
      os << (r.free ? "  z" : "  b") << r.basic << " = " << r.constant;
      for (const auto& v : r.coef) os << ' ' << v;
      os << '\n';
    }
    os << "  obj = " << obj_.constant;
    for (const auto& v : obj_.coef) os << ' ' << v;
    os << '\n';
    *dump_ += os.str();
  }

  static constexpr std::size_t kStallLimit = 50;
  static constexpr std::size_t kPivotLimit = 5'000'000;

  std::size_t k_ = 0, m_ = 0, aux_ = 0;
  std::vector<std::size_t> cols_;
  std::vector<Row> rows_;
  Row obj_;
  Row w_;
  bool has_w_ = false;
  std::size_t entering_ = 0;
  std::size_t pivots_ = 0;
  std::string* dump_ = nullptr;
};

// ---------------------------------------------------------------------------
// Result assembly and certification.

bool certify_optimal(const LinearProgram& lp, const Reduced& red, std::span<const Rat> z,
                     std::span<const Rat> y, LpResult& out) {
  const std::size_t m = red.A.size();
  for (std::size_t i = 0; i < m; ++i) {
    if (y[i].sign() < 0) return false;
    if (dot(red.A[i], z) < red.b[i]) return false;
  }
  // Dual feasibility: c + sum y_i A_i == 0 on the reduced space.
  for (std::size_t f = 0; f < red.c.size(); ++f) {
    Rat s = red.c[f];
    for (std::size_t i = 0; i < m; ++i)
      if (!y[i].is_zero()) s.add_product(y[i], red.A[i][f]);
    if (!s.is_zero()) return false;
  }
  // Complementary slackness.
  for (std::size_t i = 0; i < m; ++i)
    if (!y[i].is_zero() && dot(red.A[i], z) != red.b[i]) return false;
  out.status = LpStatus::Optimal;
  out.point = expand(red, lp.num_vars, z, false);
  if (!satisfies(lp, out.point)) return false;
  out.value = lp.objective.empty() ? Rat() : dot(lp.objective, out.point);
  out.duals.assign(y.begin(), y.end());
  return true;
}

bool certify_infeasible(const LinearProgram& lp, const Reduced& red, std::span<const Rat> y, LpResult& out) {
  for (const auto& v : y)
    if (v.sign() < 0) return false;
  auto cert = lift_certificate(lp, red, y);
  if (!is_farkas_certificate(lp, cert)) return false;
  out.status = LpStatus::Infeasible;
  out.certificate = std::move(cert);
  return true;
}

bool certify_unbounded(const LinearProgram& lp, const Reduced& red, std::span<const Rat> z,
                       std::span<const Rat> r, LpResult& out) {
  for (std::size_t i = 0; i < red.A.size(); ++i) {
    if (dot(red.A[i], z) < red.b[i]) return false;
    if (dot(red.A[i], r).sign() < 0) return false;
  }
  if (dot(red.c, r).sign() <= 0) return false;
  auto ray = primitive(expand(red, lp.num_vars, r, true));
  auto x = expand(red, lp.num_vars, z, false);
  if (!satisfies(lp, x)) return false;
  out.status = LpStatus::Unbounded;
  out.ray = std::move(ray);
  out.point = std::move(x);
  return true;
}

LpResult solve_exact(const LinearProgram& lp, const Reduced& red, std::string* dump) {
  Dictionary<Rat> dict(red, dump);
  const Outcome oc = dict.run();
  LpResult out;
  if (oc == Outcome::Infeasible) {
    auto y = dict.duals(true);
    if (!certify_infeasible(lp, red, y, out))
      throw std::logic_error("exact simplex produced an invalid Farkas certificate");
    return out;
  }
  auto z = dict.z_values();
  if (oc == Outcome::Unbounded) {
    auto r = dict.ray();
    if (!certify_unbounded(lp, red, z, r, out))
      throw std::logic_error("exact simplex produced an invalid unbounded ray");
    return out;
  }
  auto y = dict.duals(false);
  if (!certify_optimal(lp, red, z, y, out))
    throw std::logic_error("exact simplex produced an uncertified optimum");
  out.basis = dict.nonbasic_slacks();
  return out;
}

/// Sparse rows of the reduced inequality matrix restricted to `rows`.
std::vector<SparseRow> gather(const Reduced& red, std::span<const std::size_t> rows) {
  std::vector<SparseRow> out;
  out.reserve(rows.size());
  for (std::size_t i : rows) {
    SparseRow sr;
    for (std::size_t f = 0; f < red.A[i].size(); ++f)
      if (!red.A[i][f].is_zero()) sr.emplace_back(f, red.A[i][f]);
    out.push_back(std::move(sr));
  }
  return out;
}

SparseRow unit(std::size_t j, Rat v = 1) { return SparseRow{{j, std::move(v)}}; }

std::optional<LpResult> solve_guided(const LinearProgram& lp, const Reduced& red) {
  Dictionary<double> dict(red, nullptr);
  Outcome oc;
  try {
    oc = dict.run();
  } catch (const std::exception&) {
    return std::nullopt;
  }
  const std::size_t k = red.free_cols.size();
  const auto tight = dict.nonbasic_slacks();
  const auto zero_cols = dict.zero_columns();
  LpResult out;
  out.float_guided = true;

  auto vertex = [&](std::span<const std::size_t> rows) -> std::optional<std::vector<Rat>> {
    auto sys = gather(red, rows);
    std::vector<Rat> rhs;
    for (std::size_t i : rows) rhs.push_back(red.b[i]);
    for (std::size_t f : zero_cols) {
      sys.push_back(unit(f));
      rhs.emplace_back();
    }
    return solve_square(sys, rhs, k);
  };

  if (oc == Outcome::Infeasible) {
    // y on the tight rows with y^T A = 0 and sum y = 1.
    const std::size_t t = tight.size();
    std::vector<SparseRow> sys;
    std::vector<Rat> rhs;
    std::vector<std::size_t> live;
    for (std::size_t f = 0; f < k; ++f)
      if (!std::binary_search(zero_cols.begin(), zero_cols.end(), f)) live.push_back(f);
    for (std::size_t f : live) {
      SparseRow row;
      for (std::size_t a = 0; a < t; ++a)
        if (!red.A[tight[a]][f].is_zero()) row.emplace_back(a, red.A[tight[a]][f]);
      sys.push_back(std::move(row));
      rhs.emplace_back();
    }
    SparseRow ones;
    for (std::size_t a = 0; a < t; ++a) ones.emplace_back(a, Rat(1));
    sys.push_back(std::move(ones));
    rhs.emplace_back(1);
    if (sys.size() != t) return std::nullopt;
    auto ys = solve_square(sys, rhs, t);
    if (!ys) return std::nullopt;
    std::vector<Rat> y(red.A.size());
    for (std::size_t a = 0; a < t; ++a) y[tight[a]] = (*ys)[a];
    if (!certify_infeasible(lp, red, y, out)) return std::nullopt;
    return out;
  }

  auto z = vertex(tight);
  if (!z) return std::nullopt;

  if (oc == Outcome::Unbounded) {
    const std::size_t v = dict.entering_variable();
    std::vector<SparseRow> sys;
    std::vector<Rat> rhs;
    std::vector<std::size_t> rest;
    if (v >= k) {
      const std::size_t slack = v - k;
      for (std::size_t i : tight)
        if (i != slack) rest.push_back(i);
      sys = gather(red, rest);
      rhs.assign(rest.size(), Rat());
      auto last = gather(red, std::span<const std::size_t>(&slack, 1));
      sys.push_back(std::move(last.front()));
      rhs.emplace_back(1);
      for (std::size_t f : zero_cols) {
        sys.push_back(unit(f));
        rhs.emplace_back();
      }
    } else {
      sys = gather(red, tight);
      rhs.assign(tight.size(), Rat());
      for (std::size_t f : zero_cols) {
        sys.push_back(unit(f));
        rhs.emplace_back(f == v ? Rat(dict.ray()[v] > 0 ? 1 : -1) : Rat());
      }
    }
    auto r = solve_square(sys, rhs, k);
    if (!r) return std::nullopt;
    if (!certify_unbounded(lp, red, *z, *r, out)) return std::nullopt;
    return out;
  }

  // Optimal: duals on tight rows solve  sum_a y_a A[tight[a]] = -c  on live columns.
  const std::size_t t = tight.size();
  std::vector<SparseRow> sys;
  std::vector<Rat> rhs;
  for (std::size_t f = 0; f < k; ++f) {
    if (std::binary_search(zero_cols.begin(), zero_cols.end(), f)) {
      if (!red.c[f].is_zero()) return std::nullopt;
      continue;
    }
    SparseRow row;
    for (std::size_t a = 0; a < t; ++a)
      if (!red.A[tight[a]][f].is_zero()) row.emplace_back(a, red.A[tight[a]][f]);
    sys.push_back(std::move(row));
    rhs.push_back(-red.c[f]);
  }
  if (sys.size() != t) return std::nullopt;
  auto ys = t == 0 ? std::optional<std::vector<Rat>>(std::vector<Rat>{}) : solve_square(sys, rhs, t);
  if (!ys) return std::nullopt;
  std::vector<Rat> y(red.A.size());
  for (std::size_t a = 0; a < t; ++a) y[tight[a]] = (*ys)[a];
  if (!certify_optimal(lp, red, *z, y, out)) return std::nullopt;
  out.basis = tight;
  return out;
}

}  // namespace

bool satisfies(const LinearProgram& lp, std::span<const Rat> x) {
  if (x.size() != lp.num_vars) return false;
  for (const auto& row : lp.equalities)
    if (dot(row.coeffs, x) != row.rhs) return false;
  for (const auto& row : lp.inequalities)
    if (dot(row.coeffs, x) < row.rhs) return false;
  return true;
}

bool is_farkas_certificate(const LinearProgram& lp, std::span<const Rat> y) {
  const std::size_t me = lp.equalities.size();
  if (y.size() != me + lp.inequalities.size()) return false;
  for (std::size_t i = me; i < y.size(); ++i)
    if (y[i].sign() < 0) return false;
  std::vector<Rat> combo(lp.num_vars);
  Rat rhs;
  auto add = [&](const Constraint& row, const Rat& w) {
    if (w.is_zero()) return;
    for (std::size_t j = 0; j < lp.num_vars; ++j)
      if (!row.coeffs[j].is_zero()) combo[j].add_product(w, row.coeffs[j]);
    rhs.add_product(w, row.rhs);
  };
  for (std::size_t e = 0; e < me; ++e) add(lp.equalities[e], y[e]);
  for (std::size_t i = 0; i < lp.inequalities.size(); ++i) add(lp.inequalities[i], y[me + i]);
  for (const auto& v : combo)
    if (!v.is_zero()) return false;
  return rhs.sign() > 0;
}

LpResult solve(const LinearProgram& lp, const SolveOptions& options) {
  lp.validate();
  Reduced red = reduce(lp);
  if (red.eq_certificate) {
    LpResult out;
    out.status = LpStatus::Infeasible;
    out.certificate = *red.eq_certificate;
    if (!is_farkas_certificate(lp, out.certificate))
      throw std::logic_error("equality elimination produced an invalid certificate");
    return out;
  }
  const std::size_t size = red.A.size() * (red.free_cols.size() + 1);
  if (options.float_guide_threshold != 0 && size > options.float_guide_threshold && !options.debug_dump) {
    if (auto guided = solve_guided(lp, red)) return *guided;
  }
  return solve_exact(lp, red, options.debug_dump);
}

std::vector<Rat> lexicographic_max(const LinearProgram& lp, std::span<const std::size_t> priority) {
  LinearProgram work = lp;
  std::vector<Rat> point;
  if (priority.empty()) {
    work.objective.clear();
    auto r = solve(work);
    if (r.status == LpStatus::Infeasible) throw LpError(LpError::Code::Infeasible, "INFEASIBLE");
    return r.point;
  }
  for (std::size_t var : priority) {
    if (var >= lp.num_vars) throw std::out_of_range("priority variable out of range");
    work.objective.assign(lp.num_vars, Rat());
    work.objective[var] = 1;
    auto r = solve(work);
    if (r.status == LpStatus::Infeasible) throw LpError(LpError::Code::Infeasible, "INFEASIBLE");
    if (r.status == LpStatus::Unbounded)
      throw LpError(LpError::Code::UnboundedDirection, "UNBOUNDED_DIRECTION: variable " + std::to_string(var));
    Constraint fix;
    fix.coeffs.assign(lp.num_vars, Rat());
    fix.coeffs[var] = 1;
    fix.rhs = r.value;
    work.equalities.push_back(std::move(fix));
    point = std::move(r.point);
  }
  return point;
}

Interval bounding_box(const LinearProgram& lp, std::size_t var) {
  if (var >= lp.num_vars) throw std::out_of_range("bounding_box variable out of range");
  LinearProgram work = lp;
  work.objective.assign(lp.num_vars, Rat());
  work.objective[var] = 1;
  Interval out;
  auto hi = solve(work);
  if (hi.status == LpStatus::Infeasible) throw LpError(LpError::Code::Infeasible, "INFEASIBLE");
  if (hi.status == LpStatus::Optimal) out.hi = hi.value;
  work.objective[var] = -1;
  auto lo = solve(work);
  if (lo.status == LpStatus::Optimal) out.lo = -lo.value;
  return out;
}

}  // namespace honeycomb
