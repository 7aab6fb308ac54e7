#pragma once

// Exact rational linear programming.
//
//   maximize    objective . x
//   subject to  eq.coeffs . x  == eq.rhs     for every equality
//               ineq.coeffs . x >= ineq.rhs  for every inequality
//
// Variables are free; sign restrictions are ordinary inequality rows. Every
// answer is certified in exact arithmetic before it is returned: optimal
// points are re-checked against every row, infeasibility comes with a Farkas
// multiplier vector and unboundedness with an improving recession ray.

#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "honeycomb/rational.hpp"

namespace honeycomb {

struct Constraint {
  std::vector<Rat> coeffs;
  Rat rhs;
};

struct LinearProgram {
  std::size_t num_vars = 0;
  std::vector<Constraint> equalities;
  std::vector<Constraint> inequalities;  // coeffs . x >= rhs
  std::vector<Rat> objective;            // maximised; empty means zero

  /// Throws std::invalid_argument if some row or the objective has the wrong length.
  void validate() const;
};

enum class LpStatus { Infeasible, Optimal, Unbounded };

std::string_view to_string(LpStatus s);

struct LpResult {
  LpStatus status = LpStatus::Infeasible;

  // Optimal
  std::vector<Rat> point;
  Rat value;
  /// Inequality rows whose slacks are nonbasic at the returned vertex, sorted.
  /// Two optima with the same basis lie in the same linearity domain.
  std::vector<std::size_t> basis;
  /// Multipliers y >= 0 on inequality rows with objective = -sum y_i a_i modulo the
  /// equality rows. A vertex whose basic rows all carry y_i > 0 is the unique optimum.
  std::vector<Rat> duals;

  // Infeasible: multipliers over [equalities..., inequalities...]. Inequality
  // entries are >= 0, the combination of rows vanishes and the combination of
  // right-hand sides is positive. Scaled to a primitive integer vector.
  std::vector<Rat> certificate;

  // Unbounded: a recession direction that raises the objective, primitive integer.
  std::vector<Rat> ray;

  /// True when the double-precision simplex produced the basis and exact
  /// certification accepted it.
  bool float_guided = false;
};

struct SolveOptions {
  /// Problems with more than this many (rows x columns) entries are first
  /// solved in double precision; the resulting basis is then certified exactly
  /// and the exact simplex runs only if certification fails. 0 disables.
  std::size_t float_guide_threshold = 20000;
  /// When set, the exact simplex writes every tableau here.
  std::string* debug_dump = nullptr;
};

/// Exact two-phase simplex (Bland's rule once pivots stall on degenerate
/// vertices). Deterministic for a given input.
LpResult solve(const LinearProgram& lp, const SolveOptions& options = {});

/// True iff every row holds exactly at `x`.
bool satisfies(const LinearProgram& lp, std::span<const Rat> x);

/// Checks a Farkas certificate as described in LpResult.
bool is_farkas_certificate(const LinearProgram& lp, std::span<const Rat> y);

class LpError : public std::runtime_error {
 public:
  enum class Code { Infeasible, UnboundedDirection };
  LpError(Code code, const std::string& what) : std::runtime_error(what), code_(code) {}
  Code code() const { return code_; }

 private:
  Code code_;
};

/// Maximises the variables in `priority` one after another, each subject to
/// the optima already reached. Throws LpError on an empty region or when a
/// priority variable is unbounded above.
std::vector<Rat> lexicographic_max(const LinearProgram& lp, std::span<const std::size_t> priority);

struct Interval {
  std::optional<Rat> lo;  // nullopt = -infinity
  std::optional<Rat> hi;  // nullopt = +infinity
};

/// Exact range of x[var] over the feasible region. Throws LpError if empty.
Interval bounding_box(const LinearProgram& lp, std::size_t var);

}  // namespace honeycomb
