#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "honeycomb/rational.hpp"

namespace honeycomb {

/// Weakly decreasing list of exact eigenvalues.
class Spectrum {
 public:
  Spectrum() = default;
  /// Throws Error(NOT_DECREASING) unless values are weakly decreasing.
  explicit Spectrum(std::vector<Rat> values);
  Spectrum(std::initializer_list<Rat> values) : Spectrum(std::vector<Rat>(values)) {}
  /// Comma separated rationals, e.g. "3,1/2,-1".
  static Spectrum parse(std::string_view text);

  std::size_t size() const { return values_.size(); }
  const Rat& operator[](std::size_t i) const { return values_[i]; }
  const std::vector<Rat>& values() const { return values_; }
  Rat sum() const;
  bool is_integral() const;
  /// No repeated values.
  bool is_regular() const;
  /// (-v_n, ..., -v_1).
  Spectrum negated() const;
  Spectrum scaled(const Rat& s) const;
  Spectrum shifted(const Rat& c) const;
  std::string str() const;

  friend bool operator==(const Spectrum&, const Spectrum&) = default;

 private:
  std::vector<Rat> values_;
};

/// Throws Error(DIMENSION_MISMATCH) unless all three have the same positive length.
void require_same_size(const Spectrum& a, const Spectrum& b, const Spectrum& c);

}  // namespace honeycomb
