#pragma once

// Exact rational numbers.
//
// Values that fit in a pair of 64-bit integers are stored inline and combined
// with 128-bit intermediates; anything larger is promoted to a GMP rational.
// Either way the value is kept in lowest terms with a positive denominator,
// so two equal values always have identical representations.

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <memory>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace honeycomb {

using BigInt = mpz_class;

class Rat {
 public:
  Rat() = default;
  Rat(int v) : num_(v) {}  // NOLINT(google-explicit-constructor)
  Rat(long v) : num_(v) {}  // NOLINT(google-explicit-constructor)
  Rat(long long v) : num_(v) {}  // NOLINT(google-explicit-constructor)
  Rat(long long num, long long den);
  explicit Rat(const BigInt& v);
  Rat(const BigInt& num, const BigInt& den);
  explicit Rat(const mpq_class& q);

  /// Parses "p", "-p", "p/q" (q > 0 after sign normalisation) or a finite
  /// decimal such as "0.125". Throws std::invalid_argument on malformed input.
  static Rat parse(std::string_view text);

  /// Nearest rational with denominator `den` (round half away from zero).
  static Rat from_double(double value, long long den);

  /// "p/q", or "p" when the denominator is 1.
  std::string str() const;

  BigInt numerator() const;
  BigInt denominator() const;
  mpq_class to_mpq() const;
  double to_double() const;

  bool is_integer() const;
  int sign() const;
  bool is_zero() const { return sign() == 0; }
  bool is_small() const { return !big_; }

  Rat floor() const;
  Rat ceil() const;
  Rat abs() const { return sign() < 0 ? -*this : *this; }

  Rat operator-() const;
  Rat& operator+=(const Rat& o);
  Rat& operator-=(const Rat& o);
  Rat& operator*=(const Rat& o);
  Rat& operator/=(const Rat& o);

  friend Rat operator+(Rat a, const Rat& b) { return a += b; }
  friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
  friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
  friend Rat operator/(Rat a, const Rat& b) { return a /= b; }

  friend bool operator==(const Rat& a, const Rat& b);
  friend std::strong_ordering operator<=>(const Rat& a, const Rat& b);

  /// this += a * b, the inner-loop operation of every elimination step.
  void add_product(const Rat& a, const Rat& b);

  std::size_t hash() const;

 private:
  void assign(const mpq_class& q);
  void normalize_small(__int128 num, __int128 den);

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
  std::shared_ptr<const mpq_class> big_;
};

std::ostream& operator<<(std::ostream& os, const Rat& r);

inline Rat min(const Rat& a, const Rat& b) { return b < a ? b : a; }
inline Rat max(const Rat& a, const Rat& b) { return a < b ? b : a; }

}  // namespace honeycomb

template <>
struct std::hash<honeycomb::Rat> {
  std::size_t operator()(const honeycomb::Rat& r) const noexcept { return r.hash(); }
};
