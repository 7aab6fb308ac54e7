#include "honeycomb/rational.hpp"

#include <cctype>
#include <cmath>
#include <limits>
#include <ostream>
#include <stdexcept>

namespace honeycomb {

namespace {

using i128 = __int128;

constexpr i128 kMax = std::numeric_limits<std::int64_t>::max();

bool fits(i128 v) { return v <= kMax && v >= -kMax; }

i128 abs128(i128 v) { return v < 0 ? -v : v; }

i128 gcd128(i128 a, i128 b) {
  a = abs128(a);
  b = abs128(b);
  while (b != 0) {
    i128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

std::int64_t gcd64(std::int64_t a, std::int64_t b) {
  a = a < 0 ? -a : a;
  b = b < 0 ? -b : b;
  while (b != 0) {
    std::int64_t t = a % b;
    a = b;
    b = t;
  }
  return a;
}

mpz_class to_mpz(std::int64_t v) {
  mpz_class z;
  mpz_set_si(z.get_mpz_t(), static_cast<long>(v));
  return z;
}

bool mpz_fits_i64(const mpz_class& z) { return mpz_fits_slong_p(z.get_mpz_t()) != 0; }

}  // namespace

Rat::Rat(long long num, long long den) {
  if (den == 0) throw std::domain_error("Rat: zero denominator");
  normalize_small(num, den);
}

Rat::Rat(const BigInt& v) { assign(mpq_class(v)); }

Rat::Rat(const BigInt& num, const BigInt& den) {
  if (den == 0) throw std::domain_error("Rat: zero denominator");
  mpq_class q(num, den);
  q.canonicalize();
  assign(q);
}

Rat::Rat(const mpq_class& q) { assign(q); }

void Rat::assign(const mpq_class& q) {
  // mpq values are canonical by contract of every caller.
  if (mpz_fits_i64(q.get_num()) && mpz_fits_i64(q.get_den()) &&
      q.get_num() != std::numeric_limits<long>::min()) {
    num_ = mpz_get_si(q.get_num_mpz_t());
    den_ = mpz_get_si(q.get_den_mpz_t());
    big_.reset();
  } else {
    num_ = 0;
    den_ = 1;
    big_ = std::make_shared<const mpq_class>(q);
  }
}

void Rat::normalize_small(i128 num, i128 den) {
  if (den < 0) {
    num = -num;
    den = -den;
  }
  if (den != 1) {
    i128 g = gcd128(num, den);
    if (g > 1) {
      num /= g;
      den /= g;
    }
  }
  if (num == 0) den = 1;
  if (fits(num) && fits(den)) {
    num_ = static_cast<std::int64_t>(num);
    den_ = static_cast<std::int64_t>(den);
    big_.reset();
    return;
  }
  // Rebuild through GMP from the 128-bit halves.
  auto from128 = [](i128 v) {
    bool neg = v < 0;
    unsigned __int128 u = neg ? static_cast<unsigned __int128>(-v) : static_cast<unsigned __int128>(v);
    mpz_class hi, lo;
    mpz_set_ui(hi.get_mpz_t(), static_cast<unsigned long>(u >> 64));
    mpz_set_ui(lo.get_mpz_t(), static_cast<unsigned long>(u & 0xFFFFFFFFFFFFFFFFULL));
    mpz_class r = (hi << 64) + lo;
    return neg ? mpz_class(-r) : r;
  };
  mpq_class q(from128(num), from128(den));
  assign(q);
}

Rat Rat::parse(std::string_view text) {
  std::string s(text);
  auto trim = [](std::string& t) {
    while (!t.empty() && std::isspace(static_cast<unsigned char>(t.front()))) t.erase(t.begin());
    while (!t.empty() && std::isspace(static_cast<unsigned char>(t.back()))) t.pop_back();
  };
  trim(s);
  if (s.empty()) throw std::invalid_argument("empty rational");
  auto is_int = [](const std::string& t) {
    std::size_t i = (!t.empty() && (t[0] == '-' || t[0] == '+')) ? 1 : 0;
    if (i >= t.size()) return false;
    for (; i < t.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(t[i]))) return false;
    return true;
  };
  auto to_z = [](std::string t) {
    if (!t.empty() && t[0] == '+') t.erase(0, 1);
    return mpz_class(t, 10);
  };
  if (auto slash = s.find('/'); slash != std::string::npos) {
    std::string p = s.substr(0, slash), q = s.substr(slash + 1);
    trim(p);
    trim(q);
    if (!is_int(p) || !is_int(q)) throw std::invalid_argument("malformed rational: " + s);
    mpz_class den = to_z(q);
    if (den == 0) throw std::invalid_argument("zero denominator: " + s);
    return Rat(to_z(p), den);
  }
  if (auto dot = s.find('.'); dot != std::string::npos) {
    std::string ip = s.substr(0, dot), fp = s.substr(dot + 1);
    bool neg = !ip.empty() && ip[0] == '-';
    if (!ip.empty() && (ip[0] == '-' || ip[0] == '+')) ip.erase(0, 1);
    if (ip.empty()) ip = "0";
    if (!is_int(ip) || (!fp.empty() && !is_int(fp)) || fp.find_first_of("+-") != std::string::npos)
      throw std::invalid_argument("malformed decimal: " + s);
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, fp.size());
    mpz_class num = to_z(ip) * scale + (fp.empty() ? mpz_class(0) : to_z(fp));
    if (neg) num = -num;
    return Rat(num, scale);
  }
  if (!is_int(s)) throw std::invalid_argument("malformed rational: " + s);
  return Rat(to_z(s));
}

Rat Rat::from_double(double value, long long den) {
  if (!std::isfinite(value)) throw std::domain_error("Rat::from_double: non-finite value");
  long double scaled = static_cast<long double>(value) * static_cast<long double>(den);
  long double r = std::round(scaled);
  if (std::fabs(r) < 9.0e18L) return Rat(static_cast<long long>(r), den);
  mpz_class num(static_cast<double>(r));
  return Rat(num, mpz_class(static_cast<long>(den)));
}

std::string Rat::str() const {
  if (big_) {
    if (big_->get_den() == 1) return big_->get_num().get_str();
    return big_->get_num().get_str() + "/" + big_->get_den().get_str();
  }
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

BigInt Rat::numerator() const { return big_ ? BigInt(big_->get_num()) : to_mpz(num_); }
BigInt Rat::denominator() const { return big_ ? BigInt(big_->get_den()) : to_mpz(den_); }

mpq_class Rat::to_mpq() const {
  if (big_) return *big_;
  mpq_class q(to_mpz(num_), to_mpz(den_));
  return q;
}

double Rat::to_double() const {
  if (big_) return big_->get_d();
  return static_cast<double>(num_) / static_cast<double>(den_);
}

bool Rat::is_integer() const { return big_ ? big_->get_den() == 1 : den_ == 1; }

int Rat::sign() const {
  if (big_) return sgn(*big_);
  return (num_ > 0) - (num_ < 0);
}

Rat Rat::floor() const {
  if (big_) {
    mpz_class q;
    mpz_fdiv_q(q.get_mpz_t(), big_->get_num_mpz_t(), big_->get_den_mpz_t());
    return Rat(q);
  }
  std::int64_t q = num_ / den_;
  if (num_ % den_ != 0 && num_ < 0) --q;
  return Rat(static_cast<long long>(q));
}

Rat Rat::ceil() const { return -((-*this).floor()); }

Rat Rat::operator-() const {
  Rat r;
  if (big_) {
    r.assign(mpq_class(-*big_));
  } else {
    r.num_ = -num_;
    r.den_ = den_;
  }
  return r;
}

Rat& Rat::operator+=(const Rat& o) {
  if (!big_ && !o.big_) {
    if (den_ == 1 && o.den_ == 1) {
      i128 s = static_cast<i128>(num_) + o.num_;
      if (fits(s)) {
        num_ = static_cast<std::int64_t>(s);
        return *this;
      }
      normalize_small(s, 1);
      return *this;
    }
    if (den_ == o.den_) {
      normalize_small(static_cast<i128>(num_) + o.num_, den_);
      return *this;
    }
    normalize_small(static_cast<i128>(num_) * o.den_ + static_cast<i128>(o.num_) * den_,
                    static_cast<i128>(den_) * o.den_);
    return *this;
  }
  assign(mpq_class(to_mpq() + o.to_mpq()));
  return *this;
}

Rat& Rat::operator-=(const Rat& o) { return *this += -o; }

Rat& Rat::operator*=(const Rat& o) {
  if (!big_ && !o.big_) {
    if (num_ == 0 || o.num_ == 0) {
      num_ = 0;
      den_ = 1;
      return *this;
    }
    std::int64_t g1 = gcd64(num_, o.den_);
    std::int64_t g2 = gcd64(o.num_, den_);
    i128 n = static_cast<i128>(num_ / g1) * (o.num_ / g2);
    i128 d = static_cast<i128>(den_ / g2) * (o.den_ / g1);
    if (fits(n) && fits(d)) {
      num_ = static_cast<std::int64_t>(n);
      den_ = static_cast<std::int64_t>(d);
      return *this;
    }
    normalize_small(n, d);
    return *this;
  }
  assign(mpq_class(to_mpq() * o.to_mpq()));
  return *this;
}

Rat& Rat::operator/=(const Rat& o) {
  if (o.is_zero()) throw std::domain_error("Rat: division by zero");
  if (!o.big_) {
    Rat inv;
    inv.num_ = o.num_ < 0 ? -o.den_ : o.den_;
    inv.den_ = o.num_ < 0 ? -o.num_ : o.num_;
    return *this *= inv;
  }
  assign(mpq_class(to_mpq() / o.to_mpq()));
  return *this;
}

void Rat::add_product(const Rat& a, const Rat& b) {
  if (a.is_zero() || b.is_zero()) return;
  if (!big_ && !a.big_ && !b.big_ && den_ == 1 && a.den_ == 1 && b.den_ == 1) {
    i128 s = static_cast<i128>(a.num_) * b.num_ + num_;
    if (fits(s)) {
      num_ = static_cast<std::int64_t>(s);
      return;
    }
  }
  *this += a * b;
}

bool operator==(const Rat& a, const Rat& b) {
  if (!a.big_ && !b.big_) return a.num_ == b.num_ && a.den_ == b.den_;
  if (a.big_ && b.big_) return *a.big_ == *b.big_;
  return false;  // canonical forms differ in storage class only when values differ
}

std::strong_ordering operator<=>(const Rat& a, const Rat& b) {
  if (!a.big_ && !b.big_) {
    i128 l = static_cast<i128>(a.num_) * b.den_;
    i128 r = static_cast<i128>(b.num_) * a.den_;
    return l <=> r;
  }
  int c = cmp(a.to_mpq(), b.to_mpq());
  return c < 0 ? std::strong_ordering::less
               : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
}

std::size_t Rat::hash() const {
  if (big_) return std::hash<std::string>{}(str());
  std::size_t h = std::hash<std::int64_t>{}(num_);
  return h ^ (std::hash<std::int64_t>{}(den_) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2));
}

std::ostream& operator<<(std::ostream& os, const Rat& r) { return os << r.str(); }

}  // namespace honeycomb
