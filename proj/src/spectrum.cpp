#include "honeycomb/spectrum.hpp"

#include <algorithm>

#include "honeycomb/error.hpp"

namespace honeycomb {

Spectrum::Spectrum(std::vector<Rat> values) : values_(std::move(values)) {
  for (std::size_t i = 1; i < values_.size(); ++i)
    if (values_[i - 1] < values_[i]) throw Error(ErrorCode::NOT_DECREASING, "spectrum must be weakly decreasing: " + str());
}

Spectrum Spectrum::parse(std::string_view text) {
  std::vector<Rat> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t comma = text.find(',', start);
    if (comma == std::string_view::npos) comma = text.size();
    std::string_view piece = text.substr(start, comma - start);
    try {
      out.push_back(Rat::parse(piece));
    } catch (const std::exception& e) {
      throw Error(ErrorCode::PARSE_ERROR, e.what());
    }
    start = comma + 1;
  }
  return Spectrum(std::move(out));
}

Rat Spectrum::sum() const {
  Rat s;
  for (const auto& v : values_) s += v;
  return s;
}

bool Spectrum::is_integral() const {
  return std::all_of(values_.begin(), values_.end(), [](const Rat& r) { return r.is_integer(); });
}

bool Spectrum::is_regular() const {
  for (std::size_t i = 1; i < values_.size(); ++i)
    if (values_[i - 1] == values_[i]) return false;
  return true;
}

Spectrum Spectrum::negated() const {
  std::vector<Rat> v(values_.rbegin(), values_.rend());
  for (auto& x : v) x = -x;
  return Spectrum(std::move(v));
}

Spectrum Spectrum::scaled(const Rat& s) const {
  if (s.sign() < 0) throw std::invalid_argument("scale must be nonnegative");
  std::vector<Rat> v = values_;
  for (auto& x : v) x *= s;
  return Spectrum(std::move(v));
}

Spectrum Spectrum::shifted(const Rat& c) const {
  std::vector<Rat> v = values_;
  for (auto& x : v) x += c;
  return Spectrum(std::move(v));
}

std::string Spectrum::str() const {
  std::string s;
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (i) s += ",";
    s += values_[i].str();
  }
  return s;
}

void require_same_size(const Spectrum& a, const Spectrum& b, const Spectrum& c) {
  if (a.size() == 0 || a.size() != b.size() || a.size() != c.size())
    throw Error(ErrorCode::DIMENSION_MISMATCH, "spectra must have equal positive length (got " +
                                                   std::to_string(a.size()) + ", " + std::to_string(b.size()) + ", " +
                                                   std::to_string(c.size()) + ")");
}

}  // namespace honeycomb
