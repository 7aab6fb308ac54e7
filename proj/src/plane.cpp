#include "honeycomb/plane.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace honeycomb {

PointB::PointB(Rat x, Rat y, Rat z) : c_{std::move(x), std::move(y), std::move(z)} {
  if (!(c_[0] + c_[1] + c_[2]).is_zero())
    throw std::invalid_argument("PointB: coordinates must sum to zero");
}

PointB PointB::from_xy(Rat x, Rat y) {
  Rat z = -(x + y);
  return PointB(std::move(x), std::move(y), std::move(z));
}

PointB operator+(const PointB& a, const PointB& b) {
  return PointB(a.x() + b.x(), a.y() + b.y(), a.z() + b.z());
}

PointB operator-(const PointB& a, const PointB& b) {
  return PointB(a.x() - b.x(), a.y() - b.y(), a.z() - b.z());
}

PointB operator*(const Rat& s, const PointB& p) { return PointB(s * p.x(), s * p.y(), s * p.z()); }

std::array<int, 3> direction_vector(Direction d) {
  switch (d) {
    case Direction::NW: return {0, 1, -1};
    case Direction::N: return {-1, 1, 0};
    case Direction::NE: return {-1, 0, 1};
    case Direction::SE: return {0, -1, 1};
    case Direction::S: return {1, -1, 0};
    case Direction::SW: return {1, 0, -1};
  }
  throw std::logic_error("bad direction");
}

PointB direction_point(Direction d) {
  auto v = direction_vector(d);
  return PointB(v[0], v[1], v[2]);
}

Direction opposite(Direction d) {
  switch (d) {
    case Direction::NW: return Direction::SE;
    case Direction::N: return Direction::S;
    case Direction::NE: return Direction::SW;
    case Direction::SE: return Direction::NW;
    case Direction::S: return Direction::N;
    case Direction::SW: return Direction::NE;
  }
  throw std::logic_error("bad direction");
}

std::string_view to_string(Direction d) {
  switch (d) {
    case Direction::NW: return "NW";
    case Direction::N: return "N";
    case Direction::NE: return "NE";
    case Direction::SE: return "SE";
    case Direction::S: return "S";
    case Direction::SW: return "SW";
  }
  return "?";
}

Direction direction_from_string(std::string_view s) {
  for (Direction d : kAllDirections)
    if (to_string(d) == s) return d;
  throw std::invalid_argument("unknown direction: " + std::string(s));
}

std::string_view to_string(EdgeClass k) {
  switch (k) {
    case EdgeClass::X: return "X";
    case EdgeClass::Y: return "Y";
    case EdgeClass::Z: return "Z";
  }
  return "?";
}

EdgeClass constant_slot(Direction d) {
  auto v = direction_vector(d);
  if (v[0] == 0) return EdgeClass::X;
  if (v[1] == 0) return EdgeClass::Y;
  return EdgeClass::Z;
}

Direction forward_direction(EdgeClass k) {
  switch (k) {
    case EdgeClass::X: return Direction::NW;
    case EdgeClass::Y: return Direction::NE;
    case EdgeClass::Z: return Direction::S;
  }
  throw std::logic_error("bad edge class");
}

int line_parameter_slot(EdgeClass k) {
  switch (k) {
    case EdgeClass::X: return 1;
    case EdgeClass::Y: return 2;
    case EdgeClass::Z: return 0;
  }
  throw std::logic_error("bad edge class");
}

std::pair<double, double> project_to_screen(const PointB& p) {
  // Solve p = a*N + b*NE in the plane: N = (-1,1,0), NE = (-1,0,1) gives
  // b = z, a = y, and the image is a*(0,1) + b*(sqrt3/2, 1/2).
  const double a = p.y().to_double();
  const double b = p.z().to_double();
  const double s3 = std::sqrt(3.0) / 2.0;
  return {b * s3, a + 0.5 * b};
}

}  // namespace honeycomb
