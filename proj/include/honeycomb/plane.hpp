#pragma once

// The plane {x + y + z = 0} with its six cardinal directions.

#include <array>
#include <string_view>
#include <utility>

#include "honeycomb/rational.hpp"

namespace honeycomb {

/// Point of the plane x + y + z = 0.
class PointB {
 public:
  PointB() = default;
  /// Throws std::invalid_argument unless x + y + z == 0.
  PointB(Rat x, Rat y, Rat z);
  /// The point whose third coordinate is -(x + y).
  static PointB from_xy(Rat x, Rat y);

  const Rat& x() const { return c_[0]; }
  const Rat& y() const { return c_[1]; }
  const Rat& z() const { return c_[2]; }
  const Rat& operator[](int slot) const { return c_[slot]; }

  friend PointB operator+(const PointB& a, const PointB& b);
  friend PointB operator-(const PointB& a, const PointB& b);
  friend PointB operator*(const Rat& s, const PointB& p);
  friend bool operator==(const PointB&, const PointB&) = default;
  friend auto operator<=>(const PointB&, const PointB&) = default;

 private:
  std::array<Rat, 3> c_{};
};

enum class Direction { NW, N, NE, SE, S, SW };
enum class EdgeClass { X = 0, Y = 1, Z = 2 };

inline constexpr std::array<Direction, 6> kAllDirections = {
    Direction::NW, Direction::N, Direction::NE, Direction::SE, Direction::S, Direction::SW};

/// Integer direction vector, e.g. NW = (0, 1, -1).
std::array<int, 3> direction_vector(Direction d);
PointB direction_point(Direction d);
Direction opposite(Direction d);
std::string_view to_string(Direction d);
Direction direction_from_string(std::string_view s);
std::string_view to_string(EdgeClass k);

/// The coordinate that stays constant while moving along `d`.
EdgeClass constant_slot(Direction d);

/// Direction of the two that run along class `k` which points towards +infinity
/// of the class's line parameter (NW for X, NE for Y, S for Z).
Direction forward_direction(EdgeClass k);

/// Slot used to parametrise a line of class `k`: y for X, z for Y, x for Z.
int line_parameter_slot(EdgeClass k);

/// Screen coordinates: N maps to (0, 1), NE to (sqrt(3)/2, 1/2).
std::pair<double, double> project_to_screen(const PointB& p);

}  // namespace honeycomb
