#pragma once

#include "ftag/rational.hpp"

namespace ftag {

struct Point2 {
  Rational x;
  Rational y;

  friend bool operator==(const Point2&, const Point2&) = default;
  friend std::strong_ordering operator<=>(const Point2&, const Point2&) = default;
};

// Manhattan distance |px - qx| + |py - qy|, exact.
inline Rational l1_distance(const Point2& p, const Point2& q) {
  return abs(p.x - q.x) + abs(p.y - q.y);
}

}  // namespace ftag
