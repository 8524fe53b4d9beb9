#pragma once

#include <ostream>
#include <string>

#include "pip/geometry.hpp"

namespace pip {

inline std::ostream& operator<<(std::ostream& os, Classification c) {
  switch (c) {
    case Classification::Outside: return os << "Outside";
    case Classification::Inside: return os << "Inside";
    case Classification::OnBoundary: return os << "OnBoundary";
  }
  return os;
}

inline std::ostream& operator<<(std::ostream& os, const Point2& p) {
  return os << '(' << p.x << ", " << p.y << ')';
}

}  // namespace pip
