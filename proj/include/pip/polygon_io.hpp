#pragma once

#include <iosfwd>
#include <string>

#include "pip/geometry.hpp"

namespace pip {

// Text format: optional '#' comments, a vertex count line, then one "x y"
// line per vertex. Writing uses 17 significant digits so read(write(p))
// reproduces every coordinate bit for bit.
void write_polygon(std::ostream& out, const Polygon& poly);
Polygon read_polygon(std::istream& in);  // throws std::runtime_error on malformed input

void save_polygon(const std::string& path, const Polygon& poly);
Polygon load_polygon(const std::string& path);

}  // namespace pip
