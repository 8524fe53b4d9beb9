#include "pip/polygon_io.hpp"

#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>

namespace pip {

void write_polygon(std::ostream& out, const Polygon& poly) {
  out << poly.size() << '\n';
  out << std::setprecision(17);
  for (const Point2& v : poly.vertices()) out << v.x << ' ' << v.y << '\n';
}

namespace {

// Strips '#' comments and returns the next line that still has content.
bool next_content_line(std::istream& in, std::string& line) {
  while (std::getline(in, line)) {
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    if (line.find_first_not_of(" \t\r\n") != std::string::npos) return true;
  }
  return false;
}

}  // namespace

Polygon read_polygon(std::istream& in) {
  std::string line;
  if (!next_content_line(in, line)) throw std::runtime_error("polygon input is empty");
  std::istringstream head(line);
  long long count = 0;
  if (!(head >> count) || count < 3)
    throw std::runtime_error("polygon input needs a vertex count >= 3");

  std::vector<Point2> verts;
  verts.reserve(static_cast<std::size_t>(count));
  for (long long i = 0; i < count; ++i) {
    if (!next_content_line(in, line))
      throw std::runtime_error("polygon input ended before all vertices were read");
    std::istringstream row(line);
    double x = 0.0;
    double y = 0.0;
    if (!(row >> x >> y)) throw std::runtime_error("polygon vertex line is malformed");
    verts.emplace_back(x, y);
  }
  return Polygon(std::move(verts));
}

void save_polygon(const std::string& path, const Polygon& poly) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open for writing: " + path);
  write_polygon(out, poly);
  if (!out) throw std::runtime_error("write failed: " + path);
}

Polygon load_polygon(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open for reading: " + path);
  return read_polygon(in);
}

}  // namespace pip
