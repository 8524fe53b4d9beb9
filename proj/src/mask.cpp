#include "pip/mask.hpp"

#include <fstream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace pip {

namespace {

Mask make_mask(const GridSpec& spec) {
  Mask mask;
  mask.q = spec.lines;
  mask.labels.assign(spec.point_count(), Classification::Outside);
  return mask;
}

}  // namespace

Mask classify_grid_serial(const Polygon& poly, const GridSpec& spec, Method m,
                          const DualConfig& cfg) {
  Mask mask = make_mask(spec);
  const std::vector<Point2> pts = grid_points(spec);
  for (std::size_t i = 0; i < pts.size(); ++i) {
    mask.labels[i] = classify_point(poly, pts[i], m, cfg);
  }
  return mask;
}

Mask classify_grid(const Polygon& poly, const GridSpec& spec, Method m, const DualConfig& cfg,
                   int threads) {
#ifdef _OPENMP
  Mask mask = make_mask(spec);
  const std::vector<Point2> pts = grid_points(spec);
  const auto total = static_cast<long long>(pts.size());
  const int want = threads > 0 ? threads : omp_get_max_threads();
  // Each point is classified independently; labels match the serial pass bit
  // for bit because no state is shared.
#pragma omp parallel for schedule(static) num_threads(want)
  for (long long i = 0; i < total; ++i) {
    mask.labels[static_cast<std::size_t>(i)] =
        classify_point(poly, pts[static_cast<std::size_t>(i)], m, cfg);
  }
  return mask;
#else
  (void)threads;
  return classify_grid_serial(poly, spec, m, cfg);
#endif
}

void write_mask(std::ostream& out, const Mask& mask, MaskFormat format) {
  const std::size_t q = mask.q;
  if (mask.labels.size() != q * q) throw std::invalid_argument("mask size mismatch");
  if (format == MaskFormat::Csv) {
    for (std::size_t j = 0; j < q; ++j) {
      for (std::size_t i = 0; i < q; ++i) {
        if (i) out << ',';
        out << static_cast<int>(mask.labels[j * q + i]);
      }
      out << '\n';
    }
    return;
  }
  out << "P2\n" << q << ' ' << q << "\n255\n";
  for (std::size_t j = 0; j < q; ++j) {
    for (std::size_t i = 0; i < q; ++i) {
      const Classification c = mask.labels[j * q + i];
      const int gray = c == Classification::Outside ? 255 : (c == Classification::Inside ? 128 : 0);
      if (i) out << ' ';
      out << gray;
    }
    out << '\n';
  }
}

namespace {

Classification label_from_int(int v, bool pgm) {
  if (pgm) {
    if (v == 255) return Classification::Outside;
    if (v == 128) return Classification::Inside;
    if (v == 0) return Classification::OnBoundary;
    throw std::runtime_error("mask gray value is not 255, 128, or 0");
  }
  if (v == 0) return Classification::Outside;
  if (v == 1) return Classification::Inside;
  if (v == 2) return Classification::OnBoundary;
  throw std::runtime_error("mask label is not 0, 1, or 2");
}

Mask read_mask_pgm(std::istream& in) {
  std::string magic;
  in >> magic;
  std::size_t w = 0;
  std::size_t h = 0;
  int maxval = 0;
  if (!(in >> w >> h >> maxval) || w != h || w == 0 || maxval != 255)
    throw std::runtime_error("mask header is not a square 255 P2 image");
  Mask mask;
  mask.q = w;
  mask.labels.reserve(w * h);
  for (std::size_t k = 0; k < w * h; ++k) {
    int v = 0;
    if (!(in >> v)) throw std::runtime_error("mask pixel data ended early");
    mask.labels.push_back(label_from_int(v, true));
  }
  return mask;
}

}  // namespace

Mask read_mask(std::istream& in) {
  // A P2 magic means pgm; anything else is treated as csv rows.
  while (in.peek() == '\n' || in.peek() == '\r' || in.peek() == ' ') in.get();
  if (in.peek() == 'P') return read_mask_pgm(in);

  std::vector<std::vector<int>> rows;
  std::string line;
  while (std::getline(in, line)) {
    if (line.find_first_not_of(" \t\r,") == std::string::npos) continue;
    std::vector<int> row;
    std::istringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) row.push_back(std::stoi(cell));
    rows.push_back(std::move(row));
  }
  if (rows.empty()) throw std::runtime_error("mask input is empty");
  const std::size_t q = rows.size();
  Mask mask;
  mask.q = q;
  mask.labels.reserve(q * q);
  for (const auto& row : rows) {
    if (row.size() != q) throw std::runtime_error("mask rows are not square");
    for (int v : row) mask.labels.push_back(label_from_int(v, false));
  }
  return mask;
}

void save_mask(const std::string& path, const Mask& mask, MaskFormat format) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open for writing: " + path);
  write_mask(out, mask, format);
  if (!out) throw std::runtime_error("write failed: " + path);
}

Mask load_mask(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open for reading: " + path);
  return read_mask(in);
}

}  // namespace pip
