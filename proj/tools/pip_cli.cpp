#include <cstdio>
#include <exception>
#include <fstream>
#include <iostream>
#include <memory>
#include <ostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "pip/bench.hpp"
#include "pip/baselines.hpp"
#include "pip/dual.hpp"
#include "pip/fixtures.hpp"
#include "pip/mask.hpp"
#include "pip/polygon_io.hpp"

namespace {

using namespace pip;

// Exit codes: 0 success, 1 usage error, 2 data or runtime error.

std::unique_ptr<std::ofstream> open_out(const std::string& path, std::ostream*& out) {
  if (path.empty() || path == "-") {
    out = &std::cout;
    return nullptr;
  }
  auto file = std::make_unique<std::ofstream>(path);
  if (!*file) throw std::runtime_error("cannot open for writing: " + path);
  out = file.get();
  return file;
}

Method parse_method(const std::string& name) {
  const auto m = method_from_name(name);
  if (!m) throw CLI::ValidationError("--method", "unknown method: " + name);
  return *m;
}

Polygon make_fixture(const std::string& name, std::size_t arc_points, std::uint32_t seed,
                     std::size_t n) {
  if (name == "square") return square_fixture();
  if (name == "lshape") return lshape_fixture();
  if (name == "slender") return slender_fixture();
  if (name == "gear") {
    GearParams params;
    params.arc_points = arc_points;
    return gear_fixture(params);
  }
  if (name == "random") return random_simple_polygon(seed, n);
  throw CLI::ValidationError("--fixture", "unknown fixture: " + name);
}

const char* label(Classification c) {
  switch (c) {
    case Classification::Inside: return "Inside";
    case Classification::Outside: return "Outside";
    case Classification::OnBoundary: return "OnBoundary";
  }
  return "Outside";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Point in polygon toolkit"};
  app.require_subcommand(1);

  // gen
  auto* gen = app.add_subcommand("gen", "write a fixture polygon");
  std::string gen_fixture = "square";
  std::size_t gen_arc_points = 2;
  std::uint32_t gen_seed = 1;
  std::size_t gen_n = 8;
  std::string gen_out;
  gen->add_option("--fixture", gen_fixture, "square, gear, lshape, slender, random");
  gen->add_option("--arc-points", gen_arc_points, "vertices per gear arc");
  gen->add_option("--seed", gen_seed, "random fixture seed");
  gen->add_option("--n", gen_n, "random fixture vertex count");
  gen->add_option("--out", gen_out, "output path, stdout when omitted");

  // classify
  auto* classify_cmd = app.add_subcommand("classify", "classify one point");
  std::string cl_poly;
  double cl_x = 0.0;
  double cl_y = 0.0;
  std::string cl_method = "dual";
  bool cl_slender = false;
  double cl_tol = 0.0;
  classify_cmd->add_option("--poly", cl_poly, "polygon file")->required();
  classify_cmd->add_option("--x", cl_x, "query x")->required();
  classify_cmd->add_option("--y", cl_y, "query y")->required();
  classify_cmd->add_option("--method", cl_method, "dual, ray, angles, areas, ha6, ha7, modified");
  classify_cmd->add_flag("--slender", cl_slender, "enable the slender visibility check");
  classify_cmd->add_option("--tol", cl_tol, "on-edge tolerance for the dual method");

  // grid
  auto* grid_cmd = app.add_subcommand("grid", "classify a whole grid into a mask");
  std::string gr_poly;
  double gr_xmin = -5.0;
  double gr_step = 0.1;
  std::size_t gr_lines = 101;
  std::string gr_method = "dual";
  bool gr_slender = false;
  double gr_tol = 0.0;
  std::string gr_format = "csv";
  std::string gr_out;
  int gr_threads = 0;
  grid_cmd->add_option("--poly", gr_poly, "polygon file")->required();
  grid_cmd->add_option("--xmin", gr_xmin, "grid origin for both axes");
  grid_cmd->add_option("--step", gr_step, "grid spacing");
  grid_cmd->add_option("--lines", gr_lines, "grid lines per axis");
  grid_cmd->add_option("--method", gr_method, "classification method");
  grid_cmd->add_flag("--slender", gr_slender, "enable the slender visibility check");
  grid_cmd->add_option("--tol", gr_tol, "on-edge tolerance for the dual method");
  grid_cmd->add_option("--format", gr_format, "csv or pgm");
  grid_cmd->add_option("--out", gr_out, "output path, stdout when omitted");
  grid_cmd->add_option("--threads", gr_threads, "worker threads, 0 = runtime default");

  // bench
  auto* bench_cmd = app.add_subcommand("bench", "time methods on growing gears");
  std::vector<std::string> be_methods = {"dual"};
  std::vector<std::size_t> be_sizes = {144, 1008, 10008};
  std::size_t be_z = 1;
  std::string be_out;
  bench_cmd->add_option("--methods", be_methods, "methods to time")->delimiter(',');
  bench_cmd->add_option("--sizes", be_sizes, "target vertex counts")->delimiter(',');
  bench_cmd->add_option("--z", be_z, "grid sweeps per trial");
  bench_cmd->add_option("--out", be_out, "output path, stdout when omitted");

  // validate
  auto* val_cmd = app.add_subcommand("validate", "check a polygon file");
  std::string va_poly;
  val_cmd->add_option("--poly", va_poly, "polygon file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  try {
    if (gen->parsed()) {
      const Polygon poly = make_fixture(gen_fixture, gen_arc_points, gen_seed, gen_n);
      std::ostream* out = nullptr;
      auto file = open_out(gen_out, out);
      write_polygon(*out, poly);
      return 0;
    }

    if (classify_cmd->parsed()) {
      const Polygon poly = load_polygon(cl_poly);
      DualConfig cfg;
      cfg.slender_check = cl_slender;
      cfg.on_edge_tolerance = cl_tol;
      const Classification c = classify_point(poly, Point2(cl_x, cl_y), parse_method(cl_method), cfg);
      std::cout << label(c) << '\n';
      return 0;
    }

    if (grid_cmd->parsed()) {
      const Polygon poly = load_polygon(gr_poly);
      DualConfig cfg;
      cfg.slender_check = gr_slender;
      cfg.on_edge_tolerance = gr_tol;
      if (gr_format != "csv" && gr_format != "pgm")
        throw CLI::ValidationError("--format", "expected csv or pgm");
      const GridSpec spec(gr_xmin, gr_step, gr_lines);
      const Mask mask = classify_grid(poly, spec, parse_method(gr_method), cfg, gr_threads);
      std::ostream* out = nullptr;
      auto file = open_out(gr_out, out);
      write_mask(*out, mask, gr_format == "csv" ? MaskFormat::Csv : MaskFormat::Pgm);
      return 0;
    }

    if (bench_cmd->parsed()) {
      std::vector<Method> methods;
      methods.reserve(be_methods.size());
      for (const std::string& name : be_methods) methods.push_back(parse_method(name));
      std::ostream* out = nullptr;
      auto file = open_out(be_out, out);
      bench_suite(methods, be_sizes, be_z, *out);
      return 0;
    }

    if (val_cmd->parsed()) {
      const Polygon poly = load_polygon(va_poly);
      const bool simple = validate_simple(poly);
      std::cout << "vertices " << poly.size() << '\n';
      std::cout << "signed_area " << poly.signed_area() << '\n';
      std::cout << "simple " << (simple ? "yes" : "no") << '\n';
      if (!simple) return 2;
      std::cout << "orientation " << (poly.orientation() == Orientation::Ccw ? "ccw" : "cw")
                << '\n';
      return 0;
    }
  } catch (const CLI::ValidationError& e) {
    std::cerr << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
