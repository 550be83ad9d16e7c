#include "lorenz/curve.hpp"

#include <algorithm>
#include <cstdio>
#include <numeric>
#include <sstream>

#include "lorenz/error.hpp"
#include "lorenz/measure_io.hpp"

namespace lorenz {

namespace {

struct Totals {
  double x = 0.0;
  double y = 0.0;
};

Totals check_shares(const VectorMeasure& m) {
  if (m.dimension() != 2) {
    throw Error(ErrorKind::DimensionMismatch, "Lorenz curves need dimension 2, got " +
                                                  std::to_string(m.dimension()));
  }
  Totals t;
  for (std::size_t i = 0; i < m.size(); ++i) {
    auto a = m.atom(i);
    if (a[0] < 0.0 || a[1] < 0.0) {
      throw Error(ErrorKind::NegativeAtom, "atom " + std::to_string(i) + " has a negative share");
    }
    t.x += a[0];
    t.y += a[1];
  }
  if (!(t.x > 0.0) || !(t.y > 0.0)) throw Error(ErrorKind::ZeroTotal, "a coordinate total is zero");
  return t;
}

}  // namespace

Zonotope normalized_hull(const VectorMeasure& m) {
  const Totals t = check_shares(m);
  Rows gens(2);
  for (std::size_t i = 0; i < m.size(); ++i) {
    auto a = m.atom(i);
    if (a[0] == 0.0 && a[1] == 0.0) continue;
    gens.push_back(std::vector<double>{a[0] / t.x, a[1] / t.y});
  }
  return Zonotope(std::move(gens));
}

LorenzCurve lorenz_curve(const VectorMeasure& m) {
  const Zonotope hull = normalized_hull(m);
  std::vector<std::size_t> order(hull.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  // a before b when slope(a) < slope(b), compared by cross-multiplication so
  // that zero first coordinates sort as +inf.
  std::stable_sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) {
    auto a = hull.generator(i);
    auto b = hull.generator(j);
    return a[1] * b[0] < b[1] * a[0];
  });
  LorenzCurve curve;
  curve.points.push_back({0.0, 0.0});
  Point2 at;
  for (std::size_t idx : order) {
    auto g = hull.generator(idx);
    at = {at.x + g[0], at.y + g[1]};
    curve.points.push_back(at);
  }
  curve.points.back() = {1.0, 1.0};
  return curve;
}

double gini(const VectorMeasure& m) { return area_2d(normalized_hull(m)); }

std::string curve_csv(const LorenzCurve& curve) {
  std::string out = "x,y\n";
  for (const Point2& p : curve.points) out += format_double(p.x) + "," + format_double(p.y) + "\n";
  return out;
}

std::string curve_svg(const LorenzCurve& curve) {
  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"400\" height=\"400\" viewBox=\"0 0 1 1\">\n"
     << "  <g transform=\"matrix(1 0 0 -1 0 1)\" fill=\"none\" stroke-width=\"0.005\">\n"
     << "    <rect x=\"0\" y=\"0\" width=\"1\" height=\"1\" stroke=\"#000000\"/>\n"
     << "    <line x1=\"0\" y1=\"0\" x2=\"1\" y2=\"1\" stroke=\"#888888\"/>\n"
     << "    <polyline stroke=\"#c0392b\" points=\"";
  for (std::size_t i = 0; i < curve.points.size(); ++i) {
    if (i) os << ' ';
    os << format_double(curve.points[i].x) << ',' << format_double(curve.points[i].y);
  }
  os << "\"/>\n  </g>\n</svg>\n";
  return os.str();
}

}  // namespace lorenz
