#include <cstdio>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "lorenz/containment.hpp"
#include "lorenz/curve.hpp"
#include "lorenz/directions.hpp"
#include "lorenz/discretization.hpp"
#include "lorenz/error.hpp"
#include "lorenz/hausdorff.hpp"
#include "lorenz/lorenz_ops.hpp"
#include "lorenz/measure_io.hpp"
#include "lorenz/verify.hpp"
#include "lorenz/zonoid.hpp"

using namespace lorenz;

namespace {

constexpr int kOk = 0;
constexpr int kNegative = 1;
constexpr int kUsage = 2;

struct Options {
  std::vector<std::string> inputs;
  std::string out;
  std::size_t dirs = 16;
  double tol = 1e-9;
  std::string mode;
  std::uint64_t seed = 0;
  double delta = 0.5;
  std::size_t reps = 0;
  std::size_t levels = 1;
  bool points = false;
  std::string svg;
  std::vector<double> target;
  std::string suite = "all";
  std::string scale = "full";
};

class Usage : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

void need_inputs(const Options& o, std::size_t count) {
  if (o.inputs.size() != count) {
    throw Usage("expected " + std::to_string(count) + " input file(s), got " + std::to_string(o.inputs.size()));
  }
}

VectorMeasure load_real(const std::string& path) { return parse_real_measure(read_text_file(path)); }

void emit(const Options& o, const std::string& text) {
  if (o.out.empty()) {
    std::cout << text;
  } else {
    write_text_file(o.out, text);
  }
}

std::string csv_row(std::span<const double> v) {
  std::string line;
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (k) line += ',';
    line += format_double(v[k]);
  }
  return line + "\n";
}

std::string header(const std::string& prefix, std::size_t n) {
  std::string line;
  for (std::size_t k = 0; k < n; ++k) line += (k ? "," : "") + prefix + std::to_string(k + 1);
  return line;
}

int cmd_hull(const Options& o) {
  need_inputs(o, 1);
  const auto m = load_real(o.inputs[0]);
  const Zonotope z = hull_of(m);
  const std::size_t n = z.dimension();
  std::string text;
  if (n == 2) {
    text = "x,y\n";
    for (const auto& v : zonogon_vertices(z)) text += format_double(v.x) + "," + format_double(v.y) + "\n";
  } else if (z.size() == 0) {
    text = header("x", n) + "\n" + csv_row(Vector(n, 0.0));
  } else {
    text = header("d", n) + ",reach\n";
    const Rows dirs = sphere_directions(n, o.dirs, o.seed);
    for (std::size_t i = 0; i < dirs.size(); ++i) {
      std::string row = csv_row(dirs[i]);
      row.pop_back();
      text += row + "," + format_double(reach(z, dirs[i])) + "\n";
    }
  }
  emit(o, text);
  return kOk;
}

int cmd_product(const Options& o) {
  need_inputs(o, 2);
  auto a = parse_measure(read_text_file(o.inputs[0]));
  auto b = parse_measure(read_text_file(o.inputs[1]));
  const auto* ca = std::get_if<ComplexVectorMeasure>(&a);
  const auto* cb = std::get_if<ComplexVectorMeasure>(&b);
  if (ca && cb) {
    emit(o, serialize(complex_coordinate_product(*ca, *cb)));
  } else if (!ca && !cb) {
    emit(o, serialize(coordinate_product(std::get<VectorMeasure>(a), std::get<VectorMeasure>(b))));
  } else {
    throw Usage("cannot multiply a complex measure with a real one");
  }
  return kOk;
}

int cmd_sum(const Options& o) {
  need_inputs(o, 2);
  emit(o, serialize(direct_sum(load_real(o.inputs[0]), load_real(o.inputs[1]))));
  return kOk;
}

CompareMode pick_mode(const Options& o, std::size_t n) {
  if (o.mode == "exact2d") return Exact2d{};
  if (o.mode == "sampled") return Sampled{o.dirs, o.seed};
  return n == 2 ? CompareMode{Exact2d{}} : CompareMode{Sampled{o.dirs, o.seed}};
}

int cmd_include(const Options& o) {
  need_inputs(o, 2);
  const Zonotope inner = hull_of(load_real(o.inputs[0]));
  const Zonotope outer = hull_of(load_real(o.inputs[1]));
  const auto r = includes(inner, outer, pick_mode(o, inner.dimension()), Tolerance{o.tol, o.tol});
  nlohmann::json doc;
  doc["verdict"] = r.verdict == Verdict::Included   ? "Included"
                   : r.verdict == Verdict::Excluded ? "Excluded"
                                                    : "NoViolationFound";
  doc["max_violation"] = r.max_violation;
  if (!r.witness.empty()) doc["witness"] = r.witness;
  emit(o, doc.dump(2) + "\n");
  return r.verdict == Verdict::Excluded ? kNegative : kOk;
}

int cmd_hausdorff(const Options& o) {
  need_inputs(o, 2);
  const auto a = load_real(o.inputs[0]);
  const auto b = load_real(o.inputs[1]);
  if (o.points) {
    emit(o, to_json(hausdorff_points(skeleton_points(a), skeleton_points(b))));
  } else {
    emit(o, to_json(hausdorff_convex(hull_of(a), hull_of(b))));
  }
  return kOk;
}

int cmd_gini(const Options& o) {
  need_inputs(o, 1);
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12f\n", gini(load_real(o.inputs[0])));
  emit(o, buf);
  return kOk;
}

int cmd_curve(const Options& o) {
  need_inputs(o, 1);
  const auto curve = lorenz_curve(load_real(o.inputs[0]));
  emit(o, curve_csv(curve));
  if (!o.svg.empty()) write_text_file(o.svg, curve_svg(curve));
  return kOk;
}

int cmd_discretize(const Options& o) {
  if (o.inputs.empty() || o.inputs.size() > 2) throw Usage("discretize takes one or two inputs");
  std::vector<VectorMeasure> ms;
  for (const auto& path : o.inputs) ms.push_back(load_real(path));
  const std::size_t n = ms[0].dimension();
  nlohmann::json levels = nlohmann::json::array();
  double delta = o.delta;
  for (std::size_t level = 0; level < std::max<std::size_t>(1, o.levels); ++level, delta /= 2) {
    const SpherePartition part = partition_sphere(n, delta);
    nlohmann::json row;
    row["delta"] = delta;
    row["K"] = part.cell_count();
    if (ms.size() == 1) {
      const std::size_t reps = o.reps ? o.reps : 1;
      const auto disc = discretize(ms[0], part, reps);
      const double mass = total_variation_mass(ms[0]);
      row["N"] = reps;
      row["bound"] = delta * mass;
      row["measured_distance"] =
          hausdorff_convex(compact_generators(hull_of(ms[0])), compact_generators(hull_of(disc))).distance;
      if (level == 0 && !o.out.empty()) write_text_file(o.out, serialize(disc));
    } else {
      const double m1 = total_variation_mass(ms[0]);
      const double m2 = total_variation_mass(ms[1]);
      DiscretizationParams p;
      p.delta = delta;
      p.epsilon = 8.0 * delta * m1 * m2;
      p.reps = o.reps ? o.reps : DiscretizationParams::min_reps(n, m1, m2, p.epsilon);
      const Zonotope exact =
          lorenz_product(compact_generators(hull_of(ms[0])), compact_generators(hull_of(ms[1])));
      const auto d1 = discretize(ms[0], part, p.reps);
      const auto d2 = discretize(ms[1], part, p.reps);
      const Zonotope approx = compact_generators(hull_of(coordinate_product(d1, d2)));
      row["N"] = p.reps;
      row["bound"] = product_error_bound(p, m1, m2, n);
      row["measured_distance"] = hausdorff_convex(exact, approx).distance;
    }
    levels.push_back(row);
  }
  std::cout << levels.dump(2) << "\n";
  return kOk;
}

int cmd_achieve(const Options& o) {
  need_inputs(o, 1);
  const auto m = load_real(o.inputs[0]);
  try {
    emit(o, to_json(achieve(m, o.target, o.tol)));
  } catch (const NotInHullError& e) {
    nlohmann::json doc;
    doc["error"] = "NotInHull";
    doc["witness"] = e.witness();
    doc["violation"] = e.violation();
    std::cerr << doc.dump(2) << "\n";
    return kNegative;
  }
  return kOk;
}

int cmd_skeleton(const Options& o) {
  need_inputs(o, 1);
  const auto skel = skeleton_points(load_real(o.inputs[0]));
  std::string text = header("x", skel.dimension()) + "\n";
  for (std::size_t i = 0; i < skel.size(); ++i) text += csv_row(skel.point(i));
  emit(o, text);
  return kOk;
}

int cmd_verify(const Options& o) {
  const auto scale = o.scale == "small" ? verify::Scale::Small : verify::Scale::Full;
  std::vector<const verify::Suite*> chosen;
  if (o.suite == "all") {
    for (const auto& s : verify::suites()) chosen.push_back(&s);
  } else if (const auto* s = verify::find_suite(o.suite)) {
    chosen.push_back(s);
  } else {
    throw Usage("unknown suite '" + o.suite + "'");
  }
  const std::size_t workers = verify::default_workers();
  std::string text;
  std::size_t failed = 0;
  for (const auto* s : chosen) {
    const auto report = verify::run_suite(*s, o.seed, scale, workers);
    text += verify::format_report(report);
    failed += report.passed() ? 0 : 1;
  }
  text += failed ? std::to_string(failed) + " suite(s) failed\n" : std::string("all suites passed\n");
  emit(o, text);
  return failed ? kNegative : kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Lorenz hulls of finite signed vector measures"};
  app.require_subcommand(1);
  Options o;

  auto add_io = [&](CLI::App* sub) {
    sub->add_option("-i,--input,inputs", o.inputs, "measure JSON file(s)");
    sub->add_option("-o,--out", o.out, "output file (default stdout)");
  };
  auto add_tol = [&](CLI::App* sub) { sub->add_option("--tol", o.tol, "tolerance")->capture_default_str(); };
  auto add_seed = [&](CLI::App* sub) { sub->add_option("--seed", o.seed, "random seed")->capture_default_str(); };

  auto* hull = app.add_subcommand("hull", "vertex CSV (n=2) or reach table");
  add_io(hull);
  add_seed(hull);
  hull->add_option("--dirs", o.dirs, "directions for the reach table")->capture_default_str();

  auto* product = app.add_subcommand("product", "coordinate-wise product measure");
  add_io(product);
  auto* sum = app.add_subcommand("sum", "direct sum measure");
  add_io(sum);

  auto* include = app.add_subcommand("include", "test hull(inner) within hull(outer)");
  add_io(include);
  add_tol(include);
  add_seed(include);
  include->add_option("--mode", o.mode, "exact2d or sampled")->check(CLI::IsMember({"exact2d", "sampled"}));
  include->add_option("--dirs", o.dirs, "sampled directions");

  auto* hausdorff = app.add_subcommand("hausdorff", "1-norm Hausdorff distance of hulls");
  add_io(hausdorff);
  hausdorff->add_flag("--points", o.points, "compare skeletons instead of hulls");

  auto* gini_cmd = app.add_subcommand("gini", "Gini coefficient");
  add_io(gini_cmd);

  auto* curve = app.add_subcommand("curve", "Lorenz curve CSV and SVG");
  add_io(curve);
  curve->add_option("--svg", o.svg, "SVG output file");

  auto* disc = app.add_subcommand("discretize", "discretization error report");
  add_io(disc);
  disc->add_option("--delta", o.delta, "cell diameter bound")->capture_default_str();
  disc->add_option("--reps", o.reps, "copies per cell (default from the error target)");
  disc->add_option("--levels", o.levels, "number of delta halvings")->capture_default_str();

  auto* ach = app.add_subcommand("achieve", "realize a hull point by intervals");
  add_io(ach);
  add_tol(ach);
  ach->add_option("--target", o.target, "comma-separated point")->delimiter(',')->required();

  auto* skel = app.add_subcommand("skeleton", "all subset sums");
  add_io(skel);

  auto* ver = app.add_subcommand("verify", "seeded property suites");
  ver->add_option("-o,--out", o.out, "report file (default stdout)");
  ver->add_option("--suite", o.suite, "suite name or all")->capture_default_str();
  ver->add_option("--seed", o.seed, "random seed")->capture_default_str();
  ver->add_option("--scale", o.scale, "small or full")->check(CLI::IsMember({"small", "full"}))->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*hull) return cmd_hull(o);
    if (*product) return cmd_product(o);
    if (*sum) return cmd_sum(o);
    if (*include) return cmd_include(o);
    if (*hausdorff) return cmd_hausdorff(o);
    if (*gini_cmd) return cmd_gini(o);
    if (*curve) return cmd_curve(o);
    if (*disc) return cmd_discretize(o);
    if (*ach) return cmd_achieve(o);
    if (*skel) return cmd_skeleton(o);
    if (*ver) return cmd_verify(o);
  } catch (const Usage& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kUsage;
  } catch (const Error& e) {
    std::cerr << e.what() << "\n";
    return e.kind() == ErrorKind::NotInHull ? kNegative : kUsage;
  }
  return kUsage;
}
