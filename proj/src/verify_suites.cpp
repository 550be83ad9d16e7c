#include <algorithm>
#include <cmath>
#include <complex>
#include <numeric>
#include <optional>
#include <sstream>

#include "lorenz/containment.hpp"
#include "lorenz/curve.hpp"
#include "lorenz/directions.hpp"
#include "lorenz/discretization.hpp"
#include "lorenz/hausdorff.hpp"
#include "lorenz/lorenz_ops.hpp"
#include "lorenz/measure.hpp"
#include "lorenz/measure_io.hpp"
#include "lorenz/random.hpp"
#include "lorenz/verify.hpp"
#include "lorenz/zonoid.hpp"
#include "lorenz/zonotope.hpp"

namespace lorenz::verify {

namespace {

std::string num(double x) { return format_double(x); }

// Collects checks of one case; the first failed check is reported.
class Case {
 public:
  explicit Case(std::uint64_t seed) : rng(seed) {}

  Rng rng;
  Digest digest;

  void check(bool ok, const std::string& expected, const std::string& got, const std::string& tol) {
    if (!ok && result_.ok) {
      result_.ok = false;
      result_.expected = expected;
      result_.got = got;
      result_.tolerance = tol;
    }
  }

  // |got - want| <= atol + rtol * max(|got|, |want|)
  void close(const std::string& what, double want, double got, double atol, double rtol) {
    const double slack = atol + rtol * std::max(std::abs(want), std::abs(got));
    check(std::abs(got - want) <= slack, what + " = " + num(want), num(got),
          "abs " + num(atol) + " rel " + num(rtol));
  }

  void at_most(const std::string& what, double got, double bound) {
    check(got <= bound, what + " <= " + num(bound), num(got), "none");
  }

  void note(const VectorMeasure& m) {
    digest.add(static_cast<std::uint64_t>(m.dimension()));
    digest.add(m.atoms().flat());
  }

  bool ok() const noexcept { return result_.ok; }

  CaseResult done() {
    result_.digest = digest.value();
    return result_;
  }

 private:
  CaseResult result_;
};

std::size_t pick(Rng& rng, std::size_t lo, std::size_t hi) {
  return static_cast<std::size_t>(rng.integer(static_cast<std::int64_t>(lo), static_cast<std::int64_t>(hi)));
}

Vector random_atom(Rng& rng, std::size_t n, bool integer) {
  Vector a(n);
  do {
    for (auto& x : a) x = integer ? static_cast<double>(rng.integer(-9, 9)) : rng.uniform(-1.0, 1.0);
  } while (is_zero(a));
  return a;
}

VectorMeasure random_measure(Rng& rng, std::size_t n, std::size_t m, bool integer = false) {
  Rows atoms(n);
  for (std::size_t i = 0; i < m; ++i) atoms.push_back(random_atom(rng, n, integer));
  return VectorMeasure::validate(std::move(atoms));
}

std::string sorted_rows_text(const Rows& rows) {
  std::ostringstream out;
  out << rows.size() << " rows";
  return out.str();
}

bool multiset_equal(const Rows& a, const Rows& b) { return a.sorted() == b.sorted(); }

// measure_core: masses, directions, product symmetry, serialization.
CaseResult measure_case(std::uint64_t seed, Scale) {
  Case c(seed);
  const std::size_t n = pick(c.rng, 1, 5);
  auto a = random_measure(c.rng, n, pick(c.rng, 0, 8));
  auto b = random_measure(c.rng, n, pick(c.rng, 0, 8));
  if (c.rng.coin()) {
    Labels l;
    for (std::size_t i = 0; i < a.size(); ++i) l.push_back("s" + std::to_string(i));
    a = VectorMeasure::validate(a.atoms(), l);
  }
  c.note(a);
  c.note(b);

  c.close("mass of direct sum", total_variation_mass(a) + total_variation_mass(b),
          total_variation_mass(direct_sum(a, b)), 0.0, 1e-12);
  const double bound = total_variation_mass(a) * total_variation_mass(b);
  c.at_most("mass of coordinate product", total_variation_mass(coordinate_product(a, b)), bound * (1 + 1e-9));
  for (std::size_t i = 0; i < a.size(); ++i) c.close("1-norm of rn direction", 1.0, norm1(rn_direction(a, i)), 1e-12, 0);

  const auto ab = coordinate_product(a, b).atoms();
  const auto ba = coordinate_product(b, a).atoms();
  c.check(multiset_equal(ab, ba), "swapped product multiset equal", "differs", "exact");

  const auto back = parse_measure(serialize(a));
  const auto* real = std::get_if<VectorMeasure>(&back);
  c.check(real && *real == a, "serialize round trip bit-exact", "differs", "exact");
  return c.done();
}

// Reach against brute-force subset sums.
CaseResult oracle_case(std::uint64_t seed, Scale) {
  Case c(seed);
  const std::size_t n = pick(c.rng, 2, 4);
  const bool integer = c.rng.coin();
  const auto m = random_measure(c.rng, n, pick(c.rng, 1, 12), integer);
  c.note(m);
  const Zonotope z = hull_of(m);
  const auto skel = skeleton_points(m);
  const Vector total = m.total();
  const Rows dirs = sphere_directions(n, 200, c.rng.next());
  for (std::size_t k = 0; k < dirs.size() && c.ok(); ++k) {
    auto d = dirs[k];
    double best = -INFINITY;
    for (std::size_t i = 0; i < skel.size(); ++i) best = std::max(best, dot(d, skel.point(i)));
    const double r = reach(z, d);
    c.close("max over skeleton", best, r, 1e-9, 1e-9);
    c.check(r >= 0.0, "reach >= 0", num(r), "none");
    c.check(r >= dot(d, total) - 1e-12 * (1 + std::abs(r)), "reach >= <d, total> = " + num(dot(d, total)), num(r),
            "1e-12");
  }
  if (integer) {
    Vector mirror(n);
    for (std::size_t i = 0; i < skel.size(); ++i) {
      for (std::size_t k = 0; k < n; ++k) mirror[k] = total[k] - skel.point(i)[k];
      if (!skel.contains(mirror)) {
        c.check(false, "total - s in skeleton", "missing", "exact");
        break;
      }
    }
  }
  return c.done();
}

double shoelace(const std::vector<Point2>& v) {
  double s = 0.0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    const auto& p = v[i];
    const auto& q = v[(i + 1) % v.size()];
    s += p.x * q.y - p.y * q.x;
  }
  return 0.5 * std::abs(s);
}

// Vertices, area, membership certificates, Hausdorff sanity.
CaseResult hull_case(std::uint64_t seed, Scale) {
  Case c(seed);
  {
    const auto m = random_measure(c.rng, 2, pick(c.rng, 0, 10));
    c.note(m);
    const Zonotope z = hull_of(m);
    const auto verts = zonogon_vertices(z);
    const Rows dirs = sphere_directions(2, 500, c.rng.next());
    for (std::size_t k = 0; k < dirs.size(); ++k) {
      double best = -INFINITY;
      for (const auto& v : verts) best = std::max(best, dirs[k][0] * v.x + dirs[k][1] * v.y);
      c.close("reach over vertices", reach(z, dirs[k]), best, 1e-9, 1e-9);
    }
    c.close("shoelace area", shoelace(verts), area_2d(z), 1e-12, 1e-9);
  }

  const std::size_t n = pick(c.rng, 2, 4);
  const auto m = random_measure(c.rng, n, pick(c.rng, 1, 8));
  c.note(m);
  const Zonotope z = hull_of(m);
  const double tol = 1e-9;

  Vector p(n, 0.0);
  for (std::size_t i = 0; i < z.size(); ++i) {
    const double lam = c.rng.uniform();
    for (std::size_t k = 0; k < n; ++k) p[k] += lam * z.generator(i)[k];
  }
  auto inside = contains_point(z, p, tol);
  if (const auto* in = std::get_if<Inside>(&inside)) {
    Vector q(n, 0.0);
    bool boxed = true;
    for (std::size_t i = 0; i < z.size(); ++i) {
      boxed = boxed && in->lambda[i] >= 0.0 && in->lambda[i] <= 1.0;
      for (std::size_t k = 0; k < n; ++k) q[k] += in->lambda[i] * z.generator(i)[k];
    }
    c.check(boxed, "lambda in [0,1]^m", "outside box", "exact");
    c.at_most("reconstruction error", distance1(p, q), tol);
  } else {
    c.check(false, "Inside", "Outside", num(tol));
  }

  const Vector d = c.rng.sphere(n);
  Vector far = support_point(z, d);
  for (std::size_t k = 0; k < n; ++k) far[k] += 0.1 * d[k];
  auto outside = contains_point(z, far, tol);
  if (const auto* out = std::get_if<Outside>(&outside)) {
    const double v = dot(out->witness, far) - reach(z, out->witness);
    c.check(v > tol, "witness violation > tol", num(v), num(tol));
  } else {
    c.check(false, "Outside", "Inside", num(tol));
  }

  c.check(hausdorff_convex(z, z).distance == 0.0, "d(z, z) = 0", num(hausdorff_convex(z, z).distance), "exact");

  const std::size_t nt = pick(c.rng, 2, 3);
  const Zonotope z1 = hull_of(random_measure(c.rng, nt, pick(c.rng, 1, 5)));
  const Zonotope z2 = hull_of(random_measure(c.rng, nt, pick(c.rng, 1, 5)));
  const Zonotope z3 = hull_of(random_measure(c.rng, nt, pick(c.rng, 1, 5)));
  const double d13 = hausdorff_convex(z1, z3).distance;
  const double d12 = hausdorff_convex(z1, z2).distance;
  const double d23 = hausdorff_convex(z2, z3).distance;
  c.at_most("triangle d13", d13, d12 + d23 + 1e-9);
  return c.done();
}

// Segment distance against dense sampling of both segments.
CaseResult segment_case(std::uint64_t seed, Scale) {
  Case c(seed);
  const std::size_t n = pick(c.rng, 2, 3);
  const Vector a = random_atom(c.rng, n, false);
  const Vector b = random_atom(c.rng, n, false);
  const std::size_t samples = 10000;
  Rows pa(n), pb(n);
  Vector buf(n);
  for (std::size_t s = 0; s < samples; ++s) {
    const double t = static_cast<double>(s) / static_cast<double>(samples - 1);
    for (std::size_t k = 0; k < n; ++k) buf[k] = t * a[k];
    pa.push_back(buf);
    for (std::size_t k = 0; k < n; ++k) buf[k] = t * b[k];
    pb.push_back(buf);
  }
  const double sampled = hausdorff_points(SkeletonPointSet(pa), SkeletonPointSet(pb)).distance;
  const double exact = hausdorff_convex(Zonotope(Rows(n, a)), Zonotope(Rows(n, b))).distance;
  const double pitch = std::max(norm1(a), norm1(b)) / static_cast<double>(samples - 1);
  c.close("segment distance vs sampled", sampled, exact, 2 * pitch, 0.0);
  c.digest.add(a).add(b);
  return c.done();
}

// Random hull-preserving edit sequence of 1..5 steps for a measure of size m.
HullTransformSpec random_transform(Rng& rng, std::size_t m) {
  HullTransformSpec t;
  const std::size_t steps = pick(rng, 1, 5);
  constexpr std::size_t kNone = static_cast<std::size_t>(-1);
  std::size_t split_at = kNone;
  while (t.size() < steps) {
    const auto kind = pick(rng, 0, 3);
    if (kind == 3 && split_at != kNone) {
      const std::size_t i = split_at;
      if (rng.coin()) {
        t.push_back(MergeColinear{i, i + 1});
      } else {
        t.push_back(MergeColinear{i + 1, i});
      }
      --m;
      split_at = kNone;
      continue;
    }
    split_at = kNone;
    if (kind == 0 && m > 0) {
      const std::size_t i = pick(rng, 0, m - 1);
      t.push_back(SplitAtom{i, rng.uniform(0.05, 0.95)});
      split_at = i;
      ++m;
    } else if (kind == 1) {
      t.push_back(InsertZeroAtom{pick(rng, 0, m)});
      ++m;
    } else {
      std::vector<std::size_t> order(m);
      std::iota(order.begin(), order.end(), std::size_t{0});
      for (std::size_t i = m; i > 1; --i) std::swap(order[i - 1], order[pick(rng, 0, i - 1)]);
      t.push_back(Permute{order});
    }
  }
  return t;
}

CompareMode mode_for(std::size_t n, Rng& rng) {
  if (n == 2) return Exact2d{};
  return Sampled{1000, rng.next()};
}

// Product hull depends only on the factor hulls.
CaseResult theorem1_case(std::uint64_t seed, Scale) {
  Case c(seed);
  const std::size_t n = c.rng.uniform() < 0.4 ? 2 : pick(c.rng, 3, 5);
  const auto m1 = random_measure(c.rng, n, pick(c.rng, 1, 6));
  const auto m2 = random_measure(c.rng, n, pick(c.rng, 1, 6));
  const auto t1 = apply_transform(m1, random_transform(c.rng, m1.size()));
  const auto t2 = apply_transform(m2, random_transform(c.rng, m2.size()));
  c.note(m1);
  c.note(m2);
  c.note(t1);
  c.note(t2);
  const Zonotope p = lorenz_product(hull_of(m1), hull_of(m2));
  const Zonotope q = lorenz_product(hull_of(t1), hull_of(t2));
  const auto cmp = compare_hulls(p, q, mode_for(n, c.rng));
  c.check(cmp.equal, "product hulls equal", "support gap " + num(cmp.max_gap), "abs 1e-9 rel 1e-9");
  return c.done();
}

// Exact generator-multiset laws on integer generators.
CaseResult laws_case(std::uint64_t seed, Scale) {
  Case c(seed);
  const std::size_t n = pick(c.rng, 1, 4);
  const auto m1 = random_measure(c.rng, n, pick(c.rng, 1, 6), true);
  const auto m2 = random_measure(c.rng, n, pick(c.rng, 1, 6), true);
  const auto m3 = random_measure(c.rng, n, pick(c.rng, 1, 6), true);
  c.note(m1);
  c.note(m2);
  c.note(m3);
  const Zonotope h1 = hull_of(m1), h2 = hull_of(m2), h3 = hull_of(m3);

  const auto p12 = lorenz_product(h1, h2).generators();
  c.check(multiset_equal(p12, lorenz_product(h2, h1).generators()), "h1*h2 = h2*h1", "differs", "exact");

  const auto left = lorenz_product(lorenz_product(h1, h2), h3).generators();
  const auto right = lorenz_product(h1, lorenz_product(h2, h3)).generators();
  c.check(multiset_equal(left, right), "(h1*h2)*h3 = h1*(h2*h3)",
          sorted_rows_text(left) + " vs " + sorted_rows_text(right), "exact");

  const auto dist = lorenz_product(h1, minkowski_sum(h2, h3)).generators();
  const auto split = minkowski_sum(lorenz_product(h1, h2), lorenz_product(h1, h3)).generators();
  c.check(multiset_equal(dist, split), "h1*(h2+h3) = h1*h2 + h1*h3", "differs", "exact");

  const Zonotope e = identity_hull(n);
  c.check(lorenz_product(e, h1).generators() == h1.generators(), "e*h1 = h1", "differs", "exact");
  c.check(lorenz_product(h1, e).generators() == h1.generators(), "h1*e = h1", "differs", "exact");
  return c.done();
}

// Identity law on real generators and non-invertibility.
CaseResult identity_case(std::uint64_t seed, Scale) {
  Case c(seed);
  const std::size_t n = pick(c.rng, 2, 4);
  const auto m = random_measure(c.rng, n, pick(c.rng, 1, 8));
  const auto two = random_measure(c.rng, n, 2);
  const auto other = random_measure(c.rng, n, pick(c.rng, 1, 6));
  c.note(m);
  c.note(two);
  c.note(other);
  const Zonotope h = hull_of(m);
  const Zonotope e = identity_hull(n);
  c.check(lorenz_product(e, h).generators() == h.generators(), "e*h has h's generators", "differs", "exact");
  const Zonotope prod = lorenz_product(hull_of(two), hull_of(other));
  c.check(!hull_equal(prod, e, mode_for(n, c.rng)), "two-generator product differs from e", "equal", "1e-9");
  return c.done();
}

VectorMeasure shrink(Rng& rng, const VectorMeasure& m) {
  Rows atoms(m.dimension());
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (rng.uniform() < 0.25) continue;
    const double lam = rng.uniform();
    Vector a(m.atom(i).begin(), m.atom(i).end());
    for (auto& x : a) x *= lam;
    atoms.push_back(a);
  }
  return VectorMeasure::validate(std::move(atoms));
}

// Products of included hulls stay included.
CaseResult inclusion_case(std::uint64_t seed, Scale) {
  Case c(seed);
  const std::size_t n = c.rng.uniform() < 0.4 ? 2 : pick(c.rng, 3, 5);
  const auto o1 = random_measure(c.rng, n, pick(c.rng, 1, 6));
  const auto o2 = random_measure(c.rng, n, pick(c.rng, 1, 6));
  const auto i1 = shrink(c.rng, o1);
  const auto i2 = shrink(c.rng, o2);
  c.note(o1);
  c.note(o2);
  c.note(i1);
  c.note(i2);
  const Zonotope outer = lorenz_product(hull_of(o1), hull_of(o2));
  const Zonotope inner = lorenz_product(hull_of(i1), hull_of(i2));
  const auto sampled = includes(inner, outer, Sampled{1000, c.rng.next()});
  c.check(sampled.verdict != Verdict::Excluded, "not Excluded (sampled)",
          "Excluded by " + num(sampled.max_violation), "abs 1e-9 rel 1e-9");
  if (n == 2) {
    const auto exact = includes(inner, outer, Exact2d{});
    c.check(exact.verdict == Verdict::Included, "Included (exact2d)", "violation " + num(exact.max_violation),
            "abs 1e-9 rel 1e-9");
  }
  return c.done();
}

double segment_distance(Point2 p, Point2 a, Point2 b) {
  const double dx = b.x - a.x, dy = b.y - a.y;
  const double len2 = dx * dx + dy * dy;
  double t = len2 > 0 ? ((p.x - a.x) * dx + (p.y - a.y) * dy) / len2 : 0.0;
  t = std::clamp(t, 0.0, 1.0);
  return std::hypot(p.x - a.x - t * dx, p.y - a.y - t * dy);
}

// Hull-area Gini against the pairwise mean difference; curve shape.
CaseResult gini_case(std::uint64_t seed, Scale) {
  Case c(seed);
  const std::size_t size = pick(c.rng, 2, 50);
  std::vector<long long> income(size);
  for (auto& x : income) x = c.rng.integer(0, 100);
  if (std::all_of(income.begin(), income.end(), [](long long x) { return x == 0; })) income[0] = 1;
  Rows atoms(2);
  for (auto x : income) atoms.push_back(std::vector<double>{1.0, static_cast<double>(x)});
  const auto m = VectorMeasure::validate(std::move(atoms));
  c.note(m);

  long long pair_sum = 0, total = 0;
  for (auto x : income) {
    total += x;
    for (auto y : income) pair_sum += std::llabs(x - y);
  }
  const double classical = static_cast<double>(pair_sum) / (2.0 * static_cast<double>(size) * total);
  c.close("classical gini", classical, gini(m), 1e-9, 0.0);

  const auto curve = lorenz_curve(m);
  const auto& pts = curve.points;
  for (std::size_t i = 2; i < pts.size(); ++i) {
    const double s0 = (pts[i - 1].y - pts[i - 2].y) / (pts[i - 1].x - pts[i - 2].x);
    const double s1 = (pts[i].y - pts[i - 1].y) / (pts[i].x - pts[i - 1].x);
    c.check(s1 >= s0 - 1e-12, "nondecreasing slope", num(s0) + " then " + num(s1), "1e-12");
  }
  auto verts = zonogon_vertices(normalized_hull(m));
  std::vector<Point2> chain;
  for (const auto& v : verts) {
    chain.push_back(v);
    if (std::abs(v.x - 1) <= 1e-12 && std::abs(v.y - 1) <= 1e-12) break;
  }
  for (const auto& p : pts) {
    double best = INFINITY;
    for (std::size_t i = 0; i + 1 < chain.size(); ++i) best = std::min(best, segment_distance(p, chain[i], chain[i + 1]));
    if (chain.size() == 1) best = std::hypot(p.x - chain[0].x, p.y - chain[0].y);
    c.at_most("curve point off lower chain", best, 1e-9);
  }
  for (const auto& v : chain) {
    double best = INFINITY;
    for (const auto& p : pts) best = std::min(best, std::hypot(p.x - v.x, p.y - v.y));
    c.at_most("chain vertex missing from curve", best, 1e-9);
  }
  return c.done();
}

// Stand-in for a non-atomic measure in the plane: a smooth density over an
// arc of directions, cut into 500 pieces of 20 equal slices (10^4 atoms),
// scaled to the given total variation mass.
VectorMeasure fine_measure(Rng& rng, double mass) {
  constexpr std::size_t kPieces = 500;
  constexpr std::size_t kSlices = 20;
  const double start = rng.uniform(0.0, 2.0 * M_PI);
  const double width = rng.uniform(0.1, 0.3);
  const double phase = rng.uniform(0.0, 2.0 * M_PI);
  const double wiggle = rng.uniform(0.0, 0.5);
  std::vector<double> lengths(kPieces);
  Rows dirs(2);
  double tv = 0.0;
  for (std::size_t k = 0; k < kPieces; ++k) {
    const double t = (static_cast<double>(k) + 0.5) / kPieces;
    const double angle = start + width * t;
    lengths[k] = 1.0 + wiggle * std::sin(phase + 2.0 * M_PI * t);
    const Vector d{std::cos(angle), std::sin(angle)};
    dirs.push_back(d);
    tv += lengths[k] * norm1(d);
  }
  for (auto& l : lengths) l *= mass / tv;
  return slice_uniform(PiecewiseDensityMeasure::validate(std::move(lengths), std::move(dirs)), kSlices);
}

// Sphere partition geometry, mass preservation, single-measure convergence.
CaseResult discretization_case(std::uint64_t seed, Scale) {
  Case c(seed);
  const std::size_t n = pick(c.rng, 1, 4);
  const double delta = c.rng.uniform(0.1, 1.5);
  c.digest.add(static_cast<std::uint64_t>(n)).add(delta);
  const SpherePartition part(n, delta);
  const int r = part.resolution();
  for (int s = 0; s < 500; ++s) {
    Vector x = c.rng.sphere(n);
    if (s % 10 == 0) x[pick(c.rng, 0, n - 1)] = 0.0;
    if (is_zero(x)) x[0] = 1.0;
    const double l1 = norm1(x);
    for (auto& v : x) v /= l1;
    const CellKey key = part.cell_of(x);
    int used = 0;
    bool in_range = key.grid.size() == n - 1;
    for (int g : key.grid) {
      used += g;
      in_range = in_range && g >= 0 && g < r;
    }
    c.check(in_range && used <= r, "valid cell key", "grid out of range", "exact");
    const Vector rep = part.representative(key);
    c.check(distance1(x, rep) < delta, "distance to representative < " + num(delta), num(distance1(x, rep)),
            "strict");
    if (used < r) c.check(part.cell_of(rep) == key, "representative inside its cell", "other cell", "exact");
  }

  const auto m = random_measure(c.rng, n, pick(c.rng, 0, 50));
  c.note(m);
  const auto disc = discretize(m, part, pick(c.rng, 1, 5));
  c.close("discretized mass", total_variation_mass(m), total_variation_mass(disc), 0.0, 1e-9);

  const double mass = c.rng.uniform(0.5, 4.0);
  const auto fine = fine_measure(c.rng, mass);
  c.note(fine);
  const Zonotope h = compact_generators(hull_of(fine));
  double previous = INFINITY;
  for (double level : {0.4, 0.2, 0.1, 0.05}) {
    const auto coarse = discretize(fine, SpherePartition(2, level), 1);
    const double measured = hausdorff_convex(h, hull_of(coarse)).distance;
    c.at_most("single-measure distance at delta " + num(level), measured, level * total_variation_mass(fine));
    c.at_most("distance decreasing at delta " + num(level), measured, previous);
    previous = measured;
  }
  return c.done();
}

// Product hull error of discretized fine measures.
CaseResult product_bound_case(std::uint64_t seed, Scale) {
  Case c(seed);
  const auto alpha = fine_measure(c.rng, c.rng.uniform(0.5, 2.0));
  const auto beta = fine_measure(c.rng, c.rng.uniform(0.5, 2.0));
  c.note(alpha);
  c.note(beta);
  const double ma = total_variation_mass(alpha);
  const double mb = total_variation_mass(beta);
  const Zonotope exact =
      lorenz_product(compact_generators(hull_of(alpha)), compact_generators(hull_of(beta)));
  double previous = INFINITY;
  for (double delta : {0.2, 0.1, 0.05}) {
    DiscretizationParams p;
    p.delta = delta;
    p.epsilon = 8.0 * delta * ma * mb;
    p.reps = DiscretizationParams::min_reps(2, ma, mb, p.epsilon);
    const SpherePartition part(2, delta);
    const auto da = discretize(alpha, part, p.reps);
    const auto db = discretize(beta, part, p.reps);
    const Zonotope approx = compact_generators(hull_of(coordinate_product(da, db)));
    const double measured = hausdorff_convex(exact, approx).distance;
    c.at_most("product distance at delta " + num(delta), measured, product_error_bound(p, ma, mb, 2));
    c.at_most("product distance decreasing at delta " + num(delta), measured, previous);
    previous = measured;
  }
  return c.done();
}

VectorMeasure jitter(Rng& rng, const VectorMeasure& m) {
  const double scale = std::pow(10.0, rng.uniform(-3.0, -1.0));
  Rows atoms(m.dimension());
  for (std::size_t i = 0; i < m.size(); ++i) {
    Vector a(m.atom(i).begin(), m.atom(i).end());
    for (auto& x : a) x += scale * rng.uniform(-1.0, 1.0);
    atoms.push_back(a);
  }
  return VectorMeasure::validate(std::move(atoms));
}

// Skeleton products of skeleton-close measures stay close.
CaseResult skeleton_bound_case(std::uint64_t seed, Scale) {
  Case c(seed);
  const std::size_t n = pick(c.rng, 1, 3);
  const auto a = random_measure(c.rng, n, pick(c.rng, 2, 4));
  const auto b = random_measure(c.rng, n, pick(c.rng, 2, 4));
  const auto a2 = jitter(c.rng, a);
  const auto b2 = jitter(c.rng, b);
  c.note(a);
  c.note(b);
  c.note(a2);
  c.note(b2);
  const double delta = std::max(hausdorff_points(skeleton_points(a), skeleton_points(a2)).distance,
                                hausdorff_points(skeleton_points(b), skeleton_points(b2)).distance);
  const double cube = std::max({cube_constant(a), cube_constant(b), cube_constant(a2), cube_constant(b2)});
  const double measured = hausdorff_points(skeleton_product(a, b), skeleton_product(a2, b2)).distance;
  c.at_most("skeleton product distance", measured, skeleton_bound(n, cube, delta));
  return c.done();
}

// Density form keeps the support function; achieve realizes hull points.
CaseResult zonoid_case(std::uint64_t seed, Scale) {
  Case c(seed);
  const std::size_t n = pick(c.rng, 1, 4);
  Rows atoms(n);
  const std::size_t m = pick(c.rng, 1, 10);
  for (std::size_t i = 0; i < m; ++i) {
    if (c.rng.uniform() < 0.1) {
      atoms.push_back(Vector(n, 0.0));
    } else {
      atoms.push_back(random_atom(c.rng, n, false));
    }
  }
  const auto meas = VectorMeasure::validate(std::move(atoms));
  c.note(meas);
  const auto density = to_density(meas);
  const Zonotope z = hull_of(meas);
  const Rows dirs = sphere_directions(n, 5, c.rng.next());
  for (std::size_t k = 0; k < dirs.size(); ++k) {
    c.close("density reach", reach(z, dirs[k]), density_reach(density, dirs[k]), 1e-9, 1e-9);
  }

  Vector target(n, 0.0);
  for (std::size_t i = 0; i < z.size(); ++i) {
    const double lam = c.rng.uniform();
    for (std::size_t k = 0; k < n; ++k) target[k] += lam * z.generator(i)[k];
  }
  c.digest.add(target);
  const auto cert = achieve(meas, target, 1e-9);
  c.at_most("achieve residual", cert.residual, 1e-8);
  c.at_most("integral over intervals", distance1(density_integral(density, cert.intervals), target), 1e-8);

  const Vector total = z.total();
  if (norm1(total) > 1e-6) {
    std::vector<Interval> previous;
    for (double lam : {0.0, 0.25, 0.5, 0.75, 1.0}) {
      Vector t(n);
      for (std::size_t k = 0; k < n; ++k) t[k] = lam * total[k];
      const auto nested = achieve(meas, t, 1e-9);
      double length = 0.0;
      for (const auto& iv : nested.intervals) length += iv.hi - iv.lo;
      c.close("interval length at lambda " + num(lam), lam * static_cast<double>(z.size()), length, 1e-9, 0.0);
      for (const auto& iv : previous) {
        const bool covered = std::any_of(nested.intervals.begin(), nested.intervals.end(), [&](const Interval& w) {
          return w.lo <= iv.lo + 1e-12 && iv.hi <= w.hi + 1e-12;
        });
        c.check(covered, "nested intervals at lambda " + num(lam), "not nested", "1e-12");
      }
      previous = nested.intervals;
    }
  }
  return c.done();
}

// Complex products through the real embedding.
CaseResult complex_case(std::uint64_t seed, Scale) {
  Case c(seed);
  const std::size_t n = pick(c.rng, 1, 3);
  auto make = [&](std::size_t m) {
    Rows rows(2 * n);
    for (std::size_t i = 0; i < m; ++i) rows.push_back(random_atom(c.rng, 2 * n, false));
    return ComplexVectorMeasure::validate(n, std::move(rows));
  };
  const auto a = make(pick(c.rng, 0, 6));
  const auto b = make(pick(c.rng, 0, 6));
  c.digest.add(a.interleaved().flat()).add(b.interleaved().flat());

  const auto lhs = complex_embed(complex_coordinate_product(a, b)).atoms();
  const auto ea = complex_embed(a);
  const auto eb = complex_embed(b);
  Rows rhs(2 * n);
  for (std::size_t i = 0; i < ea.size(); ++i) {
    for (std::size_t j = 0; j < eb.size(); ++j) {
      Vector out(2 * n);
      for (std::size_t k = 0; k < n; ++k) {
        const std::complex<double> x(ea.atom(i)[2 * k], ea.atom(i)[2 * k + 1]);
        const std::complex<double> y(eb.atom(j)[2 * k], eb.atom(j)[2 * k + 1]);
        const auto z = x * y;
        out[2 * k] = z.real();
        out[2 * k + 1] = z.imag();
      }
      rhs.push_back(out);
    }
  }
  c.check(multiset_equal(lhs, rhs), "embedded product equals pairwise product", "differs", "exact");
  c.check(lhs.sorted() == [&] {
    Rows iso(2 * n);
    for (std::size_t i = 0; i < ea.size(); ++i) {
      for (std::size_t j = 0; j < eb.size(); ++j) iso.push_back(isomorphic_product(ea.atom(i), eb.atom(j)));
    }
    return iso.sorted();
  }(), "embedded product equals isomorphic product", "differs", "exact");
  return c.done();
}

}  // namespace

const std::vector<Suite>& suites() {
  static const std::vector<Suite> all = {
      {"measure", "masses, directions, product symmetry, serialization", 100, 20, measure_case},
      {"oracle", "reach against brute-force subset sums", 200, 30, oracle_case},
      {"hull", "vertices, area, membership certificates, Hausdorff sanity", 100, 20, hull_case},
      {"segment", "segment distance against dense sampling", 10, 2, segment_case},
      {"theorem1", "product hull depends only on the factor hulls", 100, 20, theorem1_case},
      {"laws", "commutativity, associativity, distributivity, identity", 100, 20, laws_case},
      {"identity", "identity law and non-invertibility", 100, 20, identity_case},
      {"inclusion", "products preserve inclusion", 100, 20, inclusion_case},
      {"gini", "hull-area Gini and Lorenz curve shape", 50, 10, gini_case},
      {"discretization", "sphere partition, mass, single-measure convergence", 20, 4, discretization_case},
      {"product_bound", "product error bound for discretized fine measures", 20, 3, product_bound_case},
      {"skeleton_bound", "skeleton product stability", 50, 10, skeleton_bound_case},
      {"zonoid", "density support sums and interval realization", 100, 20, zonoid_case},
      {"complex", "complex products through the real embedding", 100, 20, complex_case},
  };
  return all;
}

}  // namespace lorenz::verify
