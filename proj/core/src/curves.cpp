#include "transcert/curves.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <nlohmann/json.hpp>
#include <numbers>
#include <random>

#include "transcert/errors.hpp"

namespace transcert::curves {

namespace {

constexpr double kPi = std::numbers::pi;

double cross(const Point& o, const Point& a, const Point& b) {
  return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
}

double wrap_half_turn(double t) {
  t = std::fmod(t, kPi);
  return t < 0 ? t + kPi : t;
}

struct PolygonGeometry {
  double area = 0.0;
  Point centroid;
};

PolygonGeometry polygon_geometry(const std::vector<Point>& v) {
  double a2 = 0.0, cx = 0.0, cy = 0.0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    const Point& p = v[i];
    const Point& q = v[(i + 1) % v.size()];
    const double w = p.x * q.y - q.x * p.y;
    a2 += w;
    cx += (p.x + q.x) * w;
    cy += (p.y + q.y) * w;
  }
  PolygonGeometry g;
  g.area = a2 / 2.0;
  if (g.area > 0) g.centroid = {cx / (3.0 * a2), cy / (3.0 * a2)};
  return g;
}

// Curve with its centroid and per-edge data cached for repeated extent queries.
class Prepared {
 public:
  explicit Prepared(const Curve& c) : curve_(c) {
    validate(c);
    if (const auto* p = std::get_if<ConvexPolygon>(&c)) {
      const auto g = polygon_geometry(p->vertices);
      area_ = g.area;
      centroid_ = g.centroid;
      const auto& v = p->vertices;
      for (std::size_t i = 0; i < v.size(); ++i) {
        const Point& a = v[i];
        const Point& b = v[(i + 1) % v.size()];
        const double len = std::hypot(b.x - a.x, b.y - a.y);
        const Point n{(b.y - a.y) / len, -(b.x - a.x) / len};  // outward for counterclockwise order
        normals_.push_back(n);
        offsets_.push_back(n.x * (a.x - centroid_.x) + n.y * (a.y - centroid_.y));
      }
    } else if (const auto* e = std::get_if<Ellipse>(&c)) {
      area_ = kPi * e->a * e->b;
      centroid_ = e->center;
    } else {
      const auto& ci = std::get<Circle>(c);
      area_ = kPi * ci.r * ci.r;
      centroid_ = ci.center;
    }
    if (!(area_ > 0.0)) throw DegenerateCurve("curve encloses zero area");
  }

  double area() const { return area_; }
  Point centroid() const { return centroid_; }

  double support(double theta) const {
    const double ux = std::cos(theta), uy = std::sin(theta);
    if (const auto* p = std::get_if<ConvexPolygon>(&curve_)) {
      double h = -INFINITY;
      for (const Point& q : p->vertices) h = std::max(h, q.x * ux + q.y * uy);
      return h;
    }
    if (const auto* e = std::get_if<Ellipse>(&curve_)) {
      const double psi = theta - e->angle;
      const double ca = e->a * std::cos(psi), sb = e->b * std::sin(psi);
      return std::sqrt(ca * ca + sb * sb) + e->center.x * ux + e->center.y * uy;
    }
    const auto& ci = std::get<Circle>(curve_);
    return ci.r + ci.center.x * ux + ci.center.y * uy;
  }

  double width(double theta) const { return support(theta) + support(theta + kPi); }

  double chord(double theta) const {
    if (std::holds_alternative<ConvexPolygon>(curve_)) return exit_distance(theta) + exit_distance(theta + kPi);
    if (const auto* e = std::get_if<Ellipse>(&curve_)) {
      const double psi = theta - e->angle;
      const double c = std::cos(psi) / e->a, s = std::sin(psi) / e->b;
      return 2.0 / std::sqrt(c * c + s * s);
    }
    return 2.0 * std::get<Circle>(curve_).r;
  }

  double extent(Definition def, double theta) const {
    return def == Definition::Width ? width(theta) : chord(theta);
  }

  // Directions where a polygon extent can have a kink or a closed-form extremum.
  std::vector<double> candidate_directions(Definition def) const {
    std::vector<double> out;
    const auto* p = std::get_if<ConvexPolygon>(&curve_);
    if (p == nullptr) return out;
    const auto& v = p->vertices;
    for (std::size_t i = 0; i < v.size(); ++i) {
      const Point& a = v[i];
      const Point& b = v[(i + 1) % v.size()];
      const double edge = std::atan2(b.y - a.y, b.x - a.x);
      out.push_back(wrap_half_turn(edge));
      if (def == Definition::Width) {
        out.push_back(wrap_half_turn(edge + kPi / 2));
        for (std::size_t j = i + 1; j < v.size(); ++j)
          out.push_back(wrap_half_turn(std::atan2(v[j].y - a.y, v[j].x - a.x)));
      } else {
        out.push_back(wrap_half_turn(std::atan2(a.y - centroid_.y, a.x - centroid_.x)));
      }
    }
    return out;
  }

 private:
  double exit_distance(double theta) const {
    const double ux = std::cos(theta), uy = std::sin(theta);
    double t = INFINITY;
    for (std::size_t i = 0; i < normals_.size(); ++i) {
      const double nu = normals_[i].x * ux + normals_[i].y * uy;
      if (nu > 0) t = std::min(t, offsets_[i] / nu);
    }
    return t;
  }

  const Curve& curve_;
  double area_ = 0.0;
  Point centroid_;
  std::vector<Point> normals_;
  std::vector<double> offsets_;
};

struct Extremum {
  double theta = 0.0;
  double value = 0.0;
};

// Golden-section search for a minimum of f on [lo, hi].
Extremum golden_min(const std::function<double(double)>& f, double lo, double hi, double tol) {
  const double r = (std::sqrt(5.0) - 1.0) / 2.0;
  double x1 = hi - r * (hi - lo), x2 = lo + r * (hi - lo);
  double f1 = f(x1), f2 = f(x2);
  while (hi - lo > tol) {
    if (f1 <= f2) {
      hi = x2;
      x2 = x1;
      f2 = f1;
      x1 = hi - r * (hi - lo);
      f1 = f(x1);
    } else {
      lo = x1;
      x1 = x2;
      f1 = f2;
      x2 = lo + r * (hi - lo);
      f2 = f(x2);
    }
  }
  return f1 <= f2 ? Extremum{x1, f1} : Extremum{x2, f2};
}

Extremum search(const std::function<double(double)>& f, int n_dirs, double tol, const std::vector<double>& candidates) {
  const double step = kPi / n_dirs;
  int best = 0;
  double best_value = INFINITY;
  for (int k = 0; k < n_dirs; ++k) {
    const double v = f(k * step);
    if (v < best_value) {
      best_value = v;
      best = k;
    }
  }
  Extremum e = golden_min(f, (best - 1) * step, (best + 1) * step, tol);
  if (best_value < e.value) e = {best * step, best_value};
  for (double t : candidates) {
    const double v = f(t);
    if (v < e.value) e = {t, v};
  }
  e.theta = wrap_half_turn(e.theta);
  return e;
}

double adaptive_simpson(const std::function<double(double)>& f, double a, double b, double fa, double fm, double fb,
                        double whole, double tol, int depth) {
  const double m = (a + b) / 2, lm = (a + m) / 2, rm = (m + b) / 2;
  const double flm = f(lm), frm = f(rm);
  const double left = (m - a) / 6 * (fa + 4 * flm + fm);
  const double right = (b - m) / 6 * (fm + 4 * frm + fb);
  const double delta = left + right - whole;
  if (depth <= 0 || std::abs(delta) <= 15 * tol) return left + right + delta / 15;
  return adaptive_simpson(f, a, m, fa, flm, fm, left, tol / 2, depth - 1) +
         adaptive_simpson(f, m, b, fm, frm, fb, right, tol / 2, depth - 1);
}

Outcome decide(double margin) {
  if (margin > kDecisionMargin) return Outcome::Holds;
  if (margin < -kDecisionMargin) return Outcome::Fails;
  return Outcome::Inconclusive;
}

}  // namespace

ConvexPolygon make_convex_polygon(std::vector<Point> pts) {
  std::sort(pts.begin(), pts.end(), [](const Point& a, const Point& b) { return a.x < b.x || (a.x == b.x && a.y < b.y); });
  pts.erase(std::unique(pts.begin(), pts.end(), [](const Point& a, const Point& b) { return a.x == b.x && a.y == b.y; }),
            pts.end());
  if (pts.size() < 3) throw DegenerateCurve("convex hull needs at least 3 distinct points");
  std::vector<Point> hull(2 * pts.size());
  std::size_t k = 0;
  for (const Point& p : pts) {
    while (k >= 2 && cross(hull[k - 2], hull[k - 1], p) <= 0) --k;
    hull[k++] = p;
  }
  for (std::size_t i = pts.size() - 1, lower = k + 1; i-- > 0;) {
    while (k >= lower && cross(hull[k - 2], hull[k - 1], pts[i]) <= 0) --k;
    hull[k++] = pts[i];
  }
  hull.resize(k - 1);
  if (hull.size() < 3) throw DegenerateCurve("convex hull has fewer than 3 vertices");
  return ConvexPolygon{std::move(hull)};
}

ConvexPolygon regular_polygon(int n, double circumradius, double rotation) {
  if (n < 3) throw DegenerateCurve("regular polygon needs n >= 3");
  ConvexPolygon p;
  for (int k = 0; k < n; ++k) {
    const double t = rotation + 2 * kPi * k / n;
    p.vertices.push_back({circumradius * std::cos(t), circumradius * std::sin(t)});
  }
  return p;
}

void validate(const Curve& c) {
  if (const auto* ci = std::get_if<Circle>(&c)) {
    if (!(ci->r > 0)) throw DegenerateCurve("circle radius must be positive");
  } else if (const auto* e = std::get_if<Ellipse>(&c)) {
    if (!(e->b > 0)) throw DegenerateCurve("ellipse axes must be positive");
    if (e->a < e->b) throw Error("ellipse requires a >= b");
  } else {
    const auto& v = std::get<ConvexPolygon>(c).vertices;
    if (v.size() < 3) throw DegenerateCurve("polygon needs at least 3 vertices");
    for (std::size_t i = 0; i < v.size(); ++i)
      if (!(cross(v[i], v[(i + 1) % v.size()], v[(i + 2) % v.size()]) > 0))
        throw DegenerateCurve("polygon must be strictly convex and counterclockwise");
  }
}

Curve scaled(const Curve& c, double s) {
  if (const auto* ci = std::get_if<Circle>(&c)) return Circle{ci->r * s, {ci->center.x * s, ci->center.y * s}};
  if (const auto* e = std::get_if<Ellipse>(&c)) return Ellipse{e->a * s, e->b * s, {e->center.x * s, e->center.y * s}, e->angle};
  ConvexPolygon p = std::get<ConvexPolygon>(c);
  for (Point& q : p.vertices) q = {q.x * s, q.y * s};
  return p;
}

Curve rotated(const Curve& c, double angle) {
  const double ca = std::cos(angle), sa = std::sin(angle);
  auto rot = [&](const Point& q) { return Point{ca * q.x - sa * q.y, sa * q.x + ca * q.y}; };
  if (const auto* ci = std::get_if<Circle>(&c)) return Circle{ci->r, rot(ci->center)};
  if (const auto* e = std::get_if<Ellipse>(&c)) return Ellipse{e->a, e->b, rot(e->center), e->angle + angle};
  ConvexPolygon p = std::get<ConvexPolygon>(c);
  for (Point& q : p.vertices) q = rot(q);
  return p;
}

const char* to_string(Definition d) { return d == Definition::Width ? "width" : "chord"; }

std::optional<Definition> parse_definition(const std::string& text) {
  if (text == "width") return Definition::Width;
  if (text == "chord") return Definition::ChordThroughCentroid;
  return std::nullopt;
}

double ellipse_perimeter(double a, double b) {
  double an = a, bn = b;
  double sum = (a * a - b * b) / 2.0;  // 2^(n-1) c_n^2 at n = 0
  double weight = 0.5;
  for (int i = 0; i < 64; ++i) {
    const double c = (an - bn) / 2.0;
    const double next_a = (an + bn) / 2.0;
    bn = std::sqrt(an * bn);
    an = next_a;
    weight *= 2.0;
    const double term = weight * c * c;
    sum += term;
    if (term <= 1e-17 * a * a) break;
  }
  return 2.0 * kPi * (a * a - sum) / an;
}

double ellipse_perimeter_quadrature(double a, double b, double tol) {
  const std::function<double(double)> f = [&](double t) {
    const double s = a * std::sin(t), c = b * std::cos(t);
    return std::sqrt(s * s + c * c);
  };
  const double lo = 0.0, hi = kPi / 2;
  const double fa = f(lo), fm = f(hi / 2), fb = f(hi);
  const double whole = hi / 6 * (fa + 4 * fm + fb);
  return 4.0 * adaptive_simpson(f, lo, hi, fa, fm, fb, whole, tol * a, 50);
}

double extent(const Curve& c, Definition def, double theta) { return Prepared(c).extent(def, theta); }

CurveMeasures measures(const Curve& c, Definition def, int n_dirs, double refine_tol) {
  if (n_dirs < kMinDirections) throw Error("measures: n_dirs must be at least 64");
  const Prepared shape(c);
  CurveMeasures m;
  m.definition = def;
  m.A = shape.area();
  m.centroid = shape.centroid();
  if (const auto* p = std::get_if<ConvexPolygon>(&c)) {
    const auto& v = p->vertices;
    for (std::size_t i = 0; i < v.size(); ++i) {
      const Point& q = v[(i + 1) % v.size()];
      m.L += std::hypot(q.x - v[i].x, q.y - v[i].y);
    }
  } else if (const auto* e = std::get_if<Ellipse>(&c)) {
    m.L = ellipse_perimeter(e->a, e->b);
    m.perimeter_crosscheck = ellipse_perimeter_quadrature(e->a, e->b);
  } else {
    m.L = 2 * kPi * std::get<Circle>(c).r;
  }

  const auto candidates = shape.candidate_directions(def);
  const Extremum lo = search([&](double t) { return shape.extent(def, t); }, n_dirs, refine_tol, candidates);
  const Extremum hi = search([&](double t) { return -shape.extent(def, t); }, n_dirs, refine_tol, candidates);
  m.d = lo.value;
  m.theta_d = lo.theta;
  m.D = -hi.value;
  m.theta_D = hi.theta;
  return m;
}

const char* to_string(Outcome o) {
  switch (o) {
    case Outcome::Holds:
      return "holds";
    case Outcome::Fails:
      return "fails";
    case Outcome::Inconclusive:
      return "inconclusive";
  }
  return "?";
}

ConjectureReport conjecture_report(const Curve& c, Definition def, int n_dirs) {
  ConjectureReport r;
  r.m = measures(c, def, n_dirs);
  r.l_over_D = r.m.L / r.m.D;
  r.l_over_d = r.m.L / r.m.d;
  const double upper = (kPi - r.l_over_D) / kPi;
  const double lower = (r.l_over_d - kPi) / kPi;
  const Outcome a = decide(upper), b = decide(lower);
  if (a == Outcome::Fails || b == Outcome::Fails) {
    r.holds_i = Outcome::Fails;
  } else if (a == Outcome::Holds && b == Outcome::Holds) {
    r.holds_i = Outcome::Holds;
  } else {
    r.holds_i = Outcome::Inconclusive;
  }
  r.equality_case = std::abs(upper) <= kDecisionMargin && std::abs(lower) <= kDecisionMargin;
  r.holds_iii = decide((r.m.d * r.m.D - r.m.A) / r.m.A);

  const double half = r.m.L / 2;
  r.discriminant = half * half - 4 * r.m.A;
  r.real_roots = r.discriminant >= 0;
  const std::complex<double> root = std::sqrt(std::complex<double>(r.discriminant));
  r.root1 = (half + root) / 2.0;
  r.root2 = (half - root) / 2.0;
  return r;
}

const char* to_string(Family f) {
  switch (f) {
    case Family::RandomPolygon:
      return "random";
    case Family::Ellipse:
      return "ellipse";
    case Family::RegularPolygon:
      return "ngon";
  }
  return "?";
}

std::optional<Family> parse_family(const std::string& text) {
  if (text == "random") return Family::RandomPolygon;
  if (text == "ellipse") return Family::Ellipse;
  if (text == "ngon") return Family::RegularPolygon;
  return std::nullopt;
}

Curve sample_curve(Family family, std::uint64_t seed, std::uint64_t trial) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(trial), static_cast<std::uint32_t>(trial >> 32)};
  std::mt19937_64 rng(seq);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  switch (family) {
    case Family::RandomPolygon: {
      std::uniform_int_distribution<int> count(5, 50);
      for (;;) {
        const int m = count(rng);
        std::vector<Point> pts;
        for (int k = 0; k < m; ++k) {
          const double r = std::sqrt(unit(rng)), t = 2 * kPi * unit(rng);
          pts.push_back({r * std::cos(t), r * std::sin(t)});
        }
        try {
          return make_convex_polygon(std::move(pts));
        } catch (const DegenerateCurve&) {
        }
      }
    }
    case Family::Ellipse: {
      const double a = 0.5 + 4.5 * unit(rng);
      const double b = a * (0.05 + 0.95 * (1.0 - unit(rng)));
      const double angle = kPi * unit(rng);
      const Point center{2 * unit(rng) - 1, 2 * unit(rng) - 1};
      return Ellipse{a, std::min(a, b), center, angle};
    }
    case Family::RegularPolygon: {
      const int n = 3 + static_cast<int>(trial % 10);
      const double radius = 0.5 + 1.5 * unit(rng);
      return regular_polygon(n, radius, 2 * kPi * unit(rng));
    }
  }
  throw Error("unknown family");
}

FalsifyResult falsify_search(Family family, Definition def, std::uint64_t trials, std::uint64_t seed, int n_dirs) {
  if (trials < 1) throw Error("falsify_search: trials must be >= 1");
  FalsifyResult out;
  out.family = family;
  out.definition = def;
  out.seed = seed;
  out.trials = trials;
  for (std::uint64_t t = 0; t < trials; ++t) {
    Curve c = sample_curve(family, seed, t);
    ConjectureReport r = conjecture_report(c, def, n_dirs);
    const bool vi = r.holds_i == Outcome::Fails;
    const bool viii = r.holds_iii == Outcome::Fails;
    if (vi || viii) {
      out.counterexamples.push_back({t, std::move(c), std::move(r), vi, viii});
    } else if (r.holds_i == Outcome::Inconclusive || r.holds_iii == Outcome::Inconclusive) {
      ++out.inconclusive;
    }
  }
  return out;
}

void to_json(nlohmann::json& j, const Point& p) { j = nlohmann::json::array({p.x, p.y}); }

void to_json(nlohmann::json& j, const Curve& c) {
  if (const auto* ci = std::get_if<Circle>(&c)) {
    j = {{"type", "circle"}, {"r", ci->r}, {"center", ci->center}};
  } else if (const auto* e = std::get_if<Ellipse>(&c)) {
    j = {{"type", "ellipse"}, {"a", e->a}, {"b", e->b}, {"center", e->center}, {"angle", e->angle}};
  } else {
    j = {{"type", "polygon"}, {"vertices", std::get<ConvexPolygon>(c).vertices}};
  }
}

void to_json(nlohmann::json& j, const CurveMeasures& m) {
  j = {{"definition", to_string(m.definition)},
       {"L", m.L},
       {"A", m.A},
       {"centroid", m.centroid},
       {"d", m.d},
       {"D", m.D},
       {"theta_d", m.theta_d},
       {"theta_D", m.theta_D}};
  if (m.perimeter_crosscheck) j["L_quadrature"] = *m.perimeter_crosscheck;
}

void to_json(nlohmann::json& j, const ConjectureReport& r) {
  j = {{"measures", r.m},
       {"L_over_D", r.l_over_D},
       {"L_over_d", r.l_over_d},
       {"holds_i", to_string(r.holds_i)},
       {"holds_iii", to_string(r.holds_iii)},
       {"equality_case", r.equality_case},
       {"quadratic",
        {{"discriminant", r.discriminant},
         {"real_roots", r.real_roots},
         {"roots", {{r.root1.real(), r.root1.imag()}, {r.root2.real(), r.root2.imag()}}}}}};
}

void to_json(nlohmann::json& j, const Counterexample& c) {
  j = {{"trial", c.trial},
       {"curve", c.curve},
       {"violates_i", c.violates_i},
       {"violates_iii", c.violates_iii},
       {"report", c.report}};
}

void to_json(nlohmann::json& j, const FalsifyResult& r) {
  j = {{"family", to_string(r.family)},
       {"definition", to_string(r.definition)},
       {"seed", r.seed},
       {"trials", r.trials},
       {"inconclusive", r.inconclusive},
       {"counterexamples", r.counterexamples}};
}

}  // namespace transcert::curves
