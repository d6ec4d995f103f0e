#pragma once

#include <complex>
#include <cstdint>
#include <nlohmann/json_fwd.hpp>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace transcert::curves {

struct Point {
  double x = 0.0;
  double y = 0.0;
};

struct Circle {
  double r = 1.0;
  Point center;
};

/// Semi-axes a >= b > 0, major axis rotated by `angle` radians.
struct Ellipse {
  double a = 1.0;
  double b = 1.0;
  Point center;
  double angle = 0.0;
};

/// Counterclockwise, strictly convex vertex list. Build with make_convex_polygon.
struct ConvexPolygon {
  std::vector<Point> vertices;
};

using Curve = std::variant<Circle, Ellipse, ConvexPolygon>;

/// Convex hull of `points` (counterclockwise, collinear points dropped).
/// Throws DegenerateCurve when fewer than 3 hull vertices remain.
ConvexPolygon make_convex_polygon(std::vector<Point> points);
ConvexPolygon regular_polygon(int n, double circumradius = 1.0, double rotation = 0.0);

/// Throws DegenerateCurve on non-positive radii or axes, Error when a < b.
void validate(const Curve& c);

Curve scaled(const Curve& c, double s);
Curve rotated(const Curve& c, double angle);

enum class Definition { ChordThroughCentroid, Width };

const char* to_string(Definition d);
std::optional<Definition> parse_definition(const std::string& text);

struct CurveMeasures {
  Definition definition = Definition::Width;
  double L = 0.0;
  double A = 0.0;
  Point centroid;
  double d = 0.0;
  double D = 0.0;
  double theta_d = 0.0;  // direction attaining d, in [0, pi)
  double theta_D = 0.0;
  /// Perimeter by adaptive Simpson on the arclength integrand (ellipses only).
  std::optional<double> perimeter_crosscheck;
};

inline constexpr int kMinDirections = 64;

/// Requires n_dirs >= kMinDirections. Throws DegenerateCurve on zero area.
CurveMeasures measures(const Curve& c, Definition def, int n_dirs = 720, double refine_tol = 1e-12);

/// Perimeter of an ellipse via the arithmetic-geometric mean.
double ellipse_perimeter(double a, double b);
/// Same quantity by adaptive Simpson quadrature of sqrt(a^2 sin^2 t + b^2 cos^2 t).
double ellipse_perimeter_quadrature(double a, double b, double tol = 1e-13);

/// Extent function whose min and max over [0, pi) give d and D.
double extent(const Curve& c, Definition def, double theta);

enum class Outcome { Holds, Fails, Inconclusive };
const char* to_string(Outcome o);

inline constexpr double kDecisionMargin = 1e-9;

struct ConjectureReport {
  CurveMeasures m;
  double l_over_D = 0.0;
  double l_over_d = 0.0;
  Outcome holds_i = Outcome::Inconclusive;    // L/D <= pi <= L/d
  Outcome holds_iii = Outcome::Inconclusive;  // d D > A
  /// Both ratios within the margin of pi: the equality case of (ii).
  bool equality_case = false;
  double discriminant = 0.0;  // (L/2)^2 - 4A for x^2 - (L/2) x + A
  std::complex<double> root1;
  std::complex<double> root2;
  bool real_roots = false;
};

/// Margins are relative: (pi - L/D)/pi, (L/d - pi)/pi and (dD - A)/A against kDecisionMargin.
ConjectureReport conjecture_report(const Curve& c, Definition def, int n_dirs = 720);

enum class Family { RandomPolygon, Ellipse, RegularPolygon };
const char* to_string(Family f);
std::optional<Family> parse_family(const std::string& text);

/// The curve sampled for a given (family, seed, trial); independent of other trials.
Curve sample_curve(Family family, std::uint64_t seed, std::uint64_t trial);

struct Counterexample {
  std::uint64_t trial = 0;
  Curve curve;
  ConjectureReport report;
  bool violates_i = false;
  bool violates_iii = false;
};

struct FalsifyResult {
  Family family = Family::RandomPolygon;
  Definition definition = Definition::Width;
  std::uint64_t seed = 0;
  std::uint64_t trials = 0;
  std::uint64_t inconclusive = 0;
  std::vector<Counterexample> counterexamples;
};

/// Deterministic for fixed (family, def, trials, seed). Requires trials >= 1.
FalsifyResult falsify_search(Family family, Definition def, std::uint64_t trials, std::uint64_t seed,
                             int n_dirs = 256);

void to_json(nlohmann::json& j, const Point& p);
void to_json(nlohmann::json& j, const Curve& c);
void to_json(nlohmann::json& j, const CurveMeasures& m);
void to_json(nlohmann::json& j, const ConjectureReport& r);
void to_json(nlohmann::json& j, const Counterexample& c);
void to_json(nlohmann::json& j, const FalsifyResult& r);

}  // namespace transcert::curves
