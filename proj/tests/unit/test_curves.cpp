#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

#include <nlohmann/json.hpp>

#include "checks.hpp"
#include "oracles.hpp"
#include "transcert/curves.hpp"
#include "transcert/errors.hpp"

using namespace transcert;
using namespace transcert::curves;

namespace {

constexpr double kPi = std::numbers::pi;
const double kSqrt3 = std::sqrt(3.0);

ConvexPolygon triangle() { return make_convex_polygon({{0, 0}, {1, 0}, {0.5, kSqrt3 / 2}}); }

void expect_close(double a, double b, double rel, const char* what) {
  EXPECT_LE(std::fabs(a - b), rel * std::max(1.0, std::fabs(b))) << what << ": " << a << " vs " << b;
}

}  // namespace

TEST(Measures, UnitCircleBothDefinitions) {
  for (Definition def : {Definition::Width, Definition::ChordThroughCentroid}) {
    const CurveMeasures m = measures(Circle{1.0, {0.3, -0.2}}, def);
    EXPECT_NEAR(m.L, 2 * kPi, 1e-12);
    EXPECT_NEAR(m.A, kPi, 1e-12);
    EXPECT_NEAR(m.d, 2.0, 1e-12);
    EXPECT_NEAR(m.D, 2.0, 1e-12);
    EXPECT_NEAR(m.L / m.D, kPi, 1e-12);
    EXPECT_NEAR(m.L / m.d, kPi, 1e-12);
  }
}

TEST(Measures, CircleDiametersEqualTwiceRadius) {
  for (double r : {0.01, 0.5, 3.0, 250.0}) {
    const CurveMeasures w = measures(Circle{r, {}}, Definition::Width);
    const CurveMeasures c = measures(Circle{r, {}}, Definition::ChordThroughCentroid);
    EXPECT_NEAR(w.d, 2 * r, 1e-12 * std::max(1.0, r));
    EXPECT_NEAR(c.D, 2 * r, 1e-12 * std::max(1.0, r));
  }
}

TEST(Measures, Ellipse) {
  for (Definition def : {Definition::Width, Definition::ChordThroughCentroid}) {
    const CurveMeasures m = measures(Ellipse{2, 1, {}, 0.0}, def);
    EXPECT_NEAR(m.L, 9.688448220547676, 1e-12);
    EXPECT_NEAR(m.A, 2 * kPi, 1e-12);
    EXPECT_NEAR(m.d, 2.0, 1e-9);
    EXPECT_NEAR(m.D, 4.0, 1e-9);
    ASSERT_TRUE(m.perimeter_crosscheck.has_value());
    EXPECT_NEAR(*m.perimeter_crosscheck, m.L, 1e-10);
  }
  EXPECT_NEAR(ellipse_perimeter(2, 1), 9.688448220547676, 1e-13 * 9.7);
  EXPECT_NEAR(ellipse_perimeter(1, 1), 2 * kPi, 1e-14);
  EXPECT_NEAR(ellipse_perimeter_quadrature(3, 0.5), ellipse_perimeter(3, 0.5), 1e-10);
}

TEST(Measures, EquilateralTriangle) {
  const CurveMeasures w = measures(triangle(), Definition::Width);
  EXPECT_NEAR(w.D, 1.0, 1e-12);
  EXPECT_NEAR(w.d, kSqrt3 / 2, 1e-12);
  const CurveMeasures c = measures(triangle(), Definition::ChordThroughCentroid);
  EXPECT_NEAR(c.D, kSqrt3 / 2, 1e-12);
  EXPECT_NEAR(c.d, 2.0 / 3.0, 1e-12);
  EXPECT_NEAR(c.centroid.x, 0.5, 1e-15);
  EXPECT_NEAR(c.centroid.y, kSqrt3 / 6, 1e-15);
}

TEST(Measures, Preconditions) {
  EXPECT_THROW(measures(Circle{1.0, {}}, Definition::Width, 32), Error);
  EXPECT_THROW(make_convex_polygon({{0, 0}, {1, 1}, {2, 2}}), DegenerateCurve);
  EXPECT_THROW(make_convex_polygon({{0, 0}, {1, 1}}), DegenerateCurve);
  EXPECT_THROW(validate(Circle{0.0, {}}), DegenerateCurve);
  EXPECT_THROW(validate(Ellipse{1, 2, {}, 0}), Error);
}

TEST(Conjecture, Circle) {
  const ConjectureReport r = conjecture_report(Circle{1.5, {}}, Definition::Width);
  EXPECT_TRUE(r.equality_case);
  EXPECT_NEAR(r.discriminant, 1.5 * 1.5 * kPi * (kPi - 4), 1e-12);
  EXPECT_FALSE(r.real_roots);
  EXPECT_NE(r.holds_i, Outcome::Fails);
}

TEST(Conjecture, Ellipse) {
  const ConjectureReport r = conjecture_report(Ellipse{2, 1, {}, 0.0}, Definition::Width);
  EXPECT_NEAR(r.l_over_D, 2.4221, 1e-4);
  EXPECT_NEAR(r.l_over_d, 4.8442, 1e-4);
  EXPECT_EQ(r.holds_i, Outcome::Holds);
  EXPECT_EQ(r.holds_iii, Outcome::Holds);
  EXPECT_LT(r.discriminant, 0.0);
  EXPECT_FALSE(r.real_roots);
}

TEST(Conjecture, TriangleDependsOnDefinition) {
  const ConjectureReport chord = conjecture_report(triangle(), Definition::ChordThroughCentroid);
  EXPECT_NEAR(chord.l_over_D, 2 * kSqrt3, 1e-10);
  EXPECT_EQ(chord.holds_i, Outcome::Fails);
  const ConjectureReport width = conjecture_report(triangle(), Definition::Width);
  EXPECT_NEAR(width.l_over_D, 3.0, 1e-10);
  EXPECT_NEAR(width.l_over_d, 2 * kSqrt3, 1e-10);
  EXPECT_EQ(width.holds_i, Outcome::Holds);
  EXPECT_EQ(width.holds_iii, Outcome::Holds);
}

TEST(Conjecture, QuadraticRootsSolveTheEquation) {
  const ConjectureReport r = conjecture_report(make_convex_polygon({{0, 0}, {10, 0}, {10, 0.1}, {0, 0.1}}),
                                               Definition::Width);
  EXPECT_TRUE(r.real_roots);
  const double half_l = r.m.L / 2;
  for (auto z : {r.root1, r.root2}) EXPECT_NEAR(std::abs(z * z - half_l * z + r.m.A), 0.0, 1e-10);
}

TEST(Invariance, ScalingAndRotation) {
  std::mt19937_64 rng(8);
  for (std::uint64_t t = 0; t < 20; ++t) {
    const Curve c = sample_curve(Family::RandomPolygon, 99, t);
    for (Definition def : {Definition::Width, Definition::ChordThroughCentroid}) {
      const CurveMeasures m = measures(c, def);
      const double s = 0.5 + 3.0 * std::uniform_real_distribution<double>(0, 1)(rng);
      const CurveMeasures ms = measures(scaled(c, s), def);
      expect_close(ms.L, s * m.L, 1e-10, "L");
      expect_close(ms.A, s * s * m.A, 1e-10, "A");
      expect_close(ms.d, s * m.d, 1e-10, "d");
      expect_close(ms.D, s * m.D, 1e-10, "D");
      expect_close(ms.L / ms.D, m.L / m.D, 1e-10, "L/D");
      expect_close(ms.L / ms.d, m.L / m.d, 1e-10, "L/d");

      const double angle = std::uniform_real_distribution<double>(-kPi, kPi)(rng);
      const CurveMeasures mr = measures(rotated(c, angle), def);
      expect_close(mr.L, m.L, 1e-10, "rot L");
      expect_close(mr.A, m.A, 1e-10, "rot A");
      expect_close(mr.d, m.d, 1e-10, "rot d");
      expect_close(mr.D, m.D, 1e-10, "rot D");
    }
  }
  const CurveMeasures e0 = measures(Ellipse{3, 1, {}, 0.0}, Definition::Width);
  const CurveMeasures e1 = measures(Ellipse{3, 1, {1, 2}, 0.9}, Definition::Width);
  expect_close(e1.d, e0.d, 1e-10, "ellipse d");
  expect_close(e1.D, e0.D, 1e-10, "ellipse D");
}

TEST(Polygon, MatchesExactShoelace) {
  for (std::uint64_t t = 0; t < 50; ++t) {
    const auto poly = std::get<ConvexPolygon>(sample_curve(Family::RandomPolygon, 4, t));
    const auto& v = poly.vertices;
    BigRational twice_area, cx, cy;
    double perimeter = 0.0;
    for (std::size_t k = 0; k < v.size(); ++k) {
      const Point& a = v[k];
      const Point& b = v[(k + 1) % v.size()];
      const BigRational ax(mpq_class(a.x)), ay(mpq_class(a.y)), bx(mpq_class(b.x)), by(mpq_class(b.y));
      const BigRational cross = ax * by - bx * ay;
      twice_area += cross;
      cx += (ax + bx) * cross;
      cy += (ay + by) * cross;
      perimeter += std::hypot(b.x - a.x, b.y - a.y);
    }
    const BigRational area = twice_area / 2;
    const CurveMeasures m = measures(poly, Definition::Width);
    expect_close(m.A, area.to_double(), 1e-13, "area");
    expect_close(m.centroid.x, (cx / (3 * twice_area)).to_double(), 1e-12, "cx");
    expect_close(m.centroid.y, (cy / (3 * twice_area)).to_double(), 1e-12, "cy");
    expect_close(m.L, perimeter, 1e-13, "L");
  }
}

TEST(Polygon, HullIsCounterclockwiseAndDropsInteriorPoints) {
  const ConvexPolygon p = make_convex_polygon({{0, 0}, {2, 0}, {1, 1}, {2, 2}, {0, 2}, {1, 0}});
  ASSERT_EQ(p.vertices.size(), 4u);
  const ConvexPolygon hex = regular_polygon(6, 1.0);
  EXPECT_EQ(hex.vertices.size(), 6u);
  EXPECT_NEAR(measures(hex, Definition::Width).L, 6.0, 1e-12);
}

TEST(Falsify, EllipsesUnderWidthHaveNoViolations) {
  const FalsifyResult r = falsify_search(Family::Ellipse, Definition::Width, 1000, 1);
  EXPECT_TRUE(r.counterexamples.empty());
}

TEST(Falsify, RegularPolygonsUnderChordIncludeTriangle) {
  const FalsifyResult r = falsify_search(Family::RegularPolygon, Definition::ChordThroughCentroid, 100, 7);
  ASSERT_FALSE(r.counterexamples.empty());
  bool triangle_seen = false;
  for (const auto& c : r.counterexamples) {
    const auto* poly = std::get_if<ConvexPolygon>(&c.curve);
    ASSERT_NE(poly, nullptr);
    triangle_seen = triangle_seen || (poly->vertices.size() == 3 && c.violates_i);
  }
  EXPECT_TRUE(triangle_seen);
}

TEST(Falsify, RandomPolygonsUnderWidthKeepAreaBound) {
  const FalsifyResult r = falsify_search(Family::RandomPolygon, Definition::Width, 2000, 11);
  for (const auto& c : r.counterexamples) EXPECT_FALSE(c.violates_iii) << c.trial;
}

TEST(Falsify, DeterministicUnderSeed) {
  const nlohmann::json a = falsify_search(Family::RegularPolygon, Definition::ChordThroughCentroid, 60, 5);
  const nlohmann::json b = falsify_search(Family::RegularPolygon, Definition::ChordThroughCentroid, 60, 5);
  EXPECT_EQ(a.dump(), b.dump());
  const nlohmann::json c = sample_curve(Family::RandomPolygon, 5, 17);
  const nlohmann::json d = sample_curve(Family::RandomPolygon, 5, 17);
  EXPECT_EQ(c, d);
  EXPECT_NE(c, nlohmann::json(sample_curve(Family::RandomPolygon, 6, 17)));
}

TEST(Serialization, CounterexamplesCarryVertices) {
  const FalsifyResult r = falsify_search(Family::RegularPolygon, Definition::ChordThroughCentroid, 10, 7);
  ASSERT_FALSE(r.counterexamples.empty());
  const nlohmann::json j = r;
  const std::string dump = j.dump();
  EXPECT_NE(dump.find("vertices"), std::string::npos);
  EXPECT_EQ(parse_definition("chord"), Definition::ChordThroughCentroid);
  EXPECT_EQ(parse_definition("width"), Definition::Width);
  EXPECT_FALSE(parse_definition("diameter").has_value());
  EXPECT_EQ(parse_family("ngon"), Family::RegularPolygon);
}
