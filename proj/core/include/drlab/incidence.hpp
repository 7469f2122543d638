#pragma once

// Exact incidence geometry: the circle structure of additive quadruples on
// the paraboloid in R^3, right angles, repeated angles, point-line
// incidences, and the one-point-per-line relation that yields the
// |W|^{1/2} |P| incidence bound. All predicates are exact rational tests.

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "drlab/pointset.hpp"
#include "drlab/rational.hpp"

namespace drlab {

struct Circle {
  Rat center_x, center_y, radius_sq;
};

// ax + by = c with integer coefficients, gcd(a,b,c) = 1, (a,b) != (0,0), and
// the first nonzero of (a,b) positive. The normal form is unique per line.
struct Line2D {
  Int a, b, c;

  static Line2D normalized(Int a, Int b, Int c);
  // The unique line through two distinct rational points.
  static Line2D through(const Rat& px, const Rat& py, const Rat& qx, const Rat& qy);

  bool contains(const Rat& x, const Rat& y) const;
  bool operator==(const Line2D& o) const = default;
};

// For eta1 + eta2 = (A, B, C) with both eta on the paraboloid in R^3, the
// planar projections of eta1, eta2 both satisfy
//   (alpha - A/2)^2 + (beta - B/2)^2 = (2C - A^2 - B^2) / 4,
// so the circle is center (A/2, B/2), radius_sq (2C - A^2 - B^2)/4.
Circle circle_of_pair_sum(const FrequencyPoint& eta1, const FrequencyPoint& eta2);

struct QuadrupleVerdict {
  bool concyclic = false;   // all four projections on circle_of_pair_sum(eta1, eta2)
  bool diametric = false;   // P1+P2 = P3+P4 = (A, B), i.e. both pairs straddle the center
  bool right_angle = false; // (P1-P3).(P2-P3) = 0, checked when P1, P2, P3 are distinct
  bool right_angle_degenerate = false;  // P1, P2, P3 not distinct; angle check skipped
};

// Requires eta1 + eta2 = eta3 + eta4 exactly and all four points on the
// paraboloid in R^3; throws ParameterError otherwise.
QuadrupleVerdict verify_quadruple_geometry(const FrequencyPoint& eta1,
                                           const FrequencyPoint& eta2,
                                           const FrequencyPoint& eta3,
                                           const FrequencyPoint& eta4);

// First n-1 coordinates of every point.
std::vector<RatVec> planar_projections(const PointSet& ps);

// Number of configurations (apex, {p, q}) with (p-apex).(q-apex) = 0 and
// apex, p, q pairwise distinct; unordered in {p, q}. Points in R^d, d in
// {2,3,4}. Guard |points| <= 2000.
std::uint64_t count_right_angles(const std::vector<RatVec>& points);

struct AngleStats {
  bool found = false;
  // Angles are keyed exactly by (sign of cos, cos^2) - both rational for
  // rational points - rather than by floating-point radians. cos^2 = 1
  // (angle 0 or pi, collinear) is excluded.
  int cos_sign = 0;
  Rat cos_sq;
  std::uint64_t count = 0;
  double angle_degrees = 0.0;
  double ratio = 0.0;  // count / (N^2 ln N)
};

// Most frequent angle over configurations (apex, {p, q}) of planar points.
// Guard |points| <= 500.
AngleStats max_angle_repetition(const std::vector<RatVec>& points);

struct IncidenceReport {
  std::size_t num_points = 0;
  std::size_t num_lines = 0;
  std::uint64_t incidences = 0;  // exact I
  double st_bound = 0.0;         // 4 (|W| + |P| + (|W||P|)^{2/3})
  bool st_bound_holds = true;
  double wolff_bound = 0.0;  // |W|^{1/2} |P|
  // Relation fields (filled by wolff_relation): L ~ P iff P is the only
  // point of the configuration on L.
  std::uint64_t nonrelated_incidences = 0;
  std::size_t max_related_per_line = 0;
  bool wolff_bound_holds = true;  // nonrelated^2 <= |W| |P|^2, checked in integers
  std::vector<std::pair<std::size_t, std::size_t>> related_pairs;  // (line, point)
};

// Exact incidence count with the Szemeredi-Trotter sanity envelope.
// Guard: |points| <= 10^4 and |lines| <= 10^4.
IncidenceReport point_line_incidences(const std::vector<RatVec>& points,
                                      const std::vector<Line2D>& lines);

// Same scan plus the relation: a line is related to its point when it meets
// the point set exactly once; every other incidence is counted in
// nonrelated_incidences, which the two-points-determine-a-line argument
// bounds by |W|^{1/2} |P|.
IncidenceReport wolff_relation(const std::vector<RatVec>& points,
                               const std::vector<Line2D>& lines);

// For x1 + x2 + x3 = n' and x1^2 + x2^2 + x3^2 = j, the point
// (3(x1+x2), sqrt(3)(x1-x2)) lies on the circle centered (2n', 0) with
// radius squared 6j - 2n'^2. The second coordinate carries an implicit
// sqrt(3): the point is stored as (u, v) with metric u^2 + 3 v^2.
struct E3MapResult {
  Rat u, v;  // the mapped point (u, v sqrt3)
  Circle circle;
  bool on_circle = false;
};

E3MapResult e3_circle_map(const Rat& x1, const Rat& x2, const Rat& x3);

struct EquilateralResult {
  bool equilateral = false;
  Rat side_sq;  // common squared side length in the u^2 + 3 v^2 metric
};

// The three points (3(x_i+x_j), sqrt3 (x_i-x_j)), (i,j) in {(1,2),(2,3),(3,1)}
// always form an equilateral triangle; this verifies it exactly.
EquilateralResult equilateral_check(const Rat& x1, const Rat& x2, const Rat& x3);

struct E3ScanResult {
  std::size_t set_size = 0;
  std::uint64_t triples_checked = 0;
  bool all_on_circle = true;
  bool all_equilateral = true;
  // Max, over mapped points T, of the number of distinct circles the point
  // lies on with a witness x3 in the set; at most set_size.
  std::size_t max_circles_per_point = 0;
};

// Exhaustive scan over ordered triples from a set of abscissas (points
// (x, x^2) on the parabola). Guard |xs| <= 100.
E3ScanResult e3_triple_scan(const std::vector<Rat>& xs);

}  // namespace drlab
