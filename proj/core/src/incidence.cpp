#include "drlab/incidence.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>
#include <unordered_map>

#include "drlab/errors.hpp"

namespace drlab {

namespace {

struct RatLess {
  bool operator()(const Rat& a, const Rat& b) const { return cmp(a, b) < 0; }
};

void require_on_paraboloid3(const FrequencyPoint& p, const char* what) {
  if (p.dim() != 3 || !on_paraboloid(p))
    throw ParameterError(std::string(what) + ": point must lie on the paraboloid in R^3");
}

}  // namespace

Line2D Line2D::normalized(Int a, Int b, Int c) {
  if (sgn(a) == 0 && sgn(b) == 0)
    throw ParameterError("Line2D: (a, b) must not be (0, 0)");
  Int g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  if (sgn(c) != 0) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  a /= g;
  b /= g;
  c /= g;
  const bool flip = sgn(a) < 0 || (sgn(a) == 0 && sgn(b) < 0);
  if (flip) {
    a = -a;
    b = -b;
    c = -c;
  }
  return Line2D{std::move(a), std::move(b), std::move(c)};
}

Line2D Line2D::through(const Rat& px, const Rat& py, const Rat& qx, const Rat& qy) {
  if (cmp(px, qx) == 0 && cmp(py, qy) == 0)
    throw ParameterError("Line2D::through: points must be distinct");
  // normal (a, b) = (qy - py, px - qx); c = a px + b py; clear denominators
  const Rat aq = qy - py, bq = px - qx;
  const Rat cq = aq * px + bq * py;
  Int lcm = aq.get_den();
  mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), bq.get_den().get_mpz_t());
  mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), cq.get_den().get_mpz_t());
  const Rat scale(lcm);
  return normalized(Rat(aq * scale).get_num(), Rat(bq * scale).get_num(),
                    Rat(cq * scale).get_num());
}

bool Line2D::contains(const Rat& x, const Rat& y) const {
  return cmp(Rat(a) * x + Rat(b) * y, Rat(c)) == 0;
}

Circle circle_of_pair_sum(const FrequencyPoint& eta1, const FrequencyPoint& eta2) {
  require_on_paraboloid3(eta1, "circle_of_pair_sum");
  require_on_paraboloid3(eta2, "circle_of_pair_sum");
  const Rat A = eta1.coords[0] + eta2.coords[0];
  const Rat B = eta1.coords[1] + eta2.coords[1];
  const Rat C = eta1.coords[2] + eta2.coords[2];
  Circle circle;
  circle.center_x = A / 2;
  circle.center_y = B / 2;
  circle.radius_sq = (Rat(2) * C - A * A - B * B) / 4;
  return circle;
}

namespace {

bool on_circle(const Circle& c, const Rat& x, const Rat& y) {
  const Rat dx = x - c.center_x, dy = y - c.center_y;
  return cmp(dx * dx + dy * dy, c.radius_sq) == 0;
}

}  // namespace

QuadrupleVerdict verify_quadruple_geometry(const FrequencyPoint& eta1,
                                           const FrequencyPoint& eta2,
                                           const FrequencyPoint& eta3,
                                           const FrequencyPoint& eta4) {
  for (const FrequencyPoint* p : {&eta1, &eta2, &eta3, &eta4})
    require_on_paraboloid3(*p, "verify_quadruple_geometry");
  if (!vec_equal(vec_add(eta1.coords, eta2.coords), vec_add(eta3.coords, eta4.coords)))
    throw ParameterError("verify_quadruple_geometry: eta1+eta2 = eta3+eta4 must hold exactly");

  const Circle circle = circle_of_pair_sum(eta1, eta2);
  const Rat A = eta1.coords[0] + eta2.coords[0];
  const Rat B = eta1.coords[1] + eta2.coords[1];

  QuadrupleVerdict v;
  v.concyclic = true;
  for (const FrequencyPoint* p : {&eta1, &eta2, &eta3, &eta4})
    v.concyclic = v.concyclic && on_circle(circle, p->coords[0], p->coords[1]);

  v.diametric = cmp(eta1.coords[0] + eta2.coords[0], A) == 0 &&
                cmp(eta1.coords[1] + eta2.coords[1], B) == 0 &&
                cmp(eta3.coords[0] + eta4.coords[0], A) == 0 &&
                cmp(eta3.coords[1] + eta4.coords[1], B) == 0;

  auto planar_equal = [](const FrequencyPoint& a, const FrequencyPoint& b) {
    return cmp(a.coords[0], b.coords[0]) == 0 && cmp(a.coords[1], b.coords[1]) == 0;
  };
  if (planar_equal(eta1, eta2) || planar_equal(eta1, eta3) || planar_equal(eta2, eta3)) {
    v.right_angle_degenerate = true;
    v.right_angle = true;  // vacuous
  } else {
    const Rat ux = eta1.coords[0] - eta3.coords[0], uy = eta1.coords[1] - eta3.coords[1];
    const Rat wx = eta2.coords[0] - eta3.coords[0], wy = eta2.coords[1] - eta3.coords[1];
    v.right_angle = sgn(ux * wx + uy * wy) == 0;
  }
  return v;
}

std::vector<RatVec> planar_projections(const PointSet& ps) {
  std::vector<RatVec> out;
  out.reserve(ps.size());
  for (const FrequencyPoint& p : ps.points)
    out.emplace_back(p.coords.begin(), p.coords.end() - 1);
  return out;
}

std::uint64_t count_right_angles(const std::vector<RatVec>& points) {
  const std::size_t n = points.size();
  if (n > 2000) throw GuardError("count_right_angles: |points| > 2000");
  if (n == 0) return 0;
  const std::size_t d = points[0].size();
  if (d < 2 || d > 4)
    throw ParameterError("count_right_angles: dimension must be 2, 3 or 4");
  for (const RatVec& p : points)
    if (p.size() != d) throw ParameterError("count_right_angles: mixed dimensions");

  std::uint64_t total = 0;
  std::vector<RatVec> diffs(n);
  for (std::size_t apex = 0; apex < n; ++apex) {
    for (std::size_t i = 0; i < n; ++i)
      if (i != apex) diffs[i] = vec_sub(points[i], points[apex]);
    for (std::size_t i = 0; i < n; ++i) {
      if (i == apex || vec_equal(points[i], points[apex])) continue;
      for (std::size_t j = i + 1; j < n; ++j) {
        if (j == apex || vec_equal(points[j], points[apex])) continue;
        if (vec_equal(points[i], points[j])) continue;
        if (sgn(vec_dot(diffs[i], diffs[j])) == 0) ++total;
      }
    }
  }
  return total;
}

AngleStats max_angle_repetition(const std::vector<RatVec>& points) {
  const std::size_t n = points.size();
  if (n > 500) throw GuardError("max_angle_repetition: |points| > 500");
  for (const RatVec& p : points)
    if (p.size() != 2) throw ParameterError("max_angle_repetition: points must be planar");

  // key: (sign of cos, cos^2); exact, so equal angles never split and
  // distinct ones never merge.
  std::map<std::pair<int, Rat>, std::uint64_t,
           decltype([](const std::pair<int, Rat>& a, const std::pair<int, Rat>& b) {
             if (a.first != b.first) return a.first < b.first;
             return cmp(a.second, b.second) < 0;
           })>
      counts;

  for (std::size_t apex = 0; apex < n; ++apex) {
    for (std::size_t i = 0; i < n; ++i) {
      if (i == apex || vec_equal(points[i], points[apex])) continue;
      const RatVec u = vec_sub(points[i], points[apex]);
      for (std::size_t j = i + 1; j < n; ++j) {
        if (j == apex || vec_equal(points[j], points[apex])) continue;
        if (vec_equal(points[i], points[j])) continue;
        const RatVec w = vec_sub(points[j], points[apex]);
        const Rat dot = vec_dot(u, w);
        const Rat cos_sq = dot * dot / (vec_norm_sq(u) * vec_norm_sq(w));
        if (cmp(cos_sq, 1) == 0) continue;  // collinear: angle 0 or pi
        ++counts[{sgn(dot), cos_sq}];
      }
    }
  }

  AngleStats stats;
  if (counts.empty()) return stats;
  // largest count; ties broken toward the larger cosine (smaller angle)
  for (const auto& [key, count] : counts) {
    bool better = count > stats.count;
    if (!better && count == stats.count && stats.found) {
      if (key.first != stats.cos_sign) {
        better = key.first > stats.cos_sign;
      } else {
        const int c = cmp(key.second, stats.cos_sq);
        better = key.first >= 0 ? c > 0 : c < 0;
      }
    }
    if (better || !stats.found) {
      stats.found = true;
      stats.cos_sign = key.first;
      stats.cos_sq = key.second;
      stats.count = count;
    }
  }
  const double cosv = (stats.cos_sign < 0 ? -1.0 : 1.0) *
                      std::sqrt(std::min(1.0, stats.cos_sq.get_d())) *
                      (stats.cos_sign == 0 ? 0.0 : 1.0);
  stats.angle_degrees = std::acos(std::clamp(cosv, -1.0, 1.0)) * 180.0 / std::numbers::pi;
  if (n >= 3)
    stats.ratio = static_cast<double>(stats.count) /
                  (static_cast<double>(n) * static_cast<double>(n) * std::log(static_cast<double>(n)));
  return stats;
}

namespace {

struct FastPoint {
  long long nx, dx, ny, dy;
};

// Incidence scan with an __int128 fast path when every magnitude stays below
// 2^20 (the snap grid bound); exact in both paths.
struct IncidenceTester {
  const std::vector<RatVec>& points;
  const std::vector<Line2D>& lines;
  std::vector<FastPoint> fast;
  std::vector<std::pair<long long, long long>> fast_line;  // (a, b) with c
  std::vector<long long> fast_c;
  bool use_fast = false;

  IncidenceTester(const std::vector<RatVec>& p, const std::vector<Line2D>& l)
      : points(p), lines(l) {
    const long long bound = 1LL << 20;
    use_fast = true;
    fast.reserve(points.size());
    for (const RatVec& pt : points) {
      if (pt.size() != 2) throw ParameterError("incidences: points must be planar");
      const Int &nx = pt[0].get_num(), &dx = pt[0].get_den();
      const Int &ny = pt[1].get_num(), &dy = pt[1].get_den();
      if (!nx.fits_slong_p() || !dx.fits_slong_p() || !ny.fits_slong_p() ||
          !dy.fits_slong_p()) {
        use_fast = false;
        break;
      }
      FastPoint fp{nx.get_si(), dx.get_si(), ny.get_si(), dy.get_si()};
      if (std::llabs(fp.nx) > bound || fp.dx > bound || std::llabs(fp.ny) > bound ||
          fp.dy > bound) {
        use_fast = false;
        break;
      }
      fast.push_back(fp);
    }
    if (use_fast) {
      for (const Line2D& ln : lines) {
        if (!ln.a.fits_slong_p() || !ln.b.fits_slong_p() || !ln.c.fits_slong_p()) {
          use_fast = false;
          break;
        }
        const long long a = ln.a.get_si(), b = ln.b.get_si(), c = ln.c.get_si();
        if (std::llabs(a) > bound || std::llabs(b) > bound || std::llabs(c) > bound) {
          use_fast = false;
          break;
        }
        fast_line.emplace_back(a, b);
        fast_c.push_back(c);
      }
    }
  }

  bool incident(std::size_t li, std::size_t pi) const {
    if (use_fast) {
      const FastPoint& fp = fast[pi];
      const auto [a, b] = fast_line[li];
      // a x + b y = c over the common denominator dx dy
      const __int128 lhs = static_cast<__int128>(a) * fp.nx * fp.dy +
                           static_cast<__int128>(b) * fp.ny * fp.dx;
      const __int128 rhs = static_cast<__int128>(fast_c[li]) * fp.dx * fp.dy;
      return lhs == rhs;
    }
    return lines[li].contains(points[pi][0], points[pi][1]);
  }
};

double st_envelope(std::size_t num_lines, std::size_t num_points) {
  const double w = static_cast<double>(num_lines), p = static_cast<double>(num_points);
  return 4.0 * (w + p + std::pow(w * p, 2.0 / 3.0));
}

}  // namespace

IncidenceReport point_line_incidences(const std::vector<RatVec>& points,
                                      const std::vector<Line2D>& lines) {
  if (points.size() > 10000 || lines.size() > 10000)
    throw GuardError("point_line_incidences: more than 10^4 points or lines");
  IncidenceTester tester(points, lines);

  IncidenceReport report;
  report.num_points = points.size();
  report.num_lines = lines.size();
  for (std::size_t li = 0; li < lines.size(); ++li)
    for (std::size_t pi = 0; pi < points.size(); ++pi)
      if (tester.incident(li, pi)) ++report.incidences;

  report.st_bound = st_envelope(lines.size(), points.size());
  report.st_bound_holds = static_cast<double>(report.incidences) <= report.st_bound;
  report.wolff_bound = std::sqrt(static_cast<double>(lines.size())) *
                       static_cast<double>(points.size());
  return report;
}

IncidenceReport wolff_relation(const std::vector<RatVec>& points,
                               const std::vector<Line2D>& lines) {
  if (points.size() > 10000 || lines.size() > 10000)
    throw GuardError("wolff_relation: more than 10^4 points or lines");
  IncidenceTester tester(points, lines);

  IncidenceReport report;
  report.num_points = points.size();
  report.num_lines = lines.size();

  for (std::size_t li = 0; li < lines.size(); ++li) {
    std::vector<std::size_t> hits;
    for (std::size_t pi = 0; pi < points.size(); ++pi)
      if (tester.incident(li, pi)) hits.push_back(pi);
    report.incidences += hits.size();
    if (hits.size() == 1) {
      report.related_pairs.emplace_back(li, hits.front());
    } else {
      report.nonrelated_incidences += hits.size();
    }
  }
  report.max_related_per_line = report.related_pairs.empty() ? 0 : 1;

  report.st_bound = st_envelope(lines.size(), points.size());
  report.st_bound_holds = static_cast<double>(report.incidences) <= report.st_bound;
  report.wolff_bound = std::sqrt(static_cast<double>(lines.size())) *
                       static_cast<double>(points.size());
  // exact check of nonrelated <= |W|^{1/2} |P|, squared to stay in integers
  const Int lhs = Int(report.nonrelated_incidences) * Int(report.nonrelated_incidences);
  const Int rhs = Int(static_cast<unsigned long>(lines.size())) *
                  Int(static_cast<unsigned long>(points.size())) *
                  Int(static_cast<unsigned long>(points.size()));
  report.wolff_bound_holds = cmp(lhs, rhs) <= 0;
  return report;
}

E3MapResult e3_circle_map(const Rat& x1, const Rat& x2, const Rat& x3) {
  const Rat n_prime = x1 + x2 + x3;
  const Rat j = x1 * x1 + x2 * x2 + x3 * x3;
  E3MapResult r;
  r.u = Rat(3) * (x1 + x2);
  r.v = x1 - x2;
  r.circle.center_x = Rat(2) * n_prime;
  r.circle.center_y = 0;
  r.circle.radius_sq = Rat(6) * j - Rat(2) * n_prime * n_prime;
  const Rat du = r.u - r.circle.center_x;
  r.on_circle = cmp(du * du + Rat(3) * r.v * r.v, r.circle.radius_sq) == 0;
  return r;
}

EquilateralResult equilateralcheck_impl(const Rat& x1, const Rat& x2, const Rat& x3) {
  // squared distance between the (i,j) and (j,k) images in the u^2+3v^2 metric
  auto side_sq = [](const Rat& a, const Rat& b, const Rat& c) {
    const Rat du = Rat(3) * (a - c);       // 3(a+b) - 3(b+c)
    const Rat dv = a + c - Rat(2) * b;     // (a-b) - (b-c)
    return du * du + Rat(3) * dv * dv;
  };
  EquilateralResult r;
  const Rat s12_23 = side_sq(x1, x2, x3);
  const Rat s23_31 = side_sq(x2, x3, x1);
  const Rat s31_12 = side_sq(x3, x1, x2);
  r.equilateral = cmp(s12_23, s23_31) == 0 && cmp(s23_31, s31_12) == 0;
  r.side_sq = s12_23;
  return r;
}

EquilateralResult equilateral_check(const Rat& x1, const Rat& x2, const Rat& x3) {
  return equilateralcheck_impl(x1, x2, x3);
}

E3ScanResult e3_triple_scan(const std::vector<Rat>& xs) {
  if (xs.size() > 100) throw GuardError("e3_triple_scan: |xs| > 100");
  E3ScanResult result;
  result.set_size = xs.size();

  // distinct circles per mapped point; the map key (u, v) determines the
  // ordered pair (x1, x2), so the EEE-style bound per point is |xs|.
  std::map<std::pair<Rat, Rat>, std::set<std::pair<Rat, Rat>, RatLess>,
           decltype([](const std::pair<Rat, Rat>& a, const std::pair<Rat, Rat>& b) {
             const int c = cmp(a.first, b.first);
             if (c != 0) return c < 0;
             return cmp(a.second, b.second) < 0;
           })>
      circles_per_point;

  for (const Rat& x1 : xs)
    for (const Rat& x2 : xs)
      for (const Rat& x3 : xs) {
        const E3MapResult m = e3_circle_map(x1, x2, x3);
        result.all_on_circle = result.all_on_circle && m.on_circle;
        result.all_equilateral =
            result.all_equilateral && equilateral_check(x1, x2, x3).equilateral;
        ++result.triples_checked;
        circles_per_point[{m.u, m.v}].insert({m.circle.center_x, m.circle.radius_sq});
      }
  for (const auto& [pt, circles] : circles_per_point)
    result.max_circles_per_point = std::max(result.max_circles_per_point, circles.size());
  return result;
}

}  // namespace drlab
