#include "drlab/pointset.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <unordered_map>
#include <unordered_set>

#include "drlab/errors.hpp"
#include "drlab/rng.hpp"

namespace drlab {

std::string surface_name(Surface s) {
  switch (s) {
    case Surface::paraboloid: return "paraboloid";
    case Surface::sphere: return "sphere";
    case Surface::none: return "none";
  }
  return "none";
}

Surface surface_from_name(const std::string& name) {
  if (name == "paraboloid") return Surface::paraboloid;
  if (name == "sphere") return Surface::sphere;
  if (name == "none") return Surface::none;
  throw ParameterError("unknown surface tag: '" + name + "'");
}

bool on_paraboloid(const FrequencyPoint& p) {
  if (p.dim() < 2) return false;
  Rat sum(0);
  for (std::size_t i = 0; i + 1 < p.dim(); ++i) sum += p.coords[i] * p.coords[i];
  return cmp(sum, p.coords.back()) == 0;
}

bool on_sphere(const FrequencyPoint& p) {
  Rat sum(0);
  for (const Rat& c : p.coords) sum += c * c;
  if (!p.float_tolerance) return cmp(sum, 1) == 0;
  return std::abs(sum.get_d() - 1.0) <= 1e-9;
}

void PointSet::validate() const {
  if (n < 2) throw ParameterError("ambient dimension must be >= 2");
  for (const FrequencyPoint& p : points) {
    if (static_cast<int>(p.dim()) != n)
      throw ParameterError("point dimension does not match ambient dimension");
    for (const Rat& c : p.coords)
      if (sgn(c.get_den()) <= 0)
        throw ParameterError("coordinate with nonpositive denominator");
    if (surface == Surface::paraboloid && !on_paraboloid(p))
      throw ParameterError("point is not exactly on the paraboloid");
    if (surface == Surface::sphere && !on_sphere(p))
      throw ParameterError("point is not on the unit sphere");
  }
  std::unordered_set<std::uint64_t> seen;
  seen.reserve(points.size() * 2);
  RatVecHash h;
  for (std::size_t i = 0; i < points.size(); ++i) {
    const std::uint64_t key = h(points[i].coords);
    if (!seen.insert(key).second) {
      // hash collision or true duplicate; resolve exactly
      for (std::size_t j = 0; j < i; ++j)
        if (vec_equal(points[j].coords, points[i].coords))
          throw ParameterError("duplicate point in PointSet");
    }
  }
  if (delta) {
    if (sgn(*delta) <= 0) throw ParameterError("delta must be positive");
    if (!check_separation(*this, *delta))
      throw ParameterError("claimed separation delta^{1/2} violated");
  }
}

PointSet gen_lattice_paraboloid(int n, long N) {
  if (n < 2 || n > 6) throw ParameterError("gen_lattice_paraboloid: n must be in [2,6]");
  if (N < 0) throw ParameterError("gen_lattice_paraboloid: N must be >= 0");
  double card = 1.0;
  for (int i = 0; i < n - 1; ++i) card *= static_cast<double>(2 * N + 1);
  if (card > 1e6) throw ParameterError("gen_lattice_paraboloid: (2N+1)^{n-1} exceeds 10^6");

  PointSet ps;
  ps.n = n;
  ps.surface = Surface::paraboloid;
  std::vector<long> xi(n - 1, -N);
  while (true) {
    FrequencyPoint p;
    p.coords.reserve(n);
    long sq = 0;
    for (long v : xi) {
      p.coords.emplace_back(v);
      sq += v * v;
    }
    p.coords.emplace_back(sq);
    ps.points.push_back(std::move(p));
    int d = 0;
    while (d < n - 1 && xi[d] == N) xi[d++] = -N;
    if (d == n - 1) break;
    ++xi[d];
  }
  return ps;
}

namespace {

// Exact rational stereographic lift of u in R^{n-1} to the unit sphere:
// (2u, 1-|u|^2) / (1+|u|^2).
RatVec sphere_lift(const RatVec& u) {
  Rat norm_sq = vec_norm_sq(u);
  Rat denom = Rat(1) + norm_sq;
  RatVec out;
  out.reserve(u.size() + 1);
  for (const Rat& c : u) out.push_back(Rat(2) * c / denom);
  out.push_back((Rat(1) - norm_sq) / denom);
  return out;
}

RatVec paraboloid_lift(const RatVec& u) {
  RatVec out = u;
  out.push_back(vec_norm_sq(u));
  return out;
}

}  // namespace

PointSet gen_separated_sample(Surface surface, int n, const Rat& delta, std::uint64_t seed) {
  if (n < 2 || n > 8) throw ParameterError("gen_separated_sample: n must be in [2,8]");
  if (sgn(delta) <= 0 || cmp(delta, 1) > 0)
    throw ParameterError("gen_separated_sample: delta must be in (0,1]");
  if (surface == Surface::none)
    throw ParameterError("gen_separated_sample: surface must be paraboloid or sphere");

  const double sep = std::sqrt(delta.get_d());
  const long nodes_per_dim = std::max(1L, static_cast<long>(std::floor(1.0 / sep)) + 1);
  double total = 1.0;
  for (int i = 0; i < n - 1; ++i) total *= static_cast<double>(nodes_per_dim);
  if (total > 1e6) throw ParameterError("gen_separated_sample: net would exceed 10^6 nodes");

  Rng rng(seed);
  // Jittered net over the parameter box, snapped to the 2^-20 grid.
  std::vector<RatVec> params;
  std::vector<long> idx(n - 1, 0);
  while (true) {
    RatVec u(n - 1);
    for (int d = 0; d < n - 1; ++d) {
      const double base = nodes_per_dim == 1
                              ? 0.0
                              : -0.5 + static_cast<double>(idx[d]) / static_cast<double>(nodes_per_dim - 1);
      const double jitter = rng.uniform(-sep / 4.0, sep / 4.0);
      const double x = std::clamp(base + jitter, -0.5, 0.5);
      u[d] = snap_to_grid(x);
    }
    params.push_back(std::move(u));
    int d = 0;
    while (d < n - 1 && idx[d] == nodes_per_dim - 1) idx[d++] = 0;
    if (d == n - 1) break;
    ++idx[d];
  }

  PointSet ps;
  ps.n = n;
  ps.surface = surface;
  for (const RatVec& u : params) {
    FrequencyPoint p;
    p.coords = surface == Surface::paraboloid ? paraboloid_lift(u) : sphere_lift(u);
    bool ok = true;
    for (const FrequencyPoint& q : ps.points) {
      if (vec_equal(q.coords, p.coords) ||
          cmp(vec_norm_sq(vec_sub(q.coords, p.coords)), delta) < 0) {
        ok = false;
        break;
      }
    }
    if (ok) ps.points.push_back(std::move(p));
  }
  ps.delta = delta;
  ps.validate();  // exact separation re-check before return
  return ps;
}

bool check_separation(const PointSet& ps, const Rat& delta) {
  for (std::size_t i = 0; i < ps.points.size(); ++i)
    for (std::size_t j = i + 1; j < ps.points.size(); ++j) {
      Rat d2 = vec_norm_sq(vec_sub(ps.points[i].coords, ps.points[j].coords));
      if (cmp(d2, delta) < 0) return false;
    }
  return true;
}

std::vector<Cap> cap_partition(const PointSet& ps, const Rat& delta) {
  if (ps.surface == Surface::sphere)
    throw ParameterError("cap_partition: sphere caps are unsupported");
  if (ps.surface != Surface::paraboloid)
    throw ParameterError("cap_partition: point set must be tagged paraboloid");
  if (sgn(delta) <= 0 || cmp(delta, 1) > 0)
    throw ParameterError("cap_partition: delta must be in (0,1]");
  const std::optional<Rat> side = exact_sqrt(delta);
  if (!side)
    throw ParameterError("cap_partition: delta must be the square of a rational");
  const Rat half_step = *side / 2;  // center grid spacing and cube half-side
  const Rat half(1, 2);

  // Candidate center coordinates: (side/2) Z intersected with [-1/2, 1/2].
  const Rat kmax_q = half / half_step;
  const long kmax = static_cast<long>(mpz_class(kmax_q.get_num() / kmax_q.get_den()).get_si());

  const int d = ps.n - 1;
  // Assignment uses half-open cubes [c - h, c + h): a coordinate on a shared
  // cube boundary belongs to the cube on its right, which is exactly the
  // lexicographically-smallest-center rule for the overlapping closed cover.
  std::map<std::vector<long>, std::vector<std::size_t>> caps;  // center grid index -> members
  for (std::size_t pi = 0; pi < ps.points.size(); ++pi) {
    std::vector<long> key(d);
    for (int ax = 0; ax < d; ++ax) {
      const Rat& x = ps.points[pi].coords[ax];
      Rat ratio = x / half_step;
      // smallest integer k with k > ratio - 1, i.e. floor(ratio - 1) + 1
      Rat shifted = ratio - 1;
      Int qk;
      mpz_fdiv_q(qk.get_mpz_t(), shifted.get_num().get_mpz_t(), shifted.get_den().get_mpz_t());
      long k = static_cast<long>(qk.get_si()) + 1;
      if (k < -kmax) k = -kmax;  // boundary cube may still cover x
      const Rat center = Rat(k) * half_step;
      const bool covered = cmp(x, center - half_step) >= 0 && cmp(x, center + half_step) < 0;
      if (!covered || k > kmax)
        throw ParameterError("cap_partition: point outside the [-1/2,1/2] cap cover");
      key[ax] = k;
    }
    caps[key].push_back(pi);
  }

  std::vector<Cap> out;
  out.reserve(caps.size());
  for (auto& [key, members] : caps) {
    Cap cap;
    cap.side = *side;
    cap.center.reserve(d);
    for (long k : key) cap.center.push_back(Rat(k) * half_step);
    cap.members = std::move(members);
    out.push_back(std::move(cap));
  }
  return out;
}

std::optional<EnergyGap> min_energy_gap(const PointSet& ps) {
  const std::size_t m = ps.points.size();
  if (m == 0) throw ParameterError("min_energy_gap: empty point set");
  if (m > 200) throw GuardError("min_energy_gap: |Lambda| > 200");

  // eta1+eta2-eta3-eta4 = s - s' with s, s' pairwise sums; dedupe the sums
  // first, then scan distinct pairs. Equal sums contribute only zero.
  std::unordered_map<RatVec, char, RatVecHash, RatVecEq> sum_set;
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i; j < m; ++j)
      sum_set.emplace(vec_add(ps.points[i].coords, ps.points[j].coords), 0);

  std::vector<const RatVec*> sums;
  sums.reserve(sum_set.size());
  for (const auto& kv : sum_set) sums.push_back(&kv.first);

  std::optional<Rat> best;
  for (std::size_t a = 0; a < sums.size(); ++a)
    for (std::size_t b = a + 1; b < sums.size(); ++b) {
      Rat d2 = vec_norm_sq(vec_sub(*sums[a], *sums[b]));
      if (sgn(d2) == 0) continue;
      if (!best || cmp(d2, *best) < 0) best = d2;
    }
  if (!best) return std::nullopt;
  EnergyGap gap;
  gap.norm_sq = *best;
  gap.norm = std::sqrt(best->get_d());
  return gap;
}

}  // namespace drlab
