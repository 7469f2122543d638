#pragma once

// Frequency point sets on model surfaces: the truncated paraboloid
// {(xi, |xi|^2)}, the unit sphere, or no surface at all. Coordinates are
// exact rationals; surface membership and separation are exact predicates.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "drlab/rational.hpp"

namespace drlab {

enum class Surface { paraboloid, sphere, none };

std::string surface_name(Surface s);
Surface surface_from_name(const std::string& name);

struct FrequencyPoint {
  RatVec coords;
  // Sphere points are either exactly on the sphere (rational points) or
  // carry this tag and are only float-close to it.
  bool float_tolerance = false;

  std::size_t dim() const { return coords.size(); }
};

// On-surface predicates for a single point (exact; tolerance-tagged sphere
// points are accepted within 1e-9 of the sphere).
bool on_paraboloid(const FrequencyPoint& p);
bool on_sphere(const FrequencyPoint& p);

struct PointSet {
  int n = 2;  // ambient dimension
  Surface surface = Surface::none;
  std::optional<Rat> delta;  // claimed separation is delta^{1/2}
  std::vector<FrequencyPoint> points;

  std::size_t size() const { return points.size(); }

  // Enforces the full invariant set: distinctness, dimension agreement,
  // surface membership, and pairwise squared distance >= delta when a delta
  // is claimed. Throws ParameterError on any violation.
  void validate() const;
};

// A dyadic cube of the standard finitely-overlapping cover of the
// paraboloid's parameter box: center on (side/2) Z^{n-1} inside
// [-1/2,1/2]^{n-1}, full side `side` = delta^{1/2}.
struct Cap {
  RatVec center;  // n-1 entries
  Rat side;
  std::vector<std::size_t> members;  // indices into the source PointSet
};

// All integer points (xi_1,...,xi_{n-1}, sum xi_i^2) with |xi_i| <= N.
// Cardinality (2N+1)^{n-1}. Guards: 2 <= n <= 6, (2N+1)^{n-1} <= 10^6.
PointSet gen_lattice_paraboloid(int n, long N);

// Deterministic jittered net on the parameter box [-1/2,1/2]^{n-1}, lifted to
// the surface, greedily thinned to pairwise squared distance >= delta, and
// exactly re-verified before return. Parameter coordinates are snapped to
// denominator 2^20; the lift is exact (paraboloid: append |xi|^2; sphere:
// rational stereographic map), so every returned point is exactly on-surface.
PointSet gen_separated_sample(Surface surface, int n, const Rat& delta, std::uint64_t seed);

// True iff every pair of points has squared Euclidean distance >= delta.
bool check_separation(const PointSet& ps, const Rat& delta);

// Partition of a paraboloid set into caps of side delta^{1/2}. A point on the
// overlap of several cubes goes to the lexicographically smallest center.
// Requires delta in (0,1] with a rational square root; every point's first
// n-1 coordinates must be covered by the [-1/2,1/2]^{n-1} center grid.
// Empty caps are omitted; the result is sorted by center.
std::vector<Cap> cap_partition(const PointSet& ps, const Rat& delta);

struct EnergyGap {
  double norm = 0.0;  // min |eta1+eta2-eta3-eta4| over nonzero combinations
  Rat norm_sq;        // exact squared value
};

// Minimum nonzero norm of eta1+eta2-eta3-eta4 over the set; nullopt when
// every combination vanishes (only for |Lambda| = 1). Guard |Lambda| <= 200.
// Reduced to pairs of distinct pairwise sums, so O(D^2) with D <= m(m+1)/2.
std::optional<EnergyGap> min_energy_gap(const PointSet& ps);

}  // namespace drlab
