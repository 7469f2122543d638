#pragma once

// k-fold additive energies, exactly.
//
//   E_k(Lambda) = #{ (l_1,...,l_2k) in Lambda^{2k} :
//                    l_1 + ... + l_k = l_{k+1} + ... + l_{2k} }
//
// The count is over ORDERED 2k-tuples; off-by-symmetry factors are the
// classic bug here, so every report records that convention. Equality is
// exact rational vector equality, never floating point.

#include <array>
#include <cstdint>
#include <vector>

#include "drlab/pointset.hpp"
#include "drlab/rational.hpp"

namespace drlab {

inline constexpr std::size_t kWitnessCap = 100000;

struct EnergyReport {
  int k = 2;
  Int value;             // exact ordered-tuple count
  Int nontrivial_count;  // tuples whose two k-multisets differ
  bool witnesses_collected = false;
  bool witnesses_truncated = false;
  // Each witness is a 2k-tuple of point indices, left half then right half.
  std::vector<std::vector<std::size_t>> witnesses;
};

// Literal enumeration of all |Lambda|^{2k} ordered tuples (precomputed k-fold
// sums, pairwise exact comparison). Guard |Lambda|^{2k} <= 10^9. This is the
// oracle the hashed path is tested against.
EnergyReport energy_bruteforce(const PointSet& ps, int k, bool collect_witnesses = false);

// Multiset of k-fold ordered sums keyed by exact coordinates;
// E_k = sum_s m(s)^2. Guard |Lambda|^k <= 10^8.
EnergyReport energy_hashed(const PointSet& ps, int k);

struct QuadrupleList {
  // Ordered (i,j,k,l) with eta_i + eta_j = eta_k + eta_l and {i,j} != {k,l}
  // as multisets.
  std::vector<std::array<std::size_t, 4>> quadruples;
  bool truncated = false;
  Int total_count;  // exact even when the list is capped
};

QuadrupleList additive_quadruples(const PointSet& ps);

// Number of ordered 2k-tuples over m distinct points whose two k-multisets
// coincide (2m^2 - m for k = 2). These are the "trivial" solutions that every
// set has regardless of its additive structure.
Int trivial_tuple_count(std::size_t m, int k);

struct SweepSpec {
  int n = 3;        // ambient dimension of the lattice paraboloid P^{n-1}(N)
  long N = 10;      // lattice truncation
  int k = 2;
  std::vector<std::size_t> sizes;  // subset sizes, each <= (2N+1)^{n-1}
  std::uint64_t seed = 0;
};

struct SweepPoint {
  std::size_t size = 0;
  Int energy;
};

struct SweepResult {
  std::vector<SweepPoint> points;
  double slope = 0.0;
  double intercept = 0.0;
  double residual = 0.0;
};

// Runs energy_hashed over seeded random subsets of P^{n-1}(N) of the given
// sizes and fits log E_k against log |Lambda|.
SweepResult energy_sweep(const SweepSpec& spec);

}  // namespace drlab
