#include "drlab/energy.hpp"

#include <algorithm>
#include <cmath>
#include <unordered_map>

#include "drlab/errors.hpp"
#include "drlab/expsum.hpp"
#include "drlab/rng.hpp"

namespace drlab {

namespace {

double pow_size(std::size_t m, int e) {
  double v = 1.0;
  for (int i = 0; i < e; ++i) v *= static_cast<double>(m);
  return v;
}

// All m^k ordered index k-tuples in odometer order, with their exact
// coordinate sums and sorted index multisets.
struct TupleTable {
  std::vector<std::vector<std::size_t>> indices;
  std::vector<RatVec> sums;
  std::vector<std::vector<std::size_t>> sorted;
};

TupleTable enumerate_k_tuples(const PointSet& ps, int k) {
  const std::size_t m = ps.size();
  TupleTable t;
  if (m == 0) return t;
  std::vector<std::size_t> idx(k, 0);
  while (true) {
    RatVec sum(ps.n, Rat(0));
    for (int j = 0; j < k; ++j) sum = vec_add(sum, ps.points[idx[j]].coords);
    t.indices.push_back(idx);
    t.sums.push_back(std::move(sum));
    std::vector<std::size_t> s = idx;
    std::sort(s.begin(), s.end());
    t.sorted.push_back(std::move(s));
    int j = 0;
    while (j < k && idx[j] == m - 1) idx[j++] = 0;
    if (j == k) break;
    ++idx[j];
  }
  return t;
}

}  // namespace

Int trivial_tuple_count(std::size_t m, int k) {
  // Sum over partitions (l_1 >= ... >= l_r) of k:
  //   [ m^(r) / prod_j c_j! ] * [ k! / prod_i l_i! ]^2
  // where m^(r) is the falling factorial and c_j counts repeated part sizes.
  Int total = 0;
  std::vector<int> parts;
  Int k_fact = 1;
  for (int i = 2; i <= k; ++i) k_fact *= i;

  auto emit = [&]() {
    const std::size_t r = parts.size();
    if (r > m) return;
    Int multisets = 1;
    for (std::size_t i = 0; i < r; ++i) multisets *= Int(static_cast<unsigned long>(m - i));
    int run = 1;
    Int denom = 1;
    for (std::size_t i = 1; i <= r; ++i) {
      if (i < r && parts[i] == parts[i - 1]) {
        ++run;
      } else {
        for (int j = 2; j <= run; ++j) denom *= j;
        run = 1;
      }
    }
    multisets /= denom;
    Int perms = k_fact;
    for (int p : parts) {
      Int pf = 1;
      for (int j = 2; j <= p; ++j) pf *= j;
      perms /= pf;
    }
    total += multisets * perms * perms;
  };

  // enumerate partitions of k in weakly decreasing order
  auto rec = [&](auto&& self, int remaining, int max_part) -> void {
    if (remaining == 0) {
      emit();
      return;
    }
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
      parts.push_back(p);
      self(self, remaining - p, p);
      parts.pop_back();
    }
  };
  rec(rec, k, k);
  return total;
}

EnergyReport energy_bruteforce(const PointSet& ps, int k, bool collect_witnesses) {
  if (k < 2) throw ParameterError("energy: k must be >= 2");
  const std::size_t m = ps.size();
  if (pow_size(m, 2 * k) > 1e9) throw GuardError("energy_bruteforce: |Lambda|^{2k} > 10^9");

  EnergyReport report;
  report.k = k;
  report.witnesses_collected = collect_witnesses;
  if (m == 0) return report;

  const TupleTable t = enumerate_k_tuples(ps, k);
  unsigned long value = 0, nontrivial = 0;
  for (std::size_t a = 0; a < t.sums.size(); ++a) {
    for (std::size_t b = 0; b < t.sums.size(); ++b) {
      if (!vec_equal(t.sums[a], t.sums[b])) continue;
      ++value;
      if (t.sorted[a] != t.sorted[b]) ++nontrivial;
      if (collect_witnesses) {
        if (report.witnesses.size() < kWitnessCap) {
          std::vector<std::size_t> w = t.indices[a];
          w.insert(w.end(), t.indices[b].begin(), t.indices[b].end());
          report.witnesses.push_back(std::move(w));
        } else {
          report.witnesses_truncated = true;
        }
      }
    }
  }
  report.value = Int(value);
  report.nontrivial_count = Int(nontrivial);
  return report;
}

EnergyReport energy_hashed(const PointSet& ps, int k) {
  if (k < 2) throw ParameterError("energy: k must be >= 2");
  const std::size_t m = ps.size();
  if (pow_size(m, k) > 1e8) throw GuardError("energy_hashed: |Lambda|^k > 10^8");

  EnergyReport report;
  report.k = k;
  if (m == 0) return report;

  // Multiset of k-fold ordered sums; keys are canonical exact rationals.
  std::unordered_map<RatVec, unsigned long, RatVecHash, RatVecEq> counts;
  counts.reserve(static_cast<std::size_t>(pow_size(m, k)));

  std::vector<std::size_t> idx(k, 0);
  // partial[j] = sum of the first j chosen points
  std::vector<RatVec> partial(k + 1, RatVec(ps.n, Rat(0)));
  int level = 0;
  while (true) {
    while (level < k) {
      partial[level + 1] = vec_add(partial[level], ps.points[idx[level]].coords);
      ++level;
    }
    ++counts[partial[k]];
    // advance odometer, reusing prefixes
    int j = k - 1;
    while (j >= 0 && idx[j] == m - 1) idx[j--] = 0;
    if (j < 0) break;
    ++idx[j];
    level = j;
  }

  Int value = 0;
  for (const auto& [sum, mult] : counts) value += Int(mult) * Int(mult);
  report.value = value;
  report.nontrivial_count = value - trivial_tuple_count(m, k);
  return report;
}

QuadrupleList additive_quadruples(const PointSet& ps) {
  const std::size_t m = ps.size();
  if (pow_size(m, 2) > 1e8) throw GuardError("additive_quadruples: |Lambda|^2 > 10^8");

  QuadrupleList out;
  out.total_count = 0;
  if (m == 0) return out;

  std::unordered_map<RatVec, std::vector<std::pair<std::size_t, std::size_t>>, RatVecHash,
                     RatVecEq>
      groups;
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j)
      groups[vec_add(ps.points[i].coords, ps.points[j].coords)].emplace_back(i, j);

  auto same_multiset = [](std::pair<std::size_t, std::size_t> a,
                          std::pair<std::size_t, std::size_t> b) {
    return (a.first == b.first && a.second == b.second) ||
           (a.first == b.second && a.second == b.first);
  };

  for (const auto& [sum, pairs] : groups) {
    // trivial pairs inside one sum class: same unordered index pair
    unsigned long trivial = 0;
    for (const auto& p : pairs) trivial += p.first == p.second ? 1 : 2;
    out.total_count += Int(static_cast<unsigned long>(pairs.size())) *
                           Int(static_cast<unsigned long>(pairs.size())) -
                       Int(trivial);
    if (out.truncated) continue;
    for (const auto& left : pairs) {
      for (const auto& right : pairs) {
        if (same_multiset(left, right)) continue;
        if (out.quadruples.size() >= kWitnessCap) {
          out.truncated = true;
          break;
        }
        out.quadruples.push_back({left.first, left.second, right.first, right.second});
      }
      if (out.truncated) break;
    }
  }
  return out;
}

SweepResult energy_sweep(const SweepSpec& spec) {
  if (spec.k < 2) throw ParameterError("energy_sweep: k must be >= 2");
  const PointSet lattice = gen_lattice_paraboloid(spec.n, spec.N);

  SweepResult result;
  std::vector<std::pair<double, double>> pairs;
  for (std::size_t size : spec.sizes) {
    if (size == 0 || size > lattice.size())
      throw ParameterError("energy_sweep: subset size out of range for the lattice");
    // deterministic subset: seeded Fisher-Yates prefix
    std::vector<std::size_t> order(lattice.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    Rng rng(hash_combine(spec.seed, size));
    for (std::size_t i = order.size() - 1; i > 0; --i)
      std::swap(order[i], order[rng.below(i + 1)]);

    PointSet subset;
    subset.n = lattice.n;
    subset.surface = lattice.surface;
    for (std::size_t i = 0; i < size; ++i) subset.points.push_back(lattice.points[order[i]]);

    EnergyReport er = energy_hashed(subset, spec.k);
    result.points.push_back({size, er.value});
    pairs.emplace_back(static_cast<double>(size), mpz_get_d(er.value.get_mpz_t()));
  }

  const ExponentFit fit = fit_exponent(pairs);
  result.slope = fit.slope;
  result.intercept = fit.intercept;
  result.residual = fit.residual;
  return result;
}

}  // namespace drlab
