#pragma once

// Exact rational scalars and coordinate vectors. Everything that feeds an
// equality test (energy counting, concyclicity, incidences) stays in mpq;
// doubles appear only at the quadrature boundary.

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace drlab {

using Rat = mpq_class;
using Int = mpz_class;
using RatVec = std::vector<Rat>;

// Parses "num/den" or a bare integer. Canonicalizes; rejects den == 0.
Rat parse_rational(const std::string& text);

// Always "num/den" with positive denominator, lowest terms ("0/1", "-1/2").
std::string format_rational(const Rat& q);

// round(x * 2^20) / 2^20, canonical. Keeps randomly generated coordinates on
// a bounded-denominator grid so exact arithmetic downstream stays cheap.
Rat snap_to_grid(double x);
inline constexpr long kSnapDenominatorLog2 = 20;

// Exact square root if q is the square of a rational, nullopt otherwise.
std::optional<Rat> exact_sqrt(const Rat& q);

std::uint64_t hash_int(const Int& z) noexcept;
std::uint64_t hash_rational(const Rat& q) noexcept;
std::uint64_t hash_combine(std::uint64_t seed, std::uint64_t value) noexcept;

RatVec vec_add(const RatVec& a, const RatVec& b);
RatVec vec_sub(const RatVec& a, const RatVec& b);
Rat vec_dot(const RatVec& a, const RatVec& b);
Rat vec_norm_sq(const RatVec& a);
bool vec_equal(const RatVec& a, const RatVec& b);
// Lexicographic, for deterministic tie-breaking.
bool vec_less(const RatVec& a, const RatVec& b);

struct RatVecHash {
  std::uint64_t operator()(const RatVec& v) const noexcept;
};
struct RatVecEq {
  bool operator()(const RatVec& a, const RatVec& b) const { return vec_equal(a, b); }
};

}  // namespace drlab
