#include "drlab/rational.hpp"

#include <cmath>
#include <cstdlib>

#include "drlab/errors.hpp"

namespace drlab {

Rat parse_rational(const std::string& text) {
  if (text.empty()) throw ParameterError("empty rational literal");
  mpq_t raw;
  mpq_init(raw);
  if (mpq_set_str(raw, text.c_str(), 10) != 0) {
    mpq_clear(raw);
    throw ParameterError("malformed rational literal: '" + text + "'");
  }
  if (mpz_sgn(mpq_denref(raw)) == 0) {
    mpq_clear(raw);
    throw ParameterError("zero denominator in rational literal: '" + text + "'");
  }
  mpq_canonicalize(raw);
  Rat out(raw);
  mpq_clear(raw);
  return out;
}

std::string format_rational(const Rat& q) {
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Rat snap_to_grid(double x) {
  const double den = std::ldexp(1.0, kSnapDenominatorLog2);
  const long long num = std::llround(x * den);
  Rat q(Int(num), Int(1) << kSnapDenominatorLog2);
  q.canonicalize();
  return q;
}

std::optional<Rat> exact_sqrt(const Rat& q) {
  if (sgn(q) < 0) return std::nullopt;
  const Int& num = q.get_num();
  const Int& den = q.get_den();
  if (mpz_perfect_square_p(num.get_mpz_t()) == 0) return std::nullopt;
  if (mpz_perfect_square_p(den.get_mpz_t()) == 0) return std::nullopt;
  Int rn, rd;
  mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
  mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
  return Rat(rn, rd);  // already in lowest terms since num/den was
}

std::uint64_t hash_combine(std::uint64_t seed, std::uint64_t value) noexcept {
  // splitmix64-style mix; order-sensitive.
  std::uint64_t x = seed ^ (value + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
  x ^= x >> 30;
  x *= 0xbf58476d1ce4e5b9ULL;
  x ^= x >> 27;
  x *= 0x94d049bb133111ebULL;
  x ^= x >> 31;
  return x;
}

std::uint64_t hash_int(const Int& z) noexcept {
  const mpz_srcptr p = z.get_mpz_t();
  std::uint64_t h = static_cast<std::uint64_t>(mpz_sgn(p) + 2);
  const std::size_t limbs = mpz_size(p);
  for (std::size_t i = 0; i < limbs; ++i)
    h = hash_combine(h, static_cast<std::uint64_t>(mpz_getlimbn(p, i)));
  return h;
}

std::uint64_t hash_rational(const Rat& q) noexcept {
  return hash_combine(hash_int(q.get_num()), hash_int(q.get_den()));
}

std::uint64_t RatVecHash::operator()(const RatVec& v) const noexcept {
  std::uint64_t h = 0x3c6ef372fe94f82bULL ^ v.size();
  for (const Rat& q : v) h = hash_combine(h, hash_rational(q));
  return h;
}

RatVec vec_add(const RatVec& a, const RatVec& b) {
  RatVec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

RatVec vec_sub(const RatVec& a, const RatVec& b) {
  RatVec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
  return out;
}

Rat vec_dot(const RatVec& a, const RatVec& b) {
  Rat acc(0);
  for (std::size_t i = 0; i < a.size(); ++i) acc += a[i] * b[i];
  return acc;
}

Rat vec_norm_sq(const RatVec& a) { return vec_dot(a, a); }

bool vec_equal(const RatVec& a, const RatVec& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (cmp(a[i], b[i]) != 0) return false;
  return true;
}

bool vec_less(const RatVec& a, const RatVec& b) {
  const std::size_t n = std::min(a.size(), b.size());
  for (std::size_t i = 0; i < n; ++i) {
    const int c = cmp(a[i], b[i]);
    if (c != 0) return c < 0;
  }
  return a.size() < b.size();
}

}  // namespace drlab
