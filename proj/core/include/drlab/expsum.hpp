#pragma once

// Exponential sums F(x) = sum_{xi in Lambda} a_xi e(xi . x), e(a) = e^{2 pi i a},
// and their normalized L^p averages over balls and tori.

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

#include "drlab/pointset.hpp"

namespace drlab {

struct Coefficients {
  std::vector<std::complex<double>> values;  // aligned by index with a PointSet
};

Coefficients unit_coefficients(std::size_t count);
double coeff_l2_norm(const Coefficients& a);

enum class LpMethod { monte_carlo, grid, torus_grid };

std::string lp_method_name(LpMethod m);

struct LpEstimate {
  double p = 2.0;
  double R = 0.0;  // ball radius; meaningless when torus is set
  bool torus = false;
  std::vector<double> center;
  double value = 0.0;
  // 95% confidence half-width for monte_carlo (CLT + delta method through the
  // 1/p power); 0 for exact torus grids; 0 with a warning for ball grids.
  double error = 0.0;
  LpMethod method = LpMethod::monte_carlo;
  std::int64_t samples = 0;
  std::vector<std::string> warnings;
};

// F(x) with compensated (Neumaier) accumulation.
std::complex<double> eval_sum(const PointSet& ps, const Coefficients& a,
                              const std::vector<double>& x);

// ( |B_R|^{-1} int_{B_R(center)} |F|^p )^{1/p}.
// monte_carlo: `samples` uniform points in the ball (rejection from the
// bounding cube, deterministic in seed), CLT error bar. grid: midpoint
// lattice of the bounding cube restricted to the ball, no error bar.
LpEstimate lp_average_ball(const PointSet& ps, const Coefficients& a, double p, double R,
                           const std::vector<double>& center, LpMethod method,
                           std::int64_t samples, std::uint64_t seed);

// || F ||_{L^p(T^n)} for integer-coordinate Lambda and even p, by uniform-grid
// averaging, which is exact (up to rounding) once grid_per_dim > p * max|coord|;
// a coarser grid raises AliasingError rather than silently aliasing.
LpEstimate lp_norm_torus_grid(const PointSet& ps, const Coefficients& a, int p,
                              long grid_per_dim);

// Monte Carlo fallback for torus norms at odd/fractional p >= 1.
LpEstimate lp_norm_torus_mc(const PointSet& ps, const Coefficients& a, double p,
                            std::int64_t samples, std::uint64_t seed);

// Torus Schrodinger flow with frequency weights theta_i:
//   e^{it Delta} phi (x, t) = sum_xi phihat(xi) e(x.xi + t sum_i theta_i xi_i^2)
struct StrichartzCoeff {
  std::vector<long> xi;  // n-1 integers in [-N, N]
  std::complex<double> a;
};

struct StrichartzSpec {
  int n = 3;  // ambient dimension; the spatial torus is T^{n-1}
  long N = 1;
  std::vector<StrichartzCoeff> coeffs;
  std::vector<double> thetas;  // n-1 values, each in (1/2, 2)
  int p = 4;                   // even
  double interval_length = 1.0;
  long space_grid = 0;  // 0 = auto: p*N + 1 (exact for |F|^p in x)
  long time_grid = 0;   // 0 = auto
};

struct StrichartzResult {
  // value = || e^{itDelta} phi ||_{L^p(T^{n-1} x [0, |I|])}
  LpEstimate estimate;
  // The same norm through the substitution eta_i = theta_i^{1/2} xi_i / (4N):
  // a normalized average of the paraboloid sum over one spatial period times
  // the rescaled time box. Agrees with `value` up to quadrature error.
  double rescaled_value = 0.0;
  double time_step = 0.0;
  double time_refinement_delta = 0.0;  // |value(Mt) - value(Mt/2)|
};

StrichartzResult strichartz_norm(const StrichartzSpec& spec);

struct ExponentFit {
  std::vector<std::pair<double, double>> log_pairs;  // (log scale, log value)
  double slope = 0.0;
  double intercept = 0.0;
  double residual = 0.0;  // max |deviation| from the fitted line
};

// Least-squares line through (log scale, log value). Requires >= 2 distinct
// positive scales and positive values.
ExponentFit fit_exponent(const std::vector<std::pair<double, double>>& scale_value_pairs);

}  // namespace drlab
