#include "drlab/expsum.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "drlab/errors.hpp"
#include "drlab/rng.hpp"

namespace drlab {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

// Neumaier compensated accumulator.
struct Kahan {
  double sum = 0.0, comp = 0.0;
  void add(double x) {
    const double t = sum + x;
    comp += std::abs(sum) >= std::abs(x) ? (sum - t) + x : (x - t) + sum;
    sum = t;
  }
  double get() const { return sum + comp; }
};

std::vector<std::vector<double>> coords_as_doubles(const PointSet& ps) {
  std::vector<std::vector<double>> out(ps.size(), std::vector<double>(ps.n));
  for (std::size_t i = 0; i < ps.size(); ++i)
    for (int j = 0; j < ps.n; ++j) out[i][j] = ps.points[i].coords[j].get_d();
  return out;
}

void check_pair(const PointSet& ps, const Coefficients& a) {
  if (a.values.size() != ps.size())
    throw ParameterError("coefficient vector length does not match |Lambda|");
}

std::complex<double> eval_rows(const std::vector<std::vector<double>>& pts,
                               const Coefficients& a, const std::vector<double>& x) {
  Kahan re, im;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    double phase = 0.0;
    for (std::size_t j = 0; j < x.size(); ++j) phase += pts[i][j] * x[j];
    const double c = std::cos(kTwoPi * phase), s = std::sin(kTwoPi * phase);
    re.add(a.values[i].real() * c - a.values[i].imag() * s);
    im.add(a.values[i].real() * s + a.values[i].imag() * c);
  }
  return {re.get(), im.get()};
}

struct MeanVar {
  double mean = 0.0, sd = 0.0;
};

// Welford, deterministic single pass.
class Welford {
 public:
  void add(double x) {
    ++n_;
    const double d = x - mean_;
    mean_ += d / static_cast<double>(n_);
    m2_ += d * (x - mean_);
  }
  MeanVar result() const {
    MeanVar mv;
    mv.mean = mean_;
    mv.sd = n_ > 1 ? std::sqrt(m2_ / static_cast<double>(n_ - 1)) : 0.0;
    return mv;
  }

 private:
  std::int64_t n_ = 0;
  double mean_ = 0.0, m2_ = 0.0;
};

// 95% half-width of mean(|F|^p), pushed through v -> v^{1/p} by the delta
// method.
double delta_method_halfwidth(double mean, double sd, std::int64_t samples, double p) {
  if (mean <= 0.0 || samples < 2) return 0.0;
  const double half_mean = 1.96 * sd / std::sqrt(static_cast<double>(samples));
  return half_mean * std::pow(mean, 1.0 / p - 1.0) / p;
}

}  // namespace

Coefficients unit_coefficients(std::size_t count) {
  Coefficients a;
  a.values.assign(count, std::complex<double>(1.0, 0.0));
  return a;
}

double coeff_l2_norm(const Coefficients& a) {
  Kahan acc;
  for (const auto& c : a.values) acc.add(std::norm(c));
  return std::sqrt(acc.get());
}

std::string lp_method_name(LpMethod m) {
  switch (m) {
    case LpMethod::monte_carlo: return "monte_carlo";
    case LpMethod::grid: return "grid";
    case LpMethod::torus_grid: return "torus_grid";
  }
  return "monte_carlo";
}

std::complex<double> eval_sum(const PointSet& ps, const Coefficients& a,
                              const std::vector<double>& x) {
  check_pair(ps, a);
  if (static_cast<int>(x.size()) != ps.n)
    throw ParameterError("eval_sum: x dimension does not match ambient dimension");
  return eval_rows(coords_as_doubles(ps), a, x);
}

LpEstimate lp_average_ball(const PointSet& ps, const Coefficients& a, double p, double R,
                           const std::vector<double>& center, LpMethod method,
                           std::int64_t samples, std::uint64_t seed) {
  check_pair(ps, a);
  if (p < 1.0) throw ParameterError("lp_average_ball: p must be >= 1");
  if (!(R > 0.0)) throw ParameterError("lp_average_ball: R must be positive");
  std::vector<double> c = center;
  if (c.empty()) c.assign(ps.n, 0.0);
  if (static_cast<int>(c.size()) != ps.n)
    throw ParameterError("lp_average_ball: center dimension mismatch");

  LpEstimate est;
  est.p = p;
  est.R = R;
  est.center = c;
  est.method = method;

  const auto pts = coords_as_doubles(ps);
  const int n = ps.n;
  std::vector<double> x(n);

  if (method == LpMethod::monte_carlo) {
    if (samples < 100) throw ParameterError("lp_average_ball: monte_carlo needs samples >= 100");
    Rng rng(seed);
    Welford w;
    for (std::int64_t s = 0; s < samples; ++s) {
      // rejection from the bounding cube
      while (true) {
        double r2 = 0.0;
        for (int j = 0; j < n; ++j) {
          const double u = rng.uniform(-R, R);
          x[j] = c[j] + u;
          r2 += u * u;
        }
        if (r2 <= R * R) break;
      }
      w.add(std::pow(std::abs(eval_rows(pts, a, x)), p));
    }
    const MeanVar mv = w.result();
    est.samples = samples;
    est.value = std::pow(mv.mean, 1.0 / p);
    est.error = delta_method_halfwidth(mv.mean, mv.sd, samples, p);
    return est;
  }

  if (method == LpMethod::grid) {
    // per_dim >= 3 keeps a near-center node inside the ball in any dimension
    const long per_dim =
        std::max(3L, static_cast<long>(std::floor(std::pow(static_cast<double>(samples),
                                                           1.0 / static_cast<double>(n)))));
    Kahan acc;
    std::int64_t inside = 0;
    std::vector<long> idx(n, 0);
    const double step = 2.0 * R / static_cast<double>(per_dim);
    while (true) {
      double r2 = 0.0;
      for (int j = 0; j < n; ++j) {
        const double u = -R + (static_cast<double>(idx[j]) + 0.5) * step;
        x[j] = c[j] + u;
        r2 += u * u;
      }
      if (r2 <= R * R) {
        acc.add(std::pow(std::abs(eval_rows(pts, a, x)), p));
        ++inside;
      }
      int j = 0;
      while (j < n && idx[j] == per_dim - 1) idx[j++] = 0;
      if (j == n) break;
      ++idx[j];
    }
    if (inside == 0) throw ParameterError("lp_average_ball: grid too coarse, no node in ball");
    est.samples = inside;
    est.value = std::pow(acc.get() / static_cast<double>(inside), 1.0 / p);
    est.error = 0.0;
    est.warnings.push_back("grid method: no quadrature error bound reported");
    return est;
  }

  throw ParameterError("lp_average_ball: use lp_norm_torus_grid for the torus");
}

LpEstimate lp_norm_torus_grid(const PointSet& ps, const Coefficients& a, int p,
                              long grid_per_dim) {
  check_pair(ps, a);
  if (p < 2 || p % 2 != 0)
    throw ParameterError("lp_norm_torus_grid: p must be an even integer >= 2");

  const int n = ps.n;
  const std::size_t m = ps.size();
  long max_abs = 0;
  std::vector<std::vector<long>> freq(m, std::vector<long>(n));
  for (std::size_t i = 0; i < m; ++i)
    for (int j = 0; j < n; ++j) {
      const Rat& q = ps.points[i].coords[j];
      if (cmp(q.get_den(), 1) != 0)
        throw ParameterError("lp_norm_torus_grid: coordinates must be integers");
      if (!q.get_num().fits_slong_p())
        throw ParameterError("lp_norm_torus_grid: coordinate too large");
      freq[i][j] = q.get_num().get_si();
      max_abs = std::max(max_abs, std::labs(freq[i][j]));
    }

  // |F|^p is a trigonometric polynomial of per-coordinate degree <= p*max|xi|;
  // the uniform grid average is exact iff no nonzero frequency reduces to 0
  // mod the grid size.
  if (grid_per_dim <= static_cast<long>(p) * max_abs)
    throw AliasingError("lp_norm_torus_grid: grid_per_dim must exceed p * max|coordinate| (= " +
                        std::to_string(static_cast<long>(p) * max_abs) + ")");

  const long M = grid_per_dim;
  std::vector<std::complex<double>> roots(M);
  for (long t = 0; t < M; ++t) {
    const double ang = kTwoPi * static_cast<double>(t) / static_cast<double>(M);
    roots[t] = {std::cos(ang), std::sin(ang)};
  }
  auto mod_m = [M](long v) {
    long r = v % M;
    return r < 0 ? r + M : r;
  };

  const int k = p / 2;
  Kahan acc;
  if (m == 0) {
    LpEstimate est;
    est.p = p;
    est.torus = true;
    est.method = LpMethod::torus_grid;
    est.samples = 1;
    return est;
  }

  std::vector<long> idx(n - 1, 0);   // outer dims 0..n-2
  std::vector<long> phase(m), step(m);
  for (std::size_t i = 0; i < m; ++i) step[i] = mod_m(freq[i][n - 1]);
  while (true) {
    for (std::size_t i = 0; i < m; ++i) {
      long t = 0;
      for (int j = 0; j < n - 1; ++j) t = mod_m(t + freq[i][j] % M * (idx[j] % M));
      phase[i] = t;
    }
    for (long inner = 0; inner < M; ++inner) {
      std::complex<double> F(0.0, 0.0);
      for (std::size_t i = 0; i < m; ++i) {
        F += a.values[i] * roots[phase[i]];
        phase[i] += step[i];
        if (phase[i] >= M) phase[i] -= M;
      }
      double v = std::norm(F);
      double term = v;
      for (int e = 1; e < k; ++e) term *= v;
      acc.add(term);
    }
    int j = 0;
    while (j < n - 1 && idx[j] == M - 1) idx[j++] = 0;
    if (j == n - 1) break;
    ++idx[j];
  }

  double cells = 1.0;
  for (int j = 0; j < n; ++j) cells *= static_cast<double>(M);

  LpEstimate est;
  est.p = p;
  est.torus = true;
  est.method = LpMethod::torus_grid;
  est.samples = static_cast<std::int64_t>(cells);
  est.value = std::pow(acc.get() / cells, 1.0 / static_cast<double>(p));
  est.error = 0.0;
  return est;
}

LpEstimate lp_norm_torus_mc(const PointSet& ps, const Coefficients& a, double p,
                            std::int64_t samples, std::uint64_t seed) {
  check_pair(ps, a);
  if (p < 1.0) throw ParameterError("lp_norm_torus_mc: p must be >= 1");
  if (samples < 100) throw ParameterError("lp_norm_torus_mc: samples >= 100 required");
  const auto pts = coords_as_doubles(ps);
  Rng rng(seed);
  Welford w;
  std::vector<double> x(ps.n);
  for (std::int64_t s = 0; s < samples; ++s) {
    for (int j = 0; j < ps.n; ++j) x[j] = rng.uniform01();
    w.add(std::pow(std::abs(eval_rows(pts, a, x)), p));
  }
  const MeanVar mv = w.result();
  LpEstimate est;
  est.p = p;
  est.torus = true;
  est.method = LpMethod::monte_carlo;
  est.samples = samples;
  est.value = std::pow(mv.mean, 1.0 / p);
  est.error = delta_method_halfwidth(mv.mean, mv.sd, samples, p);
  est.warnings.push_back("torus norm for non-even p falls back to monte_carlo");
  return est;
}

namespace {

// L^p norm over T^{n-1} x [0, L] of the weighted flow, exact x-grid,
// trapezoid in time with time_nodes intervals.
double strichartz_eval(const StrichartzSpec& spec, long space_nodes, long time_nodes) {
  const int d = spec.n - 1;
  const std::size_t m = spec.coeffs.size();
  const long Mx = space_nodes;
  const double L = spec.interval_length;
  const int k = spec.p / 2;

  std::vector<std::complex<double>> roots(Mx);
  for (long t = 0; t < Mx; ++t) {
    const double ang = kTwoPi * static_cast<double>(t) / static_cast<double>(Mx);
    roots[t] = {std::cos(ang), std::sin(ang)};
  }
  auto mod_m = [Mx](long v) {
    long r = v % Mx;
    return r < 0 ? r + Mx : r;
  };

  // time frequencies omega_xi = sum_i theta_i xi_i^2
  std::vector<double> omega(m);
  for (std::size_t i = 0; i < m; ++i) {
    double w = 0.0;
    for (int j = 0; j < d; ++j)
      w += spec.thetas[j] * static_cast<double>(spec.coeffs[i].xi[j]) *
           static_cast<double>(spec.coeffs[i].xi[j]);
    omega[i] = w;
  }

  // spatial part per grid node, reused across all times
  long rows = 1;
  for (int j = 0; j < d; ++j) rows *= Mx;
  std::vector<std::vector<std::complex<double>>> spatial(rows,
                                                         std::vector<std::complex<double>>(m));
  std::vector<long> idx(d, 0);
  for (long r = 0; r < rows; ++r) {
    for (std::size_t i = 0; i < m; ++i) {
      long t = 0;
      for (int j = 0; j < d; ++j) t = mod_m(t + spec.coeffs[i].xi[j] % Mx * (idx[j] % Mx));
      spatial[r][i] = spec.coeffs[i].a * roots[t];
    }
    int j = 0;
    while (j < d && idx[j] == Mx - 1) idx[j++] = 0;
    if (j < d) ++idx[j];
  }

  Kahan acc;
  std::vector<std::complex<double>> tf(m);
  for (long tn = 0; tn <= time_nodes; ++tn) {
    const double t = L * static_cast<double>(tn) / static_cast<double>(time_nodes);
    const double weight = (tn == 0 || tn == time_nodes) ? 0.5 : 1.0;
    for (std::size_t i = 0; i < m; ++i) {
      const double ang = kTwoPi * t * omega[i];
      tf[i] = {std::cos(ang), std::sin(ang)};
    }
    Kahan row;
    for (long r = 0; r < rows; ++r) {
      std::complex<double> F(0.0, 0.0);
      for (std::size_t i = 0; i < m; ++i) F += spatial[r][i] * tf[i];
      double v = std::norm(F);
      double term = v;
      for (int e = 1; e < k; ++e) term *= v;
      row.add(term);
    }
    acc.add(weight * row.get() / static_cast<double>(rows));
  }
  const double avg = acc.get() / static_cast<double>(time_nodes);
  return std::pow(L * avg, 1.0 / static_cast<double>(spec.p));
}

// Same norm through eta_i = theta_i^{1/2} xi_i / (4N): average the standard
// paraboloid-phase sum over one full spatial period and the [0, 16 N^2 L]
// time box.
double strichartz_rescaled(const StrichartzSpec& spec, long space_nodes, long time_nodes) {
  const int d = spec.n - 1;
  const std::size_t m = spec.coeffs.size();
  const double L = spec.interval_length;
  const double scale = 4.0 * static_cast<double>(spec.N);

  std::vector<std::vector<double>> eta(m, std::vector<double>(d));
  std::vector<double> eta_sq(m, 0.0);
  for (std::size_t i = 0; i < m; ++i) {
    for (int j = 0; j < d; ++j) {
      eta[i][j] = std::sqrt(spec.thetas[j]) * static_cast<double>(spec.coeffs[i].xi[j]) / scale;
      eta_sq[i] += eta[i][j] * eta[i][j];
    }
  }

  const long My = space_nodes;
  long rows = 1;
  for (int j = 0; j < d; ++j) rows *= My;
  const double yn_len = 16.0 * static_cast<double>(spec.N) * static_cast<double>(spec.N) * L;
  const int k = spec.p / 2;

  Kahan acc;
  for (long tn = 0; tn <= time_nodes; ++tn) {
    const double yn = yn_len * static_cast<double>(tn) / static_cast<double>(time_nodes);
    const double weight = (tn == 0 || tn == time_nodes) ? 0.5 : 1.0;
    Kahan row_acc;
    std::vector<long> idx(d, 0);
    for (long r = 0; r < rows; ++r) {
      std::complex<double> F(0.0, 0.0);
      for (std::size_t i = 0; i < m; ++i) {
        double phase = yn * eta_sq[i];
        for (int j = 0; j < d; ++j) {
          const double period = scale / std::sqrt(spec.thetas[j]);
          const double y = period * static_cast<double>(idx[j]) / static_cast<double>(My);
          phase += y * eta[i][j];
        }
        const double ang = kTwoPi * phase;
        F += spec.coeffs[i].a * std::complex<double>(std::cos(ang), std::sin(ang));
      }
      double v = std::norm(F);
      double term = v;
      for (int e = 1; e < k; ++e) term *= v;
      row_acc.add(term);
      int j = 0;
      while (j < d && idx[j] == My - 1) idx[j++] = 0;
      if (j < d) ++idx[j];
    }
    acc.add(weight * row_acc.get() / static_cast<double>(rows));
  }
  const double avg = acc.get() / static_cast<double>(time_nodes);
  return std::pow(L * avg, 1.0 / static_cast<double>(spec.p));
}

}  // namespace

StrichartzResult strichartz_norm(const StrichartzSpec& spec) {
  const int d = spec.n - 1;
  if (spec.n < 2) throw ParameterError("strichartz_norm: n must be >= 2");
  if (spec.p < 2 || spec.p % 2 != 0)
    throw ParameterError("strichartz_norm: p must be an even integer >= 2");
  if (!(spec.interval_length > 0.0))
    throw ParameterError("strichartz_norm: interval length must be positive");
  if (static_cast<int>(spec.thetas.size()) != d)
    throw ParameterError("strichartz_norm: need n-1 theta weights");
  for (double th : spec.thetas)
    if (!(th > 0.5 && th < 2.0))
      throw ParameterError("strichartz_norm: every theta must lie in (1/2, 2)");
  if (spec.N < 0) throw ParameterError("strichartz_norm: N must be >= 0");
  for (const StrichartzCoeff& c : spec.coeffs) {
    if (static_cast<int>(c.xi.size()) != d)
      throw ParameterError("strichartz_norm: frequency dimension mismatch");
    for (long v : c.xi)
      if (std::labs(v) > spec.N) throw ParameterError("strichartz_norm: frequency beyond N");
  }

  const long auto_space = static_cast<long>(spec.p) * std::max(1L, spec.N) + 1;
  const long Mx = spec.space_grid > 0 ? spec.space_grid : auto_space;
  if (Mx <= static_cast<long>(spec.p) * spec.N)
    throw AliasingError("strichartz_norm: space grid must exceed p*N");
  const long mt_floor = 2L * spec.p * d * std::max(1L, spec.N) * std::max(1L, spec.N) *
                        std::max(1L, static_cast<long>(std::ceil(spec.interval_length)));
  const long Mt = spec.time_grid > 0 ? std::max(2L, spec.time_grid) : std::max(128L, mt_floor);

  const double value = strichartz_eval(spec, Mx, Mt);
  const double value_half = strichartz_eval(spec, Mx, std::max(2L, Mt / 2));

  StrichartzResult result;
  result.estimate.p = spec.p;
  result.estimate.torus = true;
  result.estimate.method = LpMethod::torus_grid;
  result.estimate.value = value;
  result.estimate.error = std::abs(value - value_half);
  long rows = 1;
  for (int j = 0; j < d; ++j) rows *= Mx;
  result.estimate.samples = rows * (Mt + 1);
  result.time_step = spec.interval_length / static_cast<double>(Mt);
  result.time_refinement_delta = std::abs(value - value_half);
  result.estimate.warnings.push_back("time direction integrated by uniform grid, step " +
                                     std::to_string(result.time_step));

  if (spec.N == 0) {
    result.rescaled_value = value;  // single zero frequency: rescaling is the identity
  } else {
    result.rescaled_value = strichartz_rescaled(spec, Mx + 1, Mt);
  }
  return result;
}

ExponentFit fit_exponent(const std::vector<std::pair<double, double>>& pairs) {
  if (pairs.size() < 2) throw ParameterError("fit_exponent: need at least 2 pairs");
  ExponentFit fit;
  fit.log_pairs.reserve(pairs.size());
  for (const auto& [s, v] : pairs) {
    if (!(s > 0.0) || !(v > 0.0))
      throw ParameterError("fit_exponent: scales and values must be positive");
    fit.log_pairs.emplace_back(std::log(s), std::log(v));
  }
  double x0 = fit.log_pairs.front().first;
  bool distinct = false;
  for (const auto& [x, y] : fit.log_pairs)
    if (x != x0) distinct = true;
  if (!distinct) throw ParameterError("fit_exponent: need >= 2 distinct scales");

  double sx = 0, sy = 0;
  const double n = static_cast<double>(fit.log_pairs.size());
  for (const auto& [x, y] : fit.log_pairs) {
    sx += x;
    sy += y;
  }
  const double mx = sx / n, my = sy / n;
  double sxx = 0, sxy = 0;
  for (const auto& [x, y] : fit.log_pairs) {
    sxx += (x - mx) * (x - mx);
    sxy += (x - mx) * (y - my);
  }
  fit.slope = sxy / sxx;
  fit.intercept = my - fit.slope * mx;
  double worst = 0.0;
  for (const auto& [x, y] : fit.log_pairs)
    worst = std::max(worst, std::abs(y - (fit.slope * x + fit.intercept)));
  fit.residual = worst;
  return fit;
}

}  // namespace drlab
