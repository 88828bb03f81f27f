#include "sdf/sampling/variates.hpp"

#include <algorithm>
#include <cmath>

#include "sdf/core/errors.hpp"

namespace sdf::sampling {
namespace {

Count poisson_inversion(double mean, SeededRng& rng) {
  for (;;) {
    double u = rng.uniform();
    double p = std::exp(-mean);
    double cdf = p;
    Count x = 0;
    while (u > cdf) {
      ++x;
      p *= mean / static_cast<double>(x);
      cdf += p;
      if (p < 1e-300) break;
    }
    if (u <= cdf) return x;
    // u fell into the rounding gap between the accumulated cdf and 1.
  }
}

Count poisson_ptrs(double mean, SeededRng& rng) {
  const double log_mean = std::log(mean);
  const double b = 0.931 + 2.53 * std::sqrt(mean);
  const double a = -0.059 + 0.02483 * b;
  const double inv_alpha = 1.1239 + 1.1328 / (b - 3.4);
  const double v_r = 0.9277 - 3.6224 / (b - 2.0);
  for (;;) {
    const double u = rng.uniform() - 0.5;
    const double v = rng.uniform();
    const double us = 0.5 - std::abs(u);
    if (us <= 0.0) continue;
    const double kd = std::floor((2.0 * a / us + b) * u + mean + 0.43);
    if (us >= 0.07 && v <= v_r) return static_cast<Count>(kd);
    if (kd < 0.0 || (us < 0.013 && v > us)) continue;
    const double lhs = std::log(v * inv_alpha / (a / (us * us) + b));
    const double rhs = -mean + kd * log_mean - std::lgamma(kd + 1.0);
    if (lhs <= rhs) return static_cast<Count>(kd);
  }
}

// prob <= 1/2, trials * prob <= 30.
Count binomial_inversion(Count trials, double prob, SeededRng& rng) {
  const double q = 1.0 - prob;
  const double s = prob / q;
  const double a = static_cast<double>(trials + 1) * s;
  const double r0 = std::exp(static_cast<double>(trials) * std::log1p(-prob));
  for (;;) {
    double u = rng.uniform();
    double r = r0;
    Count x = 0;
    while (u > r) {
      u -= r;
      ++x;
      if (x > trials) break;
      r *= a / static_cast<double>(x) - s;
    }
    if (x <= trials) return x;
  }
}

// prob <= 1/2, trials * prob > 30.
Count binomial_btrs(Count trials, double prob, SeededRng& rng) {
  const double n = static_cast<double>(trials);
  const double q = 1.0 - prob;
  const double spq = std::sqrt(n * prob * q);
  const double b = 1.15 + 2.53 * spq;
  const double a = -0.0873 + 0.0248 * b + 0.01 * prob;
  const double c = n * prob + 0.5;
  const double v_r = 0.92 - 4.2 / b;
  const double alpha = (2.83 + 5.1 / b) * spq;
  const double lpq = std::log(prob / q);
  const double m = std::floor((n + 1.0) * prob);
  const double h = std::lgamma(m + 1.0) + std::lgamma(n - m + 1.0);
  for (;;) {
    const double u = rng.uniform() - 0.5;
    double v = rng.uniform();
    const double us = 0.5 - std::abs(u);
    if (us <= 0.0) continue;
    const double kd = std::floor((2.0 * a / us + b) * u + c);
    if (kd < 0.0 || kd > n) continue;
    if (us >= 0.07 && v <= v_r) return static_cast<Count>(kd);
    v = std::log(v * alpha / (a / (us * us) + b));
    if (v <= h - std::lgamma(kd + 1.0) - std::lgamma(n - kd + 1.0) + (kd - m) * lpq) {
      return static_cast<Count>(kd);
    }
  }
}

}  // namespace

Count sample_poisson(double mean, SeededRng& rng) {
  if (!(mean >= 0.0) || !std::isfinite(mean)) {
    throw ArgumentError("sample_poisson: mean must be finite and nonnegative");
  }
  if (mean == 0.0) return 0;
  return mean < 10.0 ? poisson_inversion(mean, rng) : poisson_ptrs(mean, rng);
}

Count sample_binomial(Count trials, double prob, SeededRng& rng) {
  if (trials < 0) throw ArgumentError("sample_binomial: trials must be nonnegative");
  if (std::isnan(prob)) throw ArgumentError("sample_binomial: probability is NaN");
  if (trials == 0 || prob <= 0.0) return 0;
  if (prob >= 1.0) return trials;
  const bool flip = prob > 0.5;
  const double p = flip ? 1.0 - prob : prob;
  const Count k = static_cast<double>(trials) * p <= 30.0 ? binomial_inversion(trials, p, rng)
                                                          : binomial_btrs(trials, p, rng);
  return flip ? trials - k : k;
}

Counts sample_multinomial(const CellProbabilities<double>& p, Count n, SeededRng& rng) {
  if (n < 0) throw ArgumentError("sample_multinomial: n must be nonnegative");
  const Index cells = p.cells();
  Counts out = Counts::Zero(cells);
  // Tail masses sum_{j >= i} p_j, accumulated from the right.
  Vector<double> tail(cells);
  double acc = 0.0;
  for (Index i = cells - 1; i >= 0; --i) {
    acc += p[i];
    tail(i) = acc;
  }
  Count remaining = n;
  for (Index i = 0; i + 1 < cells && remaining > 0; ++i) {
    if (!(tail(i) > 0.0)) break;
    const double prob = std::clamp(p[i] / tail(i), 0.0, 1.0);
    out(i) = sample_binomial(remaining, prob, rng);
    remaining -= out(i);
  }
  out(cells - 1) += remaining;
  return out;
}

Counts sample_poissonized(const CellProbabilities<double>& p, Count n, SeededRng& rng) {
  if (n < 0) throw ArgumentError("sample_poissonized: n must be nonnegative");
  Counts out(p.cells());
  for (Index i = 0; i < p.cells(); ++i) out(i) = sample_poisson(static_cast<double>(n) * p[i], rng);
  return out;
}

}  // namespace sdf::sampling
