// paradox/math_util.hpp -- numeric helpers shared across the library:
// Pearson correlation accumulators, exact binomial tails, the inverse
// normal CDF, and deterministic RNG substream derivation.
#pragma once

#include <cmath>
#include <cstdint>
#include <limits>
#include <optional>
#include <random>
#include <span>
#include <stdexcept>
#include <vector>

namespace paradox {

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Independent deterministic generator for (seed, stream). Used wherever an
// operation fans out into replicates or per-degree-class loops, so results
// do not depend on evaluation order.
inline std::mt19937_64 substream_rng(std::uint64_t seed, std::uint64_t stream = 0) {
  return std::mt19937_64(splitmix64(splitmix64(seed) ^ splitmix64(~stream)));
}

// Pearson correlation over integer-valued samples with exact integer sums.
// Zero variance on either margin is reported as nullopt, never as 0.
class PearsonIntAccumulator {
 public:
  void add(long long x, long long y) {
    ++count_;
    sx_ += x;
    sy_ += y;
    sxx_ += static_cast<__int128>(x) * x;
    syy_ += static_cast<__int128>(y) * y;
    sxy_ += static_cast<__int128>(x) * y;
  }

  [[nodiscard]] std::optional<double> correlation() const {
    if (count_ < 2) return std::nullopt;
    const __int128 num = static_cast<__int128>(count_) * sxy_ -
                         static_cast<__int128>(sx_) * sy_;
    const __int128 vx = static_cast<__int128>(count_) * sxx_ -
                        static_cast<__int128>(sx_) * sx_;
    const __int128 vy = static_cast<__int128>(count_) * syy_ -
                        static_cast<__int128>(sy_) * sy_;
    if (vx <= 0 || vy <= 0) return std::nullopt;
    if (vx == vy) {
      // symmetric accumulation (both edge orientations): exact ratio
      return static_cast<double>(num) / static_cast<double>(vx);
    }
    const long double den = std::sqrt(static_cast<long double>(vx) *
                                      static_cast<long double>(vy));
    return static_cast<double>(static_cast<long double>(num) / den);
  }

  [[nodiscard]] long long count() const { return count_; }

 private:
  long long count_ = 0;
  long long sx_ = 0, sy_ = 0;
  __int128 sxx_ = 0, syy_ = 0, sxy_ = 0;
};

// Pearson correlation for real-valued samples. Constant margins are detected
// exactly (min == max) and reported as nullopt.
inline std::optional<double> pearson(std::span<const double> xs,
                                     std::span<const double> ys) {
  if (xs.size() != ys.size()) throw std::invalid_argument("pearson: length mismatch");
  const std::size_t n = xs.size();
  if (n < 2) return std::nullopt;
  double xmin = xs[0], xmax = xs[0], ymin = ys[0], ymax = ys[0];
  long double sx = 0, sy = 0;
  for (std::size_t i = 0; i < n; ++i) {
    xmin = std::min(xmin, xs[i]);
    xmax = std::max(xmax, xs[i]);
    ymin = std::min(ymin, ys[i]);
    ymax = std::max(ymax, ys[i]);
    sx += xs[i];
    sy += ys[i];
  }
  if (xmin == xmax || ymin == ymax) return std::nullopt;
  const long double mx = sx / n, my = sy / n;
  long double cov = 0, vx = 0, vy = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const long double dx = xs[i] - mx, dy = ys[i] - my;
    cov += dx * dy;
    vx += dx * dx;
    vy += dy * dy;
  }
  if (vx <= 0 || vy <= 0) return std::nullopt;
  return static_cast<double>(cov / std::sqrt(vx * vy));
}

// P(Binomial(k, p) = j), evaluated in log space so large k cannot underflow.
inline double binomial_pmf(int k, int j, double p) {
  if (j < 0 || j > k) return 0.0;
  if (p <= 0.0) return j == 0 ? 1.0 : 0.0;
  if (p >= 1.0) return j == k ? 1.0 : 0.0;
  const long double lg = std::lgamma(k + 1.0L) - std::lgamma(j + 1.0L) -
                         std::lgamma(k - j + 1.0L) +
                         j * std::log(static_cast<long double>(p)) +
                         (k - j) * std::log1p(-static_cast<long double>(p));
  return static_cast<double>(std::exp(lg));
}

// P(Binomial(k, p) > k/2): probability that a strict majority of k
// independent trials succeed. Exact summation of the upper tail.
inline double binomial_majority_tail(int k, double p) {
  if (k < 1) throw std::invalid_argument("binomial_majority_tail: k must be >= 1");
  if (p <= 0.0) return 0.0;
  if (p >= 1.0) return 1.0;
  long double sum = 0.0L;
  for (int j = k / 2 + 1; j <= k; ++j) sum += binomial_pmf(k, j, p);
  return static_cast<double>(std::min(sum, 1.0L));
}

inline double normal_cdf(double x) {
  return 0.5 * std::erfc(-x / std::sqrt(2.0));
}

// Inverse standard normal CDF. Acklam's rational approximation refined by one
// Halley step against erfc; accurate to ~1e-15 over (0,1).
inline double inverse_normal_cdf(double u) {
  if (u <= 0.0) return -std::numeric_limits<double>::infinity();
  if (u >= 1.0) return std::numeric_limits<double>::infinity();

  static constexpr double a[] = {-3.969683028665376e+01, 2.209460984245205e+02,
                                 -2.759285104469687e+02, 1.383577518672690e+02,
                                 -3.066479806614716e+01, 2.506628277459239e+00};
  static constexpr double b[] = {-5.447609879822406e+01, 1.615858368580409e+02,
                                 -1.556989798598866e+02, 6.680131188771972e+01,
                                 -1.328068155288572e+01};
  static constexpr double c[] = {-7.784894002430293e-03, -3.223964580411365e-01,
                                 -2.400758277161838e+00, -2.549732539343734e+00,
                                 4.374664141464968e+00,  2.938163982698783e+00};
  static constexpr double d[] = {7.784695709041462e-03, 3.224671290700398e-01,
                                 2.445134137142996e+00, 3.754408661907416e+00};
  constexpr double lo = 0.02425, hi = 1.0 - 0.02425;

  double x;
  if (u < lo) {
    const double q = std::sqrt(-2.0 * std::log(u));
    x = (((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) /
        ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1.0);
  } else if (u <= hi) {
    const double q = u - 0.5, r = q * q;
    x = (((((a[0] * r + a[1]) * r + a[2]) * r + a[3]) * r + a[4]) * r + a[5]) * q /
        (((((b[0] * r + b[1]) * r + b[2]) * r + b[3]) * r + b[4]) * r + 1.0);
  } else {
    const double q = std::sqrt(-2.0 * std::log1p(-u));
    x = -(((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) /
        ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1.0);
  }

  const double e = 0.5 * std::erfc(-x / std::sqrt(2.0)) - u;
  const double f = e * std::sqrt(2.0 * M_PI) * std::exp(x * x / 2.0);
  return x - f / (1.0 + x * f / 2.0);
}

}  // namespace paradox
