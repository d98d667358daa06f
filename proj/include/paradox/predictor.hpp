// paradox/predictor.hpp -- predicting the strong friendship paradox from
// degree structure alone.
//
// For a degree-k node, each neighbor independently dominates it with
// probability p = P(k' >= k | k) taken from the empirical conditional
// neighbor-degree table, so under neighbor independence the paradox
// probability is the exact binomial majority tail P(Bin(k, p) > k/2).
// Real neighborhoods are not independent: the degrees of two neighbors of
// the same node are correlated (transsortativity). The correlated predictor
// reproduces that with an exchangeable Gaussian copula at pairwise
// correlation rho_nn, sampled by Monte Carlo. Since only the event
// "neighbor degree >= k" matters, each copula coordinate is reduced to a
// threshold test z_i > Phi^{-1}(1 - p), which is exactly equivalent to
// transforming z_i to a uniform and inverting the conditional distribution.
#pragma once

#include <cmath>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <vector>

#include "graph.hpp"
#include "math_util.hpp"
#include "metrics.hpp"
#include "structure.hpp"

namespace paradox {

struct SfpPrediction {
  std::map<int, double> per_degree;  // degree -> predicted paradox probability
  double overall = 0.0;              // histogram-weighted mean
  bool correlated = false;
  SfpMode mode = SfpMode::weak;
  long long samples = 0;             // Monte Carlo samples (correlated only)
  double rho_nn = 0.0;               // neighbor-neighbor correlation used
  std::vector<int> clamped_degrees;  // degrees where rho_nn fell below -1/(k-1)
};

inline SfpPrediction predict_independent(const DegreeModel& model,
                                         SfpMode mode = SfpMode::weak) {
  SfpPrediction pred;
  pred.mode = mode;
  const double n = static_cast<double>(model.node_count());
  if (n < 1) throw std::invalid_argument("predict_independent: empty model");
  for (const auto& [k, count] : model.histogram) {
    double q = 0.0;
    if (k >= 1) {
      const double p = model.dominance_probability(k, mode == SfpMode::strict);
      q = binomial_majority_tail(k, p);
    }
    pred.per_degree[k] = q;
    pred.overall += static_cast<double>(count) / n * q;
  }
  return pred;
}

inline SfpPrediction predict_correlated(const DegreeModel& model, double rho_nn,
                                        long long samples, std::uint64_t seed,
                                        SfpMode mode = SfpMode::weak) {
  if (samples < 1) throw std::invalid_argument("predict_correlated: samples must be >= 1");
  if (!(rho_nn >= -1.0 && rho_nn <= 1.0))
    throw std::invalid_argument("predict_correlated: rho_nn must lie in [-1, 1]");
  SfpPrediction pred;
  pred.mode = mode;
  pred.correlated = true;
  pred.samples = samples;
  pred.rho_nn = rho_nn;
  const double n = static_cast<double>(model.node_count());
  if (n < 1) throw std::invalid_argument("predict_correlated: empty model");

  std::normal_distribution<double> normal(0.0, 1.0);
  std::vector<double> w;
  for (const auto& [k, count] : model.histogram) {
    double q = 0.0;
    if (k >= 1) {
      // exchangeable correlation is only positive semidefinite down to
      // -1/(k-1); below that the requested rho_nn is clamped and reported
      double rho = rho_nn;
      if (k >= 2) {
        const double floor_k = -1.0 / (k - 1) + 1e-9;
        if (rho < floor_k) {
          rho = floor_k;
          pred.clamped_degrees.push_back(k);
        }
      }
      const double p = model.dominance_probability(k, mode == SfpMode::strict);
      if (p <= 0.0) {
        q = 0.0;
      } else if (p >= 1.0) {
        q = 1.0;
      } else if (k == 1) {
        q = p;  // a single neighbor: the copula degenerates to one uniform
      } else {
        const double alpha = std::sqrt(1.0 + (k - 1) * rho);
        const double beta = std::sqrt(1.0 - rho);
        const double t = inverse_normal_cdf(1.0 - p);
        auto rng = substream_rng(seed, static_cast<std::uint64_t>(k));
        w.resize(k);
        long long hits = 0;
        for (long long s = 0; s < samples; ++s) {
          double mean = 0.0;
          for (int i = 0; i < k; ++i) {
            w[i] = normal(rng);
            mean += w[i];
          }
          mean /= k;
          int dominated = 0;
          const double shift = alpha * mean - beta * mean;
          for (int i = 0; i < k; ++i)
            if (shift + beta * w[i] > t) ++dominated;
          if (2 * dominated > k) ++hits;
        }
        q = static_cast<double>(hits) / static_cast<double>(samples);
      }
    }
    pred.per_degree[k] = q;
    pred.overall += static_cast<double>(count) / n * q;
  }
  return pred;
}

struct PredictionReport {
  std::map<int, DegreeGroup> measured_by_degree;
  double measured_fraction = 0.0;
  SfpPrediction independent;
  std::optional<SfpPrediction> correlated;  // absent when transsortativity undefined
  std::optional<double> rho_nn;             // transsortativity fed to the copula
};

// Measured strong-paradox rates side by side with both predictors. The
// correlated branch runs only when transsortativity is defined.
inline PredictionReport prediction_report(const Graph& g, SfpMode mode,
                                          long long samples, std::uint64_t seed) {
  PredictionReport rep;
  const DegreeModel model = build_degree_model(g);
  rep.measured_by_degree = sfp_by_degree(g, mode);
  rep.measured_fraction = sfp_fraction(g, mode);
  rep.independent = predict_independent(model, mode);
  rep.rho_nn = model.transsortativity;
  if (rep.rho_nn)
    rep.correlated = predict_correlated(model, *rep.rho_nn, samples, seed, mode);
  return rep;
}

}  // namespace paradox
