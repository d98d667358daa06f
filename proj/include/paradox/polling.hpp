// paradox/polling.hpp -- estimating the prevalence of a binary trait by
// polling nodes or their friends. Friend polling (uniform edge, then a
// uniform endpoint) oversamples high-degree nodes and overshoots whenever
// trait and degree are positively correlated; the inverse-degree correction
// undoes the bias with a self-normalized ratio estimator.
#pragma once

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "graph.hpp"
#include "math_util.hpp"
#include "perception.hpp"

namespace paradox {

enum class PollMethod { node, friend_of_node };
enum class FriendCorrection { none, inverse_degree };

struct PollResult {
  double estimate = 0.0;
  long long sample_size = 0;  // draws per replicate
  int trials = 1;
  PollMethod method = PollMethod::node;
  FriendCorrection correction = FriendCorrection::none;
  std::vector<double> replicate_estimates;
  // sample stddev across replicates when trials > 1, binomial plug-in otherwise
  double standard_error = 0.0;
};

namespace detail {

template <typename DrawEstimate>
PollResult run_poll(long long n_samples, int trials, std::uint64_t seed,
                    DrawEstimate one_replicate) {
  if (n_samples < 1) throw std::invalid_argument("poll: n_samples must be >= 1");
  if (trials < 1) throw std::invalid_argument("poll: trials must be >= 1");
  PollResult r;
  r.sample_size = n_samples;
  r.trials = trials;
  r.replicate_estimates.reserve(trials);
  double sum = 0.0;
  for (int t = 0; t < trials; ++t) {
    auto rng = substream_rng(seed, static_cast<std::uint64_t>(t));
    const double est = one_replicate(rng);
    r.replicate_estimates.push_back(est);
    sum += est;
  }
  r.estimate = sum / trials;
  if (trials > 1) {
    double ss = 0.0;
    for (double est : r.replicate_estimates) {
      const double d = est - r.estimate;
      ss += d * d;
    }
    r.standard_error = std::sqrt(ss / (trials - 1));
  } else {
    r.standard_error =
        std::sqrt(std::max(0.0, r.estimate * (1.0 - r.estimate)) /
                  static_cast<double>(n_samples));
  }
  return r;
}

}  // namespace detail

// Polls n_samples nodes uniformly with replacement; unbiased for prevalence.
inline PollResult node_poll(const Graph& g, const AttributeMap& attrs,
                            long long n_samples, std::uint64_t seed, int trials = 1) {
  detail::require_binary(g, attrs, "node_poll");
  if (g.node_count() < 1) throw std::invalid_argument("node_poll: empty graph");
  auto res = detail::run_poll(n_samples, trials, seed, [&](std::mt19937_64& rng) {
    std::uniform_int_distribution<NodeId> pick(0, g.node_count() - 1);
    long long ones = 0;
    for (long long s = 0; s < n_samples; ++s)
      ones += attrs[pick(rng)] != 0.0;
    return static_cast<double>(ones) / static_cast<double>(n_samples);
  });
  res.method = PollMethod::node;
  return res;
}

// Polls n_samples random friends: a uniform edge, then a uniform endpoint,
// i.e. nodes weighted by degree. Without correction the estimate converges
// to the friend-weighted prevalence E{f(Y)}; with the inverse-degree
// correction the weights cancel and it converges to the true prevalence.
inline PollResult friend_poll(const Graph& g, const AttributeMap& attrs,
                              long long n_samples, FriendCorrection correction,
                              std::uint64_t seed, int trials = 1) {
  detail::require_binary(g, attrs, "friend_poll");
  if (g.edge_count() == 0) throw std::invalid_argument("friend_poll: graph has no edges");
  const auto& edges = g.edges();
  auto res = detail::run_poll(n_samples, trials, seed, [&](std::mt19937_64& rng) {
    std::uniform_int_distribution<std::size_t> pick(0, edges.size() - 1);
    std::uniform_int_distribution<int> side(0, 1);
    double num = 0.0, den = 0.0;
    for (long long s = 0; s < n_samples; ++s) {
      const auto& [u, v] = edges[pick(rng)];
      const NodeId y = side(rng) ? v : u;
      const double f = attrs[y];
      if (correction == FriendCorrection::inverse_degree) {
        const double w = 1.0 / static_cast<double>(g.degree(y));
        num += f * w;
        den += w;
      } else {
        num += f;
        den += 1.0;
      }
    }
    return num / den;
  });
  res.method = PollMethod::friend_of_node;
  res.correction = correction;
  return res;
}

}  // namespace paradox
