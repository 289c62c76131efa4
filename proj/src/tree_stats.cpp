#include "hurwitz/tree_stats.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include <boost/math/distributions/chi_squared.hpp>
#include <omp.h>

#include "hurwitz/edge_tree.hpp"
#include "hurwitz/errors.hpp"

namespace hurwitz {

std::string to_string(TreeStatistic s) {
  switch (s) {
    case TreeStatistic::trunk: return "trunk";
    case TreeStatistic::rootcomp: return "rootcomp";
    case TreeStatistic::semiper: return "semiper";
    case TreeStatistic::valence: return "valence";
  }
  return "?";
}

TreeStatistic parse_tree_statistic(const std::string& s) {
  for (auto v : {TreeStatistic::trunk, TreeStatistic::rootcomp, TreeStatistic::semiper, TreeStatistic::valence})
    if (to_string(v) == s) return v;
  throw std::invalid_argument("unknown statistic '" + s + "'");
}

namespace {

TreeObservation observe(int n, std::uint64_t seed, long index) {
  auto rng = sample_rng(seed, static_cast<std::uint64_t>(index));
  const EdgeTree t = sample_edge_tree(n, rng);
  const auto s = summarize(t);
  TreeObservation o;
  o.trunk = s.trunk;
  o.root_component = s.root_component;
  o.root_valence = s.root_valence;
  o.root_semiperimeter = s.semiperimeters.root.to_double();
  o.top_semiperimeter = s.semiperimeters.top.to_double();
  return o;
}

}  // namespace

std::vector<TreeObservation> observe_trees(int n, long samples, std::uint64_t seed) {
  std::vector<TreeObservation> out(static_cast<std::size_t>(samples));
#pragma omp parallel for schedule(dynamic, 256)
  for (long i = 0; i < samples; ++i) out[static_cast<std::size_t>(i)] = observe(n, seed, i);
  return out;
}

std::vector<TreeObservation> observe_trees_serial(int n, long samples, std::uint64_t seed) {
  std::vector<TreeObservation> out(static_cast<std::size_t>(samples));
  for (long i = 0; i < samples; ++i) out[static_cast<std::size_t>(i)] = observe(n, seed, i);
  return out;
}

double ks_distance(std::vector<double> xs, const std::function<double(double)>& cdf) {
  if (xs.empty()) throw InsufficientSamples("KS distance of an empty sample");
  std::sort(xs.begin(), xs.end());
  const double m = static_cast<double>(xs.size());
  double d = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    // Ties: evaluate the empirical CDF on both sides of the jump.
    if (i + 1 < xs.size() && xs[i + 1] == xs[i]) continue;
    std::size_t lo = i;
    while (lo > 0 && xs[lo - 1] == xs[i]) --lo;
    const double f = cdf(xs[i]);
    d = std::max(d, std::abs(static_cast<double>(i + 1) / m - f));
    d = std::max(d, std::abs(f - static_cast<double>(lo) / m));
  }
  return d;
}

double chi_square(const std::vector<long>& counts, const std::vector<double>& probs) {
  if (counts.size() != probs.size()) throw std::invalid_argument("chi-square bins mismatch");
  long total = 0;
  for (long c : counts) total += c;
  double stat = 0;
  for (std::size_t i = 0; i < counts.size(); ++i) {
    const double expected = static_cast<double>(total) * probs[i];
    const double diff = static_cast<double>(counts[i]) - expected;
    stat += diff * diff / expected;
  }
  return stat;
}

double chi_square_upper_quantile(int dof, double alpha) {
  boost::math::chi_squared dist(dof);
  return boost::math::quantile(boost::math::complement(dist, alpha));
}

double ks_threshold(long samples) { return 3.0 * 1.63 / std::sqrt(static_cast<double>(samples)); }

double borel_pmf(int k) {
  if (k < 1) return 0;
  const double kk = k;
  return std::exp((kk - 1) * std::log(kk) - kk - std::lgamma(kk + 1));
}

double borel_tail(int m) {
  // Direct sum to K, then the k^(-3/2)/sqrt(2 pi) integral remainder.
  constexpr int K = 1000000;
  double s = 0;
  for (int k = K; k > m; --k) s += borel_pmf(k);
  const double pi = std::acos(-1.0);
  return s + 2.0 / std::sqrt(2 * pi * K) - 0.5 * borel_pmf(K);
}

double rayleigh_cdf(double x) { return x <= 0 ? 0.0 : 1.0 - std::exp(-x * x / 2); }

double poisson_pmf(int k, double mean) {
  if (k < 0) return 0;
  return std::exp(k * std::log(mean) - mean - std::lgamma(k + 1.0));
}

StatReport stat_report(TreeStatistic stat, int n, std::uint64_t seed, const std::vector<TreeObservation>& obs) {
  const long samples = static_cast<long>(obs.size());
  StatReport r;
  r.statistic = to_string(stat);
  r.n = n;
  r.samples = samples;
  r.seed = seed;
  constexpr double alpha = 1e-4;

  auto finish_chi = [&](const std::vector<long>& counts, const std::vector<double>& probs) {
    r.test = "chi-square";
    r.value = chi_square(counts, probs);
    r.degrees_of_freedom = static_cast<int>(counts.size()) - 1;
    r.threshold = chi_square_upper_quantile(r.degrees_of_freedom, alpha);
  };

  switch (stat) {
    case TreeStatistic::trunk: {
      std::vector<double> xs;
      for (const auto& o : obs) xs.push_back(o.trunk / std::sqrt(static_cast<double>(n)));
      r.test = "ks";
      r.value = ks_distance(std::move(xs), rayleigh_cdf);
      r.threshold = ks_threshold(samples);
      break;
    }
    case TreeStatistic::semiper: {
      std::vector<double> xs;
      for (const auto& o : obs) xs.push_back(o.root_semiperimeter / n);
      r.test = "ks";
      r.value = ks_distance(std::move(xs), [](double x) { return std::clamp(x, 0.0, 1.0); });
      r.threshold = ks_threshold(samples);
      break;
    }
    case TreeStatistic::rootcomp: {
      constexpr int M = 30;
      std::vector<long> counts(M + 1, 0);
      std::vector<double> probs(M + 1, 0);
      for (const auto& o : obs) ++counts[static_cast<std::size_t>(std::min(o.root_component, M + 1) - 1)];
      for (int k = 1; k <= M; ++k) probs[static_cast<std::size_t>(k - 1)] = borel_pmf(k);
      probs[M] = borel_tail(M);
      finish_chi(counts, probs);
      break;
    }
    case TreeStatistic::valence: {
      // Excess valence of the root; bins 0..K-1 and a lumped tail holding
      // at least five expected observations.
      auto tail_from = [](int k) {
        double t = 1;
        for (int j = 0; j < k; ++j) t -= poisson_pmf(j, 1);
        return t;
      };
      int K = 1;
      while (tail_from(K + 1) * static_cast<double>(samples) >= 5) ++K;
      const double tail = tail_from(K);
      std::vector<long> counts(static_cast<std::size_t>(K) + 1, 0);
      std::vector<double> probs(static_cast<std::size_t>(K) + 1, 0);
      for (const auto& o : obs) ++counts[static_cast<std::size_t>(std::min(o.root_valence - 1, K))];
      for (int k = 0; k < K; ++k) probs[static_cast<std::size_t>(k)] = poisson_pmf(k, 1);
      probs[static_cast<std::size_t>(K)] = tail;
      finish_chi(counts, probs);
      break;
    }
  }
  r.pass = r.value < r.threshold;
  return r;
}

StatReport stat_test(TreeStatistic stat, int n, long samples, std::uint64_t seed) {
  if (n < 100) throw InsufficientSamples("statistical tests need n >= 100");
  if (samples < 10000) throw InsufficientSamples("statistical tests need at least 10^4 samples");
  return stat_report(stat, n, seed, observe_trees(n, samples, seed));
}

}  // namespace hurwitz
