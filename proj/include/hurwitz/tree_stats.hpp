#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace hurwitz {

enum class TreeStatistic { trunk, rootcomp, semiper, valence };
std::string to_string(TreeStatistic s);
TreeStatistic parse_tree_statistic(const std::string& s);

struct StatReport {
  std::string statistic;
  std::string test;      // "ks" or "chi-square"
  int n = 0;
  long samples = 0;
  std::uint64_t seed = 0;
  double value = 0;      // KS distance or chi-square statistic
  double threshold = 0;
  int degrees_of_freedom = 0;  // chi-square only
  bool pass = false;
};

// Per-sample observations for one edge tree.
struct TreeObservation {
  int trunk = 0;
  int root_component = 0;
  int root_valence = 0;
  double root_semiperimeter = 0;  // P_R
  double top_semiperimeter = 0;   // P_T
};

// Samples uniform edge trees of size n with per-index generators and
// evaluates them in parallel; the result does not depend on thread count.
std::vector<TreeObservation> observe_trees(int n, long samples, std::uint64_t seed);
std::vector<TreeObservation> observe_trees_serial(int n, long samples, std::uint64_t seed);

// Kolmogorov-Smirnov distance of a sample to a continuous CDF.
double ks_distance(std::vector<double> xs, const std::function<double(double)>& cdf);
// Pearson statistic of counts against probabilities (same length, sum 1).
double chi_square(const std::vector<long>& counts, const std::vector<double>& probs);
// Upper quantile: P(X > q) = alpha for X ~ chi-square(dof).
double chi_square_upper_quantile(int dof, double alpha);
// 3 * 1.63 / sqrt(samples).
double ks_threshold(long samples);

// Borel law k^(k-1) e^(-k) / k!, and its tail mass beyond k = m.
double borel_pmf(int k);
double borel_tail(int m);
double rayleigh_cdf(double x);
double poisson_pmf(int k, double mean);

// Thresholds: KS at 3 * 1.63 / sqrt(samples); chi-square at the 1e-4 upper
// quantile. Throws InsufficientSamples for n < 100 or samples < 1e4.
StatReport stat_test(TreeStatistic stat, int n, long samples, std::uint64_t seed);
// The same tests on precomputed observations.
StatReport stat_report(TreeStatistic stat, int n, std::uint64_t seed, const std::vector<TreeObservation>& obs);

}  // namespace hurwitz
