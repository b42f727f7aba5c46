#pragma once

#include <map>
#include <string>
#include <vector>

#include "medist/adversary.hpp"
#include "medist/lp.hpp"
#include "medist/metric.hpp"
#include "medist/profile.hpp"

namespace medist {

/// Instance-optimal randomized rule: the min-max LP over lotteries, built by
/// mechanically dualizing each per-facility adversary block.
///   variables: gamma, q_i, and one multiplier vector y^o per facility o
///   rows:      per (o, point pair): transposed adversary column >= q-cost
///              per o:               y^o's normalization multiplier <= gamma
///              one simplex row:     sum_i q_i >= 1
lp::LinearProgram build_best_dist(const PreferenceProfile& profile);

/// The same optimum from the other side, built directly: one distance family
/// d^o per facility plus the bound variable phi; maximize phi subject to the
/// joint normalization, per-facility cost covers, and each family being a
/// consistent metric.
lp::LinearProgram build_best_dist_dual(const PreferenceProfile& profile);

struct OptimalResult {
    double gamma = 0.0;
    Lottery q;
    std::vector<double> adversary_values;          // per facility, at the returned q
    std::vector<std::string> tight_os;             // |value - gamma| <= 1e-6
    std::map<std::string, std::map<std::string, double>> multipliers;  // o -> row -> y
};

OptimalResult optimal_scf(const PreferenceProfile& profile);

struct DualMetricsResult {
    double phi = 0.0;
    std::vector<Metric> metrics;  // by facility index, each revalidated
};

DualMetricsResult optimal_dual_metrics(const PreferenceProfile& profile);

/// Row/variable naming helpers shared with the fixtures and tests.
std::string best_dist_y_name(std::string_view o, std::string_view adversary_row);
std::string best_dist_q_name(std::string_view o);
std::string best_dist_dual_d_name(std::string_view o, std::string_view pair_var);

}  // namespace medist
