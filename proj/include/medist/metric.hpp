#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "medist/profile.hpp"
#include "medist/rational.hpp"

namespace medist {

/// Ordered point set of an instance: client-group points first (labelled
/// C1, C2, ...), then the facilities.
class PointSpace {
public:
    static PointSpace of(const PreferenceProfile& profile);

    int num_points() const { return static_cast<int>(labels_.size()); }
    int num_groups() const { return num_groups_; }
    int num_facilities() const { return num_points() - num_groups_; }
    int group_point(int g) const { return g; }
    int facility_point(int f) const { return num_groups_ + f; }
    const std::string& label(int p) const { return labels_.at(p); }
    const std::vector<std::string>& labels() const { return labels_; }
    int index_of(std::string_view label) const;  // -1 if absent

    bool operator==(const PointSpace& other) const { return labels_ == other.labels_; }

private:
    std::vector<std::string> labels_;
    int num_groups_ = 0;
};

/// Symmetric nonnegative distance matrix over a PointSpace, zero diagonal.
class Metric {
public:
    Metric(PointSpace space, std::vector<double> dist);

    const PointSpace& space() const { return space_; }
    double dist(int i, int j) const { return d_[static_cast<size_t>(i) * n_ + j]; }
    double dist(std::string_view a, std::string_view b) const;
    int num_points() const { return n_; }

private:
    PointSpace space_;
    int n_;
    std::vector<double> d_;
};

/// Weighted graph over the point space; colocated points sit at distance 0.
struct MetricGraph {
    PointSpace space;
    struct Edge {
        int a, b;
        double w;
    };
    std::vector<Edge> edges;
    std::vector<std::pair<int, int>> colocations;
};

/// All-pairs shortest-path closure. Throws naming an unreachable pair if the
/// graph (with colocation groups contracted) is disconnected.
Metric metric_closure(const MetricGraph& graph);

/// Exact closure over rationals; weights parallel graph.edges and override
/// the stored doubles.
struct RatMetric {
    PointSpace space;
    std::vector<lp::Rat> d;
    const lp::Rat& dist(int i, int j) const {
        return d[static_cast<size_t>(i) * space.num_points() + j];
    }
};
RatMetric metric_closure_exact(const MetricGraph& graph, std::span<const lp::Rat> weights);

struct ConsistencyViolation {
    int group;
    int rank;         // 1-based r with dist(alt(g,r)) > dist(alt(g,r+1)) + tol
    double excess;
};
struct ConsistencyReport {
    bool ok = true;
    std::vector<ConsistencyViolation> violations;
};
/// d is consistent with the profile's rankings when every group's distances
/// are weakly increasing along its ranking.
ConsistencyReport check_consistency(const Metric& metric, const PreferenceProfile& profile,
                                    double tol = 1e-9);

struct TriangleViolation {
    int i, j, k;      // dist(i,j) > dist(i,k) + dist(j,k) + tol
    double excess;
};
struct TriangleReport {
    bool ok = true;
    std::vector<TriangleViolation> violations;
};
TriangleReport check_triangle(const Metric& metric, double tol = 1e-9);

/// Weighted 1-median objective: sum over groups of weight * dist(facility, group).
double social_cost(const Metric& metric, const PreferenceProfile& profile,
                   std::string_view facility);

}  // namespace medist
