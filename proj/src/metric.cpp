#include "medist/metric.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace medist {

PointSpace PointSpace::of(const PreferenceProfile& profile) {
    PointSpace ps;
    ps.num_groups_ = profile.num_groups();
    for (int g = 0; g < profile.num_groups(); ++g)
        ps.labels_.push_back("C" + std::to_string(g + 1));
    for (const auto& f : profile.facilities()) ps.labels_.push_back(f);
    for (size_t i = 0; i < ps.labels_.size(); ++i)
        for (size_t j = i + 1; j < ps.labels_.size(); ++j)
            if (ps.labels_[i] == ps.labels_[j])
                throw std::invalid_argument("point identifiers not unique: " + ps.labels_[i]);
    return ps;
}

int PointSpace::index_of(std::string_view label) const {
    for (int i = 0; i < num_points(); ++i)
        if (labels_[i] == label) return i;
    return -1;
}

Metric::Metric(PointSpace space, std::vector<double> dist)
    : space_(std::move(space)), n_(space_.num_points()), d_(std::move(dist)) {
    if (d_.size() != static_cast<size_t>(n_) * n_)
        throw std::invalid_argument("metric matrix size mismatch");
    for (int i = 0; i < n_; ++i) {
        if (d_[static_cast<size_t>(i) * n_ + i] != 0.0)
            throw std::invalid_argument("metric diagonal must be zero");
        for (int j = 0; j < n_; ++j) {
            double v = d_[static_cast<size_t>(i) * n_ + j];
            if (v < 0.0) throw std::invalid_argument("negative distance");
            if (v != d_[static_cast<size_t>(j) * n_ + i])
                throw std::invalid_argument("metric must be symmetric");
        }
    }
}

double Metric::dist(std::string_view a, std::string_view b) const {
    int i = space_.index_of(a), j = space_.index_of(b);
    if (i < 0 || j < 0)
        throw std::invalid_argument("unknown point: " + std::string(i < 0 ? a : b));
    return dist(i, j);
}

namespace {

// Union-find over point indices for colocation contraction.
struct Dsu {
    std::vector<int> parent;
    explicit Dsu(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(int a, int b) { parent[find(a)] = find(b); }
};

template <typename T, typename Add, typename Less>
std::vector<T> closure_impl(const MetricGraph& graph, std::span<const T> weights, T zero,
                            Add add, Less less) {
    const int n = graph.space.num_points();
    Dsu dsu(n);
    for (auto [a, b] : graph.colocations) dsu.unite(a, b);
    std::vector<int> rep_of(n), reps;
    for (int p = 0; p < n; ++p) {
        int r = dsu.find(p);
        if (r == p) {
            rep_of[p] = static_cast<int>(reps.size());
            reps.push_back(p);
        }
    }
    for (int p = 0; p < n; ++p) rep_of[p] = rep_of[dsu.find(p)];
    const int k = static_cast<int>(reps.size());
    std::vector<std::optional<T>> d(static_cast<size_t>(k) * k);
    for (int i = 0; i < k; ++i) d[static_cast<size_t>(i) * k + i] = zero;
    for (size_t e = 0; e < graph.edges.size(); ++e) {
        int a = rep_of[graph.edges[e].a], b = rep_of[graph.edges[e].b];
        if (a == b) continue;
        auto& slot = d[static_cast<size_t>(a) * k + b];
        if (!slot || less(weights[e], *slot)) {
            slot = weights[e];
            d[static_cast<size_t>(b) * k + a] = weights[e];
        }
    }
    for (int mid = 0; mid < k; ++mid)
        for (int i = 0; i < k; ++i) {
            const auto& dim = d[static_cast<size_t>(i) * k + mid];
            if (!dim) continue;
            for (int j = 0; j < k; ++j) {
                const auto& dmj = d[static_cast<size_t>(mid) * k + j];
                if (!dmj) continue;
                T via = add(*dim, *dmj);
                auto& slot = d[static_cast<size_t>(i) * k + j];
                if (!slot || less(via, *slot)) slot = via;
            }
        }
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j)
            if (!d[static_cast<size_t>(i) * k + j])
                throw std::runtime_error("graph disconnected: no path between " +
                                         graph.space.label(reps[i]) + " and " +
                                         graph.space.label(reps[j]));
    std::vector<T> full(static_cast<size_t>(n) * n, zero);
    for (int p = 0; p < n; ++p)
        for (int q = 0; q < n; ++q)
            full[static_cast<size_t>(p) * n + q] = *d[static_cast<size_t>(rep_of[p]) * k + rep_of[q]];
    return full;
}

void validate_graph(const MetricGraph& graph) {
    const int n = graph.space.num_points();
    for (const auto& e : graph.edges) {
        if (e.a < 0 || e.a >= n || e.b < 0 || e.b >= n)
            throw std::invalid_argument("edge endpoint outside point space");
        if (e.w < 0.0) throw std::invalid_argument("negative edge weight");
    }
    for (auto [a, b] : graph.colocations)
        if (a < 0 || a >= n || b < 0 || b >= n)
            throw std::invalid_argument("colocation endpoint outside point space");
}

}  // namespace

Metric metric_closure(const MetricGraph& graph) {
    validate_graph(graph);
    std::vector<double> w;
    w.reserve(graph.edges.size());
    for (const auto& e : graph.edges) w.push_back(e.w);
    auto d = closure_impl<double>(
        graph, w, 0.0, [](double a, double b) { return a + b; },
        [](double a, double b) { return a < b; });
    return Metric(graph.space, std::move(d));
}

RatMetric metric_closure_exact(const MetricGraph& graph, std::span<const lp::Rat> weights) {
    validate_graph(graph);
    if (weights.size() != graph.edges.size())
        throw std::invalid_argument("exact closure: one weight per edge required");
    auto d = closure_impl<lp::Rat>(
        graph, weights, lp::Rat(0), [](const lp::Rat& a, const lp::Rat& b) { return a + b; },
        [](const lp::Rat& a, const lp::Rat& b) { return a < b; });
    return RatMetric{graph.space, std::move(d)};
}

ConsistencyReport check_consistency(const Metric& metric, const PreferenceProfile& profile,
                                    double tol) {
    if (!(metric.space() == PointSpace::of(profile)))
        throw std::invalid_argument("metric and profile point spaces differ");
    const auto& sp = metric.space();
    ConsistencyReport rep;
    for (int g = 0; g < profile.num_groups(); ++g) {
        const int gp = sp.group_point(g);
        for (int r = 1; r < profile.num_facilities(); ++r) {
            double better = metric.dist(sp.facility_point(profile.alt(g, r)), gp);
            double worse = metric.dist(sp.facility_point(profile.alt(g, r + 1)), gp);
            if (better > worse + tol) {
                rep.ok = false;
                rep.violations.push_back({g, r, better - worse});
            }
        }
    }
    return rep;
}

TriangleReport check_triangle(const Metric& metric, double tol) {
    TriangleReport rep;
    const int n = metric.num_points();
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            for (int k = 0; k < n; ++k) {
                if (k == i || k == j) continue;
                double excess = metric.dist(i, j) - metric.dist(i, k) - metric.dist(j, k);
                if (excess > tol) {
                    rep.ok = false;
                    rep.violations.push_back({i, j, k, excess});
                }
            }
    return rep;
}

double social_cost(const Metric& metric, const PreferenceProfile& profile,
                   std::string_view facility) {
    if (!(metric.space() == PointSpace::of(profile)))
        throw std::invalid_argument("metric and profile point spaces differ");
    int f = profile.facility_index(facility);
    if (f < 0) throw std::invalid_argument("unknown facility: " + std::string(facility));
    const auto& sp = metric.space();
    double total = 0.0;
    for (int g = 0; g < profile.num_groups(); ++g)
        total += static_cast<double>(profile.group(g).weight) *
                 metric.dist(sp.facility_point(f), sp.group_point(g));
    return total;
}

}  // namespace medist
