#include "medist/certificate.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <limits>
#include <stdexcept>

namespace medist {

namespace {

void validate_shape(const Certificate& cert) {
    const int m = cert.profile.num_facilities();
    if (static_cast<int>(cert.entries.size()) != m)
        throw std::invalid_argument("certificate needs exactly one metric per facility");
    std::vector<char> seen(m, 0);
    for (const auto& e : cert.entries) {
        if (e.facility < 0 || e.facility >= m || seen[e.facility])
            throw std::invalid_argument("certificate facilities must cover each facility once");
        seen[e.facility] = 1;
    }
}

const PointSpace& entry_space(const Certificate::Entry& e) {
    if (std::holds_alternative<MetricGraph>(e.data))
        return std::get<MetricGraph>(e.data).space;
    return std::get<Metric>(e.data).space();
}

/// Shortest decimal string that round-trips to v, as an exact rational.
lp::Rat rat_from_shortest_decimal(double v) {
    char buf[64];
    for (int prec = 1; prec <= 17; ++prec) {
        std::snprintf(buf, sizeof buf, "%.*g", prec, v);
        if (std::strtod(buf, nullptr) == v) break;
    }
    std::string s(buf);
    if (s.find('e') != std::string::npos || s.find('E') != std::string::npos)
        return lp::Rat::from_double(v);
    return lp::Rat::from_decimal(s);
}

}  // namespace

CertificateReport verify_certificate(const Certificate& cert, double tol, double tol_phi) {
    validate_shape(cert);
    const PointSpace sp = PointSpace::of(cert.profile);
    CertificateReport rep;
    rep.claimed_phi = cert.claimed_phi;

    std::vector<Metric> metrics;
    bool feasible = true;
    for (const auto& e : cert.entries) {
        const std::string& o = cert.profile.facility(e.facility);
        if (!(entry_space(e) == sp))
            throw std::invalid_argument("certificate metric for " + o +
                                        " is not over the profile's point space");
        Metric metric = std::holds_alternative<MetricGraph>(e.data)
                            ? metric_closure(std::get<MetricGraph>(e.data))
                            : std::get<Metric>(e.data);
        auto cons = check_consistency(metric, cert.profile, tol);
        double worst_cons = 0.0;
        for (const auto& v : cons.violations) worst_cons = std::max(worst_cons, v.excess);
        rep.checks.push_back({"consistency(" + o + ")", cons.ok, worst_cons});
        auto tri = check_triangle(metric, tol);
        double worst_tri = 0.0;
        for (const auto& v : tri.violations) worst_tri = std::max(worst_tri, v.excess);
        rep.checks.push_back({"triangle(" + o + ")", tri.ok, worst_tri});
        feasible = feasible && cons.ok && tri.ok;
        metrics.push_back(std::move(metric));
    }

    double norm = 0.0;
    for (size_t k = 0; k < cert.entries.size(); ++k)
        norm += social_cost(metrics[k], cert.profile,
                            cert.profile.facility(cert.entries[k].facility));
    rep.normalization = norm;
    bool norm_ok = norm <= 1.0 + tol;
    rep.checks.push_back({"normalization", norm_ok, norm_ok ? 1.0 - norm : norm - 1.0});
    feasible = feasible && norm_ok;
    rep.feasible = feasible;
    if (!feasible) {
        rep.matches_claim = false;
        return rep;
    }

    rep.facility_costs.assign(cert.profile.num_facilities(), 0.0);
    for (int i = 0; i < cert.profile.num_facilities(); ++i)
        for (size_t k = 0; k < metrics.size(); ++k)
            rep.facility_costs[i] +=
                social_cost(metrics[k], cert.profile, cert.profile.facility(i));
    rep.phi_argmin = static_cast<int>(
        std::min_element(rep.facility_costs.begin(), rep.facility_costs.end()) -
        rep.facility_costs.begin());
    rep.phi = rep.facility_costs[rep.phi_argmin];
    if (cert.claimed_phi)
        rep.matches_claim = std::abs(*rep.phi - *cert.claimed_phi) <= tol_phi;
    return rep;
}

ExactCertificateReport verify_certificate_exact(const Certificate& cert, lp::Rat tol_phi) {
    validate_shape(cert);
    using lp::Rat;
    const PointSpace sp = PointSpace::of(cert.profile);
    const int m = cert.profile.num_facilities();
    ExactCertificateReport rep;
    rep.feasible = true;

    std::vector<RatMetric> metrics;
    for (const auto& e : cert.entries) {
        const std::string& o = cert.profile.facility(e.facility);
        if (!(entry_space(e) == sp))
            throw std::invalid_argument("certificate metric for " + o +
                                        " is not over the profile's point space");
        RatMetric rm;
        if (std::holds_alternative<MetricGraph>(e.data)) {
            const auto& graph = std::get<MetricGraph>(e.data);
            std::vector<Rat> w = e.exact_weights;
            if (w.empty())
                for (const auto& edge : graph.edges)
                    w.push_back(rat_from_shortest_decimal(edge.w));
            rm = metric_closure_exact(graph, w);
        } else {
            const auto& metric = std::get<Metric>(e.data);
            const int n = sp.num_points();
            rm.space = sp;
            rm.d.resize(static_cast<size_t>(n) * n);
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j)
                    rm.d[static_cast<size_t>(i) * n + j] =
                        rat_from_shortest_decimal(metric.dist(i, j));
            // a hand-given matrix must still be a metric: exact triangle check
            for (int i = 0; i < n && rep.feasible; ++i)
                for (int j = i + 1; j < n && rep.feasible; ++j)
                    for (int k = 0; k < n; ++k) {
                        if (k == i || k == j) continue;
                        if (rm.dist(i, j) > rm.dist(i, k) + rm.dist(j, k)) {
                            rep.feasible = false;
                            rep.first_violation = "triangle(" + o + ")";
                            break;
                        }
                    }
        }
        for (int g = 0; g < cert.profile.num_groups() && rep.feasible; ++g) {
            const int gp = sp.group_point(g);
            for (int r = 1; r < m; ++r) {
                const Rat& better =
                    rm.dist(sp.facility_point(cert.profile.alt(g, r)), gp);
                const Rat& worse =
                    rm.dist(sp.facility_point(cert.profile.alt(g, r + 1)), gp);
                if (better > worse) {
                    rep.feasible = false;
                    rep.first_violation = "consistency(" + o + ")";
                    break;
                }
            }
        }
        metrics.push_back(std::move(rm));
    }

    auto cost = [&](int facility) {
        Rat total(0);
        for (size_t k = 0; k < metrics.size(); ++k) {
            const int op = sp.facility_point(facility);
            for (int g = 0; g < cert.profile.num_groups(); ++g)
                total += Rat(cert.profile.group(g).weight) *
                         metrics[k].dist(op, sp.group_point(g));
        }
        return total;
    };
    // normalization uses each family's own reference facility
    Rat norm(0);
    for (size_t k = 0; k < metrics.size(); ++k) {
        const int op = sp.facility_point(cert.entries[k].facility);
        for (int g = 0; g < cert.profile.num_groups(); ++g)
            norm += Rat(cert.profile.group(g).weight) * metrics[k].dist(op, sp.group_point(g));
    }
    rep.normalization = norm;
    if (norm > Rat(1)) {
        rep.feasible = false;
        if (rep.first_violation.empty()) rep.first_violation = "normalization";
    }
    if (!rep.feasible) {
        rep.matches_claim = false;
        return rep;
    }

    rep.phi = cost(0);
    for (int i = 1; i < m; ++i) {
        Rat c = cost(i);
        if (c < rep.phi) rep.phi = c;
    }
    if (cert.claimed_phi) {
        Rat claim = rat_from_shortest_decimal(*cert.claimed_phi);
        Rat diff = rep.phi < claim ? claim - rep.phi : rep.phi - claim;
        rep.matches_claim = diff <= tol_phi;
    }
    return rep;
}

}  // namespace medist
