#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "medist/metric.hpp"
#include "medist/profile.hpp"
#include "medist/rational.hpp"

namespace medist {

/// Lower-bound certificate: one metric (or graph to close) per facility o.
/// Feasibility for the dual min-max LP makes the implied phi a lower bound on
/// the distortion of every randomized rule on the profile, by weak duality.
struct Certificate {
    struct Entry {
        int facility = -1;  // index into profile facilities
        std::variant<MetricGraph, Metric> data;
        /// Exact edge weights for the rational path (parallel to graph edges;
        /// empty means derive them from the doubles' shortest decimal form).
        std::vector<lp::Rat> exact_weights;
    };
    PreferenceProfile profile;
    std::vector<Entry> entries;  // exactly one per facility
    std::optional<double> claimed_phi;
};

struct CertificateCheck {
    std::string name;
    bool ok = true;
    double slack = 0.0;  // >= 0 margin, or the violated amount when !ok
};

struct CertificateReport {
    bool feasible = false;
    std::optional<double> phi;      // set only when feasible
    double normalization = 0.0;     // sum_o sum_j w_j d^o(o,j)
    int phi_argmin = -1;            // facility attaining the min cost
    std::vector<double> facility_costs;
    std::vector<CertificateCheck> checks;
    std::optional<double> claimed_phi;
    bool matches_claim = true;      // |phi - claimed| <= tol_phi when both present
};

/// Close each graph, validate per-facility consistency and the triangle
/// inequality, check the joint normalization, and compute
/// phi = min_i sum_o sum_j w_j d^o(i,j). tol guards the constraint checks;
/// tol_phi the comparison against a claimed value.
CertificateReport verify_certificate(const Certificate& cert, double tol = 1e-9,
                                     double tol_phi = 5e-4);

struct ExactCertificateReport {
    bool feasible = false;
    lp::Rat phi;
    lp::Rat normalization;
    std::string first_violation;
    bool matches_claim = true;
};

/// Same verification in exact rational arithmetic. Edge weights are taken
/// from the entries' exact_weights or recovered from the doubles' shortest
/// decimal representation.
ExactCertificateReport verify_certificate_exact(const Certificate& cert,
                                                lp::Rat tol_phi = lp::Rat(1, 2000));

}  // namespace medist
