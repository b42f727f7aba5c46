#pragma once

#include <json.hpp>

#include "medist/adversary.hpp"
#include "medist/baselines.hpp"
#include "medist/certificate.hpp"
#include "medist/metric.hpp"
#include "medist/optimal.hpp"
#include "medist/profile.hpp"

namespace medist::io {

using nlohmann::json;

json profile_to_json(const PreferenceProfile& profile);
PreferenceProfile profile_from_json(const json& j);

/// Lottery as a flat {facility: probability} object.
json lottery_to_json(const PreferenceProfile& profile, const Lottery& q);
Lottery lottery_from_json(const PreferenceProfile& profile, const json& j);

/// Metric as {"points": [...], "dist": full symmetric matrix}.
json metric_to_json(const Metric& metric);
Metric metric_from_json(const json& j, const PointSpace& space);

/// Graph as {"points": [...], "colocate": [[a,b],...], "edges": [[a,b,w],...]}.
json metric_graph_to_json(const MetricGraph& graph);
MetricGraph metric_graph_from_json(const json& j, const PointSpace& space);

json certificate_to_json(const Certificate& cert);
Certificate certificate_from_json(const json& j);

json adversary_result_to_json(const DistortionResult& result);
json adversary_outcome_to_json(const AdversaryOutcome& outcome);
json optimal_result_to_json(const PreferenceProfile& profile, const OptimalResult& result);
json baseline_table_to_json(const PreferenceProfile& profile,
                            const std::vector<BaselineRow>& rows);
json certificate_report_to_json(const PreferenceProfile& profile,
                                const CertificateReport& report);

/// Round every number in place to the given number of decimals (output
/// formatting; the default CLI precision is 6).
void round_numbers(json& j, int precision);

}  // namespace medist::io
