#include "medist/json_io.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace medist::io {

namespace {
int require_point(const PointSpace& space, const std::string& label) {
    int i = space.index_of(label);
    if (i < 0) throw std::invalid_argument("unknown point label: " + label);
    return i;
}
}  // namespace

json profile_to_json(const PreferenceProfile& profile) {
    json groups = json::array();
    for (const auto& g : profile.groups()) {
        json ranking = json::array();
        for (int f : g.ranking) ranking.push_back(profile.facility(f));
        groups.push_back({{"weight", g.weight}, {"ranking", ranking}});
    }
    return {{"facilities", profile.facilities()}, {"groups", groups}};
}

PreferenceProfile profile_from_json(const json& j) {
    std::vector<std::string> facilities = j.at("facilities").get<std::vector<std::string>>();
    std::vector<ClientGroup> groups;
    for (const auto& gj : j.at("groups")) {
        ClientGroup g;
        g.weight = gj.at("weight").get<long long>();
        for (const auto& fj : gj.at("ranking")) {
            auto name = fj.get<std::string>();
            auto it = std::find(facilities.begin(), facilities.end(), name);
            if (it == facilities.end())
                throw std::invalid_argument("ranking references unknown facility: " + name);
            g.ranking.push_back(static_cast<int>(it - facilities.begin()));
        }
        groups.push_back(std::move(g));
    }
    return PreferenceProfile(std::move(facilities), std::move(groups));
}

json lottery_to_json(const PreferenceProfile& profile, const Lottery& q) {
    json out = json::object();
    for (int f = 0; f < profile.num_facilities(); ++f) out[profile.facility(f)] = q.probs.at(f);
    return out;
}

Lottery lottery_from_json(const PreferenceProfile& profile, const json& j) {
    Lottery q;
    q.probs.assign(profile.num_facilities(), 0.0);
    for (const auto& [name, value] : j.items()) {
        int f = profile.facility_index(name);
        if (f < 0) throw std::invalid_argument("lottery names unknown facility: " + name);
        q.probs[f] = value.get<double>();
    }
    return q;
}

json metric_to_json(const Metric& metric) {
    const int n = metric.num_points();
    json dist = json::array();
    for (int i = 0; i < n; ++i) {
        json row = json::array();
        for (int j = 0; j < n; ++j) row.push_back(metric.dist(i, j));
        dist.push_back(std::move(row));
    }
    return {{"points", metric.space().labels()}, {"dist", dist}};
}

Metric metric_from_json(const json& j, const PointSpace& space) {
    auto labels = j.at("points").get<std::vector<std::string>>();
    if (labels != space.labels())
        throw std::invalid_argument("metric point labels do not match the instance");
    const int n = space.num_points();
    const auto& dist = j.at("dist");
    if (static_cast<int>(dist.size()) != n)
        throw std::invalid_argument("metric matrix has wrong size");
    std::vector<double> d(static_cast<size_t>(n) * n);
    for (int a = 0; a < n; ++a) {
        if (static_cast<int>(dist[a].size()) != n)
            throw std::invalid_argument("metric matrix has wrong size");
        for (int b = 0; b < n; ++b) d[static_cast<size_t>(a) * n + b] = dist[a][b].get<double>();
    }
    return Metric(space, std::move(d));
}

json metric_graph_to_json(const MetricGraph& graph) {
    json coloc = json::array(), edges = json::array();
    for (auto [a, b] : graph.colocations)
        coloc.push_back({graph.space.label(a), graph.space.label(b)});
    for (const auto& e : graph.edges)
        edges.push_back({graph.space.label(e.a), graph.space.label(e.b), e.w});
    return {{"points", graph.space.labels()}, {"colocate", coloc}, {"edges", edges}};
}

MetricGraph metric_graph_from_json(const json& j, const PointSpace& space) {
    auto labels = j.at("points").get<std::vector<std::string>>();
    if (labels != space.labels())
        throw std::invalid_argument("graph point labels do not match the instance");
    MetricGraph graph{space, {}, {}};
    if (j.contains("colocate"))
        for (const auto& c : j.at("colocate"))
            graph.colocations.emplace_back(require_point(space, c.at(0).get<std::string>()),
                                           require_point(space, c.at(1).get<std::string>()));
    for (const auto& e : j.at("edges"))
        graph.edges.push_back({require_point(space, e.at(0).get<std::string>()),
                               require_point(space, e.at(1).get<std::string>()),
                               e.at(2).get<double>()});
    return graph;
}

json certificate_to_json(const Certificate& cert) {
    json metrics = json::array();
    for (const auto& entry : cert.entries) {
        json ej = {{"o", cert.profile.facility(entry.facility)}};
        if (std::holds_alternative<MetricGraph>(entry.data))
            ej["graph"] = metric_graph_to_json(std::get<MetricGraph>(entry.data));
        else
            ej["metric"] = metric_to_json(std::get<Metric>(entry.data));
        metrics.push_back(std::move(ej));
    }
    json out = {{"profile", profile_to_json(cert.profile)}, {"metrics", metrics}};
    if (cert.claimed_phi) out["claimed_phi"] = *cert.claimed_phi;
    return out;
}

Certificate certificate_from_json(const json& j) {
    Certificate cert{profile_from_json(j.at("profile")), {}, std::nullopt};
    const PointSpace space = PointSpace::of(cert.profile);
    for (const auto& ej : j.at("metrics")) {
        Certificate::Entry entry;
        auto name = ej.at("o").get<std::string>();
        entry.facility = cert.profile.facility_index(name);
        if (entry.facility < 0)
            throw std::invalid_argument("certificate names unknown facility: " + name);
        if (ej.contains("graph"))
            entry.data = metric_graph_from_json(ej.at("graph"), space);
        else
            entry.data = metric_from_json(ej.at("metric"), space);
        cert.entries.push_back(std::move(entry));
    }
    if (j.contains("claimed_phi")) cert.claimed_phi = j.at("claimed_phi").get<double>();
    return cert;
}

json adversary_outcome_to_json(const AdversaryOutcome& outcome) {
    json out = {{"o", outcome.o}, {"unbounded", outcome.unbounded}};
    out["value"] = outcome.unbounded ? json() : json(outcome.value);
    out["witness"] = outcome.witness ? metric_to_json(*outcome.witness) : json();
    return out;
}

json adversary_result_to_json(const DistortionResult& result) {
    json out = {{"o_star", result.o_star}, {"unbounded", result.unbounded}};
    out["value"] = result.unbounded ? json() : json(result.value);
    out["witness"] = result.witness ? metric_to_json(*result.witness) : json();
    json per_o = json::object();
    for (const auto& o : result.per_o)
        per_o[o.o] = o.unbounded ? json() : json(o.value);
    out["per_o"] = per_o;
    return out;
}

json optimal_result_to_json(const PreferenceProfile& profile, const OptimalResult& result) {
    return {{"gamma", result.gamma},
            {"q", lottery_to_json(profile, result.q)},
            {"tight_os", result.tight_os}};
}

json baseline_table_to_json(const PreferenceProfile& profile,
                            const std::vector<BaselineRow>& rows) {
    json out = json::array();
    for (const auto& row : rows) {
        json rj = {{"name", row.name},
                   {"q", lottery_to_json(profile, row.q)},
                   {"unbounded", row.unbounded}};
        rj["distortion"] = row.unbounded ? json() : json(row.distortion);
        out.push_back(std::move(rj));
    }
    return out;
}

json certificate_report_to_json(const PreferenceProfile& profile,
                                const CertificateReport& report) {
    json checks = json::array();
    for (const auto& c : report.checks)
        checks.push_back({{"name", c.name}, {"ok", c.ok}, {"slack", c.slack}});
    json out = {{"feasible", report.feasible},
                {"normalization", report.normalization},
                {"checks", checks}};
    out["phi"] = report.phi ? json(*report.phi) : json();
    if (report.phi_argmin >= 0) out["phi_argmin"] = profile.facility(report.phi_argmin);
    if (report.claimed_phi) {
        out["claimed_phi"] = *report.claimed_phi;
        out["matches_claim"] = report.matches_claim;
    }
    return out;
}

void round_numbers(json& j, int precision) {
    if (j.is_number_float()) {
        double scale = std::pow(10.0, precision);
        j = std::round(j.get<double>() * scale) / scale;
    } else if (j.is_object() || j.is_array()) {
        for (auto& child : j) round_numbers(child, precision);
    }
}

}  // namespace medist::io
