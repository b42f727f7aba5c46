#include "medist/baselines.hpp"

#include "medist/optimal.hpp"

namespace medist {

Lottery random_dictatorship(const PreferenceProfile& profile) {
    Lottery q;
    q.probs.assign(profile.num_facilities(), 0.0);
    for (const auto& g : profile.groups())
        q.probs[g.ranking.front()] += static_cast<double>(g.weight);
    for (double& p : q.probs) p /= static_cast<double>(profile.total_weight());
    return q;
}

Lottery uniform_lottery(const PreferenceProfile& profile) {
    Lottery q;
    q.probs.assign(profile.num_facilities(), 1.0 / profile.num_facilities());
    return q;
}

std::vector<BaselineRow> evaluate_baselines(const PreferenceProfile& profile) {
    std::vector<BaselineRow> rows;
    OptimalResult opt = optimal_scf(profile);
    rows.push_back({"optimal", opt.q, opt.gamma, false});
    for (auto& [name, q] : std::initializer_list<std::pair<const char*, Lottery>>{
             {"random_dictatorship", random_dictatorship(profile)},
             {"uniform", uniform_lottery(profile)}}) {
        DistortionResult d = distortion_of(profile, q);
        rows.push_back({name, q, d.value, d.unbounded});
    }
    return rows;
}

}  // namespace medist
