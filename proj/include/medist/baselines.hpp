#pragma once

#include <string>
#include <vector>

#include "medist/adversary.hpp"
#include "medist/profile.hpp"

namespace medist {

/// Pick a uniformly random voter's top choice.
Lottery random_dictatorship(const PreferenceProfile& profile);

/// Uniform over facilities.
Lottery uniform_lottery(const PreferenceProfile& profile);

struct BaselineRow {
    std::string name;
    Lottery q;
    double distortion = 0.0;
    bool unbounded = false;
};

/// Distortion of each baseline lottery plus the instance-optimal row.
std::vector<BaselineRow> evaluate_baselines(const PreferenceProfile& profile);

}  // namespace medist
