#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "medist/profile.hpp"

namespace medist {

struct SearchSpec {
    enum class Mode { exhaustive, sample };

    int m = 2;                     // facility count
    int max_groups = 2;            // distinct rankings per profile
    long long weight_cap = 1;      // group weights range over 1..weight_cap
    double threshold = 1.0;        // report profiles with gamma >= threshold
    long long budget = 1000;       // max canonical instances to evaluate
    std::uint64_t seed = 0;        // sample-mode RNG seed
    Mode mode = Mode::exhaustive;
    std::vector<PreferenceProfile> seed_profiles;  // injected ahead of the stream

    void validate() const;
};

/// Canonical instances (coalesced, groups sorted, lexicographically minimal
/// facility relabeling) without duplicates, deterministic for a fixed seed.
std::vector<PreferenceProfile> enumerate_profiles(const SearchSpec& spec);

/// Lexicographically minimal encoding over all facility relabelings; the
/// dedup key used by the enumerator.
std::vector<long long> canonical_encoding(const PreferenceProfile& profile);

struct SearchHit {
    PreferenceProfile profile;
    double gamma;
};

struct SearchResult {
    std::vector<SearchHit> hits;   // gamma >= threshold, descending
    double best_gamma = 0.0;
    std::optional<PreferenceProfile> best_profile;
    long long evaluated = 0;
    long long failures = 0;
};

SearchResult search_instances(const SearchSpec& spec);

}  // namespace medist
