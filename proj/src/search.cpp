#include "medist/search.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <stdexcept>

#include "medist/adversary.hpp"
#include "medist/optimal.hpp"

namespace medist {

void SearchSpec::validate() const {
    if (m < 1) throw std::invalid_argument("search: m must be >= 1");
    if (max_groups < 1) throw std::invalid_argument("search: max_groups must be >= 1");
    if (weight_cap < 1) throw std::invalid_argument("search: weight_cap must be >= 1");
    if (budget < 1) throw std::invalid_argument("search: budget must be >= 1");
    if (threshold < 1.0) throw std::invalid_argument("search: threshold must be >= 1");
    for (const auto& p : seed_profiles)
        if (p.num_facilities() != m)
            throw std::invalid_argument("search: seed profile facility count differs from m");
}

namespace {

std::vector<long long> encode(const PreferenceProfile& profile) {
    // coalesced, groups sorted by ranking: a total order on instances
    PreferenceProfile c = coalesce(profile);
    std::vector<long long> enc{c.num_facilities()};
    for (const auto& g : c.groups()) {
        enc.push_back(g.weight);
        for (int f : g.ranking) enc.push_back(f);
    }
    return enc;
}

std::vector<std::string> default_names(int m) {
    std::vector<std::string> names;
    for (int i = 0; i < m; ++i) {
        std::string n;
        int v = i;
        do {
            n.insert(n.begin(), static_cast<char>('a' + v % 26));
            v = v / 26 - 1;
        } while (v >= 0);
        names.push_back(n);
    }
    return names;
}

}  // namespace

std::vector<long long> canonical_encoding(const PreferenceProfile& profile) {
    const int m = profile.num_facilities();
    std::vector<int> perm(m);
    std::iota(perm.begin(), perm.end(), 0);
    std::optional<std::vector<long long>> best;
    // m! relabelings; fine for small m, sampled instances beyond m = 6 skip
    // the orbit minimization and use the sorted encoding directly.
    if (m > 6) return encode(profile);
    do {
        auto enc = encode(relabel_facilities(profile, perm));
        if (!best || enc < *best) best = std::move(enc);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return *best;
}

namespace {

PreferenceProfile decode(const std::vector<long long>& enc) {
    const int m = static_cast<int>(enc[0]);
    std::vector<ClientGroup> groups;
    size_t i = 1;
    while (i < enc.size()) {
        ClientGroup g;
        g.weight = enc[i++];
        for (int r = 0; r < m; ++r) g.ranking.push_back(static_cast<int>(enc[i++]));
        groups.push_back(std::move(g));
    }
    return PreferenceProfile(default_names(m), std::move(groups));
}

std::vector<std::vector<int>> all_rankings(int m) {
    std::vector<int> base(m);
    std::iota(base.begin(), base.end(), 0);
    std::vector<std::vector<int>> out;
    do {
        out.push_back(base);
    } while (std::next_permutation(base.begin(), base.end()));
    return out;
}

}  // namespace

std::vector<PreferenceProfile> enumerate_profiles(const SearchSpec& spec) {
    spec.validate();
    std::set<std::vector<long long>> seen;
    const auto names = default_names(spec.m);

    if (spec.mode == SearchSpec::Mode::exhaustive) {
        if (spec.m > 6)
            throw std::invalid_argument("exhaustive enumeration is limited to m <= 6");
        const auto rankings = all_rankings(spec.m);
        const int nr = static_cast<int>(rankings.size());
        for (int k = 1; k <= spec.max_groups && static_cast<long long>(seen.size()) < spec.budget;
             ++k) {
            std::vector<int> pick(k);
            std::iota(pick.begin(), pick.end(), 0);
            auto next_combination = [&]() {
                int i = k - 1;
                while (i >= 0 && pick[i] == nr - k + i) --i;
                if (i < 0) return false;
                ++pick[i];
                for (int j = i + 1; j < k; ++j) pick[j] = pick[j - 1] + 1;
                return true;
            };
            do {
                std::vector<long long> weights(k, 1);
                for (;;) {
                    std::vector<ClientGroup> groups;
                    for (int i = 0; i < k; ++i)
                        groups.push_back({rankings[pick[i]], weights[i]});
                    seen.insert(
                        canonical_encoding(PreferenceProfile(names, std::move(groups))));
                    if (static_cast<long long>(seen.size()) >= spec.budget) break;
                    int i = k - 1;
                    while (i >= 0 && weights[i] == spec.weight_cap) weights[i--] = 1;
                    if (i < 0) break;
                    ++weights[i];
                }
            } while (next_combination() &&
                     static_cast<long long>(seen.size()) < spec.budget);
        }
        std::vector<PreferenceProfile> out;
        for (const auto& enc : seen) out.push_back(decode(enc));
        return out;
    }

    // sample mode: deterministic stream for a fixed seed, first-seen order
    std::mt19937_64 rng(spec.seed);
    std::vector<PreferenceProfile> out;
    std::vector<int> base(spec.m);
    long long attempts = 0;
    const long long max_attempts = spec.budget * 64;
    while (static_cast<long long>(out.size()) < spec.budget && attempts++ < max_attempts) {
        int k = 1 + static_cast<int>(rng() % spec.max_groups);
        std::set<std::vector<int>> chosen;
        long long tries = 0;
        while (static_cast<int>(chosen.size()) < k && tries++ < 64) {
            std::iota(base.begin(), base.end(), 0);
            std::shuffle(base.begin(), base.end(), rng);
            chosen.insert(base);
        }
        std::vector<ClientGroup> groups;
        for (const auto& rk : chosen)
            groups.push_back({rk, 1 + static_cast<long long>(rng() % spec.weight_cap)});
        auto enc = canonical_encoding(PreferenceProfile(names, std::move(groups)));
        if (seen.insert(enc).second) out.push_back(decode(enc));
    }
    return out;
}

SearchResult search_instances(const SearchSpec& spec) {
    spec.validate();
    SearchResult res;
    std::vector<PreferenceProfile> stream;
    for (const auto& p : spec.seed_profiles) stream.push_back(coalesce(p));
    for (auto& p : enumerate_profiles(spec)) {
        if (static_cast<long long>(stream.size()) >= spec.budget) break;
        stream.push_back(std::move(p));
    }
    if (static_cast<long long>(stream.size()) > spec.budget) stream.resize(spec.budget);

    for (const auto& profile : stream) {
        ++res.evaluated;
        try {
            OptimalResult opt = optimal_scf(profile);
            // re-derive gamma from the adversary values of the returned q
            double revalidated = *std::max_element(opt.adversary_values.begin(),
                                                   opt.adversary_values.end());
            if (std::abs(revalidated - opt.gamma) > 1e-6)
                throw std::runtime_error("gamma failed adversary revalidation");
            if (opt.gamma > res.best_gamma) {
                res.best_gamma = opt.gamma;
                res.best_profile = profile;
            }
            if (opt.gamma >= spec.threshold - 1e-12) res.hits.push_back({profile, opt.gamma});
        } catch (const std::exception&) {
            ++res.failures;
        }
    }
    std::stable_sort(res.hits.begin(), res.hits.end(),
                     [](const SearchHit& a, const SearchHit& b) { return a.gamma > b.gamma; });
    return res;
}

}  // namespace medist
