#include "medist/profile.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace medist {

PreferenceProfile::PreferenceProfile(std::vector<std::string> facilities,
                                     std::vector<ClientGroup> groups)
    : facilities_(std::move(facilities)), groups_(std::move(groups)) {
    if (facilities_.empty()) throw std::invalid_argument("profile needs at least one facility");
    if (groups_.empty()) throw std::invalid_argument("profile needs at least one client group");
    for (size_t i = 0; i < facilities_.size(); ++i)
        for (size_t j = i + 1; j < facilities_.size(); ++j)
            if (facilities_[i] == facilities_[j])
                throw std::invalid_argument("duplicate facility identifier: " + facilities_[i]);
    const int m = num_facilities();
    for (const auto& g : groups_) {
        if (g.weight < 1) throw std::invalid_argument("group weight must be >= 1");
        if (static_cast<int>(g.ranking.size()) != m)
            throw std::invalid_argument("ranking must cover every facility");
        std::vector<char> seen(m, 0);
        for (int f : g.ranking) {
            if (f < 0 || f >= m) throw std::invalid_argument("ranking references unknown facility");
            if (seen[f]) throw std::invalid_argument("duplicate facility in ranking");
            seen[f] = 1;
        }
        total_weight_ += g.weight;
    }
}

int PreferenceProfile::facility_index(std::string_view name) const {
    for (int i = 0; i < num_facilities(); ++i)
        if (facilities_[i] == name) return i;
    return -1;
}

int PreferenceProfile::alt(int g, int rank) const {
    const auto& grp = groups_.at(g);
    if (rank < 1 || rank > num_facilities())
        throw std::out_of_range("alt: rank " + std::to_string(rank) + " out of range 1.." +
                                std::to_string(num_facilities()));
    return grp.ranking[rank - 1];
}

namespace {
std::vector<std::string> tokens(std::string_view s) {
    std::vector<std::string> out;
    std::istringstream in{std::string(s)};
    std::string t;
    while (in >> t) out.push_back(t);
    return out;
}
}  // namespace

PreferenceProfile parse_profile(std::string_view text) {
    std::vector<std::string> facilities;
    std::vector<ClientGroup> groups;
    bool have_candidates = false;
    int lineno = 0;
    std::istringstream in{std::string(text)};
    std::string line;
    while (std::getline(in, line)) {
        ++lineno;
        std::string_view sv(line);
        while (!sv.empty() && (sv.back() == '\r' || sv.back() == ' ' || sv.back() == '\t'))
            sv.remove_suffix(1);
        while (!sv.empty() && (sv.front() == ' ' || sv.front() == '\t')) sv.remove_prefix(1);
        if (sv.empty() || sv.front() == '#') continue;
        auto colon = sv.find(':');
        if (colon == std::string_view::npos)
            throw ParseError(lineno, "expected ':' separator");
        auto head = tokens(sv.substr(0, colon));
        auto tail = tokens(sv.substr(colon + 1));
        if (head.size() == 1 && head[0] == "candidates") {
            if (have_candidates) throw ParseError(lineno, "duplicate candidates line");
            if (tail.empty()) throw ParseError(lineno, "candidates line lists no facilities");
            for (const auto& id : tail) {
                if (std::find(facilities.begin(), facilities.end(), id) != facilities.end())
                    throw ParseError(lineno, "duplicate facility identifier: " + id);
                facilities.push_back(id);
            }
            have_candidates = true;
            continue;
        }
        if (!have_candidates)
            throw ParseError(lineno, "group line before candidates line");
        if (head.size() != 1) throw ParseError(lineno, "expected '<weight> : <ranking>'");
        long long weight = 0;
        try {
            size_t pos = 0;
            weight = std::stoll(head[0], &pos);
            if (pos != head[0].size()) throw std::invalid_argument("");
        } catch (const std::exception&) {
            throw ParseError(lineno, "bad group weight: " + head[0]);
        }
        if (weight < 1) throw ParseError(lineno, "group weight must be a positive integer");
        ClientGroup g;
        g.weight = weight;
        std::vector<char> seen(facilities.size(), 0);
        for (const auto& id : tail) {
            auto it = std::find(facilities.begin(), facilities.end(), id);
            if (it == facilities.end())
                throw ParseError(lineno, "unknown facility in ranking: " + id);
            int f = static_cast<int>(it - facilities.begin());
            if (seen[f]) throw ParseError(lineno, "duplicate facility in ranking: " + id);
            seen[f] = 1;
            g.ranking.push_back(f);
        }
        if (g.ranking.size() != facilities.size()) {
            for (size_t f = 0; f < facilities.size(); ++f)
                if (!seen[f])
                    throw ParseError(lineno, "ranking missing facility: " + facilities[f]);
        }
        groups.push_back(std::move(g));
    }
    if (!have_candidates) throw ParseError(lineno == 0 ? 1 : lineno, "empty input");
    if (groups.empty()) throw ParseError(lineno, "no client groups");
    return PreferenceProfile(std::move(facilities), std::move(groups));
}

std::string format_profile(const PreferenceProfile& profile) {
    std::string out = "candidates:";
    for (const auto& f : profile.facilities()) out += " " + f;
    out += "\n";
    for (const auto& g : profile.groups()) {
        out += std::to_string(g.weight) + " :";
        for (int f : g.ranking) out += " " + profile.facility(f);
        out += "\n";
    }
    return out;
}

PreferenceProfile coalesce(const PreferenceProfile& profile) {
    std::map<std::vector<int>, long long> merged;
    for (const auto& g : profile.groups()) merged[g.ranking] += g.weight;
    std::vector<ClientGroup> groups;
    for (const auto& [ranking, weight] : merged) groups.push_back({ranking, weight});
    return PreferenceProfile(profile.facilities(), std::move(groups));
}

PreferenceProfile expand(const PreferenceProfile& profile) {
    std::vector<ClientGroup> groups;
    for (const auto& g : profile.groups())
        for (long long i = 0; i < g.weight; ++i) groups.push_back({g.ranking, 1});
    return PreferenceProfile(profile.facilities(), std::move(groups));
}

PreferenceProfile relabel_facilities(const PreferenceProfile& profile,
                                     std::span<const int> perm) {
    const int m = profile.num_facilities();
    if (static_cast<int>(perm.size()) != m)
        throw std::invalid_argument("relabel_facilities: permutation size mismatch");
    std::vector<char> seen(m, 0);
    for (int p : perm) {
        if (p < 0 || p >= m || seen[p])
            throw std::invalid_argument("relabel_facilities: not a permutation");
        seen[p] = 1;
    }
    std::vector<std::string> facilities(m);
    for (int i = 0; i < m; ++i) facilities[perm[i]] = profile.facility(i);
    std::vector<ClientGroup> groups;
    for (const auto& g : profile.groups()) {
        ClientGroup ng;
        ng.weight = g.weight;
        for (int f : g.ranking) ng.ranking.push_back(perm[f]);
        groups.push_back(std::move(ng));
    }
    return PreferenceProfile(std::move(facilities), std::move(groups));
}

}  // namespace medist
