#pragma once

#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace medist {

/// Weighted bundle of colocatable voters sharing one strict ranking.
struct ClientGroup {
    std::vector<int> ranking;  // facility indices, best first
    long long weight = 1;
};

class ParseError : public std::runtime_error {
public:
    ParseError(int line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
    int line() const { return line_; }

private:
    int line_;
};

/// Immutable election instance: an ordered facility list and weighted client
/// groups, each ranking a strict total order over all facilities.
class PreferenceProfile {
public:
    PreferenceProfile(std::vector<std::string> facilities, std::vector<ClientGroup> groups);

    int num_facilities() const { return static_cast<int>(facilities_.size()); }
    int num_groups() const { return static_cast<int>(groups_.size()); }
    long long total_weight() const { return total_weight_; }

    const std::vector<std::string>& facilities() const { return facilities_; }
    const std::string& facility(int i) const { return facilities_.at(i); }
    int facility_index(std::string_view name) const;  // -1 if absent
    const std::vector<ClientGroup>& groups() const { return groups_; }
    const ClientGroup& group(int g) const { return groups_.at(g); }

    /// r-th ranked facility (1-based rank) of group g. Throws on bad rank.
    int alt(int g, int rank) const;

private:
    std::vector<std::string> facilities_;
    std::vector<ClientGroup> groups_;
    long long total_weight_ = 0;
};

/// Parse the textual profile format: '#' comment lines, one
/// "candidates: <id> ..." line, then "<weight> : <id> ..." per group.
PreferenceProfile parse_profile(std::string_view text);

/// Inverse of parse_profile on valid profiles.
std::string format_profile(const PreferenceProfile& profile);

/// Merge groups with identical rankings (weights summed); groups ordered
/// lexicographically by ranking. Idempotent.
PreferenceProfile coalesce(const PreferenceProfile& profile);

/// Split every group into weight-1 copies (inverse direction of coalesce).
PreferenceProfile expand(const PreferenceProfile& profile);

/// Relabel facilities: position i of the ordered facility list moves to
/// position perm[i]. Group rankings are rewritten accordingly.
PreferenceProfile relabel_facilities(const PreferenceProfile& profile, std::span<const int> perm);

}  // namespace medist
