#pragma once

#include <optional>
#include <string>
#include <vector>

#include "medist/lp.hpp"
#include "medist/metric.hpp"
#include "medist/profile.hpp"

namespace medist {

/// Probability distribution over the facilities of a profile.
struct Lottery {
    std::vector<double> probs;  // by facility index

    static Lottery point_mass(const PreferenceProfile& profile, int facility);
    /// Throws unless probs are nonnegative and sum to 1 within tol.
    void validate(const PreferenceProfile& profile, double tol = 1e-9) const;
    /// Clamp negative noise below 1e-9 to zero and rescale to exact sum 1.
    Lottery normalized() const;
};

/// Worst-case-metric LP for a fixed lottery and reference facility o:
/// maximize the q-weighted client cost over metrics consistent with the
/// profile whose cost at o is normalized to <= 1. Variables are unordered
/// point-pair distances; rows are the normalization, the per-group ranking
/// chain, and all three rotations of every point triple.
struct AdversaryModel {
    lp::LinearProgram lp;                          // zero objective until a lottery is applied
    PointSpace space;
    std::vector<std::pair<int, int>> var_points;   // LP variable -> point pair (i < j)
    int norm_row = -1;
    int o_facility = -1;
};

AdversaryModel build_adversary_model(const PreferenceProfile& profile, int o_facility);

lp::LinearProgram build_adversary_lp(const PreferenceProfile& profile, const Lottery& q,
                                     std::string_view o);

/// Canonical row names used by the adversary LP builder (shared with the
/// min-max construction and the embedded fixtures).
std::string consistency_row_name(const PointSpace& space, int group, int rank);
std::string triangle_row_name(const PointSpace& space, int a, int b, int c, int lhs_a, int lhs_b);
std::string pair_var_name(const PointSpace& space, int a, int b);

struct AdversaryOutcome {
    double value = 0.0;          // optimal ratio; meaningless when unbounded
    bool unbounded = false;
    std::string o;
    std::optional<Metric> witness;  // none when unbounded
};

AdversaryOutcome solve_adversary(const PreferenceProfile& profile, const Lottery& q,
                                 std::string_view o);

struct DistortionResult {
    double value = 0.0;
    bool unbounded = false;
    std::string o_star;
    std::optional<Metric> witness;
    std::vector<AdversaryOutcome> per_o;
};

/// Worst case over all reference facilities: the distortion of lottery q on
/// this instance (+infinity reported via unbounded).
DistortionResult distortion_of(const PreferenceProfile& profile, const Lottery& q);

}  // namespace medist
