#include "medist/adversary.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace medist {

Lottery Lottery::point_mass(const PreferenceProfile& profile, int facility) {
    Lottery q;
    q.probs.assign(profile.num_facilities(), 0.0);
    q.probs.at(facility) = 1.0;
    return q;
}

void Lottery::validate(const PreferenceProfile& profile, double tol) const {
    if (static_cast<int>(probs.size()) != profile.num_facilities())
        throw std::invalid_argument("lottery size does not match facility count");
    double sum = 0.0;
    for (double p : probs) {
        if (p < -tol) throw std::invalid_argument("negative lottery probability");
        sum += p;
    }
    if (std::abs(sum - 1.0) > tol)
        throw std::invalid_argument("lottery probabilities sum to " + std::to_string(sum) +
                                    ", not 1");
}

Lottery Lottery::normalized() const {
    Lottery out = *this;
    double sum = 0.0;
    for (double& p : out.probs) {
        if (p < 0.0) {
            if (p < -1e-9) throw std::invalid_argument("negative lottery probability");
            p = 0.0;
        }
        sum += p;
    }
    if (sum <= 0.0) throw std::invalid_argument("lottery has no mass");
    for (double& p : out.probs) p /= sum;
    return out;
}

std::string pair_var_name(const PointSpace& space, int a, int b) {
    if (a > b) std::swap(a, b);
    return "d(" + space.label(a) + "," + space.label(b) + ")";
}

std::string consistency_row_name(const PointSpace& space, int group, int rank) {
    return "cons(" + space.label(space.group_point(group)) + "," + std::to_string(rank) + ")";
}

std::string triangle_row_name(const PointSpace& space, int a, int b, int c, int lhs_a,
                              int lhs_b) {
    int t[3] = {a, b, c};
    std::sort(t, t + 3);
    if (lhs_a > lhs_b) std::swap(lhs_a, lhs_b);
    return "tri(" + space.label(t[0]) + "," + space.label(t[1]) + "," + space.label(t[2]) +
           "):" + space.label(lhs_a) + "," + space.label(lhs_b);
}

AdversaryModel build_adversary_model(const PreferenceProfile& profile, int o_facility) {
    if (o_facility < 0 || o_facility >= profile.num_facilities())
        throw std::invalid_argument("reference facility is not a facility of the profile");
    AdversaryModel model{lp::LinearProgram(lp::Sense::maximize), PointSpace::of(profile), {}, -1,
                         o_facility};
    const auto& sp = model.space;
    const int n = sp.num_points();

    std::vector<std::vector<int>> var(n, std::vector<int>(n, -1));
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            var[i][j] = var[j][i] = model.lp.add_variable(pair_var_name(sp, i, j));
            model.var_points.emplace_back(i, j);
        }

    // (1) normalization: weighted cost at o bounded by 1.
    const int op = sp.facility_point(o_facility);
    model.norm_row = model.lp.add_constraint("norm", lp::Relation::le, 1.0);
    for (int g = 0; g < profile.num_groups(); ++g)
        model.lp.add_term(model.norm_row, var[op][sp.group_point(g)],
                          static_cast<double>(profile.group(g).weight));

    // (2) ranking chains: distances weakly increase along each group's order.
    for (int g = 0; g < profile.num_groups(); ++g) {
        const int gp = sp.group_point(g);
        for (int r = 1; r < profile.num_facilities(); ++r) {
            int row = model.lp.add_constraint(consistency_row_name(sp, g, r), lp::Relation::le,
                                              0.0);
            model.lp.add_term(row, var[sp.facility_point(profile.alt(g, r))][gp], 1.0);
            model.lp.add_term(row, var[sp.facility_point(profile.alt(g, r + 1))][gp], -1.0);
        }
    }

    // (3) triangle inequality, all three rotations of every unordered triple.
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            for (int c = b + 1; c < n; ++c) {
                const int lhs[3][2] = {{a, b}, {a, c}, {b, c}};
                for (const auto& l : lhs) {
                    int row = model.lp.add_constraint(triangle_row_name(sp, a, b, c, l[0], l[1]),
                                                      lp::Relation::le, 0.0);
                    int third_a = a + b + c - l[0] - l[1];
                    model.lp.add_term(row, var[l[0]][l[1]], 1.0);
                    model.lp.add_term(row, var[l[0]][third_a], -1.0);
                    model.lp.add_term(row, var[l[1]][third_a], -1.0);
                }
            }
    return model;
}

namespace {
void apply_objective(const PreferenceProfile& profile, const Lottery& q, AdversaryModel& model) {
    const auto& sp = model.space;
    for (size_t v = 0; v < model.var_points.size(); ++v) {
        auto [i, j] = model.var_points[v];
        // facility-group pairs carry q_f * weight; all other pairs cost 0
        int lo_fac = i - sp.num_groups();
        int hi_fac = j - sp.num_groups();
        if (lo_fac < 0 && hi_fac >= 0)
            model.lp.add_objective_term(static_cast<int>(v),
                                        q.probs[hi_fac] *
                                            static_cast<double>(profile.group(i).weight));
    }
}
}  // namespace

lp::LinearProgram build_adversary_lp(const PreferenceProfile& profile, const Lottery& q,
                                     std::string_view o) {
    int of = profile.facility_index(o);
    if (of < 0) throw std::invalid_argument("unknown facility: " + std::string(o));
    q.validate(profile, 1e-9);
    AdversaryModel model = build_adversary_model(profile, of);
    apply_objective(profile, q, model);
    return std::move(model.lp);
}

AdversaryOutcome solve_adversary(const PreferenceProfile& profile, const Lottery& q,
                                 std::string_view o) {
    lp::LinearProgram prog = build_adversary_lp(profile, q, o);
    lp::LpSolution sol = lp::solve(prog);
    AdversaryOutcome out;
    out.o = std::string(o);
    if (sol.status == lp::Status::unbounded) {
        out.unbounded = true;
        return out;
    }
    if (sol.status != lp::Status::optimal)
        throw std::runtime_error("adversary LP solve failed: " +
                                 std::string(lp::to_string(sol.status)));
    out.value = sol.objective;

    // Rebuild and revalidate the witness metric from the primal point.
    PointSpace sp = PointSpace::of(profile);
    const int n = sp.num_points();
    std::vector<double> d(static_cast<size_t>(n) * n, 0.0);
    int v = 0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j, ++v) {
            double val = std::max(0.0, sol.primal[v]);
            d[static_cast<size_t>(i) * n + j] = d[static_cast<size_t>(j) * n + i] = val;
        }
    Metric witness(sp, std::move(d));
    if (!check_consistency(witness, profile).ok)
        throw std::runtime_error("adversary witness fails consistency revalidation");
    if (!check_triangle(witness).ok)
        throw std::runtime_error("adversary witness fails triangle revalidation");
    if (social_cost(witness, profile, o) > 1.0 + 1e-9)
        throw std::runtime_error("adversary witness violates normalization");
    out.witness = std::move(witness);
    return out;
}

DistortionResult distortion_of(const PreferenceProfile& profile, const Lottery& q) {
    DistortionResult res;
    for (int f = 0; f < profile.num_facilities(); ++f) {
        AdversaryOutcome o = solve_adversary(profile, q, profile.facility(f));
        if (o.unbounded && !res.unbounded) {
            res.unbounded = true;
            res.o_star = o.o;
            res.witness.reset();
        }
        if (!res.unbounded && (res.per_o.empty() || o.value > res.value)) {
            res.value = o.value;
            res.o_star = o.o;
            res.witness = o.witness;
        }
        res.per_o.push_back(std::move(o));
    }
    if (res.unbounded) res.value = std::numeric_limits<double>::infinity();
    return res;
}

}  // namespace medist
