#include "medist/optimal.hpp"

#include <cmath>
#include <stdexcept>

namespace medist {

std::string best_dist_y_name(std::string_view o, std::string_view adversary_row) {
    return "y(" + std::string(o) + "|" + std::string(adversary_row) + ")";
}

std::string best_dist_q_name(std::string_view o) { return "q(" + std::string(o) + ")"; }

std::string best_dist_dual_d_name(std::string_view o, std::string_view pair_var) {
    return std::string(o) + "|" + std::string(pair_var);
}

lp::LinearProgram build_best_dist(const PreferenceProfile& profile) {
    lp::LinearProgram prog(lp::Sense::minimize);
    const int gamma = prog.add_variable("gamma");
    prog.add_objective_term(gamma, 1.0);
    std::vector<int> qvar;
    for (const auto& f : profile.facilities()) qvar.push_back(prog.add_variable(best_dist_q_name(f)));

    const PointSpace sp = PointSpace::of(profile);
    for (int of = 0; of < profile.num_facilities(); ++of) {
        const std::string& o = profile.facility(of);
        AdversaryModel adv = build_adversary_model(profile, of);

        std::vector<int> yvar(adv.lp.num_constraints());
        for (int r = 0; r < adv.lp.num_constraints(); ++r)
            yvar[r] = prog.add_variable(best_dist_y_name(o, adv.lp.constraint(r).name));

        // Transposed block: for every pair variable p of the adversary LP,
        // sum_r A^o[r][p] y^o_r >= (q-weighted objective coefficient of p).
        std::vector<int> dual_row(adv.lp.num_variables());
        for (int p = 0; p < adv.lp.num_variables(); ++p)
            dual_row[p] = prog.add_constraint(
                "dual(" + o + "|" + adv.lp.variable(p).name + ")", lp::Relation::ge, 0.0);
        for (int r = 0; r < adv.lp.num_constraints(); ++r)
            for (const auto& t : adv.lp.constraint(r).terms)
                prog.add_term(dual_row[t.var], yvar[r], t.coeff);
        for (size_t p = 0; p < adv.var_points.size(); ++p) {
            auto [i, j] = adv.var_points[p];
            int hi_fac = j - sp.num_groups();
            if (i < sp.num_groups() && hi_fac >= 0)
                prog.add_term(dual_row[p], qvar[hi_fac],
                              -static_cast<double>(profile.group(i).weight));
        }

        // Only the normalization row of the adversary LP has nonzero rhs, so
        // (y^o)^T b^o reduces to that single multiplier.
        int bound = prog.add_constraint("bound(" + o + ")", lp::Relation::le, 0.0);
        prog.add_term(bound, yvar[adv.norm_row], 1.0);
        prog.add_term(bound, gamma, -1.0);
    }

    int simplex = prog.add_constraint("simplex", lp::Relation::ge, 1.0);
    for (int f = 0; f < profile.num_facilities(); ++f) prog.add_term(simplex, qvar[f], 1.0);
    return prog;
}

lp::LinearProgram build_best_dist_dual(const PreferenceProfile& profile) {
    lp::LinearProgram prog(lp::Sense::maximize);
    const PointSpace sp = PointSpace::of(profile);
    const int n = sp.num_points();
    const int m = profile.num_facilities();

    const int phi = prog.add_variable("phi");
    prog.add_objective_term(phi, 1.0);
    // One symmetric distance family per facility o.
    std::vector<std::vector<std::vector<int>>> var(
        m, std::vector<std::vector<int>>(n, std::vector<int>(n, -1)));
    for (int of = 0; of < m; ++of)
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                var[of][i][j] = var[of][j][i] = prog.add_variable(
                    best_dist_dual_d_name(profile.facility(of), pair_var_name(sp, i, j)));

    int norm = prog.add_constraint("norm", lp::Relation::le, 1.0);
    for (int of = 0; of < m; ++of)
        for (int g = 0; g < profile.num_groups(); ++g)
            prog.add_term(norm, var[of][sp.facility_point(of)][sp.group_point(g)],
                          static_cast<double>(profile.group(g).weight));

    for (int i = 0; i < m; ++i) {
        int row = prog.add_constraint("cost(" + profile.facility(i) + ")", lp::Relation::le, 0.0);
        prog.add_term(row, phi, 1.0);
        for (int of = 0; of < m; ++of)
            for (int g = 0; g < profile.num_groups(); ++g)
                prog.add_term(row, var[of][sp.facility_point(i)][sp.group_point(g)],
                              -static_cast<double>(profile.group(g).weight));
    }

    for (int of = 0; of < m; ++of) {
        const std::string& o = profile.facility(of);
        for (int g = 0; g < profile.num_groups(); ++g) {
            const int gp = sp.group_point(g);
            for (int r = 1; r < m; ++r) {
                int row = prog.add_constraint(
                    o + "|" + consistency_row_name(sp, g, r), lp::Relation::le, 0.0);
                prog.add_term(row, var[of][sp.facility_point(profile.alt(g, r))][gp], 1.0);
                prog.add_term(row, var[of][sp.facility_point(profile.alt(g, r + 1))][gp], -1.0);
            }
        }
        for (int a = 0; a < n; ++a)
            for (int b = a + 1; b < n; ++b)
                for (int c = b + 1; c < n; ++c) {
                    const int lhs[3][2] = {{a, b}, {a, c}, {b, c}};
                    for (const auto& l : lhs) {
                        int row = prog.add_constraint(
                            o + "|" + triangle_row_name(sp, a, b, c, l[0], l[1]),
                            lp::Relation::le, 0.0);
                        int third = a + b + c - l[0] - l[1];
                        prog.add_term(row, var[of][l[0]][l[1]], 1.0);
                        prog.add_term(row, var[of][l[0]][third], -1.0);
                        prog.add_term(row, var[of][l[1]][third], -1.0);
                    }
                }
    }
    return prog;
}

OptimalResult optimal_scf(const PreferenceProfile& profile) {
    lp::LinearProgram prog = build_best_dist(profile);
    lp::LpSolution sol = lp::solve(prog);
    if (sol.status != lp::Status::optimal)
        throw std::runtime_error("best-dist solve failed: " +
                                 std::string(lp::to_string(sol.status)));
    OptimalResult res;
    res.gamma = sol.objective;

    Lottery q;
    double qsum = 0.0;
    for (const auto& f : profile.facilities()) {
        double v = sol.primal_value(prog, best_dist_q_name(f));
        q.probs.push_back(v);
        qsum += v;
    }
    if (std::abs(qsum - 1.0) > 1e-6)
        throw std::runtime_error("optimal lottery mass " + std::to_string(qsum) +
                                 " deviates from 1 beyond tolerance");
    res.q = q.normalized();

    for (int of = 0; of < profile.num_facilities(); ++of) {
        AdversaryOutcome o = solve_adversary(profile, res.q, profile.facility(of));
        if (o.unbounded)
            throw std::runtime_error("adversary unbounded at the optimal lottery");
        res.adversary_values.push_back(o.value);
        if (std::abs(o.value - res.gamma) <= 1e-6) res.tight_os.push_back(profile.facility(of));
    }

    for (int of = 0; of < profile.num_facilities(); ++of) {
        const std::string& o = profile.facility(of);
        auto& block = res.multipliers[o];
        const std::string prefix = "y(" + o + "|";
        for (int v = 0; v < prog.num_variables(); ++v) {
            const std::string& name = prog.variable(v).name;
            if (name.rfind(prefix, 0) == 0 && sol.primal[v] > 1e-12)
                block.emplace(name.substr(prefix.size(), name.size() - prefix.size() - 1),
                              sol.primal[v]);
        }
    }
    return res;
}

DualMetricsResult optimal_dual_metrics(const PreferenceProfile& profile) {
    lp::LinearProgram prog = build_best_dist_dual(profile);
    lp::LpSolution sol = lp::solve(prog);
    if (sol.status != lp::Status::optimal)
        throw std::runtime_error("best-dist-dual solve failed: " +
                                 std::string(lp::to_string(sol.status)));
    DualMetricsResult res;
    res.phi = sol.objective;
    const PointSpace sp = PointSpace::of(profile);
    const int n = sp.num_points();
    for (int of = 0; of < profile.num_facilities(); ++of) {
        std::vector<double> d(static_cast<size_t>(n) * n, 0.0);
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) {
                double v = std::max(0.0, sol.primal_value(prog, best_dist_dual_d_name(
                                                                    profile.facility(of),
                                                                    pair_var_name(sp, i, j))));
                d[static_cast<size_t>(i) * n + j] = d[static_cast<size_t>(j) * n + i] = v;
            }
        Metric metric(sp, std::move(d));
        if (!check_consistency(metric, profile).ok)
            throw std::runtime_error("dual metric fails consistency revalidation");
        if (!check_triangle(metric).ok)
            throw std::runtime_error("dual metric fails triangle revalidation");
        res.metrics.push_back(std::move(metric));
    }
    return res;
}

}  // namespace medist
