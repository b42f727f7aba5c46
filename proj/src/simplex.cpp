#include <algorithm>
#include <cmath>
#include <vector>

#include "medist/lp.hpp"

namespace medist::lp {

namespace {

// Canonical computational form: max c'x s.t. Ax <= b, x >= 0.
// Free variables are split into positive/negative parts, ge-rows negated,
// equality rows doubled. The mapping back to the caller's model is kept.
struct Canonical {
    int m = 0, n = 0;
    std::vector<std::vector<double>> rows;   // m x n
    std::vector<double> b;
    std::vector<double> c;
    std::vector<int> col_var;                // column -> original variable
    std::vector<double> col_sign;            // +1 or -1 (negative split part)
    std::vector<int> row_orig;               // canonical row -> original row
    std::vector<double> row_sign;            // +1 kept, -1 negated copy
    bool flipped = false;                    // original sense was minimize
};

Canonical canonicalize(const LinearProgram& lp) {
    Canonical cf;
    cf.flipped = lp.sense() == Sense::minimize;
    for (int j = 0; j < lp.num_variables(); ++j) {
        cf.col_var.push_back(j);
        cf.col_sign.push_back(1.0);
        if (lp.variable(j).free_sign) {
            cf.col_var.push_back(j);
            cf.col_sign.push_back(-1.0);
        }
    }
    cf.n = static_cast<int>(cf.col_var.size());
    std::vector<int> first_col(lp.num_variables(), -1);
    for (int k = 0; k < cf.n; ++k)
        if (first_col[cf.col_var[k]] < 0) first_col[cf.col_var[k]] = k;

    cf.c.assign(cf.n, 0.0);
    for (int k = 0; k < cf.n; ++k) {
        double v = lp.objective()[cf.col_var[k]] * cf.col_sign[k];
        cf.c[k] = cf.flipped ? -v : v;
    }
    auto emit = [&](const Constraint& row, int orig, double sign) {
        std::vector<double> dense(cf.n, 0.0);
        for (const auto& t : row.terms) {
            int k = first_col[t.var];
            dense[k] += sign * t.coeff;
            if (lp.variable(t.var).free_sign) dense[k + 1] -= sign * t.coeff;
        }
        cf.rows.push_back(std::move(dense));
        cf.b.push_back(sign * row.rhs);
        cf.row_orig.push_back(orig);
        cf.row_sign.push_back(sign);
    };
    for (int i = 0; i < lp.num_constraints(); ++i) {
        const auto& row = lp.constraint(i);
        switch (row.rel) {
            case Relation::le: emit(row, i, 1.0); break;
            case Relation::ge: emit(row, i, -1.0); break;
            case Relation::eq:
                emit(row, i, 1.0);
                emit(row, i, -1.0);
                break;
        }
    }
    cf.m = static_cast<int>(cf.rows.size());
    return cf;
}

// Dictionary simplex. Tableau D is (m+2) x (n+2): column n is the phase-1
// artificial, column n+1 the rhs; row m is the objective (value accumulates
// in D[m][n+1]), row m+1 the phase-1 objective. Variable ids: structural
// 0..n-1, slacks n..n+m-1, artificial -1.
class Simplex {
public:
    Simplex(const Canonical& cf, const SolveOptions& opts)
        : m_(cf.m), n_(cf.n), width_(cf.n + 2), opts_(opts),
          d_((cf.m + 2) * (cf.n + 2), 0.0), basic_(cf.m), nonbasic_(cf.n + 1) {
        for (int i = 0; i < m_; ++i) {
            double* row = at(i);
            std::copy(cf.rows[i].begin(), cf.rows[i].end(), row);
            row[n_] = -1.0;
            row[n_ + 1] = cf.b[i];
            basic_[i] = n_ + i;
        }
        for (int j = 0; j < n_; ++j) {
            nonbasic_[j] = j;
            at(m_)[j] = -cf.c[j];
        }
        nonbasic_[n_] = kArtificial;
        at(m_ + 1)[n_] = 1.0;
        max_iters_ = opts.max_iterations >= 0 ? opts.max_iterations
                                              : 20000LL + 50LL * (m_ + n_);
    }

    Status run() {
        double min_b = 0.0;
        int r = -1;
        for (int i = 0; i < m_; ++i) {
            if (at(i)[n_ + 1] < min_b) {
                min_b = at(i)[n_ + 1];
                r = i;
            }
        }
        if (r >= 0 && min_b < -opts_.eps) {
            pivot(r, n_);
            Phase p = iterate(m_ + 1);
            if (p == Phase::limit) return Status::iteration_limit;
            if (p == Phase::unbounded) return Status::iteration_limit;  // cannot happen cleanly
            if (at(m_ + 1)[n_ + 1] < -1e-7) return Status::infeasible;
            for (int i = 0; i < m_; ++i) {
                if (basic_[i] != kArtificial) continue;
                int s = -1;
                double best = 0.0;
                for (int j = 0; j <= n_; ++j) {
                    if (nonbasic_[j] == kArtificial) continue;
                    if (std::abs(at(i)[j]) > best) {
                        best = std::abs(at(i)[j]);
                        s = j;
                    }
                }
                if (s >= 0 && best > opts_.eps) pivot(i, s);
                // An all-zero row is a redundant 0 = 0 constraint; it stays
                // zero under further pivots and never blocks a ratio test.
            }
        }
        Phase p = iterate(m_);
        if (p == Phase::limit) return Status::iteration_limit;
        if (p == Phase::unbounded) return Status::unbounded;
        return Status::optimal;
    }

    double objective() const { return d_[m_ * width_ + n_ + 1]; }
    long long iterations() const { return iters_; }

    // Basic structural variables carry the primal values.
    void extract_primal(std::vector<double>& x) const {
        x.assign(n_, 0.0);
        for (int i = 0; i < m_; ++i)
            if (basic_[i] >= 0 && basic_[i] < n_) x[basic_[i]] = cat(i)[n_ + 1];
    }

    // Dual of canonical row i = reduced cost of its slack at optimality.
    void extract_dual(std::vector<double>& y) const {
        y.assign(m_, 0.0);
        for (int j = 0; j <= n_; ++j) {
            int id = nonbasic_[j];
            if (id >= n_ && id < n_ + m_) y[id - n_] = std::max(0.0, cat(m_)[j]);
        }
    }

private:
    static constexpr int kArtificial = -1;
    enum class Phase { optimal, unbounded, limit };

    double* at(int i) { return d_.data() + static_cast<size_t>(i) * width_; }
    const double* cat(int i) const { return d_.data() + static_cast<size_t>(i) * width_; }

    void pivot(int r, int s) {
        double* prow = at(r);
        const double inv = 1.0 / prow[s];
        for (int i = 0; i < m_ + 2; ++i) {
            if (i == r) continue;
            double* row = at(i);
            const double factor = row[s] * inv;
            if (factor == 0.0) continue;
            for (int j = 0; j < width_; ++j) row[j] -= factor * prow[j];
            row[s] = -factor;
        }
        for (int j = 0; j < width_; ++j) prow[j] *= inv;
        prow[s] = inv;
        std::swap(basic_[r], nonbasic_[s]);
        ++iters_;
    }

    Phase iterate(int obj_row) {
        bool bland = false;
        int stall = 0;
        double last = at(obj_row)[n_ + 1];
        for (;;) {
            if (iters_ >= max_iters_) return Phase::limit;
            const double* obj = cat(obj_row);
            int s = -1;
            if (!bland) {
                double best = -opts_.eps;
                int best_id = 0;
                for (int j = 0; j <= n_; ++j) {
                    int id = nonbasic_[j];
                    if (id == kArtificial) continue;
                    if (obj[j] < best || (obj[j] == best && s >= 0 && id < best_id)) {
                        best = obj[j];
                        best_id = id;
                        s = j;
                    }
                }
            } else {
                int best_id = 0;
                for (int j = 0; j <= n_; ++j) {
                    int id = nonbasic_[j];
                    if (id == kArtificial) continue;
                    if (obj[j] < -opts_.eps && (s < 0 || id < best_id)) {
                        best_id = id;
                        s = j;
                    }
                }
            }
            if (s < 0) return Phase::optimal;

            int r = -1;
            double best_ratio = 0.0, best_piv = 0.0;
            for (int i = 0; i < m_; ++i) {
                const double a = cat(i)[s];
                if (a <= opts_.eps) continue;
                const double ratio = cat(i)[n_ + 1] / a;
                bool take;
                if (r < 0) {
                    take = true;
                } else if (ratio < best_ratio - 1e-12) {
                    take = true;
                } else if (ratio > best_ratio + 1e-12) {
                    take = false;
                } else if (!bland) {
                    take = a > best_piv + 1e-12 ||
                           (std::abs(a - best_piv) <= 1e-12 && basic_[i] < basic_[r]);
                } else {
                    take = basic_[i] < basic_[r];
                }
                if (take) {
                    r = i;
                    best_ratio = ratio;
                    best_piv = a;
                }
            }
            if (r < 0) return Phase::unbounded;
            pivot(r, s);

            const double now = at(obj_row)[n_ + 1];
            if (now > last + 1e-12) {
                last = now;
                stall = 0;
            } else if (!bland && ++stall >= opts_.stall_limit) {
                bland = true;  // degeneracy guard: Bland's rule terminates
            }
        }
    }

    int m_, n_, width_;
    SolveOptions opts_;
    std::vector<double> d_;
    std::vector<int> basic_, nonbasic_;
    long long iters_ = 0;
    long long max_iters_ = 0;
};

}  // namespace

LpSolution solve(const LinearProgram& lp, const SolveOptions& opts) {
    Canonical cf = canonicalize(lp);
    Simplex splx(cf, opts);
    LpSolution sol;
    sol.status = splx.run();
    sol.iterations = splx.iterations();
    if (sol.status != Status::optimal) return sol;

    std::vector<double> xc;
    splx.extract_primal(xc);
    sol.primal.assign(lp.num_variables(), 0.0);
    for (int k = 0; k < cf.n; ++k) sol.primal[cf.col_var[k]] += cf.col_sign[k] * xc[k];
    for (double& v : sol.primal)
        if (std::abs(v) < 1e-11) v = 0.0;

    std::vector<double> yc;
    splx.extract_dual(yc);
    sol.dual.assign(lp.num_constraints(), 0.0);
    const double sense_sign = cf.flipped ? -1.0 : 1.0;
    for (int k = 0; k < cf.m; ++k)
        sol.dual[cf.row_orig[k]] += sense_sign * cf.row_sign[k] * yc[k];
    for (double& v : sol.dual)
        if (std::abs(v) < 1e-11) v = 0.0;

    sol.objective = cf.flipped ? -splx.objective() : splx.objective();
    return sol;
}

}  // namespace medist::lp
