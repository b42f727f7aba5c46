#pragma once

#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "medist/rational.hpp"

namespace medist::lp {

enum class Sense { maximize, minimize };
enum class Relation { le, eq, ge };

/// Outcome of solve(). iteration_limit flags a numerical failure (the cycling
/// guard tripped) and is distinct from infeasible/unbounded.
enum class Status { optimal, infeasible, unbounded, iteration_limit };

std::string_view to_string(Status s);
std::string_view to_string(Relation r);

struct Term {
    int var;
    double coeff;
};

struct Variable {
    std::string name;
    bool free_sign = false;  // default: lower bound 0
};

struct Constraint {
    std::string name;
    Relation rel = Relation::le;
    double rhs = 0.0;
    std::vector<Term> terms;
};

/// Generic LP model. Variables are nonnegative unless declared free;
/// constraints are named rows (linear form, relation, constant).
class LinearProgram {
public:
    explicit LinearProgram(Sense sense) : sense_(sense) {}

    int add_variable(std::string name, bool free_sign = false);
    int add_constraint(std::string name, Relation rel, double rhs);
    void add_objective_term(int var, double coeff);
    void add_term(int row, int var, double coeff);

    Sense sense() const { return sense_; }
    int num_variables() const { return static_cast<int>(vars_.size()); }
    int num_constraints() const { return static_cast<int>(rows_.size()); }
    const Variable& variable(int i) const { return vars_[i]; }
    const Constraint& constraint(int i) const { return rows_[i]; }
    const std::vector<double>& objective() const { return obj_; }

    int variable_index(std::string_view name) const;    // -1 if absent
    int constraint_index(std::string_view name) const;  // -1 if absent

    /// Row-wise human-readable dump (name, relation, rhs, sparse terms).
    std::string dump() const;

private:
    Sense sense_;
    std::vector<Variable> vars_;
    std::vector<double> obj_;
    std::vector<Constraint> rows_;
    std::unordered_map<std::string, int> var_index_;
    std::unordered_map<std::string, int> row_index_;
};

/// Solver result. Dual sign convention: dual[i] is the multiplier of row i
/// with sum_i dual[i]*rhs[i] equal to the optimal objective; for a maximize
/// program, le-rows get dual >= 0 and ge-rows dual <= 0 (reversed for
/// minimize); equality rows are unrestricted.
struct LpSolution {
    Status status = Status::iteration_limit;
    double objective = 0.0;
    std::vector<double> primal;
    std::vector<double> dual;
    long long iterations = 0;

    double primal_value(const LinearProgram& lp, std::string_view var) const;
    double dual_value(const LinearProgram& lp, std::string_view row) const;
};

struct SolveOptions {
    double eps = 1e-9;                // pivot / reduced-cost threshold
    long long max_iterations = -1;    // -1: scale with problem size
    int stall_limit = 2000;           // non-improving pivots before Bland's rule
};

/// Dense two-phase simplex on the dictionary tableau. Deterministic.
LpSolution solve(const LinearProgram& lp, const SolveOptions& opts = {});

/// Mechanical LP dual. ge-rows of a maximize program (le-rows of a minimize
/// program) are sign-normalized first so every inequality yields a
/// nonnegative dual variable; equality rows yield free variables.
/// dualize(dualize(lp)) is equivalent to lp up to renaming.
LinearProgram dualize(const LinearProgram& lp);

struct RowCheck {
    int row;            // constraint index, or -1 for a variable bound
    int var;            // variable index for bound rows, else -1
    double violation;   // positive amount by which the row fails
};

struct FeasibilityReport {
    bool ok = true;
    double max_violation = 0.0;
    std::vector<RowCheck> violations;
};

/// Evaluate every constraint (and sign bound) at the given point.
/// Throws if the point does not assign every variable.
FeasibilityReport check_feasible(const LinearProgram& lp, std::span<const double> point,
                                 double tol);

/// Exact variant: coefficients converted from double exactly, point given as
/// rationals. Reports the worst violation as a rational (0 if feasible).
struct ExactFeasibility {
    bool ok = true;
    Rat max_violation;
    std::string worst_row;
};
ExactFeasibility check_feasible_exact(const LinearProgram& lp, std::span<const Rat> point);

}  // namespace medist::lp
