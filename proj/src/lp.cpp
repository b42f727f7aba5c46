#include "medist/lp.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace medist::lp {

std::string_view to_string(Status s) {
    switch (s) {
        case Status::optimal: return "optimal";
        case Status::infeasible: return "infeasible";
        case Status::unbounded: return "unbounded";
        case Status::iteration_limit: return "iteration_limit";
    }
    return "?";
}

std::string_view to_string(Relation r) {
    switch (r) {
        case Relation::le: return "<=";
        case Relation::eq: return "==";
        case Relation::ge: return ">=";
    }
    return "?";
}

int LinearProgram::add_variable(std::string name, bool free_sign) {
    if (var_index_.count(name))
        throw std::invalid_argument("duplicate variable name: " + name);
    int id = static_cast<int>(vars_.size());
    var_index_.emplace(name, id);
    vars_.push_back({std::move(name), free_sign});
    obj_.push_back(0.0);
    return id;
}

int LinearProgram::add_constraint(std::string name, Relation rel, double rhs) {
    if (row_index_.count(name))
        throw std::invalid_argument("duplicate constraint name: " + name);
    int id = static_cast<int>(rows_.size());
    row_index_.emplace(name, id);
    rows_.push_back({std::move(name), rel, rhs, {}});
    return id;
}

void LinearProgram::add_objective_term(int var, double coeff) {
    obj_.at(var) += coeff;
}

void LinearProgram::add_term(int row, int var, double coeff) {
    if (var < 0 || var >= num_variables())
        throw std::out_of_range("add_term: unknown variable");
    auto& terms = rows_.at(row).terms;
    for (auto& t : terms) {
        if (t.var == var) {
            t.coeff += coeff;
            return;
        }
    }
    terms.push_back({var, coeff});
}

int LinearProgram::variable_index(std::string_view name) const {
    auto it = var_index_.find(std::string(name));
    return it == var_index_.end() ? -1 : it->second;
}

int LinearProgram::constraint_index(std::string_view name) const {
    auto it = row_index_.find(std::string(name));
    return it == row_index_.end() ? -1 : it->second;
}

namespace {
std::string fmt_coeff(double c) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%+.12g", c);
    return buf;
}
}  // namespace

std::string LinearProgram::dump() const {
    std::string out = sense_ == Sense::maximize ? "maximize" : "minimize";
    out += " vars=" + std::to_string(num_variables()) +
           " rows=" + std::to_string(num_constraints()) + "\n";
    for (const auto& v : vars_)
        out += "var " + v.name + (v.free_sign ? " free" : " >= 0") + "\n";
    out += "obj:";
    for (int j = 0; j < num_variables(); ++j)
        if (obj_[j] != 0.0) out += " " + fmt_coeff(obj_[j]) + " " + vars_[j].name;
    out += "\n";
    for (const auto& row : rows_) {
        char head[64];
        std::snprintf(head, sizeof head, "row %s %s %.12g:", row.name.c_str(),
                      std::string(to_string(row.rel)).c_str(), row.rhs);
        out += head;
        auto terms = row.terms;
        std::sort(terms.begin(), terms.end(),
                  [](const Term& a, const Term& b) { return a.var < b.var; });
        for (const auto& t : terms)
            out += " " + fmt_coeff(t.coeff) + " " + vars_[t.var].name;
        out += "\n";
    }
    return out;
}

double LpSolution::primal_value(const LinearProgram& lp, std::string_view var) const {
    int i = lp.variable_index(var);
    if (i < 0) throw std::invalid_argument("unknown variable: " + std::string(var));
    return primal.at(i);
}

double LpSolution::dual_value(const LinearProgram& lp, std::string_view row) const {
    int i = lp.constraint_index(row);
    if (i < 0) throw std::invalid_argument("unknown constraint: " + std::string(row));
    return dual.at(i);
}

LinearProgram dualize(const LinearProgram& lp) {
    const bool primal_max = lp.sense() == Sense::maximize;
    // Normalized inequality direction: le for maximize, ge for minimize.
    // A row already in that direction keeps its sign; the opposite strict
    // inequality is negated; equality rows produce free dual variables.
    LinearProgram dual(primal_max ? Sense::minimize : Sense::maximize);
    std::vector<double> row_sign(lp.num_constraints(), 1.0);
    for (int i = 0; i < lp.num_constraints(); ++i) {
        const auto& row = lp.constraint(i);
        bool natural = primal_max ? row.rel == Relation::le : row.rel == Relation::ge;
        if (!natural && row.rel != Relation::eq) row_sign[i] = -1.0;
        int y = dual.add_variable(row.name, row.rel == Relation::eq);
        dual.add_objective_term(y, row_sign[i] * row.rhs);
    }
    // One dual constraint per primal variable: for max/le form, A^T y >= c on
    // sign-bounded variables, equality on free ones (mirrored for minimize).
    for (int j = 0; j < lp.num_variables(); ++j) {
        const auto& v = lp.variable(j);
        Relation rel = v.free_sign ? Relation::eq : (primal_max ? Relation::ge : Relation::le);
        dual.add_constraint(v.name, rel, lp.objective()[j]);
    }
    for (int i = 0; i < lp.num_constraints(); ++i)
        for (const auto& t : lp.constraint(i).terms)
            dual.add_term(t.var, i, row_sign[i] * t.coeff);
    return dual;
}

FeasibilityReport check_feasible(const LinearProgram& lp, std::span<const double> point,
                                 double tol) {
    if (static_cast<int>(point.size()) != lp.num_variables())
        throw std::invalid_argument("check_feasible: point does not assign every variable");
    FeasibilityReport rep;
    auto record = [&](int row, int var, double viol) {
        if (viol > tol) {
            rep.ok = false;
            rep.violations.push_back({row, var, viol});
        }
        rep.max_violation = std::max(rep.max_violation, viol);
    };
    for (int j = 0; j < lp.num_variables(); ++j)
        if (!lp.variable(j).free_sign) record(-1, j, -point[j]);
    for (int i = 0; i < lp.num_constraints(); ++i) {
        const auto& row = lp.constraint(i);
        double lhs = 0.0;
        for (const auto& t : row.terms) lhs += t.coeff * point[t.var];
        double viol = 0.0;
        switch (row.rel) {
            case Relation::le: viol = lhs - row.rhs; break;
            case Relation::ge: viol = row.rhs - lhs; break;
            case Relation::eq: viol = std::abs(lhs - row.rhs); break;
        }
        record(i, -1, viol);
    }
    return rep;
}

ExactFeasibility check_feasible_exact(const LinearProgram& lp, std::span<const Rat> point) {
    if (static_cast<int>(point.size()) != lp.num_variables())
        throw std::invalid_argument("check_feasible_exact: point does not assign every variable");
    ExactFeasibility rep;
    Rat zero(0);
    auto record = [&](const std::string& name, const Rat& viol) {
        if (viol > zero) rep.ok = false;
        if (viol > rep.max_violation) {
            rep.max_violation = viol;
            rep.worst_row = name;
        }
    };
    for (int j = 0; j < lp.num_variables(); ++j)
        if (!lp.variable(j).free_sign) record(lp.variable(j).name, -point[j]);
    for (int i = 0; i < lp.num_constraints(); ++i) {
        const auto& row = lp.constraint(i);
        Rat lhs(0);
        for (const auto& t : row.terms) lhs += Rat::from_double(t.coeff) * point[t.var];
        Rat rhs = Rat::from_double(row.rhs);
        Rat viol(0);
        switch (row.rel) {
            case Relation::le: viol = lhs - rhs; break;
            case Relation::ge: viol = rhs - lhs; break;
            case Relation::eq: viol = lhs < rhs ? rhs - lhs : lhs - rhs; break;
        }
        record(row.name, viol);
    }
    return rep;
}

}  // namespace medist::lp
