#pragma once

/**
 * Exact two-phase simplex over Rational.
 *
 * Solves   maximize c.x   subject to   A x (<=|=|>=) b,  x >= 0.
 * Pivoting follows Bland's rule (lowest-index entering column, lowest-index
 * leaving basic variable among ratio ties), so it terminates and is fully
 * deterministic.
 */

#include "kfl/rational.hpp"

#include <vector>

namespace kfl::lp {

enum class Relation { LessEqual, Equal, GreaterEqual };

struct Constraint {
    std::vector<Rational> coefficients;
    Relation relation = Relation::LessEqual;
    Rational rhs;
};

struct Problem {
    std::size_t num_vars = 0;
    std::vector<Rational> objective;  // empty means pure feasibility
    std::vector<Constraint> constraints;

    void add(std::vector<Rational> coefficients, Relation relation, Rational rhs);
};

enum class Status { Optimal, Infeasible, Unbounded };

struct Result {
    Status status = Status::Infeasible;
    Rational value;
    std::vector<Rational> solution;
};

Result solve(const Problem& problem);

}  // namespace kfl::lp
