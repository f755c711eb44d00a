#include "kfl/lp.hpp"

#include "kfl/errors.hpp"

#include <limits>
#include <optional>

namespace kfl::lp {

void Problem::add(std::vector<Rational> coefficients, Relation relation, Rational rhs) {
    if (coefficients.size() != num_vars) throw InputError("lp: constraint width does not match variable count");
    constraints.push_back({std::move(coefficients), relation, std::move(rhs)});
}

namespace {

constexpr std::size_t npos = std::numeric_limits<std::size_t>::max();

class Tableau {
public:
    // rows_[i] has cols_+1 entries; the last is the right-hand side.
    std::vector<std::vector<Rational>> rows;
    std::vector<std::size_t> basis;
    std::size_t cols = 0;

    void pivot(std::size_t r, std::size_t c) {
        auto& prow = rows[r];
        Rational inv = 1 / prow[c];
        for (auto& v : prow)
            if (sgn(v) != 0) v *= inv;
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i == r || sgn(rows[i][c]) == 0) continue;
            Rational factor = rows[i][c];
            auto& row = rows[i];
            for (std::size_t j = 0; j <= cols; ++j)
                if (sgn(prow[j]) != 0) row[j] -= factor * prow[j];
        }
        basis[r] = c;
    }

    // Maximizes costs.x over the columns flagged in `allowed`.
    // Returns false if unbounded.
    bool optimize(const std::vector<Rational>& costs, const std::vector<bool>& allowed) {
        while (true) {
            std::size_t entering = npos;
            for (std::size_t j = 0; j < cols && entering == npos; ++j) {
                if (!allowed[j] || is_basic(j)) continue;
                if (sgn(reduced_cost(costs, j)) > 0) entering = j;
            }
            if (entering == npos) return true;

            std::size_t leaving = npos;
            Rational best_ratio;
            for (std::size_t i = 0; i < rows.size(); ++i) {
                if (sgn(rows[i][entering]) <= 0) continue;
                Rational ratio = rows[i][cols] / rows[i][entering];
                if (leaving == npos || ratio < best_ratio ||
                    (ratio == best_ratio && basis[i] < basis[leaving])) {
                    leaving = i;
                    best_ratio = ratio;
                }
            }
            if (leaving == npos) return false;
            pivot(leaving, entering);
        }
    }

    Rational objective_value(const std::vector<Rational>& costs) const {
        Rational v = 0;
        for (std::size_t i = 0; i < rows.size(); ++i)
            if (sgn(costs[basis[i]]) != 0) v += costs[basis[i]] * rows[i][cols];
        return v;
    }

private:
    bool is_basic(std::size_t j) const {
        for (auto b : basis)
            if (b == j) return true;
        return false;
    }

    Rational reduced_cost(const std::vector<Rational>& costs, std::size_t j) const {
        Rational z = costs[j];
        for (std::size_t i = 0; i < rows.size(); ++i)
            if (sgn(costs[basis[i]]) != 0 && sgn(rows[i][j]) != 0) z -= costs[basis[i]] * rows[i][j];
        return z;
    }
};

}  // namespace

Result solve(const Problem& problem) {
    const std::size_t n = problem.num_vars;
    if (!problem.objective.empty() && problem.objective.size() != n)
        throw InputError("lp: objective width does not match variable count");

    // Normalize to nonnegative right-hand sides.
    struct Row {
        std::vector<Rational> a;
        Relation rel;
        Rational b;
    };
    std::vector<Row> normalized;
    normalized.reserve(problem.constraints.size());
    std::size_t slack_count = 0, artificial_count = 0;
    for (const auto& c : problem.constraints) {
        Row row{c.coefficients, c.relation, c.rhs};
        if (sgn(row.b) < 0) {
            for (auto& v : row.a) v = -v;
            row.b = -row.b;
            if (row.rel == Relation::LessEqual)
                row.rel = Relation::GreaterEqual;
            else if (row.rel == Relation::GreaterEqual)
                row.rel = Relation::LessEqual;
        }
        if (row.rel != Relation::Equal) ++slack_count;
        if (row.rel != Relation::LessEqual) ++artificial_count;
        normalized.push_back(std::move(row));
    }

    // Column layout: structural | slack/surplus | artificial.
    const std::size_t m = normalized.size();
    const std::size_t first_slack = n;
    const std::size_t first_artificial = n + slack_count;
    Tableau t;
    t.cols = n + slack_count + artificial_count;
    t.rows.assign(m, std::vector<Rational>(t.cols + 1));
    t.basis.assign(m, npos);
    std::size_t next_slack = first_slack, next_artificial = first_artificial;
    for (std::size_t i = 0; i < m; ++i) {
        auto& row = t.rows[i];
        for (std::size_t j = 0; j < n; ++j) row[j] = normalized[i].a[j];
        row[t.cols] = normalized[i].b;
        switch (normalized[i].rel) {
            case Relation::LessEqual:
                row[next_slack] = 1;
                t.basis[i] = next_slack++;
                break;
            case Relation::GreaterEqual:
                row[next_slack++] = -1;
                row[next_artificial] = 1;
                t.basis[i] = next_artificial++;
                break;
            case Relation::Equal:
                row[next_artificial] = 1;
                t.basis[i] = next_artificial++;
                break;
        }
    }

    Result result;
    std::vector<bool> all_columns(t.cols, true);
    if (artificial_count > 0) {
        std::vector<Rational> phase1(t.cols);
        for (std::size_t j = first_artificial; j < t.cols; ++j) phase1[j] = -1;
        t.optimize(phase1, all_columns);
        if (sgn(t.objective_value(phase1)) < 0) {
            result.status = Status::Infeasible;
            return result;
        }
        // Drive zero-level artificials out of the basis; drop redundant rows.
        for (std::size_t i = 0; i < t.rows.size();) {
            if (t.basis[i] < first_artificial) {
                ++i;
                continue;
            }
            std::size_t col = npos;
            for (std::size_t j = 0; j < first_artificial && col == npos; ++j)
                if (sgn(t.rows[i][j]) != 0) col = j;
            if (col == npos) {
                t.rows.erase(t.rows.begin() + static_cast<std::ptrdiff_t>(i));
                t.basis.erase(t.basis.begin() + static_cast<std::ptrdiff_t>(i));
                continue;
            }
            t.pivot(i, col);
            ++i;
        }
    }

    std::vector<Rational> costs(t.cols);
    for (std::size_t j = 0; j < problem.objective.size(); ++j) costs[j] = problem.objective[j];
    std::vector<bool> allowed(t.cols, false);
    for (std::size_t j = 0; j < first_artificial; ++j) allowed[j] = true;
    if (!problem.objective.empty() && !t.optimize(costs, allowed)) {
        result.status = Status::Unbounded;
        return result;
    }

    result.status = Status::Optimal;
    result.solution.assign(n, Rational(0));
    for (std::size_t i = 0; i < t.rows.size(); ++i)
        if (t.basis[i] < n) result.solution[t.basis[i]] = t.rows[i][t.cols];
    result.value = 0;
    for (std::size_t j = 0; j < problem.objective.size(); ++j) result.value += problem.objective[j] * result.solution[j];
    return result;
}

}  // namespace kfl::lp
