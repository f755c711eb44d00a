#include "kfl/face_lab.hpp"

#include "kfl/errors.hpp"
#include "kfl/lp.hpp"

#include <algorithm>

namespace kfl {

namespace {

using lp::Relation;

void check_subset(const PointSet& set, const IndexSet& subset) {
    if (subset.empty()) throw InputError("subset must be nonempty");
    std::vector<bool> seen(set.size(), false);
    for (Index i : subset) {
        if (i >= set.size()) throw InputError("subset index " + std::to_string(i) + " out of range");
        if (seen[i]) throw InputError("subset index " + std::to_string(i) + " repeated");
        seen[i] = true;
    }
}

std::vector<bool> membership(std::size_t n, const IndexSet& subset) {
    std::vector<bool> in(n, false);
    for (Index i : subset) in[i] = true;
    return in;
}

// Normal variables a_j = u_j - w_j occupy columns [0, 2p); bound rows
// u_j <= 1, w_j <= 1 are appended by this helper.
void add_normal_bounds(lp::Problem& problem, std::size_t p) {
    for (std::size_t j = 0; j < 2 * p; ++j) {
        std::vector<Rational> row(problem.num_vars);
        row[j] = 1;
        problem.add(std::move(row), Relation::LessEqual, 1);
    }
}

void put_normal(std::vector<Rational>& row, std::span<const Rational> coefs) {
    const std::size_t p = coefs.size();
    for (std::size_t j = 0; j < p; ++j) {
        row[j] = coefs[j];
        row[p + j] = -coefs[j];
    }
}

std::vector<Rational> read_normal(const std::vector<Rational>& x, std::size_t p) {
    std::vector<Rational> a(p);
    for (std::size_t j = 0; j < p; ++j) a[j] = x[j] - x[p + j];
    return a;
}

bool is_zero(const std::vector<Rational>& v) {
    return std::all_of(v.begin(), v.end(), [](const Rational& x) { return sgn(x) == 0; });
}

Point difference(const Point& a, const Point& b) {
    Point d(a.size());
    for (std::size_t j = 0; j < a.size(); ++j) d[j] = a[j] - b[j];
    return d;
}

// Margin LP for a face certificate; `fixed` pins a_i = sign for one
// coordinate (used to rule out the zero normal).
std::optional<std::vector<Rational>> face_lp(const PointSet& set, const IndexSet& subset,
                                             std::optional<std::pair<std::size_t, int>> fixed, bool need_positive_margin) {
    const std::size_t p = set.dim();
    const std::size_t t_col = 2 * p;
    const auto in = membership(set.size(), subset);
    const Point& base = set[subset.front()];

    lp::Problem problem;
    problem.num_vars = 2 * p + 1;
    problem.objective.assign(problem.num_vars, Rational(0));
    problem.objective[t_col] = 1;
    for (std::size_t idx = 1; idx < subset.size(); ++idx) {
        std::vector<Rational> row(problem.num_vars);
        put_normal(row, difference(set[subset[idx]], base));
        problem.add(std::move(row), Relation::Equal, 0);
    }
    for (Index j = 0; j < set.size(); ++j) {
        if (in[j]) continue;
        std::vector<Rational> row(problem.num_vars);
        put_normal(row, difference(set[j], base));
        row[t_col] = 1;
        problem.add(std::move(row), Relation::LessEqual, 0);
    }
    add_normal_bounds(problem, p);
    {
        std::vector<Rational> row(problem.num_vars);
        row[t_col] = 1;
        problem.add(std::move(row), Relation::LessEqual, 1);
    }
    if (fixed) {
        std::vector<Rational> row(problem.num_vars);
        row[fixed->first] = 1;
        row[p + fixed->first] = -1;
        problem.add(std::move(row), Relation::Equal, fixed->second);
    }

    auto result = lp::solve(problem);
    if (result.status != lp::Status::Optimal) return std::nullopt;
    if (need_positive_margin && sgn(result.value) <= 0) return std::nullopt;
    auto a = read_normal(result.solution, p);
    if (is_zero(a)) return std::nullopt;
    return a;
}

FaceCertificate certificate_from_normal(const std::vector<Rational>& a, const Point& base, bool strict) {
    // LP keeps the other points on a.x <= a.base; flip so they are positive.
    Hyperplane h{a, dot(a, base)};
    return FaceCertificate{h.flipped().primitive(), strict};
}

}  // namespace

std::optional<FaceCertificate> face_certificate(const PointSet& set, const IndexSet& subset, bool strict) {
    check_subset(set, subset);
    const std::size_t p = set.dim();
    const Point& base = set[subset.front()];
    const bool whole = subset.size() == set.size();

    if (!whole) {
        if (auto a = face_lp(set, subset, std::nullopt, true)) return certificate_from_normal(*a, base, strict);
        if (strict) return std::nullopt;
    }
    for (std::size_t i = 0; i < p; ++i)
        for (int s : {1, -1})
            if (auto a = face_lp(set, subset, std::make_pair(i, s), false))
                return certificate_from_normal(*a, base, strict);
    return std::nullopt;
}

bool verify_certificate(const PointSet& set, const IndexSet& subset, const FaceCertificate& cert) {
    const auto& h = cert.hyperplane;
    if (h.normal.size() != set.dim() || is_zero(h.normal)) return false;
    const auto in = membership(set.size(), subset);
    for (Index i = 0; i < set.size(); ++i) {
        int s = h.side(set[i]);
        if (in[i] ? s != 0 : (cert.strict ? s <= 0 : s < 0)) return false;
    }
    return true;
}

std::optional<Hyperplane> strict_separator(const PointSet& set, const IndexSet& subset) {
    check_subset(set, subset);
    if (subset.size() == set.size()) throw InputError("strict_separator needs a proper subset");
    const std::size_t p = set.dim();
    const std::size_t b_plus = 2 * p, b_minus = 2 * p + 1, t_col = 2 * p + 2;
    const auto in = membership(set.size(), subset);

    lp::Problem problem;
    problem.num_vars = 2 * p + 3;
    problem.objective.assign(problem.num_vars, Rational(0));
    problem.objective[t_col] = 1;
    for (Index j = 0; j < set.size(); ++j) {
        std::vector<Rational> row(problem.num_vars);
        put_normal(row, set[j]);
        row[b_plus] = -1;
        row[b_minus] = 1;
        if (in[j]) {
            row[t_col] = -1;
            problem.add(std::move(row), Relation::GreaterEqual, 0);
        } else {
            row[t_col] = 1;
            problem.add(std::move(row), Relation::LessEqual, 0);
        }
    }
    add_normal_bounds(problem, p);
    {
        std::vector<Rational> row(problem.num_vars);
        row[t_col] = 1;
        problem.add(std::move(row), Relation::LessEqual, 1);
    }
    auto result = lp::solve(problem);
    if (result.status != lp::Status::Optimal || sgn(result.value) <= 0) return std::nullopt;
    Hyperplane h{read_normal(result.solution, p), result.solution[b_plus] - result.solution[b_minus]};
    return h.primitive();
}

FaceCertificate conic_edge_certificate(const Point& v1, const Point& v2) {
    if (v1.size() != 2 || v2.size() != 2) throw InputError("conic_edge_certificate takes planar points");
    if (v1 == v2) throw InputError("conic_edge_certificate needs two distinct points");
    Rational a = v2[1] - v1[1];
    Rational b = v1[0] - v2[0];
    Rational c = a * v1[0] + b * v1[1];
    // (ax + by - c)^2 = a^2 x^2 + 2ab xy + b^2 y^2 - 2ac x - 2bc y + c^2
    Hyperplane h;
    h.normal = {Rational(-2 * a * c), Rational(-2 * b * c), Rational(a * a), Rational(2 * a * b), Rational(b * b)};
    h.offset = -c * c;
    return FaceCertificate{h.primitive(), true};
}

FaceCertificate embedding_product_certificate(unsigned k, std::size_t d, const std::vector<Point>& subset) {
    if (subset.empty() || subset.size() > k) throw InputError("product certificate needs between 1 and k points");
    for (const auto& v : subset)
        if (v.size() != d) throw InputError("product certificate: point dimension differs from d");
    for (std::size_t i = 0; i < subset.size(); ++i)
        for (std::size_t j = i + 1; j < subset.size(); ++j)
            if (subset[i][0] == subset[j][0])
                throw DegeneracyError("product certificate: repeated first coordinate");
    // coefficients of prod (x - v)^2, lowest degree first
    std::vector<Rational> poly{Rational(1)};
    for (const auto& v : subset) {
        for (int rep = 0; rep < 2; ++rep) {
            std::vector<Rational> next(poly.size() + 1);
            for (std::size_t j = 0; j < poly.size(); ++j) {
                next[j + 1] += poly[j];
                next[j] -= poly[j] * v[0];
            }
            poly = std::move(next);
        }
    }
    Hyperplane h;
    h.normal.assign(2 * k + d - 1, Rational(0));
    for (std::size_t j = 1; j < poly.size(); ++j) h.normal[j - 1] = poly[j];
    h.offset = -poly[0];
    return FaceCertificate{h.primitive(), true};
}

std::size_t neighborliness_degree(const PointSet& set, std::size_t max_k, unsigned workers) {
    const std::size_t n = set.size();
    for (std::size_t k = 1; k <= max_k && k < n; ++k) {
        auto subsets = combinations(n, k);
        auto ok = parallel_map<char>(subsets.size(), workers, [&](std::size_t i) -> char {
            return face_certificate(set, subsets[i], true).has_value();
        });
        if (std::find(ok.begin(), ok.end(), 0) != ok.end()) return k - 1;
    }
    return max_k;
}

WeakNeighborlyResult is_weakly_k_neighborly(const PointSet& set, std::size_t k, unsigned workers) {
    if (k < 1 || k > set.size()) throw InputError("is_weakly_k_neighborly requires 1 <= k <= n");
    auto subsets = combinations(set.size(), k);
    auto ok = parallel_map<char>(subsets.size(), workers, [&](std::size_t i) -> char {
        return face_certificate(set, subsets[i], false).has_value();
    });
    for (std::size_t i = 0; i < ok.size(); ++i)
        if (!ok[i]) return {false, subsets[i]};
    return {true, std::nullopt};
}

RadonWitness radon_partition(const PointSet& set) {
    const std::size_t p = set.dim();
    const std::size_t n = set.size();
    if (n != p + 2)
        throw InputError("radon_partition needs exactly " + std::to_string(p + 2) + " points in dimension " +
                         std::to_string(p));

    // Kernel of the (p+1) x (p+2) system [points; 1 ... 1] by reduced row echelon form.
    std::vector<std::vector<Rational>> m(p + 1, std::vector<Rational>(n));
    for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t i = 0; i < p; ++i) m[i][j] = set[j][i];
        m[p][j] = 1;
    }
    std::vector<std::size_t> pivot_cols;
    std::size_t r = 0;
    for (std::size_t c = 0; c < n && r < m.size(); ++c) {
        std::size_t piv = r;
        while (piv < m.size() && sgn(m[piv][c]) == 0) ++piv;
        if (piv == m.size()) continue;
        std::swap(m[piv], m[r]);
        Rational inv = 1 / m[r][c];
        for (auto& v : m[r]) v *= inv;
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (i == r || sgn(m[i][c]) == 0) continue;
            Rational f = m[i][c];
            for (std::size_t j = 0; j < n; ++j) m[i][j] -= f * m[r][j];
        }
        pivot_cols.push_back(c);
        ++r;
    }
    if (pivot_cols.size() != p + 1) throw InputError("radon_partition: points are not in general linear position");
    std::size_t free_col = 0;
    while (std::find(pivot_cols.begin(), pivot_cols.end(), free_col) != pivot_cols.end()) ++free_col;
    std::vector<Rational> lambda(n);
    lambda[free_col] = 1;
    for (std::size_t i = 0; i < pivot_cols.size(); ++i) lambda[pivot_cols[i]] = -m[i][free_col];
    for (const auto& l : lambda)
        if (sgn(l) == 0) throw InputError("radon_partition: points are not in general linear position");

    IndexSet pos, neg;
    for (Index i = 0; i < n; ++i) (sgn(lambda[i]) > 0 ? pos : neg).push_back(i);
    bool swap_parts = neg.size() < pos.size() || (neg.size() == pos.size() && neg.front() == 0);
    if (swap_parts) {
        std::swap(pos, neg);
        for (auto& l : lambda) l = -l;
    }
    Rational total = 0;
    for (Index i : pos) total += lambda[i];

    RadonWitness w;
    w.part_q = pos;
    w.part_r = neg;
    w.lambdas.resize(n);
    for (Index i = 0; i < n; ++i) w.lambdas[i] = abs(lambda[i]) / total;
    w.common_point.assign(p, Rational(0));
    for (Index i : pos)
        for (std::size_t j = 0; j < p; ++j) w.common_point[j] += w.lambdas[i] * set[i][j];
    return w;
}

bool validate_radon(const PointSet& set, const RadonWitness& w) {
    const std::size_t n = set.size();
    if (w.part_q.empty() || w.part_r.empty() || w.lambdas.size() != n || w.common_point.size() != set.dim())
        return false;
    std::vector<int> owner(n, 0);
    for (Index i : w.part_q) {
        if (i >= n || owner[i]) return false;
        owner[i] = 1;
    }
    for (Index i : w.part_r) {
        if (i >= n || owner[i]) return false;
        owner[i] = 2;
    }
    if (std::find(owner.begin(), owner.end(), 0) != owner.end()) return false;
    for (const IndexSet* part : {&w.part_q, &w.part_r}) {
        Rational sum = 0;
        Point combo(set.dim(), Rational(0));
        for (Index i : *part) {
            if (sgn(w.lambdas[i]) <= 0) return false;
            sum += w.lambdas[i];
            for (std::size_t j = 0; j < set.dim(); ++j) combo[j] += w.lambdas[i] * set[i][j];
        }
        if (sum != 1 || combo != w.common_point) return false;
    }
    return true;
}

std::optional<Hyperplane> weak_separation(const PointSet& q, const PointSet& r) {
    if (q.dim() != r.dim()) throw InputError("weak_separation: dimension mismatch");
    const std::size_t p = q.dim();
    const std::size_t b_plus = 2 * p, b_minus = 2 * p + 1;
    for (std::size_t i = 0; i < p; ++i) {
        for (int s : {1, -1}) {
            lp::Problem problem;
            problem.num_vars = 2 * p + 2;
            auto add_point = [&](const Point& x, Relation rel) {
                std::vector<Rational> row(problem.num_vars);
                put_normal(row, x);
                row[b_plus] = -1;
                row[b_minus] = 1;
                problem.add(std::move(row), rel, 0);
            };
            for (const auto& x : q.points()) add_point(x, Relation::LessEqual);
            for (const auto& x : r.points()) add_point(x, Relation::GreaterEqual);
            add_normal_bounds(problem, p);
            std::vector<Rational> fix(problem.num_vars);
            fix[i] = 1;
            fix[p + i] = -1;
            problem.add(std::move(fix), Relation::Equal, s);
            auto result = lp::solve(problem);
            if (result.status != lp::Status::Optimal) continue;
            Hyperplane h{read_normal(result.solution, p), result.solution[b_plus] - result.solution[b_minus]};
            return h.primitive();
        }
    }
    return std::nullopt;
}

}  // namespace kfl
