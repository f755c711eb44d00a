#include "kfl/formula_bank.hpp"

#include "kfl/combinatorics.hpp"
#include "kfl/errors.hpp"
#include "kfl/rational.hpp"

namespace kfl::formulas {

namespace {

[[noreturn]] void domain(const std::string& what) { throw InputError(what); }

Count ceil_div_rational(const Integer& num, const Integer& den) { return ceil_to_int64(Rational(num, den)); }

}  // namespace

Count neighborly_e_k(Count n, Count d, Count k) {
    if (d < 1 || n <= d) domain("neighborly_e_k requires n > d >= 1");
    if (k < 0 || k > n - d) domain("neighborly_e_k requires 0 <= k <= n - d");
    if (d % 2 == 1) {
        const Count h = (d + 1) / 2;
        return 2 * binomial(k + h - 1, h - 1) * binomial(n - k - h, h - 1);
    }
    const Count h = d / 2;
    return binomial(k + h - 1, h - 1) * binomial(n - k - h, h) + binomial(k + h, h) * binomial(n - k - h - 1, h - 1);
}

Count circle_count(Count n_points, Count k) {
    if (n_points % 2 == 0) domain("circle_count requires an odd number of points");
    const Count m = (n_points - 1) / 2;
    if (m < 2) domain("circle_count requires at least 5 points");
    if (k < 0 || k > 2 * m - 2) domain("circle_count requires 0 <= k <= n_points - 3");
    return 2 * (k + 1) * (2 * m - k - 1);
}

Count conic_count(Count n, Count k) {
    if (n < 6) domain("conic_count requires n >= 6");
    if (k < 0 || k > n - 5) domain("conic_count requires 0 <= k <= n - 5");
    return 2 * binomial(k + 2, 2) * binomial(n - k - 3, 2);
}

Count homogeneous_count(Count n, Count m, Count k) {
    if (m < 2 || m % 2 != 0) domain("homogeneous_count requires an even degree m >= 2");
    if (n <= m + 1) domain("homogeneous_count requires n > m + 1");
    if (k < 0 || k > n - m - 1) domain("homogeneous_count requires 0 <= k <= n - m - 1");
    const Count h = m / 2;
    return 2 * binomial(k + h, h) * binomial(n - k - h - 1, h);
}

Count convex_3d_count(Count n, Count k) {
    if (n < 4) domain("convex_3d_count requires n >= 4");
    if (k < 0 || k > n - 3) domain("convex_3d_count requires 0 <= k <= n - 3");
    return 2 * (k + 1) * n - 4 * binomial(k + 2, 2);
}

Count convex_bound(Count n, Count d, Count k, const BaseCount& base) {
    if (d < 2) domain("convex_bound requires d >= 2");
    if (n < 1) domain("convex_bound requires n >= 1");
    return ceil_div_rational(Integer(static_cast<long>(n)) * Integer(static_cast<long>(base(n - 1, k))),
                             Integer(static_cast<long>(d)));
}

Count m_neighborly_bound(Count n, Count d, Count m, Count k, const BaseCount& base) {
    if (m < 1 || m >= d) domain("m_neighborly_bound requires 1 <= m < d");
    if (n < m) domain("m_neighborly_bound requires n >= m");
    return ceil_div_rational(Integer(static_cast<long>(binomial(n, m))) * Integer(static_cast<long>(base(n - m, k))),
                             Integer(static_cast<long>(binomial(d, m))));
}

std::pair<Count, Count> perles_bounds(Count k, Count d) {
    if (k < 2 || d < 1) domain("perles_bounds requires k >= 2 and d >= 1");
    return {k * (d + 1), 2 * k * (k - 1) * d};
}

Count generally_neighborly_dim(Count k, Count d) {
    if (k < 1 || d < 1) domain("generally_neighborly_dim requires k >= 1 and d >= 1");
    return 2 * k + d - 1;
}

const std::vector<CountFormula>& registry() {
    static const std::vector<CountFormula> formulas{
        {"neighborly_e_k", {"n", "d", "k"}, [](std::span<const Count> a) { return neighborly_e_k(a[0], a[1], a[2]); }},
        {"circle_count", {"n", "k"}, [](std::span<const Count> a) { return circle_count(a[0], a[1]); }},
        {"conic_count", {"n", "k"}, [](std::span<const Count> a) { return conic_count(a[0], a[1]); }},
        {"homogeneous_count", {"n", "m", "k"},
         [](std::span<const Count> a) { return homogeneous_count(a[0], a[1], a[2]); }},
        {"convex_3d_count", {"n", "k"}, [](std::span<const Count> a) { return convex_3d_count(a[0], a[1]); }},
        {"perles_lower", {"k", "d"}, [](std::span<const Count> a) { return perles_bounds(a[0], a[1]).first; }},
        {"perles_upper", {"k", "d"}, [](std::span<const Count> a) { return perles_bounds(a[0], a[1]).second; }},
        {"generally_neighborly_dim", {"k", "d"},
         [](std::span<const Count> a) { return generally_neighborly_dim(a[0], a[1]); }},
    };
    return formulas;
}

const CountFormula& find(const std::string& name) {
    for (const auto& f : registry())
        if (f.name == name) return f;
    throw InputError("unknown formula '" + name + "'");
}

}  // namespace kfl::formulas
