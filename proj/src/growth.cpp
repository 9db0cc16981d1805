#include "thresh/growth.hpp"

#include "thresh/cumulants.hpp"
#include "thresh/errors.hpp"

#include <algorithm>
#include <functional>

namespace thresh {

YoungDiagram add_box_at(const YoungDiagram& lambda, int u)
{
    std::vector<int> rows = lambda.rows();
    const int height = static_cast<int>(rows.size());
    for (int r = 1; r <= height + 1; ++r) {
        const int len = lambda.row_length(static_cast<std::size_t>(r));
        const bool addable = r == 1 || len < lambda.row_length(static_cast<std::size_t>(r - 1));
        if (addable && len + 1 - r == u) {
            if (r == height + 1) {
                rows.push_back(1);
            } else {
                ++rows[static_cast<std::size_t>(r - 1)];
            }
            return YoungDiagram(std::move(rows));
        }
    }
    throw NotACorner("u = " + std::to_string(u) + " is not a concave corner of (" + lambda.to_string() + ")");
}

bool try_grow(const YoungDiagram& lambda, std::span<const int> u_seq, GrowthPath& path)
{
    path.diagrams.assign(1, lambda);
    path.u_coords.clear();
    for (int u : u_seq) {
        const auto profile = corner_profile(path.diagrams.back());
        if (std::find(profile.concave.begin(), profile.concave.end(), Rational(u)) == profile.concave.end()) {
            return false;
        }
        path.diagrams.push_back(add_box_at(path.diagrams.back(), u));
        path.u_coords.push_back(u);
    }
    return true;
}

Rational path_probability(const YoungDiagram& lambda, std::span<const int> u_seq)
{
    Rational p = 1;
    YoungDiagram current = lambda;
    for (int u : u_seq) {
        const Rational mass = transition_measure(current).mass_at(u);
        if (mass.is_zero()) {
            return 0;
        }
        p *= mass;
        current = add_box_at(current, u);
    }
    return p;
}

namespace {

// Sum of path probabilities over strictly decreasing continuations with
// every next u-coordinate at most `bound`.
Rational decreasing_paths(const YoungDiagram& lambda, const Rational& bound, int steps_left)
{
    if (steps_left == 0) {
        return 1;
    }
    const auto mu = transition_measure(lambda);
    Rational total = 0;
    for (std::size_t i = 0; i < mu.atoms.size(); ++i) {
        const Rational& x = mu.atoms[i];
        if (x > bound) break;
        const int u = static_cast<int>(x.numerator().get_si());
        total += mu.masses[i] * decreasing_paths(add_box_at(lambda, u), Rational(u - 1), steps_left - 1);
    }
    return total;
}

} // namespace

Rational moment_oracle(const YoungDiagram& lambda, const Rational& u0, int k)
{
    if (k < 1) {
        throw DomainError("moment order must be positive");
    }
    return factorial(static_cast<unsigned>(k)) * decreasing_paths(lambda, u0, k);
}

std::vector<int> expand_runs(std::span<const int> x, std::span<const int> a)
{
    std::vector<int> out;
    for (std::size_t i = 0; i < x.size(); ++i) {
        for (int m = 0; m < a[i]; ++m) out.push_back(x[i] - m);
    }
    return out;
}

bool condition_x(const YoungDiagram& lambda, std::span<const int> x, std::span<const int> a)
{
    const auto concave = corner_profile(lambda).concave;
    for (std::size_t i = 0; i < x.size(); ++i) {
        for (int m = 1; m < a[i]; ++m) {
            if (std::find(concave.begin(), concave.end(), Rational(x[i] - m)) != concave.end()) {
                return false;
            }
        }
    }
    return true;
}

Rational anti_pieri_formula(const YoungDiagram& lambda, std::span<const int> x, std::span<const int> a)
{
    if (x.size() != a.size() || x.empty()) {
        throw DomainError("x and a must be non-empty and of equal length");
    }
    const auto profile = corner_profile(lambda);
    const auto mu = transition_measure(profile);
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (a[i] < 1) {
            throw DomainError("run lengths must be positive");
        }
        if (i > 0 && !(x[i] < x[i - 1])) {
            throw CornerError("corners must be strictly decreasing");
        }
        if (std::find(profile.concave.begin(), profile.concave.end(), Rational(x[i])) == profile.concave.end()) {
            throw CornerError(std::to_string(x[i]) + " is not a concave corner of (" + lambda.to_string() + ")");
        }
    }
    if (!condition_x(lambda, x, a)) {
        throw ConditionXViolation("condition (X) fails");
    }

    Rational product = 1;
    for (std::size_t i = 0; i < x.size(); ++i) {
        const Rational falling = falling_cauchy(profile, Rational(x[i] - 1), static_cast<unsigned>(a[i] - 1));
        if (falling.is_zero()) {
            // The run crosses a convex corner of lambda, so the path does not exist.
            return 0;
        }
        const Rational sign = (a[i] - 1) % 2 == 0 ? 1 : -1;
        product *= sign / Rational(a[i]) * mu.mass_at(x[i]) * falling;
    }
    std::vector<Rational> xr(x.begin(), x.end());
    std::vector<Rational> ar(a.begin(), a.end());
    return theta(xr, ar) * product;
}

std::vector<std::vector<int>> compositions(int n)
{
    std::vector<std::vector<int>> out;
    if (n < 1) return out;
    const unsigned long cuts = 1UL << (n - 1);
    for (unsigned long mask = 0; mask < cuts; ++mask) {
        std::vector<int> parts;
        int run = 1;
        for (int i = 0; i < n - 1; ++i) {
            if ((mask >> i) & 1UL) {
                parts.push_back(run);
                run = 1;
            } else {
                ++run;
            }
        }
        parts.push_back(run);
        out.push_back(std::move(parts));
    }
    return out;
}

Rational moment_via_anti_pieri(const YoungDiagram& lambda, const Rational& u0, int k)
{
    std::vector<int> small;
    for (const auto& x : corner_profile(lambda).concave) {
        if (x <= u0) small.push_back(static_cast<int>(x.numerator().get_si()));
    }
    std::sort(small.rbegin(), small.rend());

    Rational total = 0;
    for (const auto& a : compositions(k)) {
        const std::size_t len = a.size();
        std::vector<int> x;
        // Strictly decreasing tuples = increasing index choices from `small`.
        std::function<void(std::size_t)> choose = [&](std::size_t start) {
            if (x.size() == len) {
                if (condition_x(lambda, x, a)) total += anti_pieri_formula(lambda, x, a);
                return;
            }
            for (std::size_t i = start; i < small.size(); ++i) {
                x.push_back(small[i]);
                choose(i + 1);
                x.pop_back();
            }
        };
        choose(0);
    }
    return factorial(static_cast<unsigned>(k)) * total;
}

} // namespace thresh
