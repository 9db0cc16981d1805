#pragma once

#include "thresh/diagram.hpp"
#include "thresh/graphs.hpp"
#include "thresh/rational.hpp"
#include "thresh/set_partition.hpp"

#include <optional>
#include <span>
#include <vector>

namespace thresh {

/// Theta(x; a) = prod_{i<j} (x_i - x_j)(x_i - x_j - a_i + a_j) / ((x_i - x_j + a_j)(x_i - x_j - a_i)).
/// Throws ZeroDenominator if a denominator factor vanishes.
Rational theta(std::span<const Rational> x, std::span<const Rational> a);

/// beta_MS = (-1)^n prod a_j / prod over components C of (-(sum_{i in C} a_i)).
Rational multispine_beta(const MultiSpine& ms, std::span<const Rational> a);

/// Theta expanded over multi-spine graphs:
/// sum_MS beta_MS / prod_{(i,j) in MS} (x_j - x_i + a_i).
/// Throws SubsetSumZero if some non-empty subset of a sums to 0.
Rational theta_via_multispines(std::span<const Rational> x, std::span<const Rational> a);

/// Cauchy determinant det[1/(x_i - z_j)] by its product formula.
Rational cauchy_determinant(std::span<const Rational> x, std::span<const Rational> z);

/// n-th cumulant of F_T(u0) by the sum over non-crossing alternating trees.
/// Decorations take values in the support of `mu`.
Rational cumulant_tree_formula(const TransitionMeasure& mu, const Rational& u0, int n);
Rational cumulant_tree_formula(const InterlacingSequence& profile, const Rational& u0, int n);

/// Same quantity summed over labeled caterpillar graphs instead. Only defined
/// for generic profiles; a vanishing factor raises ZeroDenominator.
Rational cumulant_caterpillar_formula(const InterlacingSequence& profile, const Rational& u0, int n);

/// Signed decorated sums at a fixed point x:
/// frak_T(x) = sum over trees T with x in D_T of (-1)^{|B_T|} f_T(x),
/// frak_C(x) the same over labeled caterpillars.
Rational frak_T(std::span<const Rational> x, const Rational& u0);
Rational frak_C(std::span<const Rational> x, const Rational& u0);
/// frak_T with a precomputed tree list, for hot loops.
Rational frak_T(std::span<const ColoredDigraph> trees, std::span<const Rational> x, const Rational& u0);

/// Moment M_n(Lambda, u0) for an interlacing sequence with generic concave
/// corners. Throws GenericityViolation otherwise.
Rational moment_interlacing(const InterlacingSequence& profile, const Rational& u0, int n);

struct RegularizationReport {
    Rational oracle;               ///< m_n from the growth-process oracle
    std::vector<Rational> eps;
    std::vector<Rational> values;  ///< M_n(Lambda^eps, u0)
    std::vector<Rational> gaps;    ///< |M_n(Lambda^eps) - m_n|
    double final_relative_gap = 0;
    bool pass = false;
};

/// Compares M_n(Lambda^eps, u0) with m_n for each eps. Passes when the gaps
/// strictly decrease and the last relative gap is below 1e-2. `u0` must not
/// be an integer and every eps must be positive.
RegularizationReport regularized_moment_limit_check(const YoungDiagram& lambda, const Rational& u0, int n,
                                                    std::span<const Rational> eps_list);

/// m_1..m_n from k_1..k_n, and back. Index 0 holds order 1.
std::vector<Rational> cumulants_to_moments(std::span<const Rational> cumulants);
std::vector<Rational> moments_to_cumulants(std::span<const Rational> moments);

/// m_n as the sum over set partitions of products of cumulants.
Rational moment_from_partitions(std::span<const Rational> cumulants, int n);

struct CumulantBound {
    Rational abs_cumulant;
    Rational bound;  ///< (n-1)! G+(u0)^(n-1)
    bool pass = false;
};

CumulantBound cumulant_bound_check(const YoungDiagram& lambda, const Rational& u0, int n);

struct CumulantReport {
    YoungDiagram shape;
    Rational u0;
    int order = 0;
    std::vector<Rational> cumulants;
    std::vector<Rational> moments;
    std::vector<Rational> bounds;
    std::optional<std::vector<Rational>> oracle_moments;
};

CumulantReport cumulant_report(const YoungDiagram& lambda, const Rational& u0, int order, bool with_oracle);

} // namespace thresh
