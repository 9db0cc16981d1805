#pragma once

#include "thresh/diagram.hpp"
#include "thresh/rational.hpp"

#include <span>
#include <vector>

namespace thresh {

/// lambda = diagrams[0] -> diagrams[1] -> ...; u_coords[i] is the u-coordinate
/// of the box added in step i + 1.
struct GrowthPath {
    std::vector<YoungDiagram> diagrams;
    std::vector<int> u_coords;
};

/// Adds one box at the concave corner with u-coordinate `u`. Throws NotACorner.
YoungDiagram add_box_at(const YoungDiagram& lambda, int u);

/// Follows `u_seq` from lambda. Returns false when some step is not a concave
/// corner of the current diagram.
bool try_grow(const YoungDiagram& lambda, std::span<const int> u_seq, GrowthPath& path);

/// Probability that the Plancherel growth process started at lambda adds boxes
/// with exactly the u-coordinates `u_seq`; 0 for an impossible sequence.
Rational path_probability(const YoungDiagram& lambda, std::span<const int> u_seq);

/// k-th moment of the threshold F_T(u0), computed as
/// k! P(u0 >= U_1 > U_2 > ... > U_k) by exhaustive enumeration of growth paths.
Rational moment_oracle(const YoungDiagram& lambda, const Rational& u0, int k);

/// The tuple x^a: x_1, x_1 - 1, ..., x_1 - a_1 + 1, x_2, ..., x_l - a_l + 1.
std::vector<int> expand_runs(std::span<const int> x, std::span<const int> a);

/// Condition (X): for every i, none of x_i - 1, ..., x_i - a_i + 1 is a concave corner.
bool condition_x(const YoungDiagram& lambda, std::span<const int> x, std::span<const int> a);

/// Closed-form probability of the anti-Pieri path x^a:
/// Theta(x) prod_i (-1)^(a_i - 1) / a_i mu(x_i) G^{falling a_i - 1}(x_i - 1).
///
/// `x` must be strictly decreasing concave corners (CornerError otherwise) and
/// condition (X) must hold (ConditionXViolation otherwise). When some falling
/// factor vanishes the path passes through a convex corner and the result is 0.
Rational anti_pieri_formula(const YoungDiagram& lambda, std::span<const int> x, std::span<const int> a);

/// m_k via the anti-Pieri closed form: k! times the sum over compositions a of
/// k and decreasing concave-corner tuples u0 >= x_1 > ... > x_l satisfying (X).
Rational moment_via_anti_pieri(const YoungDiagram& lambda, const Rational& u0, int k);

/// All compositions of n (ordered tuples of positive integers summing to n).
std::vector<std::vector<int>> compositions(int n);

} // namespace thresh
