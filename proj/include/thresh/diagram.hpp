#pragma once

#include "thresh/rational.hpp"

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace thresh {

/// Integer partition drawn in the French convention: rows()[0] is the bottom
/// row. The box in row r and column c (both 1-based) has u-coordinate c - r.
class YoungDiagram {
public:
    YoungDiagram() = default;
    /// Throws InvalidDiagram unless rows are positive and weakly decreasing.
    explicit YoungDiagram(std::vector<int> rows);

    /// Comma-separated row lengths, e.g. "4,2,2,2". The empty string (or "0")
    /// is the empty diagram.
    static YoungDiagram parse(std::string_view text);

    /// Rectangle with `p` rows of length `q`.
    static YoungDiagram rectangle(int p, int q);

    const std::vector<int>& rows() const { return rows_; }
    std::size_t num_rows() const { return rows_.size(); }
    bool empty() const { return rows_.empty(); }
    int size() const;

    /// Length of row `r` (1-based); 0 above the top row.
    int row_length(std::size_t r) const { return r >= 1 && r <= rows_.size() ? rows_[r - 1] : 0; }
    /// Height of column `c` (1-based).
    int column_height(int c) const;

    std::string to_string() const;

    friend bool operator==(const YoungDiagram&, const YoungDiagram&) = default;
    friend auto operator<=>(const YoungDiagram&, const YoungDiagram&) = default;

private:
    std::vector<int> rows_;
};

/// Generalized corner profile x_0 < y_1 < x_1 < ... < y_L < x_L. `concave`
/// holds the x's, `convex` the y's.
struct InterlacingSequence {
    std::vector<Rational> concave;
    std::vector<Rational> convex;

    InterlacingSequence() = default;
    /// Throws InterlacingViolation unless the lists strictly interlace.
    InterlacingSequence(std::vector<Rational> concave_corners, std::vector<Rational> convex_corners);

    friend bool operator==(const InterlacingSequence&, const InterlacingSequence&) = default;
};

bool interlaces(const std::vector<Rational>& concave, const std::vector<Rational>& convex);

/// Discrete probability measure on the concave corners of a profile.
struct TransitionMeasure {
    std::vector<Rational> atoms;
    std::vector<Rational> masses;

    /// Mass of the atom at `x`, or 0 when `x` is not an atom.
    Rational mass_at(const Rational& x) const;
    /// Sum of the masses of atoms <= u0.
    Rational cumulative(const Rational& u0) const;
};

InterlacingSequence corner_profile(const YoungDiagram& lambda);

/// G(z) = prod (z - y_j) / prod (z - x_i). Throws PoleError at a concave corner.
Rational cauchy_transform(const InterlacingSequence& profile, const Rational& z);

/// Residues of the Cauchy transform at the concave corners.
TransitionMeasure transition_measure(const InterlacingSequence& profile);
TransitionMeasure transition_measure(const YoungDiagram& lambda);

/// G(x) G(x-1) ... G(x-k+1); 1 when k = 0.
Rational falling_cauchy(const InterlacingSequence& profile, const Rational& x, unsigned k);

/// sum over atoms z of mu(z) / (|u0 - z| + 1).
Rational g_plus(const TransitionMeasure& mu, const Rational& u0);
Rational g_plus(const InterlacingSequence& profile, const Rational& u0);

/// Shifts the j-th concave corner and the j-th convex corner by j * eps.
InterlacingSequence perturb(const InterlacingSequence& profile, const Rational& eps);

/// True when no two concave corners differ by an integer.
bool has_generic_corners(const InterlacingSequence& profile);

/// Number of standard Young tableaux of the given shape (hook length formula).
BigInt count_syt(const YoungDiagram& lambda);

/// Hook length of the box in row r, column c (1-based).
int hook_length(const YoungDiagram& lambda, int r, int c);

/// All partitions of n, in reverse lexicographic order.
std::vector<YoungDiagram> partitions_of(int n);
/// All partitions with at most `max_boxes` boxes, starting with the empty one.
std::vector<YoungDiagram> partitions_up_to(int max_boxes);

} // namespace thresh
