#pragma once

#include "thresh/rational.hpp"

#include <cstddef>
#include <functional>
#include <span>
#include <string>
#include <vector>

namespace thresh {

enum class Color { black, red, white };

std::string to_string(Color c);
Color color_from_string(const std::string& s);

/// Directed edge (from, to) between 1-based vertices.
struct Edge {
    int from = 0;
    int to = 0;
    Rational weight;

    friend bool operator==(const Edge&, const Edge&) = default;
};

/// Vertex-colored, edge-weighted directed graph on vertices 1..n.
class ColoredDigraph {
public:
    ColoredDigraph() = default;
    /// Throws InvalidGraph on out-of-range endpoints, duplicate edges or a
    /// pair of opposite edges.
    ColoredDigraph(int n, std::vector<Color> colors, std::vector<Edge> edges);

    int size() const { return n_; }
    Color color(int v) const { return colors_[static_cast<std::size_t>(v - 1)]; }
    const std::vector<Color>& colors() const { return colors_; }
    const std::vector<Edge>& edges() const { return edges_; }
    int count(Color c) const;

    /// True when every edge (i, j) has weight j - i.
    bool has_label_weights() const;

    friend bool operator==(const ColoredDigraph&, const ColoredDigraph&) = default;

private:
    int n_ = 0;
    std::vector<Color> colors_;
    std::vector<Edge> edges_;
};

/// Edge (i, j) with the labeled weight j - i.
Edge labeled_edge(int from, int to);

/// Non-crossing alternating trees on 1..n: edges (b, w) with b < w, b black,
/// w white, and no two crossing arcs. There are Catalan(n-1) of them.
std::vector<ColoredDigraph> enumerate_nca_trees(int n);

/// Labeled caterpillar with the given black set (must contain 1): black spine
/// b_1 -> b_2 -> ... plus edges from each b_i to the red vertices b_i+1 ..
/// b_{i+1}-1. All weights follow the j - i convention.
ColoredDigraph caterpillar_from_black_set(int n, const std::vector<int>& black);

/// One caterpillar per subset B of 1..n containing 1, so 2^(n-1) graphs.
std::vector<ColoredDigraph> enumerate_caterpillars(int n);

/// All orderings of `vertices`, each read as a directed path.
std::vector<std::vector<int>> enumerate_spines(const std::vector<int>& vertices);

/// Forest of directed paths covering 1..n.
struct MultiSpine {
    std::vector<std::vector<int>> paths;

    /// Consecutive pairs along each path.
    std::vector<std::pair<int, int>> edges() const;
};

std::vector<MultiSpine> enumerate_multispines(int n);

/// Values assigned to vertices; values[v - 1] decorates vertex v.
struct Decoration {
    std::vector<Rational> values;

    const Rational& operator[](int v) const { return values[static_cast<std::size_t>(v - 1)]; }
};

/// Visits every u0-decoration of `graph` with values from `atoms`: black
/// vertices get atoms <= u0, white vertices atoms > u0, red vertices any atom.
/// The visitor receives the atom index chosen for each vertex.
void for_each_decoration(const ColoredDigraph& graph, std::span<const Rational> atoms, const Rational& u0,
                         const std::function<void(std::span<const std::size_t>)>& visit);

std::vector<Decoration> decorations(const ColoredDigraph& graph, std::span<const Rational> atoms,
                                    const Rational& u0);

/// True when `x` is a u0-decoration of `graph` (atoms are not checked).
bool is_decoration(const ColoredDigraph& graph, std::span<const Rational> x, const Rational& u0);

/// f_G(x) = 1 / prod over edges (i, j) of (x_j - x_i + weight). Throws
/// ZeroDenominator naming the offending edge.
Rational eval_f(const ColoredDigraph& graph, std::span<const Rational> x);
inline Rational eval_f(const ColoredDigraph& graph, const Decoration& x) { return eval_f(graph, x.values); }

/// Disjoint union with the vertices of `b` shifted after those of `a`.
ColoredDigraph disjoint_union(const ColoredDigraph& a, const ColoredDigraph& b);

} // namespace thresh
