#pragma once

#include "thresh/cumulants.hpp"
#include "thresh/graphs.hpp"
#include "thresh/montecarlo.hpp"
#include "thresh/rsk.hpp"

#include "json.hpp"

#include <iosfwd>
#include <vector>

namespace thresh {

using Json = nlohmann::ordered_json;

/// Rationals travel as strings ("3/4", "-2").
Json to_json(const Rational& r);
Rational rational_from_json(const Json& j);

Json to_json(const YoungDiagram& lambda);
YoungDiagram diagram_from_json(const Json& j);

/// {"shape": [...], "rows": [["p/q", ...], ...]}
Json to_json(const PoissonizedTableau& t);
/// Throws ParseError on malformed input, InvalidTableau on a bad filling or
/// a shape that disagrees with the rows.
PoissonizedTableau tableau_from_json(const Json& j);

/// {"n": n, "colors": ["black", ...], "edges": [[i, j, "w"], ...]}
Json to_json(const ColoredDigraph& g);
ColoredDigraph graph_from_json(const Json& j);

Json to_json(const CumulantReport& report);
Json to_json(const SampleSummary& s);

/// One value per line under a single header column.
void write_csv(std::ostream& os, const std::string& header, const std::vector<double>& values);

} // namespace thresh
