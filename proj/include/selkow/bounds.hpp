// Lower bounds on the independence number: the Caro-Wei degree sum and its
// strengthening by a nonnegative per-vertex correction from neighbor degrees.
#pragma once

#include <vector>

#include "selkow/graph.hpp"
#include "selkow/rational.hpp"

namespace selkow {

// CW(G) = sum over v of 1/(d(v)+1).
Rational caro_wei(const Graph& g);

// Per-vertex correction 1/(d(v)+1) * max{d(v)/(d(v)+1) - sum_{u~v} 1/(d(u)+1), 0}.
// Zero for isolated vertices and for every vertex of a regular graph.
Rational selkow_correction(const Graph& g, int v);

struct BoundReport {
    Rational cw;
    Rational selkow;
    std::vector<Rational> cw_term;     // per vertex, sums to cw
    std::vector<Rational> correction;  // per vertex, each >= 0
};

// cw plus the summed corrections; alpha(G) >= selkow >= cw always holds.
BoundReport selkow_bound(const Graph& g);

}  // namespace selkow
