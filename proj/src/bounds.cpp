#include "selkow/bounds.hpp"

#include <stdexcept>

namespace selkow {

namespace {

Rational unit_over(int denom) { return Rational(1, denom); }

}  // namespace

Rational caro_wei(const Graph& g) {
    Rational total = 0;
    for (int v = 0; v < g.vertex_count(); ++v) total += unit_over(g.degree(v) + 1);
    return total;
}

Rational selkow_correction(const Graph& g, int v) {
    if (v < 0 || v >= g.vertex_count())
        throw std::invalid_argument("selkow_correction: vertex out of range");
    const int d = g.degree(v);
    Rational inner = Rational(d, d + 1);
    for (int u : g.neighbors(v)) inner -= unit_over(g.degree(u) + 1);
    if (inner < 0) inner = 0;
    return inner / (d + 1);
}

BoundReport selkow_bound(const Graph& g) {
    BoundReport report;
    const int n = g.vertex_count();
    report.cw_term.reserve(n);
    report.correction.reserve(n);
    report.cw = 0;
    report.selkow = 0;
    for (int v = 0; v < n; ++v) {
        report.cw_term.push_back(unit_over(g.degree(v) + 1));
        report.correction.push_back(selkow_correction(g, v));
        report.cw += report.cw_term.back();
    }
    report.selkow = report.cw;
    for (const Rational& c : report.correction) report.selkow += c;
    return report;
}

}  // namespace selkow
