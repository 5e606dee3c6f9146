#pragma once

#include <complex>
#include <functional>
#include <vector>

namespace lrh {

// Nodes and weights of the n-point Gauss-Legendre rule on [-1, 1],
// generated once per order by Newton iteration on the Legendre recurrence
// and cached.
struct GaussLegendre {
    std::vector<double> nodes;
    std::vector<double> weights;

    static const GaussLegendre& rule(int order);
};

// Integrates f over [a, b] with `panels` equal Gauss-Legendre panels.
std::complex<double> panel_integrate(
    const std::function<std::complex<double>(double)>& f, double a, double b,
    int panels, int order = 16);

// Doubles the panel count until two successive results differ by less than
// abs_tol.  Throws ConvergenceError when panel_limit is exhausted first.
std::complex<double> adaptive_panel_integrate(
    const std::function<std::complex<double>(double)>& f, double a, double b,
    double abs_tol, int initial_panels, int panel_limit, int order = 16);

}  // namespace lrh
