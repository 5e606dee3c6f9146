#include "lrh/quadrature.hpp"

#include <cmath>
#include <map>
#include <mutex>

#include "lrh/errors.hpp"

namespace lrh {

namespace {

GaussLegendre make_rule(int order) {
    GaussLegendre r;
    r.nodes.resize(order);
    r.weights.resize(order);
    const double pi = 3.141592653589793238462643383279502884;
    for (int i = 0; i < (order + 1) / 2; ++i) {
        double x = std::cos(pi * (i + 0.75) / (order + 0.5));
        double pp = 0.0;
        for (int iter = 0; iter < 100; ++iter) {
            // Legendre P_order(x) and derivative by the recurrence
            double p0 = 1.0, p1 = x;
            for (int k = 2; k <= order; ++k) {
                const double p2 = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            pp = order * (x * p1 - p0) / (x * x - 1.0);
            const double dx = p1 / pp;
            x -= dx;
            if (std::abs(dx) < 1e-15) break;
        }
        r.nodes[i] = -x;
        r.nodes[order - 1 - i] = x;
        const double w = 2.0 / ((1.0 - x * x) * pp * pp);
        r.weights[i] = w;
        r.weights[order - 1 - i] = w;
    }
    return r;
}

}  // namespace

const GaussLegendre& GaussLegendre::rule(int order) {
    static std::mutex mu;
    static std::map<int, GaussLegendre> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(order);
    if (it == cache.end()) it = cache.emplace(order, make_rule(order)).first;
    return it->second;
}

std::complex<double> panel_integrate(
    const std::function<std::complex<double>(double)>& f, double a, double b,
    int panels, int order) {
    const auto& rule = GaussLegendre::rule(order);
    const double h = (b - a) / panels;
    std::complex<double> total = 0.0;
    for (int p = 0; p < panels; ++p) {
        const double lo = a + p * h;
        const double mid = lo + 0.5 * h;
        std::complex<double> acc = 0.0;
        for (int i = 0; i < order; ++i) {
            acc += rule.weights[i] * f(mid + 0.5 * h * rule.nodes[i]);
        }
        total += acc * (0.5 * h);
    }
    return total;
}

std::complex<double> adaptive_panel_integrate(
    const std::function<std::complex<double>(double)>& f, double a, double b,
    double abs_tol, int initial_panels, int panel_limit, int order) {
    if (abs_tol <= 0.0) throw DomainError("adaptive_panel_integrate: abs_tol");
    int panels = std::max(1, initial_panels);
    std::complex<double> prev = panel_integrate(f, a, b, panels, order);
    while (2 * panels <= panel_limit) {
        panels *= 2;
        const std::complex<double> cur = panel_integrate(f, a, b, panels, order);
        if (std::abs(cur - prev) < abs_tol) return cur;
        prev = cur;
    }
    throw ConvergenceError("adaptive_panel_integrate: panel limit " +
                           std::to_string(panel_limit) +
                           " exhausted before reaching tolerance");
}

}  // namespace lrh
