#include "lrh/mellin_real.hpp"

#include <cmath>
#include <functional>

#include "lrh/bk_operator.hpp"
#include "lrh/errors.hpp"
#include "lrh/quadrature.hpp"

namespace lrh {

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;
constexpr int kMaxOracleLevel = 40;

// Upper cutoff in x: past the classical turning point the eigenfunction
// envelope decays like exp(-pi x^2); scan outward until the remaining tail
// is negligible against the requested tolerance.
double upper_cutoff(const HermiteLevel& level, double sigma, double abs_tol) {
    const double turning = std::sqrt((2.0 * level.n + 1.0) / (2.0 * kPi));
    double x = std::max(1.5, turning + 0.5);
    const double target = abs_tol * 1e-3;
    while (x < 60.0) {
        const double envelope =
            std::abs(hermite_psi(level, x)) * std::pow(x, std::max(sigma, 1.0) - 1.0);
        if (envelope < target) return x;
        x += 0.25;
    }
    return x;
}

// One-sided integral  int_0^inf psi_N(sign*x) x^(s-1) dx  via u = log x.
Complex half_line_mellin(const HermiteLevel& level, double sign, Complex s,
                         const QuadratureSpec& spec) {
    const double sigma = s.real();
    if (sigma <= 0.0) {
        throw DomainError("gamma_real_oracle: requires Re s > 0");
    }
    if (level.n > kMaxOracleLevel) {
        throw DomainError("gamma_real_oracle: N > 40 unsupported");
    }
    spec.validate();

    const double e_abs = std::abs(s.imag());
    const double x_max = upper_cutoff(level, sigma, spec.abs_tol);
    const double u_split = std::log(spec.split_point);
    const double u_max = std::log(x_max);
    // Lower cutoff from the e^(sigma u) factor (|psi| <= 2^(1/4) globally).
    const double u_min =
        -(std::log(1.5 / (spec.abs_tol * 1e-2)) + std::log(1.0 / sigma)) / sigma;

    const auto integrand = [&](double u) -> Complex {
        const double x = std::exp(u);
        return hermite_psi(level, sign * x) * std::exp(s * u);
    };

    // Panel widths: phase rate |E| from x^(iE) everywhere, plus the
    // eigenfunction's own oscillation (momentum <= sqrt(2 pi (2N+1)),
    // in u scaled by x <= x_max) on the outer segment.
    const double osc_outer =
        e_abs + std::sqrt(2.0 * kPi * (2.0 * level.n + 1.0)) * x_max;
    const double w_inner = std::min(0.5, 16.0 / (1.0 + e_abs));
    const double w_outer = std::min(0.25, 16.0 / (1.0 + osc_outer));

    Complex total = 0.0;
    if (u_split > u_min) {
        const int panels =
            std::max(4, int(std::ceil((u_split - u_min) / w_inner)));
        total += adaptive_panel_integrate(integrand, u_min, u_split,
                                          0.5 * spec.abs_tol, panels,
                                          spec.panel_limit);
    }
    if (u_max > u_split) {
        const int panels =
            std::max(4, int(std::ceil((u_max - u_split) / w_outer)));
        total += adaptive_panel_integrate(integrand, u_split, u_max,
                                          0.5 * spec.abs_tol, panels,
                                          spec.panel_limit);
    }
    return total;
}

}  // namespace

void QuadratureSpec::validate() const {
    if (abs_tol <= 0.0) throw DomainError("QuadratureSpec: abs_tol must be > 0");
    if (panel_limit < 64) {
        throw DomainError("QuadratureSpec: panel_limit must be >= 64");
    }
    if (split_point <= 0.0) {
        throw DomainError("QuadratureSpec: split_point must be > 0");
    }
}

Complex gamma_real_oracle(const HermiteLevel& level, Complex s,
                          const QuadratureSpec& spec) {
    detail::require_finite(s, "gamma_real_oracle");
    return 2.0 * half_line_mellin(level, +1.0, s, spec);
}

Complex gamma_real_closed(const HermiteLevel& level, Complex s) {
    detail::require_finite(s, "gamma_real_closed");
    const Complex e = Complex(0.0, -1.0) * (s - 0.5);
    const ParityBlock block = build_parity_block(level.parity(), level.n / 2);
    return charpoly(block, e) * gamma_base_real(level.parity(), s);
}

Complex mellin_full_line(const HermiteLevel& level, int delta, Complex s,
                         const QuadratureSpec& spec) {
    if (delta != 0 && delta != 1) {
        throw DomainError("mellin_full_line: delta must be 0 or 1");
    }
    const Complex plus = half_line_mellin(level, +1.0, s, spec);
    const Complex minus = half_line_mellin(level, -1.0, s, spec);
    return plus + (delta == 0 ? minus : -minus);
}

RatioStats neg_ratio_stats(const HermiteLevel& level,
                           const std::vector<double>& e_grid,
                           const QuadratureSpec& spec) {
    if (e_grid.empty()) throw DomainError("neg_ratio_stats: empty grid");
    RatioStats stats;
    stats.ratios.reserve(e_grid.size());
    Complex sum = 0.0;
    for (double e : e_grid) {
        const Complex s(0.5, e);
        const Complex num = gamma_real_oracle(level, s, spec);
        const Complex den = gamma_real_closed(level, s);
        const Complex r = num / den;
        stats.ratios.push_back(r);
        sum += r;
    }
    stats.c_fit = sum / double(e_grid.size());
    double max_dev = 0.0;
    for (const Complex& r : stats.ratios) {
        max_dev = std::max(max_dev, std::abs(r - stats.c_fit));
    }
    stats.rel_spread = max_dev / std::abs(stats.c_fit);
    return stats;
}

}  // namespace lrh
