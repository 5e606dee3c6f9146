#pragma once

#include <complex>
#include <vector>

#include "lrh/special_functions.hpp"

namespace lrh {

// Controls for the Mellin quadrature oracle.
struct QuadratureSpec {
    double abs_tol = 1e-12;
    int panel_limit = 40000;
    double split_point = 1.0;  // domain split in x; u = log x splits at log of this

    void validate() const;
};

// Mellin transform of psi_N over the half-line, by quadrature:
//
//   2 * int_0^inf psi_N(x) x^(s-1) dx
//
// evaluated after the substitution x = e^u (the oscillatory factor x^(iE)
// becomes the pure harmonic e^(iEu)), with Gauss-Legendre panels sized to
// the oscillation wavelength and doubled until abs_tol is met.
//
// Valid for Re s > 0 and N <= 40 only (DomainError otherwise);
// ConvergenceError if panel_limit is exhausted.
Complex gamma_real_oracle(const HermiteLevel& level, Complex s,
                          const QuadratureSpec& spec);

// Closed form for the same transform, up to the N-dependent constant:
//
//   det_K(E - H_BK) * Gamma_base(delta, s),   E = -i (s - 1/2),
//
// with delta = N mod 2 and K = floor(N/2).  Entire in E except for the
// poles of the base factor; the only zeros are the block eigenvalues.
Complex gamma_real_closed(const HermiteLevel& level, Complex s);

// Full-line integral  int psi_N(x) (sgn x)^delta |x|^(s-1) dx  computed as
// two genuinely independent half-line quadratures (no parity shortcut);
// vanishes within tolerance when delta != N mod 2.
Complex mellin_full_line(const HermiteLevel& level, int delta, Complex s,
                         const QuadratureSpec& spec);

// Ratio statistics for the oracle/closed-form identity: the ratio is the
// (unknown) constant c_N, so the test is constancy, never a value.
struct RatioStats {
    Complex c_fit;          // mean of oracle/closed over the grid
    double rel_spread = 0;  // max |ratio - mean| / |mean|
    std::vector<Complex> ratios;
};

RatioStats neg_ratio_stats(const HermiteLevel& level,
                           const std::vector<double>& e_grid,
                           const QuadratureSpec& spec);

}  // namespace lrh
