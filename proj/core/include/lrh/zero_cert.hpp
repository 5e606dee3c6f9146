#pragma once

#include <complex>
#include <functional>
#include <vector>

#include "lrh/mellin_real.hpp"

namespace lrh {

// Closed rectangle in the complex E-plane:
// Re E in [e_min, e_max], Im E in [-height, +height].
struct Rectangle {
    double e_min = 0.0;
    double e_max = 0.0;
    double height = 2.0;

    void validate() const;
    Rectangle inflated(double factor) const;  // scaled about the center
};

// Outcome of a real-case certification run (one oscillator level).
struct ZeroReport {
    std::vector<double> real_zeros;          // isolated on the real E axis
    int contour_count = 0;                   // zeros inside the rectangle
    std::vector<double> eigenvalues;         // comparison spectrum
    std::vector<double> pairing_distances;   // |zero_i - eig_i|
    double max_pairing_distance = 0.0;
    bool certified = false;  // contour_count == #real zeros == #eigenvalues
};

// One zero per sign change of f on the interval, each refined by bisection
// to an interval below 1e-10.  The scan is repeated at half the step; if
// the two passes disagree on the number of sign changes, two zeros share a
// grid cell and a ResolutionError is thrown.
std::vector<double> isolate_real_zeros(
    const std::function<double(double)>& f, double lo, double hi,
    double grid_step);

// Winding number of f around the rectangle boundary by summed phase
// increments; every increment is kept below pi/2 by adaptive midpoint
// insertion (ContourError when the refinement budget is exhausted, which
// indicates a zero on or very near the contour).  If |f| on the contour
// dips below 1e-8 times the median |f|, the rectangle is inflated by 10%
// once and the count retried; a second dip is a ContourError.
int argument_principle_count(
    const std::function<std::complex<double>(std::complex<double>)>& f,
    const Rectangle& rect, int samples_per_side);

// Poles of Gamma_base(delta, 1/2 + iE) inside the rectangle: they sit at
// E = i(1/2 + 2k) for delta = 0 and E = i(3/2 + 2k) for delta = 1 (k >= 0).
// The winding number of the closed form counts zeros MINUS these poles, so
// certification adds the count back.
int base_gamma_pole_count(int delta, const Rectangle& rect);

// Full certification for oscillator level N: isolates the real zeros of the
// quadrature oracle (phase-rotated to a real-valued section), counts zeros
// of the closed form inside [-E*, E*] x [-height, height] by the argument
// principle (pole-corrected), and pairs the zeros with the parity-block
// eigenvalues.
ZeroReport certify_real_case(const HermiteLevel& level,
                             const QuadratureSpec& spec,
                             double rect_height = 2.0,
                             int samples_per_side = 512);

// Real-valued section of the oracle along the critical line: the oracle
// divided by the zero-free base factor has constant phase (it equals
// c_N phi_K(E)); the returned function is that ratio rotated to the real
// axis, suitable for sign-change scans.  reference_e must not be a zero.
std::function<double(double)> oracle_real_section(const HermiteLevel& level,
                                                  const QuadratureSpec& spec,
                                                  double reference_e);

}  // namespace lrh
