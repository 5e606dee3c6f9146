#pragma once

#include <complex>

#include "lrh/errors.hpp"

namespace lrh {

using Complex = std::complex<double>;

// Oscillator level N with its parity bit and L2 normalization constant.
//
// psi_N(x) = kappa_N * H_N(sqrt(2*pi) x) * exp(-pi x^2),
// kappa_N = 2^(1/4) / sqrt(2^N N!), so that  int psi_N^2 dx = 1.
struct HermiteLevel {
    int n = 0;

    explicit HermiteLevel(int level);

    int parity() const { return n & 1; }
    // log(kappa_N); kappa_N itself underflows long before N ~ 200 does.
    double log_kappa() const;
    double kappa() const;
};

// Principal-branch log Gamma(s).
//
// Lanczos rational approximation (g = 6.02468..., 13 terms) for
// Re s >= 0.5, reflection through log sin(pi s) otherwise, with the branch
// arranged so the result is the continuation of real log Gamma from the
// positive axis (values for Im s < 0 by conjugation).  Relative error of
// exp(log_gamma(s)) <= 1e-12 for |s| <= 100 at distance >= 0.1 from poles.
//
// Throws PoleError if s is within 1e-12 of a nonpositive integer.
Complex log_gamma(Complex s);

// L2-normalized oscillator eigenfunction value psi_N(x).
//
// Evaluated with the orthonormal-function three-term recurrence (values
// stay O(1)); no overflow for N up to a few hundred.
double hermite_psi(const HermiteLevel& level, double x);

// Zero-free base gamma factors for the real place:
//   delta = 0:  pi^(-s/2) Gamma(s/2)
//   delta = 1:  2 pi^(-s/2) Gamma((s+1)/2)
// Throws PoleError near s in {0,-2,-4,...} (delta=0) resp. {-1,-3,...}
// (delta=1).
Complex gamma_base_real(int delta, Complex s);

// log of gamma_base_real, for callers that need to stay in log space.
Complex log_gamma_base_real(int delta, Complex s);

namespace detail {
// Throws DomainError if either component of z is NaN/Inf; msg names the op.
void require_finite(Complex z, const char* what);
void require_finite(double x, const char* what);
}  // namespace detail

}  // namespace lrh
