#pragma once

#include <complex>
#include <vector>

#include "lrh/special_functions.hpp"

namespace lrh {

// Matrix element <n|H_BK|n'> in the oscillator basis:
//   (i/2) [ sqrt((n'+1)(n'+2)) delta_{n,n'+2} - sqrt(n'(n'-1)) delta_{n,n'-2} ]
// Zero unless |n - n'| = 2 (parity is conserved).
Complex bk_matrix_element(int n, int n_prime);

// Parity-restricted truncation of H_BK to oscillator levels n = 2k + delta,
// k < K.  After the diagonal-phase similarity diag(i^k) the block is a real
// symmetric tridiagonal (Jacobi) matrix with zero diagonal and off-diagonals
// |b_k|, |b_k|^2 = (2k+delta)(2k+delta-1)/4.  b_0 vanishes identically and
// is never stored; |b_k| > 0 for k >= 1.
struct ParityBlock {
    int delta = 0;
    int size = 0;                   // K
    std::vector<double> offdiag;    // |b_k|, k = 1..K-1
    std::vector<double> offdiag_sq; // |b_k|^2 held exactly (integer/4)
};

ParityBlock build_parity_block(int delta, int K);

// phi_K(E) by the three-term recursion
//   phi_{k+1}(E) = E phi_k(E) - |b_k|^2 phi_{k-1}(E),
// seeded phi_{-1} = 0, phi_0 = 1 (the spectral determinant of the block,
// computed by minors on the last row).  phi_0 = 1 for the empty block.
Complex charpoly(const ParityBlock& block, Complex e);
double charpoly(const ParityBlock& block, double e);

// Coefficient vector of phi_K; only every other coefficient is nonzero
// (phi_K(-E) = (-1)^K phi_K(E)).
struct CharPoly {
    std::vector<double> coeffs;  // coeffs[j] multiplies E^j, degree = K
    double eval(double e) const;
};

CharPoly charpoly_coefficients(const ParityBlock& block);

// All K eigenvalues, ascending.  Sturm-sequence bisection on the real
// symmetric tridiagonal form (the Sturm sequence is the phi_k recursion),
// which guarantees containment; each interval is shrunk well below 1e-12.
std::vector<double> block_spectrum(const ParityBlock& block);

// Smallest gap between consecutive eigenvalues (used by callers to choose
// scan steps); +inf for K < 2.
double min_spectral_gap(const std::vector<double>& spectrum);

}  // namespace lrh
