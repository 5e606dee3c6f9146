#include "lrh/bk_operator.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "lrh/errors.hpp"

namespace lrh {

Complex bk_matrix_element(int n, int n_prime) {
    if (n < 0 || n_prime < 0) {
        throw DomainError("bk_matrix_element: negative level");
    }
    const Complex half_i(0.0, 0.5);
    if (n == n_prime + 2) {
        return half_i * std::sqrt(double(n_prime + 1) * double(n_prime + 2));
    }
    if (n == n_prime - 2) {
        return -half_i * std::sqrt(double(n_prime) * double(n_prime - 1));
    }
    return 0.0;
}

ParityBlock build_parity_block(int delta, int K) {
    if (delta != 0 && delta != 1) {
        throw DomainError("build_parity_block: delta must be 0 or 1");
    }
    if (K < 0) throw DomainError("build_parity_block: negative size");
    ParityBlock block;
    block.delta = delta;
    block.size = K;
    for (int k = 1; k < K; ++k) {
        // (2k+delta)(2k+delta-1)/4 is exact in double for all desk-scale k
        const double sq = double(2 * k + delta) * double(2 * k + delta - 1) / 4.0;
        block.offdiag_sq.push_back(sq);
        block.offdiag.push_back(std::sqrt(sq));
    }
    return block;
}

Complex charpoly(const ParityBlock& block, Complex e) {
    Complex prev = 0.0;  // phi_{-1}
    Complex cur = 1.0;   // phi_0
    for (int k = 0; k < block.size; ++k) {
        const double bsq = (k >= 1) ? block.offdiag_sq[k - 1] : 0.0;
        const Complex next = e * cur - bsq * prev;
        prev = cur;
        cur = next;
    }
    return cur;
}

double charpoly(const ParityBlock& block, double e) {
    double prev = 0.0, cur = 1.0;
    for (int k = 0; k < block.size; ++k) {
        const double bsq = (k >= 1) ? block.offdiag_sq[k - 1] : 0.0;
        const double next = e * cur - bsq * prev;
        prev = cur;
        cur = next;
    }
    return cur;
}

CharPoly charpoly_coefficients(const ParityBlock& block) {
    std::vector<double> prev = {};     // phi_{-1} = 0
    std::vector<double> cur = {1.0};   // phi_0 = 1
    for (int k = 0; k < block.size; ++k) {
        const double bsq = (k >= 1) ? block.offdiag_sq[k - 1] : 0.0;
        std::vector<double> next(cur.size() + 1, 0.0);
        for (size_t j = 0; j < cur.size(); ++j) next[j + 1] += cur[j];
        for (size_t j = 0; j < prev.size(); ++j) next[j] -= bsq * prev[j];
        prev = std::move(cur);
        cur = std::move(next);
    }
    return CharPoly{std::move(cur)};
}

double CharPoly::eval(double e) const {
    double acc = 0.0;
    for (size_t j = coeffs.size(); j-- > 0;) acc = acc * e + coeffs[j];
    return acc;
}

namespace {

// Number of eigenvalues of the Jacobi matrix (diag 0, off-diag |b_k|)
// strictly below x, by the standard Sturm count.
int sturm_count_below(const ParityBlock& block, double x) {
    int count = 0;
    double d = -x;
    if (d < 0.0) ++count;
    for (int k = 1; k < block.size; ++k) {
        const double denom =
            (std::abs(d) < 1e-300) ? std::copysign(1e-300, d == 0.0 ? -1.0 : d)
                                   : d;
        d = -x - block.offdiag_sq[k - 1] / denom;
        if (d < 0.0) ++count;
    }
    return count;
}

}  // namespace

std::vector<double> block_spectrum(const ParityBlock& block) {
    if (block.size < 1) return {};
    // Gershgorin bound for the zero-diagonal Jacobi matrix
    double radius = 0.0;
    for (int i = 0; i < block.size; ++i) {
        double row = 0.0;
        if (i >= 1) row += block.offdiag[i - 1];
        if (i < block.size - 1) row += block.offdiag[i];
        radius = std::max(radius, row);
    }
    radius += 1.0;

    std::vector<double> eigs(block.size);
    for (int j = 0; j < block.size; ++j) {
        double lo = -radius, hi = radius;
        // invariant: count(lo) <= j < count(hi)
        for (int iter = 0; iter < 120 && hi - lo > 1e-14 * radius; ++iter) {
            const double mid = 0.5 * (lo + hi);
            if (sturm_count_below(block, mid) <= j) {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        eigs[j] = 0.5 * (lo + hi);
    }
    std::sort(eigs.begin(), eigs.end());
    return eigs;
}

double min_spectral_gap(const std::vector<double>& spectrum) {
    if (spectrum.size() < 2) return std::numeric_limits<double>::infinity();
    double gap = std::numeric_limits<double>::infinity();
    for (size_t i = 1; i < spectrum.size(); ++i) {
        gap = std::min(gap, spectrum[i] - spectrum[i - 1]);
    }
    return gap;
}

}  // namespace lrh
