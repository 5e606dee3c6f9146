#include "lrh/special_functions.hpp"

#include <cmath>
#include <limits>
#include <vector>

namespace lrh {

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;

// Lanczos g and the 13-term rational coefficients for double precision
// (classic lanczos13m53 set; numerator already carries sqrt(2*pi)).
constexpr double kLanczosG = 6.024680040776729583740234375;

constexpr double kLanczosNum[13] = {
    23531376880.410759688572007674451636754734,
    42919803642.649098768957899047001988850926,
    35711959237.355668049440185451547166705960,
    17921034426.037209699919755754458931112671,
    6039542586.3520280050642916443072979210699,
    1439720407.3117216736632230727949123939715,
    248874557.86205415651146038641322942321632,
    31426415.585400194380614231628318205362874,
    2876370.6289353724412254090516208496135991,
    186056.26539522349504029498971604981226780,
    8071.6720023658162106380029022722506138218,
    210.82427775157934587250973392071336271166,
    2.5066282746310002701649081771338373386264,
};

constexpr double kLanczosDen[13] = {
    0.0,       39916800.0, 120543840.0, 150917976.0, 105258076.0,
    45995730.0, 13339535.0, 2637558.0,   357423.0,    32670.0,
    1925.0,     66.0,       1.0,
};

// num(z)/den(z), Horner from the top; both polynomials have positive
// coefficients, so there is no cancellation in the right half-plane.
Complex lanczos_sum(Complex z) {
    Complex num(kLanczosNum[12], 0.0);
    Complex den(kLanczosDen[12], 0.0);
    for (int i = 11; i >= 0; --i) {
        num = num * z + kLanczosNum[i];
        den = den * z + kLanczosDen[i];
    }
    return num / den;
}

// log Gamma(z) for Re z >= 0.5 (principal branch; no poles there).
Complex log_gamma_right(Complex z) {
    const Complex zgh = z + (kLanczosG - 0.5);
    return (z - 0.5) * std::log(zgh) - zgh + std::log(lanczos_sum(z));
}

// exp(w) - 1 without cancellation for small |w|.
Complex cexpm1(Complex w) {
    if (std::abs(w) > 0.5) return std::exp(w) - 1.0;
    // real part e^x cos y - 1 = expm1(x) cos y - 2 sin^2(y/2)
    const double ex = std::expm1(w.real());
    const double sy = std::sin(w.imag() / 2.0);
    return {ex * std::cos(w.imag()) - 2.0 * sy * sy,
            (ex + 1.0) * std::sin(w.imag())};
}

// Branch of log sin(pi z) analytic on Im z >= 0 that makes
// log pi - logsin - log_gamma_right(1-z) the principal log Gamma
// (sin(pi z) = exp(-i pi z) (exp(2 pi i z) - 1) / (2i), and the second
// factor stays in the upper half-plane for Im z > 0).
Complex log_sin_pi_upper(Complex z) {
    const Complex i(0.0, 1.0);
    return -i * kPi * z + std::log(cexpm1(2.0 * kPi * i * z) / (2.0 * i));
}

}  // namespace

Complex log_gamma(Complex s) {
    detail::require_finite(s, "log_gamma");
    // pole guard: nonpositive integers
    if (s.real() <= 0.5) {
        const double nearest = std::round(s.real());
        if (nearest <= 0.0 &&
            std::hypot(s.real() - nearest, s.imag()) < 1e-12) {
            throw PoleError("log_gamma: s within 1e-12 of a pole");
        }
    }
    if (s.imag() < 0.0) return std::conj(log_gamma(std::conj(s)));
    if (s.real() >= 0.5) return log_gamma_right(s);
    return std::log(kPi) - log_sin_pi_upper(s) - log_gamma_right(1.0 - s);
}

HermiteLevel::HermiteLevel(int level) : n(level) {
    if (level < 0) throw DomainError("HermiteLevel: negative level");
}

double HermiteLevel::log_kappa() const {
    // log(2^(1/4)) - (n log 2 + log n!)/2
    return 0.25 * std::log(2.0) -
           0.5 * (n * std::log(2.0) + std::lgamma(n + 1.0));
}

double HermiteLevel::kappa() const { return std::exp(log_kappa()); }

double hermite_psi(const HermiteLevel& level, double x) {
    detail::require_finite(x, "hermite_psi");
    // orthonormal Hermite functions in y = sqrt(2 pi) x:
    //   h_0 = pi^(-1/4) e^(-y^2/2),  h_{k+1} = y sqrt(2/(k+1)) h_k
    //                                        - sqrt(k/(k+1)) h_{k-1}
    // and psi_N(x) = (2 pi)^(1/4) h_N(y).
    const double y = std::sqrt(2.0 * kPi) * x;
    double hkm1 = 0.0;
    double hk = std::pow(kPi, -0.25) * std::exp(-0.5 * y * y);
    for (int k = 0; k < level.n; ++k) {
        const double hkp1 = y * std::sqrt(2.0 / (k + 1)) * hk -
                            std::sqrt(double(k) / (k + 1)) * hkm1;
        hkm1 = hk;
        hk = hkp1;
    }
    return std::pow(2.0 * kPi, 0.25) * hk;
}

Complex log_gamma_base_real(int delta, Complex s) {
    if (delta != 0 && delta != 1) {
        throw DomainError("gamma_base_real: delta must be 0 or 1");
    }
    if (delta == 0) {
        return -0.5 * s * std::log(kPi) + log_gamma(0.5 * s);
    }
    return std::log(2.0) - 0.5 * s * std::log(kPi) +
           log_gamma(0.5 * (s + 1.0));
}

Complex gamma_base_real(int delta, Complex s) {
    const Complex v = std::exp(log_gamma_base_real(delta, s));
    detail::require_finite(v, "gamma_base_real");
    return v;
}

namespace detail {

void require_finite(Complex z, const char* what) {
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
        throw DomainError(std::string(what) + ": non-finite complex value");
    }
}

void require_finite(double x, const char* what) {
    if (!std::isfinite(x)) {
        throw DomainError(std::string(what) + ": non-finite value");
    }
}

}  // namespace detail

}  // namespace lrh
