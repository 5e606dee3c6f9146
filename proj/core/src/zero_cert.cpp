#include "lrh/zero_cert.hpp"

#include <algorithm>
#include <cmath>

#include "lrh/bk_operator.hpp"
#include "lrh/errors.hpp"

namespace lrh {

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;

double bisect_zero(const std::function<double(double)>& f, double lo,
                   double hi, double flo) {
    for (int iter = 0; iter < 200 && hi - lo > 1e-10; ++iter) {
        const double mid = 0.5 * (lo + hi);
        const double fmid = f(mid);
        if (fmid == 0.0) return mid;
        if ((flo < 0.0) != (fmid < 0.0)) {
            hi = mid;
        } else {
            lo = mid;
            flo = fmid;
        }
    }
    return 0.5 * (lo + hi);
}

int count_sign_changes(const std::function<double(double)>& f, double lo,
                       double hi, double step,
                       std::vector<std::pair<double, double>>* cells) {
    int count = 0;
    double prev_x = lo;
    double prev_f = f(lo);
    for (double x = lo + step; prev_x < hi; x += step) {
        const double xc = std::min(x, hi);
        const double fx = f(xc);
        if (prev_f == 0.0) {
            // grid point exactly on a zero: count it once, as the cell [x-, x+]
            if (cells) cells->emplace_back(prev_x, prev_x);
            ++count;
        } else if (fx != 0.0 && (prev_f < 0.0) != (fx < 0.0)) {
            if (cells) cells->emplace_back(prev_x, xc);
            ++count;
        }
        prev_x = xc;
        prev_f = fx;
        if (xc >= hi) break;
    }
    return count;
}

}  // namespace

void Rectangle::validate() const {
    if (!(e_min < e_max)) throw DomainError("Rectangle: e_min < e_max required");
    if (!(height > 0.0)) throw DomainError("Rectangle: height must be > 0");
}

Rectangle Rectangle::inflated(double factor) const {
    const double center = 0.5 * (e_min + e_max);
    const double half = 0.5 * (e_max - e_min) * factor;
    return Rectangle{center - half, center + half, height * factor};
}

std::vector<double> isolate_real_zeros(const std::function<double(double)>& f,
                                       double lo, double hi,
                                       double grid_step) {
    if (!(lo < hi)) throw DomainError("isolate_real_zeros: empty interval");
    if (!(grid_step > 0.0)) throw DomainError("isolate_real_zeros: bad step");

    std::vector<std::pair<double, double>> cells;
    const int n1 = count_sign_changes(f, lo, hi, grid_step, &cells);
    const int n2 = count_sign_changes(f, lo, hi, 0.5 * grid_step, nullptr);
    if (n1 != n2) {
        throw ResolutionError(
            "isolate_real_zeros: half-step rescan found a different zero "
            "count; two sign changes share a grid cell");
    }

    std::vector<double> zeros;
    zeros.reserve(cells.size());
    for (const auto& [a, b] : cells) {
        if (a == b) {
            zeros.push_back(a);
        } else {
            zeros.push_back(bisect_zero(f, a, b, f(a)));
        }
    }
    std::sort(zeros.begin(), zeros.end());
    return zeros;
}

namespace {

int winding_number_once(
    const std::function<std::complex<double>(std::complex<double>)>& f,
    const Rectangle& rect, int samples_per_side, double* min_abs,
    double* median_abs) {
    using Cx = std::complex<double>;
    const Cx corners[4] = {{rect.e_min, -rect.height},
                           {rect.e_max, -rect.height},
                           {rect.e_max, rect.height},
                           {rect.e_min, rect.height}};

    // parameterize the boundary counterclockwise by t in [0, 4)
    const auto point_at = [&](double t) -> Cx {
        const int side = int(t) % 4;
        const double frac = t - std::floor(t);
        const Cx a = corners[side];
        const Cx b = corners[(side + 1) % 4];
        return a + frac * (b - a);
    };

    struct Sample {
        double t;
        Cx value;
    };
    std::vector<Sample> samples;
    samples.reserve(4 * samples_per_side + 1);
    for (int i = 0; i < 4 * samples_per_side; ++i) {
        const double t = 4.0 * i / (4.0 * samples_per_side);
        samples.push_back({t, f(point_at(t))});
    }
    samples.push_back({4.0, samples.front().value});

    std::vector<double> mags;
    mags.reserve(samples.size());
    for (const auto& s : samples) mags.push_back(std::abs(s.value));
    std::vector<double> sorted_mags = mags;
    std::nth_element(sorted_mags.begin(),
                     sorted_mags.begin() + sorted_mags.size() / 2,
                     sorted_mags.end());
    *median_abs = sorted_mags[sorted_mags.size() / 2];
    *min_abs = *std::min_element(mags.begin(), mags.end());

    // phase accumulation with adaptive midpoint insertion
    long budget = 64L * 4L * samples_per_side;
    double total_phase = 0.0;
    for (size_t i = 0; i + 1 < samples.size(); ++i) {
        std::vector<Sample> stack = {samples[i + 1], samples[i]};
        while (stack.size() > 1) {
            const Sample lo = stack.back();
            stack.pop_back();
            const Sample hi = stack.back();
            if (lo.value == 0.0 || hi.value == 0.0) {
                throw ContourError(
                    "argument_principle_count: zero value on the contour");
            }
            const double dphase = std::arg(hi.value / lo.value);
            if (std::abs(dphase) < 0.5 * kPi) {
                total_phase += dphase;
                continue;
            }
            if (--budget < 0) {
                throw ContourError(
                    "argument_principle_count: refinement budget exhausted "
                    "(zero on or near the contour?)");
            }
            const double tm = 0.5 * (lo.t + hi.t);
            stack.push_back({tm, f(point_at(tm))});
            stack.push_back(lo);
        }
    }

    const double turns = total_phase / (2.0 * kPi);
    const long rounded = std::lround(turns);
    if (std::abs(turns - double(rounded)) > 1e-6) {
        throw ContourError(
            "argument_principle_count: accumulated phase is not an integer "
            "multiple of 2 pi");
    }
    return int(rounded);
}

}  // namespace

int argument_principle_count(
    const std::function<std::complex<double>(std::complex<double>)>& f,
    const Rectangle& rect, int samples_per_side) {
    rect.validate();
    if (samples_per_side < 256) {
        throw DomainError("argument_principle_count: samples_per_side >= 256");
    }
    double min_abs = 0.0, median_abs = 0.0;
    Rectangle current = rect;
    for (int attempt = 0; attempt < 2; ++attempt) {
        const int count = winding_number_once(f, current, samples_per_side,
                                              &min_abs, &median_abs);
        if (min_abs >= 1e-8 * median_abs) return count;
        current = current.inflated(1.1);
    }
    throw ContourError(
        "argument_principle_count: contour grazes a zero even after one 10% "
        "inflation");
}

int base_gamma_pole_count(int delta, const Rectangle& rect) {
    rect.validate();
    if (delta != 0 && delta != 1) {
        throw DomainError("base_gamma_pole_count: delta must be 0 or 1");
    }
    if (rect.e_min >= 0.0 || rect.e_max <= 0.0) return 0;  // poles on Re E = 0
    int count = 0;
    for (double y = (delta == 0) ? 0.5 : 1.5; y < rect.height; y += 2.0) {
        ++count;
    }
    return count;
}

std::function<double(double)> oracle_real_section(const HermiteLevel& level,
                                                  const QuadratureSpec& spec,
                                                  double reference_e) {
    const int delta = level.parity();
    const Complex ref = gamma_real_oracle(level, Complex(0.5, reference_e), spec) /
                        gamma_base_real(delta, Complex(0.5, reference_e));
    if (std::abs(ref) == 0.0) {
        throw DomainError("oracle_real_section: reference point is a zero");
    }
    const Complex phase = ref / std::abs(ref);
    return [level, spec, delta, phase](double e) {
        const Complex s(0.5, e);
        const Complex value =
            gamma_real_oracle(level, s, spec) / gamma_base_real(delta, s);
        return (value / phase).real();
    };
}

ZeroReport certify_real_case(const HermiteLevel& level,
                             const QuadratureSpec& spec, double rect_height,
                             int samples_per_side) {
    const int delta = level.parity();
    const int block_size = level.n / 2;
    const ParityBlock block = build_parity_block(delta, block_size);

    ZeroReport report;
    report.eigenvalues = block_spectrum(block);

    const double e_star =
        (report.eigenvalues.empty() ? 0.0 : report.eigenvalues.back()) + 1.0;
    const double gap = min_spectral_gap(report.eigenvalues);
    const double step = std::min(0.25, std::isfinite(gap) ? 0.45 * gap : 0.25);

    // pick a rotation reference away from all eigenvalues
    double ref = e_star;
    const auto section = oracle_real_section(level, spec, ref);
    report.real_zeros = isolate_real_zeros(section, -e_star, e_star, step);

    const Rectangle rect{-e_star, e_star, rect_height};
    const auto closed = [&](Complex e) {
        return gamma_real_closed(level, Complex(0.5, 0.0) + Complex(0, 1) * e);
    };
    const int winding = argument_principle_count(closed, rect, samples_per_side);
    report.contour_count = winding + base_gamma_pole_count(delta, rect);

    const size_t n = std::min(report.real_zeros.size(), report.eigenvalues.size());
    for (size_t i = 0; i < n; ++i) {
        report.pairing_distances.push_back(
            std::abs(report.real_zeros[i] - report.eigenvalues[i]));
    }
    report.max_pairing_distance =
        report.pairing_distances.empty()
            ? 0.0
            : *std::max_element(report.pairing_distances.begin(),
                                report.pairing_distances.end());
    report.certified =
        report.real_zeros.size() == report.eigenvalues.size() &&
        report.contour_count == int(report.real_zeros.size());
    return report;
}

}  // namespace lrh
