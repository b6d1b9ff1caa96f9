#include "punkt/fitting.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <span>
#include <vector>

namespace punkt {

namespace {

struct LinearFit {
    double slope = 0.0;
    double intercept = 0.0;
    double sse = 0.0;
    double sst = 0.0;
};

// Centered two-pass least squares; x values are distinct by construction.
LinearFit least_squares(std::span<const double> x, std::span<const double> y) {
    const std::size_t n = x.size();
    double mx = 0.0, my = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        mx += x[i];
        my += y[i];
    }
    mx /= static_cast<double>(n);
    my /= static_cast<double>(n);

    double sxx = 0.0, sxy = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double dx = x[i] - mx;
        sxx += dx * dx;
        sxy += dx * (y[i] - my);
    }
    LinearFit fit;
    fit.slope = sxy / sxx;
    fit.intercept = my - fit.slope * mx;
    for (std::size_t i = 0; i < n; ++i) {
        const double r = y[i] - (fit.intercept + fit.slope * x[i]);
        const double d = y[i] - my;
        fit.sse += r * r;
        fit.sst += d * d;
    }
    return fit;
}

// In-window items: ranks are contiguous 1..n, so the window is a slice.
std::span<const RankedItem> window_slice(const RankedSeries& series, FitWindow window,
                                         const char* stage) {
    if (window.r_min < 1 || window.r_min >= window.r_max)
        throw Error(stage, "invalid fit window [" + std::to_string(window.r_min) + ", " +
                               std::to_string(window.r_max) + "]");
    const std::size_t n = series.items.size();
    const std::size_t lo = window.r_min - 1;
    const std::size_t hi = std::min(window.r_max, n);
    if (lo >= hi || hi - lo < 3)
        throw Error(stage, "fewer than 3 in-window points for " + series.label + " in [" +
                               std::to_string(window.r_min) + ", " +
                               std::to_string(window.r_max) + "]");
    return std::span<const RankedItem>(series.items).subspan(lo, hi - lo);
}

void check_positive(std::span<const RankedItem> items, const char* stage) {
    for (const RankedItem& item : items)
        if (!(item.value > 0.0))
            throw Error(stage, "non-positive in-window value at rank " +
                                   std::to_string(item.rank));
}

} // namespace

PowerLawFit fit_power_law(const RankedSeries& series, FitWindow window) {
    const auto items = window_slice(series, window, "fit_power_law");
    check_positive(items, "fit_power_law");

    std::vector<double> x(items.size()), y(items.size());
    for (std::size_t i = 0; i < items.size(); ++i) {
        x[i] = std::log10(static_cast<double>(items[i].rank));
        y[i] = std::log10(items[i].value);
    }
    const LinearFit ls = least_squares(x, y);

    PowerLawFit fit;
    fit.exponent = -ls.slope;
    fit.amplitude = std::pow(10.0, ls.intercept);
    fit.window = window;
    fit.n_points = items.size();
    if (ls.sst > 0.0)
        fit.r_squared = std::clamp(1.0 - ls.sse / ls.sst, 0.0, 1.0);
    else
        fit.r_squared = ls.sse <= 1e-24 ? 1.0 : 0.0; // flat data: perfect constant fit
    return fit;
}

StretchedExponentialFit fit_stretched_exponential(const RankedSeries& series, FitWindow window,
                                                  std::optional<StretchedInit> init) {
    const auto items = window_slice(series, window, "fit_stretched_exponential");
    check_positive(items, "fit_stretched_exponential");

    const std::size_t n = items.size();
    std::vector<double> rank(n), logv(n), t(n);
    for (std::size_t i = 0; i < n; ++i) {
        rank[i] = static_cast<double>(items[i].rank);
        logv[i] = std::log(items[i].value);
    }

    StretchedInit start;
    if (init) {
        start = *init;
    } else {
        // amplitude from the first in-window value, rate chosen so the model
        // matches the last in-window value at the default stretch.
        start.amplitude = items.front().value;
        start.stretch_exponent = 0.5;
        const double span = std::log(items.front().value) - std::log(items.back().value);
        start.rate = std::max(span, 0.0) / std::pow(rank.back(), start.stretch_exponent);
    }

    // log(value) = log(amplitude) - rate * rank^beta is linear in
    // (log amplitude, rate) once beta is fixed, so profile those out and
    // search beta alone.
    struct Profiled {
        double log_amplitude = 0.0;
        double rate = 0.0;
        double residual = 0.0;
    };
    auto profile = [&](double beta) {
        for (std::size_t i = 0; i < n; ++i) t[i] = std::pow(rank[i], beta);
        const LinearFit ls = least_squares(t, logv);
        Profiled p;
        p.rate = -ls.slope;
        p.log_amplitude = ls.intercept;
        if (p.rate < 0.0) {
            // Values never increase with rank, so a negative rate only
            // appears on flat data through rounding; fall back to the
            // constant model.
            p.rate = 0.0;
            double mean = 0.0;
            for (double v : logv) mean += v;
            mean /= static_cast<double>(n);
            p.log_amplitude = mean;
        }
        p.residual = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            const double r = logv[i] - (p.log_amplitude - p.rate * t[i]);
            p.residual += r * r;
        }
        return p;
    };

    constexpr double kBetaLo = 1e-3;
    constexpr double kBetaHi = 2.0;
    constexpr int kIterationCap = 500;
    constexpr double kRelTol = 1e-9;

    // Coarse scan (the profiled residual can have local minima), seeded with
    // the requested starting stretch.
    double best_beta = std::clamp(start.stretch_exponent, kBetaLo, kBetaHi);
    double best_residual = profile(best_beta).residual;
    constexpr int kGrid = 80;
    for (int k = 1; k <= kGrid; ++k) {
        const double beta = kBetaLo + (kBetaHi - kBetaLo) * k / kGrid;
        const double res = profile(beta).residual;
        if (res < best_residual) {
            best_residual = res;
            best_beta = beta;
        }
    }

    // Golden-section refinement around the best coarse candidate.
    const double step = (kBetaHi - kBetaLo) / kGrid;
    double lo = std::max(kBetaLo, best_beta - step);
    double hi = std::min(kBetaHi, best_beta + step);
    constexpr double kGolden = 0.6180339887498949;
    double b1 = hi - kGolden * (hi - lo);
    double b2 = lo + kGolden * (hi - lo);
    double f1 = profile(b1).residual;
    double f2 = profile(b2).residual;
    int iterations = 0;
    bool converged = false;
    while (iterations < kIterationCap) {
        ++iterations;
        if (f1 <= f2) {
            hi = b2;
            b2 = b1;
            f2 = f1;
            b1 = hi - kGolden * (hi - lo);
            f1 = profile(b1).residual;
        } else {
            lo = b1;
            b1 = b2;
            f1 = f2;
            b2 = lo + kGolden * (hi - lo);
            f2 = profile(b2).residual;
        }
        if ((hi - lo) < kRelTol * std::max(1.0, std::abs(lo))) {
            converged = true;
            break;
        }
    }

    const double beta = 0.5 * (lo + hi);
    const Profiled p = profile(beta);

    StretchedExponentialFit fit;
    fit.window = window;
    fit.n_points = n;
    fit.residual_sum = p.residual;
    if (p.rate < 1e-9) {
        // Flat data: any stretch fits equally well, keep the initial one.
        fit.rate = p.rate;
        fit.stretch_exponent = start.stretch_exponent;
        fit.amplitude = std::exp(p.log_amplitude);
    } else {
        fit.rate = p.rate;
        fit.stretch_exponent = beta;
        fit.amplitude = std::exp(p.log_amplitude);
    }

    if (!converged)
        throw StretchedFitError("no convergence after " + std::to_string(kIterationCap) +
                                    " iterations for " + series.label,
                                fit);
    return fit;
}

BreakEstimate detect_break(const RankedSeries& series, std::size_t r_min) {
    if (r_min < 1) r_min = 1;
    const std::size_t n = series.items.size();
    if (n < r_min || n - r_min + 1 < 10)
        throw Error("detect_break", "too few points above rank " + std::to_string(r_min) +
                                        " for " + series.label);

    const std::size_t offset = r_min - 1; // slice [offset, n)
    const std::size_t m = n - offset;
    std::vector<long double> px(m + 1, 0.0L), py(m + 1, 0.0L), pxx(m + 1, 0.0L),
        pxy(m + 1, 0.0L), pyy(m + 1, 0.0L);
    for (std::size_t i = 0; i < m; ++i) {
        const RankedItem& item = series.items[offset + i];
        const long double x = std::log10(static_cast<long double>(item.rank));
        const long double y = std::log10(static_cast<long double>(item.value));
        px[i + 1] = px[i] + x;
        py[i + 1] = py[i] + y;
        pxx[i + 1] = pxx[i] + x * x;
        pxy[i + 1] = pxy[i] + x * y;
        pyy[i + 1] = pyy[i] + y * y;
    }

    // Residual and slope of the least-squares line over slice [a, b).
    auto segment = [&](std::size_t a, std::size_t b, long double& sse, long double& slope) {
        const long double cnt = static_cast<long double>(b - a);
        const long double sx = px[b] - px[a];
        const long double sy = py[b] - py[a];
        const long double sxx = pxx[b] - pxx[a] - sx * sx / cnt;
        const long double sxy = pxy[b] - pxy[a] - sx * sy / cnt;
        const long double syy = pyy[b] - pyy[a] - sy * sy / cnt;
        slope = sxy / sxx;
        sse = std::max(syy - sxy * sxy / sxx, 0.0L);
    };

    long double single_sse = 0.0L, single_slope = 0.0L;
    segment(0, m, single_sse, single_slope);

    BreakEstimate best;
    long double best_sse = std::numeric_limits<long double>::infinity();
    for (std::size_t k = 2; k + 3 < m; ++k) { // left [0, k], right [k+1, m-1]
        long double left_sse, left_slope, right_sse, right_slope;
        segment(0, k + 1, left_sse, left_slope);
        segment(k + 1, m, right_sse, right_slope);
        const long double total = left_sse + right_sse;
        if (total < best_sse) {
            best_sse = total;
            best.break_rank = series.items[offset + k].rank;
            best.break_length = series.items[offset + k].value;
            best.slope_before = static_cast<double>(left_slope);
            best.slope_after = static_cast<double>(right_slope);
        }
    }

    // Below the noise floor the single line already fits exactly and the
    // improvement ratio would just compare rounding residue.
    constexpr long double kNoiseFloor = 1e-12L;
    best.residual_improvement =
        single_sse > kNoiseFloor
            ? std::max(0.0, static_cast<double>(1.0L - best_sse / single_sse))
            : 0.0;
    best.material = best.residual_improvement >= 0.01 &&
                    best.slope_after <= best.slope_before - 0.05;
    return best;
}

double power_law_log_residual_sum(const RankedSeries& series, const PowerLawFit& fit) {
    const auto items = window_slice(series, fit.window, "power_law_log_residual_sum");
    const double log_amp = std::log(fit.amplitude);
    double sum = 0.0;
    for (const RankedItem& item : items) {
        const double r = std::log(item.value) -
                         (log_amp - fit.exponent * std::log(static_cast<double>(item.rank)));
        sum += r * r;
    }
    return sum;
}

} // namespace punkt
