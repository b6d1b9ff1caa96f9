// Model fitting on rank-size data: power-law exponents by least squares in
// log-log space, a stretched-exponential alternative, and large-rank break
// (slope-change) detection.

#ifndef PUNKT_FITTING_HPP
#define PUNKT_FITTING_HPP

#include "punkt/error.hpp"
#include "punkt/ranking.hpp"

#include <cstddef>
#include <optional>

namespace punkt {

struct FitWindow {
    std::size_t r_min = 1;
    std::size_t r_max = 1;
};

struct PowerLawFit {
    double exponent = 0.0;  // value ~ amplitude * rank^(-exponent)
    double amplitude = 0.0;
    FitWindow window;
    double r_squared = 0.0; // coefficient of determination in log-log space
    std::size_t n_points = 0;
};

struct StretchedExponentialFit {
    double amplitude = 0.0; // value ~ amplitude * exp(-rate * rank^stretch_exponent)
    double rate = 0.0;
    double stretch_exponent = 0.0; // in (0, 2]
    FitWindow window;
    double residual_sum = 0.0; // in-window sum of squared natural-log residuals
    std::size_t n_points = 0;
};

struct StretchedInit {
    double amplitude = 0.0;
    double rate = 0.0;
    double stretch_exponent = 0.5;
};

struct BreakEstimate {
    std::size_t break_rank = 0;
    double break_length = 0.0; // value at break_rank
    double slope_before = 0.0; // log-log slope up to and including break_rank
    double slope_after = 0.0;  // log-log slope past break_rank
    bool material = false;     // slope steepens by >= 0.05 with >= 1% residual improvement
    double residual_improvement = 0.0; // fractional improvement over a single line
};

// Carries the best parameters found when the iterative search hits its cap.
class StretchedFitError : public Error {
public:
    StretchedFitError(const std::string& message, StretchedExponentialFit best_so_far)
        : Error("fit_stretched_exponential", message), best(best_so_far) {}
    StretchedExponentialFit best;
};

// Ordinary least squares of log10(value) on log10(rank) over the ranks in
// [window.r_min, window.r_max] present in the series; exponent = -slope,
// amplitude = 10^intercept. Errors: invalid window, fewer than 3 in-window
// points, non-positive in-window value.
PowerLawFit fit_power_law(const RankedSeries& series, FitWindow window);

// Minimizes the in-window sum of squared natural-log residuals of
// amplitude*exp(-rate*rank^stretch) by derivative-free search: a coarse scan
// plus golden-section refinement over the stretch exponent, with amplitude
// and rate solved in closed form at each candidate (the model is linear in
// log space for fixed stretch). Converges when the stretch update falls
// below 1e-9 relative or errors (StretchedFitError, carrying the best
// parameters) after 500 iterations. A degenerate flat series yields
// rate < 1e-9 with stretch_exponent left at its initial value.
StretchedExponentialFit fit_stretched_exponential(const RankedSeries& series, FitWindow window,
                                                  std::optional<StretchedInit> init = std::nullopt);

// Scans every break rank with at least 3 points per side within
// [r_min, max rank], fitting independent log-log lines on each side, and
// returns the rank minimizing total squared residual (ties to the smaller
// rank). The break is material when the slope steepens by >= 0.05 and the
// two-line fit improves on the single-line residual by >= 1%.
BreakEstimate detect_break(const RankedSeries& series, std::size_t r_min);

// Sum of squared natural-log residuals of a power-law fit over its window,
// computed on the identical point set fit_stretched_exponential uses, so the
// two models' residuals are directly comparable.
double power_law_log_residual_sum(const RankedSeries& series, const PowerLawFit& fit);

} // namespace punkt

#endif
