#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace qdyn {

// Scalar recurrence x[n+1] = a*x[n]^alpha + b*x[n-1]^alpha.
// Negative bases with fractional alpha use the sign-preserving (odd) power;
// alpha == 1 and alpha == 2 take exact arithmetic paths.
struct MapParams {
    double a = 0.0;
    double b = 0.0;
    double alpha = 2.0;  // exponent, must lie in (0, 2]
};

struct OrbitState {
    double x_prev = 0.0;  // x[n-1]
    double x_curr = 0.0;  // x[n]
    std::int64_t n = 0;
};

// Coupled quadratic map  x' = a*x^2 + sigma*y + 1,  y' = b*x^2 - 1.
// sigma = 1 gives the uncoupled-coefficient variant.
struct SystemParams {
    double a = 0.0;
    double b = 0.0;
    double sigma = 1.0;
};

struct SystemState {
    double x = 0.0;
    double y = 0.0;
    std::int64_t t = 0;
};

// Roots of lambda^2 - b*lambda - a = 0 together with the flags they imply
// for the affine recurrence x[n+1] = b*x[n] + a*x[n-1].
struct LinearAnalysis {
    std::complex<double> lambda1;  // ordered so |lambda1| >= |lambda2|
    std::complex<double> lambda2;
    double spectral_radius = 0.0;
    bool converges_to_zero = false;
    bool oscillates_about_zero = false;  // no root is real and strictly positive
};

struct LinearClassification {
    bool oscillatory = false;
    bool convergent = false;
    std::string text() const;
};

// Divergence of a single step: the step index where the value became non-finite.
class OrbitDiverged : public std::runtime_error {
public:
    OrbitDiverged(const std::string& what, std::int64_t step)
        : std::runtime_error(what), step_(step) {}
    std::int64_t step() const noexcept { return step_; }

private:
    std::int64_t step_;
};

// Orbit prefix up to the requested length; if an iterate became non-finite the
// prefix stops just before it and diverged_at holds its 1-based index.
struct OrbitResult {
    std::vector<double> values;
    bool diverged = false;
    std::int64_t diverged_at = -1;
};

struct SystemTrajectory {
    std::vector<SystemState> states;
    bool diverged = false;
    std::int64_t diverged_at = -1;
};

double signed_power(double x, double alpha);

void validate_map_params(const MapParams& p);

namespace detail {

// One raw step of the recurrence; params must be pre-validated and the state
// finite. Kept inline, this is the innermost loop of the raster renderer.
inline double map_next(const MapParams& p, double x_prev, double x_curr) {
    if (p.alpha == 2.0) return p.a * (x_curr * x_curr) + p.b * (x_prev * x_prev);
    if (p.alpha == 1.0) return p.a * x_curr + p.b * x_prev;  // affine case, no power calls
    return p.a * signed_power(x_curr, p.alpha) + p.b * signed_power(x_prev, p.alpha);
}

}  // namespace detail

OrbitState step_map(const MapParams& p, const OrbitState& s);
OrbitResult iterate_orbit(const MapParams& p, double x_prev0, double x0, std::int64_t steps);

SystemState step_system(const SystemParams& p, const SystemState& s);
SystemTrajectory iterate_system(const SystemParams& p, double x0, double y0, std::int64_t steps);

LinearAnalysis linear_roots(double a, double b);
LinearClassification classify_linear(double a, double b);

// Sampled form of the recurrence with coefficients (a, -b) and alpha fixed to 2.
// The sampling period only labels the time axis; it does not enter the arithmetic.
OrbitState sampled_map_step(const MapParams& p, double sampling_period, const OrbitState& s);

}  // namespace qdyn
