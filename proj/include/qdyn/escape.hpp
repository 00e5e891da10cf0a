#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "qdyn/dynamics.hpp"

namespace qdyn {

// How a plane point (u, v) is turned into map coefficients:
//   polar      a = k*cos(theta), b = k*sin(theta)
//   abs_polar  a = k*|cos(theta)|, b = k*|sin(theta)|
//   sign       a = sgn(cos(theta)), b = sgn(sin(theta)), sgn(0) = 0
enum class RasterMode { polar, abs_polar, sign };

std::string to_string(RasterMode mode);
RasterMode parse_raster_mode(const std::string& text);  // "polar" | "abs-polar" | "sign"

struct GridSpec {
    int pixels = 256;        // side length of the square raster
    double radius = 2.0;     // half-width of the plotted square in plane units
    RasterMode mode = RasterMode::polar;
    double k = 1.0;          // coefficient scale factor
    double alpha = 2.0;      // exponent of the iterated map
    int iters = 30;          // escape budget
    double threshold = 2.0;  // escape magnitude
};

void validate_grid_spec(const GridSpec& spec);

// Escape raster. Cell code 0 means no iterate reached the threshold within the
// budget; code m in [1, iters] is the 1-based index of the first that did.
struct EscapeGrid {
    GridSpec spec;
    std::vector<std::int32_t> cells;  // row-major, spec.pixels^2 entries

    std::int32_t at(int i, int j) const { return cells[static_cast<std::size_t>(i) * spec.pixels + j]; }
};

struct PlanePoint {
    double u = 0.0;
    double v = 0.0;
};

struct PointParams {
    MapParams map;
    double r = 0.0;
    double theta = 0.0;
};

// Cell centers, row 0 at the top (image orientation).
PlanePoint pixel_to_plane(const GridSpec& spec, int i, int j);

PointParams params_for_point(RasterMode mode, double k, double alpha, double u, double v);

// Iterates from x[-1] = 0, x[0] = r. The test applies to iterates only, never
// to the initial values; a non-finite iterate counts as escaped at its index.
std::int32_t escape_code(const MapParams& p, double r, int iters, double threshold);

// threads == 0 picks the available hardware parallelism. The cell array is
// identical for every thread count.
EscapeGrid render_escape_grid(const GridSpec& spec, int threads = 0);

double white_fraction(const EscapeGrid& g);

// Fraction of cells whose bounded/escaped classification differs.
double mask_diff(const EscapeGrid& g1, const EscapeGrid& g2);

// Sufficient condition for boundedness of the k = 1 polar quadratic family:
// both initial values within the closed disk of radius 1/sqrt(2). Says nothing
// about orbits that start outside it.
bool analytic_bound_holds(double x_prev, double x_curr);

}  // namespace qdyn
