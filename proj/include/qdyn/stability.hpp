#pragma once

#include <complex>
#include <string>
#include <utility>
#include <vector>

#include "qdyn/dynamics.hpp"

namespace qdyn {

enum class FixedPointClass { sink, source, saddle, non_hyperbolic };

std::string to_string(FixedPointClass cls);

struct FixedPointReport {
    double x = 0.0;
    double y = 0.0;
    std::complex<double> lambda1;  // |lambda1| >= |lambda2|
    std::complex<double> lambda2;
    FixedPointClass cls = FixedPointClass::sink;
    bool oscillatory = false;  // non-real eigenvalues, or a negative real one

    std::string label() const;  // e.g. "oscillatory source"
};

// Real fixed points of the coupled quadratic map, ascending in x. Substituting
// y = b*x^2 - 1 reduces the fixed-point system to
//   (a + sigma*b)*x^2 - x + (1 - sigma) = 0,
// which is solved in closed form (linear when a + sigma*b == 0).
std::vector<std::pair<double, double>> fixed_points(const SystemParams& p);

// Eigenvalues of the Jacobian [[2*a*x, sigma], [2*b*x, 0]], i.e. the roots of
// lambda^2 - 2*a*x*lambda - 2*b*sigma*x = 0, ordered by descending modulus.
std::pair<std::complex<double>, std::complex<double>> jacobian_eigenvalues(const SystemParams& p, double x);

FixedPointReport classify_fixed_point(const SystemParams& p, std::pair<double, double> pt);

std::vector<FixedPointReport> stability_report(const SystemParams& p);

}  // namespace qdyn
