#pragma once

// Piecewise targets g(z) and log-level tolerances eps(z) for the three
// construction variants, derived from the desired exp-level image radii.

#include <complex>
#include <vector>

#include "wander/scaffold.hpp"
#include "wander/variant.hpp"

namespace wander {

struct TargetEntry {
    std::string region;     // label of a scaffold region
    Complex target;         // value of g on that region (log level)
    double tolerance;       // log-level eps, from exp_tolerance
    Complex exp_center;     // e^{target}
    double exp_radius;      // guaranteed |e^{f1} - exp_center| bound
};

struct PiecewiseTarget {
    TargetVariant variant = TargetVariant::Wandering;
    std::vector<TargetEntry> entries;
    double f2_tolerance = 0.0;   // d_1: |f2 - log 1| < d_1 on the used w-range

    const TargetEntry* find(const std::string& region) const;
};

// Largest t such that |z - target| <= t implies |e^z - e^{target}| <= radius,
// i.e. log(1 + radius/|e^{target}|), nudged a few ulps down so the guarantee
// survives floating-point evaluation of the exponential.
double exp_tolerance(Complex target, double image_radius);

// Emits the variant's table with tolerances from exp_tolerance and the f2
// budget d_1 = exp_tolerance(0, 1/16).
PiecewiseTarget build_target(const ScaffoldConfig& cfg, TargetVariant variant);

}  // namespace wander
