#pragma once

// Polynomial surrogate synthesis: weighted least squares over the sampled
// scaffold with an orthonormalized (Arnoldi) basis, escalating through a
// degree schedule until every region validates within its tolerance.

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "wander/interval.hpp"
#include "wander/scaffold.hpp"
#include "wander/targets.hpp"

namespace wander {

struct RegionSamples {
    std::string region;
    std::vector<Complex> fit;
    std::vector<Complex> validation;
};

struct SampleSet {
    std::vector<RegionSamples> regions;

    size_t fit_count() const;
    const RegionSamples* find(const std::string& region) const;
};

// Axis-aligned rectangle in the z-plane.
using BBox = ComplexBox;

// Rectangle enclosing every region of the variant, padded; lines are later
// clipped to this box both for sampling and certification.
BBox auto_bbox(const ScaffoldConfig& cfg, TargetVariant variant);

// Disks are sampled on boundary circles plus interior rings, lines on their
// bbox-clipped segment.  `density` is points per unit length (boundary and
// lines) and scales the interior ring count.  Deterministic; `seed` only
// rotates the validation phases (used by resampling robustness tests).
SampleSet sample_regions(const ScaffoldConfig& cfg, TargetVariant variant, const BBox& bbox,
                         double density, unsigned seed = 0);

struct DomainScale {
    Complex center{0.0, 0.0};
    double s = 1.0;  // multiplicative: u = (z - center) * s
};

struct PolyApproximant {
    int degree = 0;
    DomainScale scale;
    std::vector<Complex> coeffs;             // monomial, length degree+1
    std::map<std::string, double> errors;    // per-region validated sup error
    bool validated = false;

    Complex scaled(Complex z) const { return (z - scale.center) * scale.s; }
};

// Horner evaluation on the scaled coordinate.
Complex eval(const PolyApproximant& p, Complex z);

// Interval Horner on the scaled coordinate; intersection of the plain and
// mean-value forms.
ComplexBox horner_box(const PolyApproximant& p, const ComplexBox& b);

struct SynthesisOptions {
    double margin = 0.9;            // validation threshold is margin * tolerance
    double guard_tolerance = 1e8;   // growth budget on the guard ring; 0 disables
    double guard_radius = 1.45;     // ring radius in the scaled coordinate
    int guard_points = 1024;
};

struct SynthesisLog {
    int degree = -1;
    std::map<int, double> weighted_residual;  // per schedule degree reached
    std::map<std::string, double> best_errors;
};

struct DegreeBudgetExceeded : std::runtime_error {
    DegreeBudgetExceeded(const std::string& msg, PolyApproximant best_)
        : std::runtime_error(msg), best(std::move(best_)) {}
    PolyApproximant best;  // last attempt, with its achieved errors
};

// Weighted LSQ min sum w_i |p(z_i) - g(z_i)|^2, w_i = 1/eps(z_i)^2, solved by
// projection onto a basis orthonormalized against that discrete inner
// product; stops at the first schedule degree whose validation sup error per
// region is below margin * tolerance.  Throws DegreeBudgetExceeded if the
// schedule runs out.
PolyApproximant synthesize_f1(const PiecewiseTarget& target, const SampleSet& samples,
                              const std::vector<int>& degree_schedule,
                              const SynthesisOptions& opts = {}, SynthesisLog* log = nullptr);

// Default f2: the zero polynomial (|0 - log 1| = 0 < d1).
PolyApproximant make_f2(double d1);

// Perturbation mode: validates that |p(w)| stays below d1 on |w| <= w_half
// via interval evaluation.  Throws std::runtime_error when it does not.
PolyApproximant make_f2(double d1, const std::vector<double>& perturbation, double w_half);

}  // namespace wander
