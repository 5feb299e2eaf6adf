#pragma once

// Geometric scaffolding: the disks B_k, A_k, G_1, the vertical lines M_k,
// L_k, and their product-domain counterparts B'_k, M'_k, A'_k, L'_k, G_2.
//
// All validation comparisons run in exact rational arithmetic on the stored
// double values, so a reported "pass" can be trusted by the certification
// stages downstream.

#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

#include "wander/variant.hpp"

namespace wander {

using Complex = std::complex<double>;

struct ScaffoldConfig {
    double delta = 0.0;              // coupling, in (0,1)
    int depth = 0;                   // K, number of realized indices
    std::vector<double> deltas;      // centers of B_k, k = 1..K+1
    std::vector<double> ells;        // radii of B_k, k = 1..K+1
    std::vector<double> ms;          // abscissas of M_k, k = 1..K
    std::vector<double> rs;          // A_k centered at -r_k, k = 1..K
    std::vector<double> ss;          // radii of A_k, k = 1..K
    std::vector<double> ts;          // L_k is Re z = -t_k, k = 1..K
};

struct ConstraintCheck {
    std::string constraint;
    bool pass = false;
    std::string detail;
};

struct ValidationReport {
    std::vector<ConstraintCheck> checks;
    bool all_pass() const;
    const ConstraintCheck* first_failure() const;
};

struct StructuralReport {
    std::vector<ConstraintCheck> checks;
    double min_gap = 0.0;   // smallest pairwise gap between scaffold pieces
    bool all_pass() const;
};

struct ScaffoldInfeasible : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class RegionShape { Disk, VLine };

// One piece of the one-variable scaffold G.
struct Region {
    std::string label;
    RegionShape shape = RegionShape::Disk;
    Complex center{0.0, 0.0};   // disk
    double radius = 0.0;        // disk
    double abscissa = 0.0;      // vertical line Re z = abscissa

    static Region disk(std::string label, Complex c, double r);
    static Region vline(std::string label, double x);
};

// w-extent of a product domain.
struct WBound {
    double half = 0.0;        // |w| bound; ignored when all_reals
    bool closed = true;       // |w| <= half versus |w| < half
    bool all_reals = false;
};

struct ProductDomain {
    std::string label;
    RegionShape shape = RegionShape::Disk;
    Complex center{0.0, 0.0};
    double radius = 0.0;
    double abscissa = 0.0;
    WBound w;
};

// Synthesizes a config from (delta, depth, growth) following geometric
// center growth with midpoint placement of the M_k and L_k lines.
// Throws std::invalid_argument on precondition violations and
// ScaffoldInfeasible (naming the first violated constraint) if the
// synthesized sequences fail their own validation.
ScaffoldConfig generate_scaffold(double delta, int depth, double growth);

// Checks every scaffold constraint; the report carries one entry per
// constraint with the violating indices in `detail`.
ValidationReport validate_scaffold(const ScaffoldConfig& cfg);

// Family-specific sufficient conditions for the truncated scaffold to be a
// valid approximation set: pairwise disjoint pieces with positive gaps and
// monotonically escaping disk centers.
StructuralReport nersesjan_check(const ScaffoldConfig& cfg);

// One-variable regions of the scaffold used by the given variant.
std::vector<Region> scaffold_regions(const ScaffoldConfig& cfg, TargetVariant variant);

// Product domains tracked by the given variant.
std::vector<ProductDomain> product_domains(const ScaffoldConfig& cfg, TargetVariant variant);

}  // namespace wander
