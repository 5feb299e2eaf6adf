#pragma once

// Certification of trapping inclusions for the realized skew product
//   F(z,w) = (e^{f1(z)} + delta * e^{Re f2(w)}, e^{Re f2(w)})
// by adaptive subdivision with interval enclosures.

#include <optional>
#include <string>
#include <vector>

#include "wander/approx.hpp"
#include "wander/interval.hpp"
#include "wander/scaffold.hpp"

namespace wander {

struct MapRealization {
    PolyApproximant f1;
    PolyApproximant f2;
    double delta = 0.0;
};

// Point evaluation of the realized map.
std::pair<Complex, double> apply_map(const MapRealization& m, Complex z, double w);

// Sound enclosure of {F(z,w) : (z,w) in b}.
ProductBox image_enclosure(const MapRealization& m, const ProductBox& b);

struct CertBudget {
    int max_depth = 24;
    long max_boxes = 1000000;
};

enum class CertStatus { Certified, Failed, BudgetExhausted };

std::string to_string(CertStatus s);

struct Witness {
    Complex z;
    double w = 0.0;
    Complex image_z;
    double image_w = 0.0;
};

struct InclusionCertificate {
    std::string source;
    std::string target;
    CertStatus status = CertStatus::BudgetExhausted;
    long boxes_examined = 0;
    int max_depth_reached = 0;
    std::optional<Witness> witness;  // concrete violation, on failure
};

// Target membership test used by certification; strictness per bound flags.
struct TargetSet {
    std::string label;
    Complex center{0.0, 0.0};
    double radius = 0.0;
    bool z_strict = false;   // require the interior of the disk
    WBound w;

    static TargetSet from_domain(const ProductDomain& d);
};

// Certifies F(source) inside target by adaptive subdivision.  Line sources
// are certified on their segment inside `z_clip` with w clipped to
// [-9/(8 delta), 9/(8 delta)].  Boxes certainly outside the source region
// are accepted vacuously.
InclusionCertificate certify_inclusion(const MapRealization& m, const ProductDomain& source,
                                       const TargetSet& target, const CertBudget& budget,
                                       const BBox& z_clip);

// Runs the variant's inclusion list:
//   Wandering:  F(B'_k) in B'_{k+1} (k < K), clipped M'_k into
//               {|z-1| < 2, |w| < 9/(8 delta)}, F(G2) in G2.
//   Attracting: F(B'_k) in B'_k for all k.
//   CommonPath: F(A'_k) in B'_1 for all k, plus the Wandering list.
std::vector<InclusionCertificate> certify_variant(const ScaffoldConfig& cfg,
                                                  const MapRealization& m, TargetVariant variant,
                                                  const CertBudget& budget = {});

}  // namespace wander
