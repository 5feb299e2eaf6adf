#include "wander/verify.hpp"

#include <algorithm>
#include <cmath>

namespace wander {

namespace {

// Internal refinement grid for image_enclosure: boxes wider than this in the
// scaled coordinate are split into up to 8x8 cells before hulling, which
// keeps one-shot enclosures of whole domains usable (the certify loop mostly
// sees boxes below the threshold).
constexpr double kGridTargetWidth = 0.004;
constexpr int kGridMaxCells = 8;

int grid_cells(double scaled_width) {
    if (!(scaled_width > kGridTargetWidth)) return 1;
    const int n = static_cast<int>(std::ceil(scaled_width / kGridTargetWidth));
    return std::min(n, kGridMaxCells);
}

RealInterval exp_re_f2_range(const MapRealization& m, const RealInterval& w) {
    const ComplexBox q = horner_box(m.f2, ComplexBox{w, RealInterval{0.0, 0.0}});
    return iv_exp(q.re);
}

ProductBox image_enclosure_cell(const MapRealization& m, const ComplexBox& z,
                                const RealInterval& E) {
    const ComplexBox p = horner_box(m.f1, z);
    const ComplexBox ez = exp_box(p);
    const ComplexBox img_z = box_add(ez, ComplexBox{iv_scale(E, m.delta), RealInterval{0.0, 0.0}});
    return {img_z, E};
}

}  // namespace

std::string to_string(CertStatus s) {
    switch (s) {
        case CertStatus::Certified: return "certified";
        case CertStatus::Failed: return "failed";
        case CertStatus::BudgetExhausted: return "budget-exhausted";
    }
    return "?";
}

std::pair<Complex, double> apply_map(const MapRealization& m, Complex z, double w) {
    const double e2 = std::exp(eval(m.f2, Complex{w, 0.0}).real());
    const Complex z1 = std::exp(eval(m.f1, z)) + m.delta * e2;
    return {z1, e2};
}

ProductBox image_enclosure(const MapRealization& m, const ProductBox& b) {
    const RealInterval E = exp_re_f2_range(m, b.w);
    const double s = m.f1.scale.s;
    const int nr = grid_cells(b.z.re.width() * s);
    const int ni = grid_cells(b.z.im.width() * s);
    if (nr == 1 && ni == 1) return image_enclosure_cell(m, b.z, E);

    ProductBox hull;
    bool first = true;
    for (int i = 0; i < nr; ++i) {
        const double r0 = b.z.re.lo + b.z.re.width() * i / nr;
        const double r1 = i + 1 == nr ? b.z.re.hi : b.z.re.lo + b.z.re.width() * (i + 1) / nr;
        for (int j = 0; j < ni; ++j) {
            const double i0 = b.z.im.lo + b.z.im.width() * j / ni;
            const double i1 = j + 1 == ni ? b.z.im.hi : b.z.im.lo + b.z.im.width() * (j + 1) / ni;
            const ProductBox cell =
                image_enclosure_cell(m, ComplexBox{{r0, r1}, {i0, i1}}, E);
            hull = first ? cell
                         : ProductBox{box_hull(hull.z, cell.z), iv_hull(hull.w, cell.w)};
            first = false;
        }
    }
    return hull;
}

TargetSet TargetSet::from_domain(const ProductDomain& d) {
    TargetSet t;
    t.label = d.label;
    t.center = d.center;
    t.radius = d.radius;
    t.z_strict = false;
    t.w = d.w;
    return t;
}

namespace {

bool z_box_in_disk(const ComplexBox& b, Complex c, double radius, bool strict) {
    const double dx = std::max(std::abs(b.re.lo - c.real()), std::abs(b.re.hi - c.real()));
    const double dy = std::max(std::abs(b.im.lo - c.imag()), std::abs(b.im.hi - c.imag()));
    const double d2 = ulp_up(ulp_up(dx * dx) + ulp_up(dy * dy));
    const double r2 = ulp_down(radius * radius);
    return strict ? d2 < r2 : d2 <= r2;
}

bool w_in_bound(const RealInterval& w, const WBound& b) {
    if (b.all_reals) return true;
    return b.closed ? (-b.half <= w.lo && w.hi <= b.half)
                    : (-b.half < w.lo && w.hi < b.half);
}

bool enclosure_in_target(const ProductBox& enc, const TargetSet& t) {
    return z_box_in_disk(enc.z, t.center, t.radius, t.z_strict) && w_in_bound(enc.w, t.w);
}

bool point_in_target(Complex z, double w, const TargetSet& t) {
    const double d = std::abs(z - t.center);
    const bool z_ok = t.z_strict ? d < t.radius : d <= t.radius;
    const bool w_ok = t.w.all_reals ||
                      (t.w.closed ? std::abs(w) <= t.w.half : std::abs(w) < t.w.half);
    return z_ok && w_ok;
}

// True if the z-box certainly misses the source disk.
bool z_box_outside_disk(const ComplexBox& b, Complex c, double radius) {
    auto axis_dist = [](const RealInterval& iv, double x) {
        if (x < iv.lo) return iv.lo - x;
        if (x > iv.hi) return x - iv.hi;
        return 0.0;
    };
    const double dx = axis_dist(b.re, c.real());
    const double dy = axis_dist(b.im, c.imag());
    const double d2 = ulp_down(ulp_down(dx * dx) + ulp_down(dy * dy));
    return d2 > ulp_up(radius * radius);
}

struct StackEntry {
    ProductBox box;
    int depth;
};

}  // namespace

InclusionCertificate certify_inclusion(const MapRealization& m, const ProductDomain& source,
                                       const TargetSet& target, const CertBudget& budget,
                                       const BBox& z_clip) {
    InclusionCertificate cert;
    cert.source = source.label;
    cert.target = target.label;

    ProductBox root;
    const bool disk_source = source.shape == RegionShape::Disk;
    if (disk_source) {
        root.z = ComplexBox{{source.center.real() - source.radius,
                             source.center.real() + source.radius},
                            {source.center.imag() - source.radius,
                             source.center.imag() + source.radius}};
    } else {
        root.z = ComplexBox{{source.abscissa, source.abscissa}, z_clip.im};
    }
    if (source.w.all_reals) {
        const double half = 9.0 / (8.0 * m.delta);
        root.w = RealInterval{-half, half};
    } else {
        root.w = RealInterval{-source.w.half, source.w.half};
    }

    std::vector<StackEntry> stack{{root, 0}};
    while (!stack.empty()) {
        const StackEntry top = stack.back();
        stack.pop_back();
        ++cert.boxes_examined;
        cert.max_depth_reached = std::max(cert.max_depth_reached, top.depth);

        if (disk_source && z_box_outside_disk(top.box.z, source.center, source.radius))
            continue;

        ProductBox enc;
        try {
            enc = image_enclosure(m, top.box);
        } catch (const EnclosureOverflow&) {
            enc.z = ComplexBox{{-1e308, 1e308}, {-1e308, 1e308}};
            enc.w = RealInterval{-1e308, 1e308};
        }
        if (enclosure_in_target(enc, target)) continue;

        // Check the box midpoint for a concrete counterexample before
        // spending more subdivision on it.
        {
            Complex zc = top.box.z.mid();
            if (disk_source) {
                const Complex off = zc - source.center;
                const double d = std::abs(off);
                if (d > source.radius)
                    zc = source.center + off * (source.radius / d) * 0.999;
            }
            const double wc = top.box.w.mid();
            const auto [iz, iw] = apply_map(m, zc, wc);
            if (!point_in_target(iz, iw, target)) {
                cert.status = CertStatus::Failed;
                cert.witness = Witness{zc, wc, iz, iw};
                return cert;
            }
        }

        if (top.depth >= budget.max_depth || cert.boxes_examined >= budget.max_boxes) {
            cert.status = CertStatus::BudgetExhausted;
            return cert;
        }
        auto children = subdivide(top.box);
        if (children.size() == 1) {  // degenerate box, cannot refine further
            cert.status = CertStatus::BudgetExhausted;
            return cert;
        }
        for (auto it = children.rbegin(); it != children.rend(); ++it)
            stack.push_back({*it, top.depth + 1});
    }
    cert.status = CertStatus::Certified;
    return cert;
}

std::vector<InclusionCertificate> certify_variant(const ScaffoldConfig& cfg,
                                                  const MapRealization& m, TargetVariant variant,
                                                  const CertBudget& budget) {
    const auto domains = product_domains(cfg, variant);
    auto find = [&](const std::string& label) -> const ProductDomain& {
        for (const auto& d : domains)
            if (d.label == label) return d;
        throw std::logic_error("missing product domain " + label);
    };
    const BBox clip = auto_bbox(cfg, variant);
    const int K = cfg.depth;

    std::vector<InclusionCertificate> certs;
    auto run = [&](const ProductDomain& src, const TargetSet& tgt) {
        certs.push_back(certify_inclusion(m, src, tgt, budget, clip));
    };

    auto wandering_list = [&] {
        for (int k = 1; k < K; ++k)
            run(find("B'" + std::to_string(k)),
                TargetSet::from_domain(find("B'" + std::to_string(k + 1))));
        // M'_k maps into {|z-1| < 2, |w| < 9/(8 delta)}, strictly inside G2.
        TargetSet inner;
        inner.label = "G2";
        inner.center = Complex{1.0, 0.0};
        inner.radius = 2.0;
        inner.z_strict = true;
        inner.w = WBound{9.0 / (8.0 * cfg.delta), /*closed=*/false, false};
        for (int k = 1; k <= K; ++k) run(find("M'" + std::to_string(k)), inner);
        run(find("G2"), TargetSet::from_domain(find("G2")));
    };

    switch (variant) {
        case TargetVariant::Wandering:
            wandering_list();
            break;
        case TargetVariant::Attracting:
            for (int k = 1; k <= K; ++k)
                run(find("B'" + std::to_string(k)),
                    TargetSet::from_domain(find("B'" + std::to_string(k))));
            break;
        case TargetVariant::CommonPath:
            for (int k = 1; k <= K; ++k)
                run(find("A'" + std::to_string(k)), TargetSet::from_domain(find("B'1")));
            wandering_list();
            break;
    }
    return certs;
}

}  // namespace wander
