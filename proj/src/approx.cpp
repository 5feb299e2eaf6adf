#include "wander/approx.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include "arnoldi_fit.hpp"

namespace wander {

size_t SampleSet::fit_count() const {
    size_t n = 0;
    for (const auto& r : regions) n += r.fit.size();
    return n;
}

const RegionSamples* SampleSet::find(const std::string& region) const {
    for (const auto& r : regions)
        if (r.region == region) return &r;
    return nullptr;
}

BBox auto_bbox(const ScaffoldConfig& cfg, TargetVariant variant) {
    const auto regs = scaffold_regions(cfg, variant);
    double lo = 0.0, hi = 0.0, rad = 0.0;
    bool first = true;
    for (const auto& r : regs) {
        double a, b;
        if (r.shape == RegionShape::Disk) {
            a = r.center.real() - r.radius;
            b = r.center.real() + r.radius;
            rad = std::max(rad, r.radius);
        } else {
            a = b = r.abscissa;
        }
        lo = first ? a : std::min(lo, a);
        hi = first ? b : std::max(hi, b);
        first = false;
    }
    const double pad = 2.0;
    const double imh = 1.06 * rad;
    return BBox{{lo - pad, hi + pad}, {-imh, imh}};
}

namespace {

std::vector<Complex> disk_points(Complex c, double r, int nb, int nrings, double phase) {
    std::vector<Complex> pts;
    constexpr double kTwoPi = 6.283185307179586;
    for (int j = 0; j < nb; ++j) {
        const double a = kTwoPi * (j + phase) / nb;
        pts.push_back(c + r * Complex{std::cos(a), std::sin(a)});
    }
    for (int i = 1; i <= nrings; ++i) {
        const double rr = r * std::sqrt((i - 0.5) / nrings);
        const int ni = std::max(12, static_cast<int>(nb * rr / r));
        for (int j = 0; j < ni; ++j) {
            const double a = kTwoPi * (j + phase + 0.31 * i) / ni;
            pts.push_back(c + rr * Complex{std::cos(a), std::sin(a)});
        }
    }
    return pts;
}

std::vector<Complex> segment_points(double x, double ylo, double yhi, int n, double phase) {
    std::vector<Complex> pts;
    const double h = (yhi - ylo) / (n - 1);
    for (int j = 0; j < n; ++j) {
        double y = ylo + h * j + phase * h;
        y = std::min(std::max(y, ylo), yhi);
        pts.push_back(Complex{x, y});
    }
    return pts;
}

}  // namespace

SampleSet sample_regions(const ScaffoldConfig& cfg, TargetVariant variant, const BBox& bbox,
                         double density, unsigned seed) {
    const auto regs = scaffold_regions(cfg, variant);
    const double val_phase = 0.37 + 0.1031 * (seed % 97) / 97.0;
    SampleSet out;
    for (const auto& r : regs) {
        RegionSamples rs;
        rs.region = r.label;
        if (r.shape == RegionShape::Disk) {
            const double relo = r.center.real() - r.radius;
            const double rehi = r.center.real() + r.radius;
            if (relo < bbox.re.lo || rehi > bbox.re.hi || -r.radius < bbox.im.lo ||
                r.radius > bbox.im.hi)
                throw std::runtime_error("region " + r.label + " outside bbox");
            const int nb = std::clamp(static_cast<int>(6.283 * r.radius * density), 48, 512);
            rs.fit = disk_points(r.center, r.radius, nb, 5, 0.0);
            const int nv = std::clamp(static_cast<int>(1.618 * nb) | 1, 81, 829);
            rs.validation = disk_points(r.center, r.radius, nv, 7, val_phase);
        } else {
            if (r.abscissa < bbox.re.lo || r.abscissa > bbox.re.hi)
                throw std::runtime_error("region " + r.label + " outside bbox");
            const double len = bbox.im.width();
            const int n = std::clamp(static_cast<int>(2.0 * len * density), 96, 1024);
            rs.fit = segment_points(r.abscissa, bbox.im.lo, bbox.im.hi, n, 0.0);
            const int nv = std::clamp(static_cast<int>(1.618 * n) | 1, 155, 1657);
            rs.validation = segment_points(r.abscissa, bbox.im.lo, bbox.im.hi, nv, val_phase);
        }
        out.regions.push_back(std::move(rs));
    }
    return out;
}

Complex eval(const PolyApproximant& p, Complex z) {
    const Complex u = p.scaled(z);
    Complex acc{0.0, 0.0};
    for (size_t j = p.coeffs.size(); j-- > 0;) acc = acc * u + p.coeffs[j];
    return acc;
}

namespace {

// Interval Horner with interval coefficients.
ComplexBox horner_iv(const std::vector<ComplexBox>& coeffs, const ComplexBox& u) {
    ComplexBox acc{{0.0, 0.0}, {0.0, 0.0}};
    for (size_t j = coeffs.size(); j-- > 0;) acc = box_add(box_mul(acc, u), coeffs[j]);
    return acc;
}

std::vector<ComplexBox> point_coeffs(const std::vector<Complex>& c) {
    std::vector<ComplexBox> out;
    out.reserve(c.size());
    for (Complex x : c) out.emplace_back(x);
    return out;
}

}  // namespace

ComplexBox horner_box(const PolyApproximant& p, const ComplexBox& b) {
    // u = (b - center) * s, as intervals
    const ComplexBox u = box_scale(box_sub(b, ComplexBox{p.scale.center}), p.scale.s);
    const auto cs = point_coeffs(p.coeffs);
    const ComplexBox plain = horner_iv(cs, u);
    if (p.coeffs.size() <= 1) return plain;

    // Mean-value form: p(mid) + p'(U) * (U - mid)
    const ComplexBox mid{u.mid()};
    const ComplexBox at_mid = horner_iv(cs, mid);
    std::vector<ComplexBox> dcs;
    dcs.reserve(cs.size() - 1);
    for (size_t j = 1; j < p.coeffs.size(); ++j) {
        const double k = static_cast<double>(j);
        const Complex cj = p.coeffs[j];
        dcs.push_back(ComplexBox{{ulp_down(cj.real() * k), ulp_up(cj.real() * k)},
                                 {ulp_down(cj.imag() * k), ulp_up(cj.imag() * k)}});
    }
    const ComplexBox centered =
        box_add(at_mid, box_mul(horner_iv(dcs, u), box_sub(u, mid)));
    return box_meet(plain, centered);
}

PolyApproximant make_f2(double d1) {
    PolyApproximant p;
    p.degree = 0;
    p.coeffs = {Complex{0.0, 0.0}};
    p.scale = DomainScale{};
    p.errors["R"] = 0.0;
    p.validated = d1 > 0.0;
    return p;
}

PolyApproximant make_f2(double d1, const std::vector<double>& perturbation, double w_half) {
    if (!(d1 > 0.0)) throw std::invalid_argument("d1 must be positive");
    PolyApproximant p;
    p.scale = DomainScale{};
    for (double c : perturbation) p.coeffs.emplace_back(c, 0.0);
    if (p.coeffs.empty()) p.coeffs.emplace_back(0.0, 0.0);
    p.degree = static_cast<int>(p.coeffs.size()) - 1;

    const ComplexBox range = horner_box(p, ComplexBox{{-w_half, w_half}, {0.0, 0.0}});
    const double sup = ulp_up(std::hypot(range.re.mag(), range.im.mag()));
    if (!(sup < d1)) {
        std::ostringstream msg;
        msg << "f2 perturbation exceeds budget on |w| <= " << w_half << ": sup " << sup
            << " >= d1 " << d1;
        throw std::runtime_error(msg.str());
    }
    p.errors["R"] = sup;
    p.validated = true;
    return p;
}

namespace {

struct FitPoint {
    Complex u;
    Complex g;
    double weight;
};

}  // namespace

PolyApproximant synthesize_f1(const PiecewiseTarget& target, const SampleSet& samples,
                              const std::vector<int>& degree_schedule,
                              const SynthesisOptions& opts, SynthesisLog* log) {
    if (degree_schedule.empty()) throw std::invalid_argument("empty degree schedule");
    if (!std::is_sorted(degree_schedule.begin(), degree_schedule.end()))
        throw std::invalid_argument("degree schedule must be increasing");

    // Domain scale: bbox of fit points -> u in [-1, 1] horizontally.
    double lo = 0.0, hi = 0.0;
    bool first = true;
    for (const auto& rs : samples.regions)
        for (Complex z : rs.fit) {
            lo = first ? z.real() : std::min(lo, z.real());
            hi = first ? z.real() : std::max(hi, z.real());
            first = false;
        }
    DomainScale scale;
    scale.center = Complex{(lo + hi) / 2.0, 0.0};
    scale.s = 2.0 / (hi - lo);

    std::vector<FitPoint> pts;
    for (const auto& rs : samples.regions) {
        const TargetEntry* e = target.find(rs.region);
        if (!e) throw std::runtime_error("no target entry for region " + rs.region);
        for (Complex z : rs.fit)
            pts.push_back({(z - scale.center) * scale.s, e->target, 1.0 / e->tolerance});
    }
    if (opts.guard_tolerance > 0.0) {
        constexpr double kTwoPi = 6.283185307179586;
        for (int j = 0; j < opts.guard_points; ++j) {
            const double a = kTwoPi * j / opts.guard_points;
            pts.push_back({opts.guard_radius * Complex{std::cos(a), std::sin(a)},
                           Complex{0.0, 0.0}, 1.0 / opts.guard_tolerance});
        }
    }

    ArnoldiFit fit(pts.size());
    for (size_t i = 0; i < pts.size(); ++i) fit.set_point(i, pts[i].u, pts[i].g, pts[i].weight);
    fit.init();

    const int nmax = degree_schedule.back();
    PolyApproximant best;
    double best_ratio = std::numeric_limits<double>::infinity();
    size_t next_cp = 0;

    for (int n = 1; n <= nmax; ++n) {
        fit.extend();
        if (next_cp < degree_schedule.size() && n == degree_schedule[next_cp]) {
            ++next_cp;
            PolyApproximant cand;
            cand.degree = n;
            cand.scale = scale;
            cand.coeffs = fit.monomial_coeffs();
            // Validate on the held-out grids with the double-rounded
            // coefficients: what is stored is what is certified.
            double worst_ratio = 0.0;
            std::map<std::string, double> errs;
            for (const auto& rs : samples.regions) {
                const TargetEntry* e = target.find(rs.region);
                double sup = 0.0;
                for (Complex z : rs.validation)
                    sup = std::max(sup, std::abs(eval(cand, z) - e->target));
                errs[rs.region] = sup;
                worst_ratio = std::max(worst_ratio, sup / (opts.margin * e->tolerance));
            }
            cand.errors = errs;
            if (log) {
                log->weighted_residual[n] = fit.residual_norm();
                log->degree = n;
            }
            if (worst_ratio < best_ratio) {
                best_ratio = worst_ratio;
                best = cand;
            }
            if (worst_ratio < 1.0) {
                cand.validated = true;
                if (log) log->best_errors = errs;
                return cand;
            }
        }
    }
    if (log) log->best_errors = best.errors;
    std::ostringstream msg;
    msg << "degree budget exceeded: best worst-case error ratio " << best_ratio
        << " at degree " << best.degree;
    throw DegreeBudgetExceeded(msg.str(), best);
}

}  // namespace wander
