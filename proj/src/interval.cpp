#include "wander/interval.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace wander {

namespace {
constexpr double kTwoPi = 6.283185307179586476925286766559;
}

double ulp_down(double x, int steps) {
    for (int i = 0; i < steps; ++i)
        x = std::nextafter(x, -std::numeric_limits<double>::infinity());
    return x;
}

double ulp_up(double x, int steps) {
    for (int i = 0; i < steps; ++i)
        x = std::nextafter(x, std::numeric_limits<double>::infinity());
    return x;
}

double RealInterval::mag() const {
    return std::max(std::abs(lo), std::abs(hi));
}

RealInterval iv_add(const RealInterval& a, const RealInterval& b) {
    return {ulp_down(a.lo + b.lo), ulp_up(a.hi + b.hi)};
}

RealInterval iv_sub(const RealInterval& a, const RealInterval& b) {
    return {ulp_down(a.lo - b.hi), ulp_up(a.hi - b.lo)};
}

RealInterval iv_mul(const RealInterval& a, const RealInterval& b) {
    const double p1 = a.lo * b.lo, p2 = a.lo * b.hi, p3 = a.hi * b.lo, p4 = a.hi * b.hi;
    return {ulp_down(std::min({p1, p2, p3, p4})), ulp_up(std::max({p1, p2, p3, p4}))};
}

RealInterval iv_scale(const RealInterval& a, double s) {
    const double p1 = a.lo * s, p2 = a.hi * s;
    return {ulp_down(std::min(p1, p2)), ulp_up(std::max(p1, p2))};
}

RealInterval iv_neg(const RealInterval& a) {
    return {-a.hi, -a.lo};
}

RealInterval iv_hull(const RealInterval& a, const RealInterval& b) {
    return {std::min(a.lo, b.lo), std::max(a.hi, b.hi)};
}

RealInterval iv_meet(const RealInterval& a, const RealInterval& b) {
    RealInterval r{std::max(a.lo, b.lo), std::min(a.hi, b.hi)};
    if (r.lo > r.hi) {
        // Two sound enclosures always intersect; an empty meet can only be
        // rounding noise at the shared boundary.  Collapse to that point.
        const double m = 0.5 * (r.lo + r.hi);
        r = {m, m};
    }
    return r;
}

RealInterval iv_exp(const RealInterval& a) {
    const double lo = ulp_down(std::exp(a.lo));
    const double hi = ulp_up(std::exp(a.hi));
    if (!std::isfinite(hi))
        throw EnclosureOverflow("exp overflow: re.hi too large");
    return {std::max(lo, 0.0), hi};
}

namespace {

// True if some x with x = period*k (k integer, offset applied) may lie in
// [lo, hi].  Widened by one period step of slack on the comparison so that
// borderline cases count as "inside" (which only widens cos/sin ranges).
bool grid_point_in(double lo, double hi, double offset) {
    const double a = (lo - offset) / kTwoPi;
    const double b = (hi - offset) / kTwoPi;
    return std::floor(b + 1e-12) >= std::ceil(a - 1e-12);
}

}  // namespace

RealInterval iv_cos(const RealInterval& a) {
    if (!(a.width() < kTwoPi)) return {-1.0, 1.0};
    double hi = grid_point_in(a.lo, a.hi, 0.0)
                    ? 1.0
                    : std::min(1.0, ulp_up(std::max(std::cos(a.lo), std::cos(a.hi))));
    double lo = grid_point_in(a.lo, a.hi, kTwoPi / 2.0)
                    ? -1.0
                    : std::max(-1.0, ulp_down(std::min(std::cos(a.lo), std::cos(a.hi))));
    return {lo, hi};
}

RealInterval iv_sin(const RealInterval& a) {
    // sin(x) = cos(x - pi/2)
    return iv_cos({a.lo - kTwoPi / 4.0, a.hi - kTwoPi / 4.0});
}

ComplexBox box_add(const ComplexBox& a, const ComplexBox& b) {
    return {iv_add(a.re, b.re), iv_add(a.im, b.im)};
}

ComplexBox box_sub(const ComplexBox& a, const ComplexBox& b) {
    return {iv_sub(a.re, b.re), iv_sub(a.im, b.im)};
}

ComplexBox box_mul(const ComplexBox& a, const ComplexBox& b) {
    return {iv_sub(iv_mul(a.re, b.re), iv_mul(a.im, b.im)),
            iv_add(iv_mul(a.re, b.im), iv_mul(a.im, b.re))};
}

ComplexBox box_scale(const ComplexBox& a, double s) {
    return {iv_scale(a.re, s), iv_scale(a.im, s)};
}

ComplexBox box_hull(const ComplexBox& a, const ComplexBox& b) {
    return {iv_hull(a.re, b.re), iv_hull(a.im, b.im)};
}

ComplexBox box_meet(const ComplexBox& a, const ComplexBox& b) {
    return {iv_meet(a.re, b.re), iv_meet(a.im, b.im)};
}

ComplexBox exp_box(const ComplexBox& b) {
    const RealInterval modulus = iv_exp(b.re);
    if (!(b.im.width() < kTwoPi)) {
        const RealInterval full{-modulus.hi, modulus.hi};
        return {full, full};
    }
    return {iv_mul(modulus, iv_cos(b.im)), iv_mul(modulus, iv_sin(b.im))};
}

std::vector<ProductBox> subdivide(const ProductBox& b) {
    const double wr = b.z.re.width();
    const double wi = b.z.im.width();
    const double ww = b.w.width();
    const double widest = std::max({wr, wi, ww});
    if (widest <= 0.0) return {b};

    ProductBox left = b, right = b;
    if (wr == widest) {
        const double m = b.z.re.mid();
        left.z.re = {b.z.re.lo, m};
        right.z.re = {m, b.z.re.hi};
    } else if (wi == widest) {
        const double m = b.z.im.mid();
        left.z.im = {b.z.im.lo, m};
        right.z.im = {m, b.z.im.hi};
    } else {
        const double m = b.w.mid();
        left.w = {b.w.lo, m};
        right.w = {m, b.w.hi};
    }
    return {left, right};
}

}  // namespace wander
