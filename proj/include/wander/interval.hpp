#pragma once

// Enclosure arithmetic for real intervals and axis-aligned complex boxes.
//
// Soundness convention: every endpoint produced by an arithmetic operation
// is inflated outward by 4 units-in-the-last-place instead of switching the
// FPU rounding mode.  All higher-level certificates in this project reduce
// to these primitives, so the containment guarantee here is load-bearing:
// for any op and any point x in the input set, op(x) lies in the output set.

#include <complex>
#include <vector>

namespace wander {

using Complex = std::complex<double>;

double ulp_down(double x, int steps = 4);
double ulp_up(double x, int steps = 4);

struct RealInterval {
    double lo = 0.0;
    double hi = 0.0;

    RealInterval() = default;
    RealInterval(double point) : lo(point), hi(point) {}
    RealInterval(double lo_, double hi_) : lo(lo_), hi(hi_) {}

    double width() const { return hi - lo; }
    double mid() const { return 0.5 * (lo + hi); }
    double mag() const;  // max |x| over the interval
    bool contains(double x) const { return lo <= x && x <= hi; }
    bool contains(const RealInterval& o) const { return lo <= o.lo && o.hi <= hi; }
};

RealInterval iv_add(const RealInterval& a, const RealInterval& b);
RealInterval iv_sub(const RealInterval& a, const RealInterval& b);
RealInterval iv_mul(const RealInterval& a, const RealInterval& b);
RealInterval iv_scale(const RealInterval& a, double s);
RealInterval iv_neg(const RealInterval& a);
RealInterval iv_hull(const RealInterval& a, const RealInterval& b);
// Intersection of two enclosures of the same set (both must be sound).
RealInterval iv_meet(const RealInterval& a, const RealInterval& b);
RealInterval iv_exp(const RealInterval& a);
// Range of cos/sin over an angle interval, conservatively widened.
RealInterval iv_cos(const RealInterval& a);
RealInterval iv_sin(const RealInterval& a);

struct ComplexBox {
    RealInterval re;
    RealInterval im;

    ComplexBox() = default;
    ComplexBox(const RealInterval& re_, const RealInterval& im_) : re(re_), im(im_) {}
    ComplexBox(Complex point) : re(point.real()), im(point.imag()) {}

    Complex mid() const { return {re.mid(), im.mid()}; }
    bool contains(Complex z) const { return re.contains(z.real()) && im.contains(z.imag()); }
    bool contains(const ComplexBox& o) const { return re.contains(o.re) && im.contains(o.im); }
};

ComplexBox box_add(const ComplexBox& a, const ComplexBox& b);
ComplexBox box_sub(const ComplexBox& a, const ComplexBox& b);
ComplexBox box_mul(const ComplexBox& a, const ComplexBox& b);
ComplexBox box_scale(const ComplexBox& a, double s);
ComplexBox box_hull(const ComplexBox& a, const ComplexBox& b);
ComplexBox box_meet(const ComplexBox& a, const ComplexBox& b);

// Encloses {e^z : z in b} as the axis-aligned hull of the annular sector
// with modulus range [e^{re.lo}, e^{re.hi}] and argument range [im.lo, im.hi].
// An argument range of width >= 2*pi yields the hull of the full annulus.
// Throws EnclosureOverflow if e^{re.hi} is not finite.
ComplexBox exp_box(const ComplexBox& b);

struct EnclosureOverflow : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ProductBox {
    ComplexBox z;
    RealInterval w;

    bool contains(Complex zp, double wp) const { return z.contains(zp) && w.contains(wp); }
};

// Bisects the widest of the three coordinate intervals (z.re, z.im, w).
// Children cover the parent exactly and overlap only on the split plane.
// A degenerate (point) box is returned unchanged as a single element.
std::vector<ProductBox> subdivide(const ProductBox& b);

}  // namespace wander
