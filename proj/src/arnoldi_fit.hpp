#pragma once

// Orthonormalized weighted least-squares basis builder, in extended
// precision.
//
// The discrete measure mixes region samples (|u| <= 1) with a guard ring at
// |u| = rho > 1.  Successive basis functions grow like rho^k on the ring
// relative to the regions, so a double-precision Gram-Schmidt loses the
// region-resolving directions near degree ln(1e16)/ln(rho) and the fit
// silently stagnates.  Fifty working digits move that wall past every degree
// in the schedule; the returned coefficients are rounded to double.

#include <boost/multiprecision/cpp_bin_float.hpp>

#include <complex>
#include <cstddef>
#include <vector>

namespace wander {

namespace detail {

using HReal =
    boost::multiprecision::number<boost::multiprecision::cpp_bin_float<50>,
                                  boost::multiprecision::et_off>;

struct HComplex {
    HReal re, im;
};

inline void cfma(HComplex& acc, const HComplex& a, const HComplex& b) {
    // acc += a * b
    acc.re += a.re * b.re - a.im * b.im;
    acc.im += a.re * b.im + a.im * b.re;
}

inline void csub_mul(HComplex& x, const HComplex& h, const HComplex& q) {
    // x -= h * q
    x.re -= h.re * q.re - h.im * q.im;
    x.im -= h.re * q.im + h.im * q.re;
}

}  // namespace detail

class ArnoldiFit {
  public:
    explicit ArnoldiFit(std::size_t m) : m_(m), u_(m), g_(m), w2_(m) {}

    void set_point(std::size_t i, std::complex<double> u, std::complex<double> g, double w) {
        u_[i] = {detail::HReal(u.real()), detail::HReal(u.imag())};
        g_[i] = {detail::HReal(g.real()), detail::HReal(g.imag())};
        w2_[i] = detail::HReal(w) * detail::HReal(w);
    }

    void init() {
        using detail::HReal;
        using detail::HComplex;
        std::vector<HComplex> phi(m_, HComplex{HReal(1), HReal(0)});
        HReal nu = norm(phi);
        scale_inv(phi, nu);
        phi_.push_back(std::move(phi));
        vec_.push_back({HComplex{HReal(1) / nu, HReal(0)}});
        d_.push_back(project(phi_[0]));
        g_norm2_ = HReal(0);
        for (std::size_t i = 0; i < m_; ++i)
            g_norm2_ += w2_[i] * (g_[i].re * g_[i].re + g_[i].im * g_[i].im);
        d_norm2_ = d_[0].re * d_[0].re + d_[0].im * d_[0].im;
    }

    int degree() const { return static_cast<int>(phi_.size()) - 1; }

    void extend() {
        using detail::HReal;
        using detail::HComplex;
        const std::size_t k = phi_.size() - 1;
        std::vector<HComplex> w(m_);
        for (std::size_t i = 0; i < m_; ++i) {
            w[i] = HComplex{HReal(0), HReal(0)};
            detail::cfma(w[i], u_[i], phi_[k][i]);
        }
        std::vector<HComplex> wv(k + 2, HComplex{HReal(0), HReal(0)});
        for (std::size_t j = 0; j <= k; ++j) wv[j + 1] = vec_[k][j];

        for (std::size_t i = 0; i <= k; ++i) {
            const HComplex h = inner(phi_[i], w);
            for (std::size_t p = 0; p < m_; ++p) detail::csub_mul(w[p], h, phi_[i][p]);
            for (std::size_t p = 0; p < vec_[i].size(); ++p) detail::csub_mul(wv[p], h, vec_[i][p]);
        }
        HReal hn = norm(w);
        scale_inv(w, hn);
        for (auto& x : wv) {
            x.re /= hn;
            x.im /= hn;
        }
        phi_.push_back(std::move(w));
        vec_.push_back(std::move(wv));
        d_.push_back(project(phi_.back()));
        d_norm2_ += d_.back().re * d_.back().re + d_.back().im * d_.back().im;
    }

    // Monomial coefficients of the current projection, rounded to double.
    std::vector<std::complex<double>> monomial_coeffs() const {
        using detail::HReal;
        using detail::HComplex;
        const std::size_t n = phi_.size();
        std::vector<HComplex> c(n, HComplex{HReal(0), HReal(0)});
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t p = 0; p < vec_[j].size(); ++p) detail::cfma(c[p], d_[j], vec_[j][p]);
        std::vector<std::complex<double>> out(n);
        for (std::size_t p = 0; p < n; ++p)
            out[p] = {static_cast<double>(c[p].re), static_cast<double>(c[p].im)};
        return out;
    }

    double residual_norm() const {
        detail::HReal r = g_norm2_ - d_norm2_;
        if (r < 0) r = detail::HReal(0);
        return std::sqrt(static_cast<double>(r));
    }

  private:
    using HVec = std::vector<detail::HComplex>;

    detail::HComplex inner(const HVec& a, const HVec& b) const {
        using detail::HReal;
        detail::HComplex acc{HReal(0), HReal(0)};
        for (std::size_t i = 0; i < m_; ++i) {
            // conj(a_i) * b_i, weighted
            const detail::HComplex& x = a[i];
            const detail::HComplex& y = b[i];
            acc.re += w2_[i] * (x.re * y.re + x.im * y.im);
            acc.im += w2_[i] * (x.re * y.im - x.im * y.re);
        }
        return acc;
    }

    detail::HComplex project(const HVec& phi) const { return inner(phi, g_); }

    detail::HReal norm(const HVec& a) const {
        using detail::HReal;
        HReal acc(0);
        for (std::size_t i = 0; i < m_; ++i)
            acc += w2_[i] * (a[i].re * a[i].re + a[i].im * a[i].im);
        return sqrt(acc);
    }

    static void scale_inv(HVec& a, const detail::HReal& s) {
        for (auto& x : a) {
            x.re /= s;
            x.im /= s;
        }
    }

    std::size_t m_;
    HVec u_, g_;
    std::vector<detail::HReal> w2_;
    std::vector<HVec> phi_;
    std::vector<HVec> vec_;
    HVec d_;
    detail::HReal g_norm2_{0}, d_norm2_{0};
};

}  // namespace wander
