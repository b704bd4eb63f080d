// Scalar reference kernels. These define the exact operation order
// (explicit fma, four-lane interleaved reductions) that the vector backends
// reproduce; compiled with -ffp-contract=off so the compiler cannot fuse or
// reorder anything behind our back.

#include <cmath>

#include "apsyn/kernels.hpp"
#include "sincos_core.hpp"

namespace apsyn::kern {
namespace {

using namespace detail;

inline void sincos1(double x, double* sin_out, double* cos_out) {
  const double q = std::nearbyint(x * kTwoOverPi);
  const long long n = static_cast<long long>(q);
  double r = std::fma(q, -kPio2Hi, x);
  r = std::fma(q, -kPio2Lo, r);
  const double s = r * r;

  double p = kS6;
  p = std::fma(p, s, kS5);
  p = std::fma(p, s, kS4);
  p = std::fma(p, s, kS3);
  p = std::fma(p, s, kS2);
  p = std::fma(p, s, kS1);
  const double sinr = std::fma(r * s, p, r);

  double t = kC6;
  t = std::fma(t, s, kC5);
  t = std::fma(t, s, kC4);
  t = std::fma(t, s, kC3);
  t = std::fma(t, s, kC2);
  t = std::fma(t, s, kC1);
  const double cosr = std::fma(s * s, t, std::fma(s, -0.5, 1.0));

  const bool swap = (n & 1) != 0;
  double so = swap ? cosr : sinr;
  double co = swap ? sinr : cosr;
  if ((n >> 1) & 1) so = -so;
  if (((n + 1) >> 1) & 1) co = -co;
  *sin_out = so;
  *cos_out = co;
}

void phase_table(const double* x, const double* y, std::size_t n, double ku,
                 double kv, double* c, double* s) {
  for (std::size_t i = 0; i < n; ++i) {
    const double arg = std::fma(kv, y[i], ku * x[i]);
    sincos1(arg, &s[i], &c[i]);
  }
}

void phasor_sum(const double* x, const double* y, const double* w,
                std::size_t n, double ku, double kv, double* re, double* im) {
  double ar[4] = {0.0, 0.0, 0.0, 0.0};
  double ai[4] = {0.0, 0.0, 0.0, 0.0};
  // Tail elements are treated as x = y = w = 0, mirroring the masked loads
  // of the vector backend (adds an exact +0 to the touched lanes).
  const std::size_t n4 = (n + 3) & ~std::size_t{3};
  for (std::size_t i = 0; i < n4; ++i) {
    const bool live = i < n;
    const double xi = live ? x[i] : 0.0;
    const double yi = live ? y[i] : 0.0;
    const double wi = live ? w[i] : 0.0;
    const double arg = std::fma(kv, yi, ku * xi);
    double sv, cv;
    sincos1(arg, &sv, &cv);
    ar[i & 3] = std::fma(wi, cv, ar[i & 3]);
    ai[i & 3] = std::fma(wi, sv, ai[i & 3]);
  }
  *re = (ar[0] + ar[2]) + (ar[1] + ar[3]);
  *im = (ai[0] + ai[2]) + (ai[1] + ai[3]);
}

void scale_pair_rows(const double* rc, const double* rs, std::size_t n,
                     double l11, double l21, double l22, double* out1,
                     double* out2) {
  for (std::size_t j = 0; j < n; ++j) {
    out1[j] = std::fma(l21, rs[j], l11 * rc[j]);
    out2[j] = l22 * rs[j];
  }
}

bool soc3_nt_update(const double* s0, const double* s1, const double* s2,
                    const double* z0, const double* z1, const double* z2,
                    std::size_t k, double* eta2, double* a, double* q1,
                    double* q2, double* l0, double* l1, double* l2) {
  bool ok = true;
  for (std::size_t i = 0; i < k; ++i) {
    double m = s2[i] * s2[i];
    m = std::fma(s1[i], s1[i], m);
    const double sres = std::fma(s0[i], s0[i], -m);
    m = z2[i] * z2[i];
    m = std::fma(z1[i], z1[i], m);
    const double zres = std::fma(z0[i], z0[i], -m);
    if (!(sres > 0.0) || !(zres > 0.0)) {
      ok = false;
      continue;
    }
    const double snorm = std::sqrt(sres);
    const double znorm = std::sqrt(zres);
    const double e2 = snorm / znorm;
    const double is = 1.0 / snorm;
    const double iz = 1.0 / znorm;
    const double sb0 = s0[i] * is, sb1 = s1[i] * is, sb2 = s2[i] * is;
    const double zb0 = z0[i] * iz, zb1 = z1[i] * iz, zb2 = z2[i] * iz;
    double d = sb2 * zb2;
    d = std::fma(sb1, zb1, d);
    d = std::fma(sb0, zb0, d);
    const double gamma = std::sqrt(std::fma(0.5, d, 0.5));
    const double ginv = 0.5 / gamma;
    const double av = (sb0 + zb0) * ginv;
    const double q1v = (sb1 - zb1) * ginv;
    const double q2v = (sb2 - zb2) * ginv;
    const double eta = std::sqrt(e2);
    const double zeta = std::fma(q1v, z1[i], q2v * z2[i]);
    const double factor = z0[i] + zeta / (1.0 + av);
    eta2[i] = e2;
    a[i] = av;
    q1[i] = q1v;
    q2[i] = q2v;
    l0[i] = eta * std::fma(av, z0[i], zeta);
    l1[i] = eta * std::fma(factor, q1v, z1[i]);
    l2[i] = eta * std::fma(factor, q2v, z2[i]);
  }
  return ok;
}

void soc3_w2_apply(const double* eta2, const double* a, const double* q1,
                   const double* q2, const double* v0, const double* v1,
                   const double* v2, std::size_t k, double* t0, double* t1,
                   double* t2) {
  for (std::size_t i = 0; i < k; ++i) {
    double d = q2[i] * v2[i];
    d = std::fma(q1[i], v1[i], d);
    d = std::fma(a[i], v0[i], d);
    const double e = d + d;
    t0[i] = eta2[i] * std::fma(e, a[i], -v0[i]);
    t1[i] = eta2[i] * std::fma(e, q1[i], v1[i]);
    t2[i] = eta2[i] * std::fma(e, q2[i], v2[i]);
  }
}

void soc3_winv2_apply(const double* eta2, const double* a, const double* q1,
                      const double* q2, const double* v0, const double* v1,
                      const double* v2, std::size_t k, double* t0, double* t1,
                      double* t2) {
  for (std::size_t i = 0; i < k; ++i) {
    double m = q2[i] * v2[i];
    m = std::fma(q1[i], v1[i], m);
    const double d = std::fma(a[i], v0[i], -m);
    const double e = d + d;
    const double ie2 = 1.0 / eta2[i];
    t0[i] = std::fma(e, a[i], -v0[i]) * ie2;
    t1[i] = std::fma(e, -q1[i], v1[i]) * ie2;
    t2[i] = std::fma(e, -q2[i], v2[i]) * ie2;
  }
}

void soc3_w_apply(const double* eta2, const double* a, const double* q1,
                  const double* q2, const double* v0, const double* v1,
                  const double* v2, std::size_t k, double* t0, double* t1,
                  double* t2) {
  for (std::size_t i = 0; i < k; ++i) {
    const double eta = std::sqrt(eta2[i]);
    const double zeta = std::fma(q1[i], v1[i], q2[i] * v2[i]);
    const double factor = v0[i] + zeta / (1.0 + a[i]);
    t0[i] = eta * std::fma(a[i], v0[i], zeta);
    t1[i] = eta * std::fma(factor, q1[i], v1[i]);
    t2[i] = eta * std::fma(factor, q2[i], v2[i]);
  }
}

void soc3_prod(const double* u0, const double* u1, const double* u2,
               const double* v0, const double* v1, const double* v2,
               std::size_t k, double* t0, double* t1, double* t2) {
  for (std::size_t i = 0; i < k; ++i) {
    double m = u2[i] * v2[i];
    m = std::fma(u1[i], v1[i], m);
    t0[i] = std::fma(u0[i], v0[i], m);
    t1[i] = std::fma(u0[i], v1[i], v0[i] * u1[i]);
    t2[i] = std::fma(u0[i], v2[i], v0[i] * u2[i]);
  }
}

void soc3_div(const double* u0, const double* u1, const double* u2,
              const double* v0, const double* v1, const double* v2,
              std::size_t k, double* t0, double* t1, double* t2) {
  for (std::size_t i = 0; i < k; ++i) {
    double m = u2[i] * u2[i];
    m = std::fma(u1[i], u1[i], m);
    const double rho = std::fma(u0[i], u0[i], -m);
    const double zeta = std::fma(u1[i], v1[i], u2[i] * v2[i]);
    const double irho = 1.0 / rho;
    const double iu0 = 1.0 / u0[i];
    const double factor = std::fma(zeta, iu0, -v0[i]) * irho;
    t0[i] = std::fma(u0[i], v0[i], -zeta) * irho;
    t1[i] = std::fma(factor, u1[i], v1[i] * iu0);
    t2[i] = std::fma(factor, u2[i], v2[i] * iu0);
  }
}

inline double boundary_rate(double inv, double b0, double b1, double b2,
                            double v0, double v1, double v2) {
  double m = b1 * v1;
  m = std::fma(b2, v2, m);
  const double cdot = std::fma(b0, v0, -m);
  const double r0 = inv * cdot;
  const double fac = (cdot + v0) / (b0 + 1.0);
  const double rt1 = inv * std::fma(-fac, b1, v1);
  const double rt2 = inv * std::fma(-fac, b2, v2);
  return std::sqrt(std::fma(rt2, rt2, rt1 * rt1)) - r0;
}

double soc3_step_bound(const double* l0, const double* l1, const double* l2,
                       const double* ds0, const double* ds1, const double* ds2,
                       const double* dz0, const double* dz1, const double* dz2,
                       std::size_t k) {
  double bound = 0.0;
  for (std::size_t i = 0; i < k; ++i) {
    double m = l2[i] * l2[i];
    m = std::fma(l1[i], l1[i], m);
    const double lk2 = std::fma(l0[i], l0[i], -m);
    if (!(lk2 > 0.0)) continue;
    const double lknorm = std::sqrt(lk2);
    const double inv = 1.0 / lknorm;
    const double b0 = l0[i] * inv;
    const double b1 = l1[i] * inv;
    const double b2 = l2[i] * inv;
    const double rs = boundary_rate(inv, b0, b1, b2, ds0[i], ds1[i], ds2[i]);
    const double rz = boundary_rate(inv, b0, b1, b2, dz0[i], dz1[i], dz2[i]);
    double meas = rs > rz ? rs : rz;
    if (meas < 0.0) meas = 0.0;
    if (meas > bound) bound = meas;
  }
  return bound;
}

}  // namespace

const Kernels& scalar_kernels() {
  static const Kernels k = {
      "scalar",        phase_table,   phasor_sum, scale_pair_rows,
      soc3_nt_update,  soc3_w2_apply, soc3_winv2_apply,
      soc3_w_apply,    soc3_prod,     soc3_div,   soc3_step_bound,
  };
  return k;
}

}  // namespace apsyn::kern
