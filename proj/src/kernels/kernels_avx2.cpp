// AVX2+FMA kernel variants. Each kernel executes the same operation sequence
// as the scalar reference (see kernels_scalar.cpp), four lanes at a time, so
// results are bit-for-bit identical. Tails use masked loads/stores; masked-in
// dead lanes are fed benign values so no spurious NaN reaches a live lane.

#if defined(__x86_64__) || defined(_M_X64)

#include <immintrin.h>

#include <cstddef>

#include "apsyn/kernels.hpp"
#include "sincos_core.hpp"

namespace apsyn::kern {
namespace {

using namespace detail;

inline __m256i tail_mask(std::size_t rem) {
  alignas(32) static const long long bits[8] = {-1, -1, -1, -1, 0, 0, 0, 0};
  return _mm256_loadu_si256(
      reinterpret_cast<const __m256i*>(bits + (4 - rem)));
}

inline __m256d blend_dead(__m256d v, __m256i live, double fill) {
  return _mm256_blendv_pd(_mm256_set1_pd(fill), v,
                          _mm256_castsi256_pd(live));
}

inline __m256d fma4(__m256d a, __m256d b, __m256d c) {
  return _mm256_fmadd_pd(a, b, c);
}

// exact sign flip, matching scalar negation on signed zeros
inline __m256d neg4(__m256d x) {
  return _mm256_xor_pd(x, _mm256_set1_pd(-0.0));
}

inline __m256i lane_bit_mask(__m128i n32, int shift, int add) {
  __m128i t = _mm_add_epi32(n32, _mm_set1_epi32(add));
  t = _mm_srai_epi32(t, shift);
  t = _mm_and_si128(t, _mm_set1_epi32(1));
  t = _mm_cmpeq_epi32(t, _mm_set1_epi32(1));
  return _mm256_cvtepi32_epi64(t);
}

inline void sincos4(__m256d x, __m256d* sin_out, __m256d* cos_out) {
  const __m256d q = _mm256_round_pd(
      _mm256_mul_pd(x, _mm256_set1_pd(kTwoOverPi)),
      _MM_FROUND_TO_NEAREST_INT | _MM_FROUND_NO_EXC);
  const __m128i n = _mm256_cvtpd_epi32(q);

  __m256d r = fma4(q, _mm256_set1_pd(-kPio2Hi), x);
  r = fma4(q, _mm256_set1_pd(-kPio2Lo), r);
  const __m256d s = _mm256_mul_pd(r, r);

  __m256d p = _mm256_set1_pd(kS6);
  p = fma4(p, s, _mm256_set1_pd(kS5));
  p = fma4(p, s, _mm256_set1_pd(kS4));
  p = fma4(p, s, _mm256_set1_pd(kS3));
  p = fma4(p, s, _mm256_set1_pd(kS2));
  p = fma4(p, s, _mm256_set1_pd(kS1));
  const __m256d sinr = fma4(_mm256_mul_pd(r, s), p, r);

  __m256d t = _mm256_set1_pd(kC6);
  t = fma4(t, s, _mm256_set1_pd(kC5));
  t = fma4(t, s, _mm256_set1_pd(kC4));
  t = fma4(t, s, _mm256_set1_pd(kC3));
  t = fma4(t, s, _mm256_set1_pd(kC2));
  t = fma4(t, s, _mm256_set1_pd(kC1));
  const __m256d cosr =
      fma4(_mm256_mul_pd(s, s), t,
           fma4(s, _mm256_set1_pd(-0.5), _mm256_set1_pd(1.0)));

  const __m256d swap =
      _mm256_castsi256_pd(lane_bit_mask(n, 0, 0));
  const __m256d negsin =
      _mm256_castsi256_pd(lane_bit_mask(n, 1, 0));
  const __m256d negcos =
      _mm256_castsi256_pd(lane_bit_mask(n, 1, 1));

  const __m256d signbit = _mm256_set1_pd(-0.0);
  __m256d so = _mm256_blendv_pd(sinr, cosr, swap);
  __m256d co = _mm256_blendv_pd(cosr, sinr, swap);
  so = _mm256_xor_pd(so, _mm256_and_pd(negsin, signbit));
  co = _mm256_xor_pd(co, _mm256_and_pd(negcos, signbit));
  *sin_out = so;
  *cos_out = co;
}

void phase_table(const double* x, const double* y, std::size_t n, double ku,
                 double kv, double* c, double* s) {
  const __m256d kuv = _mm256_set1_pd(ku);
  const __m256d kvv = _mm256_set1_pd(kv);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d xv = _mm256_loadu_pd(x + i);
    const __m256d yv = _mm256_loadu_pd(y + i);
    const __m256d arg = fma4(kvv, yv, _mm256_mul_pd(kuv, xv));
    __m256d sv, cv;
    sincos4(arg, &sv, &cv);
    _mm256_storeu_pd(s + i, sv);
    _mm256_storeu_pd(c + i, cv);
  }
  if (i < n) {
    const __m256i m = tail_mask(n - i);
    const __m256d xv = _mm256_maskload_pd(x + i, m);
    const __m256d yv = _mm256_maskload_pd(y + i, m);
    const __m256d arg = fma4(kvv, yv, _mm256_mul_pd(kuv, xv));
    __m256d sv, cv;
    sincos4(arg, &sv, &cv);
    _mm256_maskstore_pd(s + i, m, sv);
    _mm256_maskstore_pd(c + i, m, cv);
  }
}

void phasor_sum(const double* x, const double* y, const double* w,
                std::size_t n, double ku, double kv, double* re, double* im) {
  const __m256d kuv = _mm256_set1_pd(ku);
  const __m256d kvv = _mm256_set1_pd(kv);
  __m256d are = _mm256_setzero_pd();
  __m256d aim = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d xv = _mm256_loadu_pd(x + i);
    const __m256d yv = _mm256_loadu_pd(y + i);
    const __m256d wv = _mm256_loadu_pd(w + i);
    const __m256d arg = fma4(kvv, yv, _mm256_mul_pd(kuv, xv));
    __m256d sv, cv;
    sincos4(arg, &sv, &cv);
    are = fma4(wv, cv, are);
    aim = fma4(wv, sv, aim);
  }
  if (i < n) {
    const __m256i m = tail_mask(n - i);
    const __m256d xv = _mm256_maskload_pd(x + i, m);
    const __m256d yv = _mm256_maskload_pd(y + i, m);
    const __m256d wv = _mm256_maskload_pd(w + i, m);
    const __m256d arg = fma4(kvv, yv, _mm256_mul_pd(kuv, xv));
    __m256d sv, cv;
    sincos4(arg, &sv, &cv);
    are = fma4(wv, cv, are);
    aim = fma4(wv, sv, aim);
  }
  const __m128d re2 = _mm_add_pd(_mm256_castpd256_pd128(are),
                                 _mm256_extractf128_pd(are, 1));
  const __m128d im2 = _mm_add_pd(_mm256_castpd256_pd128(aim),
                                 _mm256_extractf128_pd(aim, 1));
  *re = _mm_cvtsd_f64(re2) + _mm_cvtsd_f64(_mm_unpackhi_pd(re2, re2));
  *im = _mm_cvtsd_f64(im2) + _mm_cvtsd_f64(_mm_unpackhi_pd(im2, im2));
}

void scale_pair_rows(const double* rc, const double* rs, std::size_t n,
                     double l11, double l21, double l22, double* out1,
                     double* out2) {
  const __m256d a11 = _mm256_set1_pd(l11);
  const __m256d a21 = _mm256_set1_pd(l21);
  const __m256d a22 = _mm256_set1_pd(l22);
  std::size_t j = 0;
  for (; j + 4 <= n; j += 4) {
    const __m256d c = _mm256_loadu_pd(rc + j);
    const __m256d s = _mm256_loadu_pd(rs + j);
    _mm256_storeu_pd(out1 + j, fma4(a21, s, _mm256_mul_pd(a11, c)));
    _mm256_storeu_pd(out2 + j, _mm256_mul_pd(a22, s));
  }
  if (j < n) {
    const __m256i m = tail_mask(n - j);
    const __m256d c = _mm256_maskload_pd(rc + j, m);
    const __m256d s = _mm256_maskload_pd(rs + j, m);
    _mm256_maskstore_pd(out1 + j, m, fma4(a21, s, _mm256_mul_pd(a11, c)));
    _mm256_maskstore_pd(out2 + j, m, _mm256_mul_pd(a22, s));
  }
}

struct SocLanes {
  __m256d s0, s1, s2, z0, z1, z2;
};

inline __m256d res3(__m256d v0, __m256d v1, __m256d v2) {
  __m256d m = _mm256_mul_pd(v2, v2);
  m = fma4(v1, v1, m);
  return fma4(v0, v0, neg4(m));
}

bool soc3_nt_update(const double* s0, const double* s1, const double* s2,
                    const double* z0, const double* z1, const double* z2,
                    std::size_t k, double* eta2, double* a, double* q1,
                    double* q2, double* l0, double* l1, double* l2) {
  const __m256d one = _mm256_set1_pd(1.0);
  const __m256d half = _mm256_set1_pd(0.5);
  bool ok = true;
  for (std::size_t i = 0; i < k; i += 4) {
    const std::size_t rem = k - i;
    const bool full = rem >= 4;
    const __m256i m = full ? _mm256_set1_epi64x(-1) : tail_mask(rem);
    __m256d vs0 = _mm256_maskload_pd(s0 + i, m);
    __m256d vs1 = _mm256_maskload_pd(s1 + i, m);
    __m256d vs2 = _mm256_maskload_pd(s2 + i, m);
    __m256d vz0 = _mm256_maskload_pd(z0 + i, m);
    __m256d vz1 = _mm256_maskload_pd(z1 + i, m);
    __m256d vz2 = _mm256_maskload_pd(z2 + i, m);
    if (!full) {
      vs0 = blend_dead(vs0, m, 1.0);
      vz0 = blend_dead(vz0, m, 1.0);
    }
    const __m256d sres = res3(vs0, vs1, vs2);
    const __m256d zres = res3(vz0, vz1, vz2);
    const __m256d valid =
        _mm256_and_pd(_mm256_cmp_pd(sres, _mm256_setzero_pd(), _CMP_GT_OQ),
                      _mm256_cmp_pd(zres, _mm256_setzero_pd(), _CMP_GT_OQ));
    if (_mm256_movemask_pd(valid) != 0xF) ok = false;

    const __m256d snorm = _mm256_sqrt_pd(sres);
    const __m256d znorm = _mm256_sqrt_pd(zres);
    const __m256d e2 = _mm256_div_pd(snorm, znorm);
    const __m256d is = _mm256_div_pd(one, snorm);
    const __m256d iz = _mm256_div_pd(one, znorm);
    const __m256d sb0 = _mm256_mul_pd(vs0, is);
    const __m256d sb1 = _mm256_mul_pd(vs1, is);
    const __m256d sb2 = _mm256_mul_pd(vs2, is);
    const __m256d zb0 = _mm256_mul_pd(vz0, iz);
    const __m256d zb1 = _mm256_mul_pd(vz1, iz);
    const __m256d zb2 = _mm256_mul_pd(vz2, iz);
    __m256d d = _mm256_mul_pd(sb2, zb2);
    d = fma4(sb1, zb1, d);
    d = fma4(sb0, zb0, d);
    const __m256d gamma = _mm256_sqrt_pd(fma4(half, d, half));
    const __m256d ginv = _mm256_div_pd(half, gamma);
    const __m256d av = _mm256_mul_pd(_mm256_add_pd(sb0, zb0), ginv);
    const __m256d q1v = _mm256_mul_pd(_mm256_sub_pd(sb1, zb1), ginv);
    const __m256d q2v = _mm256_mul_pd(_mm256_sub_pd(sb2, zb2), ginv);
    const __m256d eta = _mm256_sqrt_pd(e2);
    const __m256d zeta = fma4(q1v, vz1, _mm256_mul_pd(q2v, vz2));
    const __m256d factor =
        _mm256_add_pd(vz0, _mm256_div_pd(zeta, _mm256_add_pd(one, av)));
    _mm256_maskstore_pd(eta2 + i, m, e2);
    _mm256_maskstore_pd(a + i, m, av);
    _mm256_maskstore_pd(q1 + i, m, q1v);
    _mm256_maskstore_pd(q2 + i, m, q2v);
    _mm256_maskstore_pd(l0 + i, m, _mm256_mul_pd(eta, fma4(av, vz0, zeta)));
    _mm256_maskstore_pd(l1 + i, m, _mm256_mul_pd(eta, fma4(factor, q1v, vz1)));
    _mm256_maskstore_pd(l2 + i, m, _mm256_mul_pd(eta, fma4(factor, q2v, vz2)));
  }
  return ok;
}

void soc3_w2_apply(const double* eta2, const double* a, const double* q1,
                   const double* q2, const double* v0, const double* v1,
                   const double* v2, std::size_t k, double* t0, double* t1,
                   double* t2) {
  for (std::size_t i = 0; i < k; i += 4) {
    const std::size_t rem = k - i;
    const __m256i m = rem >= 4 ? _mm256_set1_epi64x(-1) : tail_mask(rem);
    const __m256d e2 = _mm256_maskload_pd(eta2 + i, m);
    const __m256d av = _mm256_maskload_pd(a + i, m);
    const __m256d q1v = _mm256_maskload_pd(q1 + i, m);
    const __m256d q2v = _mm256_maskload_pd(q2 + i, m);
    const __m256d w0 = _mm256_maskload_pd(v0 + i, m);
    const __m256d w1 = _mm256_maskload_pd(v1 + i, m);
    const __m256d w2 = _mm256_maskload_pd(v2 + i, m);
    __m256d d = _mm256_mul_pd(q2v, w2);
    d = fma4(q1v, w1, d);
    d = fma4(av, w0, d);
    const __m256d e = _mm256_add_pd(d, d);
    const __m256d neg0 = neg4(w0);
    _mm256_maskstore_pd(t0 + i, m, _mm256_mul_pd(e2, fma4(e, av, neg0)));
    _mm256_maskstore_pd(t1 + i, m, _mm256_mul_pd(e2, fma4(e, q1v, w1)));
    _mm256_maskstore_pd(t2 + i, m, _mm256_mul_pd(e2, fma4(e, q2v, w2)));
  }
}

void soc3_winv2_apply(const double* eta2, const double* a, const double* q1,
                      const double* q2, const double* v0, const double* v1,
                      const double* v2, std::size_t k, double* t0, double* t1,
                      double* t2) {
  const __m256d one = _mm256_set1_pd(1.0);
  for (std::size_t i = 0; i < k; i += 4) {
    const std::size_t rem = k - i;
    const bool full = rem >= 4;
    const __m256i m = full ? _mm256_set1_epi64x(-1) : tail_mask(rem);
    __m256d e2 = _mm256_maskload_pd(eta2 + i, m);
    if (!full) e2 = blend_dead(e2, m, 1.0);
    const __m256d av = _mm256_maskload_pd(a + i, m);
    const __m256d q1v = _mm256_maskload_pd(q1 + i, m);
    const __m256d q2v = _mm256_maskload_pd(q2 + i, m);
    const __m256d w0 = _mm256_maskload_pd(v0 + i, m);
    const __m256d w1 = _mm256_maskload_pd(v1 + i, m);
    const __m256d w2 = _mm256_maskload_pd(v2 + i, m);
    __m256d t = _mm256_mul_pd(q2v, w2);
    t = fma4(q1v, w1, t);
    const __m256d d = fma4(av, w0, neg4(t));
    const __m256d e = _mm256_add_pd(d, d);
    const __m256d ie2 = _mm256_div_pd(one, e2);
    const __m256d neg0 = neg4(w0);
    const __m256d nq1 = neg4(q1v);
    const __m256d nq2 = neg4(q2v);
    _mm256_maskstore_pd(t0 + i, m, _mm256_mul_pd(fma4(e, av, neg0), ie2));
    _mm256_maskstore_pd(t1 + i, m, _mm256_mul_pd(fma4(e, nq1, w1), ie2));
    _mm256_maskstore_pd(t2 + i, m, _mm256_mul_pd(fma4(e, nq2, w2), ie2));
  }
}

void soc3_w_apply(const double* eta2, const double* a, const double* q1,
                  const double* q2, const double* v0, const double* v1,
                  const double* v2, std::size_t k, double* t0, double* t1,
                  double* t2) {
  const __m256d one = _mm256_set1_pd(1.0);
  for (std::size_t i = 0; i < k; i += 4) {
    const std::size_t rem = k - i;
    const bool full = rem >= 4;
    const __m256i m = full ? _mm256_set1_epi64x(-1) : tail_mask(rem);
    const __m256d e2 = _mm256_maskload_pd(eta2 + i, m);
    __m256d av = _mm256_maskload_pd(a + i, m);
    if (!full) av = blend_dead(av, m, 1.0);
    const __m256d q1v = _mm256_maskload_pd(q1 + i, m);
    const __m256d q2v = _mm256_maskload_pd(q2 + i, m);
    const __m256d w0 = _mm256_maskload_pd(v0 + i, m);
    const __m256d w1 = _mm256_maskload_pd(v1 + i, m);
    const __m256d w2 = _mm256_maskload_pd(v2 + i, m);
    const __m256d eta = _mm256_sqrt_pd(e2);
    const __m256d zeta = fma4(q1v, w1, _mm256_mul_pd(q2v, w2));
    const __m256d factor =
        _mm256_add_pd(w0, _mm256_div_pd(zeta, _mm256_add_pd(one, av)));
    _mm256_maskstore_pd(t0 + i, m, _mm256_mul_pd(eta, fma4(av, w0, zeta)));
    _mm256_maskstore_pd(t1 + i, m, _mm256_mul_pd(eta, fma4(factor, q1v, w1)));
    _mm256_maskstore_pd(t2 + i, m, _mm256_mul_pd(eta, fma4(factor, q2v, w2)));
  }
}

void soc3_prod(const double* u0, const double* u1, const double* u2,
               const double* v0, const double* v1, const double* v2,
               std::size_t k, double* t0, double* t1, double* t2) {
  for (std::size_t i = 0; i < k; i += 4) {
    const std::size_t rem = k - i;
    const __m256i m = rem >= 4 ? _mm256_set1_epi64x(-1) : tail_mask(rem);
    const __m256d a0 = _mm256_maskload_pd(u0 + i, m);
    const __m256d a1 = _mm256_maskload_pd(u1 + i, m);
    const __m256d a2 = _mm256_maskload_pd(u2 + i, m);
    const __m256d b0 = _mm256_maskload_pd(v0 + i, m);
    const __m256d b1 = _mm256_maskload_pd(v1 + i, m);
    const __m256d b2 = _mm256_maskload_pd(v2 + i, m);
    __m256d t = _mm256_mul_pd(a2, b2);
    t = fma4(a1, b1, t);
    _mm256_maskstore_pd(t0 + i, m, fma4(a0, b0, t));
    _mm256_maskstore_pd(t1 + i, m, fma4(a0, b1, _mm256_mul_pd(b0, a1)));
    _mm256_maskstore_pd(t2 + i, m, fma4(a0, b2, _mm256_mul_pd(b0, a2)));
  }
}

void soc3_div(const double* u0, const double* u1, const double* u2,
              const double* v0, const double* v1, const double* v2,
              std::size_t k, double* t0, double* t1, double* t2) {
  const __m256d one = _mm256_set1_pd(1.0);
  for (std::size_t i = 0; i < k; i += 4) {
    const std::size_t rem = k - i;
    const bool full = rem >= 4;
    const __m256i m = full ? _mm256_set1_epi64x(-1) : tail_mask(rem);
    __m256d a0 = _mm256_maskload_pd(u0 + i, m);
    if (!full) a0 = blend_dead(a0, m, 1.0);
    const __m256d a1 = _mm256_maskload_pd(u1 + i, m);
    const __m256d a2 = _mm256_maskload_pd(u2 + i, m);
    const __m256d b0 = _mm256_maskload_pd(v0 + i, m);
    const __m256d b1 = _mm256_maskload_pd(v1 + i, m);
    const __m256d b2 = _mm256_maskload_pd(v2 + i, m);
    __m256d t = _mm256_mul_pd(a2, a2);
    t = fma4(a1, a1, t);
    const __m256d rho = fma4(a0, a0, neg4(t));
    const __m256d zeta = fma4(a1, b1, _mm256_mul_pd(a2, b2));
    const __m256d irho = _mm256_div_pd(one, rho);
    const __m256d iu0 = _mm256_div_pd(one, a0);
    const __m256d negb0 = neg4(b0);
    const __m256d factor = _mm256_mul_pd(fma4(zeta, iu0, negb0), irho);
    const __m256d negz = neg4(zeta);
    _mm256_maskstore_pd(t0 + i, m, _mm256_mul_pd(fma4(a0, b0, negz), irho));
    _mm256_maskstore_pd(t1 + i, m, fma4(factor, a1, _mm256_mul_pd(b1, iu0)));
    _mm256_maskstore_pd(t2 + i, m, fma4(factor, a2, _mm256_mul_pd(b2, iu0)));
  }
}

inline __m256d boundary_rate4(__m256d inv, __m256d b0, __m256d b1, __m256d b2,
                              __m256d v0, __m256d v1, __m256d v2) {
  __m256d t = _mm256_mul_pd(b1, v1);
  t = fma4(b2, v2, t);
  const __m256d cdot = fma4(b0, v0, neg4(t));
  const __m256d r0 = _mm256_mul_pd(inv, cdot);
  const __m256d fac = _mm256_div_pd(_mm256_add_pd(cdot, v0),
                                    _mm256_add_pd(b0, _mm256_set1_pd(1.0)));
  const __m256d nfac = neg4(fac);
  const __m256d rt1 = _mm256_mul_pd(inv, fma4(nfac, b1, v1));
  const __m256d rt2 = _mm256_mul_pd(inv, fma4(nfac, b2, v2));
  return _mm256_sub_pd(_mm256_sqrt_pd(fma4(rt2, rt2, _mm256_mul_pd(rt1, rt1))),
                       r0);
}

double soc3_step_bound(const double* l0, const double* l1, const double* l2,
                       const double* ds0, const double* ds1, const double* ds2,
                       const double* dz0, const double* dz1, const double* dz2,
                       std::size_t k) {
  const __m256d one = _mm256_set1_pd(1.0);
  const __m256d zero = _mm256_setzero_pd();
  __m256d acc = zero;
  for (std::size_t i = 0; i < k; i += 4) {
    const std::size_t rem = k - i;
    const bool full = rem >= 4;
    const __m256i m = full ? _mm256_set1_epi64x(-1) : tail_mask(rem);
    __m256d a0 = _mm256_maskload_pd(l0 + i, m);
    if (!full) a0 = blend_dead(a0, m, 1.0);
    const __m256d a1 = _mm256_maskload_pd(l1 + i, m);
    const __m256d a2 = _mm256_maskload_pd(l2 + i, m);
    const __m256d lk2 = res3(a0, a1, a2);
    const __m256d live = _mm256_cmp_pd(lk2, zero, _CMP_GT_OQ);
    // dead lanes keep computing on padded values; results are zeroed below
    const __m256d safe = _mm256_blendv_pd(one, lk2, live);
    const __m256d lknorm = _mm256_sqrt_pd(safe);
    const __m256d inv = _mm256_div_pd(one, lknorm);
    const __m256d b0 = _mm256_mul_pd(a0, inv);
    const __m256d b1 = _mm256_mul_pd(a1, inv);
    const __m256d b2 = _mm256_mul_pd(a2, inv);
    const __m256d vs0 = _mm256_maskload_pd(ds0 + i, m);
    const __m256d vs1 = _mm256_maskload_pd(ds1 + i, m);
    const __m256d vs2 = _mm256_maskload_pd(ds2 + i, m);
    const __m256d vz0 = _mm256_maskload_pd(dz0 + i, m);
    const __m256d vz1 = _mm256_maskload_pd(dz1 + i, m);
    const __m256d vz2 = _mm256_maskload_pd(dz2 + i, m);
    const __m256d rs = boundary_rate4(inv, b0, b1, b2, vs0, vs1, vs2);
    const __m256d rz = boundary_rate4(inv, b0, b1, b2, vz0, vz1, vz2);
    __m256d meas = _mm256_max_pd(rs, rz);
    meas = _mm256_max_pd(meas, zero);
    meas = _mm256_and_pd(meas, live);
    acc = _mm256_max_pd(acc, meas);
  }
  const __m128d two = _mm_max_pd(_mm256_castpd256_pd128(acc),
                                 _mm256_extractf128_pd(acc, 1));
  return _mm_cvtsd_f64(_mm_max_sd(two, _mm_unpackhi_pd(two, two)));
}

}  // namespace

const Kernels& avx2_kernels() {
  static const Kernels k = {
      "avx2",          phase_table,   phasor_sum, scale_pair_rows,
      soc3_nt_update,  soc3_w2_apply, soc3_winv2_apply,
      soc3_w_apply,    soc3_prod,     soc3_div,   soc3_step_bound,
  };
  return k;
}

}  // namespace apsyn::kern

#endif  // x86-64
