#pragma once

#include <cstddef>
#include <string>

namespace apsyn::kern {

/// Data-parallel inner-loop kernels. Every kernel exists as a scalar
/// reference and (on x86-64) an AVX2+FMA variant selected at runtime.
///
/// The two backends are bit-for-bit equivalent by construction: the scalar
/// reference fixes the exact operation order (explicit fma, fixed four-lane
/// interleaved accumulation for reductions) and the vector variant executes
/// the same operations per element. Equivalence is asserted in the test
/// suite, so results never depend on which backend the dispatcher picks.
///
/// Trigonometric kernels use a Cody-Waite reduction valid for arguments up
/// to about 1e6 rad, far beyond any phase this toolkit produces.
struct Kernels {
  const char* name;

  /// c[i] = cos(ku*x[i] + kv*y[i]), s[i] = sin(ku*x[i] + kv*y[i]).
  void (*phase_table)(const double* x, const double* y, std::size_t n,
                      double ku, double kv, double* c, double* s);

  /// re = sum_i w[i]*cos(ku*x[i] + kv*y[i]), im likewise with sin.
  /// Accumulated in four interleaved partial sums p0..p3 (element i goes to
  /// p[i mod 4]) combined as (p0+p2)+(p1+p3).
  void (*phasor_sum)(const double* x, const double* y, const double* w,
                     std::size_t n, double ku, double kv, double* re,
                     double* im);

  /// out1[j] = l11*rc[j] + l21*rs[j], out2[j] = l22*rs[j].
  void (*scale_pair_rows)(const double* rc, const double* rs, std::size_t n,
                          double l11, double l21, double l22, double* out1,
                          double* out2);

  // Operations on arrays of 3-dimensional second-order cones, stored as
  // structure-of-arrays (component 0 = cone axis, 1..2 = tail).

  /// Nesterov-Todd scaling from strictly interior s, z. Per cone writes
  /// eta2 (scaling magnitude squared), the normalized scaling point
  /// (a, q1, q2) with a^2 - q1^2 - q2^2 = 1, and lam = W z.
  /// Returns false if some cone residual s0^2-s1^2-s2^2 or z0^2-z1^2-z2^2
  /// is not strictly positive (s or z left the cone interior).
  bool (*soc3_nt_update)(const double* s0, const double* s1, const double* s2,
                         const double* z0, const double* z1, const double* z2,
                         std::size_t k, double* eta2, double* a, double* q1,
                         double* q2, double* l0, double* l1, double* l2);

  /// t = W^2 v per cone, W^2 = eta2*(2 w w^T - J), w = (a, q1, q2),
  /// J = diag(1, -1, -1).
  void (*soc3_w2_apply)(const double* eta2, const double* a, const double* q1,
                        const double* q2, const double* v0, const double* v1,
                        const double* v2, std::size_t k, double* t0,
                        double* t1, double* t2);

  /// t = W^-2 v per cone, W^-2 = (2 u u^T - J)/eta2, u = (a, -q1, -q2).
  void (*soc3_winv2_apply)(const double* eta2, const double* a,
                           const double* q1, const double* q2,
                           const double* v0, const double* v1,
                           const double* v2, std::size_t k, double* t0,
                           double* t1, double* t2);

  /// t = W v per cone (eta = sqrt(eta2)).
  void (*soc3_w_apply)(const double* eta2, const double* a, const double* q1,
                       const double* q2, const double* v0, const double* v1,
                       const double* v2, std::size_t k, double* t0, double* t1,
                       double* t2);

  /// Jordan product t = u o v per cone:
  /// t0 = u.v, t1 = u0*v1 + v0*u1, t2 = u0*v2 + v0*u2.
  void (*soc3_prod)(const double* u0, const double* u1, const double* u2,
                    const double* v0, const double* v1, const double* v2,
                    std::size_t k, double* t0, double* t1, double* t2);

  /// Jordan division t = u \ v per cone (inverse of soc3_prod by u).
  void (*soc3_div)(const double* u0, const double* u1, const double* u2,
                   const double* v0, const double* v1, const double* v2,
                   std::size_t k, double* t0, double* t1, double* t2);

  /// Line-search bound for the scaled directions ds, dz against lam:
  /// returns max over cones of max(rho(ds), rho(dz), 0) where rho is the
  /// largest boundary-crossing rate in the cone geometry. Cones whose lam
  /// has non-positive residual are skipped.
  double (*soc3_step_bound)(const double* l0, const double* l1,
                            const double* l2, const double* ds0,
                            const double* ds1, const double* ds2,
                            const double* dz0, const double* dz1,
                            const double* dz2, std::size_t k);
};

const Kernels& scalar_kernels();

#if defined(__x86_64__) || defined(_M_X64)
const Kernels& avx2_kernels();
#endif

/// True if the running CPU supports the AVX2+FMA backend.
bool has_avx2();

/// Currently selected backend ("scalar" or "avx2").
const Kernels& active();

/// Select "auto", "scalar" or "avx2". Throws on unknown or unsupported
/// names. The APSYN_KERNELS environment variable applies the same choice at
/// startup.
void select_backend(const std::string& name);

}  // namespace apsyn::kern
