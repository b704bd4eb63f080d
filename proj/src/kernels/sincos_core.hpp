#pragma once

// Constants shared by the scalar and vector sin/cos kernels. Both backends
// must execute the identical operation sequence on these values so that the
// results agree bit for bit.
//
// Reduction: q = nearbyint(x * 2/pi), r = ((x - q*P1) - q*P1T) where P1 has
// its mantissa truncated to 33 bits so q*P1 is exact for |q| < 2^20, and
// P1 + P1T carries pi/2 to ~86 bits. Polynomials are the classic minimax
// fits on [-pi/4, pi/4] (Cephes coefficients).

namespace apsyn::kern::detail {

inline constexpr double kTwoOverPi = 6.36619772367581382433e-01;
inline constexpr double kPio2Hi = 1.57079632673412561417e+00;  // 0x3FF921FB54400000
inline constexpr double kPio2Lo = 6.07710050650619224932e-11;  // 0x3DD0B4611A626331

inline constexpr double kS1 = -1.66666666666666307295e-01;
inline constexpr double kS2 = 8.33333333332211858878e-03;
inline constexpr double kS3 = -1.98412698295895385996e-04;
inline constexpr double kS4 = 2.75573136213857245213e-06;
inline constexpr double kS5 = -2.50507477628578072866e-08;
inline constexpr double kS6 = 1.58962301576546568060e-10;

inline constexpr double kC1 = 4.16666666666665929218e-02;
inline constexpr double kC2 = -1.38888888888730564116e-03;
inline constexpr double kC3 = 2.48015872888517179954e-05;
inline constexpr double kC4 = -2.75573141792967388112e-07;
inline constexpr double kC5 = 2.08757008419747316778e-09;
inline constexpr double kC6 = -1.13585365213876817300e-11;

}  // namespace apsyn::kern::detail
