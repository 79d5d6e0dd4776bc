#pragma once

// Reference values frozen after the oracle in oracle/ reproduced them
// (see test_anchors.cpp, which recomputes every one).

namespace anchors {

inline constexpr double kJ0Zeros[3] = {2.404825557695773, 5.520078110286311,
                                       8.653727912911013};
inline constexpr double kJ1At1 = 0.4400505857449335;
inline constexpr double kY0At1 = 0.0882569642156769;
inline constexpr double kY1Half_AtPi = 0.4501581580785531;  // Y_{1/2}(pi)
inline constexpr double kJ1At2 = 0.5767248077568734;
inline constexpr double kY1At2 = -0.1070324315409375;
inline constexpr double kC1QuarterPiAt2 = 0.4834893805928750;  // (J_1(2) - Y_1(2)) / sqrt 2
inline constexpr double kJ0PrimeAt1 = -0.4400505857449335;
inline constexpr double kJHalfPrimeAtHalfPi = -0.2026423672846756;
inline constexpr double kJ11 = 3.831705970207512;  // j_{1,1}

// Chain nu = 1, c = 0.5, s = 1.
inline constexpr double kJp11 = 1.841183781340659;  // j'_{1,1}
inline constexpr double kY11 = 2.197141326031017;   // y_{1,1}
inline constexpr double kYp11 = 3.683022856585178;  // y'_{1,1}
inline constexpr double kJp12 = 5.331442773525033;  // j'_{1,2}

}  // namespace anchors
