#pragma once

// Generated by tests/oracles/derive_values.py; do not edit by hand.

namespace frozen {

inline constexpr double kSuzukiU2 = 0.41449077179437574;
inline constexpr double kSuzukiMiddle2 = -0.65796308717750295;
inline constexpr double kWeightN4_0 = -0.10355339059327376;
inline constexpr double kWeightN4_1 = 0.60355339059327376;
inline constexpr double kWeightN4_2 = 0.60355339059327376;
inline constexpr double kWeightN4_3 = -0.10355339059327376;
inline constexpr double kWeightN4L1 = 1.414213562373095;
inline constexpr double kLebesgue1 = 1.4412712003053032;
inline constexpr double kLebesgue2 = 1.6993983051321196;
inline constexpr double kHeffDeriv0 = 24.630186996435501;
inline constexpr double kHeffDeriv1 = 12.132922229587609;
inline constexpr double kChebErr4 = 3.0517578125e-5;
inline constexpr double kTotalSteps21 = 6.0325456425361548;
inline constexpr double kRadius1121 = 1.0332309037176649;
inline constexpr double kLambertW0At1 = 0.56714329040978387;
inline constexpr double kExpvalInterp = 38839850719.768779;
inline constexpr double kPeNodeReal = 3.3526464205577942;
inline constexpr double kIqaeExample = 295858.19617419178;
inline constexpr double kEnergyEstimateN2 = -2.2345742799738351;
inline constexpr double kEnergyEstimateN4 = -2.236069472328567;
inline constexpr double kEnergyEstimateN6 = -2.2360679764706712;
inline constexpr double kEnergyEstimateN8 = -2.2360679774997525;
inline constexpr double kFrobDistanceT05 = 0.053865163483215163;

}  // namespace frozen
