"""Independent reference values for the C++ tests.

Run with numpy/scipy/mpmath; the printed header is frozen as tests/frozen_values.hpp.
Nothing here imports the library under test.
"""
import math

import mpmath as mp
import numpy as np
import scipy.linalg as sl
from scipy.optimize import brentq

mp.mp.dps = 40
out = {}

# Suzuki coefficient for the fourth-order recursion.
u2 = 1 / (4 - mp.mpf(4) ** (mp.mpf(1) / 3))
out["kSuzukiU2"] = u2
out["kSuzukiMiddle2"] = 1 - 4 * u2

# Chebyshev weights at zero for n = 4, directly from the Lagrange basis.
def lagrange_at_zero(nodes):
    w = []
    for k, sk in enumerate(nodes):
        num = mp.mpf(1)
        for j, sj in enumerate(nodes):
            if j != k:
                num *= (0 - sj) / (sk - sj)
        w.append(num)
    return w

nodes4 = [mp.cos((2 * i - 1) * mp.pi / 8) for i in range(1, 5)]
d4 = lagrange_at_zero(nodes4)
for i, v in enumerate(d4):
    out[f"kWeightN4_{i}"] = v
out["kWeightN4L1"] = sum(abs(v) for v in d4)
out["kLebesgue1"] = 2 / mp.pi * mp.log(2) + 1
out["kLebesgue2"] = 2 / mp.pi * mp.log(3) + 1

# Derivative bound examples.
e2 = mp.e ** 2
out["kHeffDeriv0"] = 2 * e2 * mp.mpf(5) / 3
out["kHeffDeriv1"] = 2 / mp.mpf("0.01") * (e2 * mp.mpf(5) / 3 * 2 * mp.mpf("0.01")) ** 2
out["kChebErr4"] = 2 * (mp.mpf("0.5") / 8) ** 4
out["kTotalSteps21"] = 8 / mp.pi * (mp.euler + mp.log(6))

# Analyticity radius: bisection on alpha r^2 e^r / 3! = gamma0 / 2 with alpha = beta = gamma0 = 1.
out["kRadius1121"] = mp.findroot(lambda r: r ** 2 * mp.e ** r / 6 - mp.mpf(1) / 2, (1, 3), solver="bisect")
out["kLambertW0At1"] = mp.lambertw(1)

# Expectation-value bound, regime c <= n.
out["kExpvalInterp"] = 2 * mp.sqrt(2) * 4 * (6 * mp.mpf("0.1")) ** 4 * mp.e ** 24

# Interpolation node count: bisection on n^2 = X^(1/n).
X = 2 * 1 * mp.mpf(5) / 3 * 1 * 1 / mp.mpf("1e-3")
out["kPeNodeReal"] = mp.findroot(lambda n: n ** 2 - X ** (1 / n), (1.5, 10), solver="bisect")

# Amplitude-estimation oracle count example.
L4 = 2 / mp.pi * mp.log(5) + 1
out["kIqaeExample"] = 200 * L4 / mp.mpf("0.01") * mp.log(2 * 4 / mp.mpf("0.05") * mp.log(L4 * mp.pi / mp.mpf("0.01"), 2))

# Two-spin transverse Ising data with scipy's expm as the exponential oracle.
X1 = np.array([[0, 1], [1, 0]], complex)
Z1 = np.diag([1.0, -1.0]).astype(complex)
I2 = np.eye(2)
terms = [-np.kron(Z1, Z1), -np.kron(X1, I2), -np.kron(I2, X1)]
H = sum(terms)


def s2(t):
    U = np.eye(4, dtype=complex)
    for j, f in [(0, 0.5), (1, 0.5), (2, 1.0), (1, 0.5), (0, 0.5)]:
        U = sl.expm(-1j * terms[j] * f * t) @ U
    return U


def ground_heff(tau):
    U = s2(tau)
    th = np.angle(np.linalg.eigvals(U))
    return np.min(-th / tau)


def cheb_estimate(n, a, f):
    nodes = [a * math.cos((2 * i - 1) * math.pi / (2 * n)) for i in range(1, n + 1)]
    ys = [f(abs(s)) for s in nodes]
    w = [float(v) for v in lagrange_at_zero([mp.mpf(s) for s in nodes])]
    return sum(wi * yi for wi, yi in zip(w, ys))


E0 = -math.sqrt(5)
for n in (2, 4, 6, 8):
    est = cheb_estimate(n, 1.0, lambda s: ground_heff(0.1 * s))
    out[f"kEnergyEstimateN{n}"] = mp.mpf(est)

U1 = s2(0.5)
Uex = sl.expm(-1j * H * 0.5)
out["kFrobDistanceT05"] = mp.mpf(np.linalg.norm(U1 - Uex) / 2 / 2)

print("#pragma once\n\n// Generated by tests/oracles/derive_values.py; do not edit by hand.\n")
print("namespace frozen {\n")
for k, v in out.items():
    print(f"inline constexpr double {k} = {mp.nstr(v, 17)};")
print("\n}  // namespace frozen")
