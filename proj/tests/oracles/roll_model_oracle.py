#!/usr/bin/env python3
# Copyright 2026 The rollsim Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Symbolic evaluation of the roll model and control laws.

Independent transcription used to freeze the expected values in
the vehicle-model and controller unit tests. Run: python3 tests/oracles/roll_model_oracle.py
"""

import numpy as np
import sympy as sp

R = sp.Rational
P = dict(m_s=820, m_u=60, I_xx=120, h=R(48, 100), l_s=R(13, 10), l_w=R(23, 10),
         k_f=12000, k_r=35000, b_f=530, b_r=850, k_t=200000, g=R(981, 100),
         K_u=R(2, 1000) / 820)
I_t = P["I_xx"] + P["m_s"] * P["h"] ** 2

# corner order fl, fr, rl, rr; left corners move down for positive roll
SIGMA = [-1, 1, -1, 1]
K = [P["k_f"], P["k_f"], P["k_r"], P["k_r"]]
B = [P["b_f"], P["b_f"], P["b_r"], P["b_r"]]


def roll_acc(phi, phid, zu, zud, ay, u):
    kf, kr, bf, br, ls = P["k_f"], P["k_r"], P["b_f"], P["b_r"], P["l_s"]
    rhs = (P["m_s"] * ay * P["h"] * sp.cos(phi) + P["m_s"] * P["g"] * P["h"] * sp.sin(phi)
           - R(1, 2) * kf * ls**2 * sp.sin(phi) - R(1, 2) * bf * ls**2 * phid * sp.cos(phi)
           - R(1, 2) * kr * ls**2 * sp.sin(phi) - R(1, 2) * br * ls**2 * phid * sp.cos(phi)
           - R(1, 2) * kf * ls * (zu[0] - zu[1]) - R(1, 2) * bf * ls * (zud[0] - zud[1])
           - R(1, 2) * kr * ls * (zu[2] - zu[3]) - R(1, 2) * br * ls * (zud[2] - zud[3]) + u)
    return rhs / I_t


def unsprung_acc(c, phi, phid, zs, zsd, zu, zud, zroad, f):
    ls = P["l_s"]
    spring = K[c] * (zs - zu[c] + SIGMA[c] * R(1, 2) * ls * sp.sin(phi))
    damper = B[c] * (zsd - zud[c] + SIGMA[c] * R(1, 2) * ls * phid * sp.cos(phi))
    return (spring + damper - P["k_t"] * (zu[c] - zroad[c]) + f) / P["m_u"]


def heave_acc(phi, phid, zs, zsd, zu, zud, f_total):
    ls = P["l_s"]
    tot = 0
    for c in range(4):
        tot += K[c] * (zs - zu[c] + SIGMA[c] * R(1, 2) * ls * sp.sin(phi))
        tot += B[c] * (zsd - zud[c] + SIGMA[c] * R(1, 2) * ls * phid * sp.cos(phi))
    return (-tot - f_total) / P["m_s"]


def steer_ay(delta, xd):
    return delta * xd**2 / (P["l_w"] + P["K_u"] * P["m_s"] * xd**2)


def law_common(phi, phid, eta, psi):
    ls = P["l_s"]
    return (R(1, 2) * P["k_f"] * ls**2 * sp.sin(phi) + R(1, 2) * P["b_f"] * ls**2 * phid * sp.cos(phi)
            + R(1, 2) * P["k_r"] * ls**2 * sp.sin(phi) + R(1, 2) * P["b_r"] * ls**2 * phid * sp.cos(phi))


def law_full(phi, phid, ay, eta, psi):
    return (-I_t * eta / psi * phi - I_t * (eta + 1 / psi) * phid
            - P["m_s"] * ay * P["h"] * sp.cos(phi) - P["m_s"] * P["g"] * P["h"] * sp.sin(phi)
            + law_common(phi, phid, eta, psi))


def law_banked(phi, phid, phir, phird, delta, xd, eta, psi):
    ayt = steer_ay(delta, xd) - P["g"] * sp.sin(phir)
    return (-I_t * eta / psi * (phi - phir) - I_t * (eta + 1 / psi) * phid - I_t / psi * phird
            - P["m_s"] * ayt * P["h"] * sp.cos(phi) - P["m_s"] * P["g"] * P["h"] * sp.sin(phi - phir)
            + law_common(phi, phid, eta, psi))


def show(name, expr):
    print(f"{name} = {sp.N(expr, 20)}")


z4 = [0, 0, 0, 0]
show("roll_acc(phi=0.05, ay=2)", roll_acc(R(5, 100), 0, z4, z4, 2, 0))
zu = [R(1, 100), 0, 0, 0]
for c, n in enumerate(["fl", "fr", "rl", "rr"]):
    show(f"unsprung_acc_{n}(phi=0.05, zs=0.02, zu_fl=0.01)",
         unsprung_acc(c, R(5, 100), 0, R(2, 100), 0, zu, z4, z4, 0))
zu_m = [R(4, 1000), R(-2, 1000), R(3, 1000), R(1, 1000)]
zud_m = [R(2, 100), R(-1, 100), 0, R(3, 100)]
show("heave_acc(mixed)", heave_acc(R(3, 100), R(1, 10), R(1, 100), R(-5, 100), zu_m, zud_m, 100))
show("roll_acc(mixed, ay=1.5, u=250)", roll_acc(R(3, 100), R(1, 10), zu_m, zud_m, R(3, 2), 250))
show("law_full(phi=0.05, phid=0.1, ay=1, eta=15, psi=0.5)", law_full(R(5, 100), R(1, 10), 1, 15, R(1, 2)))
show("law_full(phi=0, phid=0, ay=2)", law_full(0, 0, 2, 15, R(1, 2)))
show("law_banked(phi=0.05, phir=0.02, phid=0.1, phird=0.01, delta=0.03, xd=15)",
     law_banked(R(5, 100), R(1, 10), R(2, 100), R(1, 100), R(3, 100), 15, 15, R(1, 2)))
show("steer_ay(delta=0.05, xd=10, K_u=0)", R(5, 100) * 100 / P["l_w"])
show("jturn_target(K_u=0)", R(3, 10) * P["g"] * P["l_w"] / R(2235, 100) ** 2)

# Allocation oracle via SVD pseudo-inverse.
ls, a, l = 1.3, 1.15, 2.3
A = np.array([[-1, -1, -1, -1], [a, a, a - l, a - l], [ls / 2, -ls / 2, ls / 2, -ls / 2]])
print("pinv(A) @ [0,0,1] =", np.linalg.pinv(A) @ np.array([0, 0, 1.0]))
print("pinv(A) @ [120,-35,800] =", repr(np.linalg.pinv(A) @ np.array([120, -35, 800.0])))

# Same products in exact arithmetic, for the frozen test values.
As = sp.Matrix([[-1, -1, -1, -1], [R(115, 100), R(115, 100), R(115, 100) - R(23, 10), R(115, 100) - R(23, 10)],
                [R(13, 20), -R(13, 20), R(13, 20), -R(13, 20)]])
Ps = As.T * (As * As.T).inv()
for u in ([0, 0, 1], [120, -35, 800]):
    print(f"exact pinv(A) @ {u} =", [sp.N(v, 20) for v in Ps * sp.Matrix(u)])
