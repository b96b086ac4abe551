"""Brute-force oracle for the frozen expected values in the C++ unit tests.

Uses exact sympy arithmetic for the 4-dim pigeon amplitudes and scipy's
matrix exponential for the system+meter coupling. Independent of the C++
implementation; rerun with `python3 tests/oracles/pps_oracle.py`.
"""
import numpy as np
import sympy as sp
from scipy.linalg import expm

I = sp.I
r2 = sp.sqrt(2)
C = sp.Matrix([1, 0])
A = sp.Matrix([0, 1])
plus = (C + A) / r2
plus_i = (C + I * A) / r2


def kron(a, b):
    return sp.Matrix(sp.kronecker_product(a, b))


psi_i = kron(plus, plus)
psi_f = kron(plus_i, plus_i)
P_LL = sp.diag(1, 0, 0, 0)
P_RR = sp.diag(0, 0, 0, 1)
P_same = P_LL + P_RR
posts = {
    "paradox": psi_f,
    "CC": kron(C, C), "CA": kron(C, A), "AC": kron(A, C), "AA": kron(A, A),
}
projs = {"same": P_same, "LL": P_LL, "RR": P_RR}

print("inner(+i,+) =", sp.simplify((plus_i.H * plus)[0]))
print("projector(+i) =", sp.simplify(plus_i * plus_i.H))
print("(I x Pi_C)|++> =", list(kron(sp.eye(2), sp.diag(1, 0)) * psi_i))
print("Pi_same|++> =", list(P_same * psi_i))

for name, P in projs.items():
    a = sp.nsimplify(sp.expand((psi_f.H * P * psi_i)[0]))
    b = sp.nsimplify(sp.expand((psi_f.H * (sp.eye(4) - P) * psi_i)[0]))
    wv = sp.simplify(a / (a + b))
    n = sp.simplify(abs(a) ** 2 + abs(b) ** 2)
    abl = sp.simplify(abs(a) ** 2 / n)
    sim = sp.simplify(sp.im(sp.conjugate(a + b) * a) / n)
    print(f"paradox {name}: a={a} b={b} |a|^2={sp.simplify(abs(a)**2)} "
          f"wv={wv} abl={abl} strong_imag={sim} joint_imag={sp.simplify(sp.im(a*sp.conjugate(b)))}")

c = sp.Rational(4, 5)
a, b = sp.Rational(1, 4), -sp.Rational(1, 4) - I / 2
ps = abs(a) ** 2 + abs(b) ** 2 + 2 * c * sp.re(a * sp.conjugate(b))
print("LL s=0.6 real =", sp.simplify((abs(a) ** 2 + c * sp.re(a * sp.conjugate(b))) / ps))

# Full meter simulation with the half-angle generator exp(-i theta/2 (2P-1) sy).
sy = np.array([[0, -1j], [1j, 0]])
sx = np.array([[0, 1], [1, 0]], dtype=complex)


def npm(m):
    return np.array(m.evalf(), dtype=complex)


def meter_readout(P, post, s):
    th = np.arcsin(s)
    G = 2 * npm(P) - np.eye(4)
    U = expm(-1j * th / 2 * np.kron(G, sy))
    psi = np.kron(npm(psi_i).ravel(), np.array([1, 0]))
    out = U @ psi
    F = np.kron(np.outer(npm(post).ravel(), npm(post).ravel().conj()), np.eye(2))
    ps = np.vdot(out, F @ out).real
    re = np.vdot(out, np.kron(np.outer(npm(post).ravel(), npm(post).ravel().conj()), (np.eye(2) + sx / s) / 2) @ out).real / ps
    im = np.vdot(out, np.kron(np.outer(npm(post).ravel(), npm(post).ravel().conj()), sy / (2 * s)) @ out).real / ps
    return ps, re, im


for s in (0.2, 0.6, 1.0):
    for name, P in projs.items():
        ps, re, im = meter_readout(P, psi_f, s)
        print(f"s={s} {name}: ps={ps:.15f} real={re:.15f} imag={im:.15f}")

# Overlap of reduced meter pointer states for Pi_L on one path qubit, s = 0.6.
th = np.arcsin(0.6)
U1 = expm(-1j * th / 2 * np.kron(2 * np.diag([1, 0]) - np.eye(2), sy))
yes = U1 @ np.kron([1, 0], [1, 0])
no = U1 @ np.kron([0, 1], [1, 0])
print("pointer overlap^2 s=0.6 =", abs(np.vdot(yes[0:2], no[2:4])) ** 2)
