#!/usr/bin/env python3
"""Independent brute-force DH chain for pinning FK regression constants.

Builds each standard DH transform as an explicit product of four elementary
4x4 matrices (Rz * Tz * Tx * Rx) using no code from the package, and prints
the zero-angle tool position of the shipped UR5 table.  The printed value
is frozen into tests/test_kinematics.py.
"""
import math

A = [0.0, -0.425, -0.39225, 0.0, 0.0, 0.0]
D = [0.089159, 0.0, 0.0, 0.10915, 0.09465, 0.0823]
ALPHA = [math.pi / 2, 0.0, 0.0, math.pi / 2, -math.pi / 2, 0.0]


def matmul(p, q):
    return [[sum(p[i][k] * q[k][j] for k in range(4)) for j in range(4)]
            for i in range(4)]


def rot_z(t):
    c, s = math.cos(t), math.sin(t)
    return [[c, -s, 0, 0], [s, c, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1]]


def rot_x(t):
    c, s = math.cos(t), math.sin(t)
    return [[1, 0, 0, 0], [0, c, -s, 0], [0, s, c, 0], [0, 0, 0, 1]]


def trans(x, y, z):
    return [[1, 0, 0, x], [0, 1, 0, y], [0, 0, 1, z], [0, 0, 0, 1]]


def fk(qs):
    t = [[1 if i == j else 0 for j in range(4)] for i in range(4)]
    for q, a, d, al in zip(qs, A, D, ALPHA):
        for m in (rot_z(q), trans(0, 0, d), trans(a, 0, 0), rot_x(al)):
            t = matmul(t, m)
    return t


if __name__ == "__main__":
    t = fk([0.0] * 6)
    print("zero-angle tool position:")
    print([f"{t[i][3]:.17g}" for i in range(3)])
    t2 = fk([0.1, -0.5, 0.3, 1.2, -0.7, 0.4])
    print("probe config position:")
    print([f"{t2[i][3]:.17g}" for i in range(3)])
