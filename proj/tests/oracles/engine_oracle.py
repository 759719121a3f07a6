#!/usr/bin/env python3
"""Independent Fraction-based transcription of the meeting-number recursions.

Used only to produce the frozen regression values in tests/unit/engine_test.cpp
and to cross-check the local P^2 pipeline. Insertions are unit generators:
H for divisor slots, H^2 for codimension-2 slots. Local P^2 data only
(empty diagonal, no H^3 classes).

    python3 engine_oracle.py values      # print frozen engine values
    python3 engine_oracle.py table N     # print d, chern_d, n1_d for d <= N
"""
import sys
from fractions import Fraction as F
from functools import lru_cache

sys.setrecursionlimit(100000)

C2 = F(-3)


def base2(d):
    return F({1: 1, 2: -1}.get(d, 0))


def dec(d):
    return [(a, d - a) for a in range(1, d)]


@lru_cache(None)
def n2A(d1, d2):
    if d2 > d1:
        return n2A(d1, d2 - d1) + n2A(d2 - d1, d1)
    if d2 < d1:
        return n2A(d1 - d2, d2)
    return C2 * base2(d1) + 2 * n1F(d1)


@lru_cache(None)
def n1F(d):
    return -sum(n2A(a, b) for a, b in dec(d))


@lru_cache(None)
def n1C(d):
    return (base2(d) + sum(a * a * n2A(a, b) for a, b in dec(d))) / (d * d)


@lru_cache(None)
def n1D(d):
    s = sum((a * b * b + b * a * a) * n2A(a, b) for a, b in dec(d))
    return (d * base2(d) - 2 * d * base2(d) + s) / (d * d)


@lru_cache(None)
def n1E(d):
    s = sum(a * a * (n2D(a, b) + n2B(a, b)) for a, b in dec(d))
    return (n1D(d) - 2 * d * n1C(d) + s) / (d * d)


@lru_cache(None)
def n1G(d):
    s = sum(a * a * (n2E(a, b) + n2C(a, b)) for a, b in dec(d))
    return (n1F(d) - 2 * d * n1E(d) + s) / (d * d)


@lru_cache(None)
def gamma1(d):
    head = F(1, 2) * (C2 * n1C(d) + n1G(d) + C2 * C2 * base2(d) + 4 * C2 * n1F(d))
    return head - sum(2 * n2E(a, b) + F(5, 2) * n2C(a, b) for a, b in dec(d))


@lru_cache(None)
def n2B(d1, d2):
    s = sum(b * m3(d1 - b, b, d2 - b) for b in range(1, min(d1, d2)))
    return -s - Cmu(d1, d2)


@lru_cache(None)
def n2C(d1, d2):
    s = sum(b * b * m3(d1, bp, b) for b, bp in dec(d2))
    return (n2A(d1, d2) - 2 * d2 * n2B(d1, d2) + s) / (d2 * d2)


@lru_cache(None)
def n2D(d1, d2):
    s = sum((b * bp * bp + bp * b * b) * m3(d1, bp, b) for b, bp in dec(d2))
    return (d2 * n2A(d1, d2) - 2 * d2 * n2A(d1, d2) + s) / (d2 * d2)


@lru_cache(None)
def n2E(d1, d2):
    return -sum(m3(d1, bp, b) for b, bp in dec(d2))


@lru_cache(None)
def gamma2(d1, d2):
    return C2 * n2A(d1, d2) + 2 * n2E(d1, d2) + n2C(d1, d2) + n2C(d2, d1)


@lru_cache(None)
def Cmu(d1, d2):
    if d2 > d1:
        e = d2 - d1
        msum = sum(m3(b, d1, bp) for b, bp in dec(e))
        return n2D(e, d1) + n2B(e, d1) + d1 * (gamma2(e, d1) + F(1, 2) * msum)
    if d2 < d1:
        return Cmu(d2, d1)
    s = sum(2 * n2D(b, bp) + F(5, 2) * n2B(b, bp) for b, bp in dec(d2))
    return n1E(d1) + C2 * n1D(d1) + d1 * gamma1(d1) - s


@lru_cache(None)
def C3(d1, d2, d3):
    if d3 > d1:
        c1 = m3(d3 - d1, d1, d2)
    elif d3 < d1:
        c1 = m3(d1 - d3, d3, d2)
    else:
        c1 = gamma2(d2, d1)
    if d3 > d2:
        c2 = -m3(d1, d2, d3 - d2)
    elif d3 < d2:
        c2 = -(m3(d1, d3, d2 - d3) + m3(d1, d2 - d3, d3))
    else:
        c2 = -(C2 * n2A(d1, d2) + 2 * n2E(d1, d2))
    if d3 > d1 + d2:
        c12 = -m3(d3 - d1 - d2, d1, d2)
    elif d2 < d3 < d1 + d2:
        c12 = -m3(d1 + d2 - d3, d3 - d2, d2)
    elif d3 == d1 + d2:
        c12 = -gamma2(d2, d1)
    else:
        c12 = F(0)
    return c1, c2, c12


@lru_cache(None)
def m3(d1, d2, d3):
    return -sum(C3(d1, d2, d3))


def chern(d):
    s = sum(n2C(a, b) + n2C(b, a) for a, b in dec(d))
    return -(n1G(d) + C2 * n1C(d)) + F(1, 2) * s


def sigma(n):
    return sum(i for i in range(1, n + 1) if n % i == 0)


def table(D):
    cs, n1 = {}, {}
    for d in range(1, D + 1):
        cs[d] = chern(d)
        rest = sum(F(sigma(e), e) * n1[d // e] for e in range(2, d + 1) if d % e == 0)
        rest += F(1, 24) * sum(cs[d // e] / e for e in range(1, d + 1) if d % e == 0)
        n1[d] = F((-1) ** d, 8 * d) - rest
        print(d, cs[d], n1[d], flush=True)


def values():
    out = {
        "n1C(2)": n1C(2), "n1C(3)": n1C(3), "n1D(2)": n1D(2), "n1E(2)": n1E(2),
        "n1F(3)": n1F(3), "n1G(2)": n1G(2), "n1G(3)": n1G(3),
        "gamma1(2)": gamma1(2), "gamma1(3)": gamma1(3),
        "n2A(1,2)": n2A(1, 2), "n2A(2,1)": n2A(2, 1), "n2A(2,3)": n2A(2, 3),
        "n2B(1,1)": n2B(1, 1), "n2B(1,2)": n2B(1, 2), "n2B(2,3)": n2B(2, 3),
        "n2C(1,1)": n2C(1, 1), "n2C(1,2)": n2C(1, 2), "n2C(2,1)": n2C(2, 1),
        "n2D(1,1)": n2D(1, 1), "n2D(1,2)": n2D(1, 2),
        "n2E(1,2)": n2E(1, 2), "n2E(2,3)": n2E(2, 3),
        "gamma2(1,1)": gamma2(1, 1), "gamma2(1,2)": gamma2(1, 2),
        "Cmu(1,1)": Cmu(1, 1), "Cmu(1,2)": Cmu(1, 2), "Cmu(2,3)": Cmu(2, 3),
        "m3(1,1,1)": m3(1, 1, 1), "m3(1,1,2)": m3(1, 1, 2), "m3(2,1,1)": m3(2, 1, 1),
        "m3(1,2,3)": m3(1, 2, 3), "C3(1,1,3)": C3(1, 1, 3), "C3(2,3,1)": C3(2, 3, 1),
        "C3(1,1,1)": C3(1, 1, 1),
        "chern(3)": chern(3), "chern(4)": chern(4), "chern(10)": chern(10),
    }
    for k, v in out.items():
        print(k, v)


if __name__ == "__main__":
    if len(sys.argv) > 1 and sys.argv[1] == "table":
        table(int(sys.argv[2]))
    else:
        values()
