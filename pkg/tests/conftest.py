"""Shared fixtures and independent oracle helpers.

The golden expectations (reference cluster variables, the sixteen diagram
groups for D(5,2)) are rebuilt here with a self-contained dict-based
polynomial toolkit so they do not depend on the library under test.
"""

from __future__ import annotations

import pytest

from gca2.coeffring import CoefficientMode


# -- tiny independent polynomial toolkit: dict[(e1, e2)] -> int --------------

def pconst(n: int) -> dict:
    return {(0, 0): n} if n else {}


def pmono(e1: int, e2: int, c: int = 1) -> dict:
    return {(e1, e2): c} if c else {}


def padd(*polys: dict) -> dict:
    out: dict = {}
    for p in polys:
        for e, c in p.items():
            s = out.get(e, 0) + c
            if s:
                out[e] = s
            else:
                del out[e]
    return out


def pmul(a: dict, b: dict) -> dict:
    out: dict = {}
    for (a1, a2), ca in a.items():
        for (b1, b2), cb in b.items():
            e = (a1 + b1, a2 + b2)
            s = out.get(e, 0) + ca * cb
            if s:
                out[e] = s
            else:
                del out[e]
    return out


def ppow(a: dict, n: int) -> dict:
    out = pconst(1)
    for _ in range(n):
        out = pmul(out, a)
    return out


def pscale(a: dict, n: int) -> dict:
    return {e: n * c for e, c in a.items()} if n else {}


# P = 1 + x2 + x2^2, the bracket building block of the golden variables
_P = padd(pconst(1), pmono(0, 1), pmono(0, 2))


def expected_x3() -> dict:
    """x1^-1 (1 + x2 + x2^2)."""
    return pmul(pmono(-1, 0), _P)


def expected_x4() -> dict:
    """x1^-3 x2^-1 [x1^3 + x1^2 P + x1 P^2 + P^3]."""
    bracket = padd(pmono(3, 0), pmul(pmono(2, 0), _P),
                   pmul(pmono(1, 0), ppow(_P, 2)), ppow(_P, 3))
    return pmul(pmono(-3, -1), bracket)


def expected_x5() -> dict:
    """x1^-5 x2^-2 [x1^6 + x1^5 (2+x2) + x1^4 (3+4x2+4x2^2+x2^3)
    + x1^3 (4+9x2+14x2^2+11x2^3+6x2^4+x2^5) + 3 x1^2 P^3 + 2 x1 P^4 + P^5]."""
    row4 = padd(pconst(3), pmono(0, 1, 4), pmono(0, 2, 4), pmono(0, 3))
    row3 = padd(pconst(4), pmono(0, 1, 9), pmono(0, 2, 14), pmono(0, 3, 11),
                pmono(0, 4, 6), pmono(0, 5))
    bracket = padd(
        pmono(6, 0),
        pmul(pmono(5, 0), padd(pconst(2), pmono(0, 1))),
        pmul(pmono(4, 0), row4),
        pmul(pmono(3, 0), row3),
        pscale(pmul(pmono(2, 0), ppow(_P, 3)), 3),
        pscale(pmul(pmono(1, 0), ppow(_P, 4)), 2),
        ppow(_P, 5),
    )
    return pmul(pmono(-5, -2), bracket)


# -- the sixteen golden diagram groups for D(5,2), d = (2,3) -----------------
# Keyed by (S2(v1), S2(v2)); values are the per-edge sets of admissible
# S1 values for h1..h5.
DIAGRAMS_5_2 = {
    (0, 0): ({0, 1, 2}, {0, 1, 2}, {0, 1, 2}, {0, 1, 2}, {0, 1, 2}),
    (1, 0): ({0, 1, 2}, {0, 1, 2}, {0}, {0, 1, 2}, {0, 1, 2}),
    (2, 0): ({0, 1, 2}, {0}, {0}, {0, 1, 2}, {0, 1, 2}),
    (3, 0): ({0}, {0}, {0}, {0, 1, 2}, {0, 1, 2}),
    (0, 1): ({0, 1, 2}, {0, 1, 2}, {0, 1, 2}, {0, 1, 2}, {0}),
    (1, 1): ({0, 1, 2}, {0, 1, 2}, {0}, {0, 1, 2}, {0}),
    (2, 1): ({0, 1, 2}, {0}, {0}, {0, 1, 2}, {0}),
    (3, 1): ({0}, {0}, {0}, {0, 1, 2}, {0}),
    (0, 2): ({0, 1, 2}, {0, 1, 2}, {0, 1, 2}, {0}, {0}),
    (1, 2): ({0, 1, 2}, {0, 1, 2}, {0}, {0}, {0}),
    (2, 2): ({0, 1, 2}, {0}, {0}, {0}, {0}),
    (3, 2): ({0}, {0}, {0}, {0}, {0}),
    (0, 3): ({0, 1, 2}, {0, 1, 2}, {0, 1}, {0}, {0}),
    (1, 3): ({0, 1, 2}, {0, 1}, {0}, {0}, {0}),
    (2, 3): ({0, 1}, {0}, {0}, {0}, {0}),
    (3, 3): ({0}, {0}, {0}, {0}, {0}),
}


ALL_ONES = {
    (1, 1): CoefficientMode.numeric((1, 1), (1, 1)),
    (2, 2): CoefficientMode.numeric((1, 1, 1), (1, 1, 1)),
    (2, 3): CoefficientMode.numeric((1, 1, 1), (1, 1, 1, 1)),
    (3, 3): CoefficientMode.numeric((1, 1, 1, 1), (1, 1, 1, 1)),
    (1, 2): CoefficientMode.numeric((1, 1), (1, 1, 1)),
    (0, 2): CoefficientMode.numeric((1,), (1, 1, 1)),
    (3, 0): CoefficientMode.numeric((1, 1, 1, 1), (1,)),
}


@pytest.fixture
def mode23() -> CoefficientMode:
    return ALL_ONES[(2, 3)]


@pytest.fixture
def sym23() -> CoefficientMode:
    return CoefficientMode.symbolic(2, 3)
