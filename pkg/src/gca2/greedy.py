"""Greedy elements x[a1, a2]: combinatorial and recursive constructions.

The combinatorial construction sums, over all compatible pairs (S1, S2) on
the maximal Dyck path D([a1]+, [a2]+), the weight

    c_{S1,S2} * x1^(|S2| - a1) * x2^(|S1| - a2),

where c_{S1,S2} multiplies one exchange-polynomial coefficient per edge
(rho_{S1(h)} for horizontal, vrho_{S2(v)} for vertical).  It works in both
coefficient modes and is the symbolic-mode definition of x[a1, a2].

The recursive construction (numeric mode only) fills the pointed coefficient
table c(p, q) in order of increasing p+q from c(0,0)=1: each entry is the
max of two truncated alternating sums over weak compositions, and for
a1, a2 >= 0 the branch selected by the sign of a1*q - a2*p must reproduce
that max, which is asserted during the fill.  One extra guard ring outside
the table bounds is computed and must be identically zero.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import product

from .coeffring import CoefficientMode
from .compat import compatible_structure, compatible_structure_h
from .dyckpath import DyckPath
from .laurent import LaurentPoly, SymbolicModeUnsupported
from .multinom import compositions_weighted, multinomial


class NotInAlgebra(ValueError):
    """greedy_expand exceeded its pass budget; input is not in the algebra."""


def pair_weight(mode: CoefficientMode, s1, s2):
    """Monomial coefficient attached to one compatible pair."""
    w = mode.one()
    for val in s1:
        w = w * mode.rho(val)
    for val in s2:
        w = w * mode.vrho(val)
    return w


def reflect_params(mode: CoefficientMode, axis: int, a1: int, a2: int) -> tuple[int, int]:
    """Parameter image of the reflection fixing x1 (axis 1) or x2 (axis 2)."""
    if axis == 1:
        return (a1, mode.d1 * max(a1, 0) - a2)
    if axis == 2:
        return (mode.d2 * max(a2, 0) - a1, a2)
    raise ValueError("axis must be 1 or 2")


@lru_cache(maxsize=None)
def greedy_combinatorial(mode: CoefficientMode, a1: int, a2: int) -> LaurentPoly:
    """The greedy element as a Laurent polynomial, built from compatible pairs.

    Pairs are summed per grading on the cheaper edge family: the partner
    edges outside its shadow contribute a full exchange-polynomial factor
    each, and the finitely many remote-shadow assignments are enumerated
    explicitly.
    """
    b1, b2 = max(a1, 0), max(a2, 0)
    path = DyckPath.build(b1, b2)
    d1, d2 = mode.d1, mode.d2
    one = mode.one()
    by_vertical = (d2 + 1) ** b2 <= (d1 + 1) ** b1
    if by_vertical:
        outer_vals = [mode.vrho(t) for t in range(d2 + 1)]
        inner_vals = [mode.rho(t) for t in range(d1 + 1)]
        outer_count, inner_d = b2, d1
        structure = lambda s: compatible_structure(path, s, d1)
    else:
        outer_vals = [mode.rho(t) for t in range(d1 + 1)]
        inner_vals = [mode.vrho(t) for t in range(d2 + 1)]
        outer_count, inner_d = b1, d2
        structure = lambda s: compatible_structure_h(path, s, d2)

    # (inner exchange polynomial as a z-polynomial) ** k, per free-edge count
    free_pows: dict[int, dict[int, object]] = {0: {0: one}}

    def free_factor(k: int) -> dict[int, object]:
        if k not in free_pows:
            prev = free_factor(k - 1)
            out: dict[int, object] = {}
            for e, c in prev.items():
                for t in range(inner_d + 1):
                    key = e + t
                    out[key] = out.get(key, 0) + c * inner_vals[t]
            free_pows[k] = out
        return free_pows[k]

    acc: dict[tuple[int, int], object] = {}
    for s_out in product(range(len(outer_vals)), repeat=outer_count):
        free, rsh_idx, valid = structure(s_out)
        c_out = one
        for val in s_out:
            c_out = c_out * outer_vals[val]
        base = free_factor(len(free))
        rpoly: dict[int, object] = {}
        for vals in valid:
            w = one
            for val in vals:
                w = w * inner_vals[val]
            k = sum(vals)
            rpoly[k] = rpoly.get(k, 0) + w
        m_out = sum(s_out)
        for q1, c1 in base.items():
            for q2, c2 in rpoly.items():
                m_in = q1 + q2
                # x1 carries |S2|, x2 carries |S1|
                key = (m_out - a1, m_in - a2) if by_vertical else (m_in - a1, m_out - a2)
                acc[key] = acc.get(key, 0) + c_out * c1 * c2
    return LaurentPoly(acc)


class GreedyTable:
    """Pointed coefficient table of one greedy element (numeric mode)."""

    __slots__ = ("point", "pmax", "qmax", "coeffs")

    def __init__(self, point, pmax, qmax, coeffs):
        self.point = point
        self.pmax = pmax
        self.qmax = qmax
        self.coeffs = coeffs  # {(p, q): positive int}

    def __eq__(self, other):
        return (isinstance(other, GreedyTable)
                and self.point == other.point and self.coeffs == other.coeffs)

    def __repr__(self):
        return f"GreedyTable(point={self.point}, entries={len(self.coeffs)})"

    def c(self, p: int, q: int) -> int:
        return self.coeffs.get((p, q), 0)

    def to_laurent(self) -> LaurentPoly:
        a1, a2 = self.point
        return LaurentPoly({(p - a1, q - a2): c for (p, q), c in self.coeffs.items()})


@lru_cache(maxsize=None)
def greedy_recursive(mode: CoefficientMode, a1: int, a2: int) -> GreedyTable:
    if not mode.is_numeric:
        raise SymbolicModeUnsupported("the greedy recursion needs an ordered "
                                      "coefficient ring; use the combinatorial "
                                      "construction in symbolic mode")
    d1, d2 = mode.d1, mode.d2
    p1, p2 = mode.p1, mode.p2
    pmax = d2 * max(a2, 0)
    qmax = d1 * max(a1, 0)
    guard = 1
    c: dict[tuple[int, int], int] = {(0, 0): 1}

    def term_k(p: int, q: int) -> int:
        if d2 == 0:
            return 0
        total = 0
        for k in range(1, p + 1):
            sign = 1 if (k - 1) % 2 == 0 else -1
            for parts in compositions_weighted(k, d2, p):
                w = sum((i + 1) * e for i, e in enumerate(parts))
                prev = c.get((p - w, q), 0)
                if prev == 0:
                    continue
                m = multinomial(a2 - q + k - 1, a2 - q - 1, parts)
                if m == 0:
                    continue
                coef = 1
                for i, e in enumerate(parts):
                    if e:
                        coef *= p2[i + 1] ** e
                total += sign * prev * coef * m
        return total

    def term_l(p: int, q: int) -> int:
        if d1 == 0:
            return 0
        total = 0
        for l in range(1, q + 1):
            sign = 1 if (l - 1) % 2 == 0 else -1
            for parts in compositions_weighted(l, d1, q):
                w = sum((i + 1) * e for i, e in enumerate(parts))
                prev = c.get((p, q - w), 0)
                if prev == 0:
                    continue
                m = multinomial(a1 - p + l - 1, a1 - p - 1, parts)
                if m == 0:
                    continue
                coef = 1
                for i, e in enumerate(parts):
                    if e:
                        coef *= p1[i + 1] ** e
                total += sign * prev * coef * m
        return total

    top_p = pmax + guard
    top_q = qmax + guard
    for s in range(1, top_p + top_q + 1):
        for p in range(min(s, top_p), -1, -1):
            q = s - p
            if q > top_q:
                continue
            t1 = max(term_k(p, q), 0)
            t2 = max(term_l(p, q), 0)
            val = t1 if t1 >= t2 else t2
            if a1 >= 0 and a2 >= 0:
                lhs = a1 * q
                rhs = a2 * p
                if lhs <= rhs and t1 != val:
                    raise AssertionError(
                        f"closed form disagrees with max at (p,q)=({p},{q})")
                if lhs >= rhs and t2 != val:
                    raise AssertionError(
                        f"closed form disagrees with max at (p,q)=({p},{q})")
            if val:
                if p > pmax or q > qmax:
                    raise AssertionError(
                        f"nonzero entry {val} in the guard ring at ({p},{q})")
                c[(p, q)] = val
    return GreedyTable((a1, a2), pmax, qmax, c)


def greedy_expand(mode: CoefficientMode, f: LaurentPoly) -> dict:
    """Expansion coefficients of f over the greedy elements.

    Repeatedly subtracts coeff * x[-e1, -e2] for every monomial on the lowest
    e1+e2 antidiagonal; each pass raises that level by at least one.  The
    pass budget is 10 * (antidiagonal span of f); running past it means f is
    not in the algebra.
    """
    if not f.terms:
        return {}
    levels = [e1 + e2 for e1, e2 in f.terms]
    budget = 10 * (max(levels) - min(levels) + 1)
    residual = f
    out: dict[tuple[int, int], object] = {}
    for _ in range(budget):
        if not residual.terms:
            return out
        lvl = min(e1 + e2 for e1, e2 in residual.terms)
        corners = sorted(e for e in residual.terms if e[0] + e[1] == lvl)
        for e1, e2 in corners:
            coef = residual.terms[(e1, e2)]
            out[(-e1, -e2)] = coef
            residual = residual - coef * greedy_combinatorial(mode, -e1, -e2)
    raise NotInAlgebra("pass budget exhausted before the residual vanished")
