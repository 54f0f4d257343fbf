"""Sparse bivariate Laurent polynomials over the exchange-coefficient ring.

A LaurentPoly maps exponent pairs (e1, e2) to nonzero coefficients; the
coefficients are plain integers in numeric mode and CoeffPoly in symbolic
mode.  Two polynomials are equal iff their term dictionaries are equal.
Instances are never mutated after construction.

Exact division eliminates the *minimal* monomial of the remainder under the
graded-lex order (degree first, then e1).  Every divisor that appears in
this artifact (cluster variables, greedy elements, powers of an exchange
polynomial) is pointed, i.e. has a unique minimal monomial with coefficient
1, which makes each elimination step division-free; the procedure is valid
and deterministic for any divisor.

JSON form: {"terms": [{"e": [e1, e2], "c": <coefficient JSON>}, ...]} with
terms sorted by (e1, e2) ascending; see coeffring for the coefficient JSON.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass
from typing import Mapping, Sequence

from .coeffring import (CoeffPoly, CoefficientMode, NotDivisible,
                        cf_exact_div, coeff_from_json, coeff_to_json)


class NotLaurent(ArithmeticError):
    """A substitution or division left a genuine denominator."""


class NotPointed(ValueError):
    """Support has no unique corner, or the corner coefficient is not 1."""


class SymbolicModeUnsupported(TypeError):
    """Operation defined only for concrete integer coefficients."""


def _is_zero(c) -> bool:
    return not c if isinstance(c, CoeffPoly) else c == 0


def _grlex(e) -> tuple[int, int]:
    return (e[0] + e[1], e[0])


class LaurentPoly:
    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[tuple[int, int], object] | None = None):
        self.terms = {e: c for e, c in (terms or {}).items() if not _is_zero(c)}

    # -- constructors -------------------------------------------------------

    @classmethod
    def zero(cls) -> "LaurentPoly":
        return cls()

    @classmethod
    def monomial(cls, e1: int, e2: int, c=1) -> "LaurentPoly":
        return cls({(e1, e2): c})

    @classmethod
    def const(cls, c) -> "LaurentPoly":
        return cls({(0, 0): c})

    @classmethod
    def var(cls, which: int) -> "LaurentPoly":
        if which not in (1, 2):
            raise ValueError("variable must be 1 or 2")
        return cls.monomial(1, 0) if which == 1 else cls.monomial(0, 1)

    # -- ring structure ------------------------------------------------------

    def __add__(self, other) -> "LaurentPoly":
        other = _coerce(other)
        if other is None:
            return NotImplemented
        out = dict(self.terms)
        for e, c in other.terms.items():
            s = out.get(e, 0) + c
            if _is_zero(s):
                out.pop(e, None)
            else:
                out[e] = s
        return LaurentPoly(out)

    __radd__ = __add__

    def __neg__(self) -> "LaurentPoly":
        return LaurentPoly({e: -c for e, c in self.terms.items()})

    def __sub__(self, other) -> "LaurentPoly":
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "LaurentPoly":
        return (-self) + other

    def __mul__(self, other) -> "LaurentPoly":
        other = _coerce(other)
        if other is None:
            return NotImplemented
        if len(self.terms) < len(other.terms):
            small, big = self.terms, other.terms
        else:
            small, big = other.terms, self.terms
        out: dict = {}
        for (a1, a2), c1 in small.items():
            for (b1, b2), c2 in big.items():
                e = (a1 + b1, a2 + b2)
                s = out.get(e, 0) + c1 * c2
                if _is_zero(s):
                    out.pop(e, None)
                else:
                    out[e] = s
        return LaurentPoly(out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "LaurentPoly":
        if n < 0:
            raise ValueError("lp_pow requires n >= 0")
        result = LaurentPoly.monomial(0, 0)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base if n > 1 else base
            n >>= 1
        return result

    def __eq__(self, other) -> bool:
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return self.terms == other.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __repr__(self) -> str:
        return f"LaurentPoly({render(self)})"

    # -- queries -------------------------------------------------------------

    def min_exponents(self) -> tuple[int, int]:
        if not self.terms:
            raise ValueError("zero polynomial has no support")
        return (min(e1 for e1, _ in self.terms), min(e2 for _, e2 in self.terms))

    def shifted(self, s1: int, s2: int) -> "LaurentPoly":
        return LaurentPoly({(e1 + s1, e2 + s2): c for (e1, e2), c in self.terms.items()})

    def swap_vars(self) -> "LaurentPoly":
        return LaurentPoly({(e2, e1): c for (e1, e2), c in self.terms.items()})

    # -- exact division --------------------------------------------------------

    def exact_div(self, other: "LaurentPoly") -> "LaurentPoly":
        other = _coerce(other)
        if other is None or not other.terms:
            raise ZeroDivisionError("division by the zero Laurent polynomial")
        if not self.terms:
            return LaurentPoly.zero()
        fm1, fm2 = self.min_exponents()
        gm1, gm2 = other.min_exponents()
        f = self.shifted(-fm1, -fm2).terms
        g = other.shifted(-gm1, -gm2).terms
        g_low = min(g, key=_grlex)
        g_low_c = g[g_low]
        g_rest = [(e, c) for e, c in g.items() if e != g_low]
        gl1, gl2 = g_low
        quot: dict = {}
        rem = dict(f)
        heap = [(_grlex(e), e) for e in rem]
        heapq.heapify(heap)
        while rem:
            while True:
                _, e = heapq.heappop(heap)
                if e in rem:
                    break
            c = rem.pop(e)
            q1, q2 = e[0] - gl1, e[1] - gl2
            if q1 < 0 or q2 < 0:
                raise NotDivisible("quotient support escapes the polynomial cone")
            qc = c if g_low_c == 1 else cf_exact_div(c, g_low_c)
            quot[(q1, q2)] = qc
            for (b1, b2), gc in g_rest:
                ee = (q1 + b1, q2 + b2)
                s = rem.get(ee, 0) - qc * gc
                if _is_zero(s):
                    rem.pop(ee, None)
                else:
                    if ee not in rem:
                        heapq.heappush(heap, (_grlex(ee), ee))
                    rem[ee] = s
        return LaurentPoly(quot).shifted(fm1 - gm1, fm2 - gm2)


def _coerce(x) -> LaurentPoly | None:
    if isinstance(x, LaurentPoly):
        return x
    if isinstance(x, (int, CoeffPoly)):
        return LaurentPoly.const(x)
    return None


# -- named operations ---------------------------------------------------

def lp_add(f: LaurentPoly, g: LaurentPoly) -> LaurentPoly:
    return f + g


def lp_mul(f, g) -> LaurentPoly:
    r = _coerce(f) * g
    return r


def lp_pow(f: LaurentPoly, n: int) -> LaurentPoly:
    return f ** n


def lp_exact_div(f: LaurentPoly, g: LaurentPoly) -> LaurentPoly:
    return f.exact_div(g)


def lp_eval_univariate(p: Sequence, arg: LaurentPoly) -> LaurentPoly:
    """p[0] + p[1]*arg + ... evaluated by Horner's rule; p must be nonempty."""
    if len(p) == 0:
        raise ValueError("empty coefficient list")
    acc = LaurentPoly.const(p[-1])
    for c in reversed(p[:-1]):
        acc = acc * arg + LaurentPoly.const(c)
    return acc


def lp_substitute_ratio(f: LaurentPoly, var: int, numerator: LaurentPoly) -> LaurentPoly:
    """Substitute x_var -> numerator / y and return the result with y in slot var.

    numerator must involve only the other variable and have a nonzero
    constant term (exchange polynomials do: their constant term is 1).
    Each slice of f with x_var-exponent e picks up numerator**e; negative e
    means an exact univariate division, and a failed division raises
    NotLaurent.
    """
    if var not in (1, 2):
        raise ValueError("variable must be 1 or 2")
    sel = 0 if var == 1 else 1
    oth = 1 - sel
    num: dict[int, object] = {}
    for e, c in numerator.terms.items():
        if e[sel] != 0:
            raise ValueError("numerator must involve only the other variable")
        num[e[oth]] = c
    if not num:
        raise ZeroDivisionError("numerator is zero")
    m0 = min(num)  # pure monomial factor of the numerator

    slices: dict[int, dict[int, object]] = {}
    for e, c in f.terms.items():
        slices.setdefault(e[sel], {})[e[oth]] = c

    num_list = _dense(num, m0)
    pow_cache: dict[int, list] = {0: [1]}

    def num_pow(k: int) -> list:
        if k not in pow_cache:
            pow_cache[k] = _uni_mul(num_pow(k - 1), num_list)
        return pow_cache[k]

    out: dict[tuple[int, int], object] = {}
    for e, sl in sorted(slices.items()):
        if e >= 0:
            res = _uni_mul_sparse(sl, num_pow(e))
        else:
            res = _uni_exact_div(sl, num_pow(-e))
        for eo, c in res.items():
            key = (-e, eo + e * m0) if var == 1 else (eo + e * m0, -e)
            out[key] = c
    return LaurentPoly(out)


def _dense(d: dict[int, object], lo: int = 0) -> list:
    top = max(d)
    return [d.get(i, 0) for i in range(lo, top + 1)]


def _uni_mul(a: list, b: list) -> list:
    out = [0] * (len(a) + len(b) - 1)
    for i, ca in enumerate(a):
        if _is_zero(ca):
            continue
        for j, cb in enumerate(b):
            if _is_zero(cb):
                continue
            out[i + j] = out[i + j] + ca * cb
    return out


def _uni_mul_sparse(sl: dict[int, object], b: list) -> dict[int, object]:
    out: dict[int, object] = {}
    for e, c in sl.items():
        for j, cb in enumerate(b):
            if _is_zero(cb):
                continue
            k = e + j
            s = out.get(k, 0) + c * cb
            if _is_zero(s):
                out.pop(k, None)
            else:
                out[k] = s
    return out


def _uni_exact_div(sl: dict[int, object], b: list) -> dict[int, object]:
    """Exact quotient of a sparse univariate slice by b with b[0] != 0."""
    lo = min(sl)
    hi = max(sl)
    deg_b = len(b) - 1
    deg_q = hi - lo - deg_b
    if deg_q < 0:
        raise NotLaurent("slice shorter than the divisor")
    b0 = b[0]
    work = [sl.get(lo + i, 0) for i in range(hi - lo + 1)]
    quot = [0] * (deg_q + 1)
    for i in range(deg_q + 1):
        c = work[i]
        if _is_zero(c):
            continue
        if not b0 == 1:
            try:
                c = cf_exact_div(c, b0)
            except NotDivisible as exc:
                raise NotLaurent("univariate division leaves a remainder") from exc
        quot[i] = c
        for j in range(1, deg_b + 1):
            work[i + j] = work[i + j] - c * b[j]
        work[i] = 0
    if any(not _is_zero(c) for c in work):
        raise NotLaurent("univariate division leaves a remainder")
    return {lo + i: c for i, c in enumerate(quot) if not _is_zero(c)}


@dataclass(frozen=True)
class PointedForm:
    point: tuple[int, int]
    coeffs: dict  # (p, q) -> coefficient, with coeffs[(0,0)] == 1

    def to_laurent(self) -> LaurentPoly:
        a1, a2 = self.point
        return LaurentPoly({(p - a1, q - a2): c for (p, q), c in self.coeffs.items()})


def lp_to_pointed(f: LaurentPoly) -> PointedForm:
    if not f.terms:
        raise NotPointed("zero polynomial is not pointed")
    m1, m2 = f.min_exponents()
    corner = f.terms.get((m1, m2))
    if corner is None:
        raise NotPointed("support has no unique minimal corner")
    if not corner == 1:
        raise NotPointed(f"corner coefficient is {corner!r}, not 1")
    coeffs = {(e1 - m1, e2 - m2): c for (e1, e2), c in f.terms.items()}
    return PointedForm(point=(-m1, -m2), coeffs=coeffs)


def lp_is_positive(f: LaurentPoly) -> bool:
    """True iff f is nonzero with all integer coefficients >= 0 (numeric mode)."""
    if any(isinstance(c, CoeffPoly) for c in f.terms.values()):
        raise SymbolicModeUnsupported("positivity is decided in numeric mode only")
    if not f.terms:
        return False
    return all(c >= 0 for c in f.terms.values())


# -- serialization and rendering ----------------------------------------------

def to_json(f: LaurentPoly, mode: CoefficientMode) -> dict:
    return {"terms": [{"e": [e1, e2], "c": coeff_to_json(c, mode.d1, mode.d2)}
                      for (e1, e2), c in sorted(f.terms.items())]}


def from_json(data: dict, mode: CoefficientMode) -> LaurentPoly:
    terms = {}
    for rec in data["terms"]:
        e1, e2 = rec["e"]
        terms[(int(e1), int(e2))] = coeff_from_json(rec["c"], mode)
    return LaurentPoly(terms)


def render(f: LaurentPoly) -> str:
    if not f.terms:
        return "0"
    parts = []
    for (e1, e2), c in sorted(f.terms.items()):
        mono = "*".join(s for s in (_var_str("x1", e1), _var_str("x2", e2)) if s)
        parts.append(_term_str(c, mono))
    return " + ".join(parts)


def _var_str(name: str, e: int) -> str:
    if e == 0:
        return ""
    return name if e == 1 else f"{name}^{e}"


def _term_str(c, mono: str) -> str:
    if isinstance(c, CoeffPoly):
        if c.is_constant():
            return _term_str(c.const_value(), mono)
        cs = c.render()
        if len(c.terms) > 1:
            cs = f"({cs})"
        return f"{cs}*{mono}" if mono else cs
    if not mono:
        return str(c)
    if c == 1:
        return mono
    if c == -1:
        return f"-{mono}"
    return f"{c}*{mono}"
