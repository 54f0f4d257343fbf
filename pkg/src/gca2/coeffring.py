"""Exact coefficient arithmetic for exchange-polynomial coefficients.

A rank-2 context fixes two monic palindromic polynomials

    P1(z) = 1 + rho_1 z + ... + rho_{d1-1} z^{d1-1} + z^{d1}
    P2(z) = 1 + vrho_1 z + ... + vrho_{d2-1} z^{d2-1} + z^{d2}

whose inner coefficients are either concrete nonnegative integers (numeric
mode) or formal generators (symbolic mode).  Palindromy identifies rho_t with
rho_{d1-t}, so a generator index is always stored as min(t, d-t); indices 0
and d never create a symbol, they are the integer 1.

CoeffPoly is a multivariate polynomial in the generators over arbitrary
precision integers, stored as {monomial: int} with no zero entries.  A
monomial is a sorted tuple of (GeneratorId, exponent) pairs with positive
exponents; the empty tuple is the constant monomial.  Instances are never
mutated after construction and may be shared freely between threads.

JSON form of a coefficient: a list of monomial records
    {"rho": [e1..e_{d1-1}], "vrho": [e1..e_{d2-1}], "n": "<decimal integer>"}
where an omitted array means all-zero exponents.  Plain integers (numeric
mode) serialize as the single record {"n": "..."}.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping, NamedTuple, Union


class NotDivisible(ArithmeticError):
    """Exact division failed: the quotient does not exist over the ring."""


class MissingGenerator(KeyError):
    """An evaluation assignment does not cover every generator present."""


RHO = "rho"
VRHO = "vrho"
_FAMILIES = (RHO, VRHO)


class GeneratorId(NamedTuple):
    family: str  # "rho" or "vrho"
    index: int   # canonical, 1 <= index <= d//2

    @staticmethod
    def canonical(family: str, t: int, d: int) -> "GeneratorId":
        """Canonical id of the degree-t coefficient of a degree-d polynomial.

        Requires 1 <= t <= d-1 (the border coefficients are the constant 1
        and have no GeneratorId).
        """
        if family not in _FAMILIES:
            raise ValueError(f"unknown generator family {family!r}")
        if not 1 <= t <= d - 1:
            raise ValueError(f"index {t} out of range for degree {d}")
        return GeneratorId(family, min(t, d - t))


# A monomial: sorted tuple of (GeneratorId, positive exponent) pairs.
Mono = tuple
_ONE_MONO: Mono = ()

Coeff = Union[int, "CoeffPoly"]


class CoeffPoly:
    """Polynomial in the rho/vrho generators with integer coefficients."""

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[Mono, int] | None = None):
        self.terms = {m: c for m, c in (terms or {}).items() if c != 0}

    # -- constructors ------------------------------------------------------

    @classmethod
    def const(cls, n: int) -> "CoeffPoly":
        return cls({_ONE_MONO: n})

    @classmethod
    def generator(cls, gid: GeneratorId) -> "CoeffPoly":
        return cls({((gid, 1),): 1})

    @classmethod
    def rho(cls, t: int, d: int) -> "CoeffPoly":
        """Coefficient of z^t in a degree-d monic palindromic P, as a CoeffPoly."""
        if not 0 <= t <= d:
            raise ValueError(f"coefficient index {t} out of range for degree {d}")
        if t == 0 or t == d:
            return cls.const(1)
        return cls.generator(GeneratorId.canonical(RHO, t, d))

    @classmethod
    def vrho(cls, t: int, d: int) -> "CoeffPoly":
        if not 0 <= t <= d:
            raise ValueError(f"coefficient index {t} out of range for degree {d}")
        if t == 0 or t == d:
            return cls.const(1)
        return cls.generator(GeneratorId.canonical(VRHO, t, d))

    # -- ring structure ----------------------------------------------------

    @staticmethod
    def _coerce(other) -> "CoeffPoly | None":
        if isinstance(other, CoeffPoly):
            return other
        if isinstance(other, int):
            return CoeffPoly.const(other)
        return None

    def __add__(self, other) -> "CoeffPoly":
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        out = dict(self.terms)
        for m, c in other.terms.items():
            s = out.get(m, 0) + c
            if s:
                out[m] = s
            else:
                out.pop(m, None)
        return CoeffPoly(out)

    __radd__ = __add__

    def __neg__(self) -> "CoeffPoly":
        return CoeffPoly({m: -c for m, c in self.terms.items()})

    def __sub__(self, other) -> "CoeffPoly":
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "CoeffPoly":
        return (-self) + other

    def __mul__(self, other) -> "CoeffPoly":
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        out: dict[Mono, int] = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = _mono_mul(m1, m2)
                s = out.get(m, 0) + c1 * c2
                if s:
                    out[m] = s
                else:
                    del out[m]
        return CoeffPoly(out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "CoeffPoly":
        if n < 0:
            raise ValueError("negative power of a CoeffPoly")
        result = CoeffPoly.const(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base if n > 1 else base
            n >>= 1
        return result

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            if other == 0:
                return not self.terms
            return self.terms == {_ONE_MONO: other}
        if isinstance(other, CoeffPoly):
            return self.terms == other.terms
        return NotImplemented

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    # -- queries -----------------------------------------------------------

    def is_constant(self) -> bool:
        return not self.terms or self.terms.keys() == {_ONE_MONO}

    def const_value(self) -> int:
        if not self.terms:
            return 0
        if self.terms.keys() == {_ONE_MONO}:
            return self.terms[_ONE_MONO]
        raise ValueError("not a constant CoeffPoly")

    def generators(self) -> set[GeneratorId]:
        out: set[GeneratorId] = set()
        for m in self.terms:
            out.update(g for g, _ in m)
        return out

    # -- exact division ----------------------------------------------------

    def exact_div(self, other) -> "CoeffPoly":
        """Exact quotient self/other, or raise NotDivisible.

        Leading-term elimination under graded lex order on the generator
        exponents (rho generators before vrho, lower index first).
        """
        other = self._coerce(other)
        if other is None or not other.terms:
            raise ZeroDivisionError("division by zero CoeffPoly")
        gens = sorted(self.generators() | other.generators())
        order = {g: i for i, g in enumerate(gens)}

        def key(m: Mono):
            vec = [0] * len(gens)
            for g, e in m:
                vec[order[g]] = e
            return (sum(vec), tuple(vec))

        lead_b = max(other.terms, key=key)
        cb = other.terms[lead_b]
        rem = dict(self.terms)
        quot: dict[Mono, int] = {}
        while rem:
            lead_r = max(rem, key=key)
            cr = rem[lead_r]
            m = _mono_div(lead_r, lead_b)
            if m is None:
                raise NotDivisible("coefficient quotient is not polynomial")
            q, r = divmod(cr, cb)
            if r:
                raise NotDivisible("integer coefficient quotient is not exact")
            quot[m] = q
            for m2, c2 in other.terms.items():
                mm = _mono_mul(m, m2)
                s = rem.get(mm, 0) - q * c2
                if s:
                    rem[mm] = s
                else:
                    rem.pop(mm, None)
        return CoeffPoly(quot)

    # -- evaluation --------------------------------------------------------

    def eval(self, assignment: Mapping[GeneratorId, int]) -> int:
        total = 0
        for m, c in self.terms.items():
            v = c
            for g, e in m:
                if g not in assignment:
                    raise MissingGenerator(g)
                v *= assignment[g] ** e
            total += v
        return total

    # -- rendering ---------------------------------------------------------

    def __repr__(self) -> str:
        return f"CoeffPoly({self.render()})"

    def render(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for m in sorted(self.terms, key=_mono_sort_key, reverse=True):
            c = self.terms[m]
            factors = [f"{g.family}{g.index}" + (f"^{e}" if e > 1 else "")
                       for g, e in m]
            if not factors:
                parts.append(str(c))
            elif c == 1:
                parts.append("*".join(factors))
            elif c == -1:
                parts.append("-" + "*".join(factors))
            else:
                parts.append("*".join([str(c)] + factors))
        return " + ".join(parts)


def _mono_mul(m1: Mono, m2: Mono) -> Mono:
    if not m1:
        return m2
    if not m2:
        return m1
    d = dict(m1)
    for g, e in m2:
        d[g] = d.get(g, 0) + e
    return tuple(sorted(d.items()))


def _mono_div(m1: Mono, m2: Mono) -> Mono | None:
    if not m2:
        return m1
    d = dict(m1)
    for g, e in m2:
        r = d.get(g, 0) - e
        if r < 0:
            return None
        if r:
            d[g] = r
        else:
            d.pop(g, None)
    return tuple(sorted(d.items()))


def _mono_sort_key(m: Mono):
    return (sum(e for _, e in m), tuple((g, e) for g, e in m))


# -- named operation aliases -----------------------------------------

def cf_add(a: Coeff, b: Coeff) -> Coeff:
    if isinstance(a, int) and isinstance(b, int):
        return a + b
    return CoeffPoly._coerce(a) + b


def cf_mul(a: Coeff, b: Coeff) -> Coeff:
    if isinstance(a, int) and isinstance(b, int):
        return a * b
    return CoeffPoly._coerce(a) * b


def cf_exact_div(a: Coeff, b: Coeff) -> Coeff:
    if isinstance(a, int) and isinstance(b, int):
        if b == 0:
            raise ZeroDivisionError("division by zero")
        q, r = divmod(a, b)
        if r:
            raise NotDivisible(f"{a} is not divisible by {b}")
        return q
    return CoeffPoly._coerce(a).exact_div(b)


def cf_eval(a: Coeff, assignment: Mapping[GeneratorId, int]) -> int:
    if isinstance(a, int):
        return a
    return a.eval(assignment)


# -- coefficient mode ------------------------------------------------------

@dataclass(frozen=True)
class CoefficientMode:
    """Numeric (concrete integer coefficients) or symbolic (formal generators).

    p1/p2 are the full low-to-high coefficient tuples in numeric mode and
    None in symbolic mode.
    """

    d1: int
    d2: int
    p1: tuple[int, ...] | None
    p2: tuple[int, ...] | None

    @staticmethod
    def numeric(p1: Iterable[int], p2: Iterable[int]) -> "CoefficientMode":
        p1 = tuple(p1)
        p2 = tuple(p2)
        for name, p in (("p1", p1), ("p2", p2)):
            if len(p) < 1:
                raise ValueError(f"{name} must have at least the constant term")
            if any(not isinstance(c, int) or c < 0 for c in p):
                raise ValueError(f"{name} coefficients must be nonnegative integers")
            if p[0] != 1 or p[-1] != 1:
                raise ValueError(f"{name} must be monic with constant term 1")
            d = len(p) - 1
            if any(p[t] != p[d - t] for t in range(d + 1)):
                raise ValueError(f"{name} must be palindromic")
        return CoefficientMode(len(p1) - 1, len(p2) - 1, p1, p2)

    @staticmethod
    def symbolic(d1: int, d2: int) -> "CoefficientMode":
        if d1 < 0 or d2 < 0:
            raise ValueError("degrees must be nonnegative")
        return CoefficientMode(d1, d2, None, None)

    @property
    def is_numeric(self) -> bool:
        return self.p1 is not None

    def one(self) -> Coeff:
        return 1 if self.is_numeric else CoeffPoly.const(1)

    def rho(self, t: int) -> Coeff:
        """Coefficient of z^t in P1."""
        if self.is_numeric:
            return self.p1[t]
        return CoeffPoly.rho(t, self.d1)

    def vrho(self, t: int) -> Coeff:
        if self.is_numeric:
            return self.p2[t]
        return CoeffPoly.vrho(t, self.d2)

    def p1_coeffs(self) -> tuple:
        return self.p1 if self.is_numeric else tuple(
            CoeffPoly.rho(t, self.d1) for t in range(self.d1 + 1))

    def p2_coeffs(self) -> tuple:
        return self.p2 if self.is_numeric else tuple(
            CoeffPoly.vrho(t, self.d2) for t in range(self.d2 + 1))


# -- JSON ------------------------------------------------------------------

def coeff_to_json(c: Coeff, d1: int, d2: int) -> list:
    if isinstance(c, int):
        return [{"n": str(c)}]
    records = []
    for m in sorted(c.terms, key=lambda m: _mono_arrays(m, d1, d2)):
        rho_arr, vrho_arr = _mono_arrays(m, d1, d2)
        rec: dict = {}
        if any(rho_arr):
            rec["rho"] = list(rho_arr)
        if any(vrho_arr):
            rec["vrho"] = list(vrho_arr)
        rec["n"] = str(c.terms[m])
        records.append(rec)
    return records


def _mono_arrays(m: Mono, d1: int, d2: int) -> tuple[tuple[int, ...], tuple[int, ...]]:
    rho_arr = [0] * max(d1 - 1, 0)
    vrho_arr = [0] * max(d2 - 1, 0)
    for g, e in m:
        arr = rho_arr if g.family == RHO else vrho_arr
        arr[g.index - 1] += e
    return tuple(rho_arr), tuple(vrho_arr)


def coeff_from_json(records: list, mode: CoefficientMode) -> Coeff:
    total: Coeff = 0 if mode.is_numeric else CoeffPoly()
    for rec in records:
        n = int(rec["n"])
        rho_arr = rec.get("rho", [])
        vrho_arr = rec.get("vrho", [])
        if mode.is_numeric:
            if any(rho_arr) or any(vrho_arr):
                raise ValueError("symbolic coefficient in numeric mode")
            total = total + n
            continue
        mono: Coeff = CoeffPoly.const(n)
        for t, e in enumerate(rho_arr, start=1):
            if e:
                mono = mono * CoeffPoly.rho(t, mode.d1) ** e
        for t, e in enumerate(vrho_arr, start=1):
            if e:
                mono = mono * CoeffPoly.vrho(t, mode.d2) ** e
        total = total + mono
    return total
