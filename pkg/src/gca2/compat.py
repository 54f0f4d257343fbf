"""Graded compatible pairs on a maximal Dyck path.

A horizontal grading S1 assigns an integer in [0, d1] to every horizontal
edge, a vertical grading S2 likewise on vertical edges; gradings are plain
tuples indexed by edge number minus one.  The pair (S1, S2) is compatible
when for every horizontal edge h and vertical edge v some edge e on the
(possibly wrapping) path from h to v witnesses one of

  HGC: the subpath he is a proper prefix of hv and its vertical-edge count
       equals the sum of S1 over its horizontal edges;
  VGC: the subpath ev is a proper suffix of hv and its horizontal-edge count
       equals the sum of S2 over its vertical edges.

The shadow machinery gives an equivalent local criterion: the shadow of S2
is the union over vertical edges v of the minimal suffix paths realizing
VGC; the remote shadow drops, for each v, up to S2(v) of the same-height
horizontal edges just before v.  A grading S1 is compatible with S2 iff it
vanishes on shadow minus remote shadow, and the pair conditions hold for
edges of the remote shadow against the support of S2.  Everything here is
exhaustively cross-checked against the raw definition in the test suite.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Iterable, Sequence

from .dyckpath import HORIZONTAL, VERTICAL, DyckPath, EdgeRef, Subpath


class CriterionFails(ValueError):
    """The remote-shadow block nonemptiness criterion does not hold."""


class RTooSmall(ValueError):
    """Reflection order r below max grading value or ceil(a1/a2)."""


class NotInRemoteSupport(ValueError):
    """omega() applied to a grading not supported inside the remote shadow."""


class _WholeLoop:
    """Sentinel: a local shadow that needs more than one full loop."""

    def __repr__(self) -> str:
        return "WHOLE_LOOP"


WHOLE_LOOP = _WholeLoop()

Grading = tuple


@dataclass(frozen=True)
class ShadowReport:
    shadow: frozenset
    remote_shadow: frozenset
    local_paths: dict        # EdgeRef -> Subpath or WHOLE_LOOP
    rsh_partition: dict      # (j, depth) or (k, height) -> tuple of EdgeRef


# -- shadow statistics ------------------------------------------------------

def fstat_h(path: DyckPath, s1: Grading, sub: Subpath) -> int:
    """f_{S1}(sub) = sum of S1 over horizontal edges minus vertical count."""
    total = 0
    for p in path.positions(sub):
        if path.kinds[p] == HORIZONTAL:
            total += s1[path.indices[p] - 1]
        else:
            total -= 1
    return total


def fstat_v(path: DyckPath, s2: Grading, sub: Subpath) -> int:
    total = 0
    for p in path.positions(sub):
        if path.kinds[p] == VERTICAL:
            total += s2[path.indices[p] - 1]
        else:
            total -= 1
    return total


# -- first-zero walks (shared by compatibility and local shadows) -----------

def _first_zero_forward(path: DyckPath, s1: Grading, j: int) -> int | None:
    """Distance from h_j to the nearest e with f_{S1}(h_j e) = 0, else None."""
    start = path.pos_h[j - 1]
    f = 0
    n = path.n
    kinds = path.kinds
    indices = path.indices
    for t in range(n):
        p = start + t
        if p >= n:
            p -= n
        if kinds[p] == HORIZONTAL:
            f += s1[indices[p] - 1]
        else:
            f -= 1
        if f == 0:
            return t
    return None


def _first_zero_backward(path: DyckPath, s2: Grading, k: int) -> int | None:
    """Distance back from v_k to the nearest e with f_{S2}(e v_k) = 0."""
    start = path.pos_v[k - 1]
    f = 0
    n = path.n
    kinds = path.kinds
    indices = path.indices
    for t in range(n):
        p = start - t
        if p < 0:
            p += n
        if kinds[p] == VERTICAL:
            f += s2[indices[p] - 1]
        else:
            f -= 1
        if f == 0:
            return t
    return None


# -- compatibility -----------------------------------------------------------

def is_compatible(path: DyckPath, s1: Grading, s2: Grading) -> bool:
    if len(s1) != path.a1 or len(s2) != path.a2:
        raise ValueError("grading length does not match the path")
    if path.a1 == 0 or path.a2 == 0:
        return True
    fz1 = [_first_zero_forward(path, s1, j) for j in range(1, path.a1 + 1)]
    fz2 = [_first_zero_backward(path, s2, k) for k in range(1, path.a2 + 1)]
    return _pairs_ok(path, fz1, fz2, range(1, path.a1 + 1), range(1, path.a2 + 1))


def _pairs_ok(path, fz1, fz2, hs, vs) -> bool:
    n = path.n
    for j in hs:
        zh = fz1[j - 1]
        ph = path.pos_h[j - 1]
        for k in vs:
            dist = (path.pos_v[k - 1] - ph) % n
            zv = fz2[k - 1]
            if (zh is None or zh >= dist) and (zv is None or zv >= dist):
                return False
    return True


# -- local shadows and shadow reports ----------------------------------------

def local_shadow_h(path: DyckPath, s1: Grading, j: int):
    """Minimal path h_j..e with zero statistic, or WHOLE_LOOP."""
    t = _first_zero_forward(path, s1, j)
    if t is None:
        return WHOLE_LOOP
    start = path.pos_h[j - 1]
    return Subpath(path.edge_at(start), path.edge_at(start + t))


def local_shadow_v(path: DyckPath, s2: Grading, k: int):
    t = _first_zero_backward(path, s2, k)
    if t is None:
        return WHOLE_LOOP
    end = path.pos_v[k - 1]
    return Subpath(path.edge_at(end - t), path.edge_at(end))


def _depth_run(path: DyckPath, d: int) -> list[EdgeRef]:
    """Vertical edges of depth d, in path order (just after h_d)."""
    return [EdgeRef(VERTICAL, k) for k in range(1, path.a2 + 1)
            if path.depth(k) == d]


def _height_run(path: DyckPath, ell: int) -> list[EdgeRef]:
    """Horizontal edges of height ell, in path order."""
    return [EdgeRef(HORIZONTAL, j) for j in range(1, path.a1 + 1)
            if path.height(j) == ell]


def shadow_report_h(path: DyckPath, s1: Grading) -> ShadowReport:
    local_paths: dict = {}
    local_sets: dict = {}
    shadow: set[EdgeRef] = set()
    all_v = frozenset(EdgeRef(VERTICAL, k) for k in range(1, path.a2 + 1))
    for j in range(1, path.a1 + 1):
        h = EdgeRef(HORIZONTAL, j)
        sub = local_shadow_h(path, s1, j)
        local_paths[h] = sub
        if sub is WHOLE_LOOP:
            local_sets[h] = all_v
        else:
            local_sets[h] = frozenset(e for e in path.subpath_edges(sub)
                                      if e.kind == VERTICAL)
        shadow |= local_sets[h]
    remote = set(shadow)
    for d in range(1, path.a1 + 1):
        cut = s1[d - 1]
        if cut:
            for v in _depth_run(path, d)[:cut]:
                remote.discard(v)
    partition = _partition(path, remote, local_sets,
                           key_of=lambda v: path.depth(v.index),
                           forward=True)
    return ShadowReport(frozenset(shadow), frozenset(remote), local_paths, partition)


def shadow_report_v(path: DyckPath, s2: Grading) -> ShadowReport:
    local_paths: dict = {}
    local_sets: dict = {}
    shadow: set[EdgeRef] = set()
    all_h = frozenset(EdgeRef(HORIZONTAL, j) for j in range(1, path.a1 + 1))
    for k in range(1, path.a2 + 1):
        v = EdgeRef(VERTICAL, k)
        sub = local_shadow_v(path, s2, k)
        local_paths[v] = sub
        if sub is WHOLE_LOOP:
            local_sets[v] = all_h
        else:
            local_sets[v] = frozenset(e for e in path.subpath_edges(sub)
                                      if e.kind == HORIZONTAL)
        shadow |= local_sets[v]
    remote = set(shadow)
    for ell in range(1, path.a2 + 1):
        cut = s2[ell - 1]
        if cut:
            run = _height_run(path, ell - 1)
            before = [h for h in run if path.pos(h) < path.pos_v[ell - 1]]
            for h in reversed(before[-cut:] if cut <= len(before) else before):
                remote.discard(h)
    partition = _partition(path, remote, local_sets,
                           key_of=lambda h: path.height(h.index),
                           forward=False)
    return ShadowReport(frozenset(shadow), frozenset(remote), local_paths, partition)


def _partition(path, remote, local_sets, key_of, forward) -> dict:
    """Group remote-shadow edges by (owner index, depth/height).

    The owner of an edge e is the support edge whose local shadow contains e
    at the shortest path distance (forward: owner comes before e, backward:
    owner comes after e).
    """
    n = path.n
    blocks: dict = {}
    for e in sorted(remote, key=lambda e: path.pos(e)):
        pe = path.pos(e)
        best = None
        best_dist = None
        for owner, members in local_sets.items():
            if e not in members:
                continue
            po = path.pos(owner)
            dist = (pe - po) % n if forward else (po - pe) % n
            if best_dist is None or dist < best_dist:
                best_dist = dist
                best = owner
        blocks.setdefault((best.index, key_of(e)), []).append(e)
    return {key: tuple(edges) for key, edges in blocks.items()}


# -- remote shadow block sizes (closed formula) -------------------------------

def _between(a: int, lo: int, hi: int) -> list[int]:
    """Canonical indices strictly between lo and hi walking forward mod a.

    When lo and hi name the same edge the walk spans the whole loop, which
    is how the wrapped paths of the block criteria are read on the torus.
    """
    out = []
    t = lo
    for _ in range(a - 1):
        t += 1
        if (t - hi) % a == 0:
            break
        out.append((t - 1) % a + 1)
    return out


def rsh_block_size_h(path: DyckPath, s1: Grading, j: int, d: int) -> int:
    """|rsh(S1)_{j;d}| by the min-of-min formula; CriterionFails otherwise."""
    a1 = path.a1
    if not (1 <= j <= a1 and 1 <= d <= a1) or j == d:
        raise CriterionFails(f"no block at (j={j}, d={d})")
    hj = path.h(j)
    hd1 = path.h(d + 1)
    between = [EdgeRef(HORIZONTAL, t) for t in _between(a1, j, d + 1)]
    vals = []
    for h in between:
        neg_f_to_end = -fstat_h(path, s1, Subpath(h, hd1, include_end=False))
        f_from_start = fstat_h(path, s1, Subpath(hj, h, include_end=False))
        if not (neg_f_to_end > 0 and f_from_start > 0):
            raise CriterionFails(
                f"criterion fails at {h} for (j={j}, d={d})")
        vals.append(min(neg_f_to_end, f_from_start))
    if not vals:
        raise CriterionFails(f"no horizontal edges strictly between (j={j}, d={d})")
    return min(vals)


def rsh_block_size_v(path: DyckPath, s2: Grading, k: int, ell: int) -> int:
    """|rsh(S2)_{k;ell}| for 0 <= ell < a2, 0 < k <= a2, k != ell + 1."""
    a2 = path.a2
    if not (0 <= ell < a2 and 1 <= k <= a2) or k == ell + 1:
        raise CriterionFails(f"no block at (k={k}, ell={ell})")
    vl = path.v(ell if ell >= 1 else a2)
    vk = path.v(k)
    between = [EdgeRef(VERTICAL, t) for t in _between(a2, ell, k)]
    vals = []
    for v in between:
        neg_f_from_l = -fstat_v(path, s2, Subpath(vl, v, include_start=False))
        f_to_k = fstat_v(path, s2, Subpath(v, vk, include_start=False))
        if not (neg_f_from_l > 0 and f_to_k > 0):
            raise CriterionFails(
                f"criterion fails at {v} for (k={k}, ell={ell})")
        vals.append(min(neg_f_from_l, f_to_k))
    if not vals:
        raise CriterionFails(f"no vertical edges strictly between (k={k}, ell={ell})")
    return min(vals)


# -- enumeration --------------------------------------------------------------

def enumerate_bruteforce(a1: int, a2: int, d1: int, d2: int) -> list:
    """All compatible pairs, ordered lexicographically by (S2, S1)."""
    path = DyckPath.build(a1, a2)
    s2_list = list(product(range(d2 + 1), repeat=a2))
    fz2 = {s2: [_first_zero_backward(path, s2, k) for k in range(1, a2 + 1)]
           for s2 in s2_list}
    hs = range(1, a1 + 1)
    vs = range(1, a2 + 1)
    out = []
    for s1 in product(range(d1 + 1), repeat=a1):
        fz1 = [_first_zero_forward(path, s1, j) for j in hs]
        for s2 in s2_list:
            if _pairs_ok(path, fz1, fz2[s2], hs, vs):
                out.append((s1, s2))
    out.sort(key=lambda pair: (pair[1], pair[0]))
    return out


def compatible_structure(path: DyckPath, s2: Grading, d1: int):
    """Structure of {S1 : (S1, S2) compatible} for one vertical grading.

    Returns (free, rsh, valid) where free is the list of horizontal indices
    outside the shadow of S2 (their values are unconstrained), rsh the sorted
    indices of the remote shadow, and valid the list of value assignments on
    rsh that complete to a compatible pair.  Edges in shadow minus remote
    shadow are forced to zero.
    """
    report = shadow_report_v(path, s2)
    shadow_idx = {e.index for e in report.shadow}
    rsh_idx = sorted(e.index for e in report.remote_shadow)
    free = [j for j in range(1, path.a1 + 1) if j not in shadow_idx]
    supp = [k for k in range(1, path.a2 + 1) if s2[k - 1] > 0]
    fz2 = [_first_zero_backward(path, s2, k) for k in range(1, path.a2 + 1)]
    valid = []
    base = [0] * path.a1
    for vals in product(range(d1 + 1), repeat=len(rsh_idx)):
        for j, val in zip(rsh_idx, vals):
            base[j - 1] = val
        s1 = tuple(base)
        fz1 = {j: _first_zero_forward(path, s1, j) for j in rsh_idx}
        ok = True
        n = path.n
        for j in rsh_idx:
            zh = fz1[j]
            ph = path.pos_h[j - 1]
            for k in supp:
                dist = (path.pos_v[k - 1] - ph) % n
                zv = fz2[k - 1]
                if (zh is None or zh >= dist) and (zv is None or zv >= dist):
                    ok = False
                    break
            if not ok:
                break
        if ok:
            valid.append(vals)
        for j in rsh_idx:
            base[j - 1] = 0
    return free, rsh_idx, valid


def compatible_structure_h(path: DyckPath, s1: Grading, d2: int):
    """Mirror of compatible_structure: {S2 : (S1, S2) compatible} for one S1.

    Returns (free, rsh, valid) over vertical edge indices; edges in the
    shadow of S1 minus its remote shadow are forced to zero.
    """
    report = shadow_report_h(path, s1)
    shadow_idx = {e.index for e in report.shadow}
    rsh_idx = sorted(e.index for e in report.remote_shadow)
    free = [k for k in range(1, path.a2 + 1) if k not in shadow_idx]
    supp = [j for j in range(1, path.a1 + 1) if s1[j - 1] > 0]
    fz1 = [_first_zero_forward(path, s1, j) for j in range(1, path.a1 + 1)]
    valid = []
    base = [0] * path.a2
    n = path.n
    for vals in product(range(d2 + 1), repeat=len(rsh_idx)):
        for k, val in zip(rsh_idx, vals):
            base[k - 1] = val
        s2 = tuple(base)
        fz2 = {k: _first_zero_backward(path, s2, k) for k in rsh_idx}
        ok = True
        for k in rsh_idx:
            zv = fz2[k]
            pv = path.pos_v[k - 1]
            for j in supp:
                dist = (pv - path.pos_h[j - 1]) % n
                zh = fz1[j - 1]
                if (zh is None or zh >= dist) and (zv is None or zv >= dist):
                    ok = False
                    break
            if not ok:
                break
        if ok:
            valid.append(vals)
        for k in rsh_idx:
            base[k - 1] = 0
    return free, rsh_idx, valid


def enumerate_fast(a1: int, a2: int, d1: int, d2: int) -> list:
    """Same pairs as enumerate_bruteforce, via the shadow pruning."""
    path = DyckPath.build(a1, a2)
    out = []
    for s2 in product(range(d2 + 1), repeat=a2):
        free, rsh_idx, valid = compatible_structure(path, s2, d1)
        block = []
        base = [0] * a1
        for vals in valid:
            for j, val in zip(rsh_idx, vals):
                base[j - 1] = val
            for fvals in product(range(d1 + 1), repeat=len(free)):
                for j, val in zip(free, fvals):
                    base[j - 1] = val
                block.append(tuple(base))
            for j in free:
                base[j - 1] = 0
            for j in rsh_idx:
                base[j - 1] = 0
        block.sort()
        out.extend((s1, s2) for s1 in block)
    return out


def pair_record(s1: Grading, s2: Grading) -> dict:
    """JSON record for one compatible pair."""
    return {"s1": list(s1), "s2": list(s2), "m1": sum(s1), "m2": sum(s2)}


# -- reflection of vertical gradings and the induced horizontal map -----------

def phi_pullback(path: DyckPath, s2: Grading, r: int) -> tuple[DyckPath, Grading]:
    """Complemented grading r - S2 read backwards, on the reflected path."""
    a1, a2 = path.a1, path.a2
    if a2 < 1:
        raise ValueError("phi_pullback needs at least one vertical edge")
    need = max(max(s2, default=0), -(-a1 // a2))
    if r < need:
        raise RTooSmall(f"r={r} below required {need}")
    new_path = DyckPath.build(r * a2 - a1, a2)
    new_s2 = tuple(r - s2[a2 - j] for j in range(1, a2 + 1))
    return new_path, new_s2


def omega(path: DyckPath, s1: Grading, s2: Grading, r: int) -> tuple[DyckPath, Grading]:
    """Transport S1 through the order-preserving block bijections.

    Requires supp(S1) inside rsh(S2); accepts compatible and incompatible
    gradings alike so the compatibility equivalence can be probed.
    """
    a2 = path.a2
    report = shadow_report_v(path, s2)
    rsh_idx = {e.index for e in report.remote_shadow}
    for j in range(1, path.a1 + 1):
        if s1[j - 1] > 0 and j not in rsh_idx:
            raise NotInRemoteSupport(f"h_{j} carries weight outside rsh(S2)")
    new_path, new_s2 = phi_pullback(path, s2, r)
    new_report = shadow_report_v(new_path, new_s2)
    new_s1 = [0] * new_path.a1
    for (k, ell), edges in report.rsh_partition.items():
        target = new_report.rsh_partition.get((a2 - ell, a2 - k), ())
        if len(target) != len(edges):
            raise AssertionError(
                f"block size mismatch at (k={k}, ell={ell}): "
                f"{len(edges)} vs {len(target)}")
        for h, h2 in zip(edges, target):
            new_s1[h2.index - 1] = s1[h.index - 1]
    return new_path, tuple(new_s1)


# -- magnitude support region --------------------------------------------------

def support_region(d1: int, d2: int, a1: int, a2: int, m1: int, m2: int) -> bool:
    """Can (|S1|, |S2|) = (m1, m2) occur for a compatible pair on D(a1,a2)?

    Trapezoid cases include their boundaries; in the remaining case the two
    slanted boundary segments are excluded except for their axis endpoints.
    """
    if a1 < 0 or a2 < 0:
        raise ValueError("path dimensions must be nonnegative")
    if m1 < 0 or m2 < 0:
        return False
    if d2 * a2 <= a1:
        return m2 <= d2 * a2 and m1 + d1 * m2 <= d1 * a1
    if d1 * a1 <= a2:
        return m1 <= d1 * a1 and m2 + d2 * m1 <= d2 * a2
    # 0 < a1 < d2*a2 and 0 < a2 < d1*a1
    if m2 == 0:
        return m1 <= d1 * a1
    if m1 == 0:
        return m2 <= d2 * a2
    if a1 * m1 >= a2 * m2:
        return a1 * m1 + (d1 * a1 - a2) * m2 < d1 * a1 * a1
    return a2 * m2 + (d2 * a2 - a1) * m1 < d2 * a2 * a2


# -- wrap-convention diagnostic -------------------------------------------------

def _is_compatible_nowrap(path: DyckPath, s1: Grading, s2: Grading) -> bool:
    """Variant predicate that skips (h, v) pairs whose path hv wraps."""
    if path.a1 == 0 or path.a2 == 0:
        return True
    fz1 = [_first_zero_forward(path, s1, j) for j in range(1, path.a1 + 1)]
    fz2 = [_first_zero_backward(path, s2, k) for k in range(1, path.a2 + 1)]
    for j in range(1, path.a1 + 1):
        ph = path.pos_h[j - 1]
        for k in range(1, path.a2 + 1):
            pv = path.pos_v[k - 1]
            if pv < ph:
                continue  # hv would wrap; vacuous under this reading
            dist = pv - ph
            zh, zv = fz1[j - 1], fz2[k - 1]
            if (zh is None or zh >= dist) and (zv is None or zv >= dist):
                return False
    return True


def wrap_convention_report(a1: int, a2: int, d1: int, d2: int) -> list:
    """Gradings whose compatibility differs with and without wrapping.

    Diagnostic only: the torus convention is the one used everywhere else.
    """
    path = DyckPath.build(a1, a2)
    diffs = []
    for s1 in product(range(d1 + 1), repeat=a1):
        for s2 in product(range(d2 + 1), repeat=a2):
            a = is_compatible(path, s1, s2)
            b = _is_compatible_nowrap(path, s1, s2)
            if a != b:
                diffs.append((s1, s2, a, b))
    return diffs
