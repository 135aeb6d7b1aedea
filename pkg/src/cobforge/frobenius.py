"""Nonnegative-coefficient representations over integer bases with gcd 1.

For an all-positive basis the classical Frobenius number is computed exactly
by the Apery-set method: a shortest-path computation over residues modulo
the smallest basis element.  For a mixed-sign basis (first element positive,
gcd of absolute values 1) every integer is representable; the solver first
finds nonnegative coefficients over the absolute values, lifting the target
by a negative basis element when needed, and then trades coefficients
against the first element to fix the signs.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass

from .arith import gcd_list


@dataclass(frozen=True)
class Representation:
    """target == sum(coefficients[i] * basis[i]) with all coefficients >= 0."""

    target: int
    basis: tuple[int, ...]
    coefficients: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.basis) != len(self.coefficients):
            raise ValueError("coefficient count must match basis length")
        if any(c < 0 for c in self.coefficients):
            raise ValueError("coefficients must be nonnegative")
        total = sum(c * t for c, t in zip(self.coefficients, self.basis))
        if total != self.target:
            raise ValueError(f"sum identity violated: {total} != {self.target}")


def _apery_distances(values: tuple[int, ...]) -> tuple[int, list, list]:
    """Shortest representable value in each residue class mod min(values).

    Returns (index of the modulus element, distances, predecessor links);
    ``pred[r]`` is (previous residue, basis index) along a shortest path.
    Residues unreachable from 0 keep distance None.
    """
    m = min(values)
    m_idx = values.index(m)
    dist: list[int | None] = [None] * m
    pred: list[tuple[int, int] | None] = [None] * m
    dist[0] = 0
    heap = [(0, 0)]
    while heap:
        d, r = heapq.heappop(heap)
        if d > dist[r]:
            continue
        for idx, t in enumerate(values):
            nr = (r + t) % m
            nd = d + t
            if dist[nr] is None or nd < dist[nr]:
                dist[nr] = nd
                pred[nr] = (r, idx)
                heapq.heappush(heap, (nd, nr))
    return m_idx, dist, pred


def frobenius_bound(basis) -> int:
    """Exact threshold N such that every integer > N is representable.

    For gcd-1 positive bases this is the Frobenius number, max over residues
    of (smallest representable value in the class) - modulus, clamped at 0
    so the bound is usable verbatim for strictly positive targets.
    """
    vals = tuple(int(t) for t in basis)
    if not vals:
        raise ValueError("basis must be nonempty")
    if any(t <= 0 for t in vals):
        raise ValueError("basis entries must be positive")
    if gcd_list(vals) != 1:
        raise ValueError("basis gcd must be 1")
    _, dist, _ = _apery_distances(vals)
    m = min(vals)
    return max(max(d for d in dist) - m, 0)


def represent(x: int, basis) -> Representation:
    """Write x as a nonnegative integer combination of the basis entries.

    The basis must have a positive first element and absolute values with
    gcd 1.  All-positive bases are decided exactly (unrepresentable targets
    raise).  With a negative entry present, x is always representable: if
    the absolute-value solver fails on x directly, the target is lifted by
    multiples of the first negative entry until it succeeds, and the lift is
    charged to that entry's coefficient.  Absolute-value coefficients that
    land on negative entries are then made valid by trading k copies of the
    entry against k times its magnitude on the first basis element, with k
    minimal.  Deterministic for fixed input.
    """
    vals = tuple(int(t) for t in basis)
    if not vals:
        raise ValueError("basis must be nonempty")
    if vals[0] <= 0:
        raise ValueError("first basis entry must be positive")
    abs_vals = tuple(abs(t) for t in vals)
    if gcd_list(abs_vals) != 1:
        raise ValueError("basis gcd must be 1")

    active = tuple(i for i, t in enumerate(vals) if t != 0)
    solve_vals = tuple(abs_vals[i] for i in active)
    m_pos, dist, pred = _apery_distances(solve_vals)
    m = solve_vals[m_pos]

    def abs_coeffs_for(y: int) -> list[int] | None:
        if y < 0:
            return None
        r0 = y % m
        if dist[r0] is None or dist[r0] > y:
            return None
        coeffs = [0] * len(vals)
        r = r0
        while r != 0:
            prev, idx = pred[r]
            coeffs[active[idx]] += 1
            r = prev
        coeffs[active[m_pos]] += (y - dist[r0]) // m
        return coeffs

    coeffs = abs_coeffs_for(x)
    negatives = [i for i, t in enumerate(vals) if t < 0]
    if coeffs is None:
        if not negatives:
            raise ValueError(f"{x} is not representable over {vals}")
        j = negatives[0]
        step = abs_vals[j]
        shift = 0
        y = x
        while coeffs is None:
            shift += 1
            y += step
            coeffs = abs_coeffs_for(y)
        coeffs[j] -= shift

    for i in negatives:
        a_i = coeffs[i]
        if a_i > 0:
            k = -(-a_i // vals[0])
            coeffs[0] += k * abs_vals[i]
            coeffs[i] = -a_i + k * vals[0]
        else:
            coeffs[i] = -a_i
    return Representation(target=x, basis=vals, coefficients=tuple(coeffs))
