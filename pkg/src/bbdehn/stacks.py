"""Corridor and stack area arithmetic for suspensions of paths.

A stack of height ``h`` has boundary words ``t_0, ..., t_h``; the worst-case
profile assumes every vertex on ``t_0`` and both end vertices of each ``t_i``
have the maximal type ``k``, with all leg arrows pointing away from ``t_0``.
All values are exact Python integers.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Mapping, Sequence

import numpy as np

AREA_CONSTANT = 92


@dataclass(frozen=True)
class StackParams:
    k: int
    l: int
    h: int

    def __post_init__(self):
        if self.k < 3:
            raise ValueError("maximal vertex type k must be at least 3")
        if self.l < 0 or self.h < 0:
            raise ValueError("top length and height must be non-negative")


def corridor_area(ti: int, ti1: int) -> int:
    """Triangles in one corridor: one per edge on its top and bottom words."""
    if ti < 0 or ti1 < 0:
        raise ValueError("lengths must be non-negative")
    return ti + ti1


def next_length_from_types(type_counts: Mapping[int, int]) -> int:
    """Length of the next word when the current one has ``count`` vertices of each type ``j``."""
    if any(c < 0 for c in type_counts.values()):
        raise ValueError("counts must be non-negative")
    return sum(j * c for j, c in type_counts.items())


def length_gap(p: StackParams, i: int) -> int:
    """``|t_{i+1}| - |t_{i-1}|`` in the worst case, valid for ``i >= 2``."""
    k, l = p.k, p.l
    return 2 * k * l + 2 * l + 4 * i * k - 4 * i + 2


def worst_case_stack_profile(p: StackParams) -> tuple[int, ...]:
    k, l, h = p.k, p.l, p.h
    t = [l]
    if h >= 1:
        t.append(k * (l + 1))
    if h >= 2:
        t.append(2 * k * l + l + 4 * k - 2)
    for i in range(2, h):
        t.append(t[i - 1] + length_gap(p, i))
    return tuple(t)


def closed_form_length(p: StackParams, i: int) -> int:
    """``|t_{i+1}|`` summed in closed form over every other gap."""
    if not 2 <= i <= p.h - 1:
        raise IndexError(f"index {i} outside 2..{p.h - 1}")
    k, l = p.k, p.l
    if i % 2 == 0:
        return k * (l + 1) + (i // 2) * length_gap(p, 2) + i * (i - 2) * (k - 1)
    t2 = 2 * k * l + l + 4 * k - 2
    return t2 + ((i - 1) // 2) * length_gap(p, 3) + (i - 1) * (i - 3) * (k - 1)


def stack_area(profile: Sequence[int]) -> int:
    """Sum of corridor areas: inner words are shared by two corridors."""
    if not profile:
        raise ValueError("empty profile")
    if len(profile) == 1:
        return profile[0]
    return profile[0] + profile[-1] + 2 * sum(profile[1:-1])


def cubic_bound(p: StackParams) -> int:
    return AREA_CONSTANT * p.k * (p.h ** 3 + p.l * p.h ** 2)


def verify_cubic_bound(p: StackParams) -> tuple[int, int, bool]:
    area = stack_area(worst_case_stack_profile(p))
    bound = cubic_bound(p)
    return area, bound, area <= bound


def lower_bound_area(c: int, r: int) -> int:
    """Apex term plus ``4i`` vertices at each height ``i`` pushed a distance ``c(r-i)+c``."""
    if r < 1 or c < 0:
        raise ValueError("need r >= 1 and c >= 0")
    return (c * r + c) + sum(4 * i * (c * (r - i) + c) for i in range(1, r))


def growth_exponent(samples: Sequence[tuple[float, float]]) -> float:
    """Least-squares slope of log(value) against log(n) over the upper half of the samples."""
    if len(samples) < 4:
        raise ValueError("need at least 4 samples")
    ns = [s[0] for s in samples]
    if any(b <= a for a, b in zip(ns, ns[1:])):
        raise ValueError("sample points must be strictly increasing")
    if any(n <= 0 or v <= 0 for n, v in samples):
        raise ValueError("samples must be positive")
    top = samples[len(samples) // 2:]
    x = np.log([float(n) for n, _ in top])
    y = np.array([math.log(v) for _, v in top])
    slope, _ = np.polyfit(x, y, 1)
    return float(slope)


SWEEP_K = range(3, 7)
SWEEP_L = range(0, 51)
SWEEP_H = range(1, 201)


def sweep(ks=SWEEP_K, ls=SWEEP_L, hs=SWEEP_H):
    """Rows ``(k, l, h, area, bound, ok)`` over a grid, one profile per ``(k, l)``."""
    hs = list(hs)
    hmax = max(hs)
    for k in ks:
        for l in ls:
            prof = worst_case_stack_profile(StackParams(k, l, hmax))
            for h in hs:
                p = StackParams(k, l, h)
                area = stack_area(prof[:h + 1])
                bound = cubic_bound(p)
                yield k, l, h, area, bound, area <= bound
