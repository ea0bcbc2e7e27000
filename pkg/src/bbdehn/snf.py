"""Integer Smith normal form on sparse matrices.

Rows are ``dict[col, int]``. Arithmetic uses Python integers throughout, so
intermediate growth cannot overflow.
"""

from __future__ import annotations

from math import gcd
from typing import Iterable, Mapping


def _normalize(diag: list[int]) -> list[int]:
    """Turn a diagonal into invariant factors d1 | d2 | ... ."""
    d = sorted(abs(x) for x in diag if x)
    changed = True
    while changed:
        changed = False
        for i in range(len(d)):
            for j in range(i + 1, len(d)):
                a, b = d[i], d[j]
                if b % a:
                    g = gcd(a, b)
                    d[i], d[j] = g, a // g * b
                    changed = True
        d.sort()
    return d


def invariant_factors(rows: Iterable[Mapping[int, int]]) -> list[int]:
    """Nonzero invariant factors of the matrix, ascending with divisibility."""
    mat: dict[int, dict[int, int]] = {}
    cols: dict[int, set[int]] = {}
    for r, row in enumerate(rows):
        clean = {c: v for c, v in row.items() if v}
        if clean:
            mat[r] = clean
            for c in clean:
                cols.setdefault(c, set()).add(r)

    def drop(r, c):
        del mat[r][c]
        cols[c].discard(r)
        if not cols[c]:
            del cols[c]

    def axpy(dst, src, q):
        # row[dst] -= q * row[src]
        rd = mat[dst]
        for c, v in mat[src].items():
            nv = rd.get(c, 0) - q * v
            if nv:
                if c not in rd:
                    cols.setdefault(c, set()).add(dst)
                rd[c] = nv
            elif c in rd:
                drop(dst, c)

    diag = []
    while mat:
        # smallest pivot, ties to lowest (row, col) for determinism
        pr, pc, pv = None, None, None
        for r, row in mat.items():
            for c, v in row.items():
                if pv is None or abs(v) < abs(pv) or (abs(v) == abs(pv) and (r, c) < (pr, pc)):
                    pr, pc, pv = r, c, v
                    if abs(v) == 1:
                        break
            if pv is not None and abs(pv) == 1:
                break
        clean = True
        for r in sorted(cols[pc] - {pr}):
            q = mat[r][pc] // pv
            axpy(r, pr, q)
            if pc in mat[r]:
                clean = False
        if clean:
            row = mat[pr]
            for c in sorted(set(row) - {pc}):
                q = row[c] // pv
                # column op col[c] -= q * col[pc]; col[pc] is zero outside pr
                nv = row[c] - q * pv
                if nv:
                    row[c] = nv
                    clean = False
                else:
                    drop(pr, c)
        if clean:
            diag.append(pv)
            drop(pr, pc)
            del mat[pr]
        for r in [r for r, row in mat.items() if not row]:
            del mat[r]
    return _normalize(diag)


def rank_and_torsion(rows: Iterable[Mapping[int, int]]) -> tuple[int, list[int]]:
    factors = invariant_factors(rows)
    return len(factors), [d for d in factors if d > 1]


def dense_to_rows(matrix) -> list[dict[int, int]]:
    return [{j: int(v) for j, v in enumerate(row) if v} for row in matrix]
